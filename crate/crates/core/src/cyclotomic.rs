//! Exact arithmetic in the universal cyclotomic field.
//!
//! An element of `Q(ζ_N)` is stored as a vector of integer numerators over a
//! common positive denominator, in the power basis `1, ζ_N, …, ζ_N^{φ(N)-1}`
//! (i.e. reduced modulo the cyclotomic polynomial `Φ_N`). The conductor is
//! always the smallest `N` whose field contains the element, and `N` is never
//! `2 mod 4`. With that normalisation equal numbers have identical fields, so
//! `Eq` and `Hash` are structural.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg;

pub type Rational = BigRational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    conductor: u32,
    num: Vec<BigInt>,
    den: BigInt,
}

// ---------------------------------------------------------------------------
// number-theoretic helpers

pub fn totient(n: u32) -> u32 {
    prime_factors(n)
        .into_iter()
        .fold(n, |acc, p| acc / p * (p - 1))
}

pub fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn mobius(n: u32) -> i32 {
    let mut m = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

fn compute_cyclotomic_poly(n: u32) -> Vec<i64> {
    if n == 1 {
        return vec![-1, 1];
    }
    // Φ_n(x) = Π_{d|n} (1 - x^d)^{μ(n/d)} as a power series truncated at φ(n).
    let deg = totient(n) as usize;
    let mut a = vec![0i64; deg + 1];
    a[0] = 1;
    for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
        let d_us = d as usize;
        match mobius(n / d) {
            1 => {
                for k in (d_us..=deg).rev() {
                    a[k] -= a[k - d_us];
                }
            }
            -1 => {
                for k in d_us..=deg {
                    a[k] += a[k - d_us];
                }
            }
            _ => {}
        }
    }
    debug_assert_eq!(a[deg], 1);
    a
}

const POLY_CACHE_SIZE: usize = 1024;
static POLY_CACHE: [OnceLock<Vec<i64>>; POLY_CACHE_SIZE] =
    [const { OnceLock::new() }; POLY_CACHE_SIZE];

/// Runs `f` on the coefficient list (low degree first) of `Φ_n`.
fn with_cyclotomic_poly<T>(n: u32, f: impl FnOnce(&[i64]) -> T) -> T {
    if (n as usize) < POLY_CACHE_SIZE {
        f(POLY_CACHE[n as usize].get_or_init(|| compute_cyclotomic_poly(n)))
    } else {
        f(&compute_cyclotomic_poly(n))
    }
}

/// Reduces a dense polynomial modulo `Φ_n`, returning exactly `φ(n)` coefficients.
fn reduce_mod_phi(n: u32, mut a: Vec<BigInt>) -> Vec<BigInt> {
    with_cyclotomic_poly(n, |phi| {
        let deg = phi.len() - 1;
        for k in (deg..a.len()).rev() {
            if a[k].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut a[k]);
            for (i, &pc) in phi[..deg].iter().enumerate() {
                if pc != 0 {
                    a[k - deg + i] -= &c * pc;
                }
            }
        }
        a.resize(deg, BigInt::zero());
        a
    })
}

fn mod_inverse(a: u32, m: u32) -> u32 {
    let e = (a as i64).extended_gcd(&(m as i64));
    assert_eq!(e.gcd, 1, "{a} is not invertible mod {m}");
    e.x.rem_euclid(m as i64) as u32
}

// ---------------------------------------------------------------------------
// construction and normalisation

impl Cyclotomic {
    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_bigint(BigInt::from(v))
    }

    pub fn from_bigint(v: BigInt) -> Self {
        Cyclotomic {
            conductor: 1,
            num: vec![v],
            den: BigInt::one(),
        }
    }

    pub fn from_rational(q: &Rational) -> Self {
        Cyclotomic {
            conductor: 1,
            num: vec![q.numer().clone()],
            den: q.denom().clone(),
        }
    }

    /// `ζ_order^exp`, where `ζ_n = exp(2πi/n)`.
    pub fn root_of_unity(order: u32, exp: i64) -> Self {
        assert!(order > 0, "root of unity of order 0");
        let e = exp.rem_euclid(order as i64) as u32;
        let g = e.gcd(&order);
        let (n, e) = (order / g, e / g);
        let mut v = vec![BigInt::zero(); n as usize];
        v[e as usize] = BigInt::one();
        Self::from_dense(n, v, BigInt::one())
    }

    /// `ζ_n` itself.
    pub fn zeta(n: u32) -> Self {
        Self::root_of_unity(n, 1)
    }

    /// `√2 = ζ_8 + ζ_8^{-1}`.
    pub fn sqrt2() -> Self {
        &Self::root_of_unity(8, 1) + &Self::root_of_unity(8, -1)
    }

    /// `i = ζ_4`.
    pub fn imaginary_unit() -> Self {
        Self::root_of_unity(4, 1)
    }

    /// `√-7` as the quadratic Gauss sum `Σ_k (k/7) ζ_7^k`, which has positive
    /// imaginary part.
    pub fn sqrt_minus7() -> Self {
        let mut acc = Self::zero();
        for k in 1..7i64 {
            let sign = if [1, 2, 4].contains(&k) { 1 } else { -1 };
            acc = &acc + &(&Self::root_of_unity(7, k) * &Self::from_int(sign));
        }
        acc
    }

    /// Builds an element from a dense list of coefficients of `ζ_n^k`
    /// (any length; exponents are taken modulo `n`) over `den`.
    pub fn from_dense(n: u32, coeffs: Vec<BigInt>, den: BigInt) -> Self {
        assert!(n > 0);
        assert!(!den.is_zero(), "zero denominator");
        let mut folded = vec![BigInt::zero(); n as usize];
        for (k, c) in coeffs.into_iter().enumerate() {
            if !c.is_zero() {
                folded[k % n as usize] += c;
            }
        }
        let num = reduce_mod_phi(n, folded);
        Self::canonical(n, num, den)
    }

    /// Sparse constructor: `Σ c_k ζ_n^k`.
    pub fn from_terms<I>(n: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        let terms: Vec<(i64, Rational)> = terms.into_iter().collect();
        let den = terms
            .iter()
            .fold(BigInt::one(), |acc, (_, q)| acc.lcm(q.denom()));
        let mut dense = vec![BigInt::zero(); n as usize];
        for (k, q) in terms {
            let idx = k.rem_euclid(n as i64) as usize;
            dense[idx] += q.numer() * (&den / q.denom());
        }
        Self::from_dense(n, dense, den)
    }

    fn canonical(n: u32, num: Vec<BigInt>, den: BigInt) -> Self {
        let mut x = Cyclotomic {
            conductor: n,
            num,
            den,
        };
        x.normalize_content();
        if x.conductor % 4 == 2 {
            x = x.halve_conductor();
        }
        x.descend();
        x
    }

    fn normalize_content(&mut self) {
        if self.den.is_negative() {
            self.den = -&self.den;
            for c in &mut self.num {
                *c = -&*c;
            }
        }
        if self.num.iter().all(Zero::is_zero) {
            self.conductor = 1;
            self.num = vec![BigInt::zero()];
            self.den = BigInt::one();
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if !g.is_one() {
            for c in &mut self.num {
                *c = &*c / &g;
            }
            self.den = &self.den / &g;
        }
    }

    /// For `n = 2m` with `m` odd: rewrite over `ζ_m` using `ζ_n = -ζ_m^{(m+1)/2}`.
    fn halve_conductor(self) -> Self {
        let m = self.conductor / 2;
        let shift = m.div_ceil(2) as u64;
        let mut dense = vec![BigInt::zero(); m as usize];
        for (i, c) in self.num.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let idx = ((i as u64 * shift) % m as u64) as usize;
            if i % 2 == 0 {
                dense[idx] += c;
            } else {
                dense[idx] -= c;
            }
        }
        let num = reduce_mod_phi(m, dense);
        let mut x = Cyclotomic {
            conductor: m,
            num,
            den: self.den,
        };
        x.normalize_content();
        x
    }

    /// Lowers the conductor until the element generates no smaller field.
    fn descend(&mut self) {
        'outer: loop {
            if self.conductor == 1 {
                return;
            }
            if self.num[1..].iter().all(Zero::is_zero) {
                self.num.truncate(1);
                self.conductor = 1;
                return;
            }
            let n = self.conductor;
            for p in prime_factors(n) {
                let m = n / p;
                if m.is_multiple_of(p) {
                    // Φ_n(x) = Φ_m(x^p): membership in Q(ζ_m) means only
                    // exponents divisible by p occur.
                    if self
                        .num
                        .iter()
                        .enumerate()
                        .any(|(j, c)| j % p as usize != 0 && !c.is_zero())
                    {
                        continue;
                    }
                    let num: Vec<BigInt> = self.num.iter().step_by(p as usize).cloned().collect();
                    let mut x = Cyclotomic {
                        conductor: m,
                        num,
                        den: std::mem::take(&mut self.den),
                    };
                    if m % 4 == 2 {
                        x = x.halve_conductor();
                    }
                    *self = x;
                    continue 'outer;
                }
                // p exactly divides n (and p is odd). Project onto Q(ζ_m)
                // with the normalised relative trace and test for equality.
                if let Some(y) = self.relative_trace_projection(p) {
                    *self = y;
                    continue 'outer;
                }
            }
            return;
        }
    }

    fn relative_trace_projection(&self, p: u32) -> Option<Self> {
        let n = self.conductor;
        let m = n / p;
        let m_inv = mod_inverse(m % p, p);
        let p_inv = if m == 1 { 0 } else { mod_inverse(p % m, m) };
        let mut dense = vec![BigInt::zero(); m as usize];
        let pm1 = BigInt::from(p - 1);
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let j = j as u64;
            let a = (j * m_inv as u64) % p as u64;
            let b = if m == 1 {
                0
            } else {
                ((j * p_inv as u64) % m as u64) as usize
            };
            if a == 0 {
                dense[b] += c * &pm1;
            } else {
                dense[b] -= c;
            }
        }
        let num = reduce_mod_phi(m, dense);
        let mut y = Cyclotomic {
            conductor: m,
            num,
            den: &self.den * &pm1,
        };
        y.normalize_content();
        if y.embed_numerators(n).as_deref() == Some(&self.num[..]) && y.den == self.den {
            Some(y)
        } else {
            None
        }
    }

    /// Numerators of `self` written in the power basis of `Q(ζ_n)`; `None`
    /// if the conductor does not divide `n`.
    fn embed_numerators(&self, n: u32) -> Option<Vec<BigInt>> {
        if !n.is_multiple_of(self.conductor) {
            return None;
        }
        if n == self.conductor {
            return Some(self.num.clone());
        }
        let step = (n / self.conductor) as usize;
        let mut dense = vec![BigInt::zero(); n as usize];
        for (j, c) in self.num.iter().enumerate() {
            dense[j * step] = c.clone();
        }
        Some(reduce_mod_phi(n, dense))
    }

    /// Coordinates of `self` in the power basis of `Q(ζ_n)`, for a multiple
    /// `n` of the conductor. Used to key elements of a common field.
    pub fn coordinates_in(&self, n: u32) -> Option<Vec<Rational>> {
        self.embed_numerators(n).map(|v| {
            v.into_iter()
                .map(|c| Rational::new(c, self.den.clone()))
                .collect()
        })
    }

    // -----------------------------------------------------------------------
    // accessors

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn is_zero(&self) -> bool {
        self.conductor == 1 && self.num[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.conductor == 1 && self.num[0].is_one() && self.den.is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn to_rational(&self) -> Result<Rational> {
        if self.conductor == 1 {
            Ok(Rational::new(self.num[0].clone(), self.den.clone()))
        } else {
            Err(Error::NotRational(self.to_string()))
        }
    }

    /// Nonzero coefficients `(k, c_k)` of the canonical representation
    /// `Σ c_k ζ_N^k`, `N` the conductor.
    pub fn terms(&self) -> impl Iterator<Item = (u32, Rational)> + '_ {
        self.num
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k as u32, Rational::new(c.clone(), self.den.clone())))
    }

    // -----------------------------------------------------------------------
    // arithmetic

    fn common_field(&self, other: &Self) -> (u32, Vec<BigInt>, Vec<BigInt>) {
        let n = self.conductor.lcm(&other.conductor);
        (
            n,
            self.embed_numerators(n).unwrap(),
            other.embed_numerators(n).unwrap(),
        )
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { -other } else { other.clone() };
        }
        let (n, a, b) = self.common_field(other);
        let num: Vec<BigInt> = a
            .iter()
            .zip(&b)
            .map(|(x, y)| {
                let l = x * &other.den;
                let r = y * &self.den;
                if negate {
                    l - r
                } else {
                    l + r
                }
            })
            .collect();
        Self::canonical(n, num, &self.den * &other.den)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.conductor == 1 {
            return other.scale_num(&self.num[0], &self.den);
        }
        if other.conductor == 1 {
            return self.scale_num(&other.num[0], &other.den);
        }
        let (n, a, b) = self.common_field(other);
        let mut prod = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        let num = reduce_mod_phi(n, prod);
        Self::canonical(n, num, &self.den * &other.den)
    }

    fn scale_num(&self, numer: &BigInt, denom: &BigInt) -> Self {
        let mut x = Cyclotomic {
            conductor: self.conductor,
            num: self.num.iter().map(|c| c * numer).collect(),
            den: &self.den * denom,
        };
        x.normalize_content();
        x
    }

    pub fn scale(&self, q: &Rational) -> Self {
        self.scale_num(q.numer(), q.denom())
    }

    /// The Galois automorphism `ζ ↦ ζ^k` (`k` coprime to the conductor).
    pub fn galois(&self, k: i64) -> Self {
        let n = self.conductor;
        let kk = k.rem_euclid(n as i64) as u64;
        assert_eq!(
            (kk as u32).gcd(&n),
            1,
            "galois exponent {k} not coprime to conductor {n}"
        );
        let mut dense = vec![BigInt::zero(); n as usize];
        for (j, c) in self.num.iter().enumerate() {
            if !c.is_zero() {
                dense[((j as u64 * kk) % n as u64) as usize] += c;
            }
        }
        Self::from_dense(n, dense, self.den.clone())
    }

    /// Complex conjugation `ζ ↦ ζ^{-1}`.
    pub fn conjugate(&self) -> Self {
        if self.conductor == 1 {
            return self.clone();
        }
        self.galois(-1)
    }

    /// Multiplicative inverse, found by solving `self · x = 1` in the power
    /// basis of the conductor field.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.conductor == 1 {
            return Ok(Cyclotomic {
                conductor: 1,
                num: vec![self.den.clone()],
                den: self.num[0].clone(),
            }
            .normalized());
        }
        let n = self.conductor;
        let d = self.num.len();
        // column j holds the coordinates of self · ζ^j
        let mut matrix = vec![vec![Rational::zero(); d]; d];
        for j in 0..d {
            let mut dense = vec![BigInt::zero(); d + j];
            for (i, c) in self.num.iter().enumerate() {
                dense[i + j] = c.clone();
            }
            let col = reduce_mod_phi(n, dense);
            for (i, c) in col.into_iter().enumerate() {
                matrix[i][j] = Rational::new(c, self.den.clone());
            }
        }
        let mut rhs = vec![Rational::zero(); d];
        rhs[0] = Rational::one();
        let sol = linalg::solve(&matrix, &rhs).ok_or(Error::DivisionByZero)?;
        Ok(Self::from_terms(
            n,
            sol.into_iter().enumerate().map(|(k, q)| (k as i64, q)),
        ))
    }

    fn normalized(mut self) -> Self {
        self.normalize_content();
        self
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inverse()?)
    }

    /// Integer power; negative exponents invert.
    pub fn powi(&self, k: i64) -> Result<Self> {
        if k < 0 {
            Ok(crate::ring::Ring::pow(
                &self.inverse()?,
                k.unsigned_abs() as u32,
            ))
        } else {
            Ok(crate::ring::Ring::pow(self, k as u32))
        }
    }
}

impl Default for Cyclotomic {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Cyclotomic {
    fn from(v: i64) -> Self {
        Self::from_int(v)
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.add_impl(rhs, false)
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.add_impl(rhs, true)
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.mul_impl(rhs)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        &self + &rhs
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        &self - &rhs
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        &self * &rhs
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl crate::ring::Ring for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::zero()
    }
    fn one() -> Self {
        Cyclotomic::one()
    }
    fn from_i64(v: i64) -> Self {
        Cyclotomic::from_int(v)
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn div_int(&self, d: i64) -> Self {
        assert!(d != 0, "division by zero");
        self.scale_num(&<BigInt as One>::one(), &BigInt::from(d))
    }
}

impl fmt::Display for Cyclotomic {
    /// GAP-like notation, e.g. `1/2 + 3*E(8)^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, q) in self.terms() {
            let neg = q.is_negative();
            let abs = q.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let unit = match k {
                0 => String::new(),
                1 => format!("E({})", self.conductor),
                _ => format!("E({})^{}", self.conductor, k),
            };
            if unit.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{unit}")?;
            } else {
                write!(f, "{abs}*{unit}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k)
    }

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(compute_cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(compute_cyclotomic_poly(3), vec![1, 1, 1]);
        assert_eq!(compute_cyclotomic_poly(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(compute_cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(compute_cyclotomic_poly(9), vec![1, 0, 0, 1, 0, 0, 1]);
        // Φ_105 is the first with a coefficient of absolute value 2
        assert!(compute_cyclotomic_poly(105).contains(&-2));
        assert_eq!(totient(56), 24);
    }

    #[test]
    fn third_roots_sum_to_minus_one() {
        let s = &z(3, 1) + &z(3, 2);
        assert_eq!(s, Cyclotomic::from_int(-1));
        assert!(s.is_rational());
        assert_eq!(s.to_rational().unwrap(), q(-1, 1));
    }

    #[test]
    fn sqrt_two_squares_to_two() {
        let r = Cyclotomic::sqrt2();
        assert_eq!(&r * &r, Cyclotomic::from_int(2));
    }

    #[test]
    fn gauss_sum_squares_to_minus_seven() {
        let g = Cyclotomic::sqrt_minus7();
        assert_eq!(g.conductor(), 7);
        assert_eq!(&g * &g, Cyclotomic::from_int(-7));
        let mut direct = Cyclotomic::zero();
        for k in 1..7i64 {
            let sign = if [1, 2, 4].contains(&k) { 1 } else { -1 };
            direct = &direct + &z(7, k).scale(&q(sign, 1));
        }
        assert_eq!(&direct * &direct, Cyclotomic::from_int(-7));
    }

    #[test]
    fn i_squared() {
        let i = Cyclotomic::imaginary_unit();
        assert_eq!((&i * &i).to_rational().unwrap(), q(-1, 1));
    }

    #[test]
    fn non_rational_is_an_error() {
        assert!(matches!(z(5, 1).to_rational(), Err(Error::NotRational(_))));
    }

    #[test]
    fn inverses() {
        assert_eq!(
            Cyclotomic::from_int(2).inverse().unwrap(),
            Cyclotomic::from_rational(&q(1, 2))
        );
        assert_eq!(z(8, 1).inverse().unwrap(), z(8, 7));
        let s = Cyclotomic::sqrt2();
        assert_eq!(s.inverse().unwrap(), s.scale(&q(1, 2)));
        assert_eq!(Cyclotomic::zero().inverse(), Err(Error::DivisionByZero));
    }

    #[test]
    fn conductor_descends_to_subfields() {
        // ζ_12^4 = ζ_3
        assert_eq!(z(12, 4), z(3, 1));
        assert_eq!(z(12, 4).conductor(), 3);
        // ζ_6 = -ζ_3^2
        assert_eq!(z(6, 1), -&z(3, 2));
        // ζ_24^6 = i
        assert_eq!(z(24, 6).conductor(), 4);
        // ζ_3 · i lives in Q(ζ_12); dividing by i descends again
        let w = &z(3, 1) * &z(4, 1);
        assert_eq!(w.conductor(), 12);
        assert_eq!(&w * &z(4, 3), z(3, 1));
        // √2 · √2 · ζ_3 via conductor 24
        let s = Cyclotomic::sqrt2();
        let t = &(&s * &z(3, 1)) * &s;
        assert_eq!(t, &Cyclotomic::from_int(2) * &z(3, 1));
        assert_eq!(t.conductor(), 3);
        // ζ_9^3 = ζ_3
        assert_eq!(z(9, 3).conductor(), 3);
        // the real subfield element ζ_7 + ζ_7^{-1} stays at conductor 7
        assert_eq!((&z(7, 1) + &z(7, 6)).conductor(), 7);
    }

    #[test]
    fn sparse_constructor_matches_arithmetic() {
        let a = Cyclotomic::from_terms(8, [(1, q(1, 1)), (7, q(1, 1))]);
        assert_eq!(a, Cyclotomic::sqrt2());
        let b = Cyclotomic::from_terms(4, [(0, q(1, 2)), (2, q(1, 2))]);
        assert!(b.is_zero());
    }

    #[test]
    fn display() {
        assert_eq!(Cyclotomic::from_rational(&q(-3, 4)).to_string(), "-3/4");
        assert_eq!(z(8, 1).to_string(), "E(8)");
        assert_eq!(Cyclotomic::sqrt2().to_string(), "E(8) - E(8)^3");
    }
}
