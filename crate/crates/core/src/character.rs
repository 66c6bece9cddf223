//! Characters of the symplectic groups Sp(2), Sp(4) and Sp(6).
//!
//! The value of an irreducible character at an element with eigenvalues
//! `{a, b, c, a⁻¹, b⁻¹, c⁻¹}` is a small determinant in the complete
//! homogeneous symmetric functions `h_d` of those six eigenvalues. The same
//! construction runs over any [`Ring`], so it serves numeric evaluation
//! (cyclotomic values), formal Laurent characters and the exterior-power
//! polynomial alike.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use crate::cyclotomic::Cyclotomic;
use crate::partition::Sp6Weight;
use crate::poly::{FormalCharacter, LaurentPoly};
use crate::ring::Ring;

// ---------------------------------------------------------------------------
// eigenvalues

/// The root of unity `ζ_order^exp`, stored in lowest terms.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootOfUnity {
    order: u32,
    exp: u32,
}

impl RootOfUnity {
    pub fn new(order: u32, exp: i64) -> Self {
        assert!(order > 0);
        let e = exp.rem_euclid(order as i64) as u32;
        let g = e.gcd(&order);
        RootOfUnity {
            order: order / g,
            exp: e / g,
        }
    }

    pub fn one() -> Self {
        RootOfUnity { order: 1, exp: 0 }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn exp(&self) -> u32 {
        self.exp
    }

    pub fn inverse(&self) -> Self {
        Self::new(self.order, -(self.exp as i64))
    }

    pub fn pow(&self, k: i64) -> Self {
        Self::new(self.order, self.exp as i64 * k)
    }

    pub fn to_cyclotomic(&self) -> Cyclotomic {
        Cyclotomic::root_of_unity(self.order, self.exp as i64)
    }
}

impl Ord for RootOfUnity {
    /// By argument in `[0, 2π)`.
    fn cmp(&self, other: &Self) -> Ordering {
        (self.exp as u64 * other.order as u64)
            .cmp(&(other.exp as u64 * self.order as u64))
            .then(self.order.cmp(&other.order))
    }
}

impl PartialOrd for RootOfUnity {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.order, self.exp) {
            (1, _) => write!(f, "1"),
            (2, _) => write!(f, "-1"),
            (n, 1) => write!(f, "z{n}"),
            (n, e) => write!(f, "z{n}^{e}"),
        }
    }
}

impl fmt::Debug for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The six eigenvalues of an element of Sp(6) acting on H¹: three values
/// and their inverses, kept sorted so equal spectra compare equal.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EigenvalueSystem([RootOfUnity; 6]);

impl EigenvalueSystem {
    pub fn from_three(vals: [RootOfUnity; 3]) -> Self {
        let mut all = [
            vals[0],
            vals[1],
            vals[2],
            vals[0].inverse(),
            vals[1].inverse(),
            vals[2].inverse(),
        ];
        all.sort();
        EigenvalueSystem(all)
    }

    pub fn identity() -> Self {
        Self::from_three([RootOfUnity::one(); 3])
    }

    pub fn entries(&self) -> &[RootOfUnity; 6] {
        &self.0
    }

    /// Elementwise inverse; the multiset is unchanged by construction.
    pub fn inverted(&self) -> Self {
        let mut all = self.0.map(|r| r.inverse());
        all.sort();
        EigenvalueSystem(all)
    }

    /// The spectrum of the `k`-th power.
    pub fn pow(&self, k: i64) -> Self {
        let mut all = self.0.map(|r| r.pow(k));
        all.sort();
        EigenvalueSystem(all)
    }

    pub fn sum(&self) -> Cyclotomic {
        self.0
            .iter()
            .fold(Cyclotomic::zero(), |acc, r| &acc + &r.to_cyclotomic())
    }

    pub fn alphabet(&self) -> Vec<Cyclotomic> {
        self.0.iter().map(RootOfUnity::to_cyclotomic).collect()
    }
}

impl fmt::Display for EigenvalueSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for EigenvalueSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// ---------------------------------------------------------------------------
// complete homogeneous functions

/// Lazily extended sequence `h_0, h_1, …` of complete homogeneous symmetric
/// functions of a fixed alphabet, via `h_d = (1/d) Σ_{k=1..d} p_k h_{d-k}`.
#[derive(Clone, Debug)]
pub struct CompleteHomogeneous<R> {
    alphabet: Vec<R>,
    powers: Vec<R>,
    p: Vec<R>,
    h: Vec<R>,
}

impl<R: Ring> CompleteHomogeneous<R> {
    pub fn new(alphabet: Vec<R>) -> Self {
        let powers = vec![R::one(); alphabet.len()];
        CompleteHomogeneous {
            alphabet,
            powers,
            p: vec![R::zero()],
            h: vec![R::one()],
        }
    }

    pub fn extend_to(&mut self, d: usize) {
        while self.h.len() <= d {
            let n = self.h.len();
            let mut pk = R::zero();
            for (pw, a) in self.powers.iter_mut().zip(&self.alphabet) {
                *pw = pw.times(a);
                pk = pk.plus(pw);
            }
            self.p.push(pk);
            let mut acc = R::zero();
            for k in 1..=n {
                acc = acc.plus(&self.p[k].times(&self.h[n - k]));
            }
            self.h.push(acc.div_int(n as i64));
        }
    }

    /// `h_d`, with `h_d = 0` for `d < 0`.
    pub fn get(&mut self, d: i64) -> R {
        if d < 0 {
            return R::zero();
        }
        self.extend_to(d as usize);
        self.h[d as usize].clone()
    }

    pub fn computed(&self) -> &[R] {
        &self.h
    }
}

/// Determinant of a square matrix of size at most 3.
pub fn small_determinant<R: Ring>(m: &[Vec<R>]) -> R {
    match m.len() {
        0 => R::one(),
        1 => m[0][0].clone(),
        2 => m[0][0].times(&m[1][1]).minus(&m[0][1].times(&m[1][0])),
        3 => {
            let minor = |a: usize, b: usize, c: usize, d: usize| {
                m[1][a].times(&m[2][b]).minus(&m[1][c].times(&m[2][d]))
            };
            m[0][0]
                .times(&minor(1, 2, 2, 1))
                .minus(&m[0][1].times(&minor(0, 2, 2, 0)))
                .plus(&m[0][2].times(&minor(0, 1, 1, 0)))
        }
        n => panic!("determinant of size {n} not supported"),
    }
}

/// Value of the irreducible Sp(2g) character with highest weight `parts`
/// (g = `parts.len()` ≤ 3), given `h(d)` for the 2g-letter alphabet.
///
/// Row `i` (1-based) of the matrix is
/// `(h_{λ_i-i+1}, h_{λ_i-i+2} + h_{λ_i-i}, h_{λ_i-i+3} + h_{λ_i-i-1})`.
pub fn symplectic_determinant<R: Ring>(parts: &[u32], mut h: impl FnMut(i64) -> R) -> R {
    let g = parts.len();
    let mut m = vec![Vec::with_capacity(g); g];
    for (i, row) in m.iter_mut().enumerate() {
        let base = parts[i] as i64 - (i as i64 + 1);
        for j in 1..=g as i64 {
            if j == 1 {
                row.push(h(base + 1));
            } else {
                row.push(h(base + j).plus(&h(base - j + 2)));
            }
        }
    }
    small_determinant(&m)
}

/// Weyl dimension of the Sp(2g) representation with highest weight `parts`.
pub fn weyl_dimension(parts: &[u32]) -> BigInt {
    let g = parts.len();
    let shifted: Vec<i64> = (0..g).map(|i| parts[i] as i64 + (g - i) as i64).collect();
    let rho: Vec<i64> = (0..g).map(|i| (g - i) as i64).collect();
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for i in 0..g {
        num *= shifted[i];
        den *= rho[i];
        for j in i + 1..g {
            num *= (shifted[i] - shifted[j]) * (shifted[i] + shifted[j]);
            den *= (rho[i] - rho[j]) * (rho[i] + rho[j]);
        }
    }
    let (q, r) = num.div_rem(&den);
    debug_assert_eq!(r, BigInt::from(0));
    q
}

/// Sp(2) character `χ_k` at eigenvalue `x`, as a Laurent polynomial in the
/// variable with index `var`.
pub fn sl2_character(k: u32, var: usize) -> FormalCharacter {
    let mut p = FormalCharacter::new();
    for j in 0..=k as i32 {
        let mut e = [0; 3];
        e[var] = k as i32 - 2 * j;
        p.add_term(e, BigInt::from(1));
    }
    p
}

/// Formal alphabet `x_1^{±1}, …, x_g^{±1}`.
pub fn formal_alphabet(g: usize) -> Vec<FormalCharacter> {
    let mut out = Vec::with_capacity(2 * g);
    for i in 0..g {
        let mut e = [0; 3];
        e[i] = 1;
        out.push(LaurentPoly::monomial(e, BigInt::from(1)));
        e[i] = -1;
        out.push(LaurentPoly::monomial(e, BigInt::from(1)));
    }
    out
}

/// Formal character of Sp(2g), g = `parts.len()`, straight from the
/// determinant over Laurent polynomials. Costly beyond weight ~10; the fast
/// route for Sp(6) goes through the branching tables.
pub fn formal_character_by_determinant(parts: &[u32]) -> FormalCharacter {
    let mut h = CompleteHomogeneous::new(formal_alphabet(parts.len()));
    symplectic_determinant(parts, |d| h.get(d))
}

// ---------------------------------------------------------------------------
// numeric evaluation with caching

/// Evaluates Sp(6) characters at eigenvalue systems, caching the `h_d`
/// sequence of every spectrum it has seen. Safe to share between threads.
#[derive(Default)]
pub struct CharacterCache {
    sequences: Mutex<HashMap<EigenvalueSystem, Arc<Vec<Cyclotomic>>>>,
}

impl CharacterCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// `h_0 … h_d` (at least) for the spectrum.
    pub fn complete_homogeneous(&self, s: &EigenvalueSystem, d: usize) -> Arc<Vec<Cyclotomic>> {
        if let Some(seq) = self.sequences.lock().unwrap().get(s) {
            if seq.len() > d {
                return Arc::clone(seq);
            }
        }
        // computed outside the lock; a concurrent duplicate is harmless
        let mut h = CompleteHomogeneous::new(s.alphabet());
        h.extend_to(d.max(8));
        let seq = Arc::new(h.computed().to_vec());
        let mut map = self.sequences.lock().unwrap();
        let entry = map.entry(*s).or_insert_with(|| Arc::clone(&seq));
        if entry.len() < seq.len() {
            *entry = Arc::clone(&seq);
        }
        Arc::clone(entry)
    }

    pub fn character(&self, lambda: &Sp6Weight, s: &EigenvalueSystem) -> Cyclotomic {
        let parts = lambda.parts();
        let h = self.complete_homogeneous(s, parts[0] as usize + 2);
        symplectic_determinant(&parts, |d| {
            if d < 0 {
                Cyclotomic::zero()
            } else {
                h[d as usize].clone()
            }
        })
    }

    /// Like [`Self::character`] for the rational-valued case.
    pub fn rational_character(
        &self,
        lambda: &Sp6Weight,
        s: &EigenvalueSystem,
    ) -> Option<BigRational> {
        self.character(lambda, s).to_rational().ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn h_small_cases() {
        let mut h = CompleteHomogeneous::new(vec![int(1); 6]);
        assert_eq!(h.get(0), int(1));
        assert_eq!(h.get(-1), int(0));
        assert_eq!(h.get(2), int(21));
        assert_eq!(h.get(3), int(56));
    }

    #[test]
    fn h2_is_newton_identity() {
        let alpha: Vec<BigInt> = [2, -3, 5, 7, 1, 4].iter().map(|&v| int(v)).collect();
        let p1: BigInt = alpha.iter().sum();
        let p2: BigInt = alpha.iter().map(|a| a * a).sum();
        let mut h = CompleteHomogeneous::new(alpha);
        assert_eq!(h.get(2), (&p1 * &p1 + p2) / 2);
    }

    #[test]
    fn dimensions_at_identity() {
        let mut h = CompleteHomogeneous::new(vec![int(1); 6]);
        for (parts, dim) in [
            ([0, 0, 0], 1),
            ([1, 0, 0], 6),
            ([1, 1, 0], 14),
            ([2, 0, 0], 21),
            ([1, 1, 1], 14),
        ] {
            assert_eq!(symplectic_determinant(&parts, |d| h.get(d)), int(dim));
            assert_eq!(weyl_dimension(&parts), int(dim));
        }
        let mut h4 = CompleteHomogeneous::new(vec![int(1); 4]);
        for (parts, dim) in [([1, 0], 4), ([1, 1], 5), ([2, 0], 10)] {
            assert_eq!(symplectic_determinant(&parts, |d| h4.get(d)), int(dim));
        }
        let mut h2 = CompleteHomogeneous::new(vec![int(1); 2]);
        for k in 0..6u32 {
            assert_eq!(
                symplectic_determinant(&[k], |d| h2.get(d)),
                int(k as i64 + 1)
            );
        }
    }

    #[test]
    fn printed_row_form_is_degenerate() {
        // rows (h_{λi-i+2}, h_{λi-i+2} + h_{λi-i}, h_{λi-i-1}) vanish identically at λ = 0
        let mut h = CompleteHomogeneous::new(vec![int(1); 6]);
        let parts = [0u32, 0, 0];
        let m: Vec<Vec<BigInt>> = (0..3)
            .map(|i| {
                let b = parts[i] as i64 - (i as i64 + 1);
                vec![h.get(b + 2), h.get(b + 2) + h.get(b), h.get(b - 1)]
            })
            .collect();
        assert_eq!(small_determinant(&m), int(0));
    }

    #[test]
    fn formal_characters_small() {
        let c = formal_character_by_determinant(&[1, 0, 0]);
        let expected = formal_alphabet(3)
            .into_iter()
            .fold(FormalCharacter::new(), |a, b| a.plus(&b));
        assert_eq!(c, expected);
        let c = formal_character_by_determinant(&[1, 1, 0]);
        assert_eq!(c.coeff(&[1, 1, 0]), int(1));
        assert_eq!(c.coeff(&[0, 0, 0]), int(2));
        assert_eq!(c.coefficient_sum(), int(14));
        assert_eq!(
            formal_character_by_determinant(&[0, 0, 0]),
            FormalCharacter::one()
        );
    }

    #[test]
    fn sl2_characters_multiply_by_clebsch_gordan() {
        let a = sl2_character(2, 0);
        let b = sl2_character(1, 0);
        let expected = sl2_character(3, 0).plus(&sl2_character(1, 0));
        assert_eq!(a.times(&b), expected);
    }

    #[test]
    fn numeric_character_at_order_three() {
        let cache = CharacterCache::new();
        let z3 = RootOfUnity::new(3, 1);
        let s = EigenvalueSystem::from_three([z3.pow(2), z3, z3]);
        assert_eq!(s, EigenvalueSystem::from_three([z3; 3]));
        let lambda = Sp6Weight::new([1, 0, 0]).unwrap();
        // 3 ζ + 3 ζ² = -3
        assert_eq!(cache.character(&lambda, &s), Cyclotomic::from_int(-3));
        let id = EigenvalueSystem::identity();
        assert_eq!(
            cache.character(&Sp6Weight::new([2, 2, 0]).unwrap(), &id),
            Cyclotomic::from_int(weyl_dimension(&[2, 2, 0]).try_into().unwrap())
        );
    }

    #[test]
    fn root_of_unity_reduces() {
        assert_eq!(RootOfUnity::new(8, 4), RootOfUnity::new(2, 1));
        assert_eq!(RootOfUnity::new(6, -1).exp(), 5);
        assert_eq!(RootOfUnity::new(5, 10), RootOfUnity::one());
    }
}
