//! Sparse Laurent polynomials in up to three variables.
//!
//! Unused variables simply carry exponent 0, so one type covers the one-,
//! two- and three-variable cases.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::ring::Ring;

pub type Exponent = [i32; 3];

#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly<R> {
    terms: BTreeMap<Exponent, R>,
}

/// Integer Laurent polynomial: the carrier of formal characters.
pub type FormalCharacter = LaurentPoly<BigInt>;

impl<R: Ring> LaurentPoly<R> {
    pub fn new() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: R) -> Self {
        Self::monomial([0, 0, 0], c)
    }

    pub fn monomial(e: Exponent, c: R) -> Self {
        let mut p = Self::new();
        p.add_term(e, c);
        p
    }

    /// The variable `x_i` (0-based).
    pub fn var(i: usize) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        Self::monomial(e, R::one())
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: &Exponent) -> R {
        self.terms.get(e).cloned().unwrap_or_else(R::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &R)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Exponent, R)> {
        self.terms.into_iter()
    }

    pub fn add_term(&mut self, e: Exponent, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().plus(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &R) {
        if c.is_zero() {
            return;
        }
        for (e, v) in &other.terms {
            self.add_term(*e, v.times(c));
        }
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> LaurentPoly<S> {
        let mut out = LaurentPoly::new();
        for (e, c) in &self.terms {
            out.add_term(*e, f(c));
        }
        out
    }

    /// Applies a monomial substitution `x^e ↦ coeff · x^{e'}`.
    pub fn map_monomials<S: Ring>(
        &self,
        f: impl Fn(&Exponent, &R) -> (Exponent, S),
    ) -> LaurentPoly<S> {
        let mut out = LaurentPoly::new();
        for (e, c) in &self.terms {
            let (e2, c2) = f(e, c);
            out.add_term(e2, c2);
        }
        out
    }

    /// Sum of all coefficients (every variable set to 1).
    pub fn coefficient_sum(&self) -> R {
        self.terms.values().fold(R::zero(), |acc, c| acc.plus(c))
    }
}

impl<R: Ring> Ring for LaurentPoly<R> {
    fn zero() -> Self {
        Self::new()
    }
    fn one() -> Self {
        Self::constant(R::one())
    }
    fn from_i64(v: i64) -> Self {
        Self::constant(R::from_i64(v))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
    fn minus(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.negated());
        }
        out
    }
    fn times(&self, rhs: &Self) -> Self {
        let mut out = Self::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term([ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]], ca.times(cb));
            }
        }
        out
    }
    fn negated(&self) -> Self {
        self.map_coeffs(|c| c.negated())
    }
    fn div_int(&self, d: i64) -> Self {
        self.map_coeffs(|c| c.div_int(d))
    }
}

impl<R: Ring + fmt::Display> fmt::Display for LaurentPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = ["x1", "x2", "x3"];
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*{}", names[i])?,
                    _ => write!(f, "*{}^{}", names[i], k)?,
                }
            }
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for LaurentPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = LaurentPoly<BigInt>;

    fn x(i: usize) -> P {
        P::var(i)
    }

    fn xinv(i: usize) -> P {
        let mut e = [0; 3];
        e[i] = -1;
        P::monomial(e, BigInt::from(1))
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = x(0).plus(&xinv(0));
        let q = p.minus(&x(0));
        assert_eq!(q, xinv(0));
        assert!(p.minus(&p).is_zero());
    }

    #[test]
    fn product_of_inverses_is_one() {
        assert_eq!(x(1).times(&xinv(1)), P::one());
        let s = x(0).plus(&xinv(0));
        let sq = s.times(&s);
        assert_eq!(sq.coeff(&[0, 0, 0]), BigInt::from(2));
        assert_eq!(sq.len(), 3);
        assert_eq!(sq.coefficient_sum(), BigInt::from(4));
    }

    #[test]
    fn pow_matches_repeated_product() {
        let s = x(0).plus(&x(1)).plus(&P::one());
        assert_eq!(s.pow(3), s.times(&s).times(&s));
    }
}
