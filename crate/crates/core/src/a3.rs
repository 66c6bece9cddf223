//! Euler characteristics on the moduli of abelian threefolds, assembled from
//! the Torelli images of non-hyperelliptic and hyperelliptic genus-3 curves,
//! products of a genus-2 Jacobian with an elliptic curve, and products of
//! three elliptic curves.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::branching::{restrict_sp4_sp2, restrict_wreath, GDecomposition, Sp4Sp2Decomposition};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::lowgenus::{
    bootstrap_unknowns, euler_a1, solve_bootstrap, BootstrapReport, BootstrapRow, H3Provider,
    M2Provider, RowSelection,
};
use crate::partition::Sp6Weight;
use crate::strata::Strata;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct A3Breakdown {
    pub m30: BigInt,
    pub h3: BigInt,
    pub kunneth: BigInt,
    pub a111: BigInt,
    pub total: BigInt,
}

fn choose2(n: &BigInt) -> BigInt {
    n * (n - 1) / 2
}

fn choose3(n: &BigInt) -> BigInt {
    n * (n - 1) * (n - 2) / 6
}

fn e(k: u32) -> BigInt {
    BigInt::from(euler_a1(k))
}

/// Contribution of a decomposition over Sp(2)³⋊S₃ on `A₁³/S₃`.
pub fn a111_from_decomposition(g: &GDecomposition) -> BigInt {
    let mut total = BigInt::zero();
    for ([a, b, c], m) in &g.distinct {
        total += e(*a) * e(*b) * e(*c) * *m;
    }
    for ((a, b), m) in &g.pair_plus {
        total += e(*a) * choose2(&(e(*b) + 1)) * *m;
    }
    for ((a, b), m) in &g.pair_minus {
        total += e(*a) * choose2(&e(*b)) * *m;
    }
    for (a, m) in &g.diagonal_plus {
        total += choose3(&(e(*a) + 2)) * *m;
    }
    for (a, m) in &g.diagonal_minus {
        total += choose3(&e(*a)) * *m;
    }
    for (a, m) in &g.twisted {
        // T' = R⁺_{α,α} − R⁺_α
        let x = e(*a);
        total += (&x * choose2(&(&x + 1)) - choose3(&(&x + 2))) * *m;
    }
    total
}

pub fn euler_a111(lambda: &Sp6Weight) -> Result<BigInt> {
    Ok(a111_from_decomposition(&restrict_wreath(lambda)?))
}

/// Künneth sum over a Sp(4)×Sp(2) decomposition.
pub fn kunneth_from_decomposition(d: &Sp4Sp2Decomposition, m2: &M2Provider) -> Result<BigInt> {
    let mut total = BigInt::zero();
    let mut missing = Vec::new();
    for ((mu, nu), m) in &d.multiplicities {
        let a1 = euler_a1(*nu);
        if a1 == 0 {
            continue;
        }
        match m2.lookup(mu) {
            Ok(v) => total += v * a1 * *m,
            Err(e) if e.is_coverage() => missing.push(*mu),
            Err(e) => return Err(e),
        }
    }
    if let (Some(first), Some(top)) = (missing.first(), missing.iter().map(|mu| mu.weight()).max())
    {
        return Err(Error::Coverage {
            provider: "genus-2",
            option: "--m2-table",
            lambda: format!(
                "{} weights up to {top} needed by the product term, first missing {first}",
                missing.len()
            ),
        });
    }
    Ok(total)
}

pub fn euler_kunneth(lambda: &Sp6Weight, m2: &M2Provider) -> Result<BigInt> {
    kunneth_from_decomposition(&restrict_sp4_sp2(lambda)?, m2)
}

/// Everything needed to evaluate any of the supported spaces.
pub struct Evaluator {
    pub strata: Strata,
    pub h3: H3Provider,
    pub m2: M2Provider,
}

impl Evaluator {
    pub fn new(h3: H3Provider, m2: M2Provider) -> Result<Self> {
        Ok(Evaluator {
            strata: Strata::new()?,
            h3,
            m2,
        })
    }

    pub fn m3_nonhyp(&self, lambda: &Sp6Weight) -> Result<BigInt> {
        self.strata.euler_m3_nonhyp(lambda)
    }

    pub fn m3(&self, lambda: &Sp6Weight) -> Result<BigInt> {
        let h = self.h3.lookup(lambda)?;
        Ok(self.m3_nonhyp(lambda)? + h)
    }

    pub fn a3(&self, lambda: &Sp6Weight) -> Result<A3Breakdown> {
        let h3 = self.h3.lookup(lambda)?;
        let kunneth = euler_kunneth(lambda, &self.m2)?;
        // the Torelli image only sees even weights
        let m30 = if lambda.is_even() {
            self.m3_nonhyp(lambda)?
        } else {
            BigInt::zero()
        };
        let a111 = euler_a111(lambda)?;
        let total = &m30 + &h3 + &kunneth + &a111;
        Ok(A3Breakdown {
            m30,
            h3,
            kunneth,
            a111,
            total,
        })
    }

    /// Bootstrap rows from known abelian-threefold values of weight at most
    /// `max_weight`.
    pub fn bootstrap_rows(
        &self,
        known: &[([u32; 3], i64)],
        max_weight: u32,
    ) -> Result<Vec<BootstrapRow>> {
        let unknowns = bootstrap_unknowns(max_weight);
        let mut rows = Vec::new();
        for &(parts, total) in known {
            let lambda = Sp6Weight::new(parts)?;
            if lambda.weight() > max_weight {
                continue;
            }
            let rhs = BigInt::from(total)
                - self.m3_nonhyp(&lambda)?
                - self.h3.lookup(&lambda)?
                - euler_a111(&lambda)?;
            let d = restrict_sp4_sp2(&lambda)?;
            let mut coefficients = vec![BigInt::zero(); unknowns.len()];
            for ((mu, nu), m) in &d.multiplicities {
                let a1 = euler_a1(*nu);
                if a1 == 0 {
                    continue;
                }
                let idx = unknowns
                    .iter()
                    .position(|u| u == mu)
                    .expect("even weight μ below the bound");
                coefficients[idx] += BigInt::from(a1) * *m;
            }
            rows.push(BootstrapRow {
                lambda,
                coefficients,
                rhs,
            });
        }
        Ok(rows)
    }

    /// Recovers the genus-2 values from the built-in weight ≤ 10 rows.
    pub fn bootstrap_m2(&self, selection: RowSelection) -> Result<BootstrapReport> {
        self.bootstrap_m2_from(&fixtures::ABELIAN3, selection)
    }

    pub fn bootstrap_m2_from(
        &self,
        known: &[([u32; 3], i64)],
        selection: RowSelection,
    ) -> Result<BootstrapReport> {
        let rows = self.bootstrap_rows(known, 10)?;
        solve_bootstrap(&bootstrap_unknowns(10), &rows, selection)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials_follow_the_polynomial_convention() {
        assert_eq!(choose2(&BigInt::from(0)), BigInt::from(0));
        assert_eq!(choose3(&BigInt::from(-1)), BigInt::from(-1));
        assert_eq!(choose2(&BigInt::from(-3)), BigInt::from(6));
    }

    #[test]
    fn a111_small() {
        let w = |a, b, c| Sp6Weight::new([a, b, c]).unwrap();
        assert_eq!(euler_a111(&w(0, 0, 0)).unwrap(), BigInt::from(1));
        assert_eq!(euler_a111(&w(3, 1, 1)).unwrap(), BigInt::from(0));
    }
}
