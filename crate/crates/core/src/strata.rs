//! The stratification of non-hyperelliptic genus-3 curves by automorphism
//! group, and the Euler characteristics of local systems on it.
//!
//! Each stratum contributes `e_c(Σ(G)) · dim V_λ^G`; the invariant
//! dimensions are averages of Sp(6) characters over the group's action on
//! holomorphic differentials.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use rayon::prelude::*;

use crate::character::{CharacterCache, EigenvalueSystem};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::matgroup::{eigenvalues_h1, generate_group, CycMatrix, FiniteGroup, DEFAULT_ORDER_CAP};
use crate::partition::Sp6Weight;

pub const STRATA_COUNT: usize = 13;

#[derive(Clone, Debug)]
pub struct StratumData {
    pub index: usize,
    pub group_name: &'static str,
    pub expected_order: usize,
    pub expected_dim: u32,
    pub generators: Vec<CycMatrix>,
}

fn z(n: u32, k: i64) -> Cyclotomic {
    Cyclotomic::root_of_unity(n, k)
}

fn int(v: i64) -> Cyclotomic {
    Cyclotomic::from_int(v)
}

fn diag(a: Cyclotomic, b: Cyclotomic, c: Cyclotomic) -> CycMatrix {
    CycMatrix::diagonal([a, b, c])
}

/// The thirteen automorphism groups with their actions on differentials.
pub fn stratum_table() -> Vec<StratumData> {
    let o = Cyclotomic::zero;
    let i4 = Cyclotomic::imaginary_unit;
    let swap_neg = CycMatrix::from_ints([[-1, 0, 0], [0, 0, -1], [0, -1, 0]]);
    let quarter_turn = CycMatrix::from_ints([[1, 0, 0], [0, 0, -1], [0, 1, 0]]);
    let cycle = CycMatrix::from_ints([[0, 0, 1], [1, 0, 0], [0, 1, 0]]);

    let inv_sqrt2 = Cyclotomic::sqrt2().inverse().expect("nonzero");
    let sqrt2 = Cyclotomic::sqrt2();
    let g10_a = CycMatrix([
        [&sqrt2 * &z(3, 1), o(), o()],
        [o(), z(8, 1), z(8, 3)],
        [o(), z(8, 1), z(8, 7)],
    ])
    .scaled(&inv_sqrt2);
    let g10_b = CycMatrix([
        [-&(&sqrt2 * &z(3, 2)), o(), o()],
        [o(), z(8, 5), z(8, 1)],
        [o(), z(8, 7), z(8, 7)],
    ])
    .scaled(&inv_sqrt2);

    let g11_b = CycMatrix([[o(), o(), -&i4()], [o(), i4(), o()], [int(-1), o(), o()]]);

    let denom = (-&Cyclotomic::sqrt_minus7()).inverse().expect("nonzero");
    let klein_entry = |i: i64, j: i64| &(&z(7, 2 * i * j) - &z(7, -2 * i * j)) * &denom;
    let g12_b = CycMatrix([
        [klein_entry(1, 1), klein_entry(1, 2), klein_entry(1, 3)],
        [klein_entry(2, 1), klein_entry(2, 2), klein_entry(2, 3)],
        [klein_entry(3, 1), klein_entry(3, 2), klein_entry(3, 3)],
    ]);

    let entry = |index, group_name, expected_order, expected_dim, generators| StratumData {
        index,
        group_name,
        expected_order,
        expected_dim,
        generators,
    };
    vec![
        entry(0, "1", 1, 6, vec![]),
        entry(1, "Z/2", 2, 4, vec![diag(int(-1), int(1), int(-1))]),
        entry(
            2,
            "V4",
            4,
            3,
            vec![
                diag(int(-1), int(1), int(-1)),
                diag(int(-1), int(-1), int(1)),
            ],
        ),
        entry(3, "Z/3", 3, 2, vec![diag(z(3, 2), z(3, 1), z(3, 1))]),
        entry(
            4,
            "S3",
            6,
            2,
            vec![swap_neg.clone(), diag(int(1), z(3, 1), z(3, 2))],
        ),
        entry(5, "D4", 8, 2, vec![swap_neg, diag(int(1), i4(), -&i4())]),
        entry(6, "Z/6", 6, 1, vec![diag(-&z(3, 2), z(3, 1), -&z(3, 1))]),
        entry(
            7,
            "Gamma16",
            16,
            1,
            vec![
                diag(int(-1), int(1), int(-1)),
                diag(int(1), i4(), -&i4()),
                quarter_turn.clone(),
            ],
        ),
        entry(8, "S4", 24, 1, vec![cycle.clone(), quarter_turn]),
        entry(9, "Z/9", 9, 0, vec![diag(z(9, 2), z(9, 4), z(9, 1))]),
        entry(10, "Gamma48", 48, 0, vec![g10_a, g10_b]),
        entry(11, "Gamma96", 96, 0, vec![cycle, g11_b]),
        entry(
            12,
            "Gamma168",
            168,
            0,
            vec![diag(z(7, 1), z(7, 4), z(7, 2)), g12_b],
        ),
    ]
}

/// Euler numbers of the strata, parameterised by the two the relations
/// leave free (`e_0` and `e_8`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StrataEulerNumbers(pub [i64; STRATA_COUNT]);

impl StrataEulerNumbers {
    pub fn new(e0: i64, e8: i64) -> Self {
        StrataEulerNumbers([
            e0,
            -3 * e0,
            2 * e0 + e8 + 1,
            0,
            -e8 - 1,
            -e8,
            -1,
            -1,
            e8,
            1,
            1,
            1,
            1,
        ])
    }
}

#[derive(Clone, Debug)]
pub struct Stratum {
    pub data: StratumData,
    pub group: FiniteGroup,
    /// Distinct spectra on H¹ with the number of group elements having each.
    pub spectra: Vec<(EigenvalueSystem, usize)>,
}

/// Validated strata data plus a character cache; build once and share.
pub struct Strata {
    strata: Vec<Stratum>,
    characters: CharacterCache,
}

pub type InvariantVector = [BigInt; STRATA_COUNT];

impl Strata {
    /// Generates every group, checks its order and extracts spectra.
    pub fn new() -> Result<Self> {
        let strata = stratum_table()
            .into_par_iter()
            .map(build_stratum)
            .collect::<Result<Vec<_>>>()?;
        Ok(Strata {
            strata,
            characters: CharacterCache::new(),
        })
    }

    pub fn strata(&self) -> &[Stratum] {
        &self.strata
    }

    pub fn characters(&self) -> &CharacterCache {
        &self.characters
    }

    /// `dim V_λ^G` for the group of stratum `index`.
    pub fn invariant_dimension(&self, lambda: &Sp6Weight, index: usize) -> Result<BigInt> {
        let stratum = &self.strata[index];
        let mut acc = Cyclotomic::zero();
        for (s, count) in &stratum.spectra {
            let chi = self.characters.character(lambda, s);
            acc = &acc + &chi.scale(&BigRational::from_integer(BigInt::from(*count)));
        }
        let avg = acc.scale(&BigRational::new(
            BigInt::from(1),
            BigInt::from(stratum.group.order()),
        ));
        let bad = |value: String| Error::BadInvariantDimension {
            lambda: lambda.to_string(),
            stratum: index,
            value,
        };
        let q = avg.to_rational().map_err(|_| bad(avg.to_string()))?;
        if !q.is_integer() || q.is_negative() {
            return Err(bad(q.to_string()));
        }
        Ok(q.to_integer())
    }

    pub fn invariant_vector(&self, lambda: &Sp6Weight) -> Result<InvariantVector> {
        let v = (0..STRATA_COUNT)
            .map(|i| self.invariant_dimension(lambda, i))
            .collect::<Result<Vec<_>>>()?;
        Ok(v.try_into().expect("thirteen entries"))
    }

    /// `e_c(M₃⁰, V_λ)` by the closed form free of the undetermined Euler numbers.
    pub fn euler_m3_nonhyp(&self, lambda: &Sp6Weight) -> Result<BigInt> {
        let k = self.invariant_vector(lambda)?;
        Ok(closed_form(&k))
    }

    /// `Σ e_i k_i` with the Euler numbers induced by `(e0, e8)`.
    pub fn euler_m3_nonhyp_general(&self, lambda: &Sp6Weight, e0: i64, e8: i64) -> Result<BigInt> {
        let k = self.invariant_vector(lambda)?;
        Ok(weighted_sum(&k, &StrataEulerNumbers::new(e0, e8)))
    }
}

pub fn closed_form(k: &InvariantVector) -> BigInt {
    &k[2] - &k[4] - &k[6] - &k[7] + &k[9] + &k[10] + &k[11] + &k[12]
}

pub fn weighted_sum(k: &InvariantVector, e: &StrataEulerNumbers) -> BigInt {
    k.iter().zip(e.0).map(|(k, e)| k * e).sum()
}

fn build_stratum(data: StratumData) -> Result<Stratum> {
    let group = generate_group(data.index, data.generators.clone(), DEFAULT_ORDER_CAP)?;
    if group.order() != data.expected_order {
        return Err(Error::GroupOrderMismatch {
            index: data.index,
            expected: data.expected_order,
            found: group.order(),
        });
    }
    let mut counts: BTreeMap<EigenvalueSystem, usize> = BTreeMap::new();
    for m in group.elements() {
        *counts.entry(eigenvalues_h1(m)?).or_default() += 1;
    }
    Ok(Stratum {
        data,
        group,
        spectra: counts.into_iter().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::OnceLock;

    fn strata() -> &'static Strata {
        static S: OnceLock<Strata> = OnceLock::new();
        S.get_or_init(|| Strata::new().expect("strata data is valid"))
    }

    fn w(a: u32, b: u32, c: u32) -> Sp6Weight {
        Sp6Weight::new([a, b, c]).unwrap()
    }

    #[test]
    fn group_orders() {
        for s in strata().strata() {
            assert_eq!(
                s.group.order(),
                s.data.expected_order,
                "stratum {}",
                s.data.index
            );
        }
    }

    #[test]
    fn trivial_weight_has_full_invariants() {
        let k = strata().invariant_vector(&w(0, 0, 0)).unwrap();
        assert!(k.iter().all(|x| *x == BigInt::from(1)));
    }

    #[test]
    fn standard_representation() {
        let k = strata().invariant_vector(&w(1, 0, 0)).unwrap();
        assert_eq!(k[0], BigInt::from(6));
        assert_eq!(k[12], BigInt::from(0));
        assert_eq!(
            strata().invariant_dimension(&w(2, 0, 0), 0).unwrap(),
            BigInt::from(21)
        );
    }

    #[test]
    fn small_values() {
        let s = strata();
        assert_eq!(s.euler_m3_nonhyp(&w(0, 0, 0)).unwrap(), BigInt::from(2));
        assert_eq!(s.euler_m3_nonhyp(&w(8, 2, 0)).unwrap(), BigInt::from(37));
        assert_eq!(s.euler_m3_nonhyp(&w(3, 1, 0)).unwrap(), BigInt::from(0));
        for (e0, e8) in [(0, 0), (5, -7)] {
            assert_eq!(
                s.euler_m3_nonhyp_general(&w(6, 0, 0), e0, e8).unwrap(),
                BigInt::from(4)
            );
        }
    }

    #[test]
    fn euler_numbers() {
        let e = StrataEulerNumbers::new(0, 0).0;
        assert_eq!(e, [0, 0, 1, 0, -1, 0, -1, -1, 0, 1, 1, 1, 1]);
    }
}
