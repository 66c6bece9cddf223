//! Finite groups of 3×3 matrices over cyclotomic numbers.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::character::{EigenvalueSystem, RootOfUnity};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::ring::Ring;

pub const DEFAULT_ORDER_CAP: usize = 200;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycMatrix(pub [[Cyclotomic; 3]; 3]);

impl CycMatrix {
    pub fn identity() -> Self {
        Self::diagonal([Cyclotomic::one(), Cyclotomic::one(), Cyclotomic::one()])
    }

    pub fn diagonal(d: [Cyclotomic; 3]) -> Self {
        let [a, b, c] = d;
        let z = Cyclotomic::zero;
        CycMatrix([[a, z(), z()], [z(), b, z()], [z(), z(), c]])
    }

    pub fn from_ints(rows: [[i64; 3]; 3]) -> Self {
        CycMatrix(rows.map(|r| r.map(Cyclotomic::from_int)))
    }

    pub fn scaled(&self, s: &Cyclotomic) -> Self {
        CycMatrix(self.0.clone().map(|r| r.map(|x| &x * s)))
    }

    pub fn entry(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.0[i][j]
    }

    pub fn trace(&self) -> Cyclotomic {
        &(&self.0[0][0] + &self.0[1][1]) + &self.0[2][2]
    }

    pub fn determinant(&self) -> Cyclotomic {
        let m = &self.0;
        let minor = |a: usize, b: usize, c: usize, d: usize| {
            &(&m[1][a] * &m[2][b]) - &(&m[1][c] * &m[2][d])
        };
        let t0 = &m[0][0] * &minor(1, 2, 2, 1);
        let t1 = &m[0][1] * &minor(0, 2, 2, 0);
        let t2 = &m[0][2] * &minor(0, 1, 1, 0);
        &(&t0 - &t1) + &t2
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::identity();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl Mul for &CycMatrix {
    type Output = CycMatrix;
    fn mul(self, rhs: &CycMatrix) -> CycMatrix {
        let entry = |i: usize, j: usize| {
            let mut acc = Cyclotomic::zero();
            for k in 0..3 {
                let (a, b) = (&self.0[i][k], &rhs.0[k][j]);
                if !a.is_zero() && !b.is_zero() {
                    acc = &acc + &(a * b);
                }
            }
            acc
        };
        CycMatrix([
            [entry(0, 0), entry(0, 1), entry(0, 2)],
            [entry(1, 0), entry(1, 1), entry(1, 2)],
            [entry(2, 0), entry(2, 1), entry(2, 2)],
        ])
    }
}

impl fmt::Debug for CycMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// Least `n ≥ 1` with `mⁿ = 1`.
pub fn element_order(m: &CycMatrix, cap: usize) -> Result<usize> {
    let mut p = m.clone();
    for n in 1..=cap {
        if p.is_identity() {
            return Ok(n);
        }
        p = &p * m;
    }
    Err(Error::ElementOrderExceeded { cap })
}

/// Eigenvalues of `m` (a matrix of finite order) together with their
/// inverses, from the traces of its powers.
pub fn eigenvalues_h1(m: &CycMatrix) -> Result<EigenvalueSystem> {
    let n = element_order(m, 10_000)?;
    let mut traces = Vec::with_capacity(n);
    let mut p = CycMatrix::identity();
    for _ in 0..n {
        traces.push(p.trace());
        p = &p * m;
    }
    let mut found = Vec::with_capacity(3);
    for j in 0..n {
        let mut acc = Cyclotomic::zero();
        for (k, t) in traces.iter().enumerate() {
            let w = Cyclotomic::root_of_unity(n as u32, -((j * k) as i64));
            acc = &acc + &(t * &w);
        }
        let mult = Ring::div_int(&acc, n as i64);
        let q = mult
            .to_rational()
            .map_err(|_| Error::BadEigenvalueMultiplicity {
                value: mult.to_string(),
            })?;
        if !q.is_integer() || q.is_negative() || *q.numer() > BigInt::from(3) {
            return Err(Error::BadEigenvalueMultiplicity {
                value: q.to_string(),
            });
        }
        let count: usize = q.numer().try_into().unwrap();
        for _ in 0..count {
            found.push(RootOfUnity::new(n as u32, j as i64));
        }
    }
    if found.len() != 3 {
        return Err(Error::BadEigenvalueMultiplicity {
            value: format!("total {}", found.len()),
        });
    }
    Ok(EigenvalueSystem::from_three([found[0], found[1], found[2]]))
}

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    label: usize,
    generators: Vec<CycMatrix>,
    elements: Vec<CycMatrix>,
}

impl FiniteGroup {
    pub fn label(&self) -> usize {
        self.label
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[CycMatrix] {
        &self.elements
    }

    pub fn generators(&self) -> &[CycMatrix] {
        &self.generators
    }
}

/// Breadth-first closure of `generators` under right multiplication.
pub fn generate_group(
    label: usize,
    generators: Vec<CycMatrix>,
    order_cap: usize,
) -> Result<FiniteGroup> {
    let id = CycMatrix::identity();
    let mut seen: HashSet<CycMatrix> = HashSet::new();
    let mut elements = vec![id.clone()];
    seen.insert(id.clone());
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in &generators {
            let y = &x * g;
            if seen.insert(y.clone()) {
                if seen.len() > order_cap {
                    return Err(Error::OrderCapExceeded { cap: order_cap });
                }
                elements.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(FiniteGroup {
        label,
        generators,
        elements,
    })
}
