//! Euler characteristics on the lower-genus pieces: elliptic curves, genus-2
//! curves and hyperelliptic genus-3 curves.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::fixtures;
use crate::linalg;
use crate::partition::{Partition, Sp4Weight, Sp6Weight};

/// `e_c(A₁, V_k)`: the generic stratum has Euler number −1 and automorphisms
/// ±1, plus two points whose automorphism groups are cyclic of orders 4 and 6.
pub fn euler_a1(k: u32) -> i64 {
    if k % 2 == 1 {
        return 0;
    }
    if k == 0 {
        return 1;
    }
    let k = k as i64;
    let fixed = |m: i64| (0..=k).filter(|j| (k - 2 * j) % m == 0).count() as i64;
    -(k + 1) + fixed(4) + fixed(6)
}

// ---------------------------------------------------------------------------
// extension tables

/// Parses lines `p1,…,pN,value`; `#` starts a comment, blank lines are skipped.
pub fn parse_table<const N: usize>(
    text: &str,
    source: &str,
) -> Result<BTreeMap<Partition<N>, BigInt>> {
    let mut out = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| Error::TableParse {
            path: source.to_string(),
            line: lineno + 1,
            message,
        };
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != N + 1 {
            return Err(err(format!(
                "expected {} fields, found {}",
                N + 1,
                fields.len()
            )));
        }
        let key: Partition<N> = fields[..N]
            .join(",")
            .parse()
            .map_err(|e: Error| err(e.to_string()))?;
        let value: BigInt = fields[N]
            .parse()
            .map_err(|_| err(format!("{:?} is not an integer", fields[N])))?;
        out.insert(key, value);
    }
    Ok(out)
}

pub fn load_table<const N: usize>(path: &Path) -> Result<BTreeMap<Partition<N>, BigInt>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_table(&text, &path.display().to_string())
}

pub fn format_table<const N: usize>(
    header: &str,
    entries: &BTreeMap<Partition<N>, BigInt>,
) -> String {
    let mut out = String::new();
    for line in header.lines() {
        let _ = writeln!(out, "# {line}");
    }
    for (k, v) in entries {
        for p in k.parts() {
            let _ = write!(out, "{p},");
        }
        let _ = writeln!(out, "{v}");
    }
    out
}

// ---------------------------------------------------------------------------
// hyperelliptic genus 3

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H3Provider {
    table: BTreeMap<Sp6Weight, BigInt>,
}

impl H3Provider {
    /// Built-in values: all even weights up to 10 and five high weights.
    pub fn builtin() -> Self {
        let mut table = BTreeMap::new();
        for (parts, h, _, _) in fixtures::EVEN_GENUS3 {
            table.insert(Sp6Weight::new(parts).unwrap(), BigInt::from(h));
        }
        for (parts, h, ..) in fixtures::HIGH_WEIGHT {
            table.insert(Sp6Weight::new(parts).unwrap(), BigInt::from(h));
        }
        H3Provider { table }
    }

    pub fn empty() -> Self {
        H3Provider {
            table: BTreeMap::new(),
        }
    }

    /// Entries of `extra` replace built-in values with the same key.
    pub fn with_extension(mut self, extra: BTreeMap<Sp6Weight, BigInt>) -> Self {
        self.table.extend(extra);
        self
    }

    pub fn lookup(&self, lambda: &Sp6Weight) -> Result<BigInt> {
        if !lambda.is_even() {
            return Ok(BigInt::zero());
        }
        self.table
            .get(lambda)
            .cloned()
            .ok_or_else(|| Error::Coverage {
                provider: "hyperelliptic",
                option: "--h3-table",
                lambda: lambda.to_string(),
            })
    }

    pub fn covers(&self, lambda: &Sp6Weight) -> bool {
        !lambda.is_even() || self.table.contains_key(lambda)
    }
}

// ---------------------------------------------------------------------------
// genus 2

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct M2Provider {
    table: BTreeMap<Sp4Weight, BigInt>,
    solved: bool,
}

impl M2Provider {
    pub fn empty() -> Self {
        M2Provider {
            table: BTreeMap::new(),
            solved: false,
        }
    }

    pub fn from_table(table: BTreeMap<Sp4Weight, BigInt>) -> Self {
        M2Provider {
            table,
            solved: false,
        }
    }

    pub fn with_extension(mut self, extra: BTreeMap<Sp4Weight, BigInt>) -> Self {
        self.table.extend(extra);
        self
    }

    /// Whether the values came out of [`bootstrap_m2`].
    pub fn is_solved(&self) -> bool {
        self.solved
    }

    pub fn table(&self) -> &BTreeMap<Sp4Weight, BigInt> {
        &self.table
    }

    pub fn lookup(&self, mu: &Sp4Weight) -> Result<BigInt> {
        if !mu.is_even() {
            return Ok(BigInt::zero());
        }
        self.table.get(mu).cloned().ok_or_else(|| Error::Coverage {
            provider: "genus-2",
            option: "--m2-table",
            lambda: mu.to_string(),
        })
    }
}

// ---------------------------------------------------------------------------
// bootstrap

/// Which independent rows to solve the square system with.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowSelection {
    /// Rows with `λ₃ = 0`.
    ThirdPartZero,
    /// Greedy full-rank choice scanning rows from the last one backwards.
    GreedyFromEnd,
}

/// One equation `rhs = Σ_μ coeff_μ · x_μ`.
#[derive(Clone, Debug)]
pub struct BootstrapRow {
    pub lambda: Sp6Weight,
    pub coefficients: Vec<BigInt>,
    pub rhs: BigInt,
}

#[derive(Clone, Debug)]
pub struct BootstrapReport {
    pub provider: M2Provider,
    pub solved_rows: Vec<Sp6Weight>,
    pub held_out_rows: Vec<Sp6Weight>,
}

/// Unknowns of the bootstrap: even-weight Sp(4) weights up to `max_weight`.
pub fn bootstrap_unknowns(max_weight: u32) -> Vec<Sp4Weight> {
    Sp4Weight::up_to_weight(max_weight)
        .into_iter()
        .filter(Sp4Weight::is_even)
        .collect()
}

fn to_rational(v: &BigInt) -> BigRational {
    BigRational::from_integer(v.clone())
}

/// Solves the rows for the unknowns and checks every other row exactly.
pub fn solve_bootstrap(
    unknowns: &[Sp4Weight],
    rows: &[BootstrapRow],
    selection: RowSelection,
) -> Result<BootstrapReport> {
    let n = unknowns.len();
    let chosen: Vec<usize> = match selection {
        RowSelection::ThirdPartZero => (0..rows.len())
            .filter(|&i| rows[i].lambda.part(2) == 0)
            .collect(),
        RowSelection::GreedyFromEnd => {
            let mut picked: Vec<usize> = Vec::new();
            let mut basis: Vec<Vec<BigRational>> = Vec::new();
            for i in (0..rows.len()).rev() {
                let mut trial = basis.clone();
                trial.push(rows[i].coefficients.iter().map(to_rational).collect());
                if linalg::rank(&trial) > basis.len() {
                    basis = trial;
                    picked.push(i);
                }
                if picked.len() == n {
                    break;
                }
            }
            picked.sort_unstable();
            picked
        }
    };
    let matrix: Vec<Vec<BigRational>> = chosen
        .iter()
        .map(|&i| rows[i].coefficients.iter().map(to_rational).collect())
        .collect();
    let rank = linalg::rank(&matrix);
    if chosen.len() != n || rank != n {
        return Err(Error::RankDeficient { rank, needed: n });
    }
    let rhs: Vec<BigRational> = chosen.iter().map(|&i| to_rational(&rows[i].rhs)).collect();
    let solution = linalg::solve(&matrix, &rhs).ok_or(Error::RankDeficient { rank, needed: n })?;

    let mut table = BTreeMap::new();
    for (mu, x) in unknowns.iter().zip(&solution) {
        if !x.is_integer() {
            return Err(Error::NonIntegralSolution {
                mu: mu.to_string(),
                value: x.to_string(),
            });
        }
        table.insert(*mu, x.to_integer());
    }
    let values: Vec<BigInt> = unknowns.iter().map(|mu| table[mu].clone()).collect();
    let mut held_out = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let found: BigInt = row
            .coefficients
            .iter()
            .zip(&values)
            .map(|(c, x)| c * x)
            .sum();
        if found != row.rhs {
            return Err(Error::InconsistentSystem {
                lambda: row.lambda.to_string(),
                expected: row.rhs.to_string(),
                found: found.to_string(),
            });
        }
        if !chosen.contains(&i) {
            held_out.push(row.lambda);
        }
    }
    Ok(BootstrapReport {
        provider: M2Provider {
            table,
            solved: true,
        },
        solved_rows: chosen.iter().map(|&i| rows[i].lambda).collect(),
        held_out_rows: held_out,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_values() {
        assert_eq!(euler_a1(0), 1);
        assert_eq!(euler_a1(3), 0);
        assert_eq!(euler_a1(2), -1);
        assert_eq!(euler_a1(10), -3);
        for k in (2..60).step_by(2) {
            assert!(euler_a1(k) <= -1, "{k}");
            assert!(euler_a1(k) + k as i64 + 1 >= 2, "{k}");
        }
    }

    #[test]
    fn h3_lookup() {
        let h = H3Provider::builtin();
        let w = |a, b, c| Sp6Weight::new([a, b, c]).unwrap();
        assert_eq!(h.lookup(&w(6, 0, 0)).unwrap(), BigInt::from(-5));
        assert_eq!(h.lookup(&w(4, 1, 0)).unwrap(), BigInt::from(0));
        assert_eq!(h.lookup(&w(40, 0, 0)).unwrap(), BigInt::from(-3825));
        let err = h.lookup(&w(12, 0, 0)).unwrap_err();
        assert!(err.is_coverage());
        assert!(err
            .to_string()
            .contains("hyperelliptic data unavailable; supply extension file"));
    }

    #[test]
    fn table_parsing() {
        let text = "# comment\n\n12,0,0, 7 # trailing\n6,0,0,-1\n";
        let t: BTreeMap<Sp6Weight, BigInt> = parse_table(text, "mem").unwrap();
        assert_eq!(t.len(), 2);
        let h = H3Provider::builtin().with_extension(t);
        let w = |a, b, c| Sp6Weight::new([a, b, c]).unwrap();
        assert_eq!(h.lookup(&w(12, 0, 0)).unwrap(), BigInt::from(7));
        assert_eq!(h.lookup(&w(6, 0, 0)).unwrap(), BigInt::from(-1));

        let bad = parse_table::<3>("1,2,0,5\n", "f").unwrap_err();
        assert!(matches!(bad, Error::TableParse { line: 1, .. }));
        assert!(parse_table::<2>("1,1\n", "f").is_err());
        assert!(parse_table::<2>("2,0,x\n", "f").is_err());

        let m: BTreeMap<Sp4Weight, BigInt> = parse_table("2,0,-1\n0,0,1\n", "f").unwrap();
        let again: BTreeMap<Sp4Weight, BigInt> =
            parse_table(&format_table("hdr", &m), "f").unwrap();
        assert_eq!(m, again);
    }

    #[test]
    fn unknown_count() {
        assert_eq!(bootstrap_unknowns(10).len(), 21);
    }
}
