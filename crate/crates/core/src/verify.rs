//! Self-verification against the reference tables and structural identities.
//!
//! Every check reports pass, fail or skipped; nothing here panics on a bad
//! value, so a perturbed fixture shows up as exactly one failing check.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::a3::{euler_a111, Evaluator};
use crate::branching::{restrict_sp4_sp2, restrict_wreath, Sp2CubeTable};
use crate::character::{weyl_dimension, EigenvalueSystem};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::lowgenus::{bootstrap_unknowns, H3Provider, M2Provider, RowSelection};
use crate::partition::Sp6Weight;
use crate::strata::{closed_form, weighted_sum, InvariantVector, StrataEulerNumbers};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail(String),
    Skipped(String),
}

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    /// Acceptance criterion number, 1 to 7.
    pub criterion: u8,
    pub id: &'static str,
    pub title: &'static str,
    pub status: Status,
    pub elapsed: Duration,
    pub budget: Duration,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        matches!(self.status, Status::Fail(_))
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (tag, detail) = match &self.status {
            Status::Pass => ("PASS", String::new()),
            Status::Fail(m) => ("FAIL", format!(": {m}")),
            Status::Skipped(m) => ("SKIP", format!(": {m}")),
        };
        write!(
            f,
            "{tag} [{}] {} ({:.2}s, target {}s){detail}",
            self.id,
            self.title,
            self.elapsed.as_secs_f64(),
            self.budget.as_secs()
        )
    }
}

/// The tables the checks compare against; replaceable for fault injection.
#[derive(Clone, Debug)]
pub struct Fixtures {
    pub even_genus3: Vec<([u32; 3], i64, i64, i64)>,
    pub odd_genus3: Vec<([u32; 3], i64)>,
    pub high_weight: Vec<([u32; 3], i64, i64, i64, i64, i64)>,
    pub abelian3: Vec<([u32; 3], i64)>,
}

impl Default for Fixtures {
    fn default() -> Self {
        Fixtures {
            even_genus3: fixtures::EVEN_GENUS3.to_vec(),
            odd_genus3: fixtures::ODD_GENUS3.to_vec(),
            high_weight: fixtures::HIGH_WEIGHT.to_vec(),
            abelian3: fixtures::ABELIAN3.to_vec(),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    /// Run without genus-2 data; checks needing it are reported as skipped.
    pub skip_bootstrap: bool,
    pub fixtures: Fixtures,
}

type Outcome = std::result::Result<(), String>;

fn expect_eq(what: impl fmt::Display, found: &BigInt, expected: i64) -> Outcome {
    if *found == BigInt::from(expected) {
        Ok(())
    } else {
        Err(format!("{what}: expected {expected}, found {found}"))
    }
}

fn w(parts: [u32; 3]) -> std::result::Result<Sp6Weight, String> {
    Sp6Weight::new(parts).map_err(|e| e.to_string())
}

fn all_up_to(max: u32) -> Vec<Sp6Weight> {
    Sp6Weight::up_to_weight(max)
}

/// First failure in canonical order, evaluated in parallel.
fn first_failure<T: Sync>(items: &[T], f: impl Fn(&T) -> Outcome + Sync) -> Outcome {
    let failures: Vec<String> = items.par_iter().filter_map(|x| f(x).err()).collect();
    match failures.len() {
        0 => Ok(()),
        1 => Err(failures[0].clone()),
        n => Err(format!("{} (and {} more)", failures[0], n - 1)),
    }
}

struct Runner {
    outcomes: Vec<CheckOutcome>,
}

impl Runner {
    fn record(
        &mut self,
        criterion: u8,
        id: &'static str,
        title: &'static str,
        budget_s: u64,
        f: impl FnOnce() -> Outcome,
    ) {
        let start = Instant::now();
        let result = f();
        let elapsed = start.elapsed();
        let budget = Duration::from_secs(budget_s);
        let status = match result {
            Ok(()) if elapsed > budget => {
                Status::Fail(format!("runtime target of {budget_s}s exceeded"))
            }
            Ok(()) => Status::Pass,
            Err(m) => Status::Fail(m),
        };
        self.outcomes.push(CheckOutcome {
            criterion,
            id,
            title,
            status,
            elapsed,
            budget,
        });
    }

    fn skip(
        &mut self,
        criterion: u8,
        id: &'static str,
        title: &'static str,
        budget_s: u64,
        why: &str,
    ) {
        self.outcomes.push(CheckOutcome {
            criterion,
            id,
            title,
            status: Status::Skipped(why.to_string()),
            elapsed: Duration::ZERO,
            budget: Duration::from_secs(budget_s),
        });
    }
}

/// Runs every check. Only a failure to build the strata data is an `Err`.
pub fn run(options: &VerifyOptions) -> Result<Vec<CheckOutcome>> {
    let fx = &options.fixtures;
    let mut ev = Evaluator::new(H3Provider::builtin(), M2Provider::empty())?;
    let mut r = Runner {
        outcomes: Vec::new(),
    };

    r.record(1, "m3-even", "even-weight genus-3 table", 10, || {
        first_failure(&fx.even_genus3, |&(parts, _, nonhyp, total)| {
            let l = w(parts)?;
            let m30 = ev.m3_nonhyp(&l).map_err(|e| e.to_string())?;
            expect_eq(format!("non-hyperelliptic {l}"), &m30, nonhyp)?;
            let m3 = ev.m3(&l).map_err(|e| e.to_string())?;
            expect_eq(format!("genus 3 {l}"), &m3, total)
        })
    });

    r.record(2, "m3-odd", "odd-weight genus-3 table", 10, || {
        first_failure(&fx.odd_genus3, |&(parts, total)| {
            let l = w(parts)?;
            expect_eq(
                format!("hyperelliptic {l}"),
                &ev.h3.lookup(&l).map_err(|e| e.to_string())?,
                0,
            )?;
            expect_eq(
                format!("genus 3 {l}"),
                &ev.m3(&l).map_err(|e| e.to_string())?,
                total,
            )
        })
    });

    r.record(
        3,
        "high-weight",
        "high-weight non-hyperelliptic and elliptic-triple columns",
        300,
        || {
            first_failure(&fx.high_weight, |&(parts, h3, m30, m2a1, a111, a3)| {
                let l = w(parts)?;
                expect_eq(
                    format!("non-hyperelliptic {l}"),
                    &ev.m3_nonhyp(&l).map_err(|e| e.to_string())?,
                    m30,
                )?;
                expect_eq(
                    format!("elliptic triples {l}"),
                    &euler_a111(&l).map_err(|e| e.to_string())?,
                    a111,
                )?;
                expect_eq(
                    format!("hyperelliptic {l}"),
                    &ev.h3.lookup(&l).map_err(|e| e.to_string())?,
                    h3,
                )?;
                if h3 + m30 + m2a1 + a111 != a3 {
                    return Err(format!("row {l} does not add up"));
                }
                Ok(())
            })
        },
    );

    let mut bootstrapped = false;
    if options.skip_bootstrap {
        r.skip(
            4,
            "bootstrap",
            "abelian-threefold table after genus-2 bootstrap",
            120,
            "bootstrap skipped",
        );
        r.skip(
            5,
            "trivial-system",
            "abelian threefolds, trivial local system",
            10,
            "needs genus-2 data",
        );
    } else {
        r.record(
            4,
            "bootstrap",
            "abelian-threefold table after genus-2 bootstrap",
            120,
            || {
                let report = ev
                    .bootstrap_m2_from(&fx.abelian3, RowSelection::ThirdPartZero)
                    .map_err(|e| e.to_string())?;
                let other = ev
                    .bootstrap_m2_from(&fx.abelian3, RowSelection::GreedyFromEnd)
                    .map_err(|e| e.to_string())?;
                if other.provider.table() != report.provider.table() {
                    return Err("row subsets disagree".into());
                }
                if report.solved_rows.len() != 21 || report.held_out_rows.len() != 17 {
                    return Err(format!(
                        "{} solved and {} held-out rows",
                        report.solved_rows.len(),
                        report.held_out_rows.len()
                    ));
                }
                ev.m2 = report.provider;
                bootstrapped = true;
                let rows: Vec<_> = fx
                    .abelian3
                    .iter()
                    .filter(|(p, _)| p.iter().sum::<u32>() <= 10)
                    .collect();
                first_failure(&rows, |&&(parts, total)| {
                    let l = w(parts)?;
                    expect_eq(
                        format!("abelian {l}"),
                        &ev.a3(&l).map_err(|e| e.to_string())?.total,
                        total,
                    )
                })
            },
        );
        if bootstrapped {
            r.record(
                5,
                "trivial-system",
                "abelian threefolds, trivial local system",
                10,
                || {
                    let b = ev.a3(&Sp6Weight::zero()).map_err(|e| e.to_string())?;
                    expect_eq("abelian (0,0,0)", &b.total, 5)
                },
            );
        } else {
            r.skip(
                5,
                "trivial-system",
                "abelian threefolds, trivial local system",
                10,
                "bootstrap failed",
            );
        }
    }

    property_checks(&mut r, &ev);
    coverage_checks(&mut r, &ev);
    Ok(r.outcomes)
}

fn property_checks(r: &mut Runner, ev: &Evaluator) {
    let upto20 = all_up_to(20);
    let mut invariants: std::result::Result<BTreeMap<Sp6Weight, InvariantVector>, String> =
        Err("not computed".into());
    r.record(
        6,
        "invariants",
        "invariant dimensions are nonnegative integers, weight <= 20",
        120,
        || {
            let v: Result<Vec<_>> = upto20
                .par_iter()
                .map(|l| ev.strata.invariant_vector(l).map(|k| (*l, k)))
                .collect();
            invariants = v
                .map(|v| v.into_iter().collect())
                .map_err(|e| e.to_string());
            invariants.as_ref().map(|_| ()).map_err(Clone::clone)
        },
    );

    r.record(
        6,
        "relations",
        "linear relations among invariant dimensions, weight <= 20",
        60,
        || {
            let table = invariants.as_ref().map_err(Clone::clone)?;
            for (l, k) in table {
                let first: BigInt = &k[0] - 3 * &k[1] + 2 * &k[2];
                let second: BigInt = -&k[0] + 3 * &k[1] - 2 * &k[4] - 2 * &k[5] + 2 * &k[8];
                if !first.is_zero() || !second.is_zero() {
                    return Err(format!("{l}: residuals {first}, {second}"));
                }
            }
            Ok(())
        },
    );

    r.record(
        6,
        "euler-numbers",
        "independence of the free stratum Euler numbers, weight <= 16",
        60,
        || {
            let table = invariants.as_ref().map_err(Clone::clone)?;
            for (l, k) in table.iter().filter(|(l, _)| l.weight() <= 16) {
                let reference = closed_form(k);
                for (e0, e8) in [(0, 0), (1, 0), (0, 1), (-4, 7)] {
                    let v = weighted_sum(k, &StrataEulerNumbers::new(e0, e8));
                    if v != reference {
                        return Err(format!(
                            "{l}: ({e0},{e8}) gives {v}, closed form {reference}"
                        ));
                    }
                }
            }
            Ok(())
        },
    );

    r.record(
        6,
        "branching",
        "branching dimension bookkeeping, weight <= 12",
        60,
        || {
            first_failure(&all_up_to(12), |l| {
                let dim = weyl_dimension(&l.parts());
                let cube = Sp2CubeTable::new(l).dimension();
                let pair = restrict_sp4_sp2(l).map_err(|e| e.to_string())?.dimension();
                let triple = restrict_wreath(l).map_err(|e| e.to_string())?.dimension();
                if cube != dim || pair != dim || triple != dim {
                    return Err(format!(
                        "{l}: dimension {dim}, restrictions {cube}/{pair}/{triple}"
                    ));
                }
                Ok(())
            })
        },
    );

    r.record(
        6,
        "odd-vanishing",
        "abelian-threefold terms vanish at odd weight <= 19",
        60,
        || {
            let odd: Vec<_> = all_up_to(19).into_iter().filter(|l| !l.is_even()).collect();
            first_failure(&odd, |l| {
                let b = ev.a3(l).map_err(|e| e.to_string())?;
                for (name, v) in [
                    ("hyperelliptic", &b.h3),
                    ("product", &b.kunneth),
                    ("triple", &b.a111),
                    ("total", &b.total),
                ] {
                    if !v.is_zero() {
                        return Err(format!("{l}: {name} term {v}"));
                    }
                }
                Ok(())
            })
        },
    );

    r.record(6, "group-orders", "automorphism group orders", 10, || {
        for s in ev.strata.strata() {
            if s.group.order() != s.data.expected_order {
                return Err(format!(
                    "group {}: order {}",
                    s.data.group_name,
                    s.group.order()
                ));
            }
        }
        Ok(())
    });

    r.record(
        6,
        "weyl-dimension",
        "character at the identity equals the dimension, weight <= 8",
        10,
        || {
            let id = EigenvalueSystem::identity();
            first_failure(&all_up_to(8), |l| {
                let chi = ev.strata.characters().character(l, &id);
                let dim = weyl_dimension(&l.parts());
                match chi.to_rational() {
                    Ok(q) if q.is_integer() && q.to_integer() == dim => Ok(()),
                    _ => Err(format!("{l}: character {chi}, dimension {dim}")),
                }
            })
        },
    );
}

fn coverage_checks(r: &mut Runner, ev: &Evaluator) {
    r.record(
        7,
        "coverage",
        "missing hyperelliptic and genus-2 data is reported and extensible",
        60,
        || {
            let high = w([40, 0, 0])?;
            let beyond = w([12, 0, 0])?;
            match ev.h3.lookup(&beyond) {
                Err(
                    e @ Error::Coverage {
                        provider: "hyperelliptic",
                        ..
                    },
                ) if e.to_string().contains("--h3-table") => {}
                other => return Err(format!("hyperelliptic lookup at {beyond}: {other:?}")),
            }
            match ev.a3(&high) {
                Err(
                    e @ Error::Coverage {
                        provider: "genus-2",
                        ..
                    },
                ) if e.to_string().contains("--m2-table") => {}
                other => return Err(format!("product term at {high}: {other:?}")),
            }

            let h3 = ev
                .h3
                .clone()
                .with_extension(BTreeMap::from([(beyond, BigInt::from(17))]));
            if h3.lookup(&beyond).ok() != Some(BigInt::from(17)) {
                return Err("hyperelliptic extension ignored".into());
            }
            // any complete genus-2 table up to weight 40 unlocks the product term
            let filler: BTreeMap<_, _> = bootstrap_unknowns(40)
                .into_iter()
                .map(|mu| (mu, BigInt::from(1)))
                .collect();
            let m2 = ev.m2.clone().with_extension(filler);
            let extended = crate::a3::euler_kunneth(&high, &m2).map_err(|e| e.to_string())?;
            let direct: BigInt = restrict_sp4_sp2(&high)
                .map_err(|e| e.to_string())?
                .multiplicities
                .iter()
                .filter(|((mu, _), _)| mu.is_even())
                .map(|((_, nu), m)| BigInt::from(crate::lowgenus::euler_a1(*nu)) * *m)
                .sum();
            if extended != direct {
                return Err(format!(
                    "extended product term {extended}, expected {direct}"
                ));
            }
            Ok(())
        },
    );
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_line() {
        let o = CheckOutcome {
            criterion: 1,
            id: "x",
            title: "t",
            status: Status::Fail("bad".into()),
            elapsed: Duration::from_millis(1500),
            budget: Duration::from_secs(10),
        };
        assert_eq!(o.to_string(), "FAIL [x] t (1.50s, target 10s): bad");
        assert!(o.failed() && !o.passed());
    }
}
