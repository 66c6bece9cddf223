use clap::ValueEnum;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use genus3_euler::a3::euler_a111;
use genus3_euler::lowgenus::euler_a1;
use genus3_euler::{A3Breakdown, BigInt, Evaluator, Sp4Weight, Sp6Weight};

use crate::Failure;

#[derive(ValueEnum, Serialize, Deserialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum Space {
    M3,
    M3Nonhyp,
    H3,
    A3,
    A1,
    M2,
    A111,
}

impl Space {
    fn name(self) -> &'static str {
        match self {
            Space::M3 => "m3",
            Space::M3Nonhyp => "m3-nonhyp",
            Space::H3 => "h3",
            Space::A3 => "a3",
            Space::A1 => "a1",
            Space::M2 => "m2",
            Space::A111 => "a111",
        }
    }

    fn parts(self) -> usize {
        match self {
            Space::A1 => 1,
            Space::M2 => 2,
            _ => 3,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct Breakdown {
    pub m3_nonhyp: i64,
    pub h3: i64,
    pub m2_a1: i64,
    pub a111: i64,
    pub total: i64,
}

/// One evaluated value. Weights of fewer than three parts are padded with 0.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct OutputRecord {
    pub lambda: [u32; 3],
    pub space: Space,
    pub value: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub breakdown: Option<Breakdown>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Parses `a,b,c` (or the one- and two-part forms for a1 and m2).
pub fn parse_weight(space: Space, text: &str) -> Result<[u32; 3], String> {
    let parts: Vec<u32> = text
        .split(',')
        .map(|p| p.trim().parse::<u32>())
        .collect::<Result<_, _>>()
        .map_err(|_| format!("{text:?} is not a comma-separated list of nonnegative integers"))?;
    if parts.len() != space.parts() {
        return Err(format!(
            "{} expects a weight with {} parts, got {text:?}",
            space.name(),
            space.parts()
        ));
    }
    let mut out = [0; 3];
    out[..parts.len()].copy_from_slice(&parts);
    match space.parts() {
        1 => {}
        2 => {
            Sp4Weight::new([out[0], out[1]]).map_err(|e| e.to_string())?;
        }
        _ => {
            Sp6Weight::new(out).map_err(|e| e.to_string())?;
        }
    }
    Ok(out)
}

fn small(v: &BigInt) -> Result<i64, Failure> {
    i64::try_from(v).map_err(|_| Failure::Other(format!("value {v} does not fit in 64 bits")))
}

fn compute(
    ev: &Evaluator,
    space: Space,
    w: [u32; 3],
) -> genus3_euler::Result<(BigInt, Option<A3Breakdown>)> {
    let sp6 = || Sp6Weight::new(w);
    Ok(match space {
        Space::M3 => (ev.m3(&sp6()?)?, None),
        Space::M3Nonhyp => (ev.m3_nonhyp(&sp6()?)?, None),
        Space::H3 => (ev.h3.lookup(&sp6()?)?, None),
        Space::A3 => {
            let b = ev.a3(&sp6()?)?;
            (b.total.clone(), Some(b))
        }
        Space::A1 => (euler_a1(w[0]).into(), None),
        Space::M2 => (ev.m2.lookup(&Sp4Weight::new([w[0], w[1]])?)?, None),
        Space::A111 => (euler_a111(&sp6()?)?, None),
    })
}

pub fn evaluate(
    ev: &Evaluator,
    space: Space,
    w: [u32; 3],
    with_breakdown: bool,
) -> Result<OutputRecord, Failure> {
    let (value, parts) = compute(ev, space, w)?;
    let breakdown = match (with_breakdown, parts) {
        (true, Some(b)) => Some(Breakdown {
            m3_nonhyp: small(&b.m30)?,
            h3: small(&b.h3)?,
            m2_a1: small(&b.kunneth)?,
            a111: small(&b.a111)?,
            total: small(&b.total)?,
        }),
        _ => None,
    };
    Ok(OutputRecord {
        lambda: w,
        space,
        value: Some(small(&value)?),
        breakdown,
        note: None,
    })
}

fn weights_up_to(space: Space, max: u32) -> Vec<[u32; 3]> {
    match space {
        Space::A1 => (0..=max).map(|k| [k, 0, 0]).collect(),
        Space::M2 => Sp4Weight::up_to_weight(max)
            .into_iter()
            .map(|m| [m.part(0), m.part(1), 0])
            .collect(),
        // odd weights vanish identically here
        Space::A3 => Sp6Weight::up_to_weight(max)
            .into_iter()
            .filter(Sp6Weight::is_even)
            .map(|l| l.parts())
            .collect(),
        _ => Sp6Weight::up_to_weight(max)
            .into_iter()
            .map(|l| l.parts())
            .collect(),
    }
}

/// Every weight up to `max`, in canonical order. Missing data becomes an
/// annotated row unless `strict`.
pub fn rows_up_to(
    ev: &Evaluator,
    space: Space,
    max: u32,
    with_breakdown: bool,
    strict: bool,
) -> Result<Vec<OutputRecord>, Failure> {
    let results: Vec<Result<OutputRecord, Failure>> = weights_up_to(space, max)
        .into_par_iter()
        .map(|w| match evaluate(ev, space, w, with_breakdown) {
            Err(Failure::Coverage(note)) if !strict => Ok(OutputRecord {
                lambda: w,
                space,
                value: None,
                breakdown: None,
                note: Some(note),
            }),
            other => other,
        })
        .collect();
    results.into_iter().collect()
}

pub fn render(records: &[OutputRecord], format: Format) -> Result<String, String> {
    match format {
        Format::Json => serde_json::to_string_pretty(records)
            .map(|s| s + "\n")
            .map_err(|e| e.to_string()),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["lambda1", "lambda2", "lambda3", "space", "value"])
                .map_err(|e| e.to_string())?;
            for r in records {
                let [a, b, c] = r.lambda.map(|x| x.to_string());
                let value = r.value.map_or_else(|| "NA".to_string(), |v| v.to_string());
                w.write_record([a, b, c, r.space.name().to_string(), value])
                    .map_err(|e| e.to_string())?;
            }
            let bytes = w.into_inner().map_err(|e| e.to_string())?;
            String::from_utf8(bytes).map_err(|e| e.to_string())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_parsing() {
        assert_eq!(parse_weight(Space::M3, "8,2,0").unwrap(), [8, 2, 0]);
        assert_eq!(parse_weight(Space::A1, "10").unwrap(), [10, 0, 0]);
        assert_eq!(parse_weight(Space::M2, "3,1").unwrap(), [3, 1, 0]);
        assert!(parse_weight(Space::M3, "1,2,0").is_err());
        assert!(parse_weight(Space::M3, "1,0").is_err());
        assert!(parse_weight(Space::A1, "x").is_err());
    }

    #[test]
    fn record_round_trip() {
        let rec = OutputRecord {
            lambda: [0, 0, 0],
            space: Space::A3,
            value: Some(5),
            breakdown: Some(Breakdown {
                m3_nonhyp: 2,
                h3: 1,
                m2_a1: 1,
                a111: 1,
                total: 5,
            }),
            note: None,
        };
        let s = serde_json::to_string(&rec).unwrap();
        assert!(s.contains("\"space\":\"a3\""));
        assert_eq!(serde_json::from_str::<OutputRecord>(&s).unwrap(), rec);
        let missing = OutputRecord {
            value: None,
            breakdown: None,
            note: Some("gap".into()),
            ..rec
        };
        let s = serde_json::to_string(&missing).unwrap();
        assert_eq!(serde_json::from_str::<OutputRecord>(&s).unwrap(), missing);
    }
}
