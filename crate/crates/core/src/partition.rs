//! Dominant weights of Sp(2g) written as partitions with `g` parts.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Partition<const N: usize>([u32; N]);

/// Highest weight of an Sp(6) representation.
pub type Sp6Weight = Partition<3>;
/// Highest weight of an Sp(4) representation.
pub type Sp4Weight = Partition<2>;

impl<const N: usize> Partition<N> {
    pub fn new(parts: [u32; N]) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn zero() -> Self {
        Partition([0; N])
    }

    pub fn parts(&self) -> [u32; N] {
        self.0
    }

    pub fn part(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_even(&self) -> bool {
        self.weight().is_multiple_of(2)
    }

    /// All partitions of exactly `w` with `N` parts, largest first part first.
    pub fn of_weight(w: u32) -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur = [0u32; N];
        fill(&mut cur, 0, w, w, &mut out);
        out
    }

    /// All partitions of weight `0..=max`, in canonical order.
    pub fn up_to_weight(max: u32) -> Vec<Self> {
        (0..=max).flat_map(Self::of_weight).collect()
    }
}

fn fill<const N: usize>(
    cur: &mut [u32; N],
    i: usize,
    remaining: u32,
    cap: u32,
    out: &mut Vec<Partition<N>>,
) {
    if i == N {
        if remaining == 0 {
            out.push(Partition(*cur));
        }
        return;
    }
    let slots = (N - i) as u32;
    // part i is at most `cap` and at least ceil(remaining / slots)
    let lo = remaining.div_ceil(slots);
    for v in (lo..=cap.min(remaining)).rev() {
        cur[i] = v;
        fill(cur, i + 1, remaining - v, v, out);
    }
    cur[i] = 0;
}

impl<const N: usize> Ord for Partition<N> {
    /// By weight, then reverse-lexicographically.
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl<const N: usize> PartialOrd for Partition<N> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<const N: usize> FromStr for Partition<N> {
    type Err = Error;

    /// Parses `a,b,c` (whitespace around the parts is ignored).
    fn from_str(s: &str) -> Result<Self> {
        let fields: Vec<&str> = s.split(',').map(str::trim).collect();
        if fields.len() != N {
            return Err(Error::InvalidPartition(format!(
                "expected {N} comma-separated parts, got {s:?}"
            )));
        }
        let mut parts = [0u32; N];
        for (slot, f) in parts.iter_mut().zip(&fields) {
            *slot = f.parse().map_err(|_| {
                Error::InvalidPartition(format!("{f:?} is not a nonnegative integer"))
            })?;
        }
        Self::new(parts)
    }
}

impl<const N: usize> fmt::Display for Partition<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl<const N: usize> fmt::Debug for Partition<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_four_order() {
        let got: Vec<String> = Sp6Weight::of_weight(4)
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(got, ["(4,0,0)", "(3,1,0)", "(2,2,0)", "(2,1,1)"]);
    }

    #[test]
    fn counts() {
        assert_eq!(Sp6Weight::up_to_weight(10).len(), 67);
        let even = Sp6Weight::up_to_weight(10)
            .into_iter()
            .filter(|p| p.is_even())
            .count();
        assert_eq!(even, 38);
        assert_eq!(
            Sp4Weight::up_to_weight(10)
                .into_iter()
                .filter(|p| p.is_even())
                .count(),
            21
        );
    }

    #[test]
    fn sorted_listing_is_canonical() {
        let mut v = Sp6Weight::up_to_weight(8);
        let orig = v.clone();
        v.sort();
        assert_eq!(v, orig);
    }

    #[test]
    fn parsing() {
        assert_eq!("8, 2,0".parse::<Sp6Weight>().unwrap().parts(), [8, 2, 0]);
        assert!("1,2,0".parse::<Sp6Weight>().is_err());
        assert!("1,0".parse::<Sp6Weight>().is_err());
        assert!("1,0,0,0".parse::<Sp6Weight>().is_err());
        assert!("1,-1,0".parse::<Sp6Weight>().is_err());
        assert!("3,1".parse::<Sp4Weight>().is_ok());
    }
}
