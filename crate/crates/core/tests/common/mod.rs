#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;

/// Dimension of the Sp(2g) irreducible with highest weight `parts`, from the
/// product over positive roots of the type-C root system.
pub fn weyl_dimension_oracle(parts: &[u32]) -> BigInt {
    let g = parts.len();
    let rho: Vec<i64> = (0..g).map(|i| (g - i) as i64).collect();
    let l: Vec<i64> = parts
        .iter()
        .zip(&rho)
        .map(|(&p, &r)| p as i64 + r)
        .collect();
    let mut num = BigRational::from_integer(BigInt::from(1));
    let q = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
    for i in 0..g {
        // long roots 2e_i
        num *= q(l[i], rho[i]);
        for j in i + 1..g {
            // e_i - e_j and e_i + e_j
            num *= q(l[i] - l[j], rho[i] - rho[j]);
            num *= q(l[i] + l[j], rho[i] + rho[j]);
        }
    }
    assert!(num.is_integer());
    num.to_integer()
}

/// Dimension of the space of cusp forms of weight `w` for SL(2, Z).
pub fn cusp_forms(w: u32) -> i64 {
    if w % 2 == 1 || w < 12 {
        return 0;
    }
    let base = (w / 12) as i64;
    if w % 12 == 2 {
        base - 1
    } else {
        base
    }
}

/// Compactly supported Euler characteristic on the moduli of elliptic curves,
/// from the Eichler–Shimura description of its only cohomology group.
pub fn elliptic_oracle(k: u32) -> i64 {
    match k {
        0 => 1,
        k if k % 2 == 1 => 0,
        k => -2 * cusp_forms(k + 2) - 1,
    }
}
