//! Restriction of Sp(6) representations to Sp(2)³, Sp(4)×Sp(2) and the
//! wreath product Sp(2)³⋊S₃.
//!
//! Everything starts from the Sp(2)³ multiplicity table: the Weyl character
//! formula written in the basis `χ_a(x₁)χ_b(x₂)χ_c(x₃)` of Sp(2)³
//! characters. There the Weyl denominator becomes the Vandermonde
//! `(X₁−X₂)(X₁−X₃)(X₂−X₃)` in `X_i = x_i + x_i⁻¹`, and multiplication by
//! `X` is the Clebsch–Gordan shift `χ_1 χ_k = χ_{k-1} + χ_{k+1}`, so the
//! division is a short exact recurrence.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use num_bigint::BigInt;

use crate::character::{formal_character_by_determinant, sl2_character, CompleteHomogeneous};
use crate::error::{Error, Result};
use crate::partition::{Sp4Weight, Sp6Weight};
use crate::poly::{FormalCharacter, LaurentPoly};
use crate::ring::Ring;

// ---------------------------------------------------------------------------
// Sp(2)^3

/// Dense cube of multiplicities `n(a,b,c)` of `V_a ⊠ V_b ⊠ V_c` in the
/// restriction of `V_λ` to Sp(2)³.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sp2CubeTable {
    side: usize,
    data: Vec<i64>,
}

struct Cube {
    side: usize,
    data: Vec<i64>,
}

impl Cube {
    fn zeros(side: usize) -> Self {
        Cube {
            side,
            data: vec![0; side * side * side],
        }
    }

    fn idx(&self, p: [usize; 3]) -> usize {
        (p[0] * self.side + p[1]) * self.side + p[2]
    }

    fn get(&self, p: [usize; 3]) -> i64 {
        self.data[self.idx(p)]
    }

    fn add(&mut self, p: [usize; 3], v: i64) {
        let i = self.idx(p);
        self.data[i] = self.data[i].checked_add(v).expect("multiplicity overflow");
    }

    /// Divides by `X_axis − X_other` in place, panicking if the division
    /// is not exact.
    fn divide(&mut self, axis: usize, other: usize) {
        let n = self.side;
        let third = 3 - axis - other;
        let mut q = Cube::zeros(n);
        for t in 0..n {
            // work on the 2-d slab with the third coordinate fixed to t
            let at = |k: usize, j: usize| {
                let mut p = [0; 3];
                p[axis] = k;
                p[other] = j;
                p[third] = t;
                p
            };
            let top = (0..n)
                .rev()
                .find(|&k| (0..n).any(|j| self.get(at(k, j)) != 0));
            let Some(top) = top else { continue };
            assert!(top > 0, "numerator not divisible");
            // Q_{top-1} = P_top; Q_{k-1} = P_k − Q_{k+1} + X·Q_k
            for j in 0..n {
                q.add(at(top - 1, j), self.get(at(top, j)));
            }
            for k in (1..top).rev() {
                for j in 0..n {
                    let mut v = self.get(at(k, j));
                    if k + 1 < n {
                        v -= q.get(at(k + 1, j));
                    }
                    // (X Q_k)[j] = Q_k[j-1] + Q_k[j+1]
                    if j > 0 {
                        v += q.get(at(k, j - 1));
                    }
                    if j + 1 < n {
                        v += q.get(at(k, j + 1));
                    }
                    q.add(at(k - 1, j), v);
                }
            }
            // remainder check: P_0 = Q_1 − X·Q_0
            for j in 0..n {
                let mut v = q.get(at(1, j));
                if j > 0 {
                    v -= q.get(at(0, j - 1));
                }
                if j + 1 < n {
                    v -= q.get(at(0, j + 1));
                }
                assert_eq!(v, self.get(at(0, j)), "inexact Weyl quotient");
            }
        }
        *self = q;
    }
}

const PERMUTATIONS: [([usize; 3], i64); 6] = [
    ([0, 1, 2], 1),
    ([0, 2, 1], -1),
    ([1, 0, 2], -1),
    ([1, 2, 0], 1),
    ([2, 0, 1], 1),
    ([2, 1, 0], -1),
];

impl Sp2CubeTable {
    pub fn new(lambda: &Sp6Weight) -> Self {
        let [l1, l2, l3] = lambda.parts();
        let shifted = [l1 as usize + 2, l2 as usize + 1, l3 as usize];
        let side = shifted[0] + 2;
        let mut cube = Cube::zeros(side);
        for (perm, sign) in PERMUTATIONS {
            cube.add([shifted[perm[0]], shifted[perm[1]], shifted[perm[2]]], sign);
        }
        cube.divide(0, 1);
        cube.divide(0, 2);
        cube.divide(1, 2);
        Sp2CubeTable {
            side,
            data: cube.data,
        }
    }

    /// Largest index that can carry a nonzero entry, plus one.
    pub fn side(&self) -> usize {
        self.side
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> i64 {
        if a >= self.side || b >= self.side || c >= self.side {
            return 0;
        }
        self.data[(a * self.side + b) * self.side + c]
    }

    /// Nonzero entries `((a, b, c), n)` in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = ([usize; 3], i64)> + '_ {
        let s = self.side;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(move |(i, &v)| ([i / (s * s), (i / s) % s, i % s], v))
    }

    pub fn dimension(&self) -> BigInt {
        self.entries()
            .map(|([a, b, c], v)| BigInt::from(v) * ((a + 1) * (b + 1) * (c + 1)))
            .sum()
    }

    /// The formal character `Σ n(a,b,c) χ_a(x₁) χ_b(x₂) χ_c(x₃)`.
    pub fn formal_character(&self) -> FormalCharacter {
        let mut out = FormalCharacter::new();
        for ([a, b, c], v) in self.entries() {
            for i in 0..=a as i32 {
                for j in 0..=b as i32 {
                    for k in 0..=c as i32 {
                        out.add_term(
                            [a as i32 - 2 * i, b as i32 - 2 * j, c as i32 - 2 * k],
                            BigInt::from(v),
                        );
                    }
                }
            }
        }
        out
    }
}

/// Formal Laurent character of `V_λ` in `x₁, x₂, x₃`.
pub fn formal_character(lambda: &Sp6Weight) -> FormalCharacter {
    Sp2CubeTable::new(lambda).formal_character()
}

// ---------------------------------------------------------------------------
// Sp(4) x Sp(2)

/// Multiplicities `m_{μ,ν}` of `V_μ ⊠ V_ν` in `V_λ|Sp(4)×Sp(2)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Sp4Sp2Decomposition {
    pub multiplicities: BTreeMap<(Sp4Weight, u32), u64>,
}

impl Sp4Sp2Decomposition {
    pub fn dimension(&self) -> BigInt {
        self.multiplicities
            .iter()
            .map(|((mu, nu), m)| {
                crate::character::weyl_dimension(&mu.parts()) * (*nu as u64 + 1) * *m
            })
            .sum()
    }
}

/// Restriction to Sp(4)×Sp(2), where Sp(2) is the third factor of Sp(2)³.
pub fn restrict_sp4_sp2(lambda: &Sp6Weight) -> Result<Sp4Sp2Decomposition> {
    restrict_sp4_sp2_from_table(lambda, &Sp2CubeTable::new(lambda))
}

pub fn restrict_sp4_sp2_from_table(
    lambda: &Sp6Weight,
    table: &Sp2CubeTable,
) -> Result<Sp4Sp2Decomposition> {
    let n = table.side() as i64;
    let t = |a: i64, b: i64, c: usize| {
        if a < 0 || b < 0 {
            0
        } else {
            table.get(a as usize, b as usize, c)
        }
    };
    let mut out = Sp4Sp2Decomposition::default();
    for c in 0..table.side() {
        // multiply the slice by X₁ − X₂; the antisymmetric numerator of the
        // Sp(4) Weyl formula is left
        for a in 0..=n {
            for b in 0..a {
                let p = t(a - 1, b, c) + t(a + 1, b, c) - t(a, b - 1, c) - t(a, b + 1, c);
                let mirror = t(b - 1, a, c) + t(b + 1, a, c) - t(b, a - 1, c) - t(b, a + 1, c);
                if p != -mirror {
                    return Err(Error::SectorMismatch {
                        lambda: lambda.to_string(),
                        detail: format!("Sp(4) numerator not antisymmetric at ({a},{b};{c})"),
                    });
                }
                if p == 0 {
                    continue;
                }
                let mu = Sp4Weight::new([(a - 1) as u32, b as u32]).expect("a > b");
                if p < 0 {
                    return Err(Error::NegativeMultiplicity {
                        lambda: lambda.to_string(),
                        component: format!("{mu} x {c}"),
                        value: p.to_string(),
                    });
                }
                out.multiplicities.insert((mu, c as u32), p as u64);
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// peeling (independent route, practical for small weights)

/// Sp(4) formal characters, memoised.
#[derive(Default)]
pub struct Sp4CharacterCache {
    map: Mutex<HashMap<Sp4Weight, FormalCharacter>>,
}

impl Sp4CharacterCache {
    pub fn get(&self, mu: &Sp4Weight) -> FormalCharacter {
        if let Some(c) = self.map.lock().unwrap().get(mu) {
            return c.clone();
        }
        let c = formal_character_by_determinant(&mu.parts());
        self.map.lock().unwrap().insert(*mu, c.clone());
        c
    }
}

/// Restriction to Sp(4)×Sp(2) by repeatedly removing the leading
/// `χ_μ(x₁,x₂) χ_n(x₃)` from a formal character.
pub fn restrict_sp4_sp2_by_peeling(
    lambda: &Sp6Weight,
    character: &FormalCharacter,
    sp4: &Sp4CharacterCache,
) -> Result<Sp4Sp2Decomposition> {
    let mut rest = character.clone();
    let mut out = Sp4Sp2Decomposition::default();
    while let Some((e, c)) = rest
        .terms()
        .max_by_key(|(e, _)| (e[2], e[0], e[1]))
        .map(|(e, c)| (*e, c.clone()))
    {
        if e[0] < e[1] || e[1] < 0 || e[2] < 0 {
            return Err(Error::SectorMismatch {
                lambda: lambda.to_string(),
                detail: format!("leading monomial {e:?} is not dominant"),
            });
        }
        let mult: i64 = (&c).try_into().expect("small multiplicity");
        let mu = Sp4Weight::new([e[0] as u32, e[1] as u32])?;
        if mult < 0 {
            return Err(Error::NegativeMultiplicity {
                lambda: lambda.to_string(),
                component: format!("{mu} x {}", e[2]),
                value: mult.to_string(),
            });
        }
        let piece = sp4.get(&mu).times(&sl2_character(e[2] as u32, 2));
        rest = rest.minus(&piece.map_coeffs(|v| v * mult));
        out.multiplicities.insert((mu, e[2] as u32), mult as u64);
    }
    Ok(out)
}

/// Sp(2)³ multiplicities by peeling a formal character.
pub fn restrict_sp2_cube_by_peeling(character: &FormalCharacter) -> BTreeMap<[u32; 3], i64> {
    let mut rest = character.clone();
    let mut out = BTreeMap::new();
    loop {
        let leading = rest.terms().next_back().map(|(e, c)| (*e, c.clone()));
        let Some((e, c)) = leading else { break };
        assert!(
            e.iter().all(|&x| x >= 0),
            "leading monomial {e:?} not dominant"
        );
        let mult: i64 = (&c).try_into().expect("small multiplicity");
        let piece = sl2_character(e[0] as u32, 0)
            .times(&sl2_character(e[1] as u32, 1))
            .times(&sl2_character(e[2] as u32, 2));
        rest = rest.minus(&piece.map_coeffs(|v| v * mult));
        out.insert([e[0] as u32, e[1] as u32, e[2] as u32], mult);
    }
    out
}

// ---------------------------------------------------------------------------
// Sp(2)^3 ⋊ S3

/// Decomposition of `V_λ|Sp(2)³⋊S₃` into the classes
/// `R_{α,β,γ}` (α>β>γ), `R^±_{α,β}` (α≠β; `V_α ⊠ V_β ⊠ V_β`, α in the slot
/// fixed by the stabilising transposition), `R^±_α` and `T'_α`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GDecomposition {
    pub distinct: BTreeMap<[u32; 3], u64>,
    pub pair_plus: BTreeMap<(u32, u32), u64>,
    pub pair_minus: BTreeMap<(u32, u32), u64>,
    pub diagonal_plus: BTreeMap<u32, u64>,
    pub diagonal_minus: BTreeMap<u32, u64>,
    pub twisted: BTreeMap<u32, u64>,
}

fn d(n: u32) -> BigInt {
    BigInt::from(n + 1)
}

impl GDecomposition {
    pub fn dimension(&self) -> BigInt {
        let mut total = BigInt::from(0);
        for ([a, b, c], m) in &self.distinct {
            total += d(*a) * d(*b) * d(*c) * 6u32 * *m;
        }
        for ((a, b), m) in self.pair_plus.iter().chain(&self.pair_minus) {
            total += d(*a) * d(*b) * d(*b) * 3u32 * *m;
        }
        for (a, m) in self.diagonal_plus.iter().chain(&self.diagonal_minus) {
            total += d(*a) * d(*a) * d(*a) * *m;
        }
        for (a, m) in &self.twisted {
            total += d(*a) * d(*a) * d(*a) * 2u32 * *m;
        }
        total
    }

    pub fn is_empty(&self) -> bool {
        self.distinct.is_empty()
            && self.pair_plus.is_empty()
            && self.pair_minus.is_empty()
            && self.diagonal_plus.is_empty()
            && self.diagonal_minus.is_empty()
            && self.twisted.is_empty()
    }
}

/// Coefficients `B(α, β)` of `χ_α(y) χ_β(z)` in the character at the
/// transposition sector: spectrum `{y^±1, ±w^±1}` with `z = w²`.
pub fn transposition_sector(
    lambda: &Sp6Weight,
    table: &Sp2CubeTable,
) -> Result<BTreeMap<(u32, u32), i64>> {
    // s[(a, k)]: coefficient of χ_a(y) χ_k(w)
    let mut s: BTreeMap<(u32, u32), i64> = BTreeMap::new();
    for ([a, b, c], n) in table.entries() {
        let signed = if c % 2 == 0 { n } else { -n };
        let lo = b.abs_diff(c);
        for k in (lo..=b + c).step_by(2) {
            *s.entry((a as u32, k as u32)).or_default() += signed;
        }
    }
    let mut out: BTreeMap<(u32, u32), i64> = BTreeMap::new();
    for ((a, k), v) in s {
        if v == 0 {
            continue;
        }
        if k % 2 == 1 {
            return Err(Error::SectorMismatch {
                lambda: lambda.to_string(),
                detail: format!("odd power of w survives at ({a},{k})"),
            });
        }
        // χ_{2m}(w) = χ_m(w²) + χ_{m-1}(w²)
        *out.entry((a, k / 2)).or_default() += v;
        if k >= 2 {
            *out.entry((a, k / 2 - 1)).or_default() += v;
        }
    }
    out.retain(|_, v| *v != 0);
    Ok(out)
}

/// Coefficients `C(α)` of `χ_α(v)` in the character at the three-cycle
/// sector: spectrum `{u, ρu, ρ²u}` and inverses with `v = u³`, `ρ = ζ₃`.
pub fn three_cycle_sector(lambda: &Sp6Weight, table: &Sp2CubeTable) -> Result<BTreeMap<u32, i64>> {
    // H(u) = Π_slots (x^{k+1} − x^{−k−1}) at x = u, ρu, ρ²u, summed against n;
    // coefficients kept in the basis 1, ρ, ρ².
    let mut h: BTreeMap<i64, [i64; 3]> = BTreeMap::new();
    for ([a, b, c], n) in table.entries() {
        let (a1, b1, c1) = (a as i64 + 1, b as i64 + 1, c as i64 + 1);
        for s0 in [1i64, -1] {
            for s1 in [1i64, -1] {
                for s2 in [1i64, -1] {
                    let sign = s0 * s1 * s2;
                    let rho = (s1 * b1 + 2 * s2 * c1).rem_euclid(3) as usize;
                    let exp = s0 * a1 + s1 * b1 + s2 * c1;
                    h.entry(exp).or_default()[rho] += sign * n;
                }
            }
        }
    }
    let mismatch = |detail: String| Error::SectorMismatch {
        lambda: lambda.to_string(),
        detail,
    };
    let mut out = BTreeMap::new();
    for (exp, [r0, r1, r2]) in h {
        // r0 + r1 ρ + r2 ρ² is rational iff r1 = r2, with value r0 − r1
        if r1 != r2 {
            return Err(mismatch(format!("irrational coefficient at u^{exp}")));
        }
        let v = r0 - r1;
        if v == 0 {
            continue;
        }
        if exp % 3 != 0 {
            return Err(mismatch(format!("exponent {exp} not divisible by 3")));
        }
        if exp == 0 {
            return Err(mismatch("constant term in the numerator".into()));
        }
        if exp > 0 {
            out.insert((exp / 3 - 1) as u32, v);
        }
    }
    // antisymmetry of the numerator is implied by the symmetric table; the
    // negative exponents carry the same information
    Ok(out)
}

/// Decomposition of `V_λ` restricted to Sp(2)³⋊S₃.
pub fn restrict_wreath(lambda: &Sp6Weight) -> Result<GDecomposition> {
    restrict_wreath_from_table(lambda, &Sp2CubeTable::new(lambda))
}

pub fn restrict_wreath_from_table(
    lambda: &Sp6Weight,
    table: &Sp2CubeTable,
) -> Result<GDecomposition> {
    let sector_b = transposition_sector(lambda, table)?;
    let sector_c = three_cycle_sector(lambda, table)?;
    let negative = |component: String, value: String| Error::NegativeMultiplicity {
        lambda: lambda.to_string(),
        component,
        value,
    };
    let mismatch = |detail: String| Error::SectorMismatch {
        lambda: lambda.to_string(),
        detail,
    };
    let mut used_b: BTreeMap<(u32, u32), bool> = BTreeMap::new();
    let mut used_c: BTreeMap<u32, bool> = BTreeMap::new();
    let mut out = GDecomposition::default();

    for ([a, b, c], n) in table.entries() {
        let (a, b, c) = (a as u32, b as u32, c as u32);
        if n < 0 {
            return Err(negative(format!("V_{a} x V_{b} x V_{c}"), n.to_string()));
        }
        if a > b && b > c {
            out.distinct.insert([a, b, c], n as u64);
        } else if a != b && b == c {
            // orbit of (a, b, b): the entry with the odd one first
            let diff = sector_b.get(&(a, b)).copied().unwrap_or(0);
            used_b.insert((a, b), true);
            if (n + diff) % 2 != 0 || n < diff.abs() {
                return Err(negative(
                    format!("R(+/-)_{{{a},{b}}}"),
                    format!("({n} +/- {diff})/2"),
                ));
            }
            insert_nonzero(&mut out.pair_plus, (a, b), (n + diff) / 2);
            insert_nonzero(&mut out.pair_minus, (a, b), (n - diff) / 2);
        } else if a == b && b == c {
            let diff = sector_b.get(&(a, a)).copied().unwrap_or(0);
            let cyc = sector_c.get(&a).copied().unwrap_or(0);
            used_b.insert((a, a), true);
            used_c.insert(a, true);
            // n = m⁺ + m⁻ + 2t,  cyc = m⁺ + m⁻ − t,  diff = m⁺ − m⁻
            let three_t = n - cyc;
            if three_t % 3 != 0 || three_t < 0 {
                return Err(negative(format!("T'_{a}"), format!("({n} - {cyc})/3")));
            }
            let t = three_t / 3;
            let sum = cyc + t;
            if (sum + diff) % 2 != 0 || sum < diff.abs() {
                return Err(negative(
                    format!("R(+/-)_{a}"),
                    format!("({sum} +/- {diff})/2"),
                ));
            }
            insert_nonzero(&mut out.diagonal_plus, a, (sum + diff) / 2);
            insert_nonzero(&mut out.diagonal_minus, a, (sum - diff) / 2);
            insert_nonzero(&mut out.twisted, a, t);
        }
        // other orderings of the same orbit are covered by the symmetric table
    }
    for (key, v) in &sector_b {
        if *v != 0 && !used_b.contains_key(key) {
            return Err(mismatch(format!(
                "transposition coefficient {v} at {key:?} has no orbit"
            )));
        }
    }
    for (key, v) in &sector_c {
        if *v != 0 && !used_c.contains_key(key) {
            return Err(mismatch(format!(
                "three-cycle coefficient {v} at {key} has no orbit"
            )));
        }
    }
    Ok(out)
}

fn insert_nonzero<K: Ord>(map: &mut BTreeMap<K, u64>, key: K, v: i64) {
    if v > 0 {
        map.insert(key, v as u64);
    }
}

// ---------------------------------------------------------------------------
// exterior powers

/// Polynomial `P(w₁, w₂, w₃)` with `χ_λ = P(e₁, e₂, e₃)`, where `e_i` are the
/// elementary symmetric functions of the six eigenvalues (equivalently the
/// characters of `∧ⁱV`). Variables `w_i` are stored as `x_i`.
pub fn exterior_polynomial(lambda: &Sp6Weight) -> LaurentPoly<BigInt> {
    type P = LaurentPoly<BigInt>;
    let w = |i: usize| P::var(i);
    // e_0..e_6 of a self-dual alphabet of size six
    let e = [P::one(), w(0), w(1), w(2), w(1), w(0), P::one()];
    let mut h: Vec<P> = vec![P::one()];
    let top = lambda.part(0) as usize + 3;
    for n in 1..=top {
        let mut acc = P::zero();
        for (k, ek) in e.iter().enumerate().skip(1) {
            if k > n {
                break;
            }
            let term = ek.times(&h[n - k]);
            acc = if k % 2 == 1 {
                acc.plus(&term)
            } else {
                acc.minus(&term)
            };
        }
        h.push(acc);
    }
    crate::character::symplectic_determinant(&lambda.parts(), |d| {
        if d < 0 {
            P::zero()
        } else {
            h[d as usize].clone()
        }
    })
}

/// Substitutes the elementary symmetric functions of the formal alphabet
/// into an exterior polynomial.
pub fn substitute_exterior(poly: &LaurentPoly<BigInt>) -> FormalCharacter {
    let alphabet = crate::character::formal_alphabet(3);
    let mut e = vec![FormalCharacter::one()];
    // elementary symmetric functions from the product Π(1 + x t)
    let mut coeffs = vec![FormalCharacter::one()];
    for a in &alphabet {
        let mut next = coeffs.clone();
        next.push(FormalCharacter::zero());
        for k in 1..next.len() {
            next[k] = next[k].plus(&coeffs[k - 1].times(a));
        }
        coeffs = next;
    }
    e.extend(coeffs.into_iter().skip(1).take(3));
    let mut out = FormalCharacter::new();
    for (exp, c) in poly.terms() {
        let mut term = FormalCharacter::constant(c.clone());
        for (i, &k) in exp.iter().enumerate() {
            assert!(k >= 0, "exterior polynomials have no negative powers");
            term = term.times(&Ring::pow(&e[i + 1], k as u32));
        }
        out = out.plus(&term);
    }
    out
}

/// `h_d` of the six formal variables, exposed for cross-checks.
pub fn formal_complete_homogeneous(d: i64) -> FormalCharacter {
    CompleteHomogeneous::new(crate::character::formal_alphabet(3)).get(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(a: u32, b: u32, c: u32) -> Sp6Weight {
        Sp6Weight::new([a, b, c]).unwrap()
    }

    #[test]
    fn cube_of_trivial_and_standard() {
        let t = Sp2CubeTable::new(&w(0, 0, 0));
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![([0, 0, 0], 1)]);
        let t = Sp2CubeTable::new(&w(1, 0, 0));
        assert_eq!(
            t.entries().collect::<Vec<_>>(),
            vec![([0, 0, 1], 1), ([0, 1, 0], 1), ([1, 0, 0], 1)]
        );
        assert_eq!(Sp2CubeTable::new(&w(1, 1, 0)).dimension(), BigInt::from(14));
    }

    #[test]
    fn sp4_sp2_small() {
        let m = restrict_sp4_sp2(&w(1, 0, 0)).unwrap().multiplicities;
        let mu = |a, b| Sp4Weight::new([a, b]).unwrap();
        assert_eq!(m, BTreeMap::from([((mu(0, 0), 1), 1), ((mu(1, 0), 0), 1)]));
        let m = restrict_sp4_sp2(&w(1, 1, 0)).unwrap().multiplicities;
        assert_eq!(
            m,
            BTreeMap::from([((mu(0, 0), 0), 1), ((mu(1, 0), 1), 1), ((mu(1, 1), 0), 1)])
        );
    }

    #[test]
    fn wreath_exterior_powers() {
        let g = restrict_wreath(&w(0, 0, 0)).unwrap();
        assert_eq!(g.diagonal_plus, BTreeMap::from([(0, 1)]));
        let g = restrict_wreath(&w(1, 0, 0)).unwrap();
        assert_eq!(g.pair_plus, BTreeMap::from([((1, 0), 1)]));
        assert_eq!(g.dimension(), BigInt::from(6));
        let g = restrict_wreath(&w(1, 1, 0)).unwrap();
        assert_eq!(g.pair_minus, BTreeMap::from([((0, 1), 1)]));
        assert_eq!(g.twisted, BTreeMap::from([(0, 1)]));
        assert!(g.pair_plus.is_empty() && g.diagonal_plus.is_empty());
        let g = restrict_wreath(&w(1, 1, 1)).unwrap();
        assert_eq!(g.pair_minus, BTreeMap::from([((1, 0), 1)]));
        assert_eq!(g.diagonal_minus, BTreeMap::from([(1, 1)]));
        assert_eq!(g.dimension(), BigInt::from(14));
    }

    #[test]
    fn exterior_polynomial_small() {
        type P = LaurentPoly<BigInt>;
        assert_eq!(exterior_polynomial(&w(1, 0, 0)), P::var(0));
        assert_eq!(exterior_polynomial(&w(1, 1, 0)), P::var(1).minus(&P::one()));
        assert_eq!(
            exterior_polynomial(&w(1, 1, 1)),
            P::var(2).minus(&P::var(0))
        );
    }

    #[test]
    fn formal_character_matches_determinant() {
        for lambda in Sp6Weight::up_to_weight(5) {
            assert_eq!(
                formal_character(&lambda),
                formal_character_by_determinant(&lambda.parts()),
                "{lambda}"
            );
        }
    }
}
