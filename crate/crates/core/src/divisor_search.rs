//! Right divisors of `x^n - 1` in `F_q[x; theta_t]` and code counting.
//!
//! When `gcd(n, m/t) = 1` every monic right divisor of `x^n - 1` already lies
//! in the commutative ring `F_{p^t}[x]` (with `F_{p^t}` the fixed field of
//! `theta_t`), so the divisors are exactly the products of the irreducible
//! factors of `x^n - 1` there. Without that condition only brute-force
//! enumeration is available.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::finite_field::{AutPower, Fe, FieldCtx};
use crate::skew_polynomial::{FqSkewRing, SkewPoly, SkewRing};

/// Default bound on candidate polynomials enumerated per degree.
pub const DEFAULT_DIVISOR_CAP: u128 = 1 << 20;

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Fails unless `gcd(n, m/t) = 1`.
pub fn check_gcd_condition(aut: AutPower, n: usize) -> Result<()> {
    if gcd(n as u64, aut.order() as u64) == 1 {
        Ok(())
    } else {
        Err(Error::GcdConditionViolated { n, order: aut.order() })
    }
}

/// `x^n - 1 = prod g_i^{s_i}` over `F_{p^t}`, factors sorted by degree and
/// then by coefficients (constant term first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub n: usize,
    pub factors: Vec<(SkewPoly<Fe>, usize)>,
}

impl Factorization {
    /// Number of skew cyclic codes of length `n` over `F_q`: `prod (s_i + 1)`.
    pub fn divisor_count(&self) -> u128 {
        self.factors.iter().map(|(_, s)| *s as u128 + 1).product()
    }
}

/// Counts reported by [`count_r_skew_cyclic`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CodeCount {
    pub total: u128,
    pub nonzero: u128,
}

/// Ring with the identity twist, i.e. the commutative `F_q[x]`.
pub fn commutative_ring(field: &FieldCtx) -> FqSkewRing {
    let aut = AutPower::new(field.m(), field.m()).expect("m divides m");
    SkewRing::new(field.clone(), aut).expect("matching degree")
}

fn required_candidates(q: u128, d: usize) -> u128 {
    q.checked_pow(d as u32).unwrap_or(u128::MAX)
}

/// Coefficient tuple number `idx` of a monic degree-`d` candidate, in
/// lexicographic order with the constant term most significant.
fn candidate(alphabet: &[Fe], d: usize, mut idx: u64) -> Vec<Fe> {
    let base = alphabet.len() as u64;
    let mut coeffs = vec![Fe::ONE; d + 1];
    for i in (0..d).rev() {
        coeffs[i] = alphabet[(idx % base) as usize];
        idx /= base;
    }
    coeffs
}

/// Whether the monic `g` right-divides `x^n - 1`; `buf` is scratch space.
fn divides_x_n_minus_one(ring: &FqSkewRing, g: &[Fe], n: usize, buf: &mut Vec<Fe>) -> bool {
    let f = ring.field();
    let dg = g.len() - 1;
    buf.clear();
    buf.resize(n + 1, Fe::ZERO);
    buf[0] = f.neg(Fe::ONE);
    buf[n] = f.add(buf[n], Fe::ONE);
    for top in (dg..=n).rev() {
        let c = buf[top];
        if c.is_zero() {
            continue;
        }
        let shift = top - dg;
        for (j, &gj) in g.iter().enumerate() {
            let term = f.mul(c, ring.theta_pow(gj, shift));
            buf[shift + j] = f.sub(buf[shift + j], term);
        }
    }
    buf[..dg].iter().all(|c| c.is_zero())
}

/// All monic right divisors of `x^n - 1` with degree in `degrees`, by
/// exhaustive search. Output is sorted by degree, then lexicographically.
pub fn enumerate_right_divisors(
    ring: &FqSkewRing,
    n: usize,
    degrees: &[usize],
    cap: u128,
) -> Result<Vec<SkewPoly<Fe>>> {
    if n == 0 {
        return Err(Error::ZeroLength);
    }
    let field = ring.field();
    let q = field.q() as u128;
    let mut degrees: Vec<usize> = degrees.iter().copied().filter(|&d| d <= n).collect();
    degrees.sort_unstable();
    degrees.dedup();
    for &d in &degrees {
        let required = required_candidates(q, d);
        if required > cap {
            return Err(Error::CapExceeded { required, cap });
        }
    }
    let alphabet: Vec<Fe> = field.elements().collect();
    let mut out = Vec::new();
    for d in degrees {
        let count = required_candidates(q, d) as u64;
        let found: Vec<SkewPoly<Fe>> = (0..count)
            .into_par_iter()
            .map_init(Vec::new, |buf, idx| {
                let g = candidate(&alphabet, d, idx);
                divides_x_n_minus_one(ring, &g, n, buf).then(|| SkewPoly::new(g))
            })
            .flatten()
            .collect();
        out.extend(found);
    }
    Ok(out)
}

/// Irreducibility in `F_{p^t}[x]` by trial division against every monic
/// polynomial over `subfield` of degree at most `deg f / 2`.
pub fn is_irreducible_over(field: &FieldCtx, subfield: &[Fe], f: &SkewPoly<Fe>) -> bool {
    let Some(deg) = f.degree() else {
        return false;
    };
    if deg == 0 {
        return false;
    }
    let ring = commutative_ring(field);
    (1..=deg / 2).all(|d| {
        let count = (subfield.len() as u64).pow(d as u32);
        (0..count).all(|idx| {
            let g = SkewPoly::new(candidate(subfield, d, idx));
            !ring.is_right_divisor(&g, f).expect("monic divisor")
        })
    })
}

/// Complete factorization of `x^n - 1` over the fixed field `F_{p^t}` of
/// `theta_t`, by trial division with monic candidates of increasing degree.
pub fn factor_commutative(ring: &FqSkewRing, n: usize) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::ZeroLength);
    }
    check_gcd_condition(ring.aut(), n)?;
    let field = ring.field();
    let comm = commutative_ring(field);
    let subfield = field.fixed_subfield(ring.aut());
    let mut rest = comm.x_n_minus_one(n);
    let mut factors = Vec::new();
    let mut d = 1;
    while let Some(deg_rest) = rest.degree().filter(|&dr| dr > 0) {
        if 2 * d > deg_rest {
            // no factor of degree <= deg/2 is left, so the rest is irreducible
            factors.push((rest.clone(), 1));
            break;
        }
        let count = (subfield.len() as u64).pow(d as u32);
        for idx in 0..count {
            let g = SkewPoly::new(candidate(&subfield, d, idx));
            let mut mult = 0;
            loop {
                let (quot, rem) = comm.right_divide(&rest, &g)?;
                if !rem.is_zero() {
                    break;
                }
                rest = quot;
                mult += 1;
            }
            if mult > 0 {
                factors.push((g, mult));
            }
        }
        d += 1;
    }
    factors.sort_by(|a, b| a.0.graded_cmp(&b.0));
    Ok(Factorization { n, factors })
}

/// Number of skew cyclic codes of length `n` over `R`: `prod (s_i + 1)^3`.
pub fn count_r_skew_cyclic(ring: &FqSkewRing, n: usize) -> Result<CodeCount> {
    let fact = factor_commutative(ring, n)?;
    let per_component = fact.divisor_count();
    let total = per_component.pow(3);
    Ok(CodeCount {
        total,
        nonzero: total - 1,
    })
}

/// All monic divisors `prod g_i^{j_i}`, `0 <= j_i <= s_i`, sorted by degree
/// and then lexicographically.
pub fn component_divisor_lattice(field: &FieldCtx, fact: &Factorization) -> Vec<SkewPoly<Fe>> {
    let comm = commutative_ring(field);
    let mut out = vec![comm.one()];
    for (g, s) in &fact.factors {
        let mut next = Vec::with_capacity(out.len() * (s + 1));
        for base in &out {
            let mut acc = base.clone();
            next.push(acc.clone());
            for _ in 0..*s {
                acc = comm.mul(&acc, g);
                next.push(acc.clone());
            }
        }
        out = next;
    }
    out.sort_by(|a, b| a.graded_cmp(b));
    out
}
