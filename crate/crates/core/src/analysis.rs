//! Minimum distances and weight distributions by exhaustive enumeration.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Result;
use crate::finite_field::{Fe, FieldCtx};
use crate::linalg::{self, hamming_weight};
use crate::skew_codes_fq::SkewCyclicCodeFq;
use crate::skew_codes_r::RSkewCode;

/// Default bound on the number of enumerated codewords.
pub const DEFAULT_ENUMERATION_CAP: u128 = 1 << 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Metric {
    Hamming,
    Lee,
}

/// `[n, k, d]`; `d` is absent for the zero code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub metric: Metric,
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.d {
            Some(d) => write!(f, "[{}, {}, {}]", self.n, self.k, d),
            None => write!(f, "[{}, {}, -]", self.n, self.k),
        }
    }
}

/// Minimum nonzero weight in the span of linearly independent `basis`.
pub fn min_distance_of_span(field: &FieldCtx, basis: &[Vec<Fe>], cap: u128) -> Result<Option<usize>> {
    let mut best: Option<usize> = None;
    linalg::for_each_in_span(field, basis, cap, |w| {
        let wt = hamming_weight(w);
        if wt > 0 && best.is_none_or(|b| wt < b) {
            best = Some(wt);
        }
    })?;
    Ok(best)
}

pub fn weight_distribution_of_span(
    field: &FieldCtx,
    basis: &[Vec<Fe>],
    cap: u128,
) -> Result<BTreeMap<usize, u128>> {
    let mut dist = BTreeMap::new();
    linalg::for_each_in_span(field, basis, cap, |w| {
        *dist.entry(hamming_weight(w)).or_insert(0) += 1;
    })?;
    Ok(dist)
}

/// Minimum Hamming distance over all `q^k - 1` nonzero codewords.
pub fn min_hamming_distance(code: &SkewCyclicCodeFq, cap: u128) -> Result<Option<usize>> {
    min_distance_of_span(code.ring().field(), &code.generator_matrix(), cap)
}

pub fn weight_distribution(code: &SkewCyclicCodeFq, cap: u128) -> Result<BTreeMap<usize, u128>> {
    weight_distribution_of_span(code.ring().field(), &code.generator_matrix(), cap)
}

pub fn fq_params(code: &SkewCyclicCodeFq, cap: u128) -> Result<CodeParams> {
    Ok(CodeParams {
        n: code.len(),
        k: code.dimension(),
        d: min_hamming_distance(code, cap)?,
        metric: Metric::Hamming,
    })
}

/// Minimum Lee distance of an `R`-code as the minimum of the component
/// Hamming distances; zero components are skipped.
pub fn min_lee_distance_r(code: &RSkewCode, cap: u128) -> Result<Option<usize>> {
    let mut best = None;
    for c in code.components() {
        if let Some(d) = min_hamming_distance(c, cap)? {
            best = Some(best.map_or(d, |b: usize| b.min(d)));
        }
    }
    Ok(best)
}

/// Minimum Hamming distance of the Gray image, enumerating all of it.
pub fn gray_min_distance_direct(code: &RSkewCode, cap: u128) -> Result<Option<usize>> {
    min_distance_of_span(code.ext().field(), &code.gray_image(), cap)
}

/// Parameters `[3n, k1 + k2 + k3, min d(C_i)]` of the Gray image.
pub fn gray_params(code: &RSkewCode, cap: u128) -> Result<CodeParams> {
    Ok(CodeParams {
        n: 3 * code.len(),
        k: code.size_exponent(),
        d: min_lee_distance_r(code, cap)?,
        metric: Metric::Hamming,
    })
}

/// Parameters of the `R`-code under the Lee metric (same numbers as the
/// Gray image, with `n` the length over `R`).
pub fn lee_params(code: &RSkewCode, cap: u128) -> Result<CodeParams> {
    Ok(CodeParams {
        n: code.len(),
        k: code.size_exponent(),
        d: min_lee_distance_r(code, cap)?,
        metric: Metric::Lee,
    })
}
