//! Skew cyclic codes over `R = F_q + vF_q + v^2F_q`, `v^3 = v`, `q = p^m` odd.
//!
//! The crate is layered bottom-up:
//!
//! - [`finite_field`]: `F_{p^m}` and the Frobenius powers `theta_t`.
//! - [`extension_ring`]: `R`, its idempotents, CRT split and Gray map.
//! - [`skew_polynomial`]: `S[x; theta_t]` for `S = F_q` or `R`.
//! - [`divisor_search`]: right divisors of `x^n - 1` and code counting.
//! - [`skew_codes_fq`] / [`skew_codes_r`]: codes, duals, idempotents, Gray images.
//! - [`analysis`]: minimum distances and weight distributions.
//! - [`text`]: the textual formats used by the command line tool.

pub mod analysis;
pub mod divisor_search;
pub mod error;
pub mod extension_ring;
pub mod finite_field;
pub mod linalg;
pub mod skew_codes_fq;
pub mod skew_codes_r;
pub mod skew_polynomial;
pub mod text;

pub use error::{Error, Result};
pub use extension_ring::{ExtRing, IdempotentTriple, RElement};
pub use finite_field::{build_field, AutPower, Fe, FieldCtx};
pub use skew_codes_fq::SkewCyclicCodeFq;
pub use skew_codes_r::RSkewCode;
pub use skew_polynomial::{CoeffRing, FqSkewRing, RSkewRing, SkewPoly, SkewRing};
