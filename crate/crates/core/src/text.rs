//! Textual forms shared by the command line tool and test fixtures.
//!
//! - field: `p=3 m=2 modulus=1,0,1`
//! - `F_q` element: its encoding `sum c_i p^i` as a decimal integer
//! - `R` element: `a:b:c` for `a + vb + v^2c`
//! - polynomial / word: comma-separated coefficients, low to high
//! - `F_q` code: `n=4 t=1 g=6,1`
//! - `R` code: `n=4 t=1 g1=6,1 g2=6,1 g3=6,1`
//!
//! Human-readable renderings write the basis generator `z` as `a`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::extension_ring::{ExtRing, RElement};
use crate::finite_field::{build_field, Fe, FieldCtx};
use crate::skew_codes_fq::SkewCyclicCodeFq;
use crate::skew_codes_r::RSkewCode;
use crate::skew_polynomial::{FqSkewRing, SkewPoly, SkewRing};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn parse_u64(key: &str, s: &str) -> Result<u64> {
    s.trim()
        .parse()
        .map_err(|_| parse_err(format!("{key}: expected a non-negative integer, got {s:?}")))
}

/// `key=value` pairs separated by whitespace; `#` starts a comment line.
pub fn parse_key_values(s: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for line in s.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        for tok in line.split_whitespace() {
            let (k, v) = tok
                .split_once('=')
                .ok_or_else(|| parse_err(format!("expected key=value, got {tok:?}")))?;
            if out.insert(k.to_string(), v.to_string()).is_some() {
                return Err(parse_err(format!("duplicate key {k:?}")));
            }
        }
    }
    Ok(out)
}

pub fn parse_u32_list(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| parse_err(format!("invalid integer {t:?} in list {s:?}")))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldSpec {
    pub p: u64,
    pub m: u32,
    pub modulus: Option<Vec<u32>>,
}

impl FieldSpec {
    pub fn parse(s: &str) -> Result<Self> {
        let kv = parse_key_values(s)?;
        if let Some(k) = kv.keys().find(|k| !["p", "m", "modulus"].contains(&k.as_str())) {
            return Err(parse_err(format!("unknown field key {k:?}")));
        }
        let p = parse_u64("p", kv.get("p").ok_or_else(|| parse_err("field needs p="))?)?;
        let m = match kv.get("m") {
            Some(v) => parse_u64("m", v)? as u32,
            None => 1,
        };
        let modulus = kv.get("modulus").map(|v| parse_u32_list(v)).transpose()?;
        Ok(FieldSpec { p, m, modulus })
    }

    pub fn build(&self) -> Result<FieldCtx> {
        build_field(self.p, self.m, self.modulus.as_deref())
    }
}

pub fn format_field(field: &FieldCtx) -> String {
    format!(
        "p={} m={} modulus={}",
        field.p(),
        field.m(),
        join(field.modulus().iter())
    )
}

fn join<T: ToString>(items: impl Iterator<Item = T>) -> String {
    items.map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

pub fn parse_fe(field: &FieldCtx, s: &str) -> Result<Fe> {
    let v = s
        .trim()
        .parse::<u32>()
        .map_err(|_| parse_err(format!("invalid field element {s:?}")))?;
    field.elem(v)
}

pub fn parse_r(ext: &ExtRing, s: &str) -> Result<RElement> {
    let parts: Vec<&str> = s.trim().split(':').collect();
    if parts.len() != 3 {
        return Err(parse_err(format!("expected a:b:c, got {s:?}")));
    }
    let f = ext.field();
    Ok(RElement::new(parse_fe(f, parts[0])?, parse_fe(f, parts[1])?, parse_fe(f, parts[2])?))
}

/// A comma list of `F_q` elements; the empty string is the empty list.
pub fn parse_fq_word(field: &FieldCtx, s: &str) -> Result<Vec<Fe>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|t| parse_fe(field, t)).collect()
}

pub fn parse_r_word(ext: &ExtRing, s: &str) -> Result<Vec<RElement>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|t| parse_r(ext, t)).collect()
}

pub fn parse_fq_poly(field: &FieldCtx, s: &str) -> Result<SkewPoly<Fe>> {
    Ok(SkewPoly::new(parse_fq_word(field, s)?))
}

pub fn parse_r_poly(ext: &ExtRing, s: &str) -> Result<SkewPoly<RElement>> {
    Ok(SkewPoly::new(parse_r_word(ext, s)?))
}

pub fn format_word<E: ToString + Copy>(word: &[E]) -> String {
    join(word.iter().copied())
}

/// Coefficient list of a polynomial; the zero polynomial is `0`.
pub fn format_poly<E: ToString + Copy + Eq + Default>(p: &SkewPoly<E>) -> String {
    if p.is_zero() {
        "0".to_string()
    } else {
        join(p.coeffs().iter().copied())
    }
}

/// `x` written in the basis `1, a, a^2, ...`, e.g. `2a+1`.
pub fn fe_symbolic(field: &FieldCtx, x: Fe) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let terms: Vec<String> = field
        .digits(x)
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| {
            let coef = if c == 1 && i > 0 { String::new() } else { c.to_string() };
            match i {
                0 => coef,
                1 => format!("{coef}a"),
                _ => format!("{coef}a^{i}"),
            }
        })
        .collect();
    terms.join("+")
}

/// Human-readable polynomial, highest degree first, e.g. `x^4 + 2ax + 1`.
pub fn poly_symbolic(field: &FieldCtx, p: &SkewPoly<Fe>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut terms = Vec::new();
    for (d, &c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let xpart = match d {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{d}"),
        };
        let coef = fe_symbolic(field, c);
        let term = if d == 0 {
            coef
        } else if c == Fe::ONE {
            xpart
        } else if coef.contains('+') {
            format!("({coef}){xpart}")
        } else {
            format!("{coef}{xpart}")
        };
        terms.push(term);
    }
    terms.join(" + ")
}

/// Parsed code description, not yet checked against a ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CodeSpec {
    Fq { n: usize, t: u32, g: Vec<u32> },
    R { n: usize, t: u32, gens: [Vec<u32>; 3] },
}

impl CodeSpec {
    pub fn parse(s: &str) -> Result<Self> {
        let kv = parse_key_values(s)?;
        let n = parse_u64("n", kv.get("n").ok_or_else(|| parse_err("code needs n="))?)? as usize;
        let t = match kv.get("t") {
            Some(v) => parse_u64("t", v)? as u32,
            None => 1,
        };
        let get_poly = |k: &str| -> Result<Option<Vec<u32>>> {
            kv.get(k).map(|v| parse_u32_list(v)).transpose()
        };
        let allowed = ["n", "t", "g", "g1", "g2", "g3"];
        if let Some(k) = kv.keys().find(|k| !allowed.contains(&k.as_str())) {
            return Err(parse_err(format!("unknown code key {k:?}")));
        }
        match (get_poly("g")?, get_poly("g1")?, get_poly("g2")?, get_poly("g3")?) {
            (Some(g), None, None, None) => Ok(CodeSpec::Fq { n, t, g }),
            (None, Some(g1), Some(g2), Some(g3)) => Ok(CodeSpec::R {
                n,
                t,
                gens: [g1, g2, g3],
            }),
            _ => Err(parse_err("code needs either g= or all of g1= g2= g3=")),
        }
    }

    pub fn n(&self) -> usize {
        match self {
            CodeSpec::Fq { n, .. } | CodeSpec::R { n, .. } => *n,
        }
    }

    pub fn t(&self) -> u32 {
        match self {
            CodeSpec::Fq { t, .. } | CodeSpec::R { t, .. } => *t,
        }
    }

    pub fn skew_ring(&self, field: &FieldCtx) -> Result<FqSkewRing> {
        SkewRing::new(field.clone(), field.aut(self.t())?)
    }
}

fn poly_from_values(field: &FieldCtx, values: &[u32]) -> Result<SkewPoly<Fe>> {
    Ok(SkewPoly::new(
        values.iter().map(|&v| field.elem(v)).collect::<Result<Vec<_>>>()?,
    ))
}

pub fn build_fq_code(field: &FieldCtx, spec: &CodeSpec) -> Result<SkewCyclicCodeFq> {
    match spec {
        CodeSpec::Fq { n, g, .. } => {
            SkewCyclicCodeFq::new(&spec.skew_ring(field)?, *n, poly_from_values(field, g)?)
        }
        CodeSpec::R { .. } => Err(parse_err("expected an F_q code spec (g=...)")),
    }
}

pub fn build_r_code(field: &FieldCtx, spec: &CodeSpec) -> Result<RSkewCode> {
    match spec {
        CodeSpec::R { n, gens, .. } => {
            let ring = spec.skew_ring(field)?;
            let [g1, g2, g3] = gens;
            RSkewCode::from_generators(
                &ring,
                *n,
                [
                    poly_from_values(field, g1)?,
                    poly_from_values(field, g2)?,
                    poly_from_values(field, g3)?,
                ],
            )
        }
        CodeSpec::Fq { .. } => Err(parse_err("expected an R code spec (g1= g2= g3=)")),
    }
}

pub fn format_fq_code(code: &SkewCyclicCodeFq) -> String {
    format!(
        "n={} t={} g={}",
        code.len(),
        code.ring().aut().t(),
        format_poly(code.generator())
    )
}

pub fn format_r_code(code: &RSkewCode) -> String {
    let [c1, c2, c3] = code.components();
    format!(
        "n={} t={} g1={} g2={} g3={}",
        code.len(),
        code.ring().aut().t(),
        format_poly(c1.generator()),
        format_poly(c2.generator()),
        format_poly(c3.generator())
    )
}
