//! Skew cyclic codes over `R` through the decomposition
//! `C = e1 C1 + e2 C2 + e3 C3` into three skew cyclic codes over `F_q`
//! sharing one automorphism `theta_t`.
//!
//! Membership, sizes and duals are all computed componentwise through the CRT
//! split; the combined generator `g = e1 g1 + e2 g2 + e3 g3` over `R` is
//! carried along and checked to right-divide `x^n - 1`.

use crate::error::{Error, Result};
use crate::extension_ring::{ExtRing, RElement};
use crate::finite_field::Fe;
use crate::linalg::Matrix;
use crate::skew_codes_fq::SkewCyclicCodeFq;
use crate::skew_polynomial::{FqSkewRing, RSkewRing, SkewPoly, SkewRing};

#[derive(Clone, Debug, PartialEq)]
pub struct RSkewCode {
    ring: RSkewRing,
    n: usize,
    components: [SkewCyclicCodeFq; 3],
    g: SkewPoly<RElement>,
    h: SkewPoly<RElement>,
}

/// `e1 p1 + e2 p2 + e3 p3`, coefficientwise.
pub fn combine_polys(ext: &ExtRing, parts: [&SkewPoly<Fe>; 3]) -> SkewPoly<RElement> {
    let len = parts.iter().map(|p| p.coeffs().len()).max().unwrap_or(0);
    SkewPoly::new(
        (0..len)
            .map(|i| ext.crt_combine([parts[0].coeff(i), parts[1].coeff(i), parts[2].coeff(i)]))
            .collect(),
    )
}

/// Inverse of [`combine_polys`].
pub fn split_poly(ext: &ExtRing, p: &SkewPoly<RElement>) -> [SkewPoly<Fe>; 3] {
    let parts: Vec<[Fe; 3]> = p.coeffs().iter().map(|&c| ext.crt_split(c)).collect();
    [0, 1, 2].map(|j| SkewPoly::new(parts.iter().map(|s| s[j]).collect()))
}

pub fn split_word(ext: &ExtRing, word: &[RElement]) -> [Vec<Fe>; 3] {
    let parts: Vec<[Fe; 3]> = word.iter().map(|&c| ext.crt_split(c)).collect();
    [0, 1, 2].map(|j| parts.iter().map(|s| s[j]).collect())
}

pub fn combine_words(ext: &ExtRing, parts: [&[Fe]; 3]) -> Vec<RElement> {
    (0..parts[0].len())
        .map(|i| ext.crt_combine([parts[0][i], parts[1][i], parts[2][i]]))
        .collect()
}

impl RSkewCode {
    pub fn from_components(c1: SkewCyclicCodeFq, c2: SkewCyclicCodeFq, c3: SkewCyclicCodeFq) -> Result<Self> {
        let n = c1.len();
        for c in [&c2, &c3] {
            if c.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    found: c.len(),
                });
            }
            if c.ring() != c1.ring() {
                return Err(Error::ContextMismatch);
            }
        }
        let fq_ring = c1.ring();
        let ext = ExtRing::new(fq_ring.field().clone());
        let ring = SkewRing::new(ext.clone(), fq_ring.aut())?;
        let g = combine_polys(&ext, [c1.generator(), c2.generator(), c3.generator()]);
        let h = combine_polys(&ext, [c1.cofactor(), c2.cofactor(), c3.cofactor()]);
        if ring.mul(&h, &g) != ring.x_n_minus_one(n) {
            return Err(Error::NotRightDivisor { n });
        }
        Ok(RSkewCode {
            ring,
            n,
            components: [c1, c2, c3],
            g,
            h,
        })
    }

    /// Builds the three component codes from monic generators.
    pub fn from_generators(fq_ring: &FqSkewRing, n: usize, gens: [SkewPoly<Fe>; 3]) -> Result<Self> {
        let [g1, g2, g3] = gens;
        Self::from_components(
            SkewCyclicCodeFq::new(fq_ring, n, g1)?,
            SkewCyclicCodeFq::new(fq_ring, n, g2)?,
            SkewCyclicCodeFq::new(fq_ring, n, g3)?,
        )
    }

    pub fn ring(&self) -> &RSkewRing {
        &self.ring
    }

    pub fn ext(&self) -> &ExtRing {
        self.ring.base()
    }

    pub fn fq_ring(&self) -> &FqSkewRing {
        self.components[0].ring()
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn components(&self) -> &[SkewCyclicCodeFq; 3] {
        &self.components
    }

    /// Combined generator `e1 g1 + e2 g2 + e3 g3`.
    pub fn generator(&self) -> &SkewPoly<RElement> {
        &self.g
    }

    /// `e1 h1 + e2 h2 + e3 h3`, satisfying `x^n - 1 = h g` over `R`.
    pub fn cofactor(&self) -> &SkewPoly<RElement> {
        &self.h
    }

    pub fn dimensions(&self) -> [usize; 3] {
        self.components.each_ref().map(|c| c.dimension())
    }

    /// `log_q |C| = 3n - deg g1 - deg g2 - deg g3`.
    pub fn size_exponent(&self) -> usize {
        self.dimensions().iter().sum()
    }

    pub fn size(&self) -> Option<u128> {
        (self.ext().field().q() as u128).checked_pow(self.size_exponent() as u32)
    }

    pub fn contains(&self, word: &[RElement]) -> Result<bool> {
        if word.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: word.len(),
            });
        }
        let parts = split_word(self.ext(), word);
        for (code, part) in self.components.iter().zip(&parts) {
            if !code.contains(part)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `sigma(c) = (theta(c_{n-1}), theta(c_0), ..., theta(c_{n-2}))` over `R`.
    pub fn skew_shift(&self, word: &[RElement]) -> Vec<RElement> {
        self.ring.skew_shift(word)
    }

    /// Word of `e1 m1 g1 + e2 m2 g2 + e3 m3 g3` for component messages.
    pub fn encode_components(&self, msgs: [&SkewPoly<Fe>; 3]) -> Result<Vec<RElement>> {
        let w1 = self.components[0].encode(msgs[0])?;
        let w2 = self.components[1].encode(msgs[1])?;
        let w3 = self.components[2].encode(msgs[2])?;
        Ok(combine_words(self.ext(), [&w1, &w2, &w3]))
    }

    /// Word of `m g mod (x^n - 1)` for a message polynomial over `R`.
    pub fn encode(&self, msg: &SkewPoly<RElement>) -> Vec<RElement> {
        self.ring.mul_mod(msg, &self.g, self.n).to_word(self.n)
    }

    /// Dual code, with components the duals of the components.
    pub fn dual(&self) -> Self {
        let [c1, c2, c3] = self.components.each_ref().map(|c| c.dual());
        Self::from_components(c1, c2, c3).expect("duals of compatible components are compatible")
    }

    /// `e1 hbar1 + e2 hbar2 + e3 hbar3`, which generates the dual code.
    pub fn dual_generator_unnormalized(&self) -> SkewPoly<RElement> {
        let [h1, h2, h3] = self.components.each_ref().map(|c| c.reciprocal_cofactor());
        combine_polys(self.ext(), [&h1, &h2, &h3])
    }

    pub fn same_code(&self, other: &Self) -> bool {
        self.n == other.n
            && self
                .components
                .iter()
                .zip(&other.components)
                .all(|(a, b)| a.same_code(b))
    }

    pub fn is_self_dual(&self) -> bool {
        self.components.iter().all(|c| c.is_self_dual())
    }

    /// `e1 i1 + e2 i2 + e3 i3` from the component idempotents.
    pub fn idempotent(&self) -> Result<SkewPoly<RElement>> {
        let e1 = self.components[0].idempotent()?;
        let e2 = self.components[1].idempotent()?;
        let e3 = self.components[2].idempotent()?;
        Ok(combine_polys(self.ext(), [&e1, &e2, &e3]))
    }

    /// Rows `e_i * (x^j g_i mod (x^n - 1))`, block by block.
    pub fn generator_matrix(&self) -> Vec<Vec<RElement>> {
        let ext = self.ext();
        let idem = ext.idempotents().as_array();
        let mut rows = Vec::new();
        for (code, e) in self.components.iter().zip(idem) {
            for row in code.generator_matrix() {
                rows.push(row.iter().map(|&c| ext.mul(e, ext.scalar(c))).collect());
            }
        }
        rows
    }

    /// Generator matrix of the Gray image in blockwise layout: component
    /// `i`'s generator matrix placed in the `i`-th block of `n` columns.
    pub fn gray_image(&self) -> Matrix {
        let n = self.n;
        let mut rows = Vec::new();
        for (block, code) in self.components.iter().enumerate() {
            for row in code.generator_matrix() {
                let mut full = vec![Fe::ZERO; 3 * n];
                full[block * n..(block + 1) * n].copy_from_slice(&row);
                rows.push(full);
            }
        }
        rows
    }

    /// Skew quasi-shift on a Gray-image vector: `sigma` on each block.
    pub fn gray_quasi_shift(&self, v: &[Fe]) -> Vec<Fe> {
        let ring = self.fq_ring();
        v.chunks(self.n).flat_map(|block| ring.skew_shift(block)).collect()
    }
}
