//! The ring `R = F_q + vF_q + v^2F_q` with `v^3 = v`.
//!
//! `R` is isomorphic to `F_q^3` through `a + vb + v^2c -> (a, a+b+c, a-b+c)`,
//! which is at the same time the Gray map. The orthogonal idempotents
//! `1 - v^2`, `(v^2+v)/2`, `(v^2-v)/2` realize the inverse.

use std::fmt;

use crate::finite_field::{AutPower, Fe, FieldCtx};

/// `a + vb + v^2c`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RElement {
    pub a: Fe,
    pub b: Fe,
    pub c: Fe,
}

impl RElement {
    pub const ZERO: RElement = RElement {
        a: Fe::ZERO,
        b: Fe::ZERO,
        c: Fe::ZERO,
    };
    pub const ONE: RElement = RElement {
        a: Fe::ONE,
        b: Fe::ZERO,
        c: Fe::ZERO,
    };
    pub const V: RElement = RElement {
        a: Fe::ZERO,
        b: Fe::ONE,
        c: Fe::ZERO,
    };
    pub const V2: RElement = RElement {
        a: Fe::ZERO,
        b: Fe::ZERO,
        c: Fe::ONE,
    };

    pub fn new(a: Fe, b: Fe, c: Fe) -> Self {
        RElement { a, b, c }
    }

    pub fn is_zero(self) -> bool {
        self == Self::ZERO
    }
}

impl fmt::Display for RElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.a, self.b, self.c)
    }
}

/// `e1 = 1 - v^2`, `e2 = (v^2 + v)/2`, `e3 = (v^2 - v)/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdempotentTriple {
    pub e1: RElement,
    pub e2: RElement,
    pub e3: RElement,
}

impl IdempotentTriple {
    pub fn as_array(&self) -> [RElement; 3] {
        [self.e1, self.e2, self.e3]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtRing {
    field: FieldCtx,
    half: Fe,
}

impl ExtRing {
    pub fn new(field: FieldCtx) -> Self {
        // odd characteristic is a FieldCtx invariant
        let half = field.inv(field.from_int(2)).expect("2 is invertible in odd characteristic");
        ExtRing { field, half }
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    /// `2^{-1}`, which is `(p+1)/2` reduced into `F_p`.
    pub fn half(&self) -> Fe {
        self.half
    }

    /// Diagonal embedding `F_q -> R`, `x -> x + v0 + v^2 0`.
    pub fn scalar(&self, x: Fe) -> RElement {
        RElement::new(x, Fe::ZERO, Fe::ZERO)
    }

    pub fn add(&self, x: RElement, y: RElement) -> RElement {
        let f = &self.field;
        RElement::new(f.add(x.a, y.a), f.add(x.b, y.b), f.add(x.c, y.c))
    }

    pub fn neg(&self, x: RElement) -> RElement {
        let f = &self.field;
        RElement::new(f.neg(x.a), f.neg(x.b), f.neg(x.c))
    }

    pub fn sub(&self, x: RElement, y: RElement) -> RElement {
        self.add(x, self.neg(y))
    }

    /// Product reduced with `v^3 = v`, `v^4 = v^2`:
    /// `a1a2 + v(a1b2 + a2b1 + b1c2 + b2c1) + v^2(a1c2 + a2c1 + b1b2 + c1c2)`.
    pub fn mul(&self, x: RElement, y: RElement) -> RElement {
        let f = &self.field;
        let m = |u, w| f.mul(u, w);
        let a = m(x.a, y.a);
        let b = [m(x.a, y.b), m(y.a, x.b), m(x.b, y.c), m(y.b, x.c)]
            .into_iter()
            .fold(Fe::ZERO, |s, t| f.add(s, t));
        let c = [m(x.a, y.c), m(y.a, x.c), m(x.b, y.b), m(x.c, y.c)]
            .into_iter()
            .fold(Fe::ZERO, |s, t| f.add(s, t));
        RElement::new(a, b, c)
    }

    /// `s * x` for `s` in `F_q`.
    pub fn scale(&self, s: Fe, x: RElement) -> RElement {
        let f = &self.field;
        RElement::new(f.mul(s, x.a), f.mul(s, x.b), f.mul(s, x.c))
    }

    pub fn idempotents(&self) -> IdempotentTriple {
        let f = &self.field;
        let h = self.half;
        IdempotentTriple {
            e1: RElement::new(Fe::ONE, Fe::ZERO, f.neg(Fe::ONE)),
            e2: RElement::new(Fe::ZERO, h, h),
            e3: RElement::new(Fe::ZERO, f.neg(h), h),
        }
    }

    /// `(a, a+b+c, a-b+c)`.
    pub fn crt_split(&self, x: RElement) -> [Fe; 3] {
        let f = &self.field;
        let ac = f.add(x.a, x.c);
        [x.a, f.add(ac, x.b), f.sub(ac, x.b)]
    }

    /// Inverse of [`ExtRing::crt_split`]: `e1 x1 + e2 x2 + e3 x3`.
    pub fn crt_combine(&self, parts: [Fe; 3]) -> RElement {
        let f = &self.field;
        let [x1, x2, x3] = parts;
        let b = f.mul(self.half, f.sub(x2, x3));
        let c = f.sub(f.mul(self.half, f.add(x2, x3)), x1);
        RElement::new(x1, b, c)
    }

    /// Gray map of one coordinate; shares the CRT split.
    pub fn gray_map(&self, x: RElement) -> [Fe; 3] {
        self.crt_split(x)
    }

    pub fn lee_weight(&self, x: RElement) -> usize {
        self.gray_map(x).iter().filter(|y| !y.is_zero()).count()
    }

    /// Componentwise `a -> a^(p^t)`.
    pub fn theta(&self, aut: AutPower, x: RElement) -> RElement {
        self.theta_pow(x, aut.t())
    }

    /// Componentwise `a -> a^(p^k)`.
    pub fn theta_pow(&self, x: RElement, k: u32) -> RElement {
        let f = &self.field;
        RElement::new(
            f.frobenius_pow(x.a, k),
            f.frobenius_pow(x.b, k),
            f.frobenius_pow(x.c, k),
        )
    }

    /// A unit lies outside the maximal ideals `<v>`, `<v-1>`, `<v+1>`,
    /// i.e. every CRT component is nonzero.
    pub fn is_unit(&self, x: RElement) -> bool {
        self.crt_split(x).iter().all(|y| !y.is_zero())
    }

    pub fn inv(&self, x: RElement) -> Option<RElement> {
        let [x1, x2, x3] = self.crt_split(x);
        let f = &self.field;
        Some(self.crt_combine([f.inv(x1).ok()?, f.inv(x2).ok()?, f.inv(x3).ok()?]))
    }

    /// All `q^3` elements.
    pub fn elements(&self) -> impl Iterator<Item = RElement> + '_ {
        let q = self.field.q();
        (0..q * q * q).map(move |i| {
            RElement::new(
                self.field.elem(i % q).unwrap(),
                self.field.elem(i / q % q).unwrap(),
                self.field.elem(i / (q * q)).unwrap(),
            )
        })
    }

    /// Gray image of a word in blockwise layout `(a | a+b+c | a-b+c)`.
    pub fn gray_vector(&self, word: &[RElement]) -> Vec<Fe> {
        let n = word.len();
        let mut out = vec![Fe::ZERO; 3 * n];
        for (i, &x) in word.iter().enumerate() {
            for (j, y) in self.gray_map(x).into_iter().enumerate() {
                out[j * n + i] = y;
            }
        }
        out
    }

    /// Gray image of a word with the three images of each coordinate kept
    /// adjacent: `(phi(x_0), phi(x_1), ...)`.
    pub fn gray_vector_interleaved(&self, word: &[RElement]) -> Vec<Fe> {
        word.iter().flat_map(|&x| self.gray_map(x)).collect()
    }

    pub fn lee_weight_vector(&self, word: &[RElement]) -> usize {
        word.iter().map(|&x| self.lee_weight(x)).sum()
    }

    /// Euclidean inner product `sum x_i y_i` over `R`.
    pub fn inner_product(&self, x: &[RElement], y: &[RElement]) -> RElement {
        x.iter()
            .zip(y)
            .fold(RElement::ZERO, |acc, (&u, &w)| self.add(acc, self.mul(u, w)))
    }
}

/// Permutation taking the interleaved Gray layout to the blockwise one:
/// entry `i` of the interleaved vector moves to position `perm[i]`.
pub fn interleaved_to_blockwise(n: usize) -> Vec<usize> {
    (0..3 * n).map(|i| (i % 3) * n + i / 3).collect()
}
