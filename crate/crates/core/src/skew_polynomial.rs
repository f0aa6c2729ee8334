//! Skew polynomial rings `S[x; theta_t]` over `S = F_q` or `S = R`.
//!
//! Multiplication follows `(a x^i)(b x^j) = a theta_t^i(b) x^{i+j}`. The twist
//! lives in [`SkewRing`]; a [`SkewPoly`] is just its normalized coefficient
//! list, so two polynomials can only be combined through the ring that owns
//! the twist.

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::extension_ring::{ExtRing, RElement};
use crate::finite_field::{AutPower, Fe, FieldCtx};

/// Coefficient ring of a skew polynomial ring. `Default` must be the zero
/// element.
pub trait CoeffRing: Clone + fmt::Debug + PartialEq {
    type Elem: Copy + Eq + Ord + Hash + Default + fmt::Debug + fmt::Display + Send + Sync;

    fn field(&self) -> &FieldCtx;
    fn one(&self) -> Self::Elem;
    fn add(&self, x: Self::Elem, y: Self::Elem) -> Self::Elem;
    fn neg(&self, x: Self::Elem) -> Self::Elem;
    fn mul(&self, x: Self::Elem, y: Self::Elem) -> Self::Elem;
    fn inv(&self, x: Self::Elem) -> Option<Self::Elem>;
    /// `x -> x^(p^k)` applied to every `F_q` coordinate.
    fn frobenius_pow(&self, x: Self::Elem, k: u32) -> Self::Elem;
    /// Structure map `F_q -> S`.
    fn embed(&self, x: Fe) -> Self::Elem;

    fn zero(&self) -> Self::Elem {
        Self::Elem::default()
    }

    fn sub(&self, x: Self::Elem, y: Self::Elem) -> Self::Elem {
        self.add(x, self.neg(y))
    }
}

impl CoeffRing for FieldCtx {
    type Elem = Fe;

    fn field(&self) -> &FieldCtx {
        self
    }
    fn one(&self) -> Fe {
        Fe::ONE
    }
    fn add(&self, x: Fe, y: Fe) -> Fe {
        FieldCtx::add(self, x, y)
    }
    fn neg(&self, x: Fe) -> Fe {
        FieldCtx::neg(self, x)
    }
    fn sub(&self, x: Fe, y: Fe) -> Fe {
        FieldCtx::sub(self, x, y)
    }
    fn mul(&self, x: Fe, y: Fe) -> Fe {
        FieldCtx::mul(self, x, y)
    }
    fn inv(&self, x: Fe) -> Option<Fe> {
        FieldCtx::inv(self, x).ok()
    }
    fn frobenius_pow(&self, x: Fe, k: u32) -> Fe {
        FieldCtx::frobenius_pow(self, x, k)
    }
    fn embed(&self, x: Fe) -> Fe {
        x
    }
}

impl CoeffRing for ExtRing {
    type Elem = RElement;

    fn field(&self) -> &FieldCtx {
        ExtRing::field(self)
    }
    fn one(&self) -> RElement {
        RElement::ONE
    }
    fn add(&self, x: RElement, y: RElement) -> RElement {
        ExtRing::add(self, x, y)
    }
    fn neg(&self, x: RElement) -> RElement {
        ExtRing::neg(self, x)
    }
    fn mul(&self, x: RElement, y: RElement) -> RElement {
        ExtRing::mul(self, x, y)
    }
    fn inv(&self, x: RElement) -> Option<RElement> {
        ExtRing::inv(self, x)
    }
    fn frobenius_pow(&self, x: RElement, k: u32) -> RElement {
        self.theta_pow(x, k)
    }
    fn embed(&self, x: Fe) -> RElement {
        self.scalar(x)
    }
}

/// Coefficients low to high, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewPoly<E> {
    coeffs: Vec<E>,
}

impl<E: Copy + Eq + Default> SkewPoly<E> {
    pub fn new(mut coeffs: Vec<E>) -> Self {
        while coeffs.last().is_some_and(|c| *c == E::default()) {
            coeffs.pop();
        }
        SkewPoly { coeffs }
    }

    pub fn zero() -> Self {
        SkewPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: E) -> Self {
        Self::new(vec![c])
    }

    /// `c x^d`.
    pub fn monomial(c: E, d: usize) -> Self {
        let mut coeffs = vec![E::default(); d + 1];
        coeffs[d] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> E {
        self.coeffs.get(i).copied().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<E> {
        self.coeffs.last().copied()
    }

    /// Coefficient vector padded (or required to fit) to length `n`.
    pub fn to_word(&self, n: usize) -> Vec<E> {
        let mut w = self.coeffs.clone();
        assert!(w.len() <= n, "polynomial of degree >= {n} does not fit a word of length {n}");
        w.resize(n, E::default());
        w
    }

    pub fn from_word(word: &[E]) -> Self {
        Self::new(word.to_vec())
    }
}

impl<E: Ord> SkewPoly<E> {
    /// Degree first, then coefficients compared from the constant term up.
    pub fn graded_cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

/// `S[x; theta_t]`.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewRing<R: CoeffRing> {
    base: R,
    aut: AutPower,
}

pub type FqSkewRing = SkewRing<FieldCtx>;
pub type RSkewRing = SkewRing<ExtRing>;

impl<R: CoeffRing> SkewRing<R> {
    pub fn new(base: R, aut: AutPower) -> Result<Self> {
        if aut.m() != base.field().m() {
            return Err(Error::InvalidAutPower {
                t: aut.t(),
                m: base.field().m(),
            });
        }
        Ok(SkewRing { base, aut })
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn aut(&self) -> AutPower {
        self.aut
    }

    pub fn field(&self) -> &FieldCtx {
        self.base.field()
    }

    /// `theta_t^i(c)`.
    pub fn theta_pow(&self, c: R::Elem, i: usize) -> R::Elem {
        let k = self.aut.exponent_of_power(i);
        if k == 0 {
            c
        } else {
            self.base.frobenius_pow(c, k)
        }
    }

    pub fn one(&self) -> SkewPoly<R::Elem> {
        SkewPoly::constant(self.base.one())
    }

    pub fn x_pow(&self, d: usize) -> SkewPoly<R::Elem> {
        SkewPoly::monomial(self.base.one(), d)
    }

    /// `x^n - 1`.
    pub fn x_n_minus_one(&self, n: usize) -> SkewPoly<R::Elem> {
        let mut coeffs = vec![R::Elem::default(); n + 1];
        coeffs[0] = self.base.neg(self.base.one());
        coeffs[n] = self.base.add(coeffs[n], self.base.one());
        SkewPoly::new(coeffs)
    }

    pub fn is_monic(&self, f: &SkewPoly<R::Elem>) -> bool {
        f.leading() == Some(self.base.one())
    }

    pub fn add(&self, f: &SkewPoly<R::Elem>, g: &SkewPoly<R::Elem>) -> SkewPoly<R::Elem> {
        let len = f.coeffs.len().max(g.coeffs.len());
        SkewPoly::new(
            (0..len)
                .map(|i| self.base.add(f.coeff(i), g.coeff(i)))
                .collect(),
        )
    }

    pub fn neg(&self, f: &SkewPoly<R::Elem>) -> SkewPoly<R::Elem> {
        SkewPoly::new(f.coeffs.iter().map(|&c| self.base.neg(c)).collect())
    }

    pub fn sub(&self, f: &SkewPoly<R::Elem>, g: &SkewPoly<R::Elem>) -> SkewPoly<R::Elem> {
        let len = f.coeffs.len().max(g.coeffs.len());
        SkewPoly::new(
            (0..len)
                .map(|i| self.base.sub(f.coeff(i), g.coeff(i)))
                .collect(),
        )
    }

    /// Left scalar multiple `c f`.
    pub fn scale_left(&self, c: R::Elem, f: &SkewPoly<R::Elem>) -> SkewPoly<R::Elem> {
        SkewPoly::new(f.coeffs.iter().map(|&a| self.base.mul(c, a)).collect())
    }

    pub fn mul(&self, f: &SkewPoly<R::Elem>, g: &SkewPoly<R::Elem>) -> SkewPoly<R::Elem> {
        if f.is_zero() || g.is_zero() {
            return SkewPoly::zero();
        }
        let mut out = vec![R::Elem::default(); f.coeffs.len() + g.coeffs.len() - 1];
        for (i, &a) in f.coeffs.iter().enumerate() {
            if a == R::Elem::default() {
                continue;
            }
            for (j, &b) in g.coeffs.iter().enumerate() {
                let term = self.base.mul(a, self.theta_pow(b, i));
                out[i + j] = self.base.add(out[i + j], term);
            }
        }
        SkewPoly::new(out)
    }

    /// Right division: returns `(q, r)` with `f = q g + r`, `deg r < deg g`.
    pub fn right_divide(
        &self,
        f: &SkewPoly<R::Elem>,
        g: &SkewPoly<R::Elem>,
    ) -> Result<(SkewPoly<R::Elem>, SkewPoly<R::Elem>)> {
        let dg = g.degree().ok_or(Error::ZeroDivisor)?;
        let lead = g.leading().unwrap();
        if self.base.inv(lead).is_none() {
            return Err(Error::NonUnitLeadingCoeff);
        }
        let mut r = f.coeffs.clone();
        let mut quot = vec![R::Elem::default(); r.len().saturating_sub(dg)];
        while r.len() > dg {
            let top = r.len() - 1;
            let c = r[top];
            if c != R::Elem::default() {
                let shift = top - dg;
                // c = q_shift * theta^shift(lead)
                let lead_inv = self.base.inv(self.theta_pow(lead, shift)).unwrap();
                let qc = self.base.mul(c, lead_inv);
                quot[shift] = qc;
                for (j, &gj) in g.coeffs.iter().enumerate() {
                    let term = self.base.mul(qc, self.theta_pow(gj, shift));
                    r[shift + j] = self.base.sub(r[shift + j], term);
                }
            }
            r.pop();
        }
        Ok((SkewPoly::new(quot), SkewPoly::new(r)))
    }

    /// Whether `g` is a right divisor of `f`, i.e. `f = h g` for some `h`.
    pub fn is_right_divisor(&self, g: &SkewPoly<R::Elem>, f: &SkewPoly<R::Elem>) -> Result<bool> {
        Ok(self.right_divide(f, g)?.1.is_zero())
    }

    /// Canonical residue of `f` in `S[x; theta]/<x^n - 1>` (degree < n).
    pub fn mod_ideal(&self, f: &SkewPoly<R::Elem>, n: usize) -> SkewPoly<R::Elem> {
        assert!(n >= 1, "modulus x^n - 1 needs n >= 1");
        if f.coeffs.len() <= n {
            return f.clone();
        }
        self.right_divide(f, &self.x_n_minus_one(n))
            .expect("x^n - 1 is monic")
            .1
    }

    pub fn mul_mod(
        &self,
        f: &SkewPoly<R::Elem>,
        g: &SkewPoly<R::Elem>,
        n: usize,
    ) -> SkewPoly<R::Elem> {
        self.mod_ideal(&self.mul(f, g), n)
    }

    /// Skew cyclic shift `(theta(c_{n-1}), theta(c_0), ..., theta(c_{n-2}))`,
    /// which is `x c(x) mod (x^n - 1)` on coefficient vectors.
    pub fn skew_shift(&self, word: &[R::Elem]) -> Vec<R::Elem> {
        let n = word.len();
        (0..n)
            .map(|i| self.theta_pow(word[(i + n - 1) % n], 1))
            .collect()
    }

    /// Ordered product of a list of factors.
    pub fn product<'a, I>(&self, factors: I) -> SkewPoly<R::Elem>
    where
        I: IntoIterator<Item = &'a SkewPoly<R::Elem>>,
        R::Elem: 'a,
    {
        factors
            .into_iter()
            .fold(self.one(), |acc, f| self.mul(&acc, f))
    }
}
