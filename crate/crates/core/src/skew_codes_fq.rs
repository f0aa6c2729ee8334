//! Skew cyclic codes over `F_q`: left submodules of
//! `F_q[x; theta_t]/<x^n - 1>` generated by a monic right divisor `g` of
//! `x^n - 1`.

use crate::divisor_search::{check_gcd_condition, commutative_ring, gcd};
use crate::error::{Error, Result};
use crate::finite_field::Fe;
use crate::linalg::{self, Matrix};
use crate::skew_polynomial::{FqSkewRing, SkewPoly};

#[derive(Clone, Debug, PartialEq)]
pub struct SkewCyclicCodeFq {
    ring: FqSkewRing,
    n: usize,
    g: SkewPoly<Fe>,
    /// Cofactor with `x^n - 1 = h g`.
    h: SkewPoly<Fe>,
}

impl SkewCyclicCodeFq {
    pub fn new(ring: &FqSkewRing, n: usize, g: SkewPoly<Fe>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroLength);
        }
        if !ring.is_monic(&g) {
            return Err(Error::NotMonic);
        }
        let (h, r) = ring.right_divide(&ring.x_n_minus_one(n), &g)?;
        if !r.is_zero() {
            return Err(Error::NotRightDivisor { n });
        }
        Ok(SkewCyclicCodeFq {
            ring: ring.clone(),
            n,
            g,
            h,
        })
    }

    /// The whole space `F_q^n`.
    pub fn full(ring: &FqSkewRing, n: usize) -> Result<Self> {
        Self::new(ring, n, ring.one())
    }

    /// The zero code, generated by `x^n - 1`.
    pub fn zero(ring: &FqSkewRing, n: usize) -> Result<Self> {
        Self::new(ring, n, ring.x_n_minus_one(n))
    }

    pub fn ring(&self) -> &FqSkewRing {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn generator(&self) -> &SkewPoly<Fe> {
        &self.g
    }

    pub fn cofactor(&self) -> &SkewPoly<Fe> {
        &self.h
    }

    /// `n - deg g`.
    pub fn dimension(&self) -> usize {
        self.n - self.g.degree().unwrap()
    }

    pub fn is_zero_code(&self) -> bool {
        self.dimension() == 0
    }

    /// `log_q |C|`; the size itself is `q^k`.
    pub fn size(&self) -> Option<u128> {
        (self.ring.field().q() as u128).checked_pow(self.dimension() as u32)
    }

    /// Codeword of `msg g`; the message must have degree below `k`.
    pub fn encode(&self, msg: &SkewPoly<Fe>) -> Result<Vec<Fe>> {
        let k = self.dimension();
        if let Some(d) = msg.degree() {
            if d >= k {
                return Err(Error::DegreeTooLarge { degree: d, k });
            }
        }
        Ok(self.ring.mul_mod(msg, &self.g, self.n).to_word(self.n))
    }

    /// Membership: `g` right-divides the word polynomial.
    pub fn contains(&self, word: &[Fe]) -> Result<bool> {
        if word.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: word.len(),
            });
        }
        self.ring.is_right_divisor(&self.g, &SkewPoly::from_word(word))
    }

    pub fn skew_shift(&self, word: &[Fe]) -> Vec<Fe> {
        self.ring.skew_shift(word)
    }

    /// Rows `x^j g mod (x^n - 1)`, `j = 0..k`.
    pub fn generator_matrix(&self) -> Matrix {
        let mut row = self.g.clone();
        let x = self.ring.x_pow(1);
        (0..self.dimension())
            .map(|_| {
                let w = row.to_word(self.n);
                row = self.ring.mul_mod(&x, &row, self.n);
                w
            })
            .collect()
    }

    /// Twisted reciprocal of the cofactor:
    /// `hbar_i = theta^i(h_{n-r-i})`, `r = deg g`.
    pub fn reciprocal_cofactor(&self) -> SkewPoly<Fe> {
        let dh = self.h.degree().unwrap();
        SkewPoly::new(
            (0..=dh)
                .map(|i| self.ring.theta_pow(self.h.coeff(dh - i), i))
                .collect(),
        )
    }

    /// Euclidean dual, generated by the monic normalization of
    /// [`reciprocal_cofactor`](Self::reciprocal_cofactor).
    pub fn dual(&self) -> Self {
        let hbar = self.reciprocal_cofactor();
        let lead_inv = self.ring.field().inv(hbar.leading().unwrap()).unwrap();
        let g = self.ring.scale_left(lead_inv, &hbar);
        Self::new(&self.ring, self.n, g).expect("reciprocal cofactor right-divides x^n - 1")
    }

    /// Monic generator of least degree of the module spanned by this code.
    pub fn canonical_generator(&self) -> SkewPoly<Fe> {
        canonical_generator(&self.ring, self.n, std::slice::from_ref(&self.g))
    }

    /// Same module (checked through the canonical generators).
    pub fn same_code(&self, other: &Self) -> bool {
        self.n == other.n
            && self.ring == other.ring
            && self.canonical_generator() == other.canonical_generator()
    }

    pub fn is_self_dual(&self) -> bool {
        2 * self.dimension() == self.n && self.same_code(&self.dual())
    }

    /// Idempotent generator `e` with `e^2 = e` and `<e> = <g>`.
    ///
    /// Both `g` and `h` lie in the commutative `F_{p^t}[x]` under the gcd
    /// conditions, and `x^n - 1` is squarefree there, so Bezout gives
    /// `a g + b h = 1` and `e = a g mod (x^n - 1)`.
    pub fn idempotent(&self) -> Result<SkewPoly<Fe>> {
        let field = self.ring.field();
        check_gcd_condition(self.ring.aut(), self.n)?;
        if gcd(self.n as u64, field.q() as u64) != 1 {
            return Err(Error::NotCoprimeToQ {
                n: self.n,
                q: field.q() as u64,
            });
        }
        let comm = commutative_ring(field);
        let (a, _b, d) = extended_gcd(&comm, &self.g, &self.h);
        debug_assert_eq!(d, comm.one(), "g and h are coprime");
        Ok(comm.mul_mod(&a, &self.g, self.n))
    }
}

/// Extended Euclid in the commutative ring `comm`: returns `(a, b, d)` with
/// `a f + b g = d` and `d` monic (or zero).
pub fn extended_gcd(
    comm: &FqSkewRing,
    f: &SkewPoly<Fe>,
    g: &SkewPoly<Fe>,
) -> (SkewPoly<Fe>, SkewPoly<Fe>, SkewPoly<Fe>) {
    let (mut r0, mut r1) = (f.clone(), g.clone());
    let (mut a0, mut a1) = (comm.one(), SkewPoly::zero());
    let (mut b0, mut b1) = (SkewPoly::zero(), comm.one());
    while !r1.is_zero() {
        let (q, r) = comm.right_divide(&r0, &r1).expect("nonzero field divisor");
        let a2 = comm.sub(&a0, &comm.mul(&q, &a1));
        let b2 = comm.sub(&b0, &comm.mul(&q, &b1));
        r0 = std::mem::replace(&mut r1, r);
        a0 = std::mem::replace(&mut a1, a2);
        b0 = std::mem::replace(&mut b1, b2);
    }
    if let Some(lead) = r0.leading() {
        let inv = comm.field().inv(lead).unwrap();
        r0 = comm.scale_left(inv, &r0);
        a0 = comm.scale_left(inv, &a0);
        b0 = comm.scale_left(inv, &b0);
    }
    (a0, b0, r0)
}

/// The `F_q`-span of `x^i f mod (x^n - 1)` over all generators `f` and
/// `i < n`, as a basis in reduced echelon form on reversed coordinates (so the
/// pivot of each row is its leading degree).
pub fn module_basis(ring: &FqSkewRing, n: usize, generators: &[SkewPoly<Fe>]) -> Matrix {
    let x = ring.x_pow(1);
    let mut rows = Vec::new();
    for f in generators {
        let mut cur = ring.mod_ideal(f, n);
        for _ in 0..n {
            let mut w = cur.to_word(n);
            w.reverse();
            rows.push(w);
            cur = ring.mul_mod(&x, &cur, n);
        }
    }
    linalg::rref(ring.field(), &rows).0
}

/// Unique monic element of least degree in the left module generated by
/// `generators` in `F_q[x; theta]/<x^n - 1>`; `x^n - 1` for the zero module.
pub fn canonical_generator(ring: &FqSkewRing, n: usize, generators: &[SkewPoly<Fe>]) -> SkewPoly<Fe> {
    let basis = module_basis(ring, n, generators);
    match basis.last() {
        None => ring.x_n_minus_one(n),
        Some(row) => {
            let mut w = row.clone();
            w.reverse();
            SkewPoly::new(w)
        }
    }
}
