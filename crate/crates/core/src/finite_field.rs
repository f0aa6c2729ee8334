//! Arithmetic in `F_q`, `q = p^m`, with elements in polynomial basis.
//!
//! An element is stored as its canonical integer encoding `sum c_i p^i` where
//! `c_0 + c_1 z + ... + c_{m-1} z^{m-1}` is its residue modulo the field's
//! defining polynomial. Multiplication goes through discrete log tables built
//! once per field, so a [`FieldCtx`] is meant to be created once and cloned
//! cheaply (it is reference counted).

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest field order accepted; log and Frobenius tables are dense.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

/// Fields up to this order also get a dense addition table.
const ADD_TABLE_LIMIT: u32 = 1024;

/// Element of `F_q`, identified by its base-`p` encoding in `[0, q)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fe(u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The automorphism power `theta_t : a -> a^(p^t)` of `F_{p^m}`, `t | m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AutPower {
    t: u32,
    order: u32,
}

impl AutPower {
    pub fn new(t: u32, m: u32) -> Result<Self> {
        if t == 0 || m == 0 || !m.is_multiple_of(t) {
            return Err(Error::InvalidAutPower { t, m });
        }
        Ok(AutPower { t, order: m / t })
    }

    pub fn t(self) -> u32 {
        self.t
    }

    /// Order `m/t` of `theta_t` in the automorphism group.
    pub fn order(self) -> u32 {
        self.order
    }

    pub fn m(self) -> u32 {
        self.t * self.order
    }

    /// Frobenius exponent `k` such that `theta_t^i = (a -> a^(p^k))`.
    pub fn exponent_of_power(self, i: usize) -> u32 {
        ((self.t as u64 * i as u64) % self.m() as u64) as u32
    }
}

struct Tables {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    add: Option<Vec<u32>>,
    /// `frob[k][x] = x^(p^k)` for `k` in `0..m`.
    frob: Vec<Vec<u32>>,
}

/// Description of `F_{p^m}` together with its arithmetic tables.
#[derive(Clone)]
pub struct FieldCtx {
    inner: Arc<Tables>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.p())
            .field("m", &self.m())
            .field("modulus", &self.modulus())
            .finish()
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.p() == other.p() && self.modulus() == other.modulus())
    }
}

impl Eq for FieldCtx {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Remainder of `f` modulo the monic `g` over `F_p`; both low to high.
fn fp_poly_rem(p: u32, f: &[u32], g: &[u32]) -> Vec<u32> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    while r.len() > dg {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dg;
        if lead != 0 {
            for (j, &gj) in g.iter().enumerate() {
                let idx = shift + j;
                r[idx] = (r[idx] + p - (lead * gj) % p) % p;
            }
        }
        r.pop();
    }
    while r.last() == Some(&0) {
        r.pop();
    }
    r
}

/// Monic polynomials of degree `d` over `F_p`, ordered lexicographically on
/// their coefficients with the constant term compared first.
fn monic_polys(p: u32, d: usize) -> impl Iterator<Item = Vec<u32>> {
    let count = (p as u64).pow(d as u32);
    (0..count).map(move |mut idx| {
        let mut coeffs = vec![0u32; d + 1];
        for i in (0..d).rev() {
            coeffs[i] = (idx % p as u64) as u32;
            idx /= p as u64;
        }
        coeffs[d] = 1;
        coeffs
    })
}

/// Irreducibility over `F_p` by trial division against every monic
/// polynomial of degree at most `deg f / 2`.
pub fn is_irreducible_over_prime_field(p: u32, f: &[u32]) -> bool {
    let deg = match f.iter().rposition(|&c| c != 0) {
        Some(d) => d,
        None => return false,
    };
    if deg == 0 {
        return false;
    }
    let f = &f[..=deg];
    (1..=deg / 2).all(|d| monic_polys(p, d).all(|g| !fp_poly_rem(p, f, &g).is_empty()))
}

/// Lexicographically least monic irreducible of degree `m` over `F_p`
/// (coefficients compared constant term first).
pub fn default_modulus(p: u32, m: u32) -> Vec<u32> {
    monic_polys(p, m as usize)
        .find(|f| is_irreducible_over_prime_field(p, f))
        .expect("irreducible polynomials exist in every degree")
}

/// Builds `F_{p^m}`. Without an explicit modulus the default from
/// [`default_modulus`] is used.
pub fn build_field(p: u64, m: u32, modulus: Option<&[u32]>) -> Result<FieldCtx> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p == 2 {
        return Err(Error::EvenCharacteristic);
    }
    if m == 0 {
        return Err(Error::DegreeMismatch { expected: 1, found: 0 });
    }
    let q = (p as u128).checked_pow(m);
    let q = match q {
        Some(q) if q <= MAX_FIELD_ORDER as u128 => q as u32,
        _ => return Err(Error::FieldTooLarge(p.saturating_pow(m))),
    };
    let p = p as u32;
    let modulus = match modulus {
        Some(f) => {
            let mut f = f.to_vec();
            while f.len() > 1 && f.last() == Some(&0) {
                f.pop();
            }
            if f.iter().any(|&c| c >= p) {
                return Err(Error::Parse(format!(
                    "modulus coefficient out of range for p = {p}"
                )));
            }
            if f.len() != m as usize + 1 {
                return Err(Error::DegreeMismatch {
                    expected: m as usize,
                    found: f.len().saturating_sub(1),
                });
            }
            if f[m as usize] != 1 {
                return Err(Error::NonMonicModulus(f));
            }
            if !is_irreducible_over_prime_field(p, &f) {
                return Err(Error::ReducibleModulus(f));
            }
            f
        }
        None => default_modulus(p, m),
    };
    Ok(FieldCtx {
        inner: Arc::new(Tables::new(p, m, q, modulus)),
    })
}

impl Tables {
    fn new(p: u32, m: u32, q: u32, modulus: Vec<u32>) -> Self {
        let mu = m as usize;
        let digits = |mut x: u32| -> Vec<u32> {
            let mut d = vec![0u32; mu];
            for c in d.iter_mut() {
                *c = x % p;
                x /= p;
            }
            d
        };
        let encode = |d: &[u32]| -> u32 { d.iter().rev().fold(0, |acc, &c| acc * p + c) };
        let slow_mul = |a: u32, b: u32| -> u32 {
            let (da, db) = (digits(a), digits(b));
            let mut prod = vec![0u32; 2 * mu - 1];
            for (i, &x) in da.iter().enumerate() {
                for (j, &y) in db.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            let mut r = fp_poly_rem(p, &prod, &modulus);
            r.resize(mu, 0);
            encode(&r)
        };

        // search a primitive element, then fill the log tables from it
        let mut exp = Vec::with_capacity(q as usize - 1);
        for g in 1..q {
            exp.clear();
            let mut x = 1u32;
            loop {
                exp.push(x);
                x = slow_mul(x, g);
                if x == 1 {
                    break;
                }
            }
            if exp.len() == q as usize - 1 {
                break;
            }
        }
        debug_assert_eq!(exp.len(), q as usize - 1);
        let mut log = vec![0u32; q as usize];
        for (i, &x) in exp.iter().enumerate() {
            log[x as usize] = i as u32;
        }

        let neg: Vec<u32> = (0..q)
            .map(|x| encode(&digits(x).iter().map(|&c| (p - c) % p).collect::<Vec<_>>()))
            .collect();
        let add_slow = |a: u32, b: u32| -> u32 {
            let (da, db) = (digits(a), digits(b));
            encode(&da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect::<Vec<_>>())
        };
        let add = (q <= ADD_TABLE_LIMIT).then(|| {
            let mut t = vec![0u32; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = add_slow(a, b);
                }
            }
            t
        });

        let order = q - 1;
        let pow_p = |x: u32| -> u32 {
            if x == 0 {
                0
            } else {
                let l = (log[x as usize] as u64 * p as u64 % order as u64) as usize;
                exp[l]
            }
        };
        let mut frob = vec![(0..q).collect::<Vec<u32>>()];
        for k in 1..mu {
            let next = frob[k - 1].iter().map(|&x| pow_p(x)).collect();
            frob.push(next);
        }

        Tables {
            p,
            m,
            q,
            modulus,
            exp,
            log,
            neg,
            add,
            frob,
        }
    }
}

impl FieldCtx {
    pub fn p(&self) -> u32 {
        self.inner.p
    }

    pub fn m(&self) -> u32 {
        self.inner.m
    }

    pub fn q(&self) -> u32 {
        self.inner.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    pub fn zero(&self) -> Fe {
        Fe::ZERO
    }

    pub fn one(&self) -> Fe {
        Fe::ONE
    }

    /// Checked conversion from the canonical encoding.
    pub fn elem(&self, value: u32) -> Result<Fe> {
        if value < self.q() {
            Ok(Fe(value))
        } else {
            Err(Error::Parse(format!(
                "element {value} out of range for q = {}",
                self.q()
            )))
        }
    }

    /// All `q` elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.q()).map(Fe)
    }

    /// Image of an integer under `Z -> F_p -> F_q`.
    pub fn from_int(&self, n: i64) -> Fe {
        Fe(n.rem_euclid(self.p() as i64) as u32)
    }

    /// The generator `z` of the polynomial basis (equal to 1 reduced mod
    /// the modulus when `m = 1`).
    pub fn generator(&self) -> Fe {
        if self.m() == 1 {
            self.from_int(-(self.modulus()[0] as i64))
        } else {
            Fe(self.p())
        }
    }

    /// Coefficients `c_0..c_{m-1}` of `x` in the polynomial basis.
    pub fn digits(&self, x: Fe) -> Vec<u32> {
        let p = self.p();
        let mut v = x.0;
        (0..self.m())
            .map(|_| {
                let c = v % p;
                v /= p;
                c
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u32]) -> Result<Fe> {
        let p = self.p();
        if digits.len() > self.m() as usize || digits.iter().any(|&c| c >= p) {
            return Err(Error::Parse(format!("invalid digit vector {digits:?}")));
        }
        Ok(Fe(digits.iter().rev().fold(0, |acc, &c| acc * p + c)))
    }

    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        let t = &*self.inner;
        if let Some(add) = &t.add {
            return Fe(add[(a.0 * t.q + b.0) as usize]);
        }
        let p = t.p;
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0u32, 1u32);
        while x > 0 || y > 0 {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place = place.wrapping_mul(p);
        }
        Fe(out)
    }

    pub fn neg(&self, a: Fe) -> Fe {
        Fe(self.inner.neg[a.0 as usize])
    }

    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.0 == 0 || b.0 == 0 {
            return Fe::ZERO;
        }
        let t = &*self.inner;
        let l = t.log[a.0 as usize] as usize + t.log[b.0 as usize] as usize;
        let order = t.exp.len();
        Fe(t.exp[if l >= order { l - order } else { l }])
    }

    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.0 == 0 {
            return Err(Error::ZeroInverse);
        }
        let t = &*self.inner;
        let order = t.exp.len();
        let l = t.log[a.0 as usize] as usize;
        Ok(Fe(t.exp[(order - l) % order]))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Fe, e: u64) -> Fe {
        if e == 0 {
            return Fe::ONE;
        }
        if a.0 == 0 {
            return Fe::ZERO;
        }
        let t = &*self.inner;
        let order = t.exp.len() as u64;
        let l = (t.log[a.0 as usize] as u64 * (e % order)) % order;
        Fe(t.exp[l as usize])
    }

    /// `x -> x^(p^k)`; `k` is taken modulo `m`.
    pub fn frobenius_pow(&self, x: Fe, k: u32) -> Fe {
        let t = &*self.inner;
        Fe(t.frob[(k % t.m) as usize][x.0 as usize])
    }

    /// `theta_t(x) = x^(p^t)`.
    pub fn frobenius(&self, aut: AutPower, x: Fe) -> Fe {
        self.frobenius_pow(x, aut.t())
    }

    pub fn aut(&self, t: u32) -> Result<AutPower> {
        AutPower::new(t, self.m())
    }

    /// The subfield `F_{p^t}` fixed by `theta_t`, in encoding order.
    pub fn fixed_subfield(&self, aut: AutPower) -> Vec<Fe> {
        self.elements()
            .filter(|&x| self.frobenius(aut, x) == x)
            .collect()
    }
}
