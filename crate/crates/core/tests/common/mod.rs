//! Independent reference implementations shared by the integration tests.
#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use skewcode::{build_field, Fe, FieldCtx, FqSkewRing, RElement, SkewPoly, SkewRing};

pub fn f9() -> FieldCtx {
    build_field(3, 2, Some(&[1, 0, 1])).unwrap()
}

pub fn f3() -> FieldCtx {
    build_field(3, 1, None).unwrap()
}

pub fn ring(f: &FieldCtx, t: u32) -> FqSkewRing {
    SkewRing::new(f.clone(), f.aut(t).unwrap()).unwrap()
}

pub fn poly(f: &FieldCtx, c: &[u32]) -> SkewPoly<Fe> {
    SkewPoly::new(c.iter().map(|&v| f.elem(v).unwrap()).collect())
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_fe(f: &FieldCtx, rng: &mut ChaCha8Rng) -> Fe {
    f.elem(rng.gen_range(0..f.q())).unwrap()
}

pub fn random_r(f: &FieldCtx, rng: &mut ChaCha8Rng) -> RElement {
    RElement::new(random_fe(f, rng), random_fe(f, rng), random_fe(f, rng))
}

pub fn random_coeffs<E>(rng: &mut ChaCha8Rng, max_deg: usize, mut gen: impl FnMut(&mut ChaCha8Rng) -> E) -> Vec<E> {
    let len = rng.gen_range(0..=max_deg + 1);
    (0..len).map(|_| gen(rng)).collect()
}

/// `x^(p^k)` by repeated multiplication.
pub fn frob(f: &FieldCtx, x: Fe, k: u32) -> Fe {
    let mut e = 1u64;
    for _ in 0..k {
        e *= f.p() as u64;
    }
    let mut acc = f.one();
    for _ in 0..e {
        acc = f.mul(acc, x);
    }
    acc
}

/// Product in `R` from the expansion of `(a1 + v b1 + v^2 c1)(a2 + v b2 + v^2 c2)`
/// with `v^3 = v`, `v^4 = v^2`.
pub fn r_mul(f: &FieldCtx, x: RElement, y: RElement) -> RElement {
    let m = |a, b| f.mul(a, b);
    let s = |xs: &[Fe]| xs.iter().fold(f.zero(), |acc, &t| f.add(acc, t));
    RElement::new(
        m(x.a, y.a),
        s(&[m(x.a, y.b), m(x.b, y.a), m(x.b, y.c), m(x.c, y.b)]),
        s(&[m(x.a, y.c), m(x.c, y.a), m(x.b, y.b), m(x.c, y.c)]),
    )
}

pub fn r_add(f: &FieldCtx, x: RElement, y: RElement) -> RElement {
    RElement::new(f.add(x.a, y.a), f.add(x.b, y.b), f.add(x.c, y.c))
}

/// Gray image of one element: `(a, a + b + c, a - b + c)`.
pub fn gray(f: &FieldCtx, x: RElement) -> [Fe; 3] {
    [x.a, f.add(f.add(x.a, x.b), x.c), f.add(f.sub(x.a, x.b), x.c)]
}

/// `sum a_i theta^i(b_j) x^(i+j)` over `F_q`.
pub fn naive_skew_mul(f: &FieldCtx, t: u32, a: &[Fe], b: &[Fe]) -> Vec<Fe> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        let k = (t as usize * i % f.m() as usize) as u32;
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(ai, frob(f, bj, k)));
        }
    }
    trim(out, f.zero())
}

/// Same over `R`, with the twist applied componentwise.
pub fn naive_skew_mul_r(f: &FieldCtx, t: u32, a: &[RElement], b: &[RElement]) -> Vec<RElement> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![RElement::ZERO; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        let k = (t as usize * i % f.m() as usize) as u32;
        for (j, &bj) in b.iter().enumerate() {
            let tb = RElement::new(frob(f, bj.a, k), frob(f, bj.b, k), frob(f, bj.c, k));
            out[i + j] = r_add(f, out[i + j], r_mul(f, ai, tb));
        }
    }
    trim(out, RElement::ZERO)
}

pub fn trim<E: PartialEq + Copy>(mut v: Vec<E>, zero: E) -> Vec<E> {
    while v.last() == Some(&zero) {
        v.pop();
    }
    v
}

/// Every vector of `F_q^len`.
pub fn all_vectors(f: &FieldCtx, len: usize) -> Vec<Vec<Fe>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * f.q() as usize);
        for v in &out {
            for x in f.elements() {
                let mut w = v.clone();
                w.push(x);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

pub fn dot(f: &FieldCtx, x: &[Fe], y: &[Fe]) -> Fe {
    x.iter().zip(y).fold(f.zero(), |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
}

/// Closure of `{0}` under `w -> w + r * gen` for every `r` in `R` and every
/// generator, i.e. the `R`-submodule spanned by `gens`.
pub fn r_span(f: &FieldCtx, gens: &[Vec<RElement>]) -> std::collections::BTreeSet<Vec<RElement>> {
    let n = gens.first().map_or(0, |g| g.len());
    let ring_elems: Vec<RElement> = {
        let mut v = Vec::new();
        for a in f.elements() {
            for b in f.elements() {
                for c in f.elements() {
                    v.push(RElement::new(a, b, c));
                }
            }
        }
        v
    };
    let mut span = std::collections::BTreeSet::from([vec![RElement::ZERO; n]]);
    for g in gens {
        let multiples: Vec<Vec<RElement>> = ring_elems
            .iter()
            .map(|&r| g.iter().map(|&x| r_mul(f, r, x)).collect())
            .collect();
        let mut next = std::collections::BTreeSet::new();
        for s in &span {
            for m in &multiples {
                next.insert(s.iter().zip(m).map(|(&a, &b)| r_add(f, a, b)).collect());
            }
        }
        span = next;
    }
    span
}

/// Monic polynomials of degree `d` over the prime field `F_p`, as `u32` lists.
pub fn monic_prime_polys(p: u32, d: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..d {
        let mut next = Vec::new();
        for v in &out {
            for c in 0..p {
                let mut w = v.clone();
                w.push(c);
                next.push(w);
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|mut v| {
            v.push(1);
            v
        })
        .collect()
}

/// Remainder of `a` by monic `b` in `F_p[x]` on plain integers.
pub fn prime_rem(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut r: Vec<u32> = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        for (j, &bj) in b.iter().enumerate() {
            r[shift + j] = (r[shift + j] + p * p - c * bj % p) % p;
        }
        r.pop();
    }
    trim(r, 0)
}
