//! Acceptance checks. Runs without the libtest harness and prints one
//! `PASS`/`FAIL` line per criterion.

mod common;

use std::collections::{BTreeSet, HashSet};
use std::process::ExitCode;
use std::time::Instant;

use rand::Rng;

use common::*;
use skewcode::analysis::{self, DEFAULT_ENUMERATION_CAP};
use skewcode::divisor_search::{self, DEFAULT_DIVISOR_CAP};
use skewcode::extension_ring::ExtRing;
use skewcode::linalg;
use skewcode::skew_codes_fq::{canonical_generator, module_basis};
use skewcode::skew_codes_r::combine_words;
use skewcode::{Fe, FieldCtx, FqSkewRing, RElement, RSkewCode, SkewCyclicCodeFq, SkewPoly, SkewRing};

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err(e: skewcode::Error) -> String {
    e.to_string()
}

fn factorization_identity() -> Check {
    let f = f9();
    let ring = ring(&f, 1);
    let factors = [poly(&f, &[1, 1]), poly(&f, &[2, 1]), poly(&f, &[3, 1]), poly(&f, &[6, 1])];
    let product = ring.product(factors.iter());
    let target = ring.x_n_minus_one(4);
    let naive = factors.iter().fold(vec![f.one()], |acc, g| naive_skew_mul(&f, 1, &acc, g.coeffs()));
    ensure!(naive == product.coeffs(), "library product differs from the reference product");
    if product != target {
        let orders = permutations(4);
        let any_order = orders
            .iter()
            .any(|o| ring.product(o.iter().map(|&i| &factors[i])) == target);
        let comm = divisor_search::commutative_ring(&f);
        let commutative = comm.product(factors.iter()) == target;
        return Err(format!(
            "product is {} (not x^4 - 1); x^4 - 1 reached by some order of the factors: {any_order}; \
             by the commutative product in F_9[x]: {commutative}",
            skewcode::text::poly_symbolic(&f, &product)
        ));
    }
    let mut rev = factors.clone();
    rev.reverse();
    ensure!(ring.product(rev.iter()) == target, "reversed order differs");
    Ok("(x+1)(x+2)(x+a)(x+2a) = x^4 - 1 over F_9[x; theta_1]".into())
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..k {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

fn example_length_four() -> Check {
    let f = f9();
    let ring = ring(&f, 1);
    let g = poly(&f, &[6, 1]);
    let comp = SkewCyclicCodeFq::new(&ring, 4, g.clone()).map_err(err)?;
    let params = analysis::fq_params(&comp, DEFAULT_ENUMERATION_CAP).map_err(err)?;
    ensure!(params.to_string() == "[4, 3, 2]", "component {params}");
    let code = RSkewCode::from_generators(&ring, 4, [g.clone(), g.clone(), g.clone()]).map_err(err)?;
    ensure!(code.size() == Some(9u128.pow(9)), "|C| = {:?}", code.size());
    let lifted: Vec<RElement> = g.coeffs().iter().map(|&c| RElement::new(c, f.zero(), f.zero())).collect();
    ensure!(code.generator().coeffs() == lifted, "combined generator {:?}", code.generator());

    // formula path: min of component distances
    let formula = analysis::gray_params(&code, DEFAULT_ENUMERATION_CAP).map_err(err)?;
    ensure!(formula.to_string() == "[12, 9, 2]", "gray params {formula}");

    // enumeration path: every codeword of each component embedded in R^4,
    // mapped through the Gray map, with the weight counted there
    let ext = code.ext().clone();
    let zero = vec![f.zero(); 4];
    let mut direct: Option<usize> = None;
    let mut visited = 0u64;
    for (i, c) in code.components().iter().enumerate() {
        let words = linalg::span_vectors(&f, &c.generator_matrix(), DEFAULT_ENUMERATION_CAP).map_err(err)?;
        ensure!(words.len() == 729, "component {} has {} words", i + 1, words.len());
        for w in words {
            let mut parts = [zero.as_slice(); 3];
            parts[i] = &w;
            let word = combine_words(&ext, parts);
            ensure!(code.contains(&word).map_err(err)?, "embedded word not in C");
            let weight: usize = word
                .iter()
                .map(|&x| gray(&f, x).iter().filter(|y| !y.is_zero()).count())
                .sum();
            visited += 1;
            if weight > 0 {
                direct = Some(direct.map_or(weight, |d| d.min(weight)));
            }
        }
    }
    ensure!(direct == formula.d, "enumeration d = {direct:?}, formula d = {:?}", formula.d);
    Ok(format!("[4, 3, 2] components, |C| = 9^9, gray [12, 9, 2] (formula d = enumeration d over {visited} words)"))
}

fn example_length_five() -> Check {
    let f = f9();
    let ring = ring(&f, 1);
    let fact = divisor_search::factor_commutative(&ring, 5).map_err(err)?;
    let expected = vec![(poly(&f, &[2, 1]), 1), (poly(&f, &[1, 1, 1, 1, 1]), 1)];
    ensure!(fact.factors == expected, "factors {:?}", fact.factors);
    // trial division of the quartic by every monic polynomial of degree 1, 2 over F_3
    let quartic = [1, 1, 1, 1, 1];
    for d in 1..=2 {
        for cand in monic_prime_polys(3, d) {
            ensure!(!prime_rem(3, &quartic, &cand).is_empty(), "quartic divisible by {cand:?}");
        }
    }
    let product = naive_skew_mul(&f, 1, expected[0].0.coeffs(), expected[1].0.coeffs());
    ensure!(product == ring.x_n_minus_one(5).coeffs(), "factors multiply to {product:?}");
    let count = divisor_search::count_r_skew_cyclic(&ring, 5).map_err(err)?;
    ensure!(count.total == 64 && count.nonzero == 63, "count {count:?}");
    Ok("x^5 - 1 = (x+2)(x^4+x^3+x^2+x+1), quartic irreducible, 64 codes / 63 nonzero".into())
}

fn example_length_six() -> Check {
    let f = f9();
    let ring = ring(&f, 1);
    let target = ring.x_n_minus_one(6);
    let g1 = poly(&f, &[2, 3, 0, 6, 1]);
    let h1 = poly(&f, &[1, 3, 1]);
    let g3 = poly(&f, &[2, 1, 7, 1]);
    let h3 = poly(&f, &[1, 1, 8, 1]);
    for (g, h) in [(&g1, &h1), (&g3, &h3)] {
        ensure!(ring.mul(g, h) == target, "g h != x^6 - 1 for g = {:?}", g.coeffs());
        ensure!(naive_skew_mul(&f, 1, g.coeffs(), h.coeffs()) == target.coeffs(), "reference product differs");
        ensure!(ring.is_right_divisor(g, &target).map_err(err)?, "not a right divisor");
    }
    let code = RSkewCode::from_generators(&ring, 6, [g1.clone(), g1, g3]).map_err(err)?;
    ensure!(code.dimensions() == [2, 2, 3], "dimensions {:?}", code.dimensions());
    let mut sizes = Vec::new();
    for c in code.components() {
        sizes.push(analysis::weight_distribution(c, DEFAULT_ENUMERATION_CAP).map_err(err)?.values().sum::<u128>());
    }
    ensure!(sizes == [81, 81, 729], "component sizes {sizes:?}");
    let params = analysis::gray_params(&code, DEFAULT_ENUMERATION_CAP).map_err(err)?;
    ensure!(params.to_string() == "[18, 7, 4]", "gray params {params}");
    Ok("both products equal x^6 - 1, dimensions 2, 2, 3, gray [18, 7, 4]".into())
}

fn lattice_vs_search() -> Check {
    let f = f9();
    let ring = ring(&f, 1);
    let mut summary = Vec::new();
    for n in [5usize, 7] {
        let degrees: Vec<usize> = (0..=n).collect();
        let cap = 9u128.pow(n as u32).max(DEFAULT_DIVISOR_CAP);
        let found: BTreeSet<Vec<Fe>> = divisor_search::enumerate_right_divisors(&ring, n, &degrees, cap)
            .map_err(err)?
            .into_iter()
            .map(|g| g.into_coeffs())
            .collect();
        let fact = divisor_search::factor_commutative(&ring, n).map_err(err)?;
        let lattice: BTreeSet<Vec<Fe>> = divisor_search::component_divisor_lattice(&f, &fact)
            .into_iter()
            .map(|g| g.into_coeffs())
            .collect();
        ensure!(found == lattice, "n = {n}: search {} vs lattice {}", found.len(), lattice.len());
        summary.push(format!("n={n}: {} divisors", found.len()));
    }
    Ok(format!("search equals lattice ({})", summary.join(", ")))
}

struct Props {
    lines: Vec<String>,
}

impl Props {
    fn note(&mut self, s: String) {
        self.lines.push(s);
    }
}

fn random_fq_poly(f: &FieldCtx, rng: &mut rand_chacha::ChaCha8Rng, max_deg: usize) -> SkewPoly<Fe> {
    SkewPoly::new(random_coeffs(rng, max_deg, |r| random_fe(f, r)))
}

fn random_r_poly(f: &FieldCtx, rng: &mut rand_chacha::ChaCha8Rng, max_deg: usize) -> SkewPoly<RElement> {
    SkewPoly::new(random_coeffs(rng, max_deg, |r| random_r(f, r)))
}

const TRIALS: usize = 10_000;

fn gray_isometry(p: &mut Props) -> Result<(), String> {
    for f in [f3(), f9()] {
        let ext = ExtRing::new(f.clone());
        let mut count = 0;
        for x in ext.elements() {
            let w = gray(&f, x).iter().filter(|y| !y.is_zero()).count();
            ensure!(ext.lee_weight(x) == w, "w_L({x}) over F_{}", f.q());
            ensure!(ext.gray_map(x) == gray(&f, x), "gray map of {x}");
            count += 1;
        }
        p.note(format!("gray isometry on elements of R over F_{}: {count} exhaustive", f.q()));
    }
    let f = f9();
    let ext = ExtRing::new(f.clone());
    let mut rng = rng(1);
    for _ in 0..TRIALS {
        let n = rng.gen_range(1..=8);
        let x: Vec<RElement> = (0..n).map(|_| random_r(&f, &mut rng)).collect();
        let y: Vec<RElement> = (0..n).map(|_| random_r(&f, &mut rng)).collect();
        let diff: Vec<RElement> = x.iter().zip(&y).map(|(&a, &b)| ext.sub(a, b)).collect();
        let gx = ext.gray_vector(&x);
        let gy = ext.gray_vector(&y);
        let hd = gx.iter().zip(&gy).filter(|(a, b)| a != b).count();
        ensure!(ext.lee_weight_vector(&diff) == hd, "d_L != d_H on {x:?}, {y:?}");
        ensure!(ext.lee_weight_vector(&x) == linalg::hamming_weight(&gx), "w_L != w_H");
    }
    p.note(format!("gray isometry on word pairs over F_9: {TRIALS} seeded trials"));
    Ok(())
}

fn crt_laws(p: &mut Props) -> Result<(), String> {
    for f in [f3(), f9()] {
        let ext = ExtRing::new(f.clone());
        let elems: Vec<RElement> = ext.elements().collect();
        let splits: Vec<[Fe; 3]> = elems.iter().map(|&x| ext.crt_split(x)).collect();
        let distinct: HashSet<[Fe; 3]> = splits.iter().copied().collect();
        ensure!(distinct.len() == elems.len(), "split not injective over F_{}", f.q());
        ensure!(ext.crt_split(RElement::ONE) == [f.one(); 3], "split(1)");
        for (x, sx) in elems.iter().zip(&splits) {
            ensure!(ext.crt_combine(*sx) == *x, "combine(split({x}))");
            for (y, sy) in elems.iter().zip(&splits) {
                let prod = r_mul(&f, *x, *y);
                ensure!(ext.mul(*x, *y) == prod, "{x} * {y}");
                let sp = ext.crt_split(prod);
                let ss = ext.crt_split(r_add(&f, *x, *y));
                for i in 0..3 {
                    ensure!(sp[i] == f.mul(sx[i], sy[i]), "split({x} * {y})");
                    ensure!(ss[i] == f.add(sx[i], sy[i]), "split({x} + {y})");
                }
            }
        }
        let pairs = elems.len() * elems.len();
        p.note(format!("CRT laws over F_{}: {pairs} pairs exhaustive", f.q()));
    }
    Ok(())
}

fn ring_axioms(p: &mut Props) -> Result<(), String> {
    let mut rng = rng(2);
    for (f, t) in [(f9(), 1u32), (build(3, 3), 1), (f9(), 2)] {
        let ring = ring(&f, t);
        for _ in 0..TRIALS {
            let a = random_fq_poly(&f, &mut rng, 6);
            let b = random_fq_poly(&f, &mut rng, 6);
            let c = random_fq_poly(&f, &mut rng, 6);
            let ab = ring.mul(&a, &b);
            ensure!(ab.coeffs() == naive_skew_mul(&f, t, a.coeffs(), b.coeffs()), "product vs reference");
            ensure!(ring.mul(&ab, &c) == ring.mul(&a, &ring.mul(&b, &c)), "associativity");
            ensure!(ring.mul(&a, &ring.add(&b, &c)) == ring.add(&ab, &ring.mul(&a, &c)), "left distributivity");
            ensure!(ring.mul(&ring.add(&a, &b), &c) == ring.add(&ring.mul(&a, &c), &ring.mul(&b, &c)), "right distributivity");
            if let (Some(da), Some(db)) = (a.degree(), b.degree()) {
                ensure!(ab.degree() == Some(da + db), "degree law");
            }
        }
        p.note(format!("skew ring axioms over F_{} with t = {t}: {TRIALS} seeded trials", f.q()));
    }
    for f in [f3(), f9()] {
        let ext = ExtRing::new(f.clone());
        let ring = SkewRing::new(ext, f.aut(1).unwrap()).unwrap();
        for _ in 0..TRIALS {
            let a = random_r_poly(&f, &mut rng, 4);
            let b = random_r_poly(&f, &mut rng, 4);
            let c = random_r_poly(&f, &mut rng, 4);
            let ab = ring.mul(&a, &b);
            ensure!(ab.coeffs() == naive_skew_mul_r(&f, 1, a.coeffs(), b.coeffs()), "R product vs reference");
            ensure!(ring.mul(&ab, &c) == ring.mul(&a, &ring.mul(&b, &c)), "R associativity");
            ensure!(ring.mul(&a, &ring.add(&b, &c)) == ring.add(&ab, &ring.mul(&a, &c)), "R left distributivity");
            ensure!(ring.mul(&ring.add(&a, &b), &c) == ring.add(&ring.mul(&a, &c), &ring.mul(&b, &c)), "R right distributivity");
        }
        p.note(format!("skew ring axioms over R over F_{}: {TRIALS} seeded trials", f.q()));
    }
    Ok(())
}

fn build(p: u64, m: u32) -> FieldCtx {
    skewcode::build_field(p, m, None).unwrap()
}

fn division_identity(p: &mut Props) -> Result<(), String> {
    let mut rng = rng(3);
    let f = f9();
    let ring = ring(&f, 1);
    for _ in 0..TRIALS {
        let fp = random_fq_poly(&f, &mut rng, 9);
        let mut g = random_fq_poly(&f, &mut rng, 5);
        if g.is_zero() {
            g = ring.one();
        }
        let (q, r) = ring.right_divide(&fp, &g).map_err(err)?;
        ensure!(ring.add(&ring.mul(&q, &g), &r) == fp, "f != q g + r");
        ensure!(r.degree().is_none_or(|dr| dr < g.degree().unwrap()), "deg r >= deg g");
    }
    let ext = ExtRing::new(f.clone());
    let rring = SkewRing::new(ext.clone(), f.aut(1).unwrap()).unwrap();
    let mut done = 0;
    while done < TRIALS {
        let fp = random_r_poly(&f, &mut rng, 9);
        let g = random_r_poly(&f, &mut rng, 5);
        if g.leading().is_none_or(|l| !ext.is_unit(l)) {
            continue;
        }
        let (q, r) = rring.right_divide(&fp, &g).map_err(err)?;
        ensure!(rring.add(&rring.mul(&q, &g), &r) == fp, "f != q g + r over R");
        ensure!(r.degree().is_none_or(|dr| dr < g.degree().unwrap()), "deg r >= deg g over R");
        done += 1;
    }
    p.note(format!("right division over F_9 and over R: {TRIALS} seeded trials each"));
    Ok(())
}

fn all_divisors(ring: &FqSkewRing, n: usize) -> Result<Vec<SkewPoly<Fe>>, String> {
    let degrees: Vec<usize> = (0..=n).collect();
    let cap = (ring.field().q() as u128).pow(n as u32).max(1);
    divisor_search::enumerate_right_divisors(ring, n, &degrees, cap).map_err(err)
}

fn sigma_closure(p: &mut Props) -> Result<(), String> {
    let f = f9();
    let ring = ring(&f, 1);
    let mut fq_codes = 0;
    let mut r_codes = 0;
    let mut rng = rng(4);
    for n in 1..=6 {
        let divisors = all_divisors(&ring, n)?;
        let mut codes = Vec::new();
        for g in &divisors {
            let code = SkewCyclicCodeFq::new(&ring, n, g.clone()).map_err(err)?;
            for row in code.generator_matrix() {
                ensure!(code.contains(&code.skew_shift(&row)).map_err(err)?, "n = {n}, g = {:?}", g.coeffs());
            }
            codes.push(code);
            fq_codes += 1;
        }
        let triples = codes.len().pow(3);
        let picks: Vec<[usize; 3]> = if triples <= TRIALS {
            (0..triples)
                .map(|i| [i % codes.len(), i / codes.len() % codes.len(), i / codes.len().pow(2)])
                .collect()
        } else {
            (0..TRIALS / 10)
                .map(|_| [0; 3].map(|_| rng.gen_range(0..codes.len())))
                .collect()
        };
        for [i, j, k] in picks {
            let code = RSkewCode::from_components(codes[i].clone(), codes[j].clone(), codes[k].clone()).map_err(err)?;
            for row in code.generator_matrix() {
                ensure!(code.contains(&code.skew_shift(&row)).map_err(err)?, "R code not closed, n = {n}");
            }
            let msg = random_r_poly(&f, &mut rng, n);
            let word = code.encode(&msg);
            ensure!(code.contains(&word).map_err(err)?, "encoded word outside code");
            ensure!(code.contains(&code.skew_shift(&word)).map_err(err)?, "shifted codeword outside code");
            r_codes += 1;
        }
    }
    p.note(format!("sigma-closure: {fq_codes} codes over F_9 (all divisors, n <= 6), {r_codes} codes over R"));
    Ok(())
}

/// `x^i g mod (x^n - 1)` for `i < n` as words over `R`, valid when `x^n` is central.
fn r_generator_rows(g: &SkewPoly<RElement>, n: usize, f: &FieldCtx) -> Vec<Vec<RElement>> {
    (0..n)
        .map(|i| {
            let mut xi = vec![RElement::ZERO; i + 1];
            xi[i] = RElement::ONE;
            let prod = naive_skew_mul_r(f, 1, &xi, g.coeffs());
            let mut w = vec![RElement::ZERO; n];
            for (k, c) in prod.into_iter().enumerate() {
                w[k % n] = r_add(f, w[k % n], c);
            }
            w
        })
        .collect()
}

fn toy_duals(p: &mut Props) -> Result<(), String> {
    let f = f3();
    let ring = ring(&f, 1);
    let ext = ExtRing::new(f.clone());
    let mut checked = 0;
    for n in 1..=3 {
        let divisors = all_divisors(&ring, n)?;
        for g1 in &divisors {
            for g2 in &divisors {
                for g3 in &divisors {
                    let code = RSkewCode::from_generators(&ring, n, [g1.clone(), g2.clone(), g3.clone()]).map_err(err)?;
                    let dual = code.dual();
                    let c = r_span(&f, &r_generator_rows(code.generator(), n, &f));
                    let d = r_span(&f, &r_generator_rows(dual.generator(), n, &f));
                    ensure!(Some(c.len() as u128) == code.size(), "|C| = {} by span, {:?} by formula", c.len(), code.size());
                    ensure!(c.len() * d.len() == 3usize.pow(3 * n as u32), "|C| |C^perp| = {}", c.len() * d.len());
                    for x in &c {
                        for y in &d {
                            ensure!(ext.inner_product(x, y) == RElement::ZERO, "<{x:?}, {y:?}> != 0");
                        }
                    }
                    checked += 1;
                }
            }
        }
    }
    p.note(format!("|C| |C^perp| = 3^(3n) and cross inner products over F_3, n <= 3: {checked} codes exhaustive"));
    Ok(())
}

fn idempotents(p: &mut Props) -> Result<(), String> {
    let f = f9();
    let ring = ring(&f, 1);
    let mut fq_checked = 0;
    let mut r_checked = 0;
    for n in 1..=7usize {
        if divisor_search::gcd(n as u64, 2) != 1 || n % 3 == 0 {
            continue;
        }
        let fact = divisor_search::factor_commutative(&ring, n).map_err(err)?;
        let lattice = divisor_search::component_divisor_lattice(&f, &fact);
        let mut codes = Vec::new();
        for g in &lattice {
            let code = SkewCyclicCodeFq::new(&ring, n, g.clone()).map_err(err)?;
            let e = code.idempotent().map_err(err)?;
            ensure!(ring.mul_mod(&e, &e, n) == e, "e^2 != e for n = {n}, g = {:?}", g.coeffs());
            ensure!(canonical_generator(&ring, n, std::slice::from_ref(&e)) == *g, "<e> != <g> for n = {n}");
            ensure!(module_basis(&ring, n, &[e]) == module_basis(&ring, n, std::slice::from_ref(g)), "module bases differ");
            codes.push(code);
            fq_checked += 1;
        }
        let rring = SkewRing::new(ExtRing::new(f.clone()), f.aut(1).unwrap()).unwrap();
        for a in &codes {
            for b in &codes {
                for c in &codes {
                    let code = RSkewCode::from_components(a.clone(), b.clone(), c.clone()).map_err(err)?;
                    let e = code.idempotent().map_err(err)?;
                    ensure!(rring.mul_mod(&e, &e, n) == e, "R idempotent fails for n = {n}");
                    let word = e.to_word(n);
                    ensure!(code.contains(&word).map_err(err)?, "e outside C");
                    let g = rring.mod_ideal(code.generator(), n);
                    ensure!(rring.mul_mod(&g, &e, n) == g, "g e != g");
                    r_checked += 1;
                }
            }
        }
    }
    p.note(format!("idempotents for n in {{1, 5, 7}} over F_9: {fq_checked} component codes, {r_checked} codes over R"));
    Ok(())
}

fn property_suite() -> Check {
    let mut p = Props { lines: Vec::new() };
    gray_isometry(&mut p)?;
    crt_laws(&mut p)?;
    ring_axioms(&mut p)?;
    division_identity(&mut p)?;
    sigma_closure(&mut p)?;
    toy_duals(&mut p)?;
    idempotents(&mut p)?;
    Ok(format!("all properties hold\n      {}", p.lines.join("\n      ")))
}

fn dual_gray_commutation() -> Check {
    let f = f3();
    let ring = ring(&f, 1);
    let n = 2;
    let all = all_vectors(&f, 3 * n);
    let divisors = all_divisors(&ring, n)?;
    let mut checked = 0;
    for g1 in &divisors {
        for g2 in &divisors {
            for g3 in &divisors {
                let code = RSkewCode::from_generators(&ring, n, [g1.clone(), g2.clone(), g3.clone()]).map_err(err)?;
                let image = |c: &RSkewCode| -> BTreeSet<Vec<Fe>> {
                    r_span(&f, &r_generator_rows(c.generator(), n, &f))
                        .iter()
                        .map(|w| {
                            let mut out = vec![f.zero(); 3 * n];
                            for (i, &x) in w.iter().enumerate() {
                                for (j, y) in gray(&f, x).into_iter().enumerate() {
                                    out[j * n + i] = y;
                                }
                            }
                            out
                        })
                        .collect()
                };
                let img = image(&code);
                let basis = code.gray_image();
                let lib: BTreeSet<Vec<Fe>> = if basis.is_empty() {
                    BTreeSet::from([vec![f.zero(); 3 * n]])
                } else {
                    linalg::span_vectors(&f, &basis, DEFAULT_ENUMERATION_CAP)
                        .map_err(err)?
                        .into_iter()
                        .collect()
                };
                ensure!(
                    img == lib,
                    "g = {:?}, {:?}, {:?}: library gray image ({} words) differs from the image of the R-span ({} words)",
                    g1.coeffs(),
                    g2.coeffs(),
                    g3.coeffs(),
                    lib.len(),
                    img.len()
                );
                let complement: BTreeSet<Vec<Fe>> = all
                    .iter()
                    .filter(|v| img.iter().all(|w| dot(&f, v, w).is_zero()))
                    .cloned()
                    .collect();
                let dual_img = image(&code.dual());
                ensure!(
                    dual_img == complement,
                    "g = {:?}, {:?}, {:?}: {} vs {}",
                    g1.coeffs(),
                    g2.coeffs(),
                    g3.coeffs(),
                    dual_img.len(),
                    complement.len()
                );
                checked += 1;
            }
        }
    }
    Ok(format!("gray(dual C) = gray(C)^perp for all {checked} codes of length 2 over F_3"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 7] = [
        ("factorization identity", factorization_identity),
        ("length 4 example parameters", example_length_four),
        ("length 5 factorization and count", example_length_five),
        ("length 6 example", example_length_six),
        ("divisor search vs commutative lattice", lattice_vs_search),
        ("property suite", property_suite),
        ("dual and Gray image commute", dual_gray_commutation),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let res = check();
        let secs = t.elapsed().as_secs_f64();
        match res {
            Ok(detail) => println!("PASS {} {name} ({secs:.2}s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed in {:.2}s",
        criteria.len() - failed,
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
