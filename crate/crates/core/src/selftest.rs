//! Seeded invariant suites over randomized and constructed corpora.
//!
//! Each suite checks one claim against an independent computation and
//! records failures (claim violated or library error) and findings
//! (informational). Suites are keyed by the label of the claim they test.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::arith::{cyclotomic_cosets, gcd, prime_power};
use crate::cyclic::{construct_isodual_cyclic, multiplier_map, units, CyclicCode, IsodualVariant};
use crate::error::Result;
use crate::galois::{Elem, Field};
use crate::linear_code::{equivalence_search, EquivalenceMode, LinearCode, MonomialMap, DEFAULT_CUTOFF};
use crate::polynomial::{factor_cyclic_modulus, Poly};
use crate::quasi_cyclic::{
    construct_isodual_qc, construct_selfdual_qc, enumerate_multiplier_equivalents, is_isodual, phi_inv,
    phi_reindex_map, selfdual_exists, shift_map, IsodualStrategy, QcRing, QuasiCyclicCode, Verdict,
};

pub const DEFAULT_SEED: u64 = 1729;

/// `(key, criterion, claim, time limit in seconds)`.
pub const SUITES: &[(&str, usize, &str, u64)] = &[
    ("factorization", 1, "classified factors of Y^m - 1 multiply back and match the cyclotomic cosets", 10),
    ("crt-round-trip", 2, "reconstruct(decompose(C)) = C and dimensions add up", 30),
    ("propodual", 3, "kernel dual equals the dual assembled from constituent duals", 60),
    ("main:thm", 4, "componentwise isoduality matches exhaustive permutation search", 300),
    ("cor:condi", 5, "componentwise self-duality holds iff C = C^perp", 60),
    ("thm:equivalent2", 6, "both isodual cyclic variants map onto their duals", 60),
    ("existence conditions", 7, "self-dual QC codes exist iff l is even and -1 is a square", 30),
    ("th:prime", 8, "multiplier selections number p^r and stay multiplier equivalent", 60),
    ("multiplier-routes", 9, "generator and defining-set multiplier routes agree", 10),
    ("prop:image", 0, "C ~ C' iff the reindexed images are equivalent under the induced permutation", 60),
];

#[derive(Debug, Clone)]
pub struct SuiteResult {
    pub key: &'static str,
    pub criterion: usize,
    pub claim: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
    pub findings: Vec<String>,
    pub elapsed: Duration,
    pub limit: Duration,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.elapsed <= self.limit
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.key,
            "criterion": self.criterion,
            "claim": self.claim,
            "cases": self.cases,
            "passed": self.passed(),
            "failures": self.failures,
            "findings": self.findings,
            "elapsed_ms": self.elapsed.as_millis() as u64,
            "limit_ms": self.limit.as_millis() as u64,
        })
    }
}

#[derive(Debug, Clone)]
pub struct SelftestReport {
    pub seed: u64,
    pub suites: Vec<SuiteResult>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "seed": self.seed,
            "passed": self.passed(),
            "suites": self.suites.iter().map(SuiteResult::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn table(&self) -> String {
        let mut out = format!("qckit selftest (seed {})\n", self.seed);
        out.push_str(&format!(
            "{:<22} {:>5} {:>6} {:>9} {:>9}  {}\n",
            "suite", "cases", "fails", "time", "limit", "result"
        ));
        for s in &self.suites {
            out.push_str(&format!(
                "{:<22} {:>5} {:>6} {:>8.2}s {:>8}s  {}\n",
                s.key,
                s.cases,
                s.failures.len(),
                s.elapsed.as_secs_f64(),
                s.limit.as_secs(),
                if s.passed() { "PASS" } else { "FAIL" }
            ));
        }
        for s in &self.suites {
            for f in &s.failures {
                out.push_str(&format!("  [{}] failure: {f}\n", s.key));
            }
            for f in &s.findings {
                out.push_str(&format!("  [{}] finding: {f}\n", s.key));
            }
        }
        out.push_str(if self.passed() { "all suites passed\n" } else { "some suites FAILED\n" });
        out
    }
}

struct Ctx {
    cases: usize,
    failures: Vec<String>,
    findings: Vec<String>,
}

impl Ctx {
    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(msg());
        }
    }

    /// Runs one case; a library error counts as a failure.
    fn case(&mut self, what: impl FnOnce() -> String, f: impl FnOnce(&mut Ctx) -> Result<()>) {
        if let Err(e) = f(self) {
            self.cases += 1;
            self.failures.push(format!("{}: {} ({})", what(), e, e.kind()));
        }
    }
}

pub fn run(seed: u64) -> SelftestReport {
    let suites = SUITES.iter().map(|(key, ..)| run_suite(key, seed).expect("listed suite")).collect();
    SelftestReport { seed, suites }
}

/// Runs the suite with the given key, or `None` for an unknown key.
pub fn run_suite(key: &str, seed: u64) -> Option<SuiteResult> {
    let &(key, criterion, claim, limit) = SUITES.iter().find(|s| s.0 == key)?;
    let mut ctx = Ctx { cases: 0, failures: Vec::new(), findings: Vec::new() };
    let start = Instant::now();
    match key {
        "factorization" => factorization(&mut ctx),
        "crt-round-trip" => crt_round_trip(&mut ctx, seed),
        "propodual" => dual_routes(&mut ctx, seed),
        "main:thm" => isodual_components(&mut ctx, seed),
        "cor:condi" => selfdual_conditions(&mut ctx, seed),
        "thm:equivalent2" => isodual_cyclic(&mut ctx),
        "existence conditions" => selfdual_existence(&mut ctx),
        "th:prime" => prime_index(&mut ctx),
        "multiplier-routes" => multiplier_routes(&mut ctx),
        "prop:image" => image_equivalence(&mut ctx, seed),
        _ => unreachable!("every listed suite is dispatched"),
    }
    Some(SuiteResult {
        key,
        criterion,
        claim,
        cases: ctx.cases,
        failures: ctx.failures,
        findings: ctx.findings,
        elapsed: start.elapsed(),
        limit: Duration::from_secs(limit),
    })
}

// Corpora.

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn field(q: u32) -> Field {
    let (p, e) = prime_power(q as u64).expect("prime power");
    Field::new(p as u32, e).expect("small field")
}

fn random_poly<R: Rng>(rng: &mut R, field: &Field, len: usize) -> Poly {
    Poly::new(field, (0..len).map(|_| rng.gen_range(0..field.q())).collect())
}

/// A quasi-cyclic code spanned by the `T^l` orbits of up to `l` random
/// generators, each divisible by a random divisor of `Y^m - 1` slotwise.
pub fn random_qc<R: Rng>(rng: &mut R, field: &Field, l: usize, m: usize) -> Result<QuasiCyclicCode> {
    let factors = factor_cyclic_modulus(field, m)?.factors();
    let modulus = Poly::x_pow_minus_one(field, m);
    let n = l * m;
    let mut rows = Vec::new();
    for _ in 0..rng.gen_range(1..=l) {
        let mut g = Poly::one(field);
        for f in &factors {
            if rng.gen_bool(0.4) {
                g = g.mul(f);
            }
        }
        let slots = (0..l)
            .map(|_| random_poly(rng, field, m).mul(&g).rem(&modulus))
            .collect::<Result<Vec<_>>>()?;
        let v = phi_inv(field, &slots, m)?;
        rows.extend((0..m).map(|i| shift_map(n, i * l).apply_vec(field, &v)));
    }
    QuasiCyclicCode::new(field, l, m, &rows)
}

/// A quasi-cyclic code with random constituents of the given dimensions.
pub fn random_from_constituents<R: Rng>(
    rng: &mut R,
    ring: &QcRing,
    l: usize,
    dims: &[usize],
) -> Result<QuasiCyclicCode> {
    let comps = ring
        .slots()
        .iter()
        .zip(dims)
        .map(|(slot, &k)| {
            let q = slot.field.q();
            let mut best = LinearCode::zero(&slot.field, l);
            for _ in 0..32 {
                let rows: Vec<Vec<Elem>> = (0..k).map(|_| (0..l).map(|_| rng.gen_range(0..q)).collect()).collect();
                let c = LinearCode::from_rows(&slot.field, l, &rows)?;
                if c.dim() > best.dim() {
                    best = c;
                }
                if best.dim() == k {
                    break;
                }
            }
            Ok(best)
        })
        .collect::<Result<Vec<_>>>()?;
    ring.reconstruct(l, &comps)
}

/// Constituent dimensions with `sum deg(f) dim_f = lm / 2` when one is found.
fn balanced_dims<R: Rng>(rng: &mut R, ring: &QcRing, l: usize) -> Vec<usize> {
    let target = l * ring.m() / 2;
    let mut dims = Vec::new();
    for _ in 0..256 {
        dims = ring.slots().iter().map(|_| rng.gen_range(0..=l)).collect();
        let total: usize = ring.slots().iter().zip(&dims).map(|(s, d)| s.degree() * d).sum();
        if total == target {
            break;
        }
    }
    dims
}

/// Shapes `(q, l, m)` with `q` in {2, 3, 4, 5}, `l <= max_l`, `m <= max_m`,
/// `gcd(m, q) = 1` and `lm <= max_n`.
pub fn shapes(max_l: usize, max_m: usize, max_n: usize) -> Vec<(u32, usize, usize)> {
    let mut out = Vec::new();
    for q in [2u32, 3, 4, 5] {
        let p = prime_power(q as u64).unwrap().0 as usize;
        for m in (1..=max_m).filter(|m| m % p != 0) {
            for l in (1..=max_l).filter(|l| l * m <= max_n) {
                out.push((q, l, m));
            }
        }
    }
    out
}

/// `count` random quasi-cyclic codes with `q` in {2, 3, 4, 5}, `l <= 4`,
/// `m <= 15`.
pub fn qc_corpus(seed: u64, count: usize) -> Vec<QuasiCyclicCode> {
    let mut rng = rng(seed);
    let shapes = shapes(4, 15, usize::MAX);
    (0..count)
        .map(|_| {
            let &(q, l, m) = shapes.choose(&mut rng).unwrap();
            random_qc(&mut rng, &field(q), l, m).expect("valid shape")
        })
        .collect()
}

/// 100 codes of length at most 8: constructed self-dual and isodual codes,
/// a known non-isodual code, and random codes (half of them with balanced
/// constituent dimensions).
pub fn isodual_corpus(seed: u64) -> Vec<(String, QuasiCyclicCode)> {
    let mut out = Vec::new();
    for (q, l, m) in [(2, 2, 1), (2, 2, 3), (2, 4, 1), (2, 8, 1), (4, 2, 1), (4, 2, 3), (4, 4, 1), (5, 2, 1), (5, 2, 3), (5, 4, 1)] {
        let c = construct_selfdual_qc(&field(q), l, m).expect("self-dual parameters");
        out.push((format!("construct_selfdual_qc q={q} l={l} m={m}"), c));
    }
    for (q, l, m) in [(2, 2, 1), (2, 2, 3), (2, 6, 1), (3, 2, 1), (3, 2, 2), (3, 2, 4), (4, 2, 1), (4, 2, 3), (5, 2, 1), (5, 2, 2), (5, 2, 3), (5, 2, 4), (5, 6, 1)] {
        let c = construct_isodual_qc(&field(q), l, m, DEFAULT_CUTOFF).expect("isodual parameters").code;
        out.push((format!("construct_isodual_qc q={q} l={l} m={m}"), c));
    }
    let f3 = field(3);
    out.push(("span{(1,1)} over F_3".into(), QuasiCyclicCode::new(&f3, 2, 1, &[vec![1, 1]]).unwrap()));

    let mut rng = rng(seed ^ 0x6d61696e);
    let shapes = shapes(8, 8, 8);
    let mut k = 0;
    while out.len() < 100 {
        let &(q, l, m) = shapes.choose(&mut rng).unwrap();
        let fq = field(q);
        let c = if k % 2 == 0 {
            let ring = QcRing::new(&fq, m).expect("coprime co-index");
            let dims = balanced_dims(&mut rng, &ring, l);
            random_from_constituents(&mut rng, &ring, l, &dims).expect("valid constituents")
        } else {
            random_qc(&mut rng, &fq, l, m).expect("valid shape")
        };
        out.push((format!("random #{k} q={q} l={l} m={m}"), c));
        k += 1;
    }
    out
}

fn describe(c: &QuasiCyclicCode) -> String {
    format!("q={} l={} m={} k={} G={:?}", c.field().q(), c.index(), c.co_index(), c.dim(), c.code().generator())
}

// Suites.

fn factorization(ctx: &mut Ctx) {
    for q in [2u32, 3, 4, 5, 7, 9] {
        let fq = field(q);
        for m in (1..=30).filter(|&m| gcd(m as u64, q as u64) == 1) {
            ctx.case(
                || format!("q={q} m={m}"),
                |ctx| {
                    let cls = factor_cyclic_modulus(&fq, m)?;
                    let cosets = cyclotomic_cosets(q as u64, m);
                    ctx.check(cls.product() == Poly::x_pow_minus_one(&fq, m), || format!("q={q} m={m}: product differs"));
                    ctx.check(cls.r() == cosets.len(), || {
                        format!("q={q} m={m}: {} factors, {} cosets", cls.r(), cosets.len())
                    });
                    let mut degs: Vec<usize> = cls.factors().iter().map(|f| f.degree().unwrap_or(0)).collect();
                    let mut sizes: Vec<usize> = cosets.iter().map(Vec::len).collect();
                    degs.sort_unstable();
                    sizes.sort_unstable();
                    ctx.check(degs == sizes, || format!("q={q} m={m}: degrees {degs:?} vs coset sizes {sizes:?}"));
                    let closed = cosets.iter().filter(|c| c.iter().all(|&i| c.contains(&((m - i) % m)))).count();
                    ctx.check(cls.s() == closed, || {
                        format!("q={q} m={m}: {} self-reciprocal factors, {closed} negation-closed cosets", cls.s())
                    });
                    ctx.check(cls.factors().iter().all(|f| f.is_irreducible()), || format!("q={q} m={m}: reducible factor"));
                    Ok(())
                },
            );
        }
    }
}

fn crt_round_trip(ctx: &mut Ctx, seed: u64) {
    for c in qc_corpus(seed, 200) {
        ctx.case(
            || describe(&c),
            |ctx| {
                let ring = QcRing::new(c.field(), c.co_index())?;
                let d = ring.decompose(&c)?;
                ctx.check(d.reconstruct()? == c, || format!("round trip differs: {}", describe(&c)));
                ctx.check(d.base_dimension() == c.dim(), || format!("dimension bookkeeping: {}", describe(&c)));
                c.constituents_all_cyclic_in(&ring)?;
                Ok(())
            },
        );
    }
}

fn dual_routes(ctx: &mut Ctx, seed: u64) {
    for c in qc_corpus(seed, 200) {
        ctx.case(
            || describe(&c),
            |ctx| {
                let ring = QcRing::new(c.field(), c.co_index())?;
                let d = c.dual_in(&ring)?;
                ctx.check(d.dim() + c.dim() == c.len(), || format!("dual dimension: {}", describe(&c)));
                ctx.check(d.dual_in(&ring)? == c, || format!("dual is not an involution: {}", describe(&c)));
                Ok(())
            },
        );
    }
}

fn isodual_components(ctx: &mut Ctx, seed: u64) {
    let corpus = isodual_corpus(seed);
    let mut isodual = 0;
    for (origin, c) in &corpus {
        ctx.case(
            || origin.clone(),
            |ctx| {
                let fast = is_isodual(c, IsodualStrategy::Components, DEFAULT_CUTOFF)?;
                let brute = is_isodual(c, IsodualStrategy::Bruteforce, DEFAULT_CUTOFF)?;
                if brute.result == Verdict::Isodual {
                    isodual += 1;
                }
                ctx.check(fast.result == brute.result, || {
                    format!(
                        "{origin}: components says {}, bruteforce says {} (witness {:?}); {}",
                        fast.result.name(),
                        brute.result.name(),
                        brute.witness.as_ref().map(|w| w.perm().to_vec()),
                        describe(c)
                    )
                });
                Ok(())
            },
        );
    }
    ctx.findings.push(format!("{} codes, {isodual} isodual by exhaustive search", corpus.len()));
}

fn selfdual_conditions(ctx: &mut Ctx, seed: u64) {
    let mut codes = qc_corpus(seed, 200);
    for (q, l, m) in [(2, 2, 3), (2, 4, 5), (4, 2, 3), (5, 2, 3), (5, 4, 1), (9, 2, 4), (13, 2, 3)] {
        codes.push(construct_selfdual_qc(&field(q), l, m).expect("self-dual parameters"));
    }
    let mut selfdual = 0;
    for c in &codes {
        ctx.case(
            || describe(c),
            |ctx| {
                let r = c.selfdual_report()?;
                selfdual += r.direct as usize;
                ctx.check(r.agree(), || format!("componentwise {} vs direct {}: {}", r.componentwise, r.direct, describe(c)));
                Ok(())
            },
        );
    }
    ctx.findings.push(format!("{} codes, {selfdual} self-dual", codes.len()));
}

fn isodual_cyclic(ctx: &mut Ctx) {
    for q in [2u32, 3, 5, 7, 9] {
        let fq = field(q);
        for s in [1usize, 3, 5, 7].into_iter().filter(|&s| gcd(2 * s as u64, q as u64) == 1) {
            for variant in [IsodualVariant::A, IsodualVariant::B] {
                ctx.case(
                    || format!("q={q} s={s} {variant:?}"),
                    |ctx| {
                        let iso = construct_isodual_cyclic(&fq, s, variant)?;
                        let code = iso.code.to_linear();
                        let dual = code.euclidean_dual();
                        ctx.check(code.apply_monomial(&iso.witness)? == dual, || {
                            format!("q={q} s={s} {variant:?}: witness misses the dual")
                        });
                        if 2 * s <= DEFAULT_CUTOFF {
                            let found = equivalence_search(&code, &dual, EquivalenceMode::Monomial, DEFAULT_CUTOFF)?;
                            ctx.check(found.is_some(), || format!("q={q} s={s} {variant:?}: search finds no map"));
                        }
                        Ok(())
                    },
                );
            }
        }
    }
}

fn selfdual_existence(ctx: &mut Ctx) {
    for q in (2u64..=64).filter(|&q| prime_power(q).is_some()) {
        ctx.case(
            || format!("q={q}"),
            |ctx| {
                let fq = field(q as u32);
                let minus_one = fq.neg(1);
                let square = fq.elements().any(|x| fq.mul(x, x) == minus_one);
                for l in [2, 3, 4] {
                    let claimed = selfdual_exists(q, l)?;
                    ctx.check(claimed == (square && l % 2 == 0), || format!("q={q} l={l}: selfdual_exists = {claimed}"));
                }
                Ok(())
            },
        );
    }
    for q in [2u32, 4, 5, 9, 13] {
        for l in [2, 4] {
            for m in [1usize, 3, 5].into_iter().filter(|&m| gcd(m as u64, q as u64) == 1) {
                ctx.case(
                    || format!("construct q={q} l={l} m={m}"),
                    |ctx| {
                        let c = construct_selfdual_qc(&field(q), l, m)?;
                        let fq = c.field();
                        let g = c.code().generator();
                        let orthogonal = g.iter().all(|a| {
                            g.iter().all(|b| a.iter().zip(b).fold(0, |acc, (&x, &y)| fq.add(acc, fq.mul(x, y))) == 0)
                        });
                        ctx.check(orthogonal && 2 * c.dim() == l * m, || format!("q={q} l={l} m={m}: not self-dual"));
                        Ok(())
                    },
                );
            }
        }
    }
    let f3 = field(3);
    let none = (1..9u32).all(|v| {
        let (a, b) = (v % 3, v / 3);
        f3.add(f3.mul(a, a), f3.mul(b, b)) != 0
    });
    ctx.check(none, || "a self-dual code of length 2 over F_3 exists".into());
    ctx.check(construct_selfdual_qc(&f3, 2, 1).is_err(), || "construction succeeded for q=3 l=2 m=1".into());
}

/// A seed code whose constituents are `<f>` for the last factor `f` of
/// `x^l - 1` over each local field.
pub fn prime_index_seed(q: u32, m: usize, l: usize) -> Result<QuasiCyclicCode> {
    let ring = QcRing::new(&field(q), m)?;
    let comps = ring
        .slots()
        .iter()
        .map(|slot| {
            let factors = factor_cyclic_modulus(&slot.field, l)?.factors();
            let g = factors.last().expect("x^l - 1 has a factor").clone();
            Ok(CyclicCode::new(&slot.field, l, &g)?.to_linear())
        })
        .collect::<Result<Vec<_>>>()?;
    ring.reconstruct(l, &comps)
}

fn prime_index(ctx: &mut Ctx) {
    for (q, m, l) in [(2u32, 3usize, 3usize), (2, 7, 3), (3, 2, 5)] {
        ctx.case(
            || format!("q={q} m={m} l={l}"),
            |ctx| {
                let seed = prime_index_seed(q, m, l)?;
                let rep = enumerate_multiplier_equivalents(&seed)?;
                let r = cyclotomic_cosets(q as u64, m).len() as u32;
                let expected = (l as u64).pow(r);
                let binomial: u64 = (0..=r as u64).map(|k| binom(r as u64, k) * (l as u64 - 1).pow(k as u32)).sum();
                ctx.check(rep.tuples_counted == expected && binomial == expected, || {
                    format!("q={q} m={m} l={l}: counted {} expected {expected}", rep.tuples_counted)
                });
                for e in &rep.orbit {
                    ctx.check(seed.multiplier_equivalent(&e.code)?.is_some(), || {
                        format!("q={q} m={m} l={l}: tuple {:?} not multiplier equivalent", e.tuple)
                    });
                }
                ctx.findings.push(format!(
                    "q={q} m={m} l={l}: r={r}, tuples_counted={}, distinct_codes={}",
                    rep.tuples_counted, rep.distinct_codes
                ));
                Ok(())
            },
        );
    }
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn multiplier_routes(ctx: &mut Ctx) {
    for q in [2u32, 4] {
        let fq = field(q);
        for n in [7usize, 9, 15] {
            ctx.case(
                || format!("q={q} n={n}"),
                |ctx| {
                    let factors = factor_cyclic_modulus(&fq, n)?.factors();
                    for mask in 0u32..1 << factors.len() {
                        let g = factors
                            .iter()
                            .enumerate()
                            .filter(|(i, _)| mask >> i & 1 == 1)
                            .fold(Poly::one(&fq), |acc, (_, f)| acc.mul(f));
                        let c = CyclicCode::new(&fq, n, &g)?;
                        let lin = c.to_linear();
                        for a in units(n) {
                            let image = c.multiplier_apply(a)?;
                            ctx.check(image.to_linear() == lin.apply_monomial(&multiplier_map(n, a)?)?, || {
                                format!("q={q} n={n} g={} a={a}: coordinate action differs", g.display("x"))
                            });
                        }
                    }
                    Ok(())
                },
            );
        }
    }
    let f2 = field(2);
    ctx.case(
        || "Hamming pair".into(),
        |ctx| {
            let a = CyclicCode::new(&f2, 7, &Poly::new(&f2, vec![1, 1, 0, 1]))?;
            let b = CyclicCode::new(&f2, 7, &Poly::new(&f2, vec![1, 0, 1, 1]))?;
            let w = a.multiplier_equivalent(&b)?;
            ctx.check(matches!(w, Some(3 | 5 | 6)), || format!("Hamming pair witness {w:?}"));
            Ok(())
        },
    );
}

fn image_equivalence(ctx: &mut Ctx, seed: u64) {
    let mut rng = rng(seed ^ 0x696d6167);
    let shapes: Vec<_> = shapes(4, 8, 8).into_iter().filter(|s| s.1 >= 2).collect();
    for k in 0..40 {
        let &(q, l, m) = shapes.choose(&mut rng).unwrap();
        let fq = field(q);
        ctx.case(
            || format!("pair #{k} q={q} l={l} m={m}"),
            |ctx| {
                let c = random_qc(&mut rng, &fq, l, m)?;
                let d = if k % 2 == 0 {
                    let mut perm: Vec<usize> = (0..l).collect();
                    perm.shuffle(&mut rng);
                    c.permute_slots(&MonomialMap::permutation(perm)?)?
                } else {
                    random_qc(&mut rng, &fq, l, m)?
                };
                let rho = phi_reindex_map(l, m);
                let (ic, id) = (c.code().apply_monomial(&rho)?, d.code().apply_monomial(&rho)?);
                let direct = equivalence_search(c.code(), d.code(), EquivalenceMode::Permutation, DEFAULT_CUTOFF)?;
                let image = equivalence_search(&ic, &id, EquivalenceMode::Permutation, DEFAULT_CUTOFF)?;
                ctx.check(direct.is_some() == image.is_some(), || format!("pair #{k}: verdicts differ"));
                if k % 2 == 0 {
                    ctx.check(direct.is_some(), || format!("pair #{k}: slot permutation not detected"));
                }
                if let Some(sigma) = direct {
                    let tau = rho.inverse(&fq).then(&sigma, &fq).then(&rho, &fq);
                    ctx.check(ic.apply_monomial(&tau)? == id, || format!("pair #{k}: induced permutation fails"));
                }
                Ok(())
            },
        );
    }
}
