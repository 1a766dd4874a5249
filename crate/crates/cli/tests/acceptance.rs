//! Acceptance criteria 1-10, each checked at exact equality against an
//! oracle computed here, with its time limit. One line per criterion.

use std::process::Command;
use std::time::{Duration, Instant};

use qckit::cyclic::{units, CyclicCode};
use qckit::galois::Elem;
use qckit::linear_code::DEFAULT_CUTOFF;
use qckit::quasi_cyclic::{
    construct_selfdual_qc, crt_decompose, enumerate_multiplier_equivalents, is_isodual, selfdual_exists,
    IsodualStrategy, QcRing, Verdict,
};
use qckit::selftest::{isodual_corpus, prime_index_seed, qc_corpus, DEFAULT_SEED};
use qckit::{construct_isodual_cyclic, equivalence_search, factor_cyclic_modulus};
use qckit::{EquivalenceMode, Field, IsodualVariant, LinearCode, Poly, QuasiCyclicCode};

type Check = Result<Vec<String>, String>;

fn field(q: u32) -> Field {
    let p = (2..=q).find(|p| q % p == 0).unwrap();
    let mut e = 0;
    let mut r = q;
    while r > 1 {
        assert_eq!(r % p, 0, "{q} is not a prime power");
        r /= p;
        e += 1;
    }
    Field::new(p, e).unwrap()
}

fn dot(f: &Field, a: &[Elem], b: &[Elem]) -> Elem {
    a.iter().zip(b).fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

fn orthogonal(f: &Field, a: &[Vec<Elem>], b: &[Vec<Elem>]) -> bool {
    a.iter().all(|x| b.iter().all(|y| dot(f, x, y) == 0))
}

/// Number of orbits of `i -> q i` on `Z_m`.
fn coset_count(q: u64, m: usize) -> usize {
    let mut seen = vec![false; m];
    let mut count = 0;
    for start in 0..m {
        if !seen[start] {
            count += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = (i as u64 * q % m as u64) as usize;
            }
        }
    }
    count
}

fn naive_mul(f: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    out
}

/// Lexicographic successor; false after the last permutation.
fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Exhaustive search for a permutation carrying `c` into (hence onto) its
/// dual; coordinate `j` moves to `perm[j]`.
fn isodual_by_enumeration(c: &LinearCode) -> Option<Vec<usize>> {
    let n = c.len();
    if 2 * c.dim() != n {
        return None;
    }
    let f = c.field();
    let g = c.generator();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let moved: Vec<Vec<Elem>> = g
            .iter()
            .map(|row| {
                let mut v = vec![0; n];
                for j in 0..n {
                    v[perm[j]] = row[j];
                }
                v
            })
            .collect();
        if orthogonal(f, &moved, g) {
            return Some(perm);
        }
        if !next_permutation(&mut perm) {
            return None;
        }
    }
}

fn describe(c: &QuasiCyclicCode) -> String {
    format!("q={} l={} m={} G={:?}", c.field().q(), c.index(), c.co_index(), c.code().generator())
}

fn criterion_1() -> Check {
    let mut cases = 0;
    for q in [2u32, 3, 4, 5, 7, 9] {
        let f = field(q);
        for m in (1..=30usize).filter(|&m| m % f.p() as usize != 0) {
            let cls = factor_cyclic_modulus(&f, m).map_err(|e| e.to_string())?;
            let product = cls.factors().iter().fold(vec![cls.delta], |acc, g| naive_mul(&f, &acc, g.coeffs()));
            let mut target = vec![0; m + 1];
            target[0] = f.neg(1);
            target[m] = 1;
            if product != target {
                return Err(format!("q={q} m={m}: product of factors is not Y^m - 1"));
            }
            if cls.r() != coset_count(q as u64, m) {
                return Err(format!("q={q} m={m}: {} factors, {} cosets", cls.r(), coset_count(q as u64, m)));
            }
            cases += 1;
        }
    }
    Ok(vec![format!("{cases} (q, m) pairs")])
}

fn criterion_2() -> Check {
    let corpus = qc_corpus(DEFAULT_SEED, 200);
    for c in &corpus {
        let d = crt_decompose(c).map_err(|e| e.to_string())?;
        if d.reconstruct().map_err(|e| e.to_string())? != *c {
            return Err(format!("round trip differs: {}", describe(c)));
        }
        let degs: usize = d.ring.slots().iter().zip(&d.comps).map(|(s, k)| s.degree() * k.dim()).sum();
        if degs != c.dim() {
            return Err(format!("dimension bookkeeping fails: {}", describe(c)));
        }
    }
    Ok(vec![format!("{} codes", corpus.len())])
}

fn criterion_3() -> Check {
    let corpus = qc_corpus(DEFAULT_SEED, 200);
    for c in &corpus {
        let ring = QcRing::new(c.field(), c.co_index()).map_err(|e| e.to_string())?;
        let route2 = ring.decompose(c).map_err(|e| e.to_string())?.dual().reconstruct().map_err(|e| e.to_string())?;
        let route1 = c.code().euclidean_dual();
        let f = c.field();
        let ok = route2.code() == &route1
            && route2.dim() + c.dim() == c.len()
            && orthogonal(f, route2.code().generator(), c.code().generator());
        if !ok {
            return Err(format!("dual routes differ: {}", describe(c)));
        }
    }
    Ok(vec![format!("{} codes, zero mismatches", corpus.len())])
}

fn criterion_4() -> Check {
    let corpus = isodual_corpus(DEFAULT_SEED);
    let mut findings = Vec::new();
    let mut isodual = 0;
    for (origin, c) in &corpus {
        let fast = is_isodual(c, IsodualStrategy::Components, DEFAULT_CUTOFF).map_err(|e| e.to_string())?;
        let oracle = isodual_by_enumeration(c.code());
        isodual += oracle.is_some() as usize;
        let expected = if oracle.is_some() { Verdict::Isodual } else { Verdict::NotIsodual };
        if fast.result != expected {
            findings.push(format!(
                "{origin}: components {} vs exhaustive {} (witness {:?}); {}",
                fast.result.name(),
                expected.name(),
                oracle,
                describe(c)
            ));
        }
    }
    if findings.is_empty() {
        Ok(vec![format!("{} codes, {isodual} isodual, verdicts agree", corpus.len())])
    } else {
        Err(format!("{} disagreement(s) in {} codes:\n      {}", findings.len(), corpus.len(), findings.join("\n      ")))
    }
}

fn criterion_5() -> Check {
    let mut corpus = qc_corpus(DEFAULT_SEED, 200);
    for (q, l, m) in [(2, 2, 3), (4, 2, 3), (5, 2, 3), (9, 2, 4)] {
        corpus.push(construct_selfdual_qc(&field(q), l, m).map_err(|e| e.to_string())?);
    }
    let mut selfdual = 0;
    for c in &corpus {
        let r = c.selfdual_report().map_err(|e| e.to_string())?;
        let g = c.code().generator();
        let direct = 2 * c.dim() == c.len() && orthogonal(c.field(), g, g);
        selfdual += direct as usize;
        if r.componentwise != direct || r.direct != direct {
            return Err(format!("componentwise {} vs direct {direct}: {}", r.componentwise, describe(c)));
        }
    }
    Ok(vec![format!("{} codes, {selfdual} self-dual, zero mismatches", corpus.len())])
}

fn criterion_6() -> Check {
    let mut cases = 0;
    let mut searched = 0;
    for q in [2u32, 3, 5, 7, 9] {
        let f = field(q);
        for s in [1usize, 3, 5, 7] {
            if (2 * s) % f.p() as usize == 0 || f.p() == 2 {
                continue;
            }
            for variant in [IsodualVariant::A, IsodualVariant::B] {
                let iso = construct_isodual_cyclic(&f, s, variant).map_err(|e| e.to_string())?;
                let code = iso.code.to_linear();
                let n = code.len();
                let image: Vec<Vec<Elem>> = code
                    .generator()
                    .iter()
                    .map(|row| {
                        let mut v = vec![0; n];
                        for j in 0..n {
                            let t = iso.witness.perm()[j];
                            v[t] = f.mul(iso.witness.diag()[t], row[j]);
                        }
                        v
                    })
                    .collect();
                if 2 * code.dim() != n || !orthogonal(&f, &image, code.generator()) {
                    return Err(format!("q={q} s={s} {variant:?}: witness does not reach the dual"));
                }
                if 2 * s <= 8 {
                    let dual = code.euclidean_dual();
                    let w = equivalence_search(&code, &dual, EquivalenceMode::Monomial, DEFAULT_CUTOFF)
                        .map_err(|e| e.to_string())?;
                    if w.is_none() {
                        return Err(format!("q={q} s={s} {variant:?}: exhaustive monomial search fails"));
                    }
                    searched += 1;
                }
                cases += 1;
            }
        }
    }
    Ok(vec![format!("{cases} constructions, {searched} confirmed by exhaustive search")])
}

fn criterion_7() -> Check {
    let mut fields = 0;
    for q in 2u32..=64 {
        let Some(p) = (2..=q).find(|p| q % p == 0) else { continue };
        if (1..).map(|e| p.pow(e)).take_while(|&x| x <= q).all(|x| x != q) {
            continue;
        }
        let f = field(q);
        let square = f.elements().any(|x| f.mul(x, x) == f.neg(1));
        for l in [2usize, 3] {
            if selfdual_exists(q as u64, l).map_err(|e| e.to_string())? != (square && l % 2 == 0) {
                return Err(format!("q={q} l={l}: existence disagrees with the square-root search"));
            }
        }
        fields += 1;
    }
    let mut built = 0;
    for q in [2u32, 4, 5, 9, 13] {
        for l in [2usize, 4] {
            for m in [1usize, 3, 5] {
                if m % field(q).p() as usize == 0 {
                    continue;
                }
                let c = construct_selfdual_qc(&field(q), l, m).map_err(|e| e.to_string())?;
                let g = c.code().generator();
                if 2 * g.len() != l * m || !orthogonal(c.field(), g, g) {
                    return Err(format!("q={q} l={l} m={m}: G G^T != 0 or wrong dimension"));
                }
                built += 1;
            }
        }
    }
    let f3 = field(3);
    let any = (1..9u32).map(|v| vec![v % 3, v / 3]).any(|v| dot(&f3, &v, &v) == 0);
    if any {
        return Err("a self-dual code of length 2 over F_3 exists".into());
    }
    Ok(vec![format!("{fields} fields, {built} constructions verified, none over F_3 at length 2")])
}

fn criterion_8() -> Check {
    let mut notes = Vec::new();
    for (q, m, l) in [(2u32, 3usize, 3usize), (2, 7, 3), (3, 2, 5)] {
        let seed = prime_index_seed(q, m, l).map_err(|e| e.to_string())?;
        let rep = enumerate_multiplier_equivalents(&seed).map_err(|e| e.to_string())?;
        let expected = (l as u64).pow(coset_count(q as u64, m) as u32);
        if rep.tuples_counted != expected {
            return Err(format!("q={q} m={m} l={l}: counted {} vs p^r = {expected}", rep.tuples_counted));
        }
        for e in &rep.orbit {
            if seed.multiplier_equivalent(&e.code).map_err(|e| e.to_string())?.is_none() {
                return Err(format!("q={q} m={m} l={l}: tuple {:?} not multiplier equivalent", e.tuple));
            }
        }
        notes.push(format!("(q={q},m={m},l={l}) tuples={} distinct={}", rep.tuples_counted, rep.distinct_codes));
    }
    Ok(notes)
}

fn criterion_9() -> Check {
    let mut applied = 0;
    for q in [2u32, 4] {
        let f = field(q);
        for n in [7usize, 9, 15] {
            let factors = factor_cyclic_modulus(&f, n).map_err(|e| e.to_string())?.factors();
            for mask in 0u32..1 << factors.len() {
                let g = factors
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .fold(Poly::one(&f), |acc, (_, h)| acc.mul(h));
                let c = CyclicCode::new(&f, n, &g).map_err(|e| e.to_string())?;
                for a in units(n) {
                    let image = c.multiplier_apply(a).map_err(|e| format!("q={q} n={n} a={a}: {e}"))?.to_linear();
                    let moved = c.to_linear().generator().iter().all(|row| {
                        let mut v = vec![0; n];
                        for (i, &x) in row.iter().enumerate() {
                            v[a * i % n] = x;
                        }
                        image.contains(&v)
                    });
                    if !moved || image.dim() != c.dim() {
                        return Err(format!("q={q} n={n} g={} a={a}: image is not mu_a(C)", g.display("x")));
                    }
                    applied += 1;
                }
            }
        }
    }
    let f2 = field(2);
    let a = CyclicCode::new(&f2, 7, &Poly::new(&f2, vec![1, 1, 0, 1])).unwrap();
    let b = CyclicCode::new(&f2, 7, &Poly::new(&f2, vec![1, 0, 1, 1])).unwrap();
    match a.multiplier_equivalent(&b).map_err(|e| e.to_string())? {
        Some(w @ (3 | 5 | 6)) => Ok(vec![format!("{applied} multiplier applications, Hamming witness mu_{w}")]),
        other => Err(format!("Hamming pair witness {other:?}")),
    }
}

fn criterion_10() -> Check {
    let out = Command::new(env!("CARGO_BIN_EXE_qckit")).arg("selftest").output().map_err(|e| e.to_string())?;
    let table = String::from_utf8_lossy(&out.stdout).to_string();
    let failed: Vec<String> = table.lines().filter(|l| l.ends_with("FAIL")).map(str::to_string).collect();
    if out.status.code() == Some(0) {
        Ok(vec!["selftest exited 0".into()])
    } else {
        Err(format!("selftest exited {:?}; failing suites: {failed:?}", out.status.code()))
    }
}

#[test]
fn acceptance() {
    let criteria: [(usize, &str, fn() -> Check, u64); 10] = [
        (1, "factorization of Y^m - 1", criterion_1, 10),
        (2, "CRT round trip", criterion_2, 30),
        (3, "dual routes agree", criterion_3, 60),
        (4, "componentwise isoduality vs exhaustive search", criterion_4, 300),
        (5, "componentwise self-duality", criterion_5, 60),
        (6, "isodual cyclic constructions", criterion_6, 60),
        (7, "self-dual existence", criterion_7, 30),
        (8, "prime-index enumeration count", criterion_8, 60),
        (9, "multiplier routes", criterion_9, 10),
        (10, "selftest binary", criterion_10, 600),
    ];
    let mut failed = Vec::new();
    for (n, name, check, limit) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(limit);
        match (&result, over) {
            (Ok(notes), false) => println!("criterion {n:>2} PASS  {name} ({:.2}s): {}", elapsed.as_secs_f64(), notes.join("; ")),
            (Ok(_), true) => println!("criterion {n:>2} FAIL  {name}: {:.2}s exceeds {limit}s", elapsed.as_secs_f64()),
            (Err(msg), _) => println!("criterion {n:>2} FAIL  {name} ({:.2}s): {msg}", elapsed.as_secs_f64()),
        }
        if result.is_err() || over {
            failed.push(n);
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
