//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Runs without the libtest harness so the lines always print.

mod common;

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use salemlat::arith::rat;
use salemlat::isomgroup::{
    char_poly, classify_isometry, companion_matrix, eigenvalue_layout, entropy, evaluate_polynomial_at,
    express_in_powers, is_primary_charpoly, isometry_with_positive_index, order, verify_isometry, IsometryKind,
    LatticeIsometry, ReflectionSampler,
};
use salemlat::k3pipeline::{
    build_phi, build_sublattices, extension_order, generate_isometries, minimal_primitive_sublattice,
    period_point, run_pipeline, PrimeSelection,
};
use salemlat::latticecore::catalog::{a_n, diagonal, e8_negative, hyperbolic_plane, sum};
use salemlat::latticecore::{signature, vectors_of_norm, GramLattice, SublatticeEmbedding};
use salemlat::linalg::ZMatrix;
use salemlat::polyalg::{classify_salem, enumerate_salem, IntPolynomial, SalemVerdict};
use salemlat::rankkit::parabolic_group_rank;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

/// All palindromic monic coefficient vectors of degree `d` with middle
/// coefficients in `[-3, 3]`.
fn reciprocal_polys(d: usize) -> Vec<Vec<i64>> {
    let free = d / 2;
    let mut out = Vec::new();
    let total = 7usize.pow(free as u32);
    for code in 0..total {
        let mut c = vec![0i64; d + 1];
        c[0] = 1;
        c[d] = 1;
        let mut k = code;
        for i in 1..=free {
            let a = (k % 7) as i64 - 3;
            k /= 7;
            c[i] = a;
            c[d - i] = a;
        }
        out.push(c);
    }
    out
}

fn criterion_salem_oracle() -> Outcome {
    let t = Instant::now();
    let eps = rat(1, 1_000_000_000_000);
    let polys: Vec<Vec<i64>> = reciprocal_polys(4).into_iter().chain(reciprocal_polys(6)).collect();
    let results: Vec<(bool, Option<bool>)> = polys
        .par_iter()
        .map(|c| {
            let exact = classify_salem(&IntPolynomial::from_i64(c), &eps).expect("monic input").is_salem();
            (exact, common::numeric_is_salem(c))
        })
        .collect();
    for (c, r) in polys.iter().zip(&results) {
        if r.1.is_some_and(|n| n != r.0) {
            eprintln!("oracle disagreement on {c:?}: exact {}, float {:?}", r.0, r.1);
        }
    }
    let salem = results.iter().filter(|r| r.0).count();
    let undecided = results.iter().filter(|r| r.1.is_none()).count();
    let disagreements = results.iter().filter(|r| r.1.is_some_and(|n| n != r.0)).count();
    let secs = t.elapsed().as_secs_f64();
    outcome(
        disagreements == 0 && undecided == 0 && secs < 300.0,
        format!(
            "{} polynomials, {salem} Salem, {disagreements} disagreements, {undecided} undecided by the oracle, {secs:.1}s",
            polys.len()
        ),
    )
}

fn criterion_enumerate_quartic() -> Outcome {
    let t = Instant::now();
    let got: Vec<IntPolynomial> = enumerate_salem(4, 1, 1)
        .expect("degree 4")
        .into_iter()
        .map(|c| c.polynomial)
        .collect();
    // brute force: trace 1 fixes a_3 = -1; scan a_2 well past any Salem bound
    let mut scan: Vec<IntPolynomial> = (-40..=40)
        .filter_map(|a| {
            let c = [1, -1, a, -1, 1];
            common::numeric_is_salem(&c)
                .expect("oracle decides quartics")
                .then(|| IntPolynomial::from_i64(&c))
        })
        .collect();
    let expected: Vec<IntPolynomial> = [-1, -2, -3].iter().map(|&a| IntPolynomial::from_i64(&[1, -1, a, -1, 1])).collect();
    let mut sorted = got.clone();
    sorted.sort();
    scan.sort();
    let mut exp_sorted = expected.clone();
    exp_sorted.sort();
    let secs = t.elapsed().as_secs_f64();
    outcome(
        sorted == scan && sorted == exp_sorted && secs < 60.0,
        format!(
            "{} polynomials: {}; brute-force scan agrees: {}; {secs:.2}s",
            got.len(),
            got.iter().map(|p| p.pretty("x")).collect::<Vec<_>>().join(", "),
            sorted == scan
        ),
    )
}

fn criterion_lehmer() -> Outcome {
    let lehmer = IntPolynomial::from_i64(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
    let verdict = classify_salem(&lehmer, &rat(1, 1 << 40)).expect("monic");
    let numeric = common::roots(&common::to_f64(lehmer.coeffs()))
        .iter()
        .map(|d| d.z.norm())
        .fold(0.0f64, f64::max);
    match verdict {
        SalemVerdict::Salem(cert) => {
            let i = &cert.salem_number_interval;
            let inside = i.lo >= rat(1_176_280, 1_000_000) && i.hi <= rat(1_176_281, 1_000_000);
            let oracle = i.lo_f64() - 1e-12 <= numeric && numeric <= i.hi_f64() + 1e-12;
            outcome(
                inside && oracle,
                format!("alpha in [{:.12}, {:.12}], float oracle {numeric:.12}", i.lo_f64(), i.hi_f64()),
            )
        }
        SalemVerdict::Rejected(r) => outcome(false, format!("rejected: {}", r.reason())),
    }
}

fn criterion_e8_roots() -> Outcome {
    let t = Instant::now();
    let l = e8_negative();
    let reps = vectors_of_norm(&l, &BigInt::from(-2)).expect("definite");
    let mut all: Vec<Vec<BigInt>> = reps.iter().flat_map(|v| [v.clone(), v.iter().map(|x| -x).collect()]).collect();
    all.sort();
    all.dedup();
    let all_norm = all.iter().all(|v| l.norm(v) == BigInt::from(-2));
    let secs = t.elapsed().as_secs_f64();
    outcome(
        all.len() == 240 && reps.len() == 120 && all_norm && secs < 10.0,
        format!("{} sign pairs, {} distinct vectors of norm -2, {secs:.2}s", reps.len(), all.len()),
    )
}

fn criterion_k3_run() -> Outcome {
    let t = Instant::now();
    let report = run_pipeline(&PrimeSelection::standard()).expect("pipeline runs");
    let names = [
        "N_parabolic_rank_19",
        "L_hyperbolic_rank_20",
        "N_primitive",
        "L_primitive",
        "N_no_minus_2",
        "generators_commute",
        "generators_fix_T_and_e0",
    ];
    let named = names.iter().all(|n| report.check(n).is_some_and(|c| c.passed));
    let secs = t.elapsed().as_secs_f64();
    let failed: Vec<&str> = report.checks.iter().filter(|c| !c.passed).map(|c| c.name).collect();
    outcome(
        report.all_passed() && named && report.group_rank == Some(18) && secs < 600.0,
        format!(
            "{} checks, failed {failed:?}, group rank {:?}, {secs:.1}s",
            report.checks.len(),
            report.group_rank
        ),
    )
}

fn criterion_period() -> Outcome {
    let tbar = GramLattice::from_i64(&[&[2, 1], &[1, 2]]).expect("symmetric");
    let t = diagonal(&[0]).direct_sum(&tbar);
    let Ok(sigma) = period_point(&tbar, &t) else {
        return outcome(false, "period point construction failed");
    };
    let (ss, sbar) = sigma.identities(t.gram());
    let exact = ss.is_zero() && sbar.as_rational() == Some(rat(3, 1));
    let full = SublatticeEmbedding::full(&t);
    let minimal = minimal_primitive_sublattice(&sigma, &t).is_ok_and(|m| m.same_span(&full));
    // and inside Λ for the default construction
    let c = build_sublattices(&PrimeSelection::standard()).expect("construction");
    let in_lambda = c
        .period_point()
        .and_then(|s| minimal_primitive_sublattice(&s, &c.lambda))
        .is_ok_and(|m| m.same_span(&c.t));
    outcome(
        exact && minimal && in_lambda,
        format!("(s,s) = 0: {}, (s,sbar) = 3: {}, minimal sublattice = T: {minimal} (toy), {in_lambda} (in the K3 lattice)",
            ss.is_zero(), sbar.as_rational() == Some(rat(3, 1))),
    )
}

/// Hyperbolic test lattices U ⊕ E8(-1) and U ⊕ A_k(-1).
fn hyperbolic_corpus() -> Vec<GramLattice> {
    let mut out = vec![sum(&[hyperbolic_plane(), e8_negative()])];
    for k in 1..=8 {
        out.push(sum(&[hyperbolic_plane(), a_n(k).scaled(-1)]));
    }
    out
}

fn hyperbolic_samples(count: usize, seed: u64) -> Vec<LatticeIsometry> {
    let corpus = hyperbolic_corpus();
    let mut samplers: Vec<ReflectionSampler> = corpus
        .iter()
        .enumerate()
        .map(|(i, l)| ReflectionSampler::new(l, seed + i as u64).expect("roots exist"))
        .collect();
    (0..count)
        .map(|k| {
            let s = &mut samplers[k % corpus.len()];
            let n = corpus[k % corpus.len()].rank();
            s.sample_between(1, 2 * n)
        })
        .collect()
}

/// Salem polynomials used as spectra of the elliptic-type test isometries.
fn salem_spectra() -> Vec<IntPolynomial> {
    [(4, 0, 3), (6, -1, 3), (8, -1, 2)]
        .iter()
        .flat_map(|&(d, lo, hi)| enumerate_salem(d, lo, hi).expect("small degree"))
        .map(|c| c.polynomial)
        .collect()
}

/// Isometries of signature (3, 0, t) lattices preserving a positive 2-plane
/// on which they act with eigenvalues on the unit circle.
fn elliptic_type_samples(spectra: &[IntPolynomial], count: usize, seed: u64) -> Vec<LatticeIsometry> {
    (0..count)
        .into_par_iter()
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed + k as u64);
            let f = &spectra[rng.gen_range(0..spectra.len())];
            isometry_with_positive_index(&companion_matrix(f), 3, 500, &mut rng)
                .expect("a Salem spectrum admits a form with three positive eigenvalues")
        })
        .collect()
}

fn criterion_properties() -> Outcome {
    let t = Instant::now();
    let mut notes = Vec::new();
    let mut pass = true;

    // at most one eigenvalue off the unit circle on signature (1, 0, m)
    let hyp = hyperbolic_samples(1000, 37);
    let outside: Vec<(usize, usize)> = hyp
        .par_iter()
        .map(|g| {
            let exact = eigenvalue_layout(g).expect("isometry spectrum").outside;
            (exact, common::numeric_outside_count(char_poly(g).coeffs()))
        })
        .collect();
    let bad = outside.iter().filter(|(e, _)| *e > 1).count();
    let oracle_bad = outside.iter().filter(|(e, n)| e != n).count();
    pass &= bad == 0 && oracle_bad == 0;
    notes.push(format!("one-outside-root bound: {bad}/1000 violations, float oracle mismatches {oracle_bad}"));

    // dichotomy: primary, infinite order, positive 2-plane turned by F
    let spectra = salem_spectra();
    let ell = elliptic_type_samples(&spectra, 1000, 91);
    let kinds: Vec<(bool, bool, bool, usize)> = ell
        .par_iter()
        .map(|g| {
            let sig_ok = signature(g.lattice()).n_plus == 3;
            let hyp_ok = is_primary_charpoly(g) && !order(g).is_finite();
            let mixed = classify_isometry(g).is_mixed();
            (sig_ok, hyp_ok, mixed, g.rank())
        })
        .collect();
    let bad = kinds.iter().filter(|(s, h, m, _)| !s || !h || *m).count();
    pass &= bad == 0;
    let ranks: std::collections::BTreeSet<usize> = kinds.iter().map(|k| k.3).collect();
    // no Salem spectrum carries an invariant form with exactly two positive eigenvalues
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let index_two = spectra
        .iter()
        .take(40)
        .filter(|f| isometry_with_positive_index(&companion_matrix(f), 2, 40, &mut rng).is_some())
        .count();
    pass &= index_two == 0;
    notes.push(format!(
        "dichotomy: {bad}/1000 violations on signature (3,0,t), ranks {ranks:?}; index-2 forms for Salem spectra: {index_two}/40"
    ));

    // SalemType ⇒ det = +1
    let all: Vec<&LatticeIsometry> = hyp.iter().chain(ell.iter()).collect();
    let dets: Vec<Option<bool>> = all
        .par_iter()
        .map(|g| match classify_isometry(g).kind {
            IsometryKind::SalemType { determinant, .. } => Some(determinant.is_one() && g.det().is_one()),
            _ => None,
        })
        .collect();
    let salem_count = dets.iter().filter(|d| d.is_some()).count();
    let bad = dets.iter().filter(|d| **d == Some(false)).count();
    pass &= bad == 0 && salem_count > 0;
    notes.push(format!("det +1: {bad}/{salem_count} violations"));

    // express_in_powers roundtrip
    let rt: Vec<bool> = (0..1000)
        .into_par_iter()
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(4000 + k as u64);
            let f = &ell[k];
            let e = rng.gen_range(-4i64..=4);
            let mut g = if e >= 0 { f.pow(e as u64) } else { f.inverse().pow((-e) as u64) };
            if rng.gen_bool(0.5) {
                let minus = verify_isometry(&ZMatrix::identity(f.rank()).neg(), f.lattice()).expect("-1");
                g = g.compose(&minus);
            }
            match express_in_powers(f, &g) {
                Ok(Some(coeffs)) => evaluate_polynomial_at(f, &coeffs).as_ref() == Some(g.matrix()),
                _ => false,
            }
        })
        .collect();
    let bad = rt.iter().filter(|ok| !**ok).count();
    pass &= bad == 0;
    notes.push(format!("power roundtrip: {bad}/1000 violations"));

    // entropy(g^k) ⊇ k · mid(entropy(g) at eps / 4k)
    let eps = rat(1, 1 << 20);
    let ent: Vec<(bool, bool)> = (0..1000)
        .into_par_iter()
        .map(|i| {
            let g = if i % 2 == 0 { &ell[i] } else { &hyp[i] };
            let mut ok = true;
            for k in 1..=3u64 {
                let fine = entropy(g, &(&eps / BigRational::from_integer(BigInt::from(4 * k)))).expect("entropy");
                let coarse = entropy(&g.pow(k), &eps).expect("entropy");
                let target = fine.midpoint() * BigRational::from_integer(BigInt::from(k));
                ok &= coarse.contains(&target);
            }
            let fine = entropy(g, &eps).expect("entropy");
            let h = common::numeric_log_radius(char_poly(g).coeffs());
            let oracle = fine.lo.to_f64().unwrap() - 1e-9 <= h && h <= fine.hi.to_f64().unwrap() + 1e-9;
            (ok, oracle)
        })
        .collect();
    let bad = ent.iter().filter(|e| !e.0).count();
    let oracle_bad = ent.iter().filter(|e| !e.1).count();
    pass &= bad == 0 && oracle_bad == 0;
    notes.push(format!("entropy power rule: {bad}/1000 violations, float oracle mismatches {oracle_bad}"));

    notes.push(format!("{:.1}s", t.elapsed().as_secs_f64()));
    outcome(pass, notes.join("; "))
}

fn criterion_toy_phi() -> Outcome {
    let toy = sum(&[hyperbolic_plane(), diagonal(&[-2])]);
    let Ok(phi) = build_phi(1, &toy) else {
        return outcome(false, "phi_1 construction failed");
    };
    // columns: e0 ↦ e0, f0 ↦ f0 + e0 − w1, w1 ↦ w1 − 2 e0
    let expected = ZMatrix::from_i64(&[&[1, 1, -2], &[0, 1, 0], &[0, -1, 1]]);
    let k = extension_order(&phi, &toy);
    outcome(
        phi.matrix() == &expected && k.as_ref().ok() == Some(&1),
        format!("matrix matches: {}, extension order {k:?}", phi.matrix() == &expected),
    )
}

/// Parabolic lattices ⟨0⟩ ⊕ M with M negative definite, and random
/// isometries acting trivially on the quotient by the radical.
fn parabolic_corpus_ok(rng: &mut ChaCha8Rng) -> (usize, usize) {
    let mut lattices = vec![diagonal(&[0, -2]), diagonal(&[0]).direct_sum(&e8_negative())];
    for k in 1..=6 {
        lattices.push(diagonal(&[0]).direct_sum(&a_n(k).scaled(-1)));
    }
    let (mut cases, mut bad) = (0, 0);
    for l in &lattices {
        let r = l.rank();
        for _ in 0..25 {
            let count = rng.gen_range(1..=r + 2);
            let gens: Vec<LatticeIsometry> = (0..count)
                .map(|_| {
                    // e_0 spans the radical: u ↦ u + α(u) e_0, e_0 ↦ ±e_0
                    let mut m = ZMatrix::identity(r);
                    if rng.gen_bool(0.3) {
                        for j in 0..r {
                            m[(0, j)] = -m[(0, j)].clone();
                        }
                    }
                    for j in 1..r {
                        m[(0, j)] = BigInt::from(rng.gen_range(-5i64..=5));
                    }
                    verify_isometry(&m, l).expect("radical shears preserve the form")
                })
                .collect();
            cases += 1;
            match parabolic_group_rank(&gens, l) {
                Ok(rank) if rank < r => {}
                _ => bad += 1,
            }
        }
    }
    (cases, bad)
}

fn criterion_parabolic_rank() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let (cases, bad) = parabolic_corpus_ok(&mut rng);
    let c = build_sublattices(&PrimeSelection::standard()).expect("construction");
    let n = c.n.lattice();
    let rank = generate_isometries(&c)
        .and_then(|gens| gens.into_iter().map(|g| g.big_phi.restrict(&c.n)).collect::<salemlat::Result<Vec<_>>>())
        .and_then(|restricted| parabolic_group_rank(&restricted, &n));
    let bound_ok = rank.as_ref().is_ok_and(|&r| r <= n.rank() - 1);
    outcome(
        bad == 0 && bound_ok && rank.as_ref().ok() == Some(&18),
        format!("{bad}/{cases} corpus violations; K3 generators on N: rank {rank:?} (bound {})", n.rank() - 1),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("Salem classifier agrees with a float root oracle on degree 4 and 6", criterion_salem_oracle),
        ("enumerate_salem(4, 1, 1) matches a brute-force scan", criterion_enumerate_quartic),
        ("Lehmer's number enclosed in [1.176280, 1.176281]", criterion_lehmer),
        ("E8(-1) has 240 vectors of norm -2", criterion_e8_roots),
        ("k3-run on the default primes passes every check with rank 18", criterion_k3_run),
        ("period identities and minimal primitive sublattice", criterion_period),
        ("seeded property suites, 1000 cases each", criterion_properties),
        ("toy phi_1 matrix and extension order 1", criterion_toy_phi),
        ("parabolic rank bound, and rank 18 on N", criterion_parabolic_rank),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        if !o.pass {
            failures += 1;
        }
        println!("[{}] {}. {name} -- {}", if o.pass { "PASS" } else { "FAIL" }, i + 1, o.detail);
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
