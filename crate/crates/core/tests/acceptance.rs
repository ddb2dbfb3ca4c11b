//! Acceptance run: one PASS/FAIL line per criterion. Exits non-zero if any
//! criterion fails.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use k43::complex_sf::rel_diff;
use k43::coxeter_d6::{classify_triple, HammingType};
use k43::hyper_eval::HyperplanePoint;
use k43::mk_cosets::{build_tables, tables};
use k43::relation_engine::*;
use k43::sampler::{sample_points, SamplerKind};
use k43::suites::{all_passed, barnes_lemma_suite, lemma21_suite, terminating_suite};

const PREC: u32 = 128;

const LABELS: [(&str, &str); 32] = [
    ("p0", "000000"),
    ("p1", "011000"),
    ("p2", "101000"),
    ("p3", "110000"),
    ("p4", "000011"),
    ("p5", "011011"),
    ("p6", "101011"),
    ("p7", "110011"),
    ("p8", "000101"),
    ("p9", "011101"),
    ("p10", "101101"),
    ("p11", "110101"),
    ("p12", "000110"),
    ("p13", "011110"),
    ("p14", "101110"),
    ("p15", "110110"),
    ("n0", "111111"),
    ("n1", "100111"),
    ("n2", "010111"),
    ("n3", "001111"),
    ("n4", "111100"),
    ("n5", "100100"),
    ("n6", "010100"),
    ("n7", "001100"),
    ("n8", "111010"),
    ("n9", "100010"),
    ("n10", "010010"),
    ("n11", "001010"),
    ("n12", "111001"),
    ("n13", "100001"),
    ("n14", "010001"),
    ("n15", "001001"),
];

/// Triples per Hamming type, counted independently from the printed labels.
const CENSUS: [(&str, usize); 5] = [("222", 640), ("224", 1440), ("244", 1920), ("246", 480), ("444", 480)];

struct Report {
    failed: usize,
}

impl Report {
    fn line(&mut self, n: u32, ok: bool, what: &str, t: Duration) {
        if !ok {
            self.failed += 1;
        }
        println!(
            "[{}] criterion {n:>2}: {what} ({:.1}s)",
            if ok { "PASS" } else { "FAIL" },
            t.as_secs_f64()
        );
    }
}

fn points(n: usize, seed: u64) -> Vec<HyperplanePoint> {
    sample_points(n, seed, SamplerKind::Central, PREC)
}

fn main() {
    let mut r = Report { failed: 0 };
    let series = KEvaluator::new(EvalPath::Series);

    // 1
    let t = Instant::now();
    let fresh = build_tables().expect("tables");
    let (g, m) = (fresh.g_k.order(), fresh.m_k.order());
    let el = t.elapsed();
    r.line(
        1,
        g == 720 && m == 23040 && el < Duration::from_secs(60),
        &format!("|G_K| = {g}, |M_K| = {m} by closure"),
        el,
    );
    drop(fresh);

    // 2
    let t = Instant::now();
    let reps = tables().coset_representatives();
    let bad: Vec<_> = reps
        .iter()
        .zip(LABELS)
        .filter(|(r, (n, l))| r.name() != *n || r.label.label() != *l)
        .map(|(r, _)| r.name())
        .collect();
    r.line(
        2,
        bad.is_empty(),
        &format!("32 labels match the printed table, mismatches {bad:?}"),
        t.elapsed(),
    );

    // 3
    let t = Instant::now();
    let mut distinct = true;
    for (i, a) in reps.iter().enumerate() {
        distinct &= tables().coset_of(&a.matrix).map(|c| c.position() == i).unwrap_or(false);
    }
    let triples = all_triples();
    let mut census: BTreeMap<String, usize> = BTreeMap::new();
    for tr in &triples {
        *census
            .entry(classify_triple(&tr.map(|r| r.label)).unwrap().to_string())
            .or_default() += 1;
    }
    let want: BTreeMap<String, usize> = CENSUS.iter().map(|(k, v)| (k.to_string(), *v)).collect();
    r.line(
        3,
        distinct && triples.len() == 4960 && census == want,
        &format!(
            "32 inequivalent representatives, {} triples, types {census:?}",
            triples.len()
        ),
        t.elapsed(),
    );

    // 4
    let t = Instant::now();
    let ev = KEvaluator::new(EvalPath::Integral).with_quadrature_tol(1e-11);
    let rep = two_term_suite(&points(3, 41), &ev).expect("two-term suite");
    let el = t.elapsed();
    r.line(
        4,
        rep.max_residual <= 1e-8 && el < Duration::from_secs(600),
        &format!(
            "two-term, 720 elements x 3 points, integral path, max residual {:.2e} <= 1e-8",
            rep.max_residual
        ),
        el,
    );

    // 5
    let t = Instant::now();
    let pts = points(5, 51);
    let mut worst: f64 = 0.0;
    let mut all_ok = true;
    let mut templates: Vec<RelationTemplate> = HammingType::ALL
        .iter()
        .map(|t| canonical_relation(*t).unwrap())
        .collect();
    templates.push(explicit_224_relation());
    templates.push(auxiliary_222_relation());
    for tpl in &templates {
        let c =
            verify_relation(RelationCertificate::from_template(tpl).unwrap(), &pts, 1e-10, &series).expect("verify");
        worst = worst.max(max_residual(&c));
        all_ok &= c.verified == Some(true);
    }
    let el = t.elapsed();
    r.line(
        5,
        all_ok && el < Duration::from_secs(60),
        &format!("five canonical relations and the two fixtures at 5 points, max residual {worst:.2e} <= 1e-10"),
        el,
    );

    // 6
    let t = Instant::now();
    let sub = stratified_triples(40, 61).unwrap();
    let rep = three_term_sweep(&sub, &points(2, 62), 1e-8, &series, |_| {}).expect("subsample");
    let el = t.elapsed();
    r.line(
        6,
        rep.passed() && rep.certificates == 200 && el < Duration::from_secs(120),
        &format!(
            "stratified subsample of {} triples, max residual {:.2e} <= 1e-8",
            rep.certificates, rep.max_residual
        ),
        el,
    );
    let pts = points(2, 63);
    for (path, ev) in [
        ("series", series.clone()),
        (
            "integral",
            KEvaluator::new(EvalPath::Integral).with_quadrature_tol(1e-12),
        ),
    ] {
        let t = Instant::now();
        let rep = three_term_sweep(&triples, &pts, 1e-8, &ev, |_| {}).expect("sweep");
        let el = t.elapsed();
        r.line(
            6,
            rep.passed() && rep.certificates == 4960 && el < Duration::from_secs(1800),
            &format!(
                "all {} certificates verified at 2 points, {path} path, max residual {:.2e} <= 1e-8",
                rep.verified, rep.max_residual
            ),
            el,
        );
    }

    // 7
    let t = Instant::now();
    let mut counts = Vec::new();
    let mut ok = true;
    for ty in HammingType::ALL {
        let c = canonical_certificate(ty).unwrap();
        let d = c.opposite_distances().unwrap();
        let want = d.map(|d| 1usize << (d / 2 - 1));
        ok &= c.monomial_counts() == want;
        counts.push(format!("{ty}:{:?}", c.monomial_counts()));
    }
    r.line(
        7,
        ok,
        &format!("monomial counts 1/2/4 opposite distances 2/4/6: {}", counts.join(" ")),
        t.elapsed(),
    );

    // 8
    let t = Instant::now();
    let ev = KEvaluator::new(EvalPath::Integral).with_quadrature_tol(1e-13);
    let mut worst: f64 = 0.0;
    for x in points(20, 81) {
        let a = series.eval(&x).unwrap();
        let b = ev.eval(&x).unwrap();
        worst = worst.max(rel_diff(&a, &b));
    }
    r.line(
        8,
        worst <= 1e-10,
        &format!("series and integral agree at 20 points, max relative difference {worst:.2e} <= 1e-10"),
        t.elapsed(),
    );

    // 9
    let t = Instant::now();
    let b = barnes_lemma_suite(50, 91, 1e-12).unwrap();
    let l = lemma21_suite(&[0.3, 0.8, 1.25, 3.0], 5, 92, 1e-10).unwrap();
    let wb = b.iter().map(|r| r.residual).fold(0.0, f64::max);
    let wl = l.iter().map(|r| r.residual).fold(0.0, f64::max);
    r.line(
        9,
        all_passed(&b) && all_passed(&l),
        &format!("Barnes lemma at 50 sets max {wb:.2e} <= 1e-12; four-gamma z^t integral at z in {{0.3,0.8,1.25,3}} max {wl:.2e} <= 1e-10"),
        t.elapsed(),
    );

    // 10
    let t = Instant::now();
    let rows = terminating_suite(5, 6, 101).unwrap();
    r.line(
        10,
        all_passed(&rows),
        &format!(
            "terminating identity and invariance exact for n <= 5, {} checks",
            rows.len()
        ),
        t.elapsed(),
    );

    println!("{} criteria lines failed", r.failed);
    if r.failed > 0 {
        std::process::exit(1);
    }
}
