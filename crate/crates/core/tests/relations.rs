use std::time::Instant;

use k43::coxeter_d6::HammingType;
use k43::hyper_eval::HyperplanePoint;
use k43::mk_cosets::tables;
use k43::relation_engine::*;
use k43::sampler::{sample_points, SamplerKind};

const P: u32 = 128;

fn points(n: usize, seed: u64) -> Vec<HyperplanePoint> {
    sample_points(n, seed, SamplerKind::Central, P)
}

fn x_star() -> HyperplanePoint {
    HyperplanePoint::parse("0.31, 0.27+0.11i, 0.44, 0.52-0.11i, 1.13, 1.21", P).unwrap()
}

#[test]
fn canonical_relations_hold() {
    let ev = KEvaluator::new(EvalPath::Series);
    let pts = points(2, 7);
    for t in HammingType::ALL {
        let cert = verify_relation(canonical_certificate(t).unwrap(), &pts, 1e-10, &ev).unwrap();
        assert_eq!(
            cert.verified,
            Some(true),
            "{t}: {:?}",
            cert.residuals.iter().map(|r| r.residual).collect::<Vec<_>>()
        );
    }
}

#[test]
fn fixtures_hold_at_the_sample_point() {
    let ev = KEvaluator::new(EvalPath::Series);
    for t in [explicit_224_relation(), auxiliary_222_relation()] {
        let c = RelationCertificate::from_template(&t).unwrap();
        let c = verify_relation(c, &[x_star()], 1e-10, &ev).unwrap();
        assert_eq!(c.verified, Some(true), "{:?}", c.residuals[0].residual);
    }
}

#[test]
fn canonical_monomial_counts() {
    for t in HammingType::ALL {
        let c = canonical_certificate(t).unwrap();
        let d = c.opposite_distances().unwrap();
        let want = d.map(|d| 1usize << (d / 2 - 1));
        assert_eq!(c.monomial_counts(), want, "{t}");
    }
}

#[test]
fn worked_example_triple() {
    let c = build_relation_by_name(["p0", "p3", "n12"]).unwrap();
    assert_eq!(c.hamming_type, HammingType::T224);
    let c = verify_relation(c, &points(2, 3), 1e-8, &KEvaluator::new(EvalPath::Series)).unwrap();
    assert_eq!(c.verified, Some(true));
}

#[test]
fn transport_hits_the_requested_cosets() {
    let tb = tables();
    for t in all_triples().into_iter().step_by(97) {
        let c = build_relation(t).unwrap();
        let canon = c.canonical_triple.clone();
        for i in 0..3 {
            let src = tb.rep_by_name(&canon[i]).unwrap();
            let got = tb.coset_of(&(&src.matrix * &c.rho)).unwrap();
            assert_eq!(got.name(), c.triple[i]);
        }
    }
}

#[test]
fn corrupted_coefficient_fails() {
    let mut c = canonical_certificate(HammingType::T224).unwrap();
    let m = &mut c.coefficients[1].monomials[0];
    m.constant = -m.constant.clone();
    let c = verify_relation(c, &points(1, 5), 1e-10, &KEvaluator::new(EvalPath::Series)).unwrap();
    assert!(c.residuals[0].residual >= 1e-2);
}

#[test]
fn certificate_json_round_trip() {
    let ev = KEvaluator::new(EvalPath::Series);
    let c = verify_relation(
        build_relation_by_name(["p2", "n5", "p9"]).unwrap(),
        &points(1, 9),
        1e-8,
        &ev,
    )
    .unwrap();
    let back = RelationCertificate::from_json(&c.to_json()).unwrap();
    assert_eq!(back, c);
    let pts: Vec<HyperplanePoint> = back.residuals.iter().map(|r| r.point.clone()).collect();
    let again = verify_relation(back, &pts, 1e-8, &ev).unwrap();
    assert_eq!(again.residuals, c.residuals);
}

#[test]
#[ignore]
fn sweep_timing() {
    let t = Instant::now();
    let certs: Vec<_> = all_triples().into_iter().map(|t| build_relation(t).unwrap()).collect();
    eprintln!("built {} in {:?}", certs.len(), t.elapsed());
    let mut hist = std::collections::BTreeMap::new();
    for c in &certs {
        *hist
            .entry((c.hamming_type.to_string(), c.monomial_counts()))
            .or_insert(0) += 1;
    }
    eprintln!("{hist:?}");
    let t = Instant::now();
    let ev = KEvaluator::new(EvalPath::Series);
    let rep = three_term_sweep(&all_triples(), &points(2, 1), 1e-8, &ev, |_| {}).unwrap();
    eprintln!(
        "sweep {:?} max {:e} failures {:?}",
        t.elapsed(),
        rep.max_residual,
        &rep.failures[..rep.failures.len().min(5)]
    );
}
