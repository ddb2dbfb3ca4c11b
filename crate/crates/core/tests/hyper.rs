use std::time::Instant;

use k43::complex_sf::{parse_complex, rel_diff};
use k43::hyper_eval::{k_function, k_function_parts, HyperplanePoint, SeriesOptions};

const P: u32 = 128;

fn x_star() -> HyperplanePoint {
    HyperplanePoint::parse("0.31, 0.27+0.11i, 0.44, 0.52-0.11i, 1.13, 1.21", P).unwrap()
}

#[test]
fn k_at_fixed_sample_point() {
    let want = parse_complex(
        "0.0839591873605895958831529581028+0.0206483661824715137151534089799i",
        P,
    )
    .unwrap();
    let x = x_star();
    let t = Instant::now();
    let k = k_function(&x, &SeriesOptions::default()).unwrap();
    eprintln!("K(x*) in {:?}", t.elapsed());
    assert!(rel_diff(&k, &want) < 1e-29, "{}", rel_diff(&k, &want));
    let (_, s) = k_function_parts(&x, &SeriesOptions::default()).unwrap();
    for r in &s {
        assert!(r.accelerated);
        eprintln!("terms {} bound {:e}", r.terms_used, r.tail_bound);
    }
}

#[test]
#[ignore]
fn k_timing() {
    let x = x_star();
    k_function(&x, &SeriesOptions::default()).unwrap();
    let t = Instant::now();
    for _ in 0..20 {
        k_function(&x, &SeriesOptions::default()).unwrap();
    }
    eprintln!("K(x*) avg {:?}", t.elapsed() / 20);
}

#[test]
#[ignore]
fn integral_timing() {
    use k43::barnes_integral::{k_integral_detailed, QuadratureOptions};
    for x in k43::sampler::sample_points(3, 1, k43::sampler::SamplerKind::Central, P) {
        let ks = k_function(&x, &SeriesOptions::default()).unwrap();
        for tol in [1e-12, 1e-14, 1e-20] {
            let t = Instant::now();
            let q = k_integral_detailed(&x, &QuadratureOptions::with_tol(tol)).unwrap();
            eprintln!(
                "tol {tol:e}: {:?} nodes {} halvings {} est {:e} actual {:e} contour {:?}",
                t.elapsed(),
                q.nodes,
                q.halvings,
                q.error_estimate,
                rel_diff(&q.value, &ks),
                q.contour
            );
        }
    }
}
