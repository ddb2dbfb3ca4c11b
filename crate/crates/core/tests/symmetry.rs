use rug::Complex;

use k43::barnes_integral::{choose_contour, k_integral, k_integral_detailed, k_integrand, QuadratureOptions};
use k43::complex_sf::{abs_f64, c, rel_diff};
use k43::group_core::ExactMatrix7;
use k43::hyper_eval::{k_function, HyperplanePoint, SeriesOptions};
use k43::mk_cosets::{s_conjugate, tables};
use k43::sampler::{sample_points, SamplerKind};

const P: u32 = 128;

fn points(n: usize, seed: u64) -> Vec<HyperplanePoint> {
    sample_points(n, seed, SamplerKind::Central, P)
}

fn series(x: &HyperplanePoint) -> Complex {
    k_function(x, &SeriesOptions::default()).unwrap()
}

fn integral(x: &HyperplanePoint) -> Complex {
    k_integral(x, &QuadratureOptions::with_tol(1e-14)).unwrap()
}

fn s45() -> ExactMatrix7 {
    s_conjugate("(45)").unwrap()
}

#[test]
fn s45_acts_as_stated() {
    let x = &points(1, 3)[0];
    let y = x.transform(&s45());
    let [a, b, c, d, e, f, g] = x.coords();
    let want = [
        Complex::with_val(P, a),
        Complex::with_val(P, e - c),
        Complex::with_val(P, e - b),
        Complex::with_val(P, d),
        Complex::with_val(P, e),
        Complex::with_val(P, a + d) - g + 1,
        Complex::with_val(P, a + d) - f + 1,
    ];
    for (u, v) in y.coords().iter().zip(&want) {
        assert!(rel_diff(u, v) < 1e-35);
    }
}

#[test]
fn b_c_swap_on_both_paths() {
    let swap = ExactMatrix7::from_cycles("(23)").unwrap();
    for x in points(3, 5) {
        let y = x.transform(&swap);
        assert!(rel_diff(&series(&x), &series(&y)) < 1e-25);
        assert!(rel_diff(&integral(&x), &integral(&y)) < 1e-12);
    }
}

#[test]
fn s45_invariance_on_both_paths() {
    for x in points(3, 7) {
        let y = x.transform(&s45());
        assert!(rel_diff(&series(&x), &series(&y)) < 1e-25);
        assert!(rel_diff(&integral(&x), &integral(&y)) < 1e-12);
    }
}

#[test]
fn invariance_under_all_of_g_k() {
    let opts = SeriesOptions::default();
    for x in points(5, 11) {
        let k = series(&x);
        for g in tables().g_k.iter() {
            let kg = k_function(&x.transform(g), &opts).unwrap();
            assert!(rel_diff(&k, &kg) <= 1e-8);
        }
    }
}

#[test]
fn series_and_integral_agree() {
    for x in points(4, 13) {
        assert!(rel_diff(&series(&x), &integral(&x)) < 1e-10);
    }
}

#[test]
fn quadrature_error_estimate_is_honest() {
    for x in points(3, 17) {
        let q = k_integral_detailed(&x, &QuadratureOptions::with_tol(1e-12)).unwrap();
        let actual = rel_diff(&q.value, &series(&x));
        assert!(q.error_estimate <= 1e-12, "{:e}", q.error_estimate);
        assert!(actual <= 1e-12, "{actual:e}");
        assert!(rel_diff(&q.coarser_value, &q.value) < 1e-3);
    }
}

#[test]
fn integrand_decays_like_exp_minus_two_pi() {
    let x = &points(1, 19)[0];
    let f = k_integrand(x, P);
    assert!((f.decay_rate() - std::f64::consts::TAU).abs() < 1e-12);
    let t0 = choose_contour(&f, &QuadratureOptions::default()).unwrap().t0;
    let ln_abs = |y: f64| abs_f64(&f.eval(&c(P, t0, y), P).unwrap()).ln();
    let slope = (ln_abs(30.0) - ln_abs(15.0)) / 15.0;
    assert!(
        slope < -std::f64::consts::PI && slope > -4.0 * std::f64::consts::PI,
        "{slope}"
    );
}
