use proptest::prelude::*;
use rug::ops::Pow;
use rug::{Complex, Float};

use k43::complex_sf::{c, gamma, pochhammer, recip_gamma, rel_diff, sin_pi};
use k43::group_core::Rational;
use k43::hyper_eval::{gauss_f21, pfq_unit, terminating_f43_exact, SeriesOptions};

const P: u32 = 128;

fn pi() -> Complex {
    Complex::with_val(P, Float::with_val(P, rug::float::Constant::Pi))
}

fn near_pole(re: f64, im: f64) -> bool {
    im.abs() < 1e-3 && re <= 0.5 && (re - re.round()).abs() < 1e-3
}

fn arb_z() -> impl Strategy<Value = (f64, f64)> {
    (-20.0..20.0f64, -20.0..20.0f64)
        .prop_filter("|z| <= 20", |(x, y)| x * x + y * y <= 400.0)
        .prop_filter("away from poles", |(x, y)| {
            !near_pole(*x, *y) && !near_pole(x + 1.0, *y)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn recurrence((x, y) in arb_z()) {
        let z = c(P, x, y);
        let g1 = gamma(&Complex::with_val(P, &z + 1), P).unwrap();
        let g = gamma(&z, P).unwrap();
        let zg = Complex::with_val(P, &z * &g);
        prop_assert!(rel_diff(&g1, &zg) <= 1e-25);
    }

    #[test]
    fn reflection((x, y) in arb_z()) {
        prop_assume!(!near_pole(1.0 - x, -y));
        let z = c(P, x, y);
        let one_minus = Complex::with_val(P, 1 - &z);
        let lhs = gamma(&z, P).unwrap() * gamma(&one_minus, P).unwrap() * sin_pi(&z, P).unwrap() / pi();
        prop_assert!(rel_diff(&lhs, &c(P, 1.0, 0.0)) <= 1e-25);
    }

    #[test]
    fn recip_gamma_inverts_gamma((x, y) in arb_z()) {
        let z = c(P, x, y);
        let prod = gamma(&z, P).unwrap() * recip_gamma(&z, P).unwrap();
        prop_assert!(rel_diff(&prod, &c(P, 1.0, 0.0)) <= 1e-25);
    }

    #[test]
    fn pochhammer_is_a_gamma_ratio(x in 0.1..8.0f64, y in -3.0..3.0f64, k in 0u32..30) {
        let a = c(P, x, y);
        let ak = Complex::with_val(P, &a + k);
        let ratio = gamma(&ak, P).unwrap() / gamma(&a, P).unwrap();
        prop_assert!(rel_diff(&pochhammer(&a, k, P), &ratio) <= 1e-25);
    }
}

fn arb_abc() -> impl Strategy<Value = [(f64, f64); 3]> {
    let p = || (0.1..0.9f64, -0.5..0.5f64);
    (p(), p(), (1.1..2.0f64, -0.5..0.5f64)).prop_map(|(a, b, c)| [a, b, c])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn pfaff_transformation(abc in arb_abc(), zr in -0.4..0.4f64, zi in -0.3..0.3f64) {
        let [a, b, cc] = abc.map(|(x, y)| c(P, x, y));
        let z = c(P, zr, zi);
        let lhs = gauss_f21(&a, &b, &cc, &z, P).unwrap();
        let one_minus = Complex::with_val(P, 1 - &z);
        let w = Complex::with_val(P, &z / Complex::with_val(P, &z - 1));
        let pw = Complex::with_val(P, (&one_minus).pow(Complex::with_val(P, -&b)));
        let rhs = pw * gauss_f21(&Complex::with_val(P, &cc - &a), &b, &cc, &w, P).unwrap();
        prop_assert!(rel_diff(&lhs, &rhs) <= 1e-25);
    }

    #[test]
    fn gauss_connection(abc in arb_abc(), z in 0.25..0.75f64) {
        let [a, b, cc] = abc.map(|(x, y)| c(P, x, y));
        let z = c(P, z, 0.0);
        let w = Complex::with_val(P, 1 - &z);
        let g = |v: Complex| gamma(&v, P).unwrap();
        let cab = Complex::with_val(P, &cc - &a) - &b;
        let first = g(cc.clone()) * g(cab.clone())
            / (g(Complex::with_val(P, &cc - &a)) * g(Complex::with_val(P, &cc - &b)))
            * gauss_f21(&a, &b, &Complex::with_val(P, 1 - &cab), &w, P).unwrap();
        let second = Complex::with_val(P, (&w).pow(&cab)) * g(cc.clone()) * g(Complex::with_val(P, -&cab))
            / (g(a.clone()) * g(b.clone()))
            * gauss_f21(
                &Complex::with_val(P, &cc - &a),
                &Complex::with_val(P, &cc - &b),
                &Complex::with_val(P, &cab + 1),
                &w,
                P,
            )
            .unwrap();
        let lhs = gauss_f21(&a, &b, &cc, &z, P).unwrap();
        prop_assert!(rel_diff(&lhs, &(first + second)) <= 1e-24);
    }

    #[test]
    fn terminating_series_is_the_exact_sum(
        n in 0u32..8,
        num in prop::array::uniform3((1i64..40, 1i64..9)),
        den in prop::array::uniform3((1i64..40, 1i64..9)),
    ) {
        let q = |(p, d): (i64, i64)| Rational::new(p, d);
        let [a, b, cc] = num.map(q);
        let [e, f, g] = den.map(q);
        let exact = terminating_f43_exact(&a, &b, &cc, n, &e, &f, &g).unwrap();
        let to_c = |r: &Rational| Complex::with_val(P, r.as_rug());
        let numer = [to_c(&a), to_c(&b), to_c(&cc), c(P, -(n as f64), 0.0)];
        let denom = [to_c(&e), to_c(&f), to_c(&g)];
        let got = pfq_unit(&numer, &denom, P, &SeriesOptions::default()).unwrap();
        prop_assert!(rel_diff(&got.value, &to_c(&exact)) <= 1e-30);
    }
}
