//! Self-contained check suites shared by the command-line tool and tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::Complex;
use serde::Serialize;

use crate::barnes_integral::{barnes_lemma_check, lemma21_check, QuadratureOptions};
use crate::complex_sf::{c, format_complex, rel_diff};
use crate::error::Result;
use crate::group_core::Rational;
use crate::hyper_eval::{terminating_identity_exact, terminating_invariance_exact};
use crate::relation_engine::sine_identity_sides;
use crate::sampler::{Sampler, SamplerKind};

/// One line of a suite report.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteRow {
    pub suite: String,
    pub params: String,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl SuiteRow {
    fn new(suite: &str, params: String, residual: f64, tolerance: f64) -> Self {
        SuiteRow {
            suite: suite.into(),
            params,
            residual,
            tolerance,
            passed: residual <= tolerance,
        }
    }
}

pub fn all_passed(rows: &[SuiteRow]) -> bool {
    rows.iter().all(|r| r.passed)
}

fn random_param(rng: &mut ChaCha8Rng, prec: u32) -> Complex {
    c(prec, rng.gen_range(0.1..0.9), rng.gen_range(-0.5..0.5))
}

fn show(v: &[&Complex]) -> String {
    v.iter().map(|z| format_complex(z, 6)).collect::<Vec<_>>().join(", ")
}

/// Barnes' lemma at `count` random `(a,b,c,d)` with real parts in
/// `[0.1, 0.9]`, where the line `Re t = 0` separates the poles.
pub fn barnes_lemma_suite(count: usize, seed: u64, tol: f64) -> Result<Vec<SuiteRow>> {
    let opts = QuadratureOptions::with_tol(tol / 100.0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::with_capacity(count);
    for _ in 0..count {
        let p: Vec<Complex> = (0..4).map(|_| random_param(&mut rng, opts.prec)).collect();
        let r = barnes_lemma_check(&p[0], &p[1], &p[2], &p[3], &opts)?;
        rows.push(SuiteRow::new(
            "barnes-lemma",
            show(&[&p[0], &p[1], &p[2], &p[3]]),
            r,
            tol,
        ));
    }
    Ok(rows)
}

/// The four-gamma integral with `z^t` against its closed form, `per_z`
/// random parameter sets for each `z`.
pub fn lemma21_suite(zs: &[f64], per_z: usize, seed: u64, tol: f64) -> Result<Vec<SuiteRow>> {
    let opts = QuadratureOptions::with_tol(tol / 100.0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::new();
    for &zv in zs {
        let z = c(opts.prec, zv, 0.0);
        for _ in 0..per_z {
            let p: Vec<Complex> = (0..4).map(|_| random_param(&mut rng, opts.prec)).collect();
            let r = lemma21_check(&p[0], &p[1], &p[2], &p[3], &z, &opts)?;
            let branch = if zv < 1.0 { "|z|<1" } else { "|z|>1" };
            rows.push(SuiteRow::new(
                &format!("lemma-2.1 z={zv} {branch}"),
                show(&[&p[0], &p[1], &p[2], &p[3]]),
                r,
                tol,
            ));
        }
    }
    Ok(rows)
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-24..=24), rng.gen_range(1..=9))
}

/// The terminating transformation and the invariance of
/// `(e)_n(f)_n(g)_n ₄F₃(a,b,c,-n;e,f,g;1)`, exactly, at `trials` random
/// balanced rational parameter sets for each `n = 1..=n_max`. The residual
/// is 0 on exact agreement and 1 otherwise.
pub fn terminating_suite(n_max: u32, trials: usize, seed: u64) -> Result<Vec<SuiteRow>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let mut done = 0;
        while done < trials {
            let [a, b, cc, e, f] = std::array::from_fn(|_| random_rational(&mut rng));
            // balanced: e + f + g = 1 + a + b + c - n
            let g = &(&(&(&a + &b) + &cc) + &Rational::from(1 - n as i64)) - &(&e + &f);
            let (Ok((l, r)), Ok((u, v))) = (
                terminating_identity_exact(&a, &b, &cc, &e, &f, &g, n),
                terminating_invariance_exact(&a, &b, &cc, &e, &f, &g, n),
            ) else {
                continue;
            };
            let params = format!("n={n} a={a} b={b} c={cc} e={e} f={f} g={g}");
            rows.push(SuiteRow::new(
                "terminating-identity",
                params.clone(),
                if l == r { 0.0 } else { 1.0 },
                0.0,
            ));
            rows.push(SuiteRow::new(
                "terminating-invariance",
                params,
                if u == v { 0.0 } else { 1.0 },
                0.0,
            ));
            done += 1;
        }
    }
    Ok(rows)
}

/// Maximum relative defect of the four-sine identity over `count` random
/// points of the hyperplane.
pub fn sine_identity_max_residual(count: usize, seed: u64, prec: u32) -> Result<f64> {
    let mut s = Sampler::new(seed, SamplerKind::Box, prec).with_margin(0.0);
    let mut worst: f64 = 0.0;
    for _ in 0..count {
        let (l, r) = sine_identity_sides(&s.next_point())?;
        worst = worst.max(rel_diff(&l, &r));
    }
    Ok(worst)
}
