use rug::{Complex, Float, Integer, Rational};
use serde::{Deserialize, Serialize};

use crate::complex_sf::{abs_f64, bernoulli, exact_integer, hurwitz_zeta, recip_gamma, GUARD_BITS};
use crate::error::{Error, Result};

/// Outcome of a unit-argument series evaluation.
#[derive(Clone, Debug)]
pub struct SeriesResult {
    pub value: Complex,
    pub terms_used: usize,
    pub tail_bound: f64,
    pub accelerated: bool,
}

/// Controls for unit-argument summation.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SeriesOptions {
    /// Requested relative accuracy; `None` means `2^(16-prec)`.
    pub tol: Option<f64>,
    /// Terms summed directly before the asymptotic tail is attached.
    pub direct_terms: usize,
    /// Upper limit for the direct part after repeated doubling.
    pub max_direct_terms: usize,
}

impl Default for SeriesOptions {
    fn default() -> Self {
        SeriesOptions {
            tol: None,
            direct_terms: 128,
            max_direct_terms: 16384,
        }
    }
}

impl SeriesOptions {
    pub fn tolerance(&self, prec: u32) -> f64 {
        self.tol.unwrap_or_else(|| (16.0 - prec as f64).exp2())
    }
}

/// `Σ_k Π(a_i)_k / (k! Π(b_j)_k)` at unit argument, or with
/// `regularized`, `Σ_k Π(a_i)_k / (k! Π Γ(b_j+k))`.
///
/// The direct sum over `k < N` is completed by the asymptotic expansion
/// `t_k ≈ C k^{-s} Σ_j c_j k^{-j}` summed with Hurwitz zeta values, where
/// `s = Σb + 1 - Σa` and the `c_j` follow from the Bernoulli-polynomial
/// expansion of `ln Γ(k+x)`.
pub fn unit_series(
    num: &[Complex],
    den: &[Complex],
    regularized: bool,
    prec: u32,
    opts: &SeriesOptions,
) -> Result<SeriesResult> {
    if num.len() != den.len() + 1 {
        return Err(Error::Divergent(format!(
            "unit argument needs p = q+1 (got {} over {})",
            num.len(),
            den.len()
        )));
    }
    let wp = prec + GUARD_BITS;
    let tol = opts.tolerance(prec);
    let num: Vec<Complex> = num.iter().map(|x| Complex::with_val(wp, x)).collect();
    let den: Vec<Complex> = den.iter().map(|x| Complex::with_val(wp, x)).collect();

    let terminate_at = num
        .iter()
        .filter_map(exact_integer)
        .filter(|&n| n <= 0)
        .map(|n| (-n) as usize)
        .min();
    let polar: Vec<bool> = den.iter().map(|b| exact_integer(b).is_some_and(|n| n <= 0)).collect();
    if !regularized {
        for (b, &p) in den.iter().zip(&polar) {
            if p {
                let m = (-exact_integer(b).unwrap()) as usize;
                if terminate_at.map_or(true, |n| m < n) {
                    return Err(Error::PoleConfiguration(format!(
                        "denominator parameter {} is a nonpositive integer",
                        -(m as i64)
                    )));
                }
            }
        }
    }
    if terminate_at.is_none() {
        let mut excess = Complex::with_val(wp, 0);
        for b in &den {
            excess += b;
        }
        for a in &num {
            excess -= a;
        }
        let re = excess.real().to_f64();
        if re <= 0.0 {
            return Err(Error::ConvergenceCondition(re));
        }
    }

    // term = part · Π_{polar j} rg[j]; non-polar denominators live in `part`
    let mut part = Complex::with_val(wp, 1);
    let mut rg: Vec<Complex> = vec![Complex::with_val(wp, 1); den.len()];
    if regularized {
        for (j, b) in den.iter().enumerate() {
            let r = recip_gamma(b, wp)?;
            if polar[j] {
                rg[j] = r;
            } else {
                part *= r;
            }
        }
    }
    let any_polar = regularized && polar.iter().any(|&p| p);
    let term_of = |part: &Complex, rg: &[Complex]| -> Complex {
        let mut t = part.clone();
        if any_polar {
            for (j, r) in rg.iter().enumerate() {
                if polar[j] {
                    t *= r;
                }
            }
        }
        t
    };

    let mut sum = Complex::with_val(wp, 0);
    let mut k = 0usize;
    let mut checkpoint = opts.direct_terms.max(16);
    loop {
        let t = term_of(&part, &rg);
        if terminate_at == Some(k) {
            sum += &t;
            return Ok(SeriesResult {
                value: Complex::with_val(prec, sum),
                terms_used: k + 1,
                tail_bound: 0.0,
                accelerated: false,
            });
        }
        if terminate_at.is_none() && k == checkpoint {
            if t.is_zero() {
                return Ok(SeriesResult {
                    value: Complex::with_val(prec, sum),
                    terms_used: k,
                    tail_bound: 0.0,
                    accelerated: false,
                });
            }
            let mut den1 = den.clone();
            den1.push(Complex::with_val(wp, 1));
            let (tail, bound) = asymptotic_tail(&num, &den1, &t, k as u32, wp)?;
            let total = Complex::with_val(wp, &sum + &tail);
            let scale = abs_f64(&total).max(f64::MIN_POSITIVE);
            if bound <= tol * scale || checkpoint >= opts.max_direct_terms {
                if bound > tol * scale {
                    return Err(Error::AccelerationFailure {
                        tail_bound: bound / scale,
                        tolerance: tol,
                    });
                }
                return Ok(SeriesResult {
                    value: Complex::with_val(prec, total),
                    terms_used: k,
                    tail_bound: bound,
                    accelerated: true,
                });
            }
            checkpoint *= 2;
        }
        sum += &t;
        // advance to k+1
        let kk = k as u32;
        for a in &num {
            part *= Complex::with_val(wp, a + kk);
        }
        let mut d = Complex::with_val(wp, kk + 1);
        for (j, b) in den.iter().enumerate() {
            let bk = Complex::with_val(wp, b + kk);
            if regularized && polar[j] {
                if bk.is_zero() {
                    rg[j] = Complex::with_val(wp, 1);
                } else {
                    rg[j] /= bk;
                }
            } else {
                d *= bk;
            }
        }
        part /= d;
        k += 1;
    }
}

/// Tail `Σ_{k≥N} t_k` from `t_N` and the parameters, with an error bound.
fn asymptotic_tail(num: &[Complex], den1: &[Complex], t_n: &Complex, n: u32, wp: u32) -> Result<(Complex, f64)> {
    let hp = wp + 96;
    let mut s = Complex::with_val(hp, 0);
    for b in den1 {
        s += b;
    }
    for a in num {
        s -= a;
    }
    const J_MAX: usize = 120;
    // power sums P_m = Σ a^m - Σ b^m, built on demand
    let mut pows: Vec<Complex> = num.iter().chain(den1).map(|_| Complex::with_val(hp, 1)).collect();
    let sign: Vec<i32> = num.iter().map(|_| 1).chain(den1.iter().map(|_| -1)).collect();
    let params: Vec<Complex> = num.iter().chain(den1).map(|x| Complex::with_val(hp, x)).collect();
    let mut p_sums: Vec<Complex> = vec![Complex::with_val(hp, (num.len() as i64) - (den1.len() as i64))];
    let mut next_power = |p_sums: &mut Vec<Complex>| {
        let mut acc = Complex::with_val(hp, 0);
        for (i, x) in params.iter().enumerate() {
            pows[i] *= x;
            if sign[i] > 0 {
                acc += &pows[i];
            } else {
                acc -= &pows[i];
            }
        }
        p_sums.push(acc);
    };
    let mut d_coef: Vec<Complex> = vec![Complex::with_val(hp, 0)]; // D_0 unused
    let mut c_coef: Vec<Complex> = vec![Complex::with_val(hp, 1)];

    let nf = Float::with_val(hp, n);
    let inv_n = Float::with_val(hp, nf.recip_ref());
    let mut n_pow = Float::with_val(hp, 1); // N^{-j}
    let mut norm = Complex::with_val(hp, 0); // Σ c_j N^{-j}
    let mut tail_sum = Complex::with_val(hp, 0); // Σ c_j ζ(s+j, N)
    let eps = (-(wp as f64) - 8.0).exp2();
    let mut prev_mag = f64::INFINITY;
    let mut small_run = 0;
    let mut bound_rel = f64::INFINITY;
    for j in 0..J_MAX {
        if j > 0 {
            // D_j
            while p_sums.len() < j + 2 {
                next_power(&mut p_sums);
            }
            let mut acc = Complex::with_val(hp, 0);
            let mut binom = Integer::from(1);
            for kk in 0..=j + 1 {
                let b = bernoulli(kk);
                if b != 0 {
                    let coef = Rational::from(&b * &binom);
                    acc += Complex::with_val(hp, &p_sums[j + 1 - kk] * &coef);
                }
                binom = binom * (j + 1 - kk) as u32 / (kk + 1) as u32;
            }
            let sgn = if j % 2 == 1 { 1 } else { -1 };
            let scale = Rational::from((sgn, (j * (j + 1)) as u32));
            d_coef.push(acc * scale);
            // c_j = (1/j) Σ_{m=1}^{j} m D_m c_{j-m}
            let mut cj = Complex::with_val(hp, 0);
            for m in 1..=j {
                cj += Complex::with_val(hp, &d_coef[m] * &c_coef[j - m]) * (m as u32);
            }
            cj /= j as u32;
            c_coef.push(cj);
            n_pow *= &inv_n;
        }
        let cj = &c_coef[j];
        norm += Complex::with_val(hp, cj * &n_pow);
        let sj = Complex::with_val(hp, &s + (j as u32));
        let z = hurwitz_zeta(&sj, n, hp)?;
        let term = Complex::with_val(hp, cj * &z);
        tail_sum += &term;
        let mag = abs_f64(&term) / abs_f64(&tail_sum).max(f64::MIN_POSITIVE);
        if mag < eps {
            small_run += 1;
            if small_run >= 2 {
                bound_rel = mag * 4.0 + eps;
                break;
            }
        } else {
            small_run = 0;
        }
        if j > 4 && mag > prev_mag {
            // asymptotic series started to diverge
            bound_rel = prev_mag * 4.0;
            break;
        }
        prev_mag = mag;
        bound_rel = mag * 4.0;
    }
    // C = t_N N^s / Σ c_j N^{-j}
    let ln_n = Float::with_val(hp, nf.ln_ref());
    let n_s = Complex::with_val(hp, &s * &ln_n).exp();
    let cst = Complex::with_val(hp, t_n * &n_s) / norm;
    let tail = Complex::with_val(hp, &cst * &tail_sum);
    let bound = bound_rel * abs_f64(&tail);
    Ok((Complex::with_val(wp, tail), bound))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex_sf::{c, gamma, rel_diff};

    const P: u32 = 128;

    #[test]
    fn gauss_sum_at_unit_argument() {
        // 2F1(a,b;c;1) = Γ(c)Γ(c-a-b)/(Γ(c-a)Γ(c-b))
        let (a, b, cc) = (c(P, 0.3, 0.2), c(P, -0.4, 0.1), c(P, 1.7, -0.3));
        let r = unit_series(
            &[a.clone(), b.clone()],
            std::slice::from_ref(&cc),
            false,
            P,
            &SeriesOptions::default(),
        )
        .unwrap();
        let g = |z: Complex| gamma(&z, P).unwrap();
        let want = g(cc.clone()) * g(Complex::with_val(P, &cc - &a) - &b)
            / (g(Complex::with_val(P, &cc - &a)) * g(Complex::with_val(P, &cc - &b)));
        assert!(rel_diff(&r.value, &want) < 1e-33, "{}", rel_diff(&r.value, &want));
        assert!(r.accelerated);
    }

    #[test]
    fn terminating_and_polar_denominators() {
        let one = c(P, 1.0, 0.0);
        let r = unit_series(
            &[c(P, 0.3, 0.0), c(P, 0.0, 0.0)],
            &[c(P, 0.7, 0.0)],
            false,
            P,
            &SeriesOptions::default(),
        )
        .unwrap();
        assert!(rel_diff(&r.value, &one) < 1e-36);
        assert_eq!(r.terms_used, 1);
        let e = unit_series(
            &[c(P, 0.3, 0.0), c(P, 0.5, 0.0)],
            &[c(P, -2.0, 0.0)],
            false,
            P,
            &SeriesOptions::default(),
        );
        assert!(matches!(e, Err(Error::PoleConfiguration(_))));
        let e = unit_series(
            &[c(P, 0.3, 0.0), c(P, 0.5, 0.0)],
            &[c(P, 0.7, 0.0)],
            false,
            P,
            &SeriesOptions::default(),
        );
        assert!(matches!(e, Err(Error::ConvergenceCondition(_))));
    }

    #[test]
    fn regularized_limit_at_polar_denominator() {
        // Σ (a)_k(b)_k / (k! Γ(c+k)) is continuous in c across c = -1
        let (a, b) = (c(P, 0.2, 0.1), c(P, -1.9, 0.3));
        let at = |cc: Complex| {
            unit_series(&[a.clone(), b.clone()], &[cc], true, P, &SeriesOptions::default())
                .unwrap()
                .value
        };
        let exact = at(c(P, -1.0, 0.0));
        let h = Float::with_val(P, Float::i_exp(1, -100));
        let near = at(Complex::with_val(P, (Float::with_val(P, -1) + &h, 0)));
        assert!(rel_diff(&exact, &near) < 1e-25);
    }
}
