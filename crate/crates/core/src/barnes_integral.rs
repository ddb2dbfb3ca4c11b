//! Mellin–Barnes integrals along a vertical line, evaluated by the
//! trapezoidal rule with step halving. Gives a second, independent way to
//! compute `K`.

use rug::float::Constant;
use rug::{Complex, Float};
use serde::Serialize;

use crate::complex_sf::{abs_f64, exact_integer, gamma, gamma_parts, recip_gamma, GUARD_BITS};
use crate::error::{Error, Result};
use crate::hyper_eval::HyperplanePoint;

/// `Π Γ^{ε_k}(a_k + t) · Π Γ^{ε_ℓ}(b_ℓ - t) · z^t`.
#[derive(Clone, Debug)]
pub struct BarnesIntegrand {
    /// `(a_k, ε_k)` for the factors `Γ^{ε_k}(a_k + t)`.
    pub plus_factors: Vec<(Complex, i8)>,
    /// `(b_ℓ, ε_ℓ)` for the factors `Γ^{ε_ℓ}(b_ℓ - t)`.
    pub minus_factors: Vec<(Complex, i8)>,
    pub z: Complex,
}

/// A vertical line `Re t = t0`, truncated to `|Im t| ≤ height`, with
/// initial node spacing `step`.
#[derive(Clone, Debug, Serialize)]
pub struct Contour {
    pub t0: f64,
    pub height: f64,
    pub step: f64,
    /// Distance from the line to the nearest pole.
    pub clearance: f64,
}

#[derive(Clone, Debug)]
pub struct QuadratureOptions {
    /// Requested relative error.
    pub tol: f64,
    /// Working precision of the node evaluations in bits.
    pub prec: u32,
    pub max_halvings: u32,
}

impl Default for QuadratureOptions {
    fn default() -> Self {
        QuadratureOptions {
            tol: 1e-14,
            prec: 96,
            max_halvings: 14,
        }
    }
}

impl QuadratureOptions {
    pub fn with_tol(tol: f64) -> Self {
        let bits = (-tol.log2()).ceil().max(0.0) as u32;
        QuadratureOptions {
            tol,
            prec: (bits + 48).max(64),
            ..Default::default()
        }
    }
}

#[derive(Clone, Debug)]
pub struct QuadratureResult {
    pub value: Complex,
    /// Estimated relative error of `value`.
    pub error_estimate: f64,
    /// Value with twice the final step, for self-consistency checks.
    pub coarser_value: Complex,
    pub nodes: usize,
    pub halvings: u32,
    pub contour: Contour,
}

impl BarnesIntegrand {
    /// `(π/2) Σ ε − |arg z|`: the exponential decay rate along the line.
    pub fn decay_rate(&self) -> f64 {
        let eps: i32 = self
            .plus_factors
            .iter()
            .chain(&self.minus_factors)
            .map(|(_, e)| *e as i32)
            .sum();
        let arg = self.z.imag().to_f64().atan2(self.z.real().to_f64()).abs();
        std::f64::consts::FRAC_PI_2 * eps as f64 - arg
    }

    /// The integrand at `t`, at precision `prec`.
    pub fn eval(&self, t: &Complex, prec: u32) -> Result<Complex> {
        let wp = prec + GUARD_BITS;
        let mut factor = Complex::with_val(wp, 1);
        let mut log = Complex::with_val(wp, 0);
        let mut take = |arg: Complex, e: i8| -> Result<()> {
            if e < 0 {
                // 1/Γ is entire; a zero factor makes the whole product vanish
                if exact_integer(&arg).is_some_and(|n| n <= 0) {
                    factor = Complex::with_val(wp, 0);
                    return Ok(());
                }
            }
            let (f, l) = gamma_parts(&arg, wp)?;
            if e > 0 {
                factor *= f;
                log += l;
            } else {
                factor /= f;
                log -= l;
            }
            Ok(())
        };
        for (a, e) in &self.plus_factors {
            take(Complex::with_val(wp, a + t), *e)?;
        }
        for (b, e) in &self.minus_factors {
            take(Complex::with_val(wp, b - t), *e)?;
        }
        if !(self.z.imag().is_zero() && *self.z.real() == 1) {
            let lz = Complex::with_val(wp, self.z.ln_ref());
            log += Complex::with_val(wp, t * lz);
        }
        if factor.is_zero() {
            return Ok(Complex::with_val(prec, 0));
        }
        Ok(Complex::with_val(prec, factor * log.exp()))
    }
}

/// The midpoint of the gap between the two pole ladders.
pub fn choose_contour(integrand: &BarnesIntegrand, opts: &QuadratureOptions) -> Result<Contour> {
    if integrand.decay_rate() <= 0.0 {
        return Err(Error::NoStraightContour(format!(
            "integrand does not decay (rate {})",
            integrand.decay_rate()
        )));
    }
    let left: Vec<&Complex> = integrand
        .plus_factors
        .iter()
        .filter(|(_, e)| *e > 0)
        .map(|(a, _)| a)
        .collect();
    let right: Vec<&Complex> = integrand
        .minus_factors
        .iter()
        .filter(|(_, e)| *e > 0)
        .map(|(b, _)| b)
        .collect();
    for a in &left {
        for b in &right {
            let s = Complex::with_val(a.prec().0.max(b.prec().0), *a + *b);
            // poles of Γ(a+t) and Γ(b-t) collide exactly when a+b ∈ {0,-1,…}
            if let Some(n) = exact_integer(&s).filter(|n| *n <= 0) {
                return Err(Error::NoStraightContour(format!("a_k + b_l is the integer {n}")));
            }
        }
    }
    let lo = left
        .iter()
        .map(|a| -a.real().to_f64())
        .fold(f64::NEG_INFINITY, f64::max);
    let hi = right.iter().map(|b| b.real().to_f64()).fold(f64::INFINITY, f64::min);
    let (t0, clearance) = match (lo.is_finite(), hi.is_finite()) {
        (true, true) => {
            if lo >= hi {
                return Err(Error::NoStraightContour(format!(
                    "left poles reach Re t = {lo}, right poles start at Re t = {hi}"
                )));
            }
            ((lo + hi) / 2.0, (hi - lo) / 2.0)
        }
        (true, false) => (lo + 0.5, 0.5),
        (false, true) => (hi - 0.5, 0.5),
        (false, false) => (0.0, 1.0),
    };
    let kappa = integrand.decay_rate();
    let digits = -opts.tol.ln();
    // trapezoid error ~ exp(-2π d / h); start a few halvings above target
    let step = (2.0 * std::f64::consts::PI * clearance / (digits + 5.0) * 4.0).min(1.0);
    let height = (digits + 10.0) / kappa + 2.0;
    Ok(Contour {
        t0,
        height,
        step,
        clearance,
    })
}

/// `t0 + i·j·h`, with the ordinate formed in working precision so that
/// nodes stay on the grid.
fn node(t0: &Float, j: i64, h: &Float, prec: u32) -> Complex {
    Complex::with_val(prec, (t0, Float::with_val(prec, h * j)))
}

/// `(1/2πi) ∫ f(t) dt` along `contour`, halving the step until the
/// estimated relative error is below `opts.tol`.
///
/// The trapezoidal rule converges geometrically for these integrands, so
/// the error after a halving is estimated by the square of the relative
/// change it produced.
pub fn quadrature(
    integrand: &BarnesIntegrand,
    contour: &Contour,
    opts: &QuadratureOptions,
) -> Result<QuadratureResult> {
    let prec = opts.prec;
    let t0 = Float::with_val(prec, contour.t0);
    let kappa = integrand.decay_rate();
    // nodes at j·h_fine; a level with step h uses every stride-th of them
    let levels = opts.max_halvings;
    let h_fine = Float::with_val(prec, contour.step) >> levels;
    let f_at = |j: i64| integrand.eval(&node(&t0, j, &h_fine, prec), prec);
    let mut h = contour.step;
    let mut stride: i64 = 1 << levels;

    // truncation: march outward at the initial step until the remaining
    // geometric tail is negligible
    let mut sum = f_at(0)?;
    let mut nodes = 1usize;
    let mut j_max = [0i64; 2];
    for (side, dir) in [(0usize, 1i64), (1, -1)] {
        let mut quiet = 0;
        let mut j = 1i64;
        loop {
            let v = f_at(dir * j * stride)?;
            nodes += 1;
            sum += &v;
            let y = j as f64 * h;
            let tail = abs_f64(&v) / (1.0 - (-kappa * h).exp());
            let scale = abs_f64(&sum);
            if tail <= 1e-3 * opts.tol * scale && y > 1.0 {
                quiet += 1;
                if quiet >= 3 {
                    break;
                }
            } else {
                quiet = 0;
            }
            if y > 4.0 * contour.height + 50.0 {
                return Err(Error::NonConvergence {
                    last_delta: tail / scale,
                });
            }
            j += 1;
        }
        j_max[side] = j * stride;
    }
    let two_pi = Float::with_val(prec, Constant::Pi) * 2u32;
    let scale_by = |s: &Complex, h: f64| Complex::with_val(prec, s * h) / &two_pi;
    let mut value = scale_by(&sum, h);
    let mut err = f64::INFINITY;
    for halving in 1..=levels {
        // new midpoints
        let half = stride / 2;
        let mut add = Complex::with_val(prec, 0);
        let mut j = half;
        while j <= j_max[0] {
            add += f_at(j)?;
            nodes += 1;
            j += stride;
        }
        let mut j = half;
        while j <= j_max[1] {
            add += f_at(-j)?;
            nodes += 1;
            j += stride;
        }
        sum += add;
        stride = half;
        h /= 2.0;
        let next = scale_by(&sum, h);
        let delta = abs_f64(&Complex::with_val(prec, &next - &value)) / abs_f64(&next).max(f64::MIN_POSITIVE);
        let coarser = std::mem::replace(&mut value, next);
        let roundoff = (nodes as f64) * (-(prec as f64)).exp2() * 16.0;
        err = if delta < 1e-2 {
            10.0 * delta * delta + roundoff
        } else {
            delta
        };
        if err <= opts.tol && halving >= 2 {
            return Ok(QuadratureResult {
                value,
                error_estimate: err,
                coarser_value: coarser,
                nodes,
                halvings: halving,
                contour: Contour {
                    step: h,
                    ..contour.clone()
                },
            });
        }
    }
    Err(Error::NonConvergence { last_delta: err })
}

/// Lemma-2.1 type integral `(1/2πi)∫Γ(a+t)Γ(b+t)Γ(c-t)Γ(d-t) z^t dt`.
pub fn four_gamma_integrand(a: &Complex, b: &Complex, c: &Complex, d: &Complex, z: &Complex) -> BarnesIntegrand {
    BarnesIntegrand {
        plus_factors: vec![(a.clone(), 1), (b.clone(), 1)],
        minus_factors: vec![(c.clone(), 1), (d.clone(), 1)],
        z: z.clone(),
    }
}

fn add(prec: u32, parts: &[(&Complex, i32)], k: i32) -> Complex {
    let mut acc = Complex::with_val(prec, k);
    for (x, s) in parts {
        if *s > 0 {
            acc += *x;
        } else {
            acc -= *x;
        }
    }
    acc
}

/// The integrand of the contour-integral representation of `K`:
/// `Γ(g-d+t)Γ(1+a-e+t)Γ(1+a-f+t)Γ(d+b-g-t)Γ(d+c-g-t)Γ(-t) / (Γ(d-t)Γ(1+a-d+t))`.
pub fn k_integrand(x: &HyperplanePoint, prec: u32) -> BarnesIntegrand {
    let [a, b, c, d, e, f, g] = x.coords();
    BarnesIntegrand {
        plus_factors: vec![
            (add(prec, &[(g, 1), (d, -1)], 0), 1),
            (add(prec, &[(a, 1), (e, -1)], 1), 1),
            (add(prec, &[(a, 1), (f, -1)], 1), 1),
            (add(prec, &[(a, 1), (d, -1)], 1), -1),
        ],
        minus_factors: vec![
            (add(prec, &[(d, 1), (b, 1), (g, -1)], 0), 1),
            (add(prec, &[(d, 1), (c, 1), (g, -1)], 0), 1),
            (Complex::with_val(prec, 0), 1),
            (Complex::with_val(prec, d), -1),
        ],
        z: Complex::with_val(prec, 1),
    }
}

/// True when a straight line separates the pole ladders of the `K`
/// integrand at `x`.
pub fn k_contour_admissible(x: &HyperplanePoint) -> bool {
    choose_contour(&k_integrand(x, 64), &QuadratureOptions::default()).is_ok()
}

/// `K(x)` from its Barnes-integral representation, with the quadrature
/// diagnostics.
pub fn k_integral_detailed(x: &HyperplanePoint, opts: &QuadratureOptions) -> Result<QuadratureResult> {
    let prec = opts.prec + GUARD_BITS;
    let integrand = k_integrand(x, prec);
    let contour = choose_contour(&integrand, opts)?;
    let mut q = quadrature(&integrand, &contour, opts)?;
    let [a, b, c, d, e, f, g] = x.coords();
    let mut pre = Complex::with_val(prec, 1);
    for arg in [
        add(prec, &[(a, 1), (e, -1)], 1),
        add(prec, &[(a, 1), (f, -1)], 1),
        Complex::with_val(prec, b),
        Complex::with_val(prec, c),
        add(prec, &[(e, 1), (b, -1)], 0),
        add(prec, &[(e, 1), (c, -1)], 0),
        add(prec, &[(f, 1), (b, -1)], 0),
        add(prec, &[(f, 1), (c, -1)], 0),
        add(prec, &[(g, 1), (d, -1)], 0),
    ] {
        pre *= recip_gamma(&arg, prec)?;
    }
    q.value = Complex::with_val(x.prec(), &q.value * &pre);
    q.coarser_value = Complex::with_val(x.prec(), &q.coarser_value * &pre);
    Ok(q)
}

pub fn k_integral(x: &HyperplanePoint, opts: &QuadratureOptions) -> Result<Complex> {
    k_integral_detailed(x, opts).map(|q| q.value)
}

/// `Γ(a+c)Γ(b+c)Γ(a+d)Γ(b+d)/Γ(a+b+c+d)`.
pub fn barnes_lemma_rhs(a: &Complex, b: &Complex, c: &Complex, d: &Complex, prec: u32) -> Result<Complex> {
    let wp = prec + GUARD_BITS;
    let mut v = Complex::with_val(wp, 1);
    for (x, y) in [(a, c), (b, c), (a, d), (b, d)] {
        v *= gamma(&Complex::with_val(wp, x + y), wp)?;
    }
    let s = add(wp, &[(a, 1), (b, 1), (c, 1), (d, 1)], 0);
    v *= recip_gamma(&s, wp)?;
    Ok(Complex::with_val(prec, v))
}

/// Closed form of the four-gamma integral with `z^t`, both branches.
pub fn lemma21_rhs(a: &Complex, b: &Complex, c: &Complex, d: &Complex, z: &Complex, prec: u32) -> Result<Complex> {
    let wp = prec + GUARD_BITS;
    let base = barnes_lemma_rhs(a, b, c, d, wp)?;
    let s = add(wp, &[(a, 1), (b, 1), (c, 1), (d, 1)], 0);
    let lz = Complex::with_val(wp, z.ln_ref());
    let v = if abs_f64(z) < 1.0 {
        let zc = Complex::with_val(wp, c * &lz).exp();
        let w = Complex::with_val(wp, 1 - z);
        let f = crate::hyper_eval::gauss_f21(
            &add(wp, &[(a, 1), (c, 1)], 0),
            &add(wp, &[(b, 1), (c, 1)], 0),
            &s,
            &w,
            wp,
        )?;
        zc * base * f
    } else {
        let za = Complex::with_val(wp, -(a * lz)).exp();
        let w = Complex::with_val(wp, 1 - Complex::with_val(wp, z.recip_ref()));
        let f = crate::hyper_eval::gauss_f21(
            &add(wp, &[(a, 1), (c, 1)], 0),
            &add(wp, &[(a, 1), (d, 1)], 0),
            &s,
            &w,
            wp,
        )?;
        za * base * f
    };
    Ok(Complex::with_val(prec, v))
}

/// Relative residual of Barnes' lemma at `(a,b,c,d)`.
pub fn barnes_lemma_check(a: &Complex, b: &Complex, c: &Complex, d: &Complex, opts: &QuadratureOptions) -> Result<f64> {
    let one = Complex::with_val(opts.prec, 1);
    let q = quadrature_auto(&four_gamma_integrand(a, b, c, d, &one), opts)?;
    let want = barnes_lemma_rhs(a, b, c, d, opts.prec)?;
    Ok(crate::complex_sf::rel_diff(&q.value, &want))
}

/// Relative residual of the four-gamma integral with `z^t` against its
/// closed form.
pub fn lemma21_check(
    a: &Complex,
    b: &Complex,
    c: &Complex,
    d: &Complex,
    z: &Complex,
    opts: &QuadratureOptions,
) -> Result<f64> {
    let q = quadrature_auto(&four_gamma_integrand(a, b, c, d, z), opts)?;
    let want = lemma21_rhs(a, b, c, d, z, opts.prec)?;
    Ok(crate::complex_sf::rel_diff(&q.value, &want))
}

/// [`choose_contour`] followed by [`quadrature`].
pub fn quadrature_auto(integrand: &BarnesIntegrand, opts: &QuadratureOptions) -> Result<QuadratureResult> {
    let c = choose_contour(integrand, opts)?;
    quadrature(integrand, &c, opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex_sf::c;

    #[test]
    fn symmetric_barnes_lemma_contour() {
        let h = c(64, 0.5, 0.0);
        let i = four_gamma_integrand(&h, &h, &h, &h, &c(64, 1.0, 0.0));
        let ct = choose_contour(&i, &QuadratureOptions::default()).unwrap();
        assert_eq!(ct.t0, 0.0);
        assert_eq!(ct.clearance, 0.5);
        assert!((i.decay_rate() - 2.0 * std::f64::consts::PI).abs() < 1e-12);
    }

    #[test]
    fn colliding_ladders_are_rejected() {
        let a = c(64, 0.3, 0.2);
        let b = c(64, -0.3, -0.2);
        let h = c(64, 0.5, 0.0);
        let i = four_gamma_integrand(&a, &h, &b, &h, &c(64, 1.0, 0.0));
        assert!(matches!(
            choose_contour(&i, &QuadratureOptions::default()),
            Err(Error::NoStraightContour(_))
        ));
    }

    #[test]
    fn barnes_lemma_at_half() {
        let h = c(96, 0.5, 0.0);
        let r = barnes_lemma_check(&h, &h, &h, &h, &QuadratureOptions::default()).unwrap();
        assert!(r < 1e-14, "{r}");
    }
}
