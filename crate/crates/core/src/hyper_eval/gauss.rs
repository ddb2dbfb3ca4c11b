use rug::{Complex, Float};

use super::series::{unit_series, SeriesOptions};
use crate::complex_sf::{abs_f64, exact_integer, GUARD_BITS};
use crate::error::{Error, Result};

/// The Gauss function `F(a,b;c;z)` by its power series, for `|z| < 1`,
/// terminating parameters, or `z = 1` with `Re(c-a-b) > 0`.
pub fn gauss_f21(a: &Complex, b: &Complex, c: &Complex, z: &Complex, prec: u32) -> Result<Complex> {
    let wp = prec + GUARD_BITS;
    let terminate_at = [a, b]
        .iter()
        .filter_map(|x| exact_integer(x))
        .filter(|&n| n <= 0)
        .map(|n| (-n) as u64)
        .min();
    if let Some(m) = exact_integer(c).filter(|&n| n <= 0) {
        if terminate_at.map_or(true, |n| ((-m) as u64) < n) {
            return Err(Error::PoleConfiguration(format!("c = {m}")));
        }
    }
    let az = abs_f64(z);
    if terminate_at.is_none() && az >= 1.0 {
        if z.imag().is_zero() && *z.real() == 1 {
            let r = unit_series(
                &[a.clone(), b.clone()],
                std::slice::from_ref(c),
                false,
                prec,
                &SeriesOptions::default(),
            )?;
            return Ok(r.value);
        }
        return Err(Error::Divergent(format!("|z| = {az} >= 1")));
    }
    let mut term = Complex::with_val(wp, 1);
    let mut sum = Complex::with_val(wp, 1);
    let eps = Float::with_val(64, Float::i_exp(1, -(wp as i32)));
    let mut small = 0;
    for k in 0u64.. {
        if terminate_at == Some(k) {
            break;
        }
        term *= Complex::with_val(wp, a + k);
        term *= Complex::with_val(wp, b + k);
        term /= Complex::with_val(wp, c + k) * (k + 1);
        term *= z;
        sum += &term;
        let t = Float::with_val(64, term.abs_ref());
        let s = Float::with_val(64, sum.abs_ref());
        if terminate_at.is_none() && t <= Float::with_val(64, &s * &eps) {
            small += 1;
            if small >= 3 {
                break;
            }
        } else {
            small = 0;
        }
        if k > 2_000_000 {
            return Err(Error::NonConvergence { last_delta: t.to_f64() });
        }
    }
    Ok(Complex::with_val(prec, sum))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex_sf::{c, rel_diff};

    const P: u32 = 128;

    #[test]
    fn basic_values() {
        let one = c(P, 1.0, 0.0);
        let zero = c(P, 0.0, 0.0);
        assert_eq!(
            gauss_f21(&c(P, 0.3, 0.1), &c(P, 2.0, 0.0), &c(P, 1.2, 0.0), &zero, P).unwrap(),
            one
        );
        // F(1,1;2;1/2) = 2 ln 2
        let v = gauss_f21(&one, &one, &c(P, 2.0, 0.0), &c(P, 0.5, 0.0), P).unwrap();
        let want = Complex::with_val(P, Float::with_val(P, 2).ln() * 2);
        assert!(rel_diff(&v, &want) < 1e-36);
        assert!(gauss_f21(&one, &one, &c(P, 2.5, 0.0), &c(P, 1.2, 0.0), P).is_err());
        assert!(gauss_f21(&one, &one, &c(P, -1.0, 0.0), &c(P, 0.5, 0.0), P).is_err());
        // terminating: F(-2,b;c;z) = 1 - 2bz/c + b(b+1)z²/(c(c+1))
        let v = gauss_f21(&c(P, -2.0, 0.0), &c(P, 3.0, 0.0), &c(P, 4.0, 0.0), &c(P, 2.0, 0.0), P).unwrap();
        assert!(rel_diff(&v, &Complex::with_val(P, rug::Rational::from((2, 5)))) < 1e-36);
    }
}
