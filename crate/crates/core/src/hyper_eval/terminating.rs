use rug::Complex;

use super::series::{unit_series, SeriesOptions};
use crate::complex_sf::{pochhammer, rel_diff, GUARD_BITS};
use crate::error::{Error, Result};
use crate::group_core::Rational;

fn sub(wp: u32, x: &Complex, y: &Complex) -> Complex {
    Complex::with_val(wp, x - y)
}

/// Relative residual of
/// `₄F₃(a,b,c,-n;e,f,g;1) = R · ₄F₃(a,e-c,e-b,-n;e,1+a-g-n,1+a-f-n;1)`
/// with `R = (1+a-f-n)_n (1+a-g-n)_n / ((f)_n (g)_n)`.
pub fn terminating_f43_identity_check(
    a: &Complex,
    b: &Complex,
    c: &Complex,
    e: &Complex,
    f: &Complex,
    g: &Complex,
    n: u32,
) -> Result<f64> {
    let prec = a.prec().0;
    let wp = prec + GUARD_BITS;
    let opts = SeriesOptions::default();
    let mn = Complex::with_val(wp, -(n as i64));
    let lhs = unit_series(
        &[a.clone(), b.clone(), c.clone(), mn.clone()],
        &[e.clone(), f.clone(), g.clone()],
        false,
        wp,
        &opts,
    )?
    .value;
    let afn = Complex::with_val(wp, sub(wp, a, f) + (1 - n as i64));
    let agn = Complex::with_val(wp, sub(wp, a, g) + (1 - n as i64));
    let rhs_series = unit_series(
        &[a.clone(), sub(wp, e, c), sub(wp, e, b), mn],
        &[e.clone(), agn.clone(), afn.clone()],
        false,
        wp,
        &opts,
    )?
    .value;
    let den = pochhammer(f, n, wp) * pochhammer(g, n, wp);
    if den.is_zero() {
        return Err(Error::Pole("(f)_n (g)_n = 0".into()));
    }
    let ratio = pochhammer(&afn, n, wp) * pochhammer(&agn, n, wp) / den;
    let rhs = Complex::with_val(wp, &ratio * &rhs_series);
    Ok(rel_diff(&lhs, &rhs))
}

/// Exact terminating `₄F₃(a,b,c,-n; e,f,g; 1)` over the rationals.
pub fn terminating_f43_exact(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    n: u32,
    e: &Rational,
    f: &Rational,
    g: &Rational,
) -> Result<Rational> {
    let mut term = Rational::one();
    let mut sum = Rational::one();
    for k in 0..n {
        let k = Rational::from(k as i64);
        let mut num = &(a + &k) * &(b + &k);
        num = &num * &(c + &k);
        num = &num * &(&k - &Rational::from(n as i64));
        let mut den = &(e + &k) * &(f + &k);
        den = &den * &(g + &k);
        den = &den * &(&k + &Rational::one());
        if den.is_zero() {
            return Err(Error::PoleConfiguration(
                "denominator vanishes before termination".into(),
            ));
        }
        term = &(&term * &num) / &den;
        sum += &term;
    }
    Ok(sum)
}

fn poch_q(x: &Rational, n: u32) -> Rational {
    (0..n).fold(Rational::one(), |acc, k| &acc * &(x + &Rational::from(k as i64)))
}

/// Both sides of the terminating identity at rational parameters, exactly.
/// Returns `(lhs, rhs)`.
pub fn terminating_identity_exact(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    e: &Rational,
    f: &Rational,
    g: &Rational,
    n: u32,
) -> Result<(Rational, Rational)> {
    let lhs = terminating_f43_exact(a, b, c, n, e, f, g)?;
    let shift = Rational::from(1 - n as i64);
    let afn = &(a - f) + &shift;
    let agn = &(a - g) + &shift;
    let series = terminating_f43_exact(a, &(e - c), &(e - b), n, e, &agn, &afn)?;
    let den = &poch_q(f, n) * &poch_q(g, n);
    if den.is_zero() {
        return Err(Error::Pole("(f)_n (g)_n = 0".into()));
    }
    let ratio = &(&poch_q(&afn, n) * &poch_q(&agn, n)) / &den;
    Ok((lhs, &ratio * &series))
}

/// `(e)_n (f)_n (g)_n ₄F₃(a,b,c,-n;e,f,g;1)` before and after
/// `(a,b,c,e,f,g) → (a,e-c,e-b,e,1+a-g-n,1+a-f-n)`, exactly.
pub fn terminating_invariance_exact(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    e: &Rational,
    f: &Rational,
    g: &Rational,
    n: u32,
) -> Result<(Rational, Rational)> {
    let weight = |e: &Rational, f: &Rational, g: &Rational| &(&poch_q(e, n) * &poch_q(f, n)) * &poch_q(g, n);
    let before = &weight(e, f, g) * &terminating_f43_exact(a, b, c, n, e, f, g)?;
    let shift = Rational::from(1 - n as i64);
    let (b2, c2) = (e - c, e - b);
    let f2 = &(a - g) + &shift;
    let g2 = &(a - f) + &shift;
    let after = &weight(e, &f2, &g2) * &terminating_f43_exact(a, &b2, &c2, n, e, &f2, &g2)?;
    Ok((before, after))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex_sf::c;

    #[test]
    fn trivial_cases() {
        let p = 128;
        let (a, b, cc, e, f) = (
            c(p, 0.3, 0.1),
            c(p, 0.45, 0.0),
            c(p, 0.2, -0.3),
            c(p, 1.1, 0.2),
            c(p, 0.9, 0.0),
        );
        // Saalschützian with d = 0: g = 1 + a+b+c - e - f
        let g = Complex::with_val(p, Complex::with_val(p, &a + &b) + &cc) - &e - &f + 1;
        assert_eq!(terminating_f43_identity_check(&a, &b, &cc, &e, &f, &g, 0).unwrap(), 0.0);
        let q = |n, d| Rational::new(n, d);
        let one = terminating_f43_exact(&q(1, 3), &q(1, 2), &q(2, 5), 1, &q(7, 4), &q(5, 3), &q(3, 2)).unwrap();
        // 1 - abc/(efg)
        let want = &Rational::one() - &(&(&(&q(1, 3) * &q(1, 2)) * &q(2, 5)) / &(&(&q(7, 4) * &q(5, 3)) * &q(3, 2)));
        assert_eq!(one, want);
    }
}
