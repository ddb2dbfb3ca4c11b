use rug::Complex;

use super::point::HyperplanePoint;
use super::series::{unit_series, SeriesOptions, SeriesResult};
use crate::complex_sf::{exact_integer, gamma, recip_gamma, GUARD_BITS};
use crate::error::{Error, Result};

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

/// `₄F₃(a,b,c,d; e,f,g; 1)` and friends: generic `ₚF_{p-1}` at unit
/// argument, with asymptotic tail completion.
pub fn pfq_unit(
    numerators: &[Complex],
    denominators: &[Complex],
    prec: u32,
    opts: &SeriesOptions,
) -> Result<SeriesResult> {
    unit_series(numerators, denominators, false, prec, opts)
}

/// `Σ_k Π(a_i)_k / (k! Π Γ(b_j+k))`, finite for every denominator.
pub fn regularized_pfq_unit(
    numerators: &[Complex],
    denominators: &[Complex],
    prec: u32,
    opts: &SeriesOptions,
) -> Result<SeriesResult> {
    unit_series(numerators, denominators, true, prec, opts)
}

/// `₄F₃*(a,b,c,d;e,f,g;1) = Σ_k Γ(k+a)Γ(k+b)Γ(k+c)Γ(k+d) / (k! Γ(k+e)Γ(k+f)Γ(k+g))`.
pub fn f43_star(x: &HyperplanePoint, opts: &SeriesOptions) -> Result<Complex> {
    let prec = x.prec();
    let v = x.coords();
    for p in &v[..4] {
        if let Some(n) = exact_integer(p).filter(|&n| n <= 0) {
            return Err(Error::PoleConfiguration(format!(
                "numerator parameter {n}: use f43_star_terminating"
            )));
        }
    }
    let wp = prec + GUARD_BITS;
    let s = regularized_pfq_unit(&v[..4], &v[4..], wp, opts)?;
    let mut out = s.value;
    for p in &v[..4] {
        out *= gamma(p, wp)?;
    }
    Ok(Complex::with_val(prec, out))
}

/// `lim_{d→-n} ₄F₃*(a,b,c,d;e,f,g;1)/Γ(d)`, i.e. the regularized sum with
/// `Γ(k+d)/Γ(d)` replaced by `(-n)_k`.
pub fn f43_star_terminating(
    a: &Complex,
    b: &Complex,
    c: &Complex,
    n: u32,
    e: &Complex,
    f: &Complex,
    g: &Complex,
    opts: &SeriesOptions,
) -> Result<Complex> {
    let prec = a.prec().0;
    let wp = prec + GUARD_BITS;
    let minus_n = Complex::with_val(wp, -(n as i64));
    let s = regularized_pfq_unit(
        &[a.clone(), b.clone(), c.clone(), minus_n],
        &[e.clone(), f.clone(), g.clone()],
        wp,
        opts,
    )?;
    let mut out = s.value;
    for p in [a, b, c] {
        out *= gamma(p, wp)?;
    }
    Ok(Complex::with_val(prec, out))
}

/// The two series making up `K`, each already multiplied by its
/// reciprocal gamma factors, with their series diagnostics.
pub fn k_function_parts(x: &HyperplanePoint, opts: &SeriesOptions) -> Result<([Complex; 2], [SeriesResult; 2])> {
    let prec = x.prec();
    let wp = prec + GUARD_BITS;
    let v = x.coords();
    let [a, b, c, d, e, f, g] = v;
    let one_a = |y: &Complex| add(wp, &[(a, 1), (y, -1)], 1);
    let (ae, af, ag) = (one_a(e), one_a(f), one_a(g));
    let (ab, ac, ad) = (one_a(b), one_a(c), one_a(d));
    let s1 = regularized_pfq_unit(
        &[a.clone(), b.clone(), c.clone(), d.clone()],
        &[e.clone(), f.clone(), g.clone()],
        prec,
        opts,
    )?;
    let s2 = regularized_pfq_unit(
        &[a.clone(), ae.clone(), af.clone(), ag.clone()],
        &[ab, ac, ad],
        prec,
        opts,
    )?;
    let mut t1 = s1.value.clone();
    for y in [&ae, &af, &ag] {
        t1 *= recip_gamma(y, wp)?;
    }
    let mut t2 = s2.value.clone();
    for y in [b, c, d] {
        t2 *= recip_gamma(y, wp)?;
    }
    Ok(([t1, t2], [s1, s2]))
}

/// `K(a;b,c,d;e,f,g)` by its two regularized `₄F₃(1)` series.
pub fn k_function(x: &HyperplanePoint, opts: &SeriesOptions) -> Result<Complex> {
    let ([t1, t2], _) = k_function_parts(x, opts)?;
    Ok(Complex::with_val(x.prec(), t1 + t2))
}
