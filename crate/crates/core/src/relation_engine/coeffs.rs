//! The coefficient building blocks `α`, `β`, `γ` and the map `σ`.

use rug::Complex;

use crate::complex_sf::{recip_gamma, sin_pi};
use crate::error::{Error, Result};
use crate::group_core::{AffineLinearForm, ExactMatrix7};
use crate::hyper_eval::HyperplanePoint;
use crate::mk_cosets::cycle_matrix;

use super::expr::{CoeffMonomial, CoefficientExpr};

/// `α = sin π(c-b) / (Γ(e-a)Γ(f-a)Γ(g-a))`.
pub fn alpha_expr() -> CoefficientExpr {
    CoefficientExpr::monomial(CoeffMonomial::new(1).sin(&["c-b"]).rgamma(&["e-a", "f-a", "g-a"]))
}

/// `β = 1 / (Γ(a)Γ(1+b-e)Γ(f-c)Γ(f-d)Γ(g-c)Γ(g-d))`.
pub fn beta_expr() -> CoefficientExpr {
    CoefficientExpr::monomial(CoeffMonomial::new(1).rgamma(&["a", "1+b-e", "f-c", "f-d", "g-c", "g-d"]))
}

/// `γ = sin π(e-b)/sin π(c-b) · [sin π(a-c) sin π(e-a-b) sin π(f-b) sin π(g-b)
/// - sin π(a-b) sin π(e-a-c) sin π(f-c) sin π(g-c)]`.
pub fn gamma_expr() -> CoefficientExpr {
    CoefficientExpr::new(vec![
        CoeffMonomial::new(1)
            .sin(&["e-b", "a-c", "e-a-b", "f-b", "g-b"])
            .over_sin(&["c-b"]),
        CoeffMonomial::new(-1)
            .sin(&["e-b", "a-b", "e-a-c", "f-c", "g-c"])
            .over_sin(&["c-b"]),
    ])
}

fn args(x: &HyperplanePoint, forms: &[&str]) -> Vec<Complex> {
    forms
        .iter()
        .map(|s| x.eval(&s.parse::<AffineLinearForm>().expect("static form")))
        .collect()
}

fn sins(x: &HyperplanePoint, forms: &[&str]) -> Result<Complex> {
    let p = x.prec();
    let mut v = Complex::with_val(p, 1);
    for z in args(x, forms) {
        v *= sin_pi(&z, p)?;
    }
    Ok(v)
}

fn rgammas(x: &HyperplanePoint, forms: &[&str]) -> Result<Complex> {
    let p = x.prec();
    let mut v = Complex::with_val(p, 1);
    for z in args(x, forms) {
        v *= recip_gamma(&z, p)?;
    }
    Ok(v)
}

pub fn alpha(x: &HyperplanePoint) -> Result<Complex> {
    Ok(sins(x, &["c-b"])? * rgammas(x, &["e-a", "f-a", "g-a"])?)
}

pub fn beta(x: &HyperplanePoint) -> Result<Complex> {
    rgammas(x, &["a", "1+b-e", "f-c", "f-d", "g-c", "g-d"])
}

pub fn gamma_coeff(x: &HyperplanePoint) -> Result<Complex> {
    let den = sins(x, &["c-b"])?;
    if den.is_zero() {
        return Err(Error::DegeneratePoint("sin π(c-b) = 0".into()));
    }
    let bracket = sins(x, &["a-c", "e-a-b", "f-b", "g-b"])? - sins(x, &["a-b", "e-a-c", "f-c", "g-c"])?;
    Ok(sins(x, &["e-b"])? / den * bracket)
}

/// `σx = (1+b-e, b, f-c, g-c, 1+a+b-e, 1+b-c, 1+b+d-e)`, of order three.
pub fn sigma_matrix() -> ExactMatrix7 {
    let rows = ["1+b-e", "b", "f-c", "g-c", "1+a+b-e", "1+b-c", "1+b+d-e"]
        .map(|s| s.parse::<AffineLinearForm>().expect("static form"));
    ExactMatrix7::from_affine_rows(&rows)
}

/// Matrix of a coordinate permutation in cycle notation.
pub fn perm(cycles: &str) -> ExactMatrix7 {
    cycle_matrix(cycles).expect("static cycles")
}

/// Both sides of the sine identity
/// `sin π(f-b) sin π(f-a-c) sin π(e-c) sin π(e-a-b) - sin π(e-b) sin π(e-a-c) sin π(f-c) sin π(f-a-b)
/// = sin πa sin π(c-b) sin π(f-e) sin π(g-d)` on the hyperplane.
pub fn sine_identity_sides(x: &HyperplanePoint) -> Result<(Complex, Complex)> {
    let lhs = sins(x, &["f-b", "f-a-c", "e-c", "e-a-b"])? - sins(x, &["e-b", "e-a-c", "f-c", "f-a-b"])?;
    let rhs = sins(x, &["a", "c-b", "f-e", "g-d"])?;
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex_sf::{c, rel_diff};

    fn point() -> HyperplanePoint {
        HyperplanePoint::parse("0.31, 0.27+0.11i, 0.44, 0.52-0.11i, 1.13, 1.21", 128).unwrap()
    }

    #[test]
    fn symbolic_and_direct_agree() {
        let x = point();
        assert!(rel_diff(&alpha_expr().eval_at(&x).unwrap(), &alpha(&x).unwrap()) < 1e-35);
        assert!(rel_diff(&beta_expr().eval_at(&x).unwrap(), &beta(&x).unwrap()) < 1e-35);
        assert!(rel_diff(&gamma_expr().eval_at(&x).unwrap(), &gamma_coeff(&x).unwrap()) < 1e-35);
    }

    #[test]
    fn alpha_vanishes_at_b_equal_c() {
        let p = 128;
        let x = HyperplanePoint::new(
            c(p, 0.3, 0.0),
            c(p, 0.4, 0.1),
            c(p, 0.4, 0.1),
            c(p, 0.2, 0.0),
            c(p, 1.1, 0.0),
            c(p, 0.9, 0.0),
        );
        assert!(alpha(&x).unwrap().is_zero());
        assert!(matches!(gamma_coeff(&x), Err(Error::DegeneratePoint(_))));
    }

    #[test]
    fn sigma_has_order_three() {
        let s = sigma_matrix();
        assert!(!s.is_identity());
        let x = point();
        let y = x.transform(&s.pow(3));
        for (u, v) in y.coords().iter().zip(x.coords()) {
            assert!(rel_diff(u, v) < 1e-35);
        }
    }

    #[test]
    fn sine_identity_at_a_point() {
        let (l, r) = sine_identity_sides(&point()).unwrap();
        assert!(rel_diff(&l, &r) < 1e-35);
    }
}
