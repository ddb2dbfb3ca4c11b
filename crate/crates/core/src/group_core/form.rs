use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use rug::Complex;
use serde::{Deserialize, Serialize};

use super::{ExactMatrix7, Rational, DIM};
use crate::error::{Error, Result};

pub const VARIABLES: [char; DIM] = ['a', 'b', 'c', 'd', 'e', 'f', 'g'];

/// `constant + Σ coefficients[j]·x_j` over the variables `a,…,g`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct AffineLinearForm {
    pub constant: Rational,
    pub coefficients: [Rational; DIM],
}

impl AffineLinearForm {
    pub fn new(constant: Rational, coefficients: [Rational; DIM]) -> Self {
        AffineLinearForm { constant, coefficients }
    }

    pub fn linear(coefficients: [Rational; DIM]) -> Self {
        Self::new(Rational::zero(), coefficients)
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(c, std::array::from_fn(|_| Rational::zero()))
    }

    /// The coordinate function `x_j` (zero-based).
    pub fn var(j: usize) -> Self {
        let mut f = Self::constant(Rational::zero());
        f.coefficients[j] = Rational::one();
        f
    }

    /// `e+f+g-a-b-c-d`, equal to 1 on the hyperplane.
    pub fn hyperplane_functional() -> Self {
        Self::linear([-1, -1, -1, -1, 1, 1, 1].map(Rational::from))
    }

    pub fn from_ints(constant: i64, coefficients: [i64; DIM]) -> Self {
        Self::new(constant.into(), coefficients.map(Rational::from))
    }

    pub fn is_constant(&self) -> bool {
        self.coefficients.iter().all(Rational::is_zero)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(&self.constant * k, std::array::from_fn(|j| &self.coefficients[j] * k))
    }

    /// The form `x ↦ L(m x)`. The constant term is unchanged.
    pub fn substitute(&self, m: &ExactMatrix7) -> Self {
        let coefficients = std::array::from_fn(|j| {
            let mut acc = Rational::zero();
            for i in 0..DIM {
                if !self.coefficients[i].is_zero() && !m.get(i, j).is_zero() {
                    acc += &(&self.coefficients[i] * m.get(i, j));
                }
            }
            acc
        });
        Self::new(self.constant.clone(), coefficients)
    }

    /// Representative with `g` eliminated through `g = 1+a+b+c+d-e-f`.
    /// Two forms agree on the hyperplane iff their reductions are equal.
    pub fn reduce_on_v(&self) -> Self {
        let cg = self.coefficients[6].clone();
        if cg.is_zero() {
            return self.clone();
        }
        let phi = Self::hyperplane_functional();
        let mut out = self.clone();
        // add cg·(1 - φ), which vanishes on V
        out.constant += &cg;
        for j in 0..DIM {
            let t = &cg * &phi.coefficients[j];
            out.coefficients[j] -= &t;
        }
        out
    }

    pub fn agrees_on_v(&self, other: &Self) -> bool {
        self.reduce_on_v() == other.reduce_on_v()
    }

    /// Among `L + λ(φ - 1)`, the representative with the fewest variables,
    /// then the smallest constant. This is the form used for display.
    pub fn sparsest_on_v(&self) -> Self {
        let phi = Self::hyperplane_functional();
        let mut cands = vec![Rational::zero()];
        for j in 0..DIM {
            if !self.coefficients[j].is_zero() {
                cands.push(-(&self.coefficients[j] / &phi.coefficients[j]));
            }
        }
        let mut best: Option<((usize, Rational, usize), Self)> = None;
        for lam in cands {
            let cand = Self::new(
                &self.constant - &lam,
                std::array::from_fn(|j| &self.coefficients[j] + &(&lam * &phi.coefficients[j])),
            );
            let nnz = cand.coefficients.iter().filter(|c| !c.is_zero()).count();
            let neg = cand.coefficients.iter().filter(|c| c.signum() < 0).count();
            let score = (nnz, cand.constant.abs(), neg);
            if best.as_ref().map_or(true, |(s, _)| score < *s) {
                best = Some((score, cand));
            }
        }
        best.expect("at least one candidate").1
    }

    pub fn eval(&self, x: &[Complex; DIM]) -> Complex {
        let prec = x[0].prec();
        let mut acc = Complex::with_val(prec, self.constant.as_rug());
        for (c, xj) in self.coefficients.iter().zip(x) {
            if c.is_zero() {
                continue;
            }
            if c.is_integer() {
                match c.numer().to_i32() {
                    Some(1) => {
                        acc += xj;
                        continue;
                    }
                    Some(-1) => {
                        acc -= xj;
                        continue;
                    }
                    _ => {}
                }
            }
            acc += Complex::with_val(prec, xj * c.as_rug());
        }
        acc
    }

    /// Exact evaluation at a rational point.
    pub fn eval_rational(&self, x: &[Rational; DIM]) -> Rational {
        let mut acc = self.constant.clone();
        for (c, xj) in self.coefficients.iter().zip(x) {
            if !c.is_zero() {
                acc += &(c * xj);
            }
        }
        acc
    }

    fn write_terms(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut term = |f: &mut fmt::Formatter<'_>, c: &Rational, v: Option<char>| -> fmt::Result {
            let neg = c.signum() < 0;
            let mag = c.abs();
            if neg {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            match v {
                None => write!(f, "{mag}"),
                Some(v) if mag == Rational::one() => write!(f, "{v}"),
                Some(v) if mag.is_integer() => write!(f, "{mag}{v}"),
                Some(v) => write!(f, "({mag}){v}"),
            }
        };
        if self.constant.signum() > 0 {
            term(f, &self.constant, None)?;
        }
        for (c, v) in self.coefficients.iter().zip(VARIABLES) {
            if c.signum() > 0 {
                term(f, c, Some(v))?;
            }
        }
        for (c, v) in self.coefficients.iter().zip(VARIABLES) {
            if c.signum() < 0 {
                term(f, c, Some(v))?;
            }
        }
        if self.constant.signum() < 0 {
            term(f, &self.constant, None)?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Displays the sparsest representative on the hyperplane, positive terms
/// first: `1+d-f`, `e-a-b`, `2-e`.
impl fmt::Display for AffineLinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.sparsest_on_v().write_terms(f)
    }
}

impl fmt::Debug for AffineLinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AffineLinearForm(")?;
        self.write_terms(f)?;
        write!(f, ")")
    }
}

impl FromStr for AffineLinearForm {
    type Err = Error;

    /// Parses sums like `1+a-f`, `1/2+a-2e`, `(1/2)c - d`, `3*b`.
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse(format!("affine form {s:?}"));
        let src: String = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| if c == '−' { '-' } else { c })
            .collect();
        if src.is_empty() {
            return Err(err());
        }
        let mut out = Self::constant(Rational::zero());
        let bytes: Vec<char> = src.chars().collect();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = Rational::one();
            if bytes[i] == '+' || bytes[i] == '-' {
                if bytes[i] == '-' {
                    sign = -sign;
                }
                i += 1;
            } else if i > 0 {
                return Err(err());
            }
            let start = i;
            let mut coef_txt = String::new();
            if i < bytes.len() && bytes[i] == '(' {
                let close = bytes[i..].iter().position(|&c| c == ')').ok_or_else(err)? + i;
                coef_txt = bytes[i + 1..close].iter().collect();
                i = close + 1;
            } else {
                while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == '/') {
                    coef_txt.push(bytes[i]);
                    i += 1;
                }
            }
            if i < bytes.len() && bytes[i] == '*' {
                i += 1;
            }
            let coef = if coef_txt.is_empty() {
                Rational::one()
            } else {
                coef_txt.parse::<Rational>().map_err(|_| err())?
            };
            let var = if i < bytes.len() {
                VARIABLES.iter().position(|&v| v == bytes[i])
            } else {
                None
            };
            match var {
                Some(j) => {
                    i += 1;
                    out.coefficients[j] += &(&sign * &coef);
                }
                None => {
                    if coef_txt.is_empty() || i == start {
                        return Err(err());
                    }
                    out.constant += &(&sign * &coef);
                }
            }
        }
        Ok(out)
    }
}

impl Serialize for AffineLinearForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut txt = String::new();
        {
            use std::fmt::Write;
            struct Raw<'a>(&'a AffineLinearForm);
            impl fmt::Display for Raw<'_> {
                fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                    self.0.write_terms(f)
                }
            }
            write!(txt, "{}", Raw(self)).unwrap();
        }
        s.serialize_str(&txt)
    }
}

impl<'de> Deserialize<'de> for AffineLinearForm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Add for &AffineLinearForm {
    type Output = AffineLinearForm;
    fn add(self, rhs: &AffineLinearForm) -> AffineLinearForm {
        AffineLinearForm::new(
            &self.constant + &rhs.constant,
            std::array::from_fn(|j| &self.coefficients[j] + &rhs.coefficients[j]),
        )
    }
}

impl Sub for &AffineLinearForm {
    type Output = AffineLinearForm;
    fn sub(self, rhs: &AffineLinearForm) -> AffineLinearForm {
        AffineLinearForm::new(
            &self.constant - &rhs.constant,
            std::array::from_fn(|j| &self.coefficients[j] - &rhs.coefficients[j]),
        )
    }
}

impl Neg for &AffineLinearForm {
    type Output = AffineLinearForm;
    fn neg(self) -> AffineLinearForm {
        AffineLinearForm::new(-&self.constant, std::array::from_fn(|j| -&self.coefficients[j]))
    }
}

/// `L ∘ m`, see [`AffineLinearForm::substitute`].
pub fn substitute_form(form: &AffineLinearForm, m: &ExactMatrix7) -> AffineLinearForm {
    form.substitute(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> AffineLinearForm {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        for s in [
            "1+d-f", "e-a-b", "2-e", "a", "1+a+d-g", "f-d", "0", "1/2+a-2e", "(1/2)c-d",
        ] {
            assert_eq!(f(s).to_string(), s, "{s}");
        }
        assert_eq!(f("-a + 3*b").to_string(), "3b-a");
        assert!("1+x".parse::<AffineLinearForm>().is_err());
        assert!("".parse::<AffineLinearForm>().is_err());
        assert!("a b".parse::<AffineLinearForm>().is_err());
    }

    #[test]
    fn display_prefers_sparse_representative() {
        // g on V is also 1+a+b+c+d-e-f; the display keeps g
        assert_eq!(f("g").to_string(), "g");
        assert_eq!(f("1+a+b+c+d-e-f").to_string(), "g");
        assert!(f("1+a+b+c+d-e-f").agrees_on_v(&f("g")));
        assert!(!f("a").agrees_on_v(&f("b")));
    }

    #[test]
    fn substitution_by_permutation() {
        let c = ExactMatrix7::from_cycles("(1234)").unwrap();
        assert_eq!(f("a").substitute(&c).to_string(), "b");
        assert_eq!(f("1+a-e").substitute(&c).to_string(), "1+b-e");
    }

    #[test]
    fn affine_rows_round_trip() {
        let rows = ["1+a-e", "1+b-e", "1+c-e", "1+d-e", "1+f-e", "1+g-e", "2-e"].map(f);
        let m = ExactMatrix7::from_affine_rows(&rows);
        for (r, form) in m.row_forms().iter().zip(&rows) {
            assert!(r.agrees_on_v(form));
            assert_eq!(r.to_string(), form.to_string());
        }
    }

    #[test]
    fn serde_round_trip() {
        let x = f("1/2+a-2e");
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(serde_json::from_str::<AffineLinearForm>(&s).unwrap(), x);
    }
}
