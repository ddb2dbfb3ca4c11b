//! Coefficients as sums of monomials `q · π^k · Π sin π(L) / Π sin π(M) · Π 1/Γ(N)`
//! with rational `q` and affine forms `L, M, N`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Mul, Neg};

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Complex, Float};
use serde::{Deserialize, Serialize};

use crate::complex_sf::{recip_gamma, sin_pi};
use crate::error::{Error, Result};
use crate::group_core::{AffineLinearForm, ExactMatrix7, Rational};
use crate::hyper_eval::HyperplanePoint;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoeffMonomial {
    pub constant: Rational,
    pub pi_power: i32,
    pub sin_num: Vec<AffineLinearForm>,
    pub sin_den: Vec<AffineLinearForm>,
    pub recip_gamma: Vec<AffineLinearForm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CoefficientExpr {
    pub monomials: Vec<CoeffMonomial>,
}

fn form(s: &str) -> AffineLinearForm {
    s.parse().unwrap_or_else(|e| panic!("bad form {s:?}: {e}"))
}

/// `sin π(L) = sign · sin π(L')` with `L'` free of `g`, leading
/// coefficient positive and constant in `[0, 1)`. `None` when the sine
/// vanishes identically.
pub fn canonical_sine(l: &AffineLinearForm) -> Option<(i8, AffineLinearForm)> {
    let mut l = l.reduce_on_v();
    let mut sign = 1i8;
    if l.coefficients
        .iter()
        .find(|c| !c.is_zero())
        .is_some_and(|c| c.signum() < 0)
    {
        l = -&l;
        sign = -sign;
    }
    let n = l.constant.floor();
    if n != 0 {
        if n.is_odd() {
            sign = -sign;
        }
        l.constant = &l.constant - &Rational::from(n);
    }
    if l.is_constant() && l.constant.is_zero() {
        return None;
    }
    Some((sign, l))
}

impl CoeffMonomial {
    pub fn new(constant: impl Into<Rational>) -> Self {
        CoeffMonomial {
            constant: constant.into(),
            pi_power: 0,
            sin_num: Vec::new(),
            sin_den: Vec::new(),
            recip_gamma: Vec::new(),
        }
    }

    pub fn pi(mut self, k: i32) -> Self {
        self.pi_power += k;
        self
    }

    /// Multiplies by `sin π(L)` for each listed form.
    pub fn sin(mut self, forms: &[&str]) -> Self {
        self.sin_num.extend(forms.iter().map(|s| form(s)));
        self
    }

    /// Divides by `sin π(L)` for each listed form.
    pub fn over_sin(mut self, forms: &[&str]) -> Self {
        self.sin_den.extend(forms.iter().map(|s| form(s)));
        self
    }

    /// Multiplies by `1/Γ(L)` for each listed form.
    pub fn rgamma(mut self, forms: &[&str]) -> Self {
        self.recip_gamma.extend(forms.iter().map(|s| form(s)));
        self
    }

    /// Reduces forms on V, normalizes sine arguments, applies reflection
    /// `1/(Γ(L)Γ(1-L)) = sin πL / π` and cancels common sines. `None` if
    /// the monomial vanishes.
    pub fn simplified(&self) -> Option<CoeffMonomial> {
        let mut m = CoeffMonomial::new(self.constant.clone()).pi(self.pi_power);
        if m.constant.is_zero() {
            return None;
        }
        // reflection
        let mut rg: Vec<AffineLinearForm> = self.recip_gamma.iter().map(|f| f.reduce_on_v()).collect();
        let mut extra_sin = Vec::new();
        let one = AffineLinearForm::constant(Rational::one());
        let mut i = 0;
        while i < rg.len() {
            let partner = (i + 1..rg.len()).find(|&j| (&rg[i] + &rg[j]).agrees_on_v(&one));
            if let Some(j) = partner {
                extra_sin.push(rg[i].clone());
                rg.remove(j);
                rg.remove(i);
                m.pi_power -= 1;
            } else {
                i += 1;
            }
        }
        let mut num = Vec::new();
        for f in self.sin_num.iter().chain(&extra_sin) {
            let (s, l) = canonical_sine(f)?;
            if s < 0 {
                m.constant = -&m.constant;
            }
            num.push(l);
        }
        let mut den = Vec::new();
        for f in &self.sin_den {
            // a vanishing denominator is kept so evaluation reports it
            match canonical_sine(f) {
                Some((s, l)) => {
                    if s < 0 {
                        m.constant = -&m.constant;
                    }
                    den.push(l);
                }
                None => den.push(f.reduce_on_v()),
            }
        }
        // cancel common sines
        let mut k = 0;
        while k < den.len() {
            if let Some(p) = num.iter().position(|x| *x == den[k]) {
                num.remove(p);
                den.remove(k);
            } else {
                k += 1;
            }
        }
        num.sort();
        den.sort();
        rg.sort();
        m.sin_num = num;
        m.sin_den = den;
        m.recip_gamma = rg;
        Some(m)
    }

    fn same_shape(&self, o: &CoeffMonomial) -> bool {
        self.pi_power == o.pi_power
            && self.sin_num == o.sin_num
            && self.sin_den == o.sin_den
            && self.recip_gamma == o.recip_gamma
    }

    /// The monomial at `ρx`.
    pub fn substitute(&self, rho: &ExactMatrix7) -> CoeffMonomial {
        let sub = |v: &[AffineLinearForm]| v.iter().map(|f| f.substitute(rho)).collect();
        CoeffMonomial {
            constant: self.constant.clone(),
            pi_power: self.pi_power,
            sin_num: sub(&self.sin_num),
            sin_den: sub(&self.sin_den),
            recip_gamma: sub(&self.recip_gamma),
        }
    }

    fn forms(&self) -> impl Iterator<Item = &AffineLinearForm> {
        self.sin_num.iter().chain(&self.sin_den).chain(&self.recip_gamma)
    }

    pub fn eval(&self, cache: &mut PointCache) -> Result<Complex> {
        let prec = cache.prec;
        let mut v = Complex::with_val(prec, self.constant.as_rug());
        if self.pi_power != 0 {
            v *= Float::with_val(prec, Float::with_val(prec, Constant::Pi).pow(self.pi_power));
        }
        for f in &self.sin_num {
            v *= cache.sin(f)?;
        }
        for f in &self.recip_gamma {
            v *= cache.rgamma(f)?;
        }
        for f in &self.sin_den {
            let s = cache.sin(f)?;
            if s.is_zero() {
                return Err(Error::DegeneratePoint(format!("sin π({f}) = 0 in a denominator")));
            }
            v /= s;
        }
        Ok(v)
    }
}

impl Mul for &CoeffMonomial {
    type Output = CoeffMonomial;
    fn mul(self, o: &CoeffMonomial) -> CoeffMonomial {
        let cat = |a: &[AffineLinearForm], b: &[AffineLinearForm]| a.iter().chain(b).cloned().collect();
        CoeffMonomial {
            constant: &self.constant * &o.constant,
            pi_power: self.pi_power + o.pi_power,
            sin_num: cat(&self.sin_num, &o.sin_num),
            sin_den: cat(&self.sin_den, &o.sin_den),
            recip_gamma: cat(&self.recip_gamma, &o.recip_gamma),
        }
    }
}

impl CoefficientExpr {
    pub fn new(monomials: Vec<CoeffMonomial>) -> Self {
        CoefficientExpr { monomials }.simplified()
    }

    pub fn monomial(m: CoeffMonomial) -> Self {
        Self::new(vec![m])
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Simplifies every monomial and merges those that differ only in
    /// their constant.
    pub fn simplified(&self) -> Self {
        let mut out: Vec<CoeffMonomial> = Vec::new();
        for m in self.monomials.iter().filter_map(CoeffMonomial::simplified) {
            match out.iter_mut().find(|o| o.same_shape(&m)) {
                Some(o) => o.constant = &o.constant + &m.constant,
                None => out.push(m),
            }
        }
        out.retain(|m| !m.constant.is_zero());
        CoefficientExpr { monomials: out }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        let mut e = self.clone();
        for m in &mut e.monomials {
            m.constant = &m.constant * q;
        }
        e.simplified()
    }

    /// The coefficient at `ρx`.
    pub fn substitute(&self, rho: &ExactMatrix7) -> Self {
        CoefficientExpr {
            monomials: self.monomials.iter().map(|m| m.substitute(rho)).collect(),
        }
        .simplified()
    }

    pub fn forms(&self) -> impl Iterator<Item = &AffineLinearForm> {
        self.monomials.iter().flat_map(|m| m.forms())
    }

    pub fn eval(&self, cache: &mut PointCache) -> Result<Complex> {
        let mut v = Complex::with_val(cache.prec, 0);
        for m in &self.monomials {
            v += m.eval(cache)?;
        }
        Ok(v)
    }

    pub fn eval_at(&self, x: &HyperplanePoint) -> Result<Complex> {
        self.eval(&mut PointCache::new(x))
    }
}

impl Mul for &CoefficientExpr {
    type Output = CoefficientExpr;
    fn mul(self, o: &CoefficientExpr) -> CoefficientExpr {
        let mut v = Vec::new();
        for a in &self.monomials {
            for b in &o.monomials {
                v.push(a * b);
            }
        }
        CoefficientExpr::new(v)
    }
}

impl Mul<&CoeffMonomial> for &CoefficientExpr {
    type Output = CoefficientExpr;
    fn mul(self, o: &CoeffMonomial) -> CoefficientExpr {
        CoefficientExpr::new(self.monomials.iter().map(|a| a * o).collect())
    }
}

impl Neg for &CoefficientExpr {
    type Output = CoefficientExpr;
    fn neg(self) -> CoefficientExpr {
        self.scale(&Rational::from(-1))
    }
}

impl std::ops::Sub for &CoefficientExpr {
    type Output = CoefficientExpr;
    fn sub(self, o: &CoefficientExpr) -> CoefficientExpr {
        let mut v = self.monomials.clone();
        v.extend((-o).monomials);
        CoefficientExpr::new(v)
    }
}

/// Sines and reciprocal gammas of forms at one point, computed once.
pub struct PointCache {
    x: [Complex; 7],
    prec: u32,
    sin: HashMap<AffineLinearForm, Complex>,
    rgamma: HashMap<AffineLinearForm, Complex>,
}

impl PointCache {
    pub fn new(x: &HyperplanePoint) -> Self {
        PointCache {
            x: x.coords().clone(),
            prec: x.prec(),
            sin: HashMap::new(),
            rgamma: HashMap::new(),
        }
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    fn sin(&mut self, f: &AffineLinearForm) -> Result<Complex> {
        if let Some(v) = self.sin.get(f) {
            return Ok(v.clone());
        }
        let v = sin_pi(&f.eval(&self.x), self.prec)?;
        self.sin.insert(f.clone(), v.clone());
        Ok(v)
    }

    fn rgamma(&mut self, f: &AffineLinearForm) -> Result<Complex> {
        if let Some(v) = self.rgamma.get(f) {
            return Ok(v.clone());
        }
        let v = recip_gamma(&f.eval(&self.x), self.prec)?;
        self.rgamma.insert(f.clone(), v.clone());
        Ok(v)
    }
}

impl fmt::Display for CoeffMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |l: &AffineLinearForm| l.sparsest_on_v().to_string();
        let mut parts: Vec<String> = Vec::new();
        let q = &self.constant;
        let unit = q.abs() == Rational::one();
        if !unit {
            parts.push(q.abs().to_string());
        }
        match self.pi_power {
            0 => {}
            1 => parts.push("pi".into()),
            k => parts.push(format!("pi^{k}")),
        }
        parts.extend(self.sin_num.iter().map(|l| format!("sin({})", show(l))));
        parts.extend(self.recip_gamma.iter().map(|l| format!("rgamma({})", show(l))));
        if parts.is_empty() {
            parts.push("1".into());
        }
        if q.signum() < 0 {
            f.write_str("-")?;
        }
        f.write_str(&parts.join("*"))?;
        for l in &self.sin_den {
            write!(f, "/sin({})", show(l))?;
        }
        Ok(())
    }
}

impl fmt::Display for CoefficientExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomials.is_empty() {
            return f.write_str("0");
        }
        for (i, m) in self.monomials.iter().enumerate() {
            let s = m.to_string();
            if i > 0 {
                if let Some(rest) = s.strip_prefix('-') {
                    write!(f, " - {rest}")?;
                    continue;
                }
                f.write_str(" + ")?;
            }
            f.write_str(&s)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sine_normalization() {
        let (s, l) = canonical_sine(&form("c-b")).unwrap();
        assert_eq!((s, l), (-1, form("b-c")));
        let (s, l) = canonical_sine(&form("1+a-b")).unwrap();
        assert_eq!((s, l), (-1, form("a-b")));
        // on V, g-a-b-c-d = 1+a... is e+f-... reduced; g eliminated
        let (_, l) = canonical_sine(&form("g-d")).unwrap();
        assert!(l.coefficients[6].is_zero());
        assert!(canonical_sine(&form("e+f+g-a-b-c-d")).is_none());
    }

    #[test]
    fn reflection_and_cancellation() {
        let m = CoeffMonomial::new(1).rgamma(&["a", "1-a"]).over_sin(&["a"]);
        let s = m.simplified().unwrap();
        assert_eq!(s.pi_power, -1);
        assert!(s.sin_num.is_empty() && s.sin_den.is_empty() && s.recip_gamma.is_empty());
        assert_eq!(s.constant, Rational::one());
    }

    #[test]
    fn merging_and_cancelling_monomials() {
        let a = CoeffMonomial::new(2).sin(&["c-b"]);
        let b = CoeffMonomial::new(2).sin(&["b-c"]);
        assert!(CoefficientExpr::new(vec![a.clone(), b]).is_empty());
        let e = CoefficientExpr::new(vec![a.clone(), a]);
        assert_eq!(e.len(), 1);
        assert_eq!(e.monomials[0].constant, Rational::from(-4));
    }

    #[test]
    fn display() {
        let m = CoeffMonomial::new(-1).pi(3).sin(&["a-b"]).rgamma(&["a"]);
        let e = CoefficientExpr::monomial(m);
        assert_eq!(e.to_string(), "-pi^3*sin(a-b)*rgamma(a)");
    }
}
