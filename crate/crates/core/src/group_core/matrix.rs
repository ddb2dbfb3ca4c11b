use std::fmt;
use std::fmt::Write as _;
use std::ops::Mul;

use rug::Complex;
use serde::{Deserialize, Serialize};

use super::{AffineLinearForm, Rational};
use crate::error::{Error, Result};

pub const DIM: usize = 7;

/// Row-major serialization of a matrix in lowest terms. Two matrices are
/// equal exactly when their keys are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MatrixKey(pub String);

impl fmt::Display for MatrixKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A 7×7 matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix7 {
    rows: [[Rational; DIM]; DIM],
}

impl ExactMatrix7 {
    pub fn zero() -> Self {
        ExactMatrix7 {
            rows: std::array::from_fn(|_| std::array::from_fn(|_| Rational::zero())),
        }
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..DIM {
            m.rows[i][i] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: [[Rational; DIM]; DIM]) -> Self {
        ExactMatrix7 { rows }
    }

    pub fn from_int_rows(rows: [[i64; DIM]; DIM]) -> Self {
        ExactMatrix7 {
            rows: rows.map(|r| r.map(Rational::from)),
        }
    }

    /// Permutation matrix with `(P x)_i = x_{σ(i)}`, where `sigma` is
    /// zero-based.
    pub fn permutation(sigma: &[usize; DIM]) -> Self {
        let mut m = Self::zero();
        for (i, &s) in sigma.iter().enumerate() {
            m.rows[i][s] = Rational::one();
        }
        m
    }

    /// Permutation matrix for a product of cycles in one-based notation,
    /// e.g. `"(25)(36)(47)"` or `"(1234)"`. Cycles are multiplied as
    /// matrices from left to right, so `(1234)x = (b,c,d,a,e,f,g)`.
    pub fn from_cycles(spec: &str) -> Result<Self> {
        let mut m = Self::identity();
        let mut rest = spec.trim();
        if rest.is_empty() || rest == "()" || rest == "id" {
            return Ok(m);
        }
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("cycle notation {spec:?}")))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {spec:?}")))?;
            let body = &open[..close];
            let mut pts = Vec::new();
            for ch in body.chars().filter(|c| !c.is_whitespace() && *c != ',') {
                let d = ch
                    .to_digit(10)
                    .filter(|d| (1..=7).contains(d))
                    .ok_or_else(|| Error::Parse(format!("bad point {ch:?} in {spec:?}")))?;
                let d = d as usize - 1;
                if pts.contains(&d) {
                    return Err(Error::Parse(format!("repeated point in {spec:?}")));
                }
                pts.push(d);
            }
            let mut sigma: [usize; DIM] = std::array::from_fn(|i| i);
            for (k, &p) in pts.iter().enumerate() {
                sigma[p] = pts[(k + 1) % pts.len()];
            }
            m = &m * &Self::permutation(&sigma);
            rest = open[close + 1..].trim_start();
        }
        Ok(m)
    }

    /// Matrix whose rows are the given affine forms, read on the hyperplane
    /// `e+f+g-a-b-c-d = 1`: a constant `c` is replaced by `c` times that
    /// functional, so the result is linear.
    pub fn from_affine_rows(rows: &[AffineLinearForm; DIM]) -> Self {
        let phi = AffineLinearForm::hyperplane_functional();
        let mut m = Self::zero();
        for (i, r) in rows.iter().enumerate() {
            for j in 0..DIM {
                m.rows[i][j] = &r.coefficients[j] + &(&r.constant * &phi.coefficients[j]);
            }
        }
        m
    }

    /// The rows as affine forms in canonical display shape.
    pub fn row_forms(&self) -> [AffineLinearForm; DIM] {
        std::array::from_fn(|i| AffineLinearForm::linear(self.rows[i].clone()))
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j]
    }

    pub fn row(&self, i: usize) -> &[Rational; DIM] {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[[Rational; DIM]; DIM] {
        &self.rows
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn transpose(&self) -> Self {
        ExactMatrix7 {
            rows: std::array::from_fn(|i| std::array::from_fn(|j| self.rows[j][i].clone())),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::identity(), |acc, _| &acc * self)
    }

    /// Gauss–Jordan inverse.
    pub fn inverse(&self) -> Result<Self> {
        let mut a = self.rows.clone();
        let mut inv = Self::identity().rows;
        for col in 0..DIM {
            let piv = (col..DIM)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(Error::SingularMatrix)?;
            a.swap(col, piv);
            inv.swap(col, piv);
            let p = a[col][col].recip().expect("nonzero pivot");
            for j in 0..DIM {
                a[col][j] = &a[col][j] * &p;
                inv[col][j] = &inv[col][j] * &p;
            }
            for r in 0..DIM {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for j in 0..DIM {
                    let t = &f * &a[col][j];
                    a[r][j] -= &t;
                    let t = &f * &inv[col][j];
                    inv[r][j] -= &t;
                }
            }
        }
        Ok(ExactMatrix7 { rows: inv })
    }

    pub fn determinant(&self) -> Rational {
        let mut a = self.rows.clone();
        let mut det = Rational::one();
        for col in 0..DIM {
            let Some(piv) = (col..DIM).find(|&r| !a[r][col].is_zero()) else {
                return Rational::zero();
            };
            if piv != col {
                a.swap(col, piv);
                det = -det;
            }
            det = &det * &a[col][col];
            let p = a[col][col].recip().expect("nonzero pivot");
            for r in col + 1..DIM {
                if a[r][col].is_zero() {
                    continue;
                }
                let f = &a[r][col] * &p;
                for j in col..DIM {
                    let t = &f * &a[col][j];
                    a[r][j] -= &t;
                }
            }
        }
        det
    }

    /// `S M S⁻¹`.
    pub fn conjugate_by(&self, s: &Self, s_inv: &Self) -> Self {
        &(s * self) * s_inv
    }

    pub fn key(&self) -> MatrixKey {
        let mut out = String::with_capacity(4 * DIM * DIM);
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                out.push(';');
            }
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    out.push(',');
                }
                match (e.numer().to_i64(), e.is_integer()) {
                    (Some(n), true) => write!(out, "{n}").unwrap(),
                    _ => write!(out, "{e}").unwrap(),
                }
            }
        }
        MatrixKey(out)
    }

    pub fn from_key(key: &MatrixKey) -> Result<Self> {
        let rows: Vec<&str> = key.0.split(';').collect();
        if rows.len() != DIM {
            return Err(Error::Parse(format!("matrix key has {} rows", rows.len())));
        }
        let mut m = Self::zero();
        for (i, r) in rows.iter().enumerate() {
            let cells: Vec<&str> = r.split(',').collect();
            if cells.len() != DIM {
                return Err(Error::Parse(format!("matrix key row {i} has {} entries", cells.len())));
            }
            for (j, c) in cells.iter().enumerate() {
                m.rows[i][j] = c.parse()?;
            }
        }
        Ok(m)
    }

    /// Entries as `i8`, if they are all small integers.
    pub fn to_small_ints(&self) -> Option<[[i8; DIM]; DIM]> {
        let mut out = [[0i8; DIM]; DIM];
        for i in 0..DIM {
            for j in 0..DIM {
                let e = &self.rows[i][j];
                if !e.is_integer() {
                    return None;
                }
                out[i][j] = e.numer().to_i8()?;
            }
        }
        Some(out)
    }

    /// `M x` for a complex 7-vector, computed at the precision of `x[0]`.
    pub fn apply(&self, x: &[Complex; DIM]) -> [Complex; DIM] {
        let prec = x[0].prec();
        std::array::from_fn(|i| {
            let mut acc = Complex::new(prec);
            for (j, xj) in x.iter().enumerate() {
                let e = &self.rows[i][j];
                if e.is_zero() {
                    continue;
                }
                if e.is_integer() {
                    if let Some(k) = e.numer().to_i32() {
                        match k {
                            1 => acc += xj,
                            -1 => acc -= xj,
                            _ => acc += Complex::with_val(prec, xj * k),
                        }
                        continue;
                    }
                }
                acc += Complex::with_val(prec, xj * e.as_rug());
            }
            acc
        })
    }
}

impl Mul<&ExactMatrix7> for &ExactMatrix7 {
    type Output = ExactMatrix7;

    fn mul(self, rhs: &ExactMatrix7) -> ExactMatrix7 {
        let mut out = ExactMatrix7::zero();
        for i in 0..DIM {
            for k in 0..DIM {
                let a = &self.rows[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..DIM {
                    let b = &rhs.rows[k][j];
                    if b.is_zero() {
                        continue;
                    }
                    let t = a * b;
                    out.rows[i][j] += &t;
                }
            }
        }
        out
    }
}

impl Mul for ExactMatrix7 {
    type Output = ExactMatrix7;
    fn mul(self, rhs: ExactMatrix7) -> ExactMatrix7 {
        &self * &rhs
    }
}

impl fmt::Debug for ExactMatrix7 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactMatrix7[{}]", self.key())
    }
}

impl fmt::Display for ExactMatrix7 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect())
            .collect();
        let w = cells.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
        for (i, r) in cells.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for (j, c) in r.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{c:>w$}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

impl Serialize for ExactMatrix7 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect())
            .collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExactMatrix7 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let rows: Vec<Vec<String>> = Vec::deserialize(d)?;
        if rows.len() != DIM || rows.iter().any(|r| r.len() != DIM) {
            return Err(D::Error::custom("expected a 7x7 array"));
        }
        let mut m = ExactMatrix7::zero();
        for (i, r) in rows.iter().enumerate() {
            for (j, c) in r.iter().enumerate() {
                m.rows[i][j] = c.parse().map_err(D::Error::custom)?;
            }
        }
        Ok(m)
    }
}

/// Matrix product, kept as a free function for symmetry with `mat_inverse`.
pub fn mat_mul(m1: &ExactMatrix7, m2: &ExactMatrix7) -> ExactMatrix7 {
    m1 * m2
}

pub fn mat_inverse(m: &ExactMatrix7) -> Result<ExactMatrix7> {
    m.inverse()
}

/// The change-of-basis matrix conjugating coordinate permutations into the
/// symmetry group of `K`.
pub fn s_matrix() -> ExactMatrix7 {
    ExactMatrix7::from_int_rows([
        [1, 0, 0, 0, 0, 0, 0],
        [0, 0, 1, 1, 0, 0, 0],
        [0, 1, 0, 1, 0, 0, 0],
        [0, 1, 1, 0, 0, 0, 0],
        [0, 1, 1, 1, 1, 0, 0],
        [0, 1, 1, 1, 0, 1, 0],
        [0, 1, 1, 1, 0, 0, 1],
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s_inverse_has_halves() {
        let s = s_matrix();
        let si = s.inverse().unwrap();
        assert!((&s * &si).is_identity());
        assert_eq!(si.get(1, 1), &Rational::new(-1, 2));
        assert_eq!(si.get(4, 4), &Rational::one());
        assert_eq!(s.determinant(), Rational::from(2));
    }

    #[test]
    fn cycle_convention() {
        let c = ExactMatrix7::from_cycles("(1234)").unwrap();
        // (1234)x = (b,c,d,a,...)
        assert_eq!(c.get(0, 1), &Rational::one());
        assert_eq!(c.get(3, 0), &Rational::one());
        assert!(c.pow(4).is_identity());
        let t = ExactMatrix7::from_cycles("(25)(36)(47)").unwrap();
        assert!((&t * &t).is_identity());
        assert!(ExactMatrix7::from_cycles("(12").is_err());
        assert!(ExactMatrix7::from_cycles("(129)").is_err());
    }

    #[test]
    fn singular_is_reported() {
        let mut rows = [[0i64; 7]; 7];
        rows[0][0] = 1;
        assert_eq!(ExactMatrix7::from_int_rows(rows).inverse(), Err(Error::SingularMatrix));
    }

    #[test]
    fn key_round_trip() {
        let si = s_matrix().inverse().unwrap();
        let k = si.key();
        assert_eq!(ExactMatrix7::from_key(&k).unwrap(), si);
        let js = serde_json::to_string(&si).unwrap();
        let back: ExactMatrix7 = serde_json::from_str(&js).unwrap();
        assert_eq!(back, si);
    }
}
