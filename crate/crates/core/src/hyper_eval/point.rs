use std::fmt;
use std::sync::OnceLock;

use rug::{Complex, Float};
use serde::{Deserialize, Serialize};

use crate::complex_sf::{abs_f64, format_complex, parse_complex};
use crate::error::{Error, Result};
use crate::group_core::{AffineLinearForm, ExactMatrix7, DIM};
use crate::mk_cosets::tables;

/// A point `(a,b,c,d,e,f,g)` of the hyperplane `e+f+g-a-b-c-d = 1`.
#[derive(Clone, PartialEq)]
pub struct HyperplanePoint {
    x: [Complex; DIM],
}

impl HyperplanePoint {
    /// Builds the point with `g = 1+a+b+c+d-e-f`.
    pub fn new(a: Complex, b: Complex, c: Complex, d: Complex, e: Complex, f: Complex) -> Self {
        let prec = a.prec().0;
        let mut g = Complex::with_val(prec, 1);
        for v in [&a, &b, &c, &d] {
            g += v;
        }
        g -= &e;
        g -= &f;
        HyperplanePoint {
            x: [a, b, c, d, e, f, g],
        }
    }

    /// Accepts explicit coordinates if they satisfy the constraint to
    /// `10·2^-prec` relative to their size.
    pub fn from_coords(x: [Complex; DIM]) -> Result<Self> {
        let p = HyperplanePoint { x };
        let prec = p.prec();
        let scale: f64 = p.x.iter().map(abs_f64).sum::<f64>().max(1.0);
        let r = p.constraint_residual();
        if r > 10.0 * scale * (-(prec as f64)).exp2() {
            return Err(Error::DegeneratePoint(format!(
                "off the hyperplane: |e+f+g-a-b-c-d-1| = {r:e}"
            )));
        }
        Ok(p)
    }

    /// Parses six or seven comma-separated complex numbers; with six, `g`
    /// is forced by the constraint.
    pub fn parse(s: &str, prec: u32) -> Result<Self> {
        let parts: Vec<Complex> = s
            .split([',', ';'])
            .map(|t| parse_complex(t, prec))
            .collect::<Result<_>>()?;
        match parts.len() {
            6 => {
                let [a, b, c, d, e, f]: [Complex; 6] = parts.try_into().unwrap();
                Ok(Self::new(a, b, c, d, e, f))
            }
            7 => Self::from_coords(parts.try_into().unwrap()),
            n => Err(Error::Parse(format!("expected 6 or 7 coordinates, got {n}"))),
        }
    }

    pub fn coords(&self) -> &[Complex; DIM] {
        &self.x
    }

    pub fn prec(&self) -> u32 {
        self.x[0].prec().0
    }

    pub fn a(&self) -> &Complex {
        &self.x[0]
    }
    pub fn b(&self) -> &Complex {
        &self.x[1]
    }
    pub fn c(&self) -> &Complex {
        &self.x[2]
    }
    pub fn d(&self) -> &Complex {
        &self.x[3]
    }
    pub fn e(&self) -> &Complex {
        &self.x[4]
    }
    pub fn f(&self) -> &Complex {
        &self.x[5]
    }
    pub fn g(&self) -> &Complex {
        &self.x[6]
    }

    pub fn constraint_residual(&self) -> f64 {
        abs_f64(&(AffineLinearForm::hyperplane_functional().eval(&self.x) - 1u32))
    }

    /// `m x`.
    pub fn transform(&self, m: &ExactMatrix7) -> HyperplanePoint {
        HyperplanePoint { x: m.apply(&self.x) }
    }

    pub fn eval(&self, form: &AffineLinearForm) -> Complex {
        form.eval(&self.x)
    }

    pub fn with_precision(&self, prec: u32) -> HyperplanePoint {
        HyperplanePoint {
            x: std::array::from_fn(|i| Complex::with_val(prec, &self.x[i])),
        }
    }

    /// Distance from `form(x)` to the nearest integer.
    pub fn integer_distance(&self, form: &AffineLinearForm) -> f64 {
        let v = self.eval(form);
        let re = v.real();
        let frac = Float::with_val(64, re - Float::with_val(re.prec(), re.round_ref()));
        frac.to_f64().hypot(v.imag().to_f64())
    }

    /// True when every form in [`generic_position_forms`] stays at least
    /// `margin` away from the integers.
    pub fn is_generic(&self, margin: f64) -> bool {
        generic_position_forms()
            .iter()
            .all(|f| self.integer_distance(f) >= margin)
    }

    pub fn to_strings(&self, digits: usize) -> [String; DIM] {
        std::array::from_fn(|i| format_complex(&self.x[i], digits))
    }

    fn digits(&self) -> usize {
        (self.prec() as f64 * std::f64::consts::LOG10_2).ceil() as usize + 2
    }
}

impl fmt::Debug for HyperplanePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings(20).join(", "))
    }
}

impl fmt::Display for HyperplanePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings(17).join(", "))
    }
}

#[derive(Serialize, Deserialize)]
struct PointRepr {
    precision: u32,
    coords: Vec<String>,
}

impl Serialize for HyperplanePoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PointRepr {
            precision: self.prec(),
            coords: self.to_strings(self.digits()).to_vec(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HyperplanePoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = PointRepr::deserialize(d)?;
        let v: Vec<Complex> = r
            .coords
            .iter()
            .map(|s| parse_complex(s, r.precision))
            .collect::<Result<_>>()
            .map_err(D::Error::custom)?;
        let x: [Complex; DIM] = v
            .try_into()
            .map_err(|_| D::Error::custom("expected seven coordinates"))?;
        Ok(HyperplanePoint { x })
    }
}

/// Arguments of the gamma factors of `K` and of its integral
/// representation, together with differences of numerator parameters,
/// pulled back along all 32 coset representatives.
pub fn generic_position_forms() -> &'static [AffineLinearForm] {
    static F: OnceLock<Vec<AffineLinearForm>> = OnceLock::new();
    F.get_or_init(|| {
        let normalize = |g: AffineLinearForm| {
            let g = g.reduce_on_v();
            if g.coefficients
                .iter()
                .find(|c| !c.is_zero())
                .is_some_and(|c| c.signum() < 0)
            {
                (-&g).reduce_on_v()
            } else {
                g
            }
        };
        let mut out: Vec<AffineLinearForm> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for s in [
            "a", "b", "c", "d", "e", "f", "g", "1+a-e", "1+a-f", "1+a-g", "1+a-b", "1+a-c", "1+a-d", "e-b", "e-c",
            "f-b", "f-c", "g-d", "d+b-g", "d+c-g", "a-b", "a-c", "a-d", "b-c", "b-d", "c-d", "e-a", "f-a", "g-a",
            "e-a-b", "e-a-c", "f-e", "g-c", "g-b", "1+b-e", "1+a+b-e",
        ] {
            let f = normalize(s.parse().expect("static form"));
            if !f.is_constant() && seen.insert(f.clone()) {
                out.push(f);
            }
        }
        // close under the generators of M_K
        let gens = &tables().m_k.generators;
        let mut i = 0;
        while i < out.len() {
            for m in gens {
                let g = normalize(out[i].substitute(m));
                if !g.is_constant() && seen.insert(g.clone()) {
                    out.push(g);
                }
            }
            i += 1;
        }
        out
    })
}
