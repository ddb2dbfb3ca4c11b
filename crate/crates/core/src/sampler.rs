//! Seeded random points of the hyperplane in generic position.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::Complex;
use serde::{Deserialize, Serialize};

use crate::complex_sf::c;
use crate::error::{Error, Result};
use crate::group_core::{s_matrix, AffineLinearForm, ExactMatrix7, DIM};
use crate::hyper_eval::HyperplanePoint;

pub const DEFAULT_MARGIN: f64 = 1e-3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum SamplerKind {
    /// Points near the centre of the fundamental region, so that every
    /// image under `M_K` admits a straight Barnes contour.
    #[default]
    Central,
    /// `a,…,f` with real parts in `[0.1, 0.9]` and imaginary parts in
    /// `[-0.5, 0.5]`, `g` forced.
    Box,
}

impl std::str::FromStr for SamplerKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "central" => Ok(SamplerKind::Central),
            "box" => Ok(SamplerKind::Box),
            _ => Err(Error::Parse(format!("unknown sampler '{s}'"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Sampler {
    rng: ChaCha8Rng,
    kind: SamplerKind,
    prec: u32,
    margin: f64,
    basis: [[f64; DIM]; DIM],
    weights: [f64; DIM],
}

/// Half-width of the real parts of the free central coordinates.
const CENTRAL_RE: f64 = 0.125;

impl Sampler {
    pub fn new(seed: u64, kind: SamplerKind, prec: u32) -> Self {
        // columns: (1, 1/2, …, 1/2) then e_2 … e_7, pushed through S
        let mut b = ExactMatrix7::identity()
            .to_small_ints()
            .unwrap()
            .map(|r| r.map(|v| v as f64));
        for (i, row) in b.iter_mut().enumerate() {
            row[0] = if i == 0 { 1.0 } else { 0.5 };
        }
        let s = s_matrix().to_small_ints().unwrap().map(|r| r.map(|v| v as f64));
        let mut sb = [[0.0; DIM]; DIM];
        for i in 0..DIM {
            for j in 0..DIM {
                sb[i][j] = (0..DIM).map(|k| s[i][k] * b[k][j]).sum();
            }
        }
        let phi = AffineLinearForm::hyperplane_functional();
        let mut weights = [0.0; DIM];
        for (j, w) in weights.iter_mut().enumerate() {
            *w = (0..DIM).map(|i| phi.coefficients[i].to_f64() * sb[i][j]).sum();
        }
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            kind,
            prec,
            margin: DEFAULT_MARGIN,
            basis: sb,
            weights,
        }
    }

    pub fn with_margin(mut self, margin: f64) -> Self {
        self.margin = margin;
        self
    }

    fn draw(&mut self) -> HyperplanePoint {
        match self.kind {
            SamplerKind::Box => {
                let v: Vec<Complex> = (0..6)
                    .map(|_| c(self.prec, self.rng.gen_range(0.1..0.9), self.rng.gen_range(-0.5..0.5)))
                    .collect();
                let [a, b, cc, d, e, f]: [Complex; 6] = v.try_into().unwrap();
                HyperplanePoint::new(a, b, cc, d, e, f)
            }
            SamplerKind::Central => {
                let mut u = [(0.0, 0.0); DIM];
                for ui in u.iter_mut().skip(1) {
                    *ui = (
                        self.rng.gen_range(-CENTRAL_RE..CENTRAL_RE),
                        self.rng.gen_range(-0.5..0.5),
                    );
                }
                let w = self.weights;
                let (sr, si) = (1..DIM).fold((0.0, 0.0), |(r, i), k| (r + w[k] * u[k].0, i + w[k] * u[k].1));
                u[0] = ((1.0 - sr) / w[0], -si / w[0]);
                let x: [Complex; DIM] = std::array::from_fn(|i| {
                    let (r, im) = (0..DIM).fold((0.0, 0.0), |(r, im), j| {
                        (r + self.basis[i][j] * u[j].0, im + self.basis[i][j] * u[j].1)
                    });
                    c(self.prec, r, im)
                });
                // the constraint holds in f64; force it exactly through g
                let [a, b, cc, d, e, f, _] = x;
                HyperplanePoint::new(a, b, cc, d, e, f)
            }
        }
    }

    /// Next point in generic position.
    pub fn next_point(&mut self) -> HyperplanePoint {
        loop {
            let p = self.draw();
            if p.is_generic(self.margin) {
                return p;
            }
        }
    }

    pub fn points(&mut self, n: usize) -> Vec<HyperplanePoint> {
        (0..n).map(|_| self.next_point()).collect()
    }
}

/// `n` generic points from `seed`.
pub fn sample_points(n: usize, seed: u64, kind: SamplerKind, prec: u32) -> Vec<HyperplanePoint> {
    Sampler::new(seed, kind, prec).points(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::barnes_integral::k_contour_admissible;
    use crate::mk_cosets::tables;

    #[test]
    fn central_points_are_admissible_under_all_of_m_k() {
        let mut s = Sampler::new(3, SamplerKind::Central, 64);
        for _ in 0..3 {
            let p = s.next_point();
            assert!(p.constraint_residual() < 1e-15);
            for m in tables().m_k.iter() {
                assert!(k_contour_admissible(&p.transform(m)));
            }
        }
    }

    #[test]
    fn seeds_are_reproducible() {
        let a = sample_points(2, 11, SamplerKind::Box, 64);
        let b = sample_points(2, 11, SamplerKind::Box, 64);
        assert_eq!(a, b);
    }
}
