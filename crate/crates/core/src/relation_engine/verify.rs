//! Numerical verification of relations and of the two-term symmetry.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rug::Complex;
use serde::{Deserialize, Serialize};

use crate::barnes_integral::{k_integral, QuadratureOptions};
use crate::complex_sf::{abs_f64, rel_diff};
use crate::coxeter_d6::HammingType;
use crate::error::{Error, Result};
use crate::hyper_eval::{k_function, HyperplanePoint, SeriesOptions};
use crate::mk_cosets::{tables, CosetRep};

use super::certificate::{PointResidual, RelationCertificate};
use super::expr::{CoefficientExpr, PointCache};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EvalPath {
    #[default]
    Series,
    Integral,
}

impl std::str::FromStr for EvalPath {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "series" => Ok(EvalPath::Series),
            "integral" => Ok(EvalPath::Integral),
            _ => Err(Error::Parse(format!("unknown evaluation path '{s}'"))),
        }
    }
}

impl std::fmt::Display for EvalPath {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            EvalPath::Series => "series",
            EvalPath::Integral => "integral",
        })
    }
}

/// Evaluates `K` along one path.
#[derive(Clone, Debug)]
pub struct KEvaluator {
    pub path: EvalPath,
    pub series: SeriesOptions,
    pub quadrature: QuadratureOptions,
}

impl KEvaluator {
    pub fn new(path: EvalPath) -> Self {
        KEvaluator {
            path,
            series: SeriesOptions::default(),
            quadrature: QuadratureOptions::default(),
        }
    }

    /// Quadrature tolerance `tol`; the series is always run to full precision.
    pub fn with_quadrature_tol(mut self, tol: f64) -> Self {
        self.quadrature = QuadratureOptions::with_tol(tol);
        self
    }

    pub fn eval(&self, x: &HyperplanePoint) -> Result<Complex> {
        match self.path {
            EvalPath::Series => k_function(x, &self.series),
            EvalPath::Integral => k_integral(x, &self.quadrature),
        }
    }
}

/// A point with `K` at its 32 representative images and a cache of the
/// sines and reciprocal gammas seen so far.
pub struct PointContext {
    pub point: HyperplanePoint,
    cache: PointCache,
    k: Vec<Option<Complex>>,
}

impl PointContext {
    pub fn new(point: HyperplanePoint) -> Self {
        PointContext {
            cache: PointCache::new(&point),
            point,
            k: vec![None; 32],
        }
    }

    /// `K(μx)`.
    pub fn k(&mut self, rep: &CosetRep, ev: &KEvaluator) -> Result<Complex> {
        let i = rep.position();
        if let Some(v) = &self.k[i] {
            return Ok(v.clone());
        }
        let v = ev.eval(&self.point.transform(&rep.matrix))?;
        self.k[i] = Some(v.clone());
        Ok(v)
    }

    pub fn coefficient(&mut self, e: &CoefficientExpr) -> Result<Complex> {
        e.eval(&mut self.cache)
    }

    /// `|Σ γ_i K_i| / max |γ_i K_i|`.
    pub fn residual(&mut self, cert: &RelationCertificate, ev: &KEvaluator) -> Result<f64> {
        let reps = cert.reps()?;
        let mut terms = Vec::with_capacity(3);
        for i in 0..3 {
            let g = self.coefficient(&cert.coefficients[i])?;
            terms.push(g * self.k(reps[i], ev)?);
        }
        relation_residual(&terms)
    }
}

/// `|Σ t_i| / max |t_i|`.
pub fn relation_residual(terms: &[Complex]) -> Result<f64> {
    let scale = terms.iter().map(abs_f64).fold(0.0, f64::max);
    if scale == 0.0 || !scale.is_finite() {
        return Err(Error::NonFinite("relation terms"));
    }
    let mut s = Complex::with_val(terms[0].prec(), 0);
    for t in terms {
        s += t;
    }
    Ok(abs_f64(&s) / scale)
}

/// Records the residual at each point and sets `verified`.
pub fn verify_relation(
    mut cert: RelationCertificate,
    points: &[HyperplanePoint],
    tol: f64,
    ev: &KEvaluator,
) -> Result<RelationCertificate> {
    let mut ctx: Vec<PointContext> = points.iter().cloned().map(PointContext::new).collect();
    verify_in(&mut cert, &mut ctx, tol, ev)?;
    Ok(cert)
}

/// As [`verify_relation`], reusing shared point contexts.
pub fn verify_in(cert: &mut RelationCertificate, ctx: &mut [PointContext], tol: f64, ev: &KEvaluator) -> Result<()> {
    cert.residuals.clear();
    for c in ctx.iter_mut() {
        let r = c.residual(cert, ev)?;
        cert.residuals.push(PointResidual {
            point: c.point.clone(),
            path: ev.path,
            residual: r,
        });
    }
    cert.tolerance = Some(tol);
    cert.verified = Some(cert.residuals.iter().all(|r| r.residual <= tol));
    Ok(())
}

pub fn max_residual(cert: &RelationCertificate) -> f64 {
    cert.residuals.iter().map(|r| r.residual).fold(0.0, f64::max)
}

#[derive(Clone, Debug, Serialize)]
pub struct TwoTermReport {
    pub path: EvalPath,
    pub points: usize,
    pub elements: usize,
    pub max_residual: f64,
    /// Index into `G_K` and point index of the worst case.
    pub worst: (usize, usize),
    pub elapsed: Duration,
}

/// `max |K(gx) - K(x)| / |K(x)|` over `g ∈ G_K` and the given points.
pub fn two_term_suite(points: &[HyperplanePoint], ev: &KEvaluator) -> Result<TwoTermReport> {
    let start = Instant::now();
    let g_k = &tables().g_k;
    let mut worst = (0.0, (0, 0));
    for (pi, x) in points.iter().enumerate() {
        let k0 = ev.eval(x)?;
        for (gi, g) in g_k.iter().enumerate() {
            let r = if g.is_identity() {
                0.0
            } else {
                rel_diff(&ev.eval(&x.transform(g))?, &k0)
            };
            if r > worst.0 || !r.is_finite() {
                worst = (r, (gi, pi));
            }
        }
    }
    Ok(TwoTermReport {
        path: ev.path,
        points: points.len(),
        elements: g_k.order(),
        max_residual: worst.0,
        worst: worst.1,
        elapsed: start.elapsed(),
    })
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct TypeSummary {
    pub count: usize,
    pub verified: usize,
    pub max_residual: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub path: EvalPath,
    pub tolerance: f64,
    pub certificates: usize,
    pub verified: usize,
    pub max_residual: f64,
    pub by_type: BTreeMap<HammingType, TypeSummary>,
    /// Triples that failed, with the reason.
    pub failures: Vec<(String, String)>,
    pub elapsed: Duration,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.verified == self.certificates
    }
}

/// Builds and verifies a relation for each triple at the shared points.
pub fn three_term_sweep(
    triples: &[[&CosetRep; 3]],
    points: &[HyperplanePoint],
    tol: f64,
    ev: &KEvaluator,
    mut keep: impl FnMut(RelationCertificate),
) -> Result<SweepReport> {
    let start = Instant::now();
    let mut ctx: Vec<PointContext> = points.iter().cloned().map(PointContext::new).collect();
    let mut rep = SweepReport {
        path: ev.path,
        tolerance: tol,
        certificates: 0,
        verified: 0,
        max_residual: 0.0,
        by_type: BTreeMap::new(),
        failures: Vec::new(),
        elapsed: Duration::ZERO,
    };
    for t in triples {
        let name = format!("({},{},{})", t[0].name(), t[1].name(), t[2].name());
        let mut cert = match super::certificate::build_relation(*t) {
            Ok(c) => c,
            Err(e) => {
                rep.failures.push((name, e.to_string()));
                continue;
            }
        };
        if let Err(e) = verify_in(&mut cert, &mut ctx, tol, ev) {
            rep.failures.push((name, e.to_string()));
            continue;
        }
        let r = max_residual(&cert);
        let ok = cert.verified == Some(true);
        let s = rep.by_type.entry(cert.hamming_type).or_default();
        s.count += 1;
        s.max_residual = s.max_residual.max(r);
        rep.certificates += 1;
        rep.max_residual = rep.max_residual.max(r);
        if ok {
            s.verified += 1;
            rep.verified += 1;
        } else {
            rep.failures.push((name, format!("residual {r:e}")));
        }
        keep(cert);
    }
    rep.elapsed = start.elapsed();
    Ok(rep)
}
