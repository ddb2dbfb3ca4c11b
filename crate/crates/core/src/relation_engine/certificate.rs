//! Relations for arbitrary triples of cosets, obtained by transporting a
//! canonical relation with an element `ρ ∈ M_K`.

use serde::{Deserialize, Serialize};

use crate::coxeter_d6::{
    classify_triple, find_transporter, hamming_distance, pairwise_distances, HammingType, SignVector,
};
use crate::error::{Error, Result};
use crate::group_core::ExactMatrix7;
use crate::hyper_eval::HyperplanePoint;
use crate::mk_cosets::{tables, CosetRep};

use super::canonical::{canonical_relation, RelationTemplate};
use super::expr::CoefficientExpr;
use super::verify::EvalPath;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointResidual {
    pub point: HyperplanePoint,
    pub path: EvalPath,
    pub residual: f64,
}

/// `γ₁(x)K(μ₁x) + γ₂(x)K(μ₂x) + γ₃(x)K(μ₃x) = 0` with its provenance
/// and any numerical checks run on it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RelationCertificate {
    pub schema: u32,
    /// Representative names `μ₁, μ₂, μ₃`.
    pub triple: [String; 3],
    pub labels: [String; 3],
    #[serde(rename = "type")]
    pub hamming_type: HammingType,
    /// Canonical triple the relation was transported from, aligned with
    /// `triple`.
    pub canonical_triple: [String; 3],
    pub rho: ExactMatrix7,
    pub coefficients: [CoefficientExpr; 3],
    pub residuals: Vec<PointResidual>,
    pub tolerance: Option<f64>,
    pub verified: Option<bool>,
}

impl RelationCertificate {
    pub fn from_template(t: &RelationTemplate) -> Result<Self> {
        let tb = tables();
        let reps: Vec<&CosetRep> = t.triple.iter().map(|n| tb.rep_by_name(n)).collect::<Result<_>>()?;
        Ok(RelationCertificate {
            schema: SCHEMA_VERSION,
            triple: t.triple.map(String::from),
            labels: std::array::from_fn(|i| reps[i].label.label()),
            hamming_type: t.hamming_type,
            canonical_triple: t.triple.map(String::from),
            rho: ExactMatrix7::identity(),
            coefficients: t.coefficients.clone(),
            residuals: Vec::new(),
            tolerance: None,
            verified: None,
        }
        .normalized())
    }

    pub fn reps(&self) -> Result<[&'static CosetRep; 3]> {
        let tb = tables();
        Ok([
            tb.rep_by_name(&self.triple[0])?,
            tb.rep_by_name(&self.triple[1])?,
            tb.rep_by_name(&self.triple[2])?,
        ])
    }

    /// Rescales so that the leading monomial of the first coefficient has
    /// constant 1.
    pub fn normalized(mut self) -> Self {
        if let Some(m) = self.coefficients[0].monomials.first() {
            let q = crate::group_core::Rational::one() / m.constant.clone();
            for c in &mut self.coefficients {
                *c = c.scale(&q);
            }
        }
        self
    }

    /// Hamming distance of the pair opposite each position.
    pub fn opposite_distances(&self) -> Result<[u8; 3]> {
        let r = self.reps()?;
        Ok([
            hamming_distance(&r[1].label, &r[2].label),
            hamming_distance(&r[0].label, &r[2].label),
            hamming_distance(&r[0].label, &r[1].label),
        ])
    }

    pub fn monomial_counts(&self) -> [usize; 3] {
        std::array::from_fn(|i| self.coefficients[i].len())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let c: RelationCertificate = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        if c.schema != SCHEMA_VERSION {
            return Err(Error::Parse(format!("unsupported schema {}", c.schema)));
        }
        Ok(c)
    }
}

/// Certificate for the canonical relation of a type.
pub fn canonical_certificate(t: HammingType) -> Result<RelationCertificate> {
    RelationCertificate::from_template(&canonical_relation(t)?)
}

const ORDERS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// A relation among `K_{μ₁}, K_{μ₂}, K_{μ₃}` for representatives of three
/// distinct cosets.
///
/// The canonical relation of the triple's Hamming type is moved by the
/// `ρ ∈ M_K` with `Ψ(ρ)⁻¹ b(c_i) = b(μ_i)`, which puts `c_i ρ` in the coset
/// of `μ_i`; the coefficients become `γ_i(ρx)`.
pub fn build_relation(mu: [&CosetRep; 3]) -> Result<RelationCertificate> {
    if mu[0].label == mu[1].label || mu[0].label == mu[2].label || mu[1].label == mu[2].label {
        return Err(Error::NonDistinct);
    }
    let target: [SignVector; 3] = mu.map(|m| m.label);
    let t = classify_triple(&target)?;
    let canon = canonical_relation(t)?;
    let tb = tables();
    let src_reps: Vec<&CosetRep> = canon.triple.iter().map(|n| tb.rep_by_name(n)).collect::<Result<_>>()?;
    let src: [SignVector; 3] = std::array::from_fn(|i| src_reps[i].label);
    let want = pairwise_distances(&src);
    let order = ORDERS
        .iter()
        .filter(|o| pairwise_distances(&o.map(|i| target[i])) == want)
        .min_by_key(|o| o.map(|i| target[i].label()))
        .ok_or(Error::DistanceMismatch)?;
    let ordered: [&CosetRep; 3] = order.map(|i| mu[i]);
    let w = find_transporter(&src, &ordered.map(|m| m.label))?;
    let rho = tb.psi_inverse(&w.inverse()).clone();
    for i in 0..3 {
        let got = tb.coset_of(&(&src_reps[i].matrix * &rho))?;
        if got.label != ordered[i].label {
            return Err(Error::Internal(format!(
                "transport sends {} to {} instead of {}",
                src_reps[i].name(),
                got.name(),
                ordered[i].name()
            )));
        }
    }
    let coefficients = std::array::from_fn(|i| canon.coefficients[i].substitute(&rho));
    Ok(RelationCertificate {
        schema: SCHEMA_VERSION,
        triple: ordered.map(|m| m.name()),
        labels: ordered.map(|m| m.label.label()),
        hamming_type: t,
        canonical_triple: canon.triple.map(String::from),
        rho,
        coefficients,
        residuals: Vec::new(),
        tolerance: None,
        verified: None,
    }
    .normalized())
}

/// [`build_relation`] from names such as `p0` or labels such as `011000`.
pub fn build_relation_by_name(names: [&str; 3]) -> Result<RelationCertificate> {
    let tb = tables();
    build_relation([
        tb.rep_by_name(names[0])?,
        tb.rep_by_name(names[1])?,
        tb.rep_by_name(names[2])?,
    ])
}

/// All `C(32,3)` triples of representatives in list order.
pub fn all_triples() -> Vec<[&'static CosetRep; 3]> {
    let reps = tables().coset_representatives();
    let mut v = Vec::with_capacity(4960);
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            for k in j + 1..reps.len() {
                v.push([&reps[i], &reps[j], &reps[k]]);
            }
        }
    }
    v
}

/// Whether each coefficient opposite a pair at distance `2n` has at most
/// `2^{n-1}` monomials.
pub fn monomial_count_check(cert: &RelationCertificate) -> Result<bool> {
    let d = cert.opposite_distances()?;
    Ok((0..3).all(|i| cert.coefficients[i].len() <= 1usize << (d[i] / 2 - 1)))
}

/// `per_type` triples of each Hamming type, drawn without replacement.
pub fn stratified_triples(per_type: usize, seed: u64) -> Result<Vec<[&'static CosetRep; 3]>> {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut by_type: std::collections::BTreeMap<HammingType, Vec<[&'static CosetRep; 3]>> = Default::default();
    for t in all_triples() {
        by_type
            .entry(classify_triple(&t.map(|r| r.label))?)
            .or_default()
            .push(t);
    }
    let mut out = Vec::new();
    for v in by_type.values() {
        out.extend(v.choose_multiple(&mut rng, per_type.min(v.len())).copied());
    }
    Ok(out)
}
