//! The five canonical three-term relations, one per Hamming type, and two
//! further fixtures on the same triples.

use crate::coxeter_d6::HammingType;
use crate::error::{Error, Result};
use crate::group_core::{ExactMatrix7, Rational};

use super::coeffs::{alpha_expr, beta_expr, gamma_expr, perm, sigma_matrix};
use super::expr::{CoeffMonomial, CoefficientExpr};

/// A relation `Σ γ_i(x) K(μ_i x) = 0` over three named representatives.
#[derive(Clone, Debug, PartialEq)]
pub struct RelationTemplate {
    pub hamming_type: HammingType,
    pub triple: [&'static str; 3],
    pub coefficients: [CoefficientExpr; 3],
}

fn at(e: &CoefficientExpr, m: &ExactMatrix7) -> CoefficientExpr {
    e.substitute(m)
}

/// The canonical relation of the given type.
pub fn canonical_relation(t: HammingType) -> Result<RelationTemplate> {
    let alpha = alpha_expr();
    let beta = beta_expr();
    let gamma = gamma_expr();
    let s = sigma_matrix();
    let s2 = &s * &s;
    let (triple, coefficients) = match t.distances() {
        [2, 2, 2] => (
            ["p0", "p1", "p2"],
            [alpha.clone(), at(&alpha, &perm("(123)")), at(&alpha, &perm("(132)"))],
        ),
        [2, 2, 4] => (
            ["p0", "p1", "n4"],
            [
                &at(&beta, &s) * &CoeffMonomial::new(1).pi(3).sin(&["e-a-b"]),
                gamma.clone(),
                &beta * &CoeffMonomial::new(-1).pi(3).sin(&["a-b"]),
            ],
        ),
        [2, 4, 4] => {
            let p56 = perm("(56)");
            (
                ["p0", "n4", "n8"],
                [
                    &at(&beta, &s) * &CoeffMonomial::new(1).sin(&["a", "f-e", "g-c", "g-d"]),
                    &at(&gamma, &p56) * &beta,
                    -&(&gamma * &at(&beta, &p56)),
                ],
            )
        }
        [4, 4, 4] => (
            ["p0", "n4", "p5"],
            [
                &at(&gamma, &s2) * &at(&beta, &s),
                &at(&gamma, &s) * &beta,
                &gamma * &at(&beta, &s2),
            ],
        ),
        [2, 4, 6] => {
            let p12 = perm("(12)");
            let first = &(&at(&gamma, &(&s * &perm("(12)(34)")))
                * &CoeffMonomial::new(1).sin(&["f-c", "g-c", "e-a-c"]))
                - &(&at(&gamma, &(&s * &perm("(1342)"))) * &CoeffMonomial::new(1).sin(&["f-b", "g-b", "e-a-b"]));
            (
                ["p0", "n4", "p4"],
                [
                    &first * &CoeffMonomial::new(1).sin(&["e-b"]).over_sin(&["c-b"]),
                    &(&beta * &at(&beta, &(&s * &p12))) * &CoeffMonomial::new(1).pi(6).sin(&["e"]),
                    &(&gamma * &at(&beta, &(&s2 * &p12))) * &CoeffMonomial::new(1).pi(3),
                ],
            )
        }
        _ => return Err(Error::IllegalType(t.distances())),
    };
    Ok(RelationTemplate {
        hamming_type: t,
        triple,
        coefficients,
    })
}

/// The 224 relation among `K_{p0}, K_{p1}, K_{n4}` with `β` written out.
pub fn explicit_224_relation() -> RelationTemplate {
    RelationTemplate {
        hamming_type: HammingType::T224,
        triple: ["p0", "p1", "n4"],
        coefficients: [
            CoefficientExpr::monomial(
                CoeffMonomial::new(1)
                    .pi(3)
                    .sin(&["e-a-b"])
                    .rgamma(&["e-a", "f-a", "g-a", "1+b-e", "1+b-f", "1+b-g"]),
            ),
            gamma_expr(),
            CoefficientExpr::monomial(
                CoeffMonomial::new(-1)
                    .pi(3)
                    .sin(&["a-b"])
                    .rgamma(&["a", "1+b-e", "f-c", "g-c", "f-d", "g-d"]),
            ),
        ],
    }
}

/// A second 222 relation, among `K_{p1}, K_{n4}, K_{p2}`.
pub fn auxiliary_222_relation() -> RelationTemplate {
    RelationTemplate {
        hamming_type: HammingType::T222,
        triple: ["p1", "n4", "p2"],
        coefficients: [
            CoefficientExpr::monomial(CoeffMonomial::new(1).sin(&["a+c-e"]).rgamma(&["e-b", "1+c-g", "1+c-f"])),
            CoefficientExpr::monomial(CoeffMonomial::new(1).sin(&["b-c"]).rgamma(&["a", "f-d", "g-d"])),
            CoefficientExpr::monomial(CoeffMonomial::new(1).sin(&["e-a-b"]).rgamma(&["e-c", "1+b-g", "1+b-f"])),
        ],
    }
}

impl RelationTemplate {
    /// Rescales so that the leading monomial of the first coefficient has
    /// constant 1.
    pub fn normalized(mut self) -> Self {
        if let Some(m) = self.coefficients[0].monomials.first() {
            let q = Rational::one() / m.constant.clone();
            for c in &mut self.coefficients {
                *c = c.scale(&q);
            }
        }
        self
    }
}
