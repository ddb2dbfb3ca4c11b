//! The symmetry groups `G_K ≅ S₆` and `M_K ≅ W(D₆)` acting on the
//! hyperplane, the isomorphism `Ψ: M_K → W(D₆)`, the 32 coset
//! representatives `p₀…p₁₅, n₀…n₁₅` and their labels.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::coxeter_d6::{phi, GeneratorName, SignVector, SignedPerm6, Word};
use crate::error::{Error, Result};
use crate::group_core::{
    enumerate_group, s_matrix, AffineLinearForm, ExactMatrix7, MatrixGroup, Rational, DEFAULT_MAX_ORDER, DIM,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RepKind {
    P,
    N,
}

/// One of the 32 right-coset representatives of `G_K` in `M_K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetRep {
    pub kind: RepKind,
    pub index: u8,
    pub matrix: ExactMatrix7,
    pub label: SignVector,
}

impl CosetRep {
    pub fn name(&self) -> String {
        rep_name(self.kind, self.index)
    }

    /// Position in the list `p₀…p₁₅, n₀…n₁₅`.
    pub fn position(&self) -> usize {
        rep_position(self.kind, self.index)
    }

    /// The images of `a,…,g`, displayed on the hyperplane.
    pub fn image(&self) -> [AffineLinearForm; DIM] {
        self.matrix.row_forms()
    }

    pub fn image_string(&self) -> String {
        let parts: Vec<String> = self.image().iter().map(|f| f.to_string()).collect();
        format!("({})", parts.join(", "))
    }
}

impl fmt::Display for CosetRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn rep_name(kind: RepKind, index: u8) -> String {
    match kind {
        RepKind::P => format!("p{index}"),
        RepKind::N => format!("n{index}"),
    }
}

fn rep_position(kind: RepKind, index: u8) -> usize {
    index as usize + if kind == RepKind::N { 16 } else { 0 }
}

/// Parses `p11`, `n0`, or a six-digit label.
pub fn parse_rep_name(s: &str) -> Result<(RepKind, u8)> {
    let s = s.trim();
    let bad = || Error::UnknownRepresentative(s.to_string());
    let (kind, rest) = match s.chars().next() {
        Some('p') | Some('P') => (RepKind::P, &s[1..]),
        Some('n') | Some('N') => (RepKind::N, &s[1..]),
        _ => return Err(bad()),
    };
    let index: u8 = rest.parse().map_err(|_| bad())?;
    if index > 15 {
        return Err(bad());
    }
    Ok((kind, index))
}

/// Everything built once from the generators.
pub struct GroupTables {
    pub s: ExactMatrix7,
    pub s_inv: ExactMatrix7,
    pub g_k: MatrixGroup,
    pub m_k: MatrixGroup,
    /// W(D₆) word of each generator of `M_K`, in generator order.
    pub generator_words: Vec<Word>,
    /// `Ψ(m_k.elements[i])`.
    psi: Vec<SignedPerm6>,
    /// `psi_inv[w.rank()]` is the index in `m_k` of `Ψ⁻¹(w)`.
    psi_inv: Vec<usize>,
    reps: Vec<CosetRep>,
    rep_by_first_row: HashMap<[Rational; DIM], usize>,
    rep_by_label: HashMap<SignVector, usize>,
}

/// `[π]_S = S π S⁻¹` for a permutation given in cycle notation.
pub fn s_conjugate(cycles: &str) -> Result<ExactMatrix7> {
    let s = s_matrix();
    let si = s.inverse()?;
    Ok(ExactMatrix7::from_cycles(cycles)?.conjugate_by(&s, &si))
}

/// The permutation matrix of a cycle product, e.g. `(1234)`.
pub fn cycle_matrix(cycles: &str) -> Result<ExactMatrix7> {
    ExactMatrix7::from_cycles(cycles)
}

/// Generators of `G_K`: `(i,i+1)_S` for `2 ≤ i ≤ 6`.
pub fn g_k_generators() -> Vec<ExactMatrix7> {
    (2..=6)
        .map(|i| s_conjugate(&format!("({}{})", i, i + 1)).expect("valid cycle"))
        .collect()
}

/// Generators of `M_K`: those of `G_K` followed by `(12)`.
pub fn m_k_generators() -> Vec<ExactMatrix7> {
    let mut g = g_k_generators();
    g.push(cycle_matrix("(12)").expect("valid cycle"));
    g
}

fn generator_words() -> Vec<Word> {
    use GeneratorName::*;
    vec![
        Word(vec![S1]),
        Word(vec![S2]),
        Word(vec![S3]),
        Word(vec![S4]),
        Word(vec![S5]),
        Word(vec![S1, S2, S1Prime, S2, S1]),
    ]
}

fn halves(rows: [[i64; DIM]; DIM]) -> ExactMatrix7 {
    ExactMatrix7::from_rows(rows.map(|r| r.map(|x| Rational::new(x, 2))))
}

/// The matrix realizing `s1'` on the standard basis, with `s_i` realized
/// by `M₇⁺(i+1,i+2)`.
pub fn a1_matrix() -> ExactMatrix7 {
    ExactMatrix7::from_int_rows([
        [1, 1, 1, 0, 0, 0, 0],
        [0, 0, -1, 0, 0, 0, 0],
        [0, -1, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 0, 1],
    ])
}

/// `A₁` rewritten in the basis `v₁ = (1,½,…,½), e₂,…,e₇`.
pub fn a2_matrix() -> ExactMatrix7 {
    halves([
        [0, 2, 2, 0, 0, 0, 0],
        [1, 1, -1, 0, 0, 0, 0],
        [1, -1, 1, 0, 0, 0, 0],
        [-1, 1, 1, 2, 0, 0, 0],
        [-1, 1, 1, 0, 2, 0, 0],
        [-1, 1, 1, 0, 0, 2, 0],
        [-1, 1, 1, 0, 0, 0, 2],
    ])
}

/// The matrix realizing `s1 s2 s1' s2 s1`; conjugated by `S` it is `(12)`.
pub fn a3_matrix() -> ExactMatrix7 {
    halves([
        [0, 0, 2, 2, 0, 0, 0],
        [-1, 2, 1, 1, 0, 0, 0],
        [1, 0, 1, -1, 0, 0, 0],
        [1, 0, -1, 1, 0, 0, 0],
        [-1, 0, 1, 1, 2, 0, 0],
        [-1, 0, 1, 1, 0, 2, 0],
        [-1, 0, 1, 1, 0, 0, 2],
    ])
}

/// `ι = [(12)(234567)_S]⁵`.
pub fn iota() -> ExactMatrix7 {
    let t = &cycle_matrix("(12)").unwrap() * &s_conjugate("(234567)").unwrap();
    t.pow(5)
}

/// `p_{4q+r} = [(25)(36)(47)]_S (1234)^q [(25)(36)(47)]_S (1234)^r`.
pub fn p_matrix(j: u8) -> ExactMatrix7 {
    assert!(j < 16);
    let (q, r) = ((j / 4) as u32, (j % 4) as u32);
    let t = s_conjugate("(25)(36)(47)").unwrap();
    let c = cycle_matrix("(1234)").unwrap();
    &(&(&t * &c.pow(q)) * &t) * &c.pow(r)
}

/// `n_j = ι p_j`.
pub fn n_matrix(j: u8) -> ExactMatrix7 {
    &iota() * &p_matrix(j)
}

impl GroupTables {
    pub fn build() -> Result<Self> {
        let s = s_matrix();
        let s_inv = s.inverse()?;
        let g_k = enumerate_group(&g_k_generators(), DEFAULT_MAX_ORDER)?;
        let m_k = enumerate_group(&m_k_generators(), DEFAULT_MAX_ORDER)?;
        let words = generator_words();
        let gen_w: Vec<SignedPerm6> = words.iter().map(phi).collect();
        let mut psi = vec![SignedPerm6::identity(); m_k.order()];
        for i in 1..m_k.order() {
            let (j, k) = m_k.parent[i].expect("non-identity has a parent");
            psi[i] = psi[j] * gen_w[k];
        }
        let mut psi_inv = vec![usize::MAX; 23040];
        for (i, w) in psi.iter().enumerate() {
            let slot = &mut psi_inv[w.rank()];
            if *slot != usize::MAX {
                return Err(Error::Internal("Ψ is not injective".into()));
            }
            *slot = i;
        }
        let mut t = GroupTables {
            s,
            s_inv,
            g_k,
            m_k,
            generator_words: words,
            psi,
            psi_inv,
            reps: Vec::new(),
            rep_by_first_row: HashMap::new(),
            rep_by_label: HashMap::new(),
        };
        for (kind, f) in [(RepKind::P, p_matrix as fn(u8) -> ExactMatrix7), (RepKind::N, n_matrix)] {
            for j in 0..16u8 {
                let m = f(j);
                let w = t.psi(&m)?;
                let label = w.inverse().apply(&SignVector::OMEGA0);
                t.reps.push(CosetRep {
                    kind,
                    index: j,
                    matrix: m,
                    label,
                });
            }
        }
        for (i, r) in t.reps.iter().enumerate() {
            if t.rep_by_first_row.insert(r.matrix.row(0).clone(), i).is_some() {
                return Err(Error::Internal(format!("{} shares a first row", r.name())));
            }
            if t.rep_by_label.insert(r.label, i).is_some() {
                return Err(Error::Internal(format!("{} shares a label", r.name())));
            }
        }
        Ok(t)
    }

    /// `Ψ(m)`.
    pub fn psi(&self, m: &ExactMatrix7) -> Result<SignedPerm6> {
        self.m_k.index_of(m).map(|i| self.psi[i]).ok_or(Error::NotAMember)
    }

    pub fn psi_of_index(&self, i: usize) -> SignedPerm6 {
        self.psi[i]
    }

    /// `Ψ⁻¹(w)`.
    pub fn psi_inverse(&self, w: &SignedPerm6) -> &ExactMatrix7 {
        &self.m_k.elements[self.psi_inv[w.rank()]]
    }

    /// Word recorded along the breadth-first enumeration of `M_K`.
    pub fn word_of(&self, m: &ExactMatrix7) -> Result<Word> {
        let i = self.m_k.index_of(m).ok_or(Error::NotAMember)?;
        Ok(Word(
            self.m_k
                .word(i)
                .into_iter()
                .flat_map(|k| self.generator_words[k].0.clone())
                .collect(),
        ))
    }

    /// Number of edges `(m, generator)` of the enumeration where the
    /// multiplicative extension of Ψ disagrees with the recorded value.
    /// Zero means Ψ is a well-defined homomorphism.
    pub fn psi_conflicts(&self) -> usize {
        let gen_w: Vec<SignedPerm6> = self.generator_words.iter().map(phi).collect();
        let mut bad = 0;
        for (i, m) in self.m_k.elements.iter().enumerate() {
            for (k, g) in self.m_k.generators.iter().enumerate() {
                let j = self.m_k.index_of(&(m * g)).expect("closed");
                if self.psi[j] != self.psi[i] * gen_w[k] {
                    bad += 1;
                }
            }
        }
        bad
    }

    pub fn coset_representatives(&self) -> &[CosetRep] {
        &self.reps
    }

    pub fn rep(&self, kind: RepKind, index: u8) -> &CosetRep {
        &self.reps[rep_position(kind, index)]
    }

    /// Looks up `p3`, `n12`, or a label such as `011000`.
    pub fn rep_by_name(&self, s: &str) -> Result<&CosetRep> {
        if s.len() == 6 && s.chars().all(|c| c == '0' || c == '1') {
            let v = SignVector::from_label(s)?;
            return self.rep_by_label(&v);
        }
        let (k, i) = parse_rep_name(s)?;
        Ok(self.rep(k, i))
    }

    pub fn rep_by_label(&self, v: &SignVector) -> Result<&CosetRep> {
        self.rep_by_label
            .get(v)
            .map(|&i| &self.reps[i])
            .ok_or_else(|| Error::UnknownRepresentative(v.label()))
    }

    /// The representative `r` with `m r⁻¹ ∈ G_K`. Elements of `G_K` fix the
    /// first coordinate, so the first row of `m` decides its coset.
    pub fn coset_of(&self, m: &ExactMatrix7) -> Result<&CosetRep> {
        if !self.m_k.contains(m) {
            return Err(Error::NotAMember);
        }
        self.rep_by_first_row
            .get(m.row(0))
            .map(|&i| &self.reps[i])
            .ok_or_else(|| Error::Internal("first row of a group element matches no representative".into()))
    }
}

/// Shared tables, built on first use.
pub fn tables() -> &'static GroupTables {
    static T: OnceLock<GroupTables> = OnceLock::new();
    T.get_or_init(|| GroupTables::build().expect("group tables"))
}

pub fn build_tables() -> Result<GroupTables> {
    GroupTables::build()
}

pub fn coset_representatives() -> &'static [CosetRep] {
    tables().coset_representatives()
}

/// The label `b(μ)`: the sign pattern of `Ψ(μ)⁻¹ ω₀`.
pub fn label_of(rep: &CosetRep) -> SignVector {
    rep.label
}

pub fn coset_of(m: &ExactMatrix7) -> Result<&'static CosetRep> {
    tables().coset_of(m)
}

impl FromStr for RepKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "p" => Ok(RepKind::P),
            "n" => Ok(RepKind::N),
            _ => Err(Error::Parse(format!("representative kind {s:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(s: &str) -> AffineLinearForm {
        s.parse().unwrap()
    }

    fn images(m: &ExactMatrix7) -> Vec<String> {
        m.row_forms().iter().map(|f| f.to_string()).collect()
    }

    #[test]
    fn generator_involutions() {
        for g in m_k_generators() {
            assert!((&g * &g).is_identity());
        }
        let m = |i| {
            let rows = crate::coxeter_d6::generator_matrix(7, i, i + 1, 1).unwrap();
            let mut r = [[0i64; 7]; 7];
            for (a, row) in rows.iter().enumerate() {
                r[a].copy_from_slice(row);
            }
            ExactMatrix7::from_int_rows(r)
        };
        // S M(i,i+1) S⁻¹ = (i,i+1)_S
        let s = s_matrix();
        let si = s.inverse().unwrap();
        for i in 2..=6 {
            assert_eq!(
                m(i).conjugate_by(&s, &si),
                s_conjugate(&format!("({}{})", i, i + 1)).unwrap()
            );
        }
    }

    #[test]
    fn iota_image() {
        let i = iota();
        assert!((&i * &i).is_identity());
        assert_eq!(images(&i), ["1-a", "1-b", "1-c", "1-d", "2-e", "2-f", "2-g"]);
        assert_eq!(form("a").substitute(&i).to_string(), "1-a");
    }

    #[test]
    fn representative_images() {
        assert!(p_matrix(0).is_identity());
        assert_eq!(
            images(&p_matrix(11)),
            ["1+d-f", "1+a-f", "1+b-f", "1+c-f", "1+g-f", "2-f", "1+e-f"]
        );
        assert_eq!(
            images(&n_matrix(11)),
            ["f-d", "f-a", "f-b", "f-c", "1+f-g", "f", "1+f-e"]
        );
        assert_eq!(form("a").substitute(&p_matrix(11)).to_string(), "1+d-f");
    }

    #[test]
    fn closed_forms_with_rotation() {
        let rot = |v: [&str; 4], j: usize| -> [AffineLinearForm; 4] { std::array::from_fn(|i| form(v[(i + j) % 4])) };
        let one = AffineLinearForm::constant(Rational::one());
        for q in 0..4 {
            for r in 0..4 {
                let abcd = rot(["a", "b", "c", "d"], r);
                let efg1 = rot(["1", "e", "f", "g"], q);
                let one_q = &efg1[0];
                let p: Vec<AffineLinearForm> = abcd.iter().chain(&efg1[1..]).map(|x| &(&one + x) - one_q).collect();
                let n: Vec<AffineLinearForm> = abcd
                    .iter()
                    .map(|x| one_q - x)
                    .chain(efg1[1..].iter().map(|x| &(&one + one_q) - x))
                    .collect();
                let j = (4 * q + r) as u8;
                for (row, want) in p_matrix(j).row_forms().iter().zip(&p) {
                    assert!(row.agrees_on_v(want), "p{j}");
                }
                for (row, want) in n_matrix(j).row_forms().iter().zip(&n) {
                    assert!(row.agrees_on_v(want), "n{j}");
                }
            }
        }
    }

    #[test]
    fn rep_name_parsing() {
        assert_eq!(parse_rep_name("p11").unwrap(), (RepKind::P, 11));
        assert_eq!(parse_rep_name("n0").unwrap(), (RepKind::N, 0));
        assert!(parse_rep_name("p16").is_err());
        assert!(parse_rep_name("q1").is_err());
    }
}
