//! The Coxeter group W(D₆) as signed permutations of six coordinates, its
//! action on the 32 sign vectors Ω, Hamming distance, and the transporter
//! between triples of equal distance profile.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A vertex of the D₆ Dynkin diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GeneratorName {
    S1Prime,
    S1,
    S2,
    S3,
    S4,
    S5,
}

impl GeneratorName {
    pub const ALL: [GeneratorName; 6] = [
        GeneratorName::S1Prime,
        GeneratorName::S1,
        GeneratorName::S2,
        GeneratorName::S3,
        GeneratorName::S4,
        GeneratorName::S5,
    ];

    /// Order of `s t` in the Coxeter presentation.
    pub fn coxeter_exponent(self, other: GeneratorName) -> u32 {
        use GeneratorName::*;
        if self == other {
            return 1;
        }
        let bonded = matches!(
            (self, other),
            (S1Prime, S2)
                | (S2, S1Prime)
                | (S1, S2)
                | (S2, S1)
                | (S2, S3)
                | (S3, S2)
                | (S3, S4)
                | (S4, S3)
                | (S4, S5)
                | (S5, S4)
        );
        if bonded {
            3
        } else {
            2
        }
    }

    pub fn matrix(self) -> SignedPerm6 {
        use GeneratorName::*;
        match self {
            S1Prime => SignedPerm6::transposition(0, 1, -1),
            S1 => SignedPerm6::transposition(0, 1, 1),
            S2 => SignedPerm6::transposition(1, 2, 1),
            S3 => SignedPerm6::transposition(2, 3, 1),
            S4 => SignedPerm6::transposition(3, 4, 1),
            S5 => SignedPerm6::transposition(4, 5, 1),
        }
    }
}

impl fmt::Display for GeneratorName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GeneratorName::*;
        f.write_str(match self {
            S1Prime => "s1'",
            S1 => "s1",
            S2 => "s2",
            S3 => "s3",
            S4 => "s4",
            S5 => "s5",
        })
    }
}

impl FromStr for GeneratorName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        use GeneratorName::*;
        Ok(match s.trim() {
            "s1'" | "s1′" => S1Prime,
            "s1" => S1,
            "s2" => S2,
            "s3" => S3,
            "s4" => S4,
            "s5" => S5,
            _ => return Err(Error::Parse(format!("generator {s:?}"))),
        })
    }
}

/// A word in the Coxeter generators, not necessarily reduced.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word(pub Vec<GeneratorName>);

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "1" {
            return Ok(Word::default());
        }
        s.split_whitespace().map(str::parse).collect::<Result<_>>().map(Word)
    }
}

/// A 6×6 monomial matrix with entries ±1 and an even number of −1s.
/// Acts by `(W v)_i = signs[i] · v[perm[i]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedPerm6 {
    perm: [u8; 6],
    signs: [i8; 6],
}

impl SignedPerm6 {
    pub fn identity() -> Self {
        SignedPerm6 {
            perm: [0, 1, 2, 3, 4, 5],
            signs: [1; 6],
        }
    }

    fn transposition(i: usize, j: usize, eps: i8) -> Self {
        let mut w = Self::identity();
        w.perm.swap(i, j);
        w.signs[i] = eps;
        w.signs[j] = eps;
        w
    }

    /// Diagonal sign matrix; an element of W(D₆) because `v ∈ Ω`.
    pub fn diagonal(v: &SignVector) -> Self {
        SignedPerm6 {
            perm: [0, 1, 2, 3, 4, 5],
            signs: v.0,
        }
    }

    pub fn from_matrix(m: &[[i8; 6]; 6]) -> Result<Self> {
        let bad = || Error::Internal("matrix is not a signed permutation".into());
        let mut perm = [0u8; 6];
        let mut signs = [0i8; 6];
        let mut seen = [false; 6];
        for (i, row) in m.iter().enumerate() {
            let nz: Vec<usize> = (0..6).filter(|&j| row[j] != 0).collect();
            if nz.len() != 1 || !matches!(row[nz[0]], 1 | -1) || seen[nz[0]] {
                return Err(bad());
            }
            seen[nz[0]] = true;
            perm[i] = nz[0] as u8;
            signs[i] = row[nz[0]];
        }
        let w = SignedPerm6 { perm, signs };
        if w.negative_count() % 2 == 1 {
            return Err(Error::ParityViolation(signs.to_vec()));
        }
        Ok(w)
    }

    pub fn to_matrix(&self) -> [[i8; 6]; 6] {
        let mut m = [[0i8; 6]; 6];
        for i in 0..6 {
            m[i][self.perm[i] as usize] = self.signs[i];
        }
        m
    }

    pub fn negative_count(&self) -> usize {
        self.signs.iter().filter(|&&s| s < 0).count()
    }

    pub fn inverse(&self) -> Self {
        let mut w = Self::identity();
        for i in 0..6 {
            let p = self.perm[i] as usize;
            w.perm[p] = i as u8;
            w.signs[p] = self.signs[i];
        }
        w
    }

    pub fn apply(&self, v: &SignVector) -> SignVector {
        SignVector(std::array::from_fn(|i| self.signs[i] * v.0[self.perm[i] as usize]))
    }

    pub fn apply_i64(&self, v: &[i64; 6]) -> [i64; 6] {
        std::array::from_fn(|i| self.signs[i] as i64 * v[self.perm[i] as usize])
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::identity(), |acc, _| acc * *self)
    }

    /// Index in `0..23040`, usable as a dense table key.
    pub fn rank(&self) -> usize {
        let mut r = 0usize;
        let mut avail: Vec<u8> = (0..6).collect();
        for i in 0..6 {
            let k = avail.iter().position(|&p| p == self.perm[i]).unwrap();
            avail.remove(k);
            r = r * (6 - i) + k;
        }
        let mut bits = 0usize;
        for i in 0..5 {
            if self.signs[i] < 0 {
                bits |= 1 << i;
            }
        }
        r * 32 + bits
    }
}

impl Mul for SignedPerm6 {
    type Output = SignedPerm6;
    fn mul(self, rhs: SignedPerm6) -> SignedPerm6 {
        SignedPerm6 {
            perm: std::array::from_fn(|i| rhs.perm[self.perm[i] as usize]),
            signs: std::array::from_fn(|i| self.signs[i] * rhs.signs[self.perm[i] as usize]),
        }
    }
}

impl fmt::Display for SignedPerm6 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.to_matrix();
        for (i, r) in m.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = r.iter().map(|x| format!("{x:>2}")).collect();
            write!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// An element of Ω: six signs with an even number of −1s.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignVector([i8; 6]);

impl SignVector {
    pub const OMEGA0: SignVector = SignVector([1; 6]);

    pub fn new(v: [i8; 6]) -> Result<Self> {
        if v.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::Parse(format!("sign vector {v:?}")));
        }
        if v.iter().filter(|&&s| s < 0).count() % 2 == 1 {
            return Err(Error::ParityViolation(v.to_vec()));
        }
        Ok(SignVector(v))
    }

    pub fn signs(&self) -> [i8; 6] {
        self.0
    }

    /// Digit `k` (left to right) is 1 iff coordinate `k` is negative.
    pub fn from_label(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.len() != 6 {
            return Err(Error::Parse(format!("label {s:?} must have six binary digits")));
        }
        let mut v = [1i8; 6];
        for (i, ch) in s.chars().enumerate() {
            v[i] = match ch {
                '0' => 1,
                '1' => -1,
                _ => return Err(Error::Parse(format!("label {s:?}"))),
            };
        }
        Self::new(v)
    }

    pub fn label(&self) -> String {
        self.0.iter().map(|&s| if s > 0 { '0' } else { '1' }).collect()
    }

    pub fn dot(&self, other: &SignVector) -> i32 {
        self.0.iter().zip(other.0).map(|(&x, y)| (x * y) as i32).sum()
    }

    pub fn negate(&self) -> SignVector {
        SignVector(self.0.map(|s| -s))
    }

    /// All 32 elements, ordered by label read as a binary number.
    pub fn omega() -> Vec<SignVector> {
        (0u32..64)
            .filter(|m| m.count_ones() % 2 == 0)
            .map(|m| SignVector(std::array::from_fn(|i| if m >> (5 - i) & 1 == 1 { -1 } else { 1 })))
            .collect()
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Sorted triple of pairwise Hamming distances.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HammingType([u8; 3]);

impl HammingType {
    pub const T222: HammingType = HammingType([2, 2, 2]);
    pub const T224: HammingType = HammingType([2, 2, 4]);
    pub const T244: HammingType = HammingType([2, 4, 4]);
    pub const T444: HammingType = HammingType([4, 4, 4]);
    pub const T246: HammingType = HammingType([2, 4, 6]);
    pub const ALL: [HammingType; 5] = [Self::T222, Self::T224, Self::T244, Self::T444, Self::T246];

    pub fn new(mut d: [u8; 3]) -> Result<Self> {
        d.sort_unstable();
        let t = HammingType(d);
        if Self::ALL.contains(&t) {
            Ok(t)
        } else {
            Err(Error::IllegalType(d))
        }
    }

    pub fn distances(&self) -> [u8; 3] {
        self.0
    }
}

impl fmt::Display for HammingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.0[0], self.0[1], self.0[2])
    }
}

impl FromStr for HammingType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let d: Vec<u8> = s
            .trim()
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as u8))
            .collect::<Option<_>>()
            .ok_or_else(|| Error::Parse(format!("Hamming type {s:?}")))?;
        let d: [u8; 3] = d.try_into().map_err(|_| Error::Parse(format!("Hamming type {s:?}")))?;
        Self::new(d)
    }
}

impl Serialize for HammingType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for HammingType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// The matrix `M_n^ε(i,j)` (one-based `i < j`): the transposition of
/// coordinates `i` and `j` with off-diagonal entries `ε`.
pub fn generator_matrix(n: usize, i: usize, j: usize, sign: i8) -> Result<Vec<Vec<i64>>> {
    if !(1 <= i && i < j && j <= n) || (sign != 1 && sign != -1) {
        return Err(Error::IndexOutOfRange { n, i, j });
    }
    let mut a = vec![vec![0i64; n]; n];
    for k in 0..n {
        let l = if k == i - 1 {
            j - 1
        } else if k == j - 1 {
            i - 1
        } else {
            k
        };
        a[k][l] = if k == l { 1 } else { sign as i64 };
    }
    Ok(a)
}

/// The representation of W(D₆) on signed permutations.
pub fn phi(w: &Word) -> SignedPerm6 {
    w.0.iter().fold(SignedPerm6::identity(), |acc, g| acc * g.matrix())
}

pub fn hamming_distance(w1: &SignVector, w2: &SignVector) -> u8 {
    w1.0.iter().zip(w2.0).filter(|(&x, y)| x != *y).count() as u8
}

/// Checked variant for raw sign arrays.
pub fn hamming_distance_checked(w1: [i8; 6], w2: [i8; 6]) -> Result<u8> {
    Ok(hamming_distance(&SignVector::new(w1)?, &SignVector::new(w2)?))
}

pub fn pairwise_distances(t: &[SignVector; 3]) -> [u8; 3] {
    [
        hamming_distance(&t[0], &t[1]),
        hamming_distance(&t[0], &t[2]),
        hamming_distance(&t[1], &t[2]),
    ]
}

pub fn classify_triple(t: &[SignVector; 3]) -> Result<HammingType> {
    let d = pairwise_distances(t);
    if d.contains(&0) {
        return Err(Error::NonDistinct);
    }
    HammingType::new(d)
}

/// Some `w` with `w·src[k] = dst[k]` for `k = 0,1,2`.
///
/// Both first entries are moved to ω₀ by diagonal sign matrices; the
/// negative-coordinate sets of the other two entries are then matched block
/// by block (`T₂∩T₃`, `T₂∖T₃`, `T₃∖T₂`, rest), smallest index first.
pub fn find_transporter(src: &[SignVector; 3], dst: &[SignVector; 3]) -> Result<SignedPerm6> {
    if pairwise_distances(src) != pairwise_distances(dst) {
        return Err(Error::DistanceMismatch);
    }
    let d_src = SignedPerm6::diagonal(&src[0]);
    let d_dst = SignedPerm6::diagonal(&dst[0]);
    let blocks = |t: &[SignVector; 3], d: &SignedPerm6| -> [Vec<usize>; 4] {
        let s2 = d.apply(&t[1]).0;
        let s3 = d.apply(&t[2]).0;
        let mut b: [Vec<usize>; 4] = Default::default();
        for i in 0..6 {
            let k = match (s2[i] < 0, s3[i] < 0) {
                (true, true) => 0,
                (true, false) => 1,
                (false, true) => 2,
                (false, false) => 3,
            };
            b[k].push(i);
        }
        b
    };
    let bs = blocks(src, &d_src);
    let bd = blocks(dst, &d_dst);
    // P e_i = e_{π(i)}, i.e. (P v)_{π(i)} = v_i
    let mut perm = [0u8; 6];
    for (from, to) in bs.iter().zip(&bd) {
        if from.len() != to.len() {
            return Err(Error::DistanceMismatch);
        }
        for (&i, &j) in from.iter().zip(to) {
            perm[j] = i as u8;
        }
    }
    let p = SignedPerm6 { perm, signs: [1; 6] };
    let w = d_dst * p * d_src;
    for k in 0..3 {
        if w.apply(&src[k]) != dst[k] {
            return Err(Error::Internal(format!(
                "transporter postcondition failed at entry {k}"
            )));
        }
    }
    Ok(w)
}

/// Number of unordered triples of distinct elements of Ω per Hamming type.
pub fn omega_orbit_census() -> BTreeMap<HammingType, usize> {
    let om = SignVector::omega();
    let mut out = BTreeMap::new();
    for i in 0..om.len() {
        for j in i + 1..om.len() {
            for k in j + 1..om.len() {
                let t = classify_triple(&[om[i], om[j], om[k]]).expect("distinct triple");
                *out.entry(t).or_insert(0) += 1;
            }
        }
    }
    out
}

/// All 23040 elements of W(D₆).
pub fn all_elements() -> Vec<SignedPerm6> {
    let mut out = Vec::with_capacity(23040);
    let mut perm: Vec<u8> = (0..6).collect();
    permutations(&mut perm, 0, &mut |p| {
        for bits in 0u32..64 {
            if bits.count_ones() % 2 == 0 {
                out.push(SignedPerm6 {
                    perm: p.try_into().unwrap(),
                    signs: std::array::from_fn(|i| if bits >> i & 1 == 1 { -1 } else { 1 }),
                });
            }
        }
    });
    out
}

fn permutations(p: &mut Vec<u8>, k: usize, f: &mut dyn FnMut(&[u8])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, f);
        p.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn sv(s: &str) -> SignVector {
        SignVector::from_label(s).unwrap()
    }

    #[test]
    fn generator_matrices() {
        let m = generator_matrix(6, 1, 2, -1).unwrap();
        assert_eq!(m[0][1], -1);
        assert_eq!(m[1][0], -1);
        assert_eq!(m[0][0], 0);
        assert_eq!(m[2][2], 1);
        let m7 = generator_matrix(7, 6, 7, 1).unwrap();
        // M(6,7) e_7 = e_6
        let col: Vec<i64> = (0..7).map(|r| m7[r][6]).collect();
        assert_eq!(col, vec![0, 0, 0, 0, 0, 1, 0]);
        assert!(generator_matrix(6, 3, 3, 1).is_err());
        assert!(generator_matrix(6, 0, 3, 1).is_err());
        assert!(generator_matrix(6, 2, 7, 1).is_err());
        let s = GeneratorName::S1Prime.matrix().to_matrix();
        assert_eq!(s[0][1], -1);
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&Word::default()), SignedPerm6::identity());
        let w: Word = "s1 s2 s1'".parse().unwrap();
        assert_eq!(phi(&w).apply(&SignVector::OMEGA0).label(), "011000");
        assert_eq!(phi(&"s1' s1'".parse().unwrap()), SignedPerm6::identity());
        assert_eq!(w.to_string(), "s1 s2 s1'");
    }

    #[test]
    fn coxeter_relations() {
        for s in GeneratorName::ALL {
            for t in GeneratorName::ALL {
                let st = s.matrix() * t.matrix();
                assert_eq!(st.pow(s.coxeter_exponent(t)), SignedPerm6::identity(), "{s} {t}");
                if s != t {
                    assert_ne!(st.pow(s.coxeter_exponent(t) - 1), SignedPerm6::identity());
                }
            }
        }
    }

    #[test]
    fn generators_span_the_group() {
        let mut seen = HashSet::from([SignedPerm6::identity()]);
        let mut frontier = vec![SignedPerm6::identity()];
        while let Some(m) = frontier.pop() {
            for g in GeneratorName::ALL {
                let p = m * g.matrix();
                assert_eq!(p.negative_count() % 2, 0);
                if seen.insert(p) {
                    frontier.push(p);
                }
            }
        }
        assert_eq!(seen.len(), 23040);
        let all: HashSet<_> = all_elements().into_iter().collect();
        assert_eq!(seen, all);
        let ranks: HashSet<_> = all.iter().map(SignedPerm6::rank).collect();
        assert_eq!(ranks.len(), 23040);
        assert!(ranks.iter().all(|&r| r < 23040));
    }

    #[test]
    fn stabilizer_of_omega0_is_generated_by_s1_to_s5() {
        let stab: HashSet<_> = all_elements()
            .into_iter()
            .filter(|w| w.apply(&SignVector::OMEGA0) == SignVector::OMEGA0)
            .collect();
        let mut gen = HashSet::from([SignedPerm6::identity()]);
        let mut frontier = vec![SignedPerm6::identity()];
        while let Some(m) = frontier.pop() {
            for g in &GeneratorName::ALL[1..] {
                let p = m * g.matrix();
                if gen.insert(p) {
                    frontier.push(p);
                }
            }
        }
        assert_eq!(stab.len(), 720);
        assert_eq!(stab, gen);
    }

    #[test]
    fn omega_and_metric() {
        let om = SignVector::omega();
        assert_eq!(om.len(), 32);
        assert_eq!(om[0], SignVector::OMEGA0);
        for a in &om {
            assert_eq!(hamming_distance(a, a), 0);
            for b in &om {
                let d = hamming_distance(a, b);
                assert_eq!(d % 2, 0);
                assert_eq!(d, hamming_distance(b, a));
                assert_eq!(a.dot(b), 6 - 2 * d as i32);
                assert_eq!(d == 0, a == b);
                for c in &om {
                    assert!(hamming_distance(a, c) <= d + hamming_distance(b, c));
                }
            }
        }
        assert!(SignVector::new([-1, 1, 1, 1, 1, 1]).is_err());
        assert!(hamming_distance_checked([1; 6], [-1, 1, 1, 1, 1, 1]).is_err());
    }

    #[test]
    fn distances_and_types() {
        let a = sv("000000");
        let b = sv("110000");
        let c = sv("000011");
        assert_eq!(hamming_distance(&a, &b), 2);
        assert_eq!(hamming_distance(&b, &c), 4);
        assert_eq!(classify_triple(&[a, b, c]).unwrap(), HammingType::T224);
        assert_eq!(
            classify_triple(&[sv("000000"), sv("011000"), sv("101000")]).unwrap(),
            HammingType::T222
        );
        assert_eq!(classify_triple(&[a, a, c]), Err(Error::NonDistinct));
        assert_eq!("246".parse::<HammingType>().unwrap(), HammingType::T246);
        assert_eq!("266".parse::<HammingType>(), Err(Error::IllegalType([2, 6, 6])));
    }

    #[test]
    fn transporter_swapping_two_entries() {
        // d(a,b) = d(a,c) = 4, d(b,c) = 2
        let a = sv("000000");
        let b = sv("111100");
        let c = sv("111010");
        let w = find_transporter(&[a, b, c], &[a, c, b]).unwrap();
        assert_eq!(w.apply(&a), a);
        assert_eq!(w.apply(&b), c);
        assert_eq!(w.apply(&c), b);
        // ordered profiles (4,4,2) and (4,2,4) differ
        assert_eq!(find_transporter(&[a, b, c], &[b, a, c]), Err(Error::DistanceMismatch));
        assert_eq!(
            find_transporter(&[a, b, c], &[a, b, sv("000011")]),
            Err(Error::DistanceMismatch)
        );
    }

    #[test]
    fn census() {
        let c = omega_orbit_census();
        assert_eq!(c.values().sum::<usize>(), 4960);
        assert_eq!(c.len(), 5);
        // each ω has exactly one antipode, so 32·30/2 triples contain a distance-6 pair
        assert_eq!(c[&HammingType::T246], 480);
    }

    fn arb_sign_vector() -> impl Strategy<Value = SignVector> {
        (0usize..32).prop_map(|i| SignVector::omega()[i])
    }

    fn arb_element() -> impl Strategy<Value = SignedPerm6> {
        proptest::collection::vec(0usize..6, 0..20).prop_map(|w| {
            w.into_iter()
                .fold(SignedPerm6::identity(), |acc, k| acc * GeneratorName::ALL[k].matrix())
        })
    }

    proptest! {
        #[test]
        fn action_is_isometric(w in arb_element(), a in arb_sign_vector(), b in arb_sign_vector()) {
            prop_assert_eq!(hamming_distance(&w.apply(&a), &w.apply(&b)), hamming_distance(&a, &b));
        }

        #[test]
        fn action_is_a_left_action(w in arb_element(), v in arb_element(), a in arb_sign_vector()) {
            prop_assert_eq!((w * v).apply(&a), w.apply(&v.apply(&a)));
            prop_assert_eq!(w * w.inverse(), SignedPerm6::identity());
            prop_assert_eq!(SignedPerm6::from_matrix(&w.to_matrix()).unwrap(), w);
        }

        #[test]
        fn transporter_moves_any_image(w in arb_element(), i in 0usize..32, j in 0usize..32, k in 0usize..32) {
            let om = SignVector::omega();
            prop_assume!(i != j && j != k && i != k);
            let src = [om[i], om[j], om[k]];
            let dst = src.map(|s| w.apply(&s));
            let t = find_transporter(&src, &dst).unwrap();
            for n in 0..3 {
                prop_assert_eq!(t.apply(&src[n]), dst[n]);
            }
        }
    }
}
