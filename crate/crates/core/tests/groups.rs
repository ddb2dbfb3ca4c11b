use std::collections::HashSet;

use k43::coxeter_d6::{generator_matrix, phi, SignVector, SignedPerm6};
use k43::group_core::{enumerate_group, s_matrix, ExactMatrix7, Rational};
use k43::mk_cosets::{a1_matrix, a2_matrix, a3_matrix, cycle_matrix, iota, s_conjugate, tables, RepKind};

const LABELS: [(&str, &str); 32] = [
    ("p0", "000000"),
    ("p1", "011000"),
    ("p2", "101000"),
    ("p3", "110000"),
    ("p4", "000011"),
    ("p5", "011011"),
    ("p6", "101011"),
    ("p7", "110011"),
    ("p8", "000101"),
    ("p9", "011101"),
    ("p10", "101101"),
    ("p11", "110101"),
    ("p12", "000110"),
    ("p13", "011110"),
    ("p14", "101110"),
    ("p15", "110110"),
    ("n0", "111111"),
    ("n1", "100111"),
    ("n2", "010111"),
    ("n3", "001111"),
    ("n4", "111100"),
    ("n5", "100100"),
    ("n6", "010100"),
    ("n7", "001100"),
    ("n8", "111010"),
    ("n9", "100010"),
    ("n10", "010010"),
    ("n11", "001010"),
    ("n12", "111001"),
    ("n13", "100001"),
    ("n14", "010001"),
    ("n15", "001001"),
];

fn m7(i: usize, j: usize) -> ExactMatrix7 {
    let rows = generator_matrix(7, i, j, 1).unwrap();
    ExactMatrix7::from_int_rows(std::array::from_fn(|a| std::array::from_fn(|b| rows[a][b])))
}

#[test]
fn group_orders() {
    let t = tables();
    assert_eq!(t.g_k.order(), 720);
    assert_eq!(t.m_k.order(), 23040);
    assert!(t.g_k.iter().all(|g| t.m_k.contains(g)));
}

#[test]
fn enumeration_is_idempotent() {
    let t = tables();
    let again = enumerate_group(&t.g_k.elements, 1000).unwrap();
    let a: HashSet<_> = again.elements.iter().collect();
    let b: HashSet<_> = t.g_k.elements.iter().collect();
    assert_eq!(a, b);
}

#[test]
fn members_are_unimodular_with_small_entries() {
    let t = tables();
    let phi_row = [-1i64, -1, -1, -1, 1, 1, 1].map(Rational::from);
    for m in t.m_k.iter() {
        let ints = m.to_small_ints().expect("integer entries");
        assert!(ints.iter().flatten().all(|x| x.abs() <= 2));
        assert!((m * &m.inverse().unwrap()).is_identity());
        // the hyperplane functional is preserved: φ·m = φ
        for j in 0..7 {
            let mut acc = Rational::zero();
            for i in 0..7 {
                acc += &(&phi_row[i] * m.get(i, j));
            }
            assert_eq!(acc, phi_row[j]);
        }
    }
    for m in t.g_k.iter().take(50) {
        assert_eq!(m.determinant().abs(), Rational::one());
    }
}

#[test]
fn g_k_fixes_the_first_coordinate() {
    let e1: [Rational; 7] = std::array::from_fn(|j| Rational::from((j == 0) as i64));
    for g in tables().g_k.iter() {
        assert_eq!(g.row(0), &e1);
    }
}

#[test]
fn auxiliary_realizations() {
    let a1 = a1_matrix();
    assert!((&a1 * &a1).is_identity());
    assert!((&a1 * &m7(2, 3)).pow(2).is_identity());
    assert!((&a1 * &m7(3, 4)).pow(3).is_identity());
    let a3 = &(&(&(&m7(2, 3) * &m7(3, 4)) * &a2_matrix()) * &m7(3, 4)) * &m7(2, 3);
    assert_eq!(a3, a3_matrix());
    let s = s_matrix();
    let si = s.inverse().unwrap();
    assert_eq!(a3_matrix().conjugate_by(&s, &si), cycle_matrix("(12)").unwrap());
}

#[test]
fn psi_is_a_consistent_isomorphism() {
    let t = tables();
    assert_eq!(t.psi_conflicts(), 0);
    let images: HashSet<SignedPerm6> = t.m_k.iter().map(|m| t.psi(m).unwrap()).collect();
    assert_eq!(images.len(), 23040);
    // ι is central, so its image is -I
    let w = t.psi(&iota()).unwrap();
    assert_eq!(w.apply(&SignVector::OMEGA0), SignVector::OMEGA0.negate());
    assert_eq!(w.negative_count(), 6);
    // words recorded by the enumeration reproduce Ψ
    for m in t.m_k.iter().step_by(997) {
        assert_eq!(phi(&t.word_of(m).unwrap()), t.psi(m).unwrap());
        assert_eq!(t.psi_inverse(&t.psi(m).unwrap()), m);
    }
}

#[test]
fn label_table() {
    let t = tables();
    let reps = t.coset_representatives();
    assert_eq!(reps.len(), 32);
    for (rep, (name, label)) in reps.iter().zip(LABELS) {
        assert_eq!(rep.name(), name);
        assert_eq!(rep.label.label(), label, "{name}");
    }
    for k in 0..16 {
        let p = t.rep(RepKind::P, k).label;
        let n = t.rep(RepKind::N, k).label;
        assert_eq!(p.negate(), n);
    }
}

#[test]
fn cosets_are_complete() {
    let t = tables();
    let reps = t.coset_representatives();
    let mut all = HashSet::new();
    for r in reps {
        assert_eq!(t.coset_of(&r.matrix).unwrap().name(), r.name());
        for g in t.g_k.iter() {
            let m = g * &r.matrix;
            assert_eq!(t.coset_of(&m).unwrap().name(), r.name());
            all.insert(m);
        }
    }
    assert_eq!(all.len(), 23040);
}

#[test]
fn coset_lookups() {
    let t = tables();
    let tr = s_conjugate("(25)(36)(47)").unwrap();
    assert!(t.g_k.contains(&tr));
    let p5 = &t.rep(RepKind::P, 5).matrix;
    assert_eq!(t.coset_of(&(&tr * p5)).unwrap().name(), "p5");
    let p3 = &t.rep(RepKind::P, 3).matrix;
    assert_eq!(t.coset_of(&(&iota() * p3)).unwrap().name(), "n3");
    assert_eq!(t.coset_of(&t.g_k.elements[300]).unwrap().name(), "p0");
    assert!(t.coset_of(&s_matrix()).is_err());
    assert_eq!(t.rep_by_name("111001").unwrap().name(), "n12");
}
