use k43::suites::*;

#[test]
fn barnes_lemma_small_suite() {
    let rows = barnes_lemma_suite(3, 1, 1e-12).unwrap();
    assert!(all_passed(&rows), "{rows:?}");
}

#[test]
fn lemma21_both_branches() {
    let rows = lemma21_suite(&[0.3, 0.8, 1.25, 3.0], 1, 2, 1e-10).unwrap();
    assert!(all_passed(&rows), "{rows:?}");
}

#[test]
fn terminating_exact() {
    let rows = terminating_suite(3, 2, 3).unwrap();
    assert!(all_passed(&rows), "{rows:?}");
}

#[test]
fn sine_identity() {
    assert!(sine_identity_max_residual(1000, 4, 128).unwrap() < 1e-25);
}
