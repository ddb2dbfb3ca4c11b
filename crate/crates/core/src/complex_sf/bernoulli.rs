use std::sync::{Mutex, OnceLock};

use rug::{Integer, Rational};

fn cache() -> &'static Mutex<Vec<Rational>> {
    static C: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(vec![Rational::from(1)]))
}

/// Bernoulli number `B_n` with `B_1 = -1/2`.
pub fn bernoulli(n: usize) -> Rational {
    let mut b = cache().lock().unwrap_or_else(|e| e.into_inner());
    while b.len() <= n {
        // Σ_{j<m+1} C(m+1, j) B_j = 0
        let m = b.len();
        let mut acc = Rational::new();
        let mut binom = Integer::from(1);
        for (j, bj) in b.iter().enumerate() {
            if j > 1 && j % 2 == 1 {
                binom = binom * (m + 1 - j) / (j + 1);
                continue;
            }
            acc += Rational::from(bj * &binom);
            binom = binom * (m + 1 - j) / (j + 1);
        }
        b.push(-acc / Rational::from(m + 1));
    }
    b[n].clone()
}

/// `B_0, …, B_n`.
pub fn bernoulli_table(n: usize) -> Vec<Rational> {
    bernoulli(n);
    let b = cache().lock().unwrap_or_else(|e| e.into_inner());
    b[..=n].to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let want = [
            (0, 1, 1),
            (1, -1, 2),
            (2, 1, 6),
            (3, 0, 1),
            (4, -1, 30),
            (12, -691, 2730),
        ];
        for (n, p, q) in want {
            assert_eq!(bernoulli(n), Rational::from((p, q)), "B_{n}");
        }
        assert!(bernoulli(60).numer().significant_bits() > 100);
        assert_eq!(bernoulli(61), 0);
    }
}
