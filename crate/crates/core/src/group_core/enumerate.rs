use std::collections::HashMap;

use super::ExactMatrix7;
use crate::error::{Error, Result};

pub const DEFAULT_MAX_ORDER: usize = 30_000;

/// A finite matrix group closed under right multiplication by its
/// generators, in breadth-first order from the identity.
///
/// `parent[i] = Some((j, k))` means `elements[i] = elements[j] · generators[k]`,
/// so following parents back to the identity spells a shortest word.
#[derive(Clone, Debug)]
pub struct MatrixGroup {
    pub generators: Vec<ExactMatrix7>,
    pub elements: Vec<ExactMatrix7>,
    pub parent: Vec<Option<(usize, usize)>>,
    index: HashMap<ExactMatrix7, usize>,
}

impl MatrixGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, m: &ExactMatrix7) -> bool {
        self.index.contains_key(m)
    }

    pub fn index_of(&self, m: &ExactMatrix7) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Generator indices whose product, left to right, is `elements[i]`.
    pub fn word(&self, mut i: usize) -> Vec<usize> {
        let mut w = Vec::new();
        while let Some((j, k)) = self.parent[i] {
            w.push(k);
            i = j;
        }
        w.reverse();
        w
    }

    pub fn iter(&self) -> impl Iterator<Item = &ExactMatrix7> {
        self.elements.iter()
    }
}

/// Breadth-first closure of `generators` under right multiplication.
pub fn enumerate_group(generators: &[ExactMatrix7], max_order: usize) -> Result<MatrixGroup> {
    let id = ExactMatrix7::identity();
    let mut elements = vec![id.clone()];
    let mut parent = vec![None];
    let mut index = HashMap::new();
    index.insert(id, 0usize);
    let mut head = 0;
    while head < elements.len() {
        for (k, g) in generators.iter().enumerate() {
            let p = &elements[head] * g;
            if index.contains_key(&p) {
                continue;
            }
            if elements.len() >= max_order {
                return Err(Error::OrderExceeded { max_order });
            }
            index.insert(p.clone(), elements.len());
            elements.push(p);
            parent.push(Some((head, k)));
        }
        head += 1;
    }
    Ok(MatrixGroup {
        generators: generators.to_vec(),
        elements,
        parent,
        index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_involution() {
        let t = ExactMatrix7::from_cycles("(12)").unwrap();
        let g = enumerate_group(std::slice::from_ref(&t), 10).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.word(1), vec![0]);
        assert!(g.contains(&t));
    }

    #[test]
    fn symmetric_group_s7_and_cap() {
        let gens: Vec<_> = (1..7)
            .map(|i| ExactMatrix7::from_cycles(&format!("({}{})", i, i + 1)).unwrap())
            .collect();
        assert_eq!(enumerate_group(&gens, 6000).unwrap().order(), 5040);
        assert_eq!(
            enumerate_group(&gens, 100).unwrap_err(),
            Error::OrderExceeded { max_order: 100 }
        );
    }

    #[test]
    fn words_reproduce_elements() {
        let gens = vec![
            ExactMatrix7::from_cycles("(1234)").unwrap(),
            ExactMatrix7::from_cycles("(12)").unwrap(),
        ];
        let g = enumerate_group(&gens, 100).unwrap();
        assert_eq!(g.order(), 24);
        for i in 0..g.order() {
            let m = g
                .word(i)
                .into_iter()
                .fold(ExactMatrix7::identity(), |acc, k| &acc * &gens[k]);
            assert_eq!(m, g.elements[i]);
        }
    }
}
