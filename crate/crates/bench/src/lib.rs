//! Fixed workloads shared by the benchmarks.

use qsym_core::{Composition, LabelledWeightedPoset, Permutation};

pub fn comp(parts: &[usize]) -> Composition {
    Composition::new(parts.to_vec()).expect("positive parts")
}

/// Pairs of compositions for product benchmarks, by total size.
pub fn product_pairs() -> Vec<(Composition, Composition)> {
    vec![
        (comp(&[1, 2]), comp(&[2])),
        (comp(&[1, 1]), comp(&[2, 3])),
        (comp(&[1, 2, 1]), comp(&[2, 1, 1])),
        (comp(&[1, 1, 1, 1]), comp(&[1, 1, 1, 1])),
    ]
}

/// The chain of a permutation as a weighted poset.
pub fn chain(word: &[usize], weights: &[usize]) -> LabelledWeightedPoset {
    let pi = Permutation::new(word.to_vec()).expect("a permutation");
    LabelledWeightedPoset::weighted_chain(&pi, &comp(weights)).expect("matching lengths")
}
