//! Tree families with canonical labelings, seeded random trees, and
//! exhaustive enumeration of labeled trees.
//!
//! Labelings:
//! - path: `0..n` along the path.
//! - star: center `0`, leaves `1..=leaves`.
//! - complete binary: heap order, vertex `i` has children `2i + 1`, `2i + 2`.
//! - caterpillar: spine `0..spine` as a path, then the legs of spine vertex
//!   `0`, then those of spine vertex `1`, and so on.
//! - spider: center `0`, leg `i` occupies `1 + i * len ..= (i + 1) * len`,
//!   listed outward from the center.
//!
//! Random trees decode a uniform Prüfer sequence drawn from ChaCha8
//! (`rand_chacha::ChaCha8Rng::seed_from_u64(seed)`), so a given `(n, seed)`
//! yields the same tree on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::tree_model::{prufer_decode, PruferSequence, Tree};

/// Largest `n` accepted by [`enumerate_all_trees`].
pub const ENUMERATE_MAX_N: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("parameters produce an empty tree: {0}")]
    Degenerate(String),
    #[error("n = {n} is outside the enumerable range 1..={max}")]
    TooLarge { n: usize, max: usize },
}

/// A named family together with its size parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeFamilySpec {
    Path { n: usize },
    Star { leaves: usize },
    Caterpillar { spine: usize, legs_per_vertex: usize },
    CompleteBinary { depth: usize },
    Spider { legs: usize, leg_length: usize },
    Random { n: usize, seed: u64 },
}

impl TreeFamilySpec {
    pub fn generate(&self) -> Result<Tree, GenError> {
        match *self {
            TreeFamilySpec::Path { n } => gen_path(n),
            TreeFamilySpec::Star { leaves } => Ok(gen_star(leaves)),
            TreeFamilySpec::Caterpillar { spine, legs_per_vertex } => gen_caterpillar(spine, legs_per_vertex),
            TreeFamilySpec::CompleteBinary { depth } => Ok(gen_complete_binary(depth)),
            TreeFamilySpec::Spider { legs, leg_length } => Ok(gen_spider(legs, leg_length)),
            TreeFamilySpec::Random { n, seed } => gen_random_tree(n, seed),
        }
    }

    pub fn family_name(&self) -> &'static str {
        match self {
            TreeFamilySpec::Path { .. } => "path",
            TreeFamilySpec::Star { .. } => "star",
            TreeFamilySpec::Caterpillar { .. } => "caterpillar",
            TreeFamilySpec::CompleteBinary { .. } => "complete_binary",
            TreeFamilySpec::Spider { .. } => "spider",
            TreeFamilySpec::Random { .. } => "random",
        }
    }
}

impl std::fmt::Display for TreeFamilySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TreeFamilySpec::Path { n } => write!(f, "path(n={n})"),
            TreeFamilySpec::Star { leaves } => write!(f, "star(leaves={leaves})"),
            TreeFamilySpec::Caterpillar { spine, legs_per_vertex } => {
                write!(f, "caterpillar(spine={spine}, legs={legs_per_vertex})")
            }
            TreeFamilySpec::CompleteBinary { depth } => write!(f, "complete_binary(depth={depth})"),
            TreeFamilySpec::Spider { legs, leg_length } => write!(f, "spider(legs={legs}, leg_length={leg_length})"),
            TreeFamilySpec::Random { n, seed } => write!(f, "random(n={n}, seed={seed})"),
        }
    }
}

fn build(n: usize, edges: &[(usize, usize)]) -> Tree {
    Tree::from_edges(n, edges).expect("family construction yields a tree")
}

pub fn gen_path(n: usize) -> Result<Tree, GenError> {
    if n == 0 {
        return Err(GenError::Degenerate("path with 0 vertices".into()));
    }
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Ok(build(n, &edges))
}

pub fn gen_star(leaves: usize) -> Tree {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    build(leaves + 1, &edges)
}

/// Complete binary tree with `2^(depth+1) - 1` vertices.
pub fn gen_complete_binary(depth: usize) -> Tree {
    let n = (1usize << (depth + 1)) - 1;
    let edges: Vec<_> = (1..n).map(|v| ((v - 1) / 2, v)).collect();
    build(n, &edges)
}

pub fn gen_caterpillar(spine: usize, legs_per_vertex: usize) -> Result<Tree, GenError> {
    if spine == 0 {
        return Err(GenError::Degenerate("caterpillar with an empty spine".into()));
    }
    let n = spine * (1 + legs_per_vertex);
    let mut edges: Vec<_> = (1..spine).map(|v| (v - 1, v)).collect();
    let mut next = spine;
    for s in 0..spine {
        for _ in 0..legs_per_vertex {
            edges.push((s, next));
            next += 1;
        }
    }
    Ok(build(n, &edges))
}

pub fn gen_spider(legs: usize, leg_length: usize) -> Tree {
    let n = 1 + legs * leg_length;
    let mut edges = Vec::with_capacity(n - 1);
    for leg in 0..legs {
        let mut prev = 0;
        for step in 0..leg_length {
            let v = 1 + leg * leg_length + step;
            edges.push((prev, v));
            prev = v;
        }
    }
    build(n, &edges)
}

/// Uniform random Prüfer sequence from ChaCha8, decoded.
pub fn gen_random_tree(n: usize, seed: u64) -> Result<Tree, GenError> {
    if n == 0 {
        return Err(GenError::Degenerate("random tree with 0 vertices".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(random_tree_from(n, &mut rng))
}

/// Random tree drawn from a caller-owned generator, for corpora that need
/// many trees from one stream.
pub fn random_tree_from<R: Rng>(n: usize, rng: &mut R) -> Tree {
    assert!(n >= 1, "a tree needs at least one vertex");
    let seq: Vec<usize> = (0..n.saturating_sub(2)).map(|_| rng.gen_range(0..n)).collect();
    prufer_decode(&PruferSequence(seq), n).expect("in-range sequence of the right length")
}

/// `count` random trees with sizes uniform in `min_n..=max_n`, all drawn from
/// one ChaCha8 stream seeded with `seed`.
pub fn random_corpus(count: usize, min_n: usize, max_n: usize, seed: u64) -> Result<Vec<Tree>, GenError> {
    if min_n == 0 || min_n > max_n {
        return Err(GenError::Degenerate(format!("size range {min_n}..={max_n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..count)
        .map(|_| {
            let n = rng.gen_range(min_n..=max_n);
            random_tree_from(n, &mut rng)
        })
        .collect())
}

/// Every labeled tree on `n` vertices, once each, in lexicographic order of
/// Prüfer sequences.
pub fn enumerate_all_trees(n: usize) -> Result<AllTrees, GenError> {
    if n == 0 || n > ENUMERATE_MAX_N {
        return Err(GenError::TooLarge { n, max: ENUMERATE_MAX_N });
    }
    Ok(AllTrees { n, next: Some(vec![0; n.saturating_sub(2)]) })
}

/// Iterator returned by [`enumerate_all_trees`].
#[derive(Debug, Clone)]
pub struct AllTrees {
    n: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for AllTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        let seq = self.next.take()?;
        let tree = prufer_decode(&PruferSequence(seq.clone()), self.n).expect("valid sequence");
        let mut succ = seq;
        let mut i = succ.len();
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            succ[i] += 1;
            if succ[i] < self.n {
                self.next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(tree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{HashMap, HashSet};

    #[test]
    fn family_examples() {
        assert_eq!(gen_path(3).unwrap().edges(), &[(0, 1), (1, 2)]);
        assert_eq!(gen_star(3).edges(), &[(0, 1), (0, 2), (0, 3)]);
        let b = gen_complete_binary(2);
        assert_eq!(b.vertex_count(), 7);
        assert_eq!(b.edges(), &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]);
        assert_eq!(gen_complete_binary(0).vertex_count(), 1);
        assert_eq!(gen_star(0).vertex_count(), 1);
    }

    #[test]
    fn caterpillar_and_spider_layout() {
        let c = gen_caterpillar(3, 2).unwrap();
        assert_eq!(c.vertex_count(), 9);
        assert_eq!(c.neighbors(0), &[1, 3, 4]);
        assert_eq!(c.neighbors(2), &[1, 7, 8]);
        let s = gen_spider(3, 2);
        assert_eq!(s.vertex_count(), 7);
        assert_eq!(s.edges(), &[(0, 1), (0, 3), (0, 5), (1, 2), (3, 4), (5, 6)]);
        assert_eq!(gen_spider(0, 5).vertex_count(), 1);
    }

    #[test]
    fn degenerate_parameters() {
        assert!(matches!(gen_path(0), Err(GenError::Degenerate(_))));
        assert!(matches!(gen_caterpillar(0, 3), Err(GenError::Degenerate(_))));
        assert!(matches!(gen_random_tree(0, 1), Err(GenError::Degenerate(_))));
        assert_eq!(enumerate_all_trees(9).unwrap_err(), GenError::TooLarge { n: 9, max: 8 });
        assert!(enumerate_all_trees(0).is_err());
    }

    #[test]
    fn random_is_deterministic() {
        assert_eq!(gen_random_tree(40, 7).unwrap(), gen_random_tree(40, 7).unwrap());
        assert_ne!(gen_random_tree(40, 7).unwrap(), gen_random_tree(40, 8).unwrap());
        assert_eq!(gen_random_tree(1, 3).unwrap().vertex_count(), 1);
    }

    #[test]
    fn random_corpus_respects_size_range() {
        let corpus = random_corpus(200, 9, 20, 5).unwrap();
        assert_eq!(corpus.len(), 200);
        assert!(corpus.iter().all(|t| (9..=20).contains(&t.vertex_count())));
        assert_eq!(corpus, random_corpus(200, 9, 20, 5).unwrap());
        assert!(random_corpus(1, 5, 4, 0).is_err());
        assert!(random_corpus(1, 0, 4, 0).is_err());
    }

    #[test]
    fn random_n4_is_uniform_over_labeled_trees() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let samples = 16_000;
        let mut freq: HashMap<Vec<(usize, usize)>, usize> = HashMap::new();
        for _ in 0..samples {
            *freq.entry(random_tree_from(4, &mut rng).edges().to_vec()).or_default() += 1;
        }
        assert_eq!(freq.len(), 16);
        for count in freq.values() {
            let share = *count as f64 / samples as f64;
            assert!((share - 1.0 / 16.0).abs() <= 0.02, "share {share}");
        }
    }

    #[test]
    fn enumeration_counts_match_cayley() {
        for n in 1..=7usize {
            let trees: Vec<_> = enumerate_all_trees(n).unwrap().collect();
            let expected = if n <= 2 { 1 } else { n.pow(n as u32 - 2) };
            assert_eq!(trees.len(), expected);
            let distinct: HashSet<_> = trees.iter().map(|t| t.edges().to_vec()).collect();
            assert_eq!(distinct.len(), expected);
        }
    }
}
