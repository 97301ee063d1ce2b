//! Ground-truth computations that share nothing with the post-order engine:
//! direct enumeration of independent sets, the textbook vertex-deletion
//! recursion on arbitrary graphs, closed forms for paths and stars, and a
//! leaf-greedy maximum independent set for trees.

use num_bigint::BigUint;
use thiserror::Error;

use crate::polynomial::Polynomial;
use crate::tree_model::{Graph, Tree};

/// Largest graph accepted by [`brute_force_polynomial`].
pub const BRUTE_FORCE_MAX_N: usize = 30;
/// Largest graph accepted by [`naive_recursion_polynomial`].
pub const NAIVE_RECURSION_MAX_N: usize = 25;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph with {n} vertices exceeds the oracle limit of {max}")]
    TooLarge { n: usize, max: usize },
}

/// Vertex subset as a bitmask; bit `v` set means `v` is in the subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SubsetMask(pub u32);

impl SubsetMask {
    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn with(self, v: usize) -> Self {
        SubsetMask(self.0 | 1 << v)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// No edge of `g` has both endpoints in the subset.
    pub fn is_independent(self, g: &Graph) -> bool {
        g.edges().iter().all(|&(u, v)| !(self.contains(u) && self.contains(v)))
    }
}

fn neighbor_masks(g: &Graph) -> Vec<u32> {
    (0..g.vertex_count()).map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u)).collect()
}

/// Counts independent sets by size through exhaustive enumeration.
pub fn brute_force_polynomial(g: &Graph) -> Result<Polynomial, OracleError> {
    brute_force_polynomial_capped(g, BRUTE_FORCE_MAX_N)
}

/// As [`brute_force_polynomial`] with a lower size limit (clamped to 30).
///
/// Subsets are grown vertex by vertex in index order; a branch is abandoned
/// as soon as the partial subset stops being independent, since no superset
/// of a dependent set can be independent.
pub fn brute_force_polynomial_capped(g: &Graph, cap: usize) -> Result<Polynomial, OracleError> {
    let n = g.vertex_count();
    let max = cap.min(BRUTE_FORCE_MAX_N);
    if n > max {
        return Err(OracleError::TooLarge { n, max });
    }
    let adj = neighbor_masks(g);
    let mut counts = vec![0u64; n + 1];
    // (next vertex to decide, chosen subset)
    let mut stack = vec![(0usize, SubsetMask::default())];
    while let Some((v, chosen)) = stack.pop() {
        if v == n {
            counts[chosen.len()] += 1;
            continue;
        }
        stack.push((v + 1, chosen));
        if adj[v] & chosen.0 == 0 {
            stack.push((v + 1, chosen.with(v)));
        }
    }
    Ok(Polynomial::from_coefficients(counts.into_iter().map(BigUint::from).collect()))
}

/// `I(G) = I(G - v) + x I(G - N[v])` applied literally on induced subgraphs,
/// with disconnected intermediates split into a product over components.
/// The pivot is the smallest-index vertex of maximum degree.
pub fn naive_recursion_polynomial(g: &Graph) -> Result<Polynomial, OracleError> {
    let n = g.vertex_count();
    if n > NAIVE_RECURSION_MAX_N {
        return Err(OracleError::TooLarge { n, max: NAIVE_RECURSION_MAX_N });
    }
    let adj = neighbor_masks(g);
    let all = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    Ok(naive(&adj, all))
}

fn naive(adj: &[u32], alive: u32) -> Polynomial {
    if alive == 0 {
        return Polynomial::one();
    }
    let components = components_of(adj, alive);
    if components.len() > 1 {
        return components.into_iter().fold(Polynomial::one(), |acc, c| &acc * &naive(adj, c));
    }
    let mut pivot = 0;
    let mut best = None;
    for (v, &neighbors) in adj.iter().enumerate() {
        if alive >> v & 1 == 1 {
            let degree = (neighbors & alive).count_ones();
            if best.is_none_or(|b| degree > b) {
                best = Some(degree);
                pivot = v;
            }
        }
    }
    let without_v = alive & !(1 << pivot);
    let without_closed = without_v & !adj[pivot];
    &naive(adj, without_v) + &naive(adj, without_closed).shift_mul_x()
}

fn components_of(adj: &[u32], alive: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut remaining = alive;
    while remaining != 0 {
        let seed = remaining & remaining.wrapping_neg();
        let mut component = seed;
        loop {
            let mut grown = component;
            let mut bits = component;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                grown |= adj[v] & alive;
            }
            if grown == component {
                break;
            }
            component = grown;
        }
        out.push(component);
        remaining &= !component;
    }
    out
}

/// `I(P_n)` from `I(P_n) = I(P_{n-1}) + x I(P_{n-2})`, `I(P_0) = 1`, `I(P_1) = 1 + x`.
pub fn path_polynomial(n: usize) -> Polynomial {
    let mut prev = Polynomial::one();
    let mut cur = Polynomial::from_u64s(&[1, 1]);
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &cur + &prev.shift_mul_x();
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `(1 + x)^leaves + x`, via binomial coefficients; `1 + x` for no leaves.
pub fn star_polynomial(leaves: usize) -> Polynomial {
    if leaves == 0 {
        return Polynomial::from_u64s(&[1, 1]);
    }
    let mut coefficients = Vec::with_capacity(leaves + 1);
    let mut c = BigUint::from(1u32);
    for k in 0..=leaves {
        coefficients.push(c.clone());
        c = c * BigUint::from(leaves - k) / BigUint::from(k + 1);
    }
    coefficients[1] += 1u32;
    Polynomial::from_coefficients(coefficients)
}

/// Exact independence number of a tree: take a leaf (or isolated vertex),
/// delete it together with its neighbor, repeat.
pub fn greedy_tree_mis(t: &Tree) -> usize {
    let n = t.vertex_count();
    let mut removed = vec![false; n];
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut queue: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut taken = 0;
    while let Some(v) = queue.pop() {
        if removed[v] {
            continue;
        }
        taken += 1;
        removed[v] = true;
        if let Some(&w) = t.neighbors(v).iter().find(|&&w| !removed[w]) {
            removed[w] = true;
            for &z in t.neighbors(w) {
                if !removed[z] {
                    degree[z] -= 1;
                    if degree[z] <= 1 {
                        queue.push(z);
                    }
                }
            }
        }
    }
    taken
}
