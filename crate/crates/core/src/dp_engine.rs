//! Post-order dynamic programming for the independence polynomial of a tree.
//!
//! Every vertex `v` of the rooted tree carries three values for its subtree
//! `T_v`: `I(T_v)`, `I(T_v - v)` and `I(T_v - N[v])`. A leaf has `(1 + x, 1, 1)`.
//! An inner vertex combines its children `u`:
//!
//! ```text
//! I(T_v - v)    = prod I(T_u)
//! I(T_v - N[v]) = prod I(T_u - u)
//! I(T_v)        = I(T_v - v) + x * I(T_v - N[v])
//! ```
//!
//! The traversal uses an explicit stack, so path-shaped inputs of millions of
//! vertices do not touch the call stack. The driver is generic over
//! [`SubtreeAlgebra`]: exact polynomials are the default, and any ring
//! homomorphism of `Z[x]` (for example evaluation at a point modulo a prime)
//! runs through the identical traversal.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::polynomial::Polynomial;
use crate::tree_model::{Forest, Tree};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("internal error: traversal needs at least 3 vertices, got {0}")]
    TooSmall(usize),
    #[error("internal error: root {root} has degree {degree}, expected at least 2")]
    RootNotInner { root: usize, degree: usize },
    #[error("internal error: root {root} out of range for {n} vertices")]
    RootOutOfRange { root: usize, n: usize },
}

/// Values the traversal combines. Implementations must behave as the image of
/// `Z[x]` under a ring homomorphism for the results to be meaningful.
pub trait SubtreeAlgebra {
    type Value: Clone;

    fn one(&self) -> Self::Value;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    /// Product; `scalar_ops` grows by the cost of the multiplication.
    fn mul(&self, a: &Self::Value, b: &Self::Value, scalar_ops: &mut u64) -> Self::Value;
    fn times_x(&self, a: &Self::Value) -> Self::Value;
}

/// Exact polynomials over arbitrary-precision integers.
#[derive(Debug, Clone, Copy, Default)]
pub struct PolynomialAlgebra;

impl SubtreeAlgebra for PolynomialAlgebra {
    type Value = Polynomial;

    fn one(&self) -> Polynomial {
        Polynomial::one()
    }

    fn add(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        a + b
    }

    fn mul(&self, a: &Polynomial, b: &Polynomial, scalar_ops: &mut u64) -> Polynomial {
        a.mul_counted(b, scalar_ops)
    }

    fn times_x(&self, a: &Polynomial) -> Polynomial {
        a.shift_mul_x()
    }
}

/// Evaluation of `I(T; point)` modulo a prime below 2^63. One scalar
/// multiplication per product.
#[derive(Debug, Clone, Copy)]
pub struct ModularEvaluation {
    point: u64,
    modulus: u64,
}

impl ModularEvaluation {
    /// 2^61 - 1.
    pub const MERSENNE_61: u64 = (1 << 61) - 1;

    pub fn new(point: u64, modulus: u64) -> Self {
        assert!(modulus > 1 && modulus < 1 << 63, "modulus must lie in (1, 2^63)");
        ModularEvaluation { point: point % modulus, modulus }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }
}

impl SubtreeAlgebra for ModularEvaluation {
    type Value = u64;

    fn one(&self) -> u64 {
        1
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.modulus
    }

    fn mul(&self, a: &u64, b: &u64, scalar_ops: &mut u64) -> u64 {
        *scalar_ops += 1;
        ((*a as u128 * *b as u128) % self.modulus as u128) as u64
    }

    fn times_x(&self, a: &u64) -> u64 {
        ((*a as u128 * self.point as u128) % self.modulus as u128) as u64
    }
}

/// The per-vertex triple together with the discovered children of `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexState<V = Polynomial> {
    pub i_of_t: V,
    pub i_minus_v: V,
    pub i_minus_nv: V,
    pub children: Vec<usize>,
}

/// Traversal instrumentation.
///
/// `vertex_visits[v]` counts how often the traversal entered `v`;
/// `edge_explorations[e]` counts how often edge `e` (indexed as in
/// [`crate::tree_model::Graph::edges`]) led to an undiscovered vertex.
/// Both are all zero when the one- and two-vertex short circuit applies.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TraversalStats {
    pub vertex_visits: Vec<u32>,
    pub edge_explorations: Vec<u32>,
    pub poly_mul_scalar_ops: u64,
}

impl TraversalStats {
    fn new(n: usize, m: usize) -> Self {
        TraversalStats { vertex_visits: vec![0; n], edge_explorations: vec![0; m], poly_mul_scalar_ops: 0 }
    }

    pub fn total_vertex_visits(&self) -> u64 {
        self.vertex_visits.iter().map(|&c| u64::from(c)).sum()
    }

    pub fn total_edge_explorations(&self) -> u64 {
        self.edge_explorations.iter().map(|&c| u64::from(c)).sum()
    }

    /// Every vertex entered once and every edge explored once.
    pub fn is_exactly_once(&self) -> bool {
        self.vertex_visits.iter().all(|&c| c == 1) && self.edge_explorations.iter().all(|&c| c == 1)
    }

    pub fn summary(&self) -> StatsSummary {
        StatsSummary {
            vertex_visits: self.total_vertex_visits(),
            edge_explorations: self.total_edge_explorations(),
            poly_mul_scalar_ops: self.poly_mul_scalar_ops,
        }
    }
}

/// Totals of [`TraversalStats`], suitable for serialization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct StatsSummary {
    pub vertex_visits: u64,
    pub edge_explorations: u64,
    pub poly_mul_scalar_ops: u64,
}

impl std::ops::AddAssign for StatsSummary {
    fn add_assign(&mut self, other: StatsSummary) {
        self.vertex_visits += other.vertex_visits;
        self.edge_explorations += other.edge_explorations;
        self.poly_mul_scalar_ops += other.poly_mul_scalar_ops;
    }
}

/// Full result of a rooted traversal.
#[derive(Debug, Clone)]
pub struct StateMap<V = Polynomial> {
    pub root: usize,
    pub states: Vec<VertexState<V>>,
    pub stats: TraversalStats,
}

impl<V> StateMap<V> {
    pub fn root_state(&self) -> &VertexState<V> {
        &self.states[self.root]
    }
}

/// Smallest-index vertex of degree at least 2.
pub fn find_inner_vertex(t: &Tree) -> Result<usize, EngineError> {
    let n = t.vertex_count();
    if n < 3 {
        return Err(EngineError::TooSmall(n));
    }
    Ok((0..n).find(|&v| t.degree(v) >= 2).expect("trees with n >= 3 have an inner vertex"))
}

fn check_root(t: &Tree, root: usize) -> Result<(), EngineError> {
    let n = t.vertex_count();
    if n < 3 {
        return Err(EngineError::TooSmall(n));
    }
    if root >= n {
        return Err(EngineError::RootOutOfRange { root, n });
    }
    if t.degree(root) < 2 {
        return Err(EngineError::RootNotInner { root, degree: t.degree(root) });
    }
    Ok(())
}

/// Explicit-stack post-order traversal from `root`. When `keep_states` is
/// false, child states are dropped once folded into their parent and only the
/// root's entry is populated on return.
fn traverse<A: SubtreeAlgebra>(
    t: &Tree,
    root: usize,
    algebra: &A,
    keep_states: bool,
) -> (Vec<Option<VertexState<A::Value>>>, TraversalStats) {
    let n = t.vertex_count();
    let mut stats = TraversalStats::new(n, t.edge_count());
    let mut discovered = vec![false; n];
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut states: Vec<Option<VertexState<A::Value>>> = (0..n).map(|_| None).collect();

    // (vertex, index of the next neighbor to examine)
    let mut stack: Vec<(usize, usize)> = Vec::new();
    discovered[root] = true;
    stats.vertex_visits[root] += 1;
    stack.push((root, 0));

    while let Some(top) = stack.last_mut() {
        let (v, next) = *top;
        let neighbors = t.neighbors(v);
        if next < neighbors.len() {
            top.1 += 1;
            let u = neighbors[next];
            if !discovered[u] {
                discovered[u] = true;
                let edge = t.edge_id(v, u).expect("neighbor implies edge");
                stats.edge_explorations[edge] += 1;
                children[v].push(u);
                stats.vertex_visits[u] += 1;
                stack.push((u, 0));
            }
            continue;
        }
        stack.pop();

        let kids = std::mem::take(&mut children[v]);
        let state = if kids.is_empty() {
            let one = algebra.one();
            VertexState {
                i_of_t: algebra.add(&one, &algebra.times_x(&one)),
                i_minus_v: one.clone(),
                i_minus_nv: one,
                children: kids,
            }
        } else {
            let mut left = algebra.one();
            let mut right = algebra.one();
            for &u in &kids {
                let child = states[u].as_ref().expect("children finish first");
                left = algebra.mul(&left, &child.i_of_t, &mut stats.poly_mul_scalar_ops);
                right = algebra.mul(&right, &child.i_minus_v, &mut stats.poly_mul_scalar_ops);
                if !keep_states {
                    states[u] = None;
                }
            }
            VertexState {
                i_of_t: algebra.add(&left, &algebra.times_x(&right)),
                i_minus_v: left,
                i_minus_nv: right,
                children: kids,
            }
        };
        states[v] = Some(state);
    }
    (states, stats)
}

/// Rooted traversal returning the finalized state of every vertex.
pub fn fipr(t: &Tree, root: usize) -> Result<StateMap, EngineError> {
    fipr_in(t, root, &PolynomialAlgebra)
}

pub fn fipr_in<A: SubtreeAlgebra>(t: &Tree, root: usize, algebra: &A) -> Result<StateMap<A::Value>, EngineError> {
    check_root(t, root)?;
    let (states, stats) = traverse(t, root, algebra, true);
    let states = states.into_iter().map(|s| s.expect("connected tree: every vertex finalized")).collect();
    Ok(StateMap { root, states, stats })
}

/// Independence polynomial of `t` with traversal statistics.
pub fn fip(t: &Tree) -> (Polynomial, TraversalStats) {
    fip_in(t, &PolynomialAlgebra)
}

/// [`fip`] over an arbitrary algebra. Only the root's state is retained.
pub fn fip_in<A: SubtreeAlgebra>(t: &Tree, algebra: &A) -> (A::Value, TraversalStats) {
    let n = t.vertex_count();
    let one = algebra.one();
    let x = algebra.times_x(&one);
    match n {
        1 => (algebra.add(&one, &x), TraversalStats::new(n, t.edge_count())),
        2 => {
            let p1 = algebra.add(&one, &x);
            (algebra.add(&p1, &x), TraversalStats::new(n, t.edge_count()))
        }
        _ => {
            let root = find_inner_vertex(t).expect("n >= 3");
            let (mut states, stats) = traverse(t, root, algebra, false);
            let root_state = states[root].take().expect("root finalized");
            (root_state.i_of_t, stats)
        }
    }
}

/// Product of the component polynomials; the empty forest gives 1.
pub fn fip_forest(f: &Forest) -> Polynomial {
    fip_forest_with_stats(f).0
}

/// [`fip_forest`] with traversal totals summed over components. The
/// products joining components are counted in `poly_mul_scalar_ops`.
pub fn fip_forest_with_stats(f: &Forest) -> (Polynomial, StatsSummary) {
    let mut total = StatsSummary::default();
    let mut product = Polynomial::one();
    for component in f.components() {
        let (p, stats) = fip(component);
        total += stats.summary();
        product = product.mul_counted(&p, &mut total.poly_mul_scalar_ops);
    }
    (product, total)
}

/// Independence number: the degree of the independence polynomial.
pub fn alpha(t: &Tree) -> usize {
    fip(t).0.degree()
}
