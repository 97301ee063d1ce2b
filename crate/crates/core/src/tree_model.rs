//! Graphs, trees and forests over 0-based contiguous vertex labels, together
//! with the edge-list / JSON codecs and the Prüfer-sequence codec.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: vertex {vertex} out of range [0, {n})")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("invalid JSON graph: {0}")]
    Json(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("graph has no vertices")]
    Empty,
    #[error("graph has a cycle: {edges} edges on {vertices} vertices")]
    HasCycle { vertices: usize, edges: usize },
    #[error("graph is not connected: vertices {a} and {b} lie in different components")]
    NotConnected { a: usize, b: usize },
    #[error("component containing vertices {vertices:?} has a cycle")]
    ComponentHasCycle { vertices: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PruferError {
    #[error("a tree needs at least one vertex")]
    NoVertices,
    #[error("sequence length {actual} does not match expected {expected} for n = {n}")]
    LengthMismatch { n: usize, expected: usize, actual: usize },
    #[error("symbol {symbol} at position {position} is out of range [0, {n})")]
    SymbolOutOfRange { position: usize, symbol: usize, n: usize },
}

/// Simple undirected graph. Adjacency lists are sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    // sorted, each stored as (min, max)
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Graph on `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adjacency: vec![Vec::new(); n], edges: Vec::new() }
    }

    /// Builds a graph from an edge list. Errors carry the 1-based position
    /// of the offending edge in `edges` as their line number.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let tagged: Vec<_> = edges.iter().enumerate().map(|(i, &(u, v))| (i + 1, u, v)).collect();
        Self::from_tagged_edges(n, &tagged)
    }

    fn from_tagged_edges(n: usize, edges: &[(usize, usize, usize)]) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); n];
        let mut normalized = Vec::with_capacity(edges.len());
        for &(line, u, v) in edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { line, vertex, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { line, vertex: u });
            }
            normalized.push((u.min(v), u.max(v), line));
        }
        normalized.sort_unstable();
        for pair in normalized.windows(2) {
            if pair[0].0 == pair[1].0 && pair[0].1 == pair[1].1 {
                let (u, v, _) = pair[0];
                let line = pair[0].2.max(pair[1].2);
                return Err(GraphError::DuplicateEdge { line, u, v });
            }
        }
        for &(u, v, _) in &normalized {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let edges = normalized.into_iter().map(|(u, v, _)| (u, v)).collect();
        Ok(Graph { adjacency, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Index of edge `{u, v}` in [`Graph::edges`].
    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    /// Closed neighborhood N[v], sorted.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut out = self.adjacency[v].clone();
        let at = out.partition_point(|&u| u < v);
        out.insert(at, v);
        out
    }

    /// Component id per vertex, numbered in order of smallest member.
    pub fn component_labels(&self) -> (usize, Vec<usize>) {
        let n = self.vertex_count();
        let mut label = vec![usize::MAX; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = count;
            stack.push(start);
            while let Some(v) = stack.pop() {
                for &u in &self.adjacency[v] {
                    if label[u] == usize::MAX {
                        label[u] = count;
                        stack.push(u);
                    }
                }
            }
            count += 1;
        }
        (count, label)
    }

    /// Parses the edge-list text format: a header line holding `n`, then one
    /// `u v` pair per line. `#` starts a comment; blank lines are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let fields: Vec<&str> = content.split_whitespace().collect();
            match n {
                None => {
                    if fields.len() != 1 {
                        return Err(GraphError::Malformed {
                            line,
                            message: format!("expected vertex count, found {content:?}"),
                        });
                    }
                    n = Some(parse_index(fields[0], line)?);
                }
                Some(_) => {
                    if fields.len() != 2 {
                        return Err(GraphError::Malformed {
                            line,
                            message: format!("expected \"u v\", found {content:?}"),
                        });
                    }
                    edges.push((line, parse_index(fields[0], line)?, parse_index(fields[1], line)?));
                }
            }
        }
        let n = n.ok_or(GraphError::Malformed { line: 1, message: "missing vertex count".into() })?;
        Self::from_tagged_edges(n, &edges)
    }

    /// Canonical edge-list text: header, then edges ascending, `u < v`.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.vertex_count());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Parses `{"n": int, "edges": [[u, v], ...]}`.
    pub fn parse_json(text: &str) -> Result<Self, GraphError> {
        let doc: JsonGraph = serde_json::from_str(text).map_err(|e| GraphError::Json(e.to_string()))?;
        Self::from_edges(doc.n, &doc.edges.iter().map(|e| (e[0], e[1])).collect::<Vec<_>>())
    }

    pub fn to_json(&self) -> String {
        let doc = JsonGraph { n: self.vertex_count(), edges: self.edges.iter().map(|&(u, v)| [u, v]).collect() };
        serde_json::to_string(&doc).expect("graph serializes")
    }
}

fn parse_index(field: &str, line: usize) -> Result<usize, GraphError> {
    field.parse().map_err(|_| GraphError::Malformed { line, message: format!("not a non-negative integer: {field:?}") })
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}

/// A connected acyclic graph with at least one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree(Graph);

impl Tree {
    /// Accepts `g` iff it is non-empty, connected and has `n - 1` edges.
    pub fn new(g: Graph) -> Result<Self, TreeError> {
        let n = g.vertex_count();
        if n == 0 {
            return Err(TreeError::Empty);
        }
        if g.edge_count() >= n {
            return Err(TreeError::HasCycle { vertices: n, edges: g.edge_count() });
        }
        let (count, labels) = g.component_labels();
        if count > 1 {
            let b = labels.iter().position(|&c| c != labels[0]).expect("second component exists");
            return Err(TreeError::NotConnected { a: 0, b });
        }
        Ok(Tree(g))
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, TreeError> {
        // Edge lists built in code are trusted to be simple; range errors are caller bugs.
        let g = Graph::from_edges(n, edges).unwrap_or_else(|e| panic!("invalid edge list: {e}"));
        Tree::new(g)
    }

    pub fn graph(&self) -> &Graph {
        &self.0
    }

    pub fn into_graph(self) -> Graph {
        self.0
    }

    pub fn vertex_count(&self) -> usize {
        self.0.vertex_count()
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.0.degree(v) == 1
    }
}

impl std::ops::Deref for Tree {
    type Target = Graph;

    fn deref(&self) -> &Graph {
        &self.0
    }
}

/// Alias kept for callers that think in terms of the validation step.
pub fn validate_tree(g: Graph) -> Result<Tree, TreeError> {
    Tree::new(g)
}

/// Vertex-disjoint trees covering a graph. `vertex_maps[i][local]` is the
/// original index of local vertex `local` in component `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Forest {
    components: Vec<Tree>,
    vertex_maps: Vec<Vec<usize>>,
}

impl Forest {
    pub fn components(&self) -> &[Tree] {
        &self.components
    }

    pub fn vertex_maps(&self) -> &[Vec<usize>] {
        &self.vertex_maps
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_maps.iter().map(Vec::len).sum()
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

/// Partitions `g` into its connected components, each of which must be a tree.
/// Components are ordered by their smallest vertex; local labels preserve
/// the relative order of the original labels.
pub fn split_components(g: &Graph) -> Result<Forest, TreeError> {
    let (count, labels) = g.component_labels();
    let mut vertex_maps = vec![Vec::new(); count];
    let mut local = vec![0; g.vertex_count()];
    for (v, &c) in labels.iter().enumerate() {
        local[v] = vertex_maps[c].len();
        vertex_maps[c].push(v);
    }
    let mut component_edges = vec![Vec::new(); count];
    for &(u, v) in g.edges() {
        component_edges[labels[u]].push((local[u], local[v]));
    }
    let mut components = Vec::with_capacity(count);
    for (members, edges) in vertex_maps.iter().zip(&component_edges) {
        if edges.len() != members.len() - 1 {
            return Err(TreeError::ComponentHasCycle { vertices: members.clone() });
        }
        let graph = Graph::from_edges(members.len(), edges).expect("relabeled edges stay simple");
        components.push(Tree::new(graph).expect("connected with n - 1 edges"));
    }
    Ok(Forest { components, vertex_maps })
}

/// Prüfer sequence over labels `0..n`; empty for `n <= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PruferSequence(pub Vec<usize>);

impl PruferSequence {
    pub fn symbols(&self) -> &[usize] {
        &self.0
    }
}

pub fn prufer_decode(seq: &PruferSequence, n: usize) -> Result<Tree, PruferError> {
    if n == 0 {
        return Err(PruferError::NoVertices);
    }
    let expected = n.saturating_sub(2);
    if seq.0.len() != expected {
        return Err(PruferError::LengthMismatch { n, expected, actual: seq.0.len() });
    }
    if let Some((position, &symbol)) = seq.0.iter().enumerate().find(|(_, &s)| s >= n) {
        return Err(PruferError::SymbolOutOfRange { position, symbol, n });
    }
    if n == 1 {
        return Ok(Tree::from_edges(1, &[]).expect("single vertex"));
    }

    let mut degree = vec![1usize; n];
    for &s in &seq.0 {
        degree[s] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &s in &seq.0 {
        let Reverse(leaf) = leaves.pop().expect("a leaf always remains");
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.push(Reverse(s));
        }
    }
    let Reverse(a) = leaves.pop().expect("two vertices remain");
    let Reverse(b) = leaves.pop().expect("two vertices remain");
    edges.push((a, b));
    Ok(Tree::from_edges(n, &edges).expect("Prüfer decoding yields a tree"))
}

pub fn prufer_encode(t: &Tree) -> PruferSequence {
    let n = t.vertex_count();
    if n <= 2 {
        return PruferSequence(Vec::new());
    }
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut leaves: BinaryHeap<Reverse<usize>> = (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut out = Vec::with_capacity(n - 2);
    while out.len() < n - 2 {
        let Reverse(leaf) = leaves.pop().expect("trees with n >= 3 keep a leaf");
        removed[leaf] = true;
        let parent = *t.neighbors(leaf).iter().find(|&&u| !removed[u]).expect("leaf has one live neighbor");
        out.push(parent);
        degree[parent] -= 1;
        if degree[parent] == 1 {
            leaves.push(Reverse(parent));
        }
    }
    PruferSequence(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn parses_p3() {
        let g = Graph::parse_edge_list("3\n0 1\n1 2").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(g.neighbors(1), &[0, 2]);
    }

    #[test]
    fn parses_single_vertex_and_star() {
        let g = Graph::parse_edge_list("1").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
        let star = Graph::parse_edge_list("4\n0 1\n0 2\n0 3").unwrap();
        assert_eq!(star.degree(0), 3);
    }

    #[test]
    fn comments_blank_lines_and_reversed_endpoints() {
        let g = Graph::parse_edge_list("# a path\n3 # vertices\n\n2 1\n  1 0  \n").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert_eq!(
            Graph::parse_edge_list("3\n0 1\n1 3"),
            Err(GraphError::VertexOutOfRange { line: 3, vertex: 3, n: 3 })
        );
        assert_eq!(Graph::parse_edge_list("3\n0 1\n1 0"), Err(GraphError::DuplicateEdge { line: 3, u: 0, v: 1 }));
        assert_eq!(Graph::parse_edge_list("3\n# c\n2 2"), Err(GraphError::SelfLoop { line: 3, vertex: 2 }));
        assert!(matches!(Graph::parse_edge_list("3\n0 1 2"), Err(GraphError::Malformed { line: 2, .. })));
        assert!(matches!(Graph::parse_edge_list("3\n0 x"), Err(GraphError::Malformed { line: 2, .. })));
        assert!(matches!(Graph::parse_edge_list("# only a comment\n"), Err(GraphError::Malformed { .. })));
        assert!(matches!(Graph::parse_edge_list("-3"), Err(GraphError::Malformed { line: 1, .. })));
    }

    #[test]
    fn json_round_trip() {
        let g = Graph::parse_json(r#"{"n": 4, "edges": [[0, 1], [2, 1], [1, 3]]}"#).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (1, 3)]);
        assert_eq!(Graph::parse_json(&g.to_json()).unwrap(), g);
        assert!(matches!(Graph::parse_json(r#"{"n": 2}"#), Err(GraphError::Json(_))));
        assert!(matches!(
            Graph::parse_json(r#"{"n": 2, "edges": [[0, 2]]}"#),
            Err(GraphError::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn closed_neighborhood_includes_vertex() {
        let g = graph(4, &[(0, 2), (2, 3), (1, 2)]);
        assert_eq!(g.closed_neighborhood(2), vec![0, 1, 2, 3]);
        assert_eq!(g.closed_neighborhood(0), vec![0, 2]);
    }

    #[test]
    fn validate_tree_cases() {
        assert!(Tree::new(graph(3, &[(0, 1), (1, 2)])).is_ok());
        assert_eq!(Tree::new(graph(3, &[(0, 1), (1, 2), (2, 0)])), Err(TreeError::HasCycle { vertices: 3, edges: 3 }));
        assert_eq!(Tree::new(graph(2, &[])), Err(TreeError::NotConnected { a: 0, b: 1 }));
        assert_eq!(Tree::new(Graph::empty(0)), Err(TreeError::Empty));
        // n - 1 edges but a cycle plus an isolated vertex
        assert!(matches!(Tree::new(graph(4, &[(0, 1), (1, 2), (2, 0)])), Err(TreeError::NotConnected { a: 0, b: 3 })));
    }

    #[test]
    fn validate_tree_matches_definition_exhaustively() {
        for n in 1..=5usize {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            for mask in 0u32..(1 << pairs.len()) {
                let edges: Vec<_> =
                    pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
                let g = graph(n, &edges);
                let connected = g.component_labels().0 == 1;
                assert_eq!(Tree::new(g).is_ok(), connected && edges.len() == n - 1);
            }
        }
    }

    #[test]
    fn split_components_examples() {
        let f = split_components(&graph(3, &[(0, 1)])).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.components()[0].edges(), &[(0, 1)]);
        assert_eq!(f.components()[1].vertex_count(), 1);
        assert_eq!(f.vertex_maps(), &[vec![0, 1], vec![2]]);

        let p3 = graph(3, &[(0, 1), (1, 2)]);
        let f = split_components(&p3).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f.components()[0].graph(), &p3);

        let bad = graph(4, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(split_components(&bad), Err(TreeError::ComponentHasCycle { vertices: vec![0, 1, 2] }));

        let interleaved = split_components(&graph(5, &[(0, 3), (1, 4), (4, 2)])).unwrap();
        assert_eq!(interleaved.vertex_maps(), &[vec![0, 3], vec![1, 2, 4]]);
        assert_eq!(interleaved.components()[1].edges(), &[(0, 2), (1, 2)]);
        assert!(split_components(&Graph::empty(0)).unwrap().is_empty());
    }

    #[test]
    fn prufer_small_cases() {
        let t = prufer_decode(&PruferSequence(vec![]), 2).unwrap();
        assert_eq!(t.edges(), &[(0, 1)]);
        assert_eq!(prufer_decode(&PruferSequence(vec![]), 1).unwrap().vertex_count(), 1);
        let star = prufer_decode(&PruferSequence(vec![0, 0]), 4).unwrap();
        assert_eq!(star.edges(), &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(prufer_encode(&star), PruferSequence(vec![0, 0]));
        assert_eq!(prufer_encode(&t), PruferSequence(vec![]));
    }

    #[test]
    fn prufer_textbook_example() {
        // Edges 0-3, 1-3, 2-3, 3-4, 4-5 encode to [3, 3, 3, 4].
        let t = Tree::from_edges(6, &[(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)]).unwrap();
        assert_eq!(prufer_encode(&t), PruferSequence(vec![3, 3, 3, 4]));
        assert_eq!(prufer_decode(&PruferSequence(vec![3, 3, 3, 4]), 6).unwrap(), t);
    }

    #[test]
    fn prufer_errors() {
        assert_eq!(prufer_decode(&PruferSequence(vec![]), 0), Err(PruferError::NoVertices));
        assert_eq!(
            prufer_decode(&PruferSequence(vec![0]), 4),
            Err(PruferError::LengthMismatch { n: 4, expected: 2, actual: 1 })
        );
        assert_eq!(
            prufer_decode(&PruferSequence(vec![0, 4]), 4),
            Err(PruferError::SymbolOutOfRange { position: 1, symbol: 4, n: 4 })
        );
        assert!(prufer_decode(&PruferSequence(vec![0]), 2).is_err());
    }

    #[test]
    fn all_sequences_n4_give_sixteen_trees() {
        let mut seen = std::collections::HashSet::new();
        for a in 0..4 {
            for b in 0..4 {
                let t = prufer_decode(&PruferSequence(vec![a, b]), 4).unwrap();
                seen.insert(t.edges().to_vec());
            }
        }
        assert_eq!(seen.len(), 16);
    }
}
