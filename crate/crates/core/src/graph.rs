//! Immutable simple undirected graphs.
//!
//! Vertices are always `0..n`. Deleting vertices produces a new graph whose
//! vertices are renumbered contiguously; the renumbering is returned
//! alongside it in a [`Deletion`] so callers can map results back.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sorted, duplicate-free list of vertex identifiers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(vec![v])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn insert(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// Check every member is a vertex of a graph on `n` vertices.
    pub fn check_range(&self, n: usize) -> Result<()> {
        match self.max() {
            Some(v) if v >= n => Err(Error::InvalidVertex { vertex: v, n }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(v: [usize; N]) -> Self {
        v.into_iter().collect()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, usize>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

/// Result of deleting a vertex set: the induced subgraph on the survivors and
/// the map from its vertices back to the vertices of the original graph.
#[derive(Clone, Debug)]
pub struct Deletion {
    pub graph: Graph,
    /// `old_of_new[i]` is the original label of vertex `i` of `graph`.
    pub old_of_new: Vec<usize>,
    /// Number of original edges with at least one end in the deleted set.
    pub edges_removed: usize,
}

impl Deletion {
    /// Original label of a vertex of the smaller graph.
    pub fn original(&self, v: usize) -> usize {
        self.old_of_new[v]
    }
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph { adjacency: vec![Vec::new(); n], edge_count: 0 }
    }

    /// Build a simple graph. Self-loops and repeated edges are rejected.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::InvalidVertex { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::InvalidEdge { u, v, reason: "self-loop" });
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (u, nbrs) in adjacency.iter_mut().enumerate() {
            nbrs.sort_unstable();
            if let Some(w) = nbrs.windows(2).find(|w| w[0] == w[1]) {
                let v = w[0];
                return Err(Error::InvalidEdge { u: u.min(v), v: u.max(v), reason: "duplicate edge" });
            }
        }
        Ok(Graph { adjacency, edge_count: edges.len() })
    }

    /// Build from sorted, symmetric, loop-free adjacency lists. Internal use.
    pub(crate) fn from_sorted_adjacency(adjacency: Vec<Vec<usize>>) -> Self {
        let degree_sum: usize = adjacency.iter().map(Vec::len).sum();
        debug_assert!(degree_sum.is_multiple_of(2));
        Graph { adjacency, edge_count: degree_sum / 2 }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.adjacency.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adjacency.len() && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Induced subgraph on `V \ x`, renumbered in increasing order of the
    /// surviving original labels.
    pub fn remove_vertices(&self, x: &VertexSet) -> Result<Deletion> {
        let n = self.vertex_count();
        x.check_range(n)?;
        let mut new_of_old = vec![usize::MAX; n];
        let mut old_of_new = Vec::with_capacity(n - x.len());
        for v in self.vertices().filter(|&v| !x.contains(v)) {
            new_of_old[v] = old_of_new.len();
            old_of_new.push(v);
        }
        let adjacency: Vec<Vec<usize>> = old_of_new
            .iter()
            .map(|&old| {
                self.adjacency[old]
                    .iter()
                    .filter(|&&w| new_of_old[w] != usize::MAX)
                    .map(|&w| new_of_old[w])
                    .collect()
            })
            .collect();
        let graph = Graph::from_sorted_adjacency(adjacency);
        let edges_removed = self.edge_count - graph.edge_count;
        Ok(Deletion { graph, old_of_new, edges_removed })
    }

    /// Induced subgraph on `keep` (renumbered in increasing order).
    pub fn induced(&self, keep: &VertexSet) -> Result<Deletion> {
        keep.check_range(self.vertex_count())?;
        let complement: VertexSet = self.vertices().filter(|&v| !keep.contains(v)).collect();
        self.remove_vertices(&complement)
    }

    /// Connected components, each ascending, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut members = Vec::new();
            while let Some(u) = queue.pop_front() {
                members.push(u);
                for &w in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            components.push(VertexSet::from(members));
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Number of edges with at least one end in `x`.
    pub fn edges_touching(&self, x: &VertexSet) -> usize {
        let inside = x
            .iter()
            .map(|v| self.adjacency[v].iter().filter(|&&w| x.contains(w)).count())
            .sum::<usize>()
            / 2;
        let degree_sum: usize = x.iter().map(|v| self.degree(v)).sum();
        degree_sum - inside
    }

    /// Disjoint union; vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.vertex_count();
        let mut adjacency = self.adjacency.clone();
        adjacency.extend(
            other.adjacency.iter().map(|nbrs| nbrs.iter().map(|&w| w + shift).collect()),
        );
        Graph::from_sorted_adjacency(adjacency)
    }

    /// Relabel vertex `v` as `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.vertex_count();
        let mut check = vec![false; n];
        if perm.len() != n {
            return Err(Error::InvalidParameter(format!(
                "permutation has length {}, graph has {n} vertices",
                perm.len()
            )));
        }
        for &p in perm {
            if p >= n || std::mem::replace(&mut check[p], true) {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
        }
        let edges: Vec<(usize, usize)> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edge_list(n, &edges)
    }
}
