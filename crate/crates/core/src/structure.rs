//! Short cycles, forbidden configurations, difficult components and boundary
//! counts.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Graph classes the detectors validate against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GraphClass {
    /// No triangle shares an edge with a 4-cycle.
    T4,
    /// No triangle shares an edge with another triangle or with a 5-cycle.
    T35,
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphClass::T4 => "T4",
            GraphClass::T35 => "T35",
        })
    }
}

impl FromStr for GraphClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "T4" => Ok(GraphClass::T4),
            "T35" => Ok(GraphClass::T35),
            _ => Err(Error::InvalidParameter(format!("unknown graph class `{s}` (expected T4 or T35)"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    TriangleTriangle,
    #[serde(rename = "triangle-4cycle")]
    TriangleFourCycle,
    #[serde(rename = "triangle-5cycle")]
    TriangleFiveCycle,
}

impl WitnessKind {
    pub fn cycle_length(self) -> usize {
        match self {
            WitnessKind::TriangleTriangle => 3,
            WitnessKind::TriangleFourCycle => 4,
            WitnessKind::TriangleFiveCycle => 5,
        }
    }

    fn name(self) -> &'static str {
        match self {
            WitnessKind::TriangleTriangle => "triangle-triangle",
            WitnessKind::TriangleFourCycle => "triangle-4cycle",
            WitnessKind::TriangleFiveCycle => "triangle-5cycle",
        }
    }
}

/// A triangle together with a second cycle sharing one of its edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForbiddenWitness {
    pub kind: WitnessKind,
    pub triangle: VertexSet,
    /// Cycle vertices in order; consecutive entries (and last, first) are adjacent.
    pub cycle: Vec<usize>,
    pub shared_edge: (usize, usize),
}

impl ForbiddenWitness {
    /// Re-check the witness against `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let t = self.triangle.as_slice();
        let n = g.vertex_count();
        if t.len() != 3 || t.iter().any(|&v| v >= n) {
            return false;
        }
        if !(g.has_edge(t[0], t[1]) && g.has_edge(t[0], t[2]) && g.has_edge(t[1], t[2])) {
            return false;
        }
        let k = self.cycle.len();
        if k != self.kind.cycle_length() || self.cycle.iter().any(|&v| v >= n) {
            return false;
        }
        let distinct: VertexSet = self.cycle.iter().copied().collect();
        if distinct.len() != k {
            return false;
        }
        if self.kind == WitnessKind::TriangleTriangle && distinct == self.triangle {
            return false;
        }
        let cycle_edges: Vec<(usize, usize)> =
            (0..k).map(|i| ordered(self.cycle[i], self.cycle[(i + 1) % k])).collect();
        if cycle_edges.iter().any(|&(u, v)| !g.has_edge(u, v)) {
            return false;
        }
        let (u, v) = ordered(self.shared_edge.0, self.shared_edge.1);
        self.triangle.contains(u) && self.triangle.contains(v) && u != v && cycle_edges.contains(&(u, v))
    }
}

impl fmt::Display for ForbiddenWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycle: Vec<String> = self.cycle.iter().map(|v| v.to_string()).collect();
        write!(
            f,
            "kind: {}\ntriangle: {}\ncycle: {}\nshared_edge: {} {}",
            self.kind.name(),
            self.triangle,
            cycle.join("-"),
            self.shared_edge.0,
            self.shared_edge.1
        )
    }
}

fn ordered(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Every triangle exactly once, as sorted triples in lexicographic order.
pub fn enumerate_triangles(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for u in g.vertices() {
        let nu = g.neighbors(u);
        for (i, &v) in nu.iter().enumerate().filter(|&(_, &v)| v > u) {
            for &w in &nu[i + 1..] {
                if g.has_edge(v, w) {
                    out.push(VertexSet::from([u, v, w]));
                }
            }
        }
    }
    out
}

/// Triangles through vertex `v`.
pub fn triangles_at(g: &Graph, v: usize) -> Vec<VertexSet> {
    let nv = g.neighbors(v);
    let mut out = Vec::new();
    for (i, &x) in nv.iter().enumerate() {
        for &y in &nv[i + 1..] {
            if g.has_edge(x, y) {
                out.push(VertexSet::from([v, x, y]));
            }
        }
    }
    out.sort();
    out
}

/// A cycle of exactly `k` vertices through edge `e`, as `[u, v, ...]` where
/// `e = (u, v)`. The lexicographically smallest such sequence is returned.
pub fn edge_on_cycle(g: &Graph, e: (usize, usize), k: usize) -> Result<Option<Vec<usize>>> {
    let (u, v) = e;
    if !g.has_edge(u, v) || !g.has_edge(v, u) {
        return Err(Error::InvalidEdge { u, v, reason: "not an edge of the graph" });
    }
    if !(3..=5).contains(&k) {
        return Err(Error::InvalidParameter(format!("cycle length {k} outside 3..=5")));
    }
    let mut path = vec![u, v];
    Ok(extend_path(g, &mut path, k).then_some(path))
}

/// Depth-first extension of a simple path until it has `k` vertices and its
/// last vertex is adjacent to its first.
fn extend_path(g: &Graph, path: &mut Vec<usize>, k: usize) -> bool {
    let last = *path.last().expect("path is nonempty");
    if path.len() == k {
        return g.has_edge(last, path[0]);
    }
    for &w in g.neighbors(last) {
        if path.contains(&w) {
            continue;
        }
        path.push(w);
        if extend_path(g, path, k) {
            return true;
        }
        path.pop();
    }
    false
}

/// The first forbidden configuration for `class`, scanning triangles in
/// lexicographic order, then their edges, then cycle lengths.
pub fn find_forbidden(g: &Graph, class: GraphClass) -> Option<ForbiddenWitness> {
    let kinds: &[WitnessKind] = match class {
        GraphClass::T4 => &[WitnessKind::TriangleFourCycle],
        GraphClass::T35 => &[WitnessKind::TriangleTriangle, WitnessKind::TriangleFiveCycle],
    };
    for triangle in enumerate_triangles(g) {
        let t = triangle.as_slice();
        for (x, y) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
            for &kind in kinds {
                let cycle = match kind {
                    WitnessKind::TriangleTriangle => g
                        .neighbors(x)
                        .iter()
                        .find(|&&z| !triangle.contains(z) && g.has_edge(y, z))
                        .map(|&z| vec![x, y, z]),
                    _ => edge_on_cycle(g, (x, y), kind.cycle_length()).expect("triangle edge exists"),
                };
                if let Some(cycle) = cycle {
                    return Some(ForbiddenWitness { kind, triangle, cycle, shared_edge: (x, y) });
                }
            }
        }
    }
    None
}

pub fn is_in_class(g: &Graph, class: GraphClass) -> bool {
    find_forbidden(g, class).is_none()
}

/// Difficult components: whole components that are a triangle or two
/// disjoint triangles joined by a single edge.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DifficultReport {
    pub triangle_components: Vec<VertexSet>,
    pub two_chain_components: Vec<VertexSet>,
    pub lambda: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DifficultKind {
    Triangle,
    TwoChain,
}

/// Classify a vertex set that is known to be a whole connected component.
pub fn classify_component(g: &Graph, component: &VertexSet) -> Option<DifficultKind> {
    let inner_degree = |v: usize| g.neighbors(v).iter().filter(|&&w| component.contains(w)).count();
    let edges: usize = component.iter().map(inner_degree).sum::<usize>() / 2;
    match (component.len(), edges) {
        (3, 3) => Some(DifficultKind::Triangle),
        (6, 7) => {
            let hubs: Vec<usize> = component.iter().filter(|&v| inner_degree(v) == 3).collect();
            let [p, q] = hubs[..] else { return None };
            if !g.has_edge(p, q) {
                return None;
            }
            let wings = |h: usize, other: usize| -> Option<(usize, usize)> {
                let w: Vec<usize> =
                    g.neighbors(h).iter().copied().filter(|&w| w != other && component.contains(w)).collect();
                (w.len() == 2 && g.has_edge(w[0], w[1])).then(|| (w[0], w[1]))
            };
            let (a, b) = wings(p, q)?;
            let (c, d) = wings(q, p)?;
            let disjoint = a != c && a != d && b != c && b != d;
            disjoint.then_some(DifficultKind::TwoChain)
        }
        _ => None,
    }
}

pub fn difficult_components(g: &Graph) -> DifficultReport {
    let mut report = DifficultReport::default();
    for comp in g.connected_components() {
        match classify_component(g, &comp) {
            Some(DifficultKind::Triangle) => report.triangle_components.push(comp),
            Some(DifficultKind::TwoChain) => report.two_chain_components.push(comp),
            None => {}
        }
    }
    report.lambda = report.triangle_components.len() + report.two_chain_components.len();
    report
}

/// λ(G): the number of difficult components.
pub fn lambda(g: &Graph) -> usize {
    difficult_components(g).lambda
}

/// Number of edges with exactly one end in `h`.
pub fn phi(g: &Graph, h: &VertexSet) -> Result<usize> {
    h.check_range(g.vertex_count())?;
    Ok(h.iter().map(|v| g.neighbors(v).iter().filter(|&&w| !h.contains(w)).count()).sum())
}
