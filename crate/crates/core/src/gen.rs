//! Named graphs and seeded random instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::structure::{find_forbidden, GraphClass};

/// Labels of [`figure1_graph`], in vertex order.
pub const FIGURE1_LABELS: [&str; 16] =
    ["v", "t", "b", "r", "t1", "t2", "u1", "u2", "v1", "v2", "v3", "v4", "b1", "b2", "u3", "u4"];

const FIGURE1_EDGES: [(usize, usize); 26] = [
    (0, 8), (8, 4), (4, 1), (0, 9), (9, 5), (5, 1), (8, 6), (6, 4), (9, 7), (7, 5), (6, 7),
    (0, 10), (10, 12), (12, 2), (0, 11), (11, 13), (13, 2), (10, 14), (14, 12), (11, 15), (15, 13), (14, 15),
    (3, 0), (3, 1), (3, 2), (1, 2),
];

/// The 16-vertex planar graph without 4-cycles whose independence number is 5.
pub fn figure1_graph() -> Graph {
    Graph::from_edge_list(16, &FIGURE1_EDGES).expect("fixed edge list is simple")
}

/// Cartesian product of a `k`-cycle with an `m`-vertex path. Vertex
/// `layer * k + i` is position `i` on cycle copy `layer`.
pub fn cylinder_grid(k: usize, m: usize) -> Result<Graph> {
    if k < 3 || m < 2 {
        return Err(Error::InvalidParameter(format!("cylinder grid needs k >= 3 and m >= 2, got k={k}, m={m}")));
    }
    let mut edges = Vec::with_capacity(k * m + k * (m - 1));
    for layer in 0..m {
        for i in 0..k {
            let v = layer * k + i;
            edges.push((v, layer * k + (i + 1) % k));
            if layer + 1 < m {
                edges.push((v, v + k));
            }
        }
    }
    Graph::from_edge_list(k * m, &edges)
}

/// G(n, p) sample repaired into `class`: while a forbidden configuration
/// exists, delete the smallest edge of its cycle that is not a triangle
/// edge (or the smallest triangle edge if there is none).
pub fn random_valid_graph(n: usize, p: f64, class: GraphClass, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("random graph needs n >= 1".into()));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let mut g = Graph::from_edge_list(n, &edges)?;
    while let Some(w) = find_forbidden(&g, class) {
        let k = w.cycle.len();
        let cycle_edges = (0..k).map(|i| {
            let (a, b) = (w.cycle[i], w.cycle[(i + 1) % k]);
            (a.min(b), a.max(b))
        });
        let (outside, inside): (Vec<_>, Vec<_>) =
            cycle_edges.partition(|&(a, b)| !(w.triangle.contains(a) && w.triangle.contains(b)));
        let victim = outside.into_iter().min().or_else(|| inside.into_iter().min()).expect("cycle has edges");
        edges.retain(|&(a, b)| (a.min(b), a.max(b)) != victim);
        g = Graph::from_edge_list(n, &edges)?;
    }
    Ok(g)
}

/// A generator invocation.
#[derive(Clone, Debug, PartialEq)]
pub enum GenSpec {
    Figure1,
    Prism { k: usize, m: usize },
    Random { n: usize, p: f64, class: GraphClass, seed: u64 },
}

impl GenSpec {
    pub fn generate(&self) -> Result<Graph> {
        match *self {
            GenSpec::Figure1 => Ok(figure1_graph()),
            GenSpec::Prism { k, m } => cylinder_grid(k, m),
            GenSpec::Random { n, p, class, seed } => random_valid_graph(n, p, class, seed),
        }
    }
}
