//! Constructive 3-colouring of connected cubic graphs other than `K4`.
//!
//! Every colouring here is a greedy pass over a reversed breadth-first order,
//! so each vertex except the root still has an uncoloured neighbour (its
//! parent) when it is coloured. The three cases differ in how the root is
//! made safe:
//!
//! * bipartite graphs get their 2-colouring directly;
//! * with a cut vertex `c`, each piece `C ∪ {c}` is coloured from `c`, which
//!   has degree below three inside the piece, and the pieces are aligned on
//!   the colour of `c`;
//! * otherwise a root `r` with non-adjacent neighbours `x`, `y` such that
//!   `G − {x, y}` stays connected is chosen; `x` and `y` are precoloured
//!   alike so `r` sees at most two colours.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub type Coloring = Vec<u8>;

/// A proper colouring with colours `{0, 1, 2}`.
pub fn brooks_three_coloring(g: &Graph) -> Result<Coloring> {
    let n = g.vertex_count();
    if n == 0 || !g.is_connected() {
        return Err(Error::PreconditionViolated("graph must be connected and nonempty".into()));
    }
    if let Some(v) = g.vertices().find(|&v| g.degree(v) != 3) {
        return Err(Error::PreconditionViolated(format!("vertex {v} has degree {}, expected 3", g.degree(v))));
    }
    if n == 4 {
        return Err(Error::PreconditionViolated("K4 is not 3-colourable".into()));
    }
    if let Some(c) = bipartition(g) {
        return Ok(c);
    }
    let all = vec![true; n];
    if let Some(cut) = g.vertices().find(|&v| !connected_without(g, &[v])) {
        return color_around_cut_vertex(g, cut);
    }
    for r in g.vertices() {
        let nr = g.neighbors(r);
        for (i, &x) in nr.iter().enumerate() {
            for &y in &nr[i + 1..] {
                if g.has_edge(x, y) || !connected_without(g, &[x, y]) {
                    continue;
                }
                let mut colors = vec![None; n];
                colors[x] = Some(0);
                colors[y] = Some(0);
                greedy_from_root(g, &all, r, &mut colors)?;
                return Ok(colors.into_iter().map(|c| c.expect("all vertices reached")).collect());
            }
        }
    }
    Err(Error::PreconditionViolated("no admissible root found; graph is complete".into()))
}

pub fn is_proper(g: &Graph, colors: &[u8]) -> bool {
    colors.len() == g.vertex_count() && g.edges().all(|(u, v)| colors[u] != colors[v])
}

fn bipartition(g: &Graph) -> Option<Coloring> {
    let mut side = vec![u8::MAX; g.vertex_count()];
    let mut queue = VecDeque::from([0]);
    side[0] = 0;
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if side[w] == u8::MAX {
                side[w] = 1 - side[u];
                queue.push_back(w);
            } else if side[w] == side[u] {
                return None;
            }
        }
    }
    Some(side)
}

fn connected_without(g: &Graph, removed: &[usize]) -> bool {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    removed.iter().for_each(|&v| seen[v] = true);
    let Some(start) = g.vertices().find(|&v| !seen[v]) else { return true };
    let mut stack = vec![start];
    seen[start] = true;
    let mut reached = 1;
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    reached + removed.len() == n
}

fn color_around_cut_vertex(g: &Graph, cut: usize) -> Result<Coloring> {
    let n = g.vertex_count();
    let mut piece_of = vec![usize::MAX; n];
    let mut pieces = 0;
    for start in g.neighbors(cut).iter().copied() {
        if piece_of[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        piece_of[start] = pieces;
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if w != cut && piece_of[w] == usize::MAX {
                    piece_of[w] = pieces;
                    stack.push(w);
                }
            }
        }
        pieces += 1;
    }

    let mut result = vec![0u8; n];
    for p in 0..pieces {
        let members: Vec<bool> = (0..n).map(|v| v == cut || piece_of[v] == p).collect();
        let mut colors = vec![None; n];
        greedy_from_root(g, &members, cut, &mut colors)?;
        let shift = colors[cut].expect("root is coloured");
        for v in (0..n).filter(|&v| members[v] && v != cut) {
            let c = colors[v].expect("piece is connected");
            result[v] = (c + 3 - shift) % 3;
        }
    }
    result[cut] = 0;
    Ok(result)
}

/// Colour every uncoloured member reachable from `root` (inside `members`,
/// avoiding precoloured vertices) greedily in reverse BFS order.
fn greedy_from_root(g: &Graph, members: &[bool], root: usize, colors: &mut [Option<u8>]) -> Result<()> {
    let mut order = vec![root];
    let mut seen: Vec<bool> = colors.iter().map(Option::is_some).collect();
    seen[root] = true;
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &w in g.neighbors(u) {
            if members[w] && !seen[w] {
                seen[w] = true;
                order.push(w);
            }
        }
    }
    for &v in order.iter().rev() {
        let mut used = [false; 3];
        for &w in g.neighbors(v) {
            if let (true, Some(c)) = (members[w], colors[w]) {
                used[c as usize] = true;
            }
        }
        let c = (0..3).find(|&c| !used[c as usize]).ok_or_else(|| {
            Error::PreconditionViolated(format!("vertex {v} sees all three colours"))
        })?;
        colors[v] = Some(c);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edge_list(n, e).unwrap()
    }

    pub(crate) fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        graph(10, &e)
    }

    fn k33() -> Graph {
        let mut e = Vec::new();
        for u in 0..3 {
            for v in 3..6 {
                e.push((u, v));
            }
        }
        graph(6, &e)
    }

    #[test]
    fn bipartite_gets_two_colours() {
        let c = brooks_three_coloring(&k33()).unwrap();
        assert!(is_proper(&k33(), &c));
        assert!(c.iter().all(|&x| x < 2));
    }

    #[test]
    fn petersen_is_three_coloured() {
        let p = petersen();
        let c = brooks_three_coloring(&p).unwrap();
        assert!(is_proper(&p, &c));
        assert!(c.iter().all(|&x| x < 3));
    }

    #[test]
    fn triangular_prism() {
        let prism = graph(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]);
        let c = brooks_three_coloring(&prism).unwrap();
        assert!(is_proper(&prism, &c));
    }

    #[test]
    fn cubic_graph_with_bridges() {
        // Two copies of K4 with one edge subdivided, joined through the
        // subdivision vertices by a path through a central vertex of a
        // third such copy: every vertex has degree 3 and there are bridges.
        let gadget = |o: usize| vec![(o, o + 1), (o, o + 2), (o + 1, o + 2), (o + 1, o + 3), (o + 2, o + 3), (o, o + 4), (o + 3, o + 4)];
        // Gadget: vertices o..o+4, o+4 has degree 2 before linking.
        let mut e = Vec::new();
        e.extend(gadget(0));
        e.extend(gadget(5));
        e.extend(gadget(10));
        // Centre vertex 15 joins the three gadgets.
        e.extend([(4, 15), (9, 15), (14, 15)]);
        let g = graph(16, &e);
        assert!(g.vertices().all(|v| g.degree(v) == 3));
        let c = brooks_three_coloring(&g).unwrap();
        assert!(is_proper(&g, &c));
    }

    #[test]
    fn rejects_bad_inputs() {
        let k4 = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!(matches!(brooks_three_coloring(&k4), Err(Error::PreconditionViolated(_))));
        let c4 = graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        assert!(brooks_three_coloring(&c4).is_err());
        assert!(brooks_three_coloring(&k33().disjoint_union(&k33())).is_err());
    }
}
