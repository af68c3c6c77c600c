//! Exact maximum independent set by branch and bound.

use crate::error::Result;
use crate::graph::{Graph, VertexSet};

/// Above this many vertices the search may become slow.
pub const SOFT_VERTEX_LIMIT: usize = 40;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub alpha: usize,
    pub witness: VertexSet,
    pub nodes_explored: u64,
}

/// True iff no edge of `g` has both ends in `s`.
pub fn is_independent_set(g: &Graph, s: &VertexSet) -> Result<bool> {
    s.check_range(g.vertex_count())?;
    Ok(s.iter().all(|v| g.neighbors(v).iter().all(|&w| !s.contains(w))))
}

#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn full(n: usize) -> Self {
        let mut b = Bits::empty(n);
        for v in 0..n {
            b.set(v);
        }
        b
    }

    fn set(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }

    fn clear(&mut self, v: usize) {
        self.0[v / 64] &= !(1 << (v % 64));
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn first(&self) -> Option<usize> {
        self.0.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn and_not(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & !b).collect())
    }

    fn and_count(&self, other: &Bits) -> usize {
        self.0.iter().zip(&other.0).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                (w != 0).then(|| {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    i * 64 + t
                })
            })
        })
    }
}

struct Search {
    /// Neighbourhoods.
    nbrs: Vec<Bits>,
    /// Closed neighbourhoods.
    closed: Vec<Bits>,
    best: Vec<usize>,
    current: Vec<usize>,
    nodes: u64,
}

impl Search {
    /// Greedy partition of `cand` into cliques; the count bounds α from above.
    fn clique_cover_bound(&self, cand: &Bits) -> usize {
        let mut rest = cand.clone();
        let mut cliques = 0;
        while let Some(u) = rest.first() {
            cliques += 1;
            rest.clear(u);
            let mut pool = rest.and(&self.nbrs[u]);
            while let Some(w) = pool.first() {
                rest.clear(w);
                pool = pool.and(&self.nbrs[w]);
            }
        }
        cliques
    }

    fn run(&mut self, cand: Bits) {
        self.nodes += 1;
        if cand.is_empty() {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return;
        }
        if self.current.len() + cand.count() <= self.best.len()
            || self.current.len() + self.clique_cover_bound(&cand) <= self.best.len()
        {
            return;
        }

        // A vertex of degree at most one lies in some maximum independent set.
        let mut branch = None;
        let mut branch_degree = 0;
        for v in cand.iter() {
            let d = cand.and_count(&self.nbrs[v]);
            if d <= 1 {
                self.include(v, &cand);
                return;
            }
            if branch.is_none() || d > branch_degree {
                branch = Some(v);
                branch_degree = d;
            }
        }
        let v = branch.expect("candidate set is nonempty");
        self.include(v, &cand);
        let mut without = cand;
        without.clear(v);
        self.run(without);
    }

    fn include(&mut self, v: usize, cand: &Bits) {
        self.current.push(v);
        let next = cand.and_not(&self.closed[v]);
        self.run(next);
        self.current.pop();
    }
}

/// Exact α(G) with a maximum independent set as witness. Deterministic:
/// ties are broken towards smaller vertex indices.
pub fn max_independent_set_exact(g: &Graph) -> OracleResult {
    let n = g.vertex_count();
    let nbrs: Vec<Bits> = g
        .vertices()
        .map(|v| {
            let mut b = Bits::empty(n);
            g.neighbors(v).iter().for_each(|&w| b.set(w));
            b
        })
        .collect();
    let closed = nbrs
        .iter()
        .enumerate()
        .map(|(v, b)| {
            let mut c = b.clone();
            c.set(v);
            c
        })
        .collect();
    let mut search = Search { nbrs, closed, best: Vec::new(), current: Vec::new(), nodes: 0 };
    search.run(Bits::full(n));
    let witness = VertexSet::from(search.best);
    OracleResult { alpha: witness.len(), witness, nodes_explored: search.nodes }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::figure1_graph;
    use proptest::prelude::*;

    /// Full subset enumeration over bitmasks.
    fn alpha_by_enumeration(g: &Graph) -> usize {
        let n = g.vertex_count();
        assert!(n <= 20);
        let adj: Vec<u32> = g.vertices().map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | 1 << w)).collect();
        (0u32..1 << n)
            .filter(|&s| (0..n).all(|v| s & (1 << v) == 0 || adj[v] & s == 0))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edge_list(10, &e).unwrap()
    }

    #[test]
    fn known_values() {
        let fig = max_independent_set_exact(&figure1_graph());
        assert_eq!(fig.alpha, 5);
        assert!(is_independent_set(&figure1_graph(), &fig.witness).unwrap());

        let c5 = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(max_independent_set_exact(&c5).alpha, 2);

        let p = petersen();
        assert_eq!(max_independent_set_exact(&p).alpha, 4);
        assert_eq!(alpha_by_enumeration(&p), 4);

        assert_eq!(max_independent_set_exact(&Graph::empty(0)).alpha, 0);
        assert_eq!(max_independent_set_exact(&Graph::empty(70)).alpha, 70);
    }

    #[test]
    fn independence_check() {
        let t = Graph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(is_independent_set(&t, &VertexSet::from([0])).unwrap());
        assert!(!is_independent_set(&t, &VertexSet::from([0, 1])).unwrap());
        assert!(is_independent_set(&t, &VertexSet::from([5])).is_err());
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..=14, any::<u64>(), 0.0f64..0.8).prop_map(|(n, seed, p)| {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut edges = Vec::new();
            for v in 1..n {
                for u in 0..v {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edge_list(n, &edges).unwrap()
        })
    }

    proptest! {
        #[test]
        fn agrees_with_enumeration(g in arb_graph()) {
            let r = max_independent_set_exact(&g);
            prop_assert_eq!(r.alpha, alpha_by_enumeration(&g));
            prop_assert!(is_independent_set(&g, &r.witness).unwrap());
        }

        #[test]
        fn additive_over_disjoint_union(g in arb_graph(), h in arb_graph()) {
            let u = g.disjoint_union(&h);
            prop_assert_eq!(
                max_independent_set_exact(&u).alpha,
                max_independent_set_exact(&g).alpha + max_independent_set_exact(&h).alpha
            );
        }

        #[test]
        fn invariant_under_relabeling(g in arb_graph(), seed in any::<u64>()) {
            use rand::{seq::SliceRandom, SeedableRng};
            let mut perm: Vec<usize> = g.vertices().collect();
            perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            let h = g.relabel(&perm).unwrap();
            prop_assert_eq!(max_independent_set_exact(&h).alpha, max_independent_set_exact(&g).alpha);
        }
    }
}
