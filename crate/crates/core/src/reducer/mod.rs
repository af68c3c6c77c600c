//! The reduction engine.
//!
//! A forward pass repeatedly deletes a reducible configuration `X` from the
//! current graph, always taking the first rule that applies:
//!
//! | rule | configuration                               | `X`          |
//! |------|---------------------------------------------|--------------|
//! | R1   | isolated vertex                             | `{v}`        |
//! | R2   | degree-1 vertex `v` with neighbour `u`      | `{v, u}`     |
//! | R3   | triangle component                          | component    |
//! | R4   | 2-chain component                           | component    |
//! | R5   | degree-2 vertex in a triangle `J`, min Φ(J) | `V(J)`       |
//! | R6   | other degree-2 vertex                       | `N[v]`       |
//! | R7   | vertex of degree ≥ 5                        | `{v}`        |
//! | R8   | degree-3 vertex with a degree-4 neighbour   | `N[v]`       |
//! | R9   | degree-4 vertex                             | `N[v]`       |
//! | BASE | cubic component, 3-coloured                 | component    |
//!
//! A backward pass then builds the independent set from the last deletion to
//! the first, adding to each `X` a largest subset compatible with what the
//! later deletions already chose (for BASE, the largest colour class).

pub mod brooks;
mod certificate;
pub mod ledger;

pub use brooks::{brooks_three_coloring, is_proper};
pub use certificate::{verify_certificate, Certificate, ReductionStep, Rule, Verdict};

use crate::constants::{check_constants, guarantee, ConstantsPair};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::oracle::max_independent_set_exact;
use crate::scalar::ExactScalar;
use crate::structure::{
    difficult_components, find_forbidden, lambda, phi, triangles_at, DifficultReport, GraphClass,
};

/// Largest `S ⊆ x` that is independent and has no neighbour in `chosen`.
///
/// Exhaustive over subsets of the admissible part of `x`; the first maximum
/// subset in increasing bitmask order is returned.
pub fn extend_local(g: &Graph, x: &VertexSet, chosen: &VertexSet) -> Result<VertexSet> {
    x.check_range(g.vertex_count())?;
    chosen.check_range(g.vertex_count())?;
    let admissible: Vec<usize> =
        x.iter().filter(|&v| !chosen.contains(v) && g.neighbors(v).iter().all(|&w| !chosen.contains(w))).collect();
    let k = admissible.len();
    if k > 20 {
        let sub = g.induced(&admissible.iter().copied().collect())?;
        let best = max_independent_set_exact(&sub.graph);
        return Ok(best.witness.iter().map(|v| sub.original(v)).collect());
    }
    let conflicts: Vec<u32> = admissible
        .iter()
        .map(|&v| (0..k).filter(|&j| g.has_edge(v, admissible[j])).fold(0, |m, j| m | 1 << j))
        .collect();
    let mut best = 0u32;
    for mask in 0u32..1 << k {
        if mask.count_ones() <= best.count_ones() {
            continue;
        }
        if (0..k).all(|i| mask & (1 << i) == 0 || conflicts[i] & mask == 0) {
            best = mask;
        }
    }
    Ok((0..k).filter(|&i| best & (1 << i) != 0).map(|i| admissible[i]).collect())
}

/// A rule firing in the current graph, before translation to original labels.
struct Firing {
    rule: Rule,
    removed: VertexSet,
    /// Fixed extension (BASE only), in current labels.
    extension: Option<VertexSet>,
}

fn first_vertex(g: &Graph, pred: impl Fn(usize) -> bool) -> Option<usize> {
    g.vertices().find(|&v| pred(v))
}

fn closed_neighborhood(g: &Graph, v: usize) -> VertexSet {
    g.neighbors(v).iter().copied().chain([v]).collect()
}

fn select_rule(g: &Graph, report: &DifficultReport) -> Result<Firing> {
    let fire = |rule, removed| Ok(Firing { rule, removed, extension: None });
    if let Some(v) = first_vertex(g, |v| g.degree(v) == 0) {
        return fire(Rule::R1, VertexSet::singleton(v));
    }
    if let Some(v) = first_vertex(g, |v| g.degree(v) == 1) {
        return fire(Rule::R2, closed_neighborhood(g, v));
    }
    if let Some(t) = report.triangle_components.first() {
        return fire(Rule::R3, t.clone());
    }
    if let Some(c) = report.two_chain_components.first() {
        return fire(Rule::R4, c.clone());
    }

    let mut best: Option<(usize, VertexSet)> = None;
    for v in g.vertices().filter(|&v| g.degree(v) == 2) {
        for t in triangles_at(g, v) {
            let boundary = phi(g, &t)?;
            if best.as_ref().is_none_or(|(b, bt)| (boundary, &t) < (*b, bt)) {
                best = Some((boundary, t));
            }
        }
    }
    if let Some((_, t)) = best {
        return fire(Rule::R5, t);
    }
    if let Some(v) = first_vertex(g, |v| g.degree(v) == 2) {
        return fire(Rule::R6, closed_neighborhood(g, v));
    }
    if let Some(v) = first_vertex(g, |v| g.degree(v) >= 5) {
        return fire(Rule::R7, VertexSet::singleton(v));
    }
    if let Some(v) = first_vertex(g, |v| g.degree(v) == 3 && g.neighbors(v).iter().any(|&w| g.degree(w) == 4)) {
        return fire(Rule::R8, closed_neighborhood(g, v));
    }
    if let Some(v) = first_vertex(g, |v| g.degree(v) == 4) {
        return fire(Rule::R9, closed_neighborhood(g, v));
    }

    // Everything left is cubic; colour the first component.
    let component = g.connected_components().into_iter().next().expect("graph is nonempty");
    let sub = g.induced(&component)?;
    let colors = brooks_three_coloring(&sub.graph)?;
    let largest = (0u8..3)
        .max_by_key(|&c| (colors.iter().filter(|&&x| x == c).count(), std::cmp::Reverse(c)))
        .expect("three colours");
    let class = sub.graph.vertices().filter(|&v| colors[v] == largest).map(|v| sub.original(v)).collect();
    Ok(Firing { rule: Rule::Base, removed: component, extension: Some(class) })
}

/// Reduce `g` to nothing, returning a certified independent set of size at
/// least `⌈n − a·n − b·m − b·λ(G)⌉`.
pub fn reduce<T: ExactScalar>(g: &Graph, c: &ConstantsPair<T>) -> Result<Certificate<T>> {
    if let Some(w) = find_forbidden(g, GraphClass::T4) {
        return Err(Error::Forbidden(Box::new(w)));
    }
    let check = check_constants(c)?;
    if !check.feasible {
        return Err(Error::InvalidConstants(format!("{c} violates constraints {:?}", check.violated)));
    }
    if !ledger::supports_sequential_absorption(c) {
        return Err(Error::NotSupported(format!("sequential absorption does not cover {c}")));
    }

    // Forward pass.
    let mut current = g.clone();
    let mut original_of: Vec<usize> = g.vertices().collect();
    let mut report = difficult_components(&current);
    let mut steps: Vec<ReductionStep> = Vec::new();
    let mut fixed: Vec<Option<VertexSet>> = Vec::new();
    while current.vertex_count() > 0 {
        let firing = select_rule(&current, &report)?;
        let deletion = current.remove_vertices(&firing.removed)?;
        let next_report = difficult_components(&deletion.graph);
        let to_original = |s: &VertexSet| -> VertexSet { s.iter().map(|v| original_of[v]).collect() };
        steps.push(ReductionStep {
            rule: firing.rule,
            removed: to_original(&firing.removed),
            extension: VertexSet::new(),
            n: firing.removed.len(),
            m: deletion.edges_removed,
            lambda_change: next_report.lambda as i64 - report.lambda as i64,
            a: 0,
        });
        fixed.push(firing.extension.as_ref().map(to_original));
        original_of = deletion.old_of_new.iter().map(|&v| original_of[v]).collect();
        current = deletion.graph;
        report = next_report;
    }

    // Backward pass.
    let mut chosen = VertexSet::new();
    for (step, fixed) in steps.iter_mut().zip(fixed).rev() {
        let extension = match fixed {
            Some(ext) => ext,
            None => extend_local(g, &step.removed, &chosen)?,
        };
        step.a = extension.len();
        chosen = chosen.union(&extension);
        step.extension = extension;
    }

    let guarantee_value = guarantee(g.vertex_count(), g.edge_count(), lambda(g), c);
    let cert = Certificate { constants: c.clone(), guarantee_value, steps, independent_set: chosen };
    let required = ExactScalar::ceil(&cert.guarantee_value);
    if T::from_count(cert.independent_set.len()) < required {
        return Err(Error::GuaranteeViolation { found: cert.independent_set.len(), required: required.to_string() });
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{figure1_graph, random_valid_graph};
    use crate::oracle::is_independent_set;
    use crate::Rational;

    fn graph(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edge_list(n, e).unwrap()
    }

    fn reference() -> ConstantsPair<Rational> {
        ConstantsPair::reference()
    }

    fn rules(cert: &Certificate<Rational>) -> Vec<Rule> {
        cert.steps.iter().map(|s| s.rule).collect()
    }

    #[test]
    fn extend_local_examples() {
        let g = graph(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(extend_local(&g, &VertexSet::from([0]), &VertexSet::new()).unwrap(), VertexSet::from([0]));
        // Closed neighbourhood of a degree-3 vertex with independent neighbours.
        let n0 = VertexSet::from([0, 1, 2, 3]);
        assert_eq!(extend_local(&g, &n0, &VertexSet::new()).unwrap(), VertexSet::from([1, 2, 3]));

        // Triangle 0,1,2 with 3 adjacent to 0 and 4 adjacent to 1.
        let g = graph(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)]);
        let t = VertexSet::from([0, 1, 2]);
        assert_eq!(extend_local(&g, &t, &VertexSet::from([3, 4])).unwrap(), VertexSet::from([2]));
    }

    #[test]
    fn triangle_uses_r3() {
        let t = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        let cert = reduce(&t, &reference()).unwrap();
        assert_eq!(rules(&cert), vec![Rule::R3]);
        assert_eq!(cert.independent_set.len(), 1);
        assert_eq!(cert.guarantee_value, Rational::ratio(33, 34));
    }

    #[test]
    fn figure1() {
        let g = figure1_graph();
        let cert = reduce(&g, &reference()).unwrap();
        assert_eq!(cert.guarantee_value, Rational::ratio(81, 17));
        assert!(cert.independent_set.len() >= 5);
        assert!(is_independent_set(&g, &cert.independent_set).unwrap());
        assert!(verify_certificate(&g, &cert).is_valid());
    }

    #[test]
    fn petersen_uses_base() {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        let p = graph(10, &e);
        let cert = reduce(&p, &reference()).unwrap();
        assert_eq!(rules(&cert), vec![Rule::Base]);
        assert_eq!(cert.guarantee_value, Rational::ratio(105, 34));
        assert_eq!(cert.independent_set.len(), 4);
    }

    #[test]
    fn r5_then_r4_on_a_triangle_hanging_off_a_two_chain() {
        // Triangle 6,7,8 whose vertex 6 is joined to vertex 0 of a 2-chain.
        let g = graph(
            9,
            &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5), (6, 7), (7, 8), (6, 8), (0, 6)],
        );
        let cert = reduce(&g, &reference()).unwrap();
        assert_eq!(rules(&cert)[..2], [Rule::R5, Rule::R4]);
        let (r5, r4) = (&cert.steps[0], &cert.steps[1]);
        assert_eq!((r5.n, r5.m, r5.lambda_change), (3, 4, 1));
        assert_eq!((r4.n, r4.m, r4.lambda_change), (6, 7, -1));
        assert_eq!(cert.independent_set.len(), 3);
        assert!(verify_certificate(&g, &cert).is_valid());
    }

    #[test]
    fn high_degree_vertex_uses_r7() {
        // K3,5: the three vertices of the small side have degree 5.
        let mut e = vec![];
        for u in 0..3 {
            for v in 3..8 {
                e.push((u, v));
            }
        }
        let g = graph(8, &e);
        let cert = reduce(&g, &reference()).unwrap();
        assert_eq!(cert.steps[0].rule, Rule::R7);
        assert_eq!((cert.steps[0].n, cert.steps[0].m), (1, 5));
        assert_eq!(cert.independent_set.len(), 5);
        assert!(verify_certificate(&g, &cert).is_valid());
    }

    #[test]
    fn precondition_and_constants_errors() {
        let k4 = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!(matches!(reduce(&k4, &reference()), Err(Error::Forbidden(_))));
        let tiny = ConstantsPair { a: Rational::ratio(1, 100), b: Rational::ratio(1, 100) };
        assert!(matches!(reduce(&graph(1, &[]), &tiny), Err(Error::InvalidConstants(_))));
        let zero = ConstantsPair { a: Rational::ratio(0, 1), b: Rational::ratio(1, 1) };
        assert!(matches!(reduce(&graph(1, &[]), &zero), Err(Error::InvalidConstants(_))));
    }

    #[test]
    fn empty_graph() {
        let cert = reduce(&Graph::empty(0), &reference()).unwrap();
        assert!(cert.steps.is_empty());
        assert!(verify_certificate(&Graph::empty(0), &cert).is_valid());
    }

    #[test]
    fn random_instances_meet_the_bound() {
        for seed in 0..40 {
            for (n, p) in [(12, 0.3), (16, 0.25), (18, 0.4)] {
                let g = random_valid_graph(n, p, GraphClass::T4, seed).unwrap();
                let cert = reduce(&g, &reference()).unwrap();
                let verdict = verify_certificate(&g, &cert);
                assert!(verdict.is_valid(), "seed {seed}: {verdict:?}");
            }
        }
    }
}
