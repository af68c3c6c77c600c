//! Planar edge-density bounds for the two graph classes and the
//! independence-ratio bounds they imply.
//!
//! Planarity is never tested. A graph that exceeds the density bound cannot
//! be planar in its class; one that meets it may or may not be.

use std::fmt;

use crate::constants::ConstantsPair;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::ExactScalar;
use crate::structure::{find_forbidden, GraphClass};

/// Maximum average-degree coefficient: planar graphs in the class with
/// `n ≥ 4` vertices have at most `density · (n − 2)` edges.
pub fn edge_density<T: ExactScalar>(class: GraphClass) -> T {
    match class {
        GraphClass::T4 => T::ratio(15, 7),
        GraphClass::T35 => T::ratio(2, 1),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityReport<T> {
    pub class: GraphClass,
    pub n: usize,
    pub m: usize,
    /// `density · (n − 2)`.
    pub bound: T,
    /// False only when `n ≥ 4` and `m > bound`.
    pub satisfied: bool,
    /// Whether the edge bound applies at all (`n ≥ 4`).
    pub applicable: bool,
    /// Ratio bound `1 / (1 − a − density·b)` at the reference constants.
    pub ratio_bound: T,
    /// The caller promised planarity but the density bound refutes it.
    pub planarity_refuted: bool,
}

impl<T: ExactScalar> fmt::Display for DensityReport<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "class: {}", self.class)?;
        writeln!(f, "n: {}", self.n)?;
        writeln!(f, "m: {}", self.m)?;
        writeln!(f, "bound: {}", self.bound)?;
        writeln!(f, "applicable: {}", self.applicable)?;
        writeln!(f, "satisfied: {}", self.satisfied)?;
        write!(f, "ratio_bound: {}", self.ratio_bound)?;
        if self.planarity_refuted {
            write!(f, "\nnote: input cannot be planar in this class")?;
        }
        Ok(())
    }
}

pub fn check_density<T: ExactScalar>(g: &Graph, class: GraphClass, planar_promise: bool) -> Result<DensityReport<T>> {
    if let Some(w) = find_forbidden(g, class) {
        return Err(Error::Forbidden(Box::new(w)));
    }
    let (n, m) = (g.vertex_count(), g.edge_count());
    let bound = edge_density::<T>(class) * (T::from_count(n) - T::from_count(2));
    let applicable = n >= 4;
    let satisfied = !applicable || T::from_count(m) <= bound;
    let ratio_bound = ratio_bound_for(class, &ConstantsPair::reference())?;
    Ok(DensityReport {
        class,
        n,
        m,
        bound,
        satisfied,
        applicable,
        ratio_bound,
        planarity_refuted: planar_promise && !satisfied,
    })
}

/// `1 / (1 − a − density·b)`. Feasibility of `c` is the caller's concern.
pub fn ratio_bound_for<T: ExactScalar>(class: GraphClass, c: &ConstantsPair<T>) -> Result<T> {
    let denom = T::one() - c.a.clone() - edge_density::<T>(class) * c.b.clone();
    if !denom.is_positive() {
        return Err(Error::InvalidConstants(format!("1 - a - {}b = {denom} is not positive", edge_density::<T>(class))));
    }
    Ok(denom.recip())
}
