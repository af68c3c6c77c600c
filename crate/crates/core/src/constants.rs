//! The constants `(a, b)` of the lower bound
//! `α(G) ≥ n − (a·n + b·m + b·λ(G))`, the nine linear conditions they must
//! satisfy, and a vertex-enumeration optimizer for the two-variable program.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::ExactScalar;

/// One condition `a_coeff·a + b_coeff·b ≥ rhs`, numbered from 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint<T> {
    pub index: usize,
    pub a_coeff: T,
    pub b_coeff: T,
    pub rhs: T,
    /// The reducible configuration the condition pays for.
    pub origin: &'static str,
}

impl<T: ExactScalar> Constraint<T> {
    /// `a_coeff·a + b_coeff·b − rhs`; nonnegative iff satisfied.
    pub fn slack(&self, c: &ConstantsPair<T>) -> T {
        self.a_coeff.clone() * c.a.clone() + self.b_coeff.clone() * c.b.clone() - self.rhs.clone()
    }
}

impl<T: ExactScalar> fmt::Display for Constraint<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) {}a + {}b >= {}", self.index, self.a_coeff, self.b_coeff, self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintSystem<T> {
    constraints: Vec<Constraint<T>>,
}

// (a, b, rhs) as (num, den) pairs. The last row keeps its fractional form.
type Frac = (i64, i64);

const TABLE: [(Frac, Frac, Frac, &str); 9] = [
    ((2, 1), (1, 1), (1, 1), "degree-1 vertex"),
    ((3, 1), (4, 1), (2, 1), "degree-2 vertex / difficult component"),
    ((9, 1), (11, 1), (6, 1), "degree-2 vertex in a triangle absorbing a 2-chain"),
    ((1, 1), (5, 1), (1, 1), "vertex of degree at least 5"),
    ((4, 1), (9, 1), (3, 1), "degree-3 vertex with a degree-4 neighbour"),
    ((10, 1), (16, 1), (7, 1), "degree-3/degree-4 with difficult components"),
    ((13, 1), (20, 1), (8, 1), "degree-3/degree-4 with a triangle and a 2-chain"),
    ((5, 1), (14, 1), (4, 1), "degree-4 vertex with degree-4 neighbours"),
    ((1, 1), (3, 2), (2, 3), "3-regular base case"),
];

impl<T: ExactScalar> ConstraintSystem<T> {
    /// The nine conditions of the lower-bound theorem.
    pub fn standard() -> Self {
        let constraints = TABLE
            .iter()
            .enumerate()
            .map(|(i, &(p, q, r, origin))| Constraint {
                index: i + 1,
                a_coeff: T::ratio(p.0, p.1),
                b_coeff: T::ratio(q.0, q.1),
                rhs: T::ratio(r.0, r.1),
                origin,
            })
            .collect();
        ConstraintSystem { constraints }
    }

    pub fn constraints(&self) -> &[Constraint<T>] {
        &self.constraints
    }

    pub fn len(&self) -> usize {
        self.constraints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.constraints.is_empty()
    }

    pub fn is_satisfied(&self, c: &ConstantsPair<T>) -> bool {
        self.constraints.iter().all(|k| !k.slack(c).is_negative())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConstantsPair<T> {
    pub a: T,
    pub b: T,
}

impl<T: ExactScalar> ConstantsPair<T> {
    pub fn new(a: T, b: T) -> Result<Self> {
        let c = ConstantsPair { a, b };
        c.ensure_positive()?;
        Ok(c)
    }

    /// `a = 19/34`, `b = 3/34`.
    pub fn reference() -> Self {
        ConstantsPair { a: T::ratio(19, 34), b: T::ratio(3, 34) }
    }

    pub(crate) fn ensure_positive(&self) -> Result<()> {
        if !self.a.is_positive() || !self.b.is_positive() {
            return Err(Error::InvalidConstants(format!(
                "a and b must be positive, got a = {}, b = {}",
                self.a, self.b
            )));
        }
        Ok(())
    }
}

impl<T: ExactScalar> fmt::Display for ConstantsPair<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a = {}, b = {}", self.a, self.b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstantsCheck<T> {
    pub feasible: bool,
    /// 1-based indices of constraints holding with equality.
    pub tight: Vec<usize>,
    pub violated: Vec<usize>,
    /// Slack of every constraint, in order.
    pub slacks: Vec<T>,
}

pub fn check_constants<T: ExactScalar>(c: &ConstantsPair<T>) -> Result<ConstantsCheck<T>> {
    c.ensure_positive()?;
    let system = ConstraintSystem::<T>::standard();
    let slacks: Vec<T> = system.constraints().iter().map(|k| k.slack(c)).collect();
    let pick = |pred: fn(&T) -> bool| -> Vec<usize> {
        slacks.iter().enumerate().filter(|(_, s)| pred(s)).map(|(i, _)| i + 1).collect()
    };
    let tight = pick(|s| s.is_zero());
    let violated = pick(|s| s.is_negative());
    Ok(ConstantsCheck { feasible: violated.is_empty(), tight, violated, slacks })
}

/// `n − (a·n + b·m + b·λ)`.
pub fn guarantee<T: ExactScalar>(n: usize, m: usize, lambda: usize, c: &ConstantsPair<T>) -> T {
    let n_ = T::from_count(n);
    n_.clone() - (c.a.clone() * n_ + c.b.clone() * T::from_count(m) + c.b.clone() * T::from_count(lambda))
}

/// `⌈guarantee⌉` as an integer (never below zero).
pub fn guarantee_ceiling<T: ExactScalar>(n: usize, m: usize, lambda: usize, c: &ConstantsPair<T>) -> usize {
    let g = ExactScalar::ceil(&guarantee(n, m, lambda, c));
    g.to_integer_i64().map_or(0, |v| v.max(0) as usize)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpOptimum<T> {
    /// The lexicographically smallest optimal vertex with `a, b > 0`.
    pub constants: ConstantsPair<T>,
    /// `1 − a − density·b` at `constants`.
    pub objective: T,
    /// Every strictly positive vertex attaining `objective`.
    pub optimal_vertices: Vec<ConstantsPair<T>>,
    /// Set when a vertex on the boundary `a = 0` or `b = 0` does strictly
    /// better than every positive vertex; holds that vertex and its value.
    pub boundary_optimum: Option<(ConstantsPair<T>, T)>,
}

/// Maximize `1 − a − density·b` over the nine conditions with `a, b > 0` by
/// enumerating the vertices of the feasible polygon.
pub fn optimize_for_density<T: ExactScalar>(density: &T) -> Result<LpOptimum<T>> {
    if density.is_negative() {
        return Err(Error::InvalidParameter(format!("density must be nonnegative, got {density}")));
    }
    let system = ConstraintSystem::<T>::standard();
    let objective = |c: &ConstantsPair<T>| T::one() - c.a.clone() - density.clone() * c.b.clone();

    // Lines of the polygon: the nine conditions plus the axes a = 0, b = 0.
    let mut lines: Vec<(T, T, T)> = system
        .constraints()
        .iter()
        .map(|k| (k.a_coeff.clone(), k.b_coeff.clone(), k.rhs.clone()))
        .collect();
    lines.push((T::one(), T::zero(), T::zero()));
    lines.push((T::zero(), T::one(), T::zero()));

    let mut vertices: Vec<ConstantsPair<T>> = Vec::new();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            let (p1, q1, r1) = &lines[i];
            let (p2, q2, r2) = &lines[j];
            let det = p1.clone() * q2.clone() - p2.clone() * q1.clone();
            if det.is_zero() {
                continue;
            }
            let a = (r1.clone() * q2.clone() - r2.clone() * q1.clone()) / det.clone();
            let b = (p1.clone() * r2.clone() - p2.clone() * r1.clone()) / det;
            let c = ConstantsPair { a, b };
            if c.a.is_negative() || c.b.is_negative() || !system.is_satisfied(&c) {
                continue;
            }
            if !vertices.contains(&c) {
                vertices.push(c);
            }
        }
    }
    vertices.sort_by(|x, y| (&x.a, &x.b).cmp(&(&y.a, &y.b)));

    let (positive, boundary): (Vec<_>, Vec<_>) =
        vertices.into_iter().partition(|c| c.a.is_positive() && c.b.is_positive());
    let best = positive.iter().map(&objective).max().ok_or(Error::Infeasible)?;
    let optimal_vertices: Vec<_> = positive.into_iter().filter(|c| objective(c) == best).collect();
    let boundary_optimum = boundary
        .into_iter()
        .map(|c| {
            let v = objective(&c);
            (c, v)
        })
        .filter(|(_, v)| *v > best)
        .max_by(|x, y| x.1.cmp(&y.1));
    Ok(LpOptimum { constants: optimal_vertices[0].clone(), objective: best, optimal_vertices, boundary_optimum })
}
