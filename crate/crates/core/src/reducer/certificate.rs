//! Certificates: the step ledger of a reduction, its JSON form, and an
//! independent re-check against the input graph.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::ledger::step_value;
use crate::constants::{check_constants, guarantee, ConstantsPair};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::oracle::is_independent_set;
use crate::scalar::ExactScalar;
use crate::structure::lambda;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rule {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    R7,
    R8,
    R9,
    #[serde(rename = "BASE")]
    Base,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rule::Base => f.write_str("BASE"),
            other => write!(f, "{other:?}"),
        }
    }
}

/// One deletion. All vertex labels refer to the input graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStep {
    pub rule: Rule,
    pub removed: VertexSet,
    pub extension: VertexSet,
    /// `|removed|`.
    #[serde(rename = "N")]
    pub n: usize,
    /// Edges lost by the deletion.
    #[serde(rename = "M")]
    pub m: usize,
    /// `λ` after minus `λ` before.
    #[serde(rename = "Lambda")]
    pub lambda_change: i64,
    /// `|extension|`.
    #[serde(rename = "A")]
    pub a: usize,
}

impl ReductionStep {
    pub fn ledger_value<T: ExactScalar>(&self, c: &ConstantsPair<T>) -> T {
        step_value(self.a, self.n, self.m, self.lambda_change, c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate<T> {
    pub constants: ConstantsPair<T>,
    pub guarantee_value: T,
    pub steps: Vec<ReductionStep>,
    pub independent_set: VertexSet,
}

/// Wire form: rationals as reduced-fraction strings.
#[derive(Serialize, Deserialize)]
struct Record {
    constants: RecordConstants,
    guarantee: String,
    steps: Vec<ReductionStep>,
    independent_set: VertexSet,
}

#[derive(Serialize, Deserialize)]
struct RecordConstants {
    a: String,
    b: String,
}

fn parse_fraction<T: ExactScalar>(field: &str, text: &str) -> Result<T> {
    text.parse::<T>()
        .map_err(|_| Error::Parse { offset: 0, message: format!("field `{field}`: `{text}` is not a fraction") })
}

impl<T: ExactScalar> Certificate<T> {
    pub fn to_json(&self) -> String {
        let record = Record {
            constants: RecordConstants { a: self.constants.a.to_string(), b: self.constants.b.to_string() },
            guarantee: self.guarantee_value.to_string(),
            steps: self.steps.clone(),
            independent_set: self.independent_set.clone(),
        };
        serde_json::to_string_pretty(&record).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let record: Record = serde_json::from_str(text).map_err(|e| Error::Parse {
            offset: text.lines().take(e.line().saturating_sub(1)).map(|l| l.len() + 1).sum::<usize>()
                + e.column().saturating_sub(1),
            message: e.to_string(),
        })?;
        Ok(Certificate {
            constants: ConstantsPair {
                a: parse_fraction("constants.a", &record.constants.a)?,
                b: parse_fraction("constants.b", &record.constants.b)?,
            },
            guarantee_value: parse_fraction("guarantee", &record.guarantee)?,
            steps: record.steps,
            independent_set: record.independent_set,
        })
    }

    /// `Σ ledger values`; equals `|I| − guarantee` for a consistent certificate.
    pub fn ledger_total(&self) -> T {
        self.steps.iter().fold(T::zero(), |acc, s| acc + s.ledger_value(&self.constants))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    /// First failed check.
    Invalid(String),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Valid => f.write_str("valid"),
            Verdict::Invalid(why) => write!(f, "invalid: {why}"),
        }
    }
}

/// Re-derive every claim of `cert` from `g` by replaying the deletions.
pub fn verify_certificate<T: ExactScalar>(g: &Graph, cert: &Certificate<T>) -> Verdict {
    match check(g, cert) {
        Ok(()) => Verdict::Valid,
        Err(why) => Verdict::Invalid(why),
    }
}

fn check<T: ExactScalar>(g: &Graph, cert: &Certificate<T>) -> Result<(), String> {
    let n = g.vertex_count();
    let c = &cert.constants;
    match check_constants(c) {
        Ok(r) if r.feasible => {}
        Ok(r) => return Err(format!("constants {c} violate constraints {:?}", r.violated)),
        Err(e) => return Err(e.to_string()),
    }

    let set = &cert.independent_set;
    match is_independent_set(g, set) {
        Ok(true) => {}
        Ok(false) => {
            let (u, v) = g.edges().find(|&(u, v)| set.contains(u) && set.contains(v)).expect("an edge inside");
            return Err(format!("independent set contains edge ({u}, {v})"));
        }
        Err(e) => return Err(e.to_string()),
    }

    let mut alive = vec![true; n];
    let mut current = g.clone();
    let mut original_of: Vec<usize> = g.vertices().collect();
    let mut current_lambda = lambda(g);
    let mut extensions = VertexSet::new();
    for (i, step) in cert.steps.iter().enumerate() {
        let label = format!("step {} ({})", i + 1, step.rule);
        if step.removed.is_empty() {
            return Err(format!("{label}: removes nothing"));
        }
        for v in step.removed.iter() {
            if v >= n || !alive[v] {
                return Err(format!("{label}: vertex {v} is not present"));
            }
            alive[v] = false;
        }
        if let Some(v) = step.extension.iter().find(|&v| !step.removed.contains(v)) {
            return Err(format!("{label}: extension vertex {v} is not removed by this step"));
        }
        if step.n != step.removed.len() {
            return Err(format!("{label}: N = {} but {} vertices removed", step.n, step.removed.len()));
        }
        if step.a != step.extension.len() {
            return Err(format!("{label}: A = {} but extension has {}", step.a, step.extension.len()));
        }
        let local: VertexSet =
            original_of.iter().enumerate().filter(|(_, &o)| step.removed.contains(o)).map(|(i, _)| i).collect();
        let deletion = current.remove_vertices(&local).map_err(|e| e.to_string())?;
        if deletion.edges_removed != step.m {
            return Err(format!("{label}: M = {} but {} edges removed", step.m, deletion.edges_removed));
        }
        let next_lambda = lambda(&deletion.graph);
        let change = next_lambda as i64 - current_lambda as i64;
        if change != step.lambda_change {
            return Err(format!("{label}: Lambda = {} but lambda changed by {change}", step.lambda_change));
        }
        extensions = extensions.union(&step.extension);
        original_of = deletion.old_of_new.iter().map(|&v| original_of[v]).collect();
        current = deletion.graph;
        current_lambda = next_lambda;
    }
    if let Some(v) = alive.iter().position(|&a| a) {
        return Err(format!("vertex {v} is never removed"));
    }
    if extensions != *set {
        return Err("independent set differs from the union of step extensions".into());
    }

    let expected = guarantee(n, g.edge_count(), lambda(g), c);
    if cert.guarantee_value != expected {
        return Err(format!("guarantee is {expected}, certificate claims {}", cert.guarantee_value));
    }
    let size = T::from_count(set.len());
    if size < ExactScalar::ceil(&expected) {
        return Err(format!("set has {} vertices, bound requires {}", set.len(), ExactScalar::ceil(&expected)));
    }
    let total = cert.ledger_total();
    if total != size - expected {
        return Err(format!("ledger total {total} does not telescope to |I| - guarantee"));
    }
    Ok(())
}
