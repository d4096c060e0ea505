use std::collections::BTreeMap;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::Exact;

/// Compact one-line graph description: `n=4 edges=0-1,1-2`.
pub fn describe(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("n={} edges={}", g.vertex_count(), edges.join(","))
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    pub instance: String,
    pub reason: String,
    /// Named exact counts as decimal strings.
    pub values: BTreeMap<String, String>,
}

impl Violation {
    pub fn new(instance: String, reason: &str, values: &[(&str, &Exact)]) -> Self {
        Violation { instance, reason: reason.to_string(), values: decimal_map(values) }
    }

    pub(crate) fn counts(instance: String, reason: String, f: &Exact, d: &Exact) -> Self {
        Violation { instance, reason, values: decimal_map(&[("F", f), ("D", d)]) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skipped {
    pub instance: String,
    pub reason: String,
}

impl Skipped {
    pub fn new(instance: String, reason: &str) -> Self {
        Skipped { instance, reason: reason.to_string() }
    }
}

/// One row per checked instance, for sweeps small enough to list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceRow {
    pub instance: String,
    pub status: String,
    pub values: BTreeMap<String, String>,
}

impl InstanceRow {
    pub fn new(instance: String, status: &str, values: &[(&str, &Exact)]) -> Self {
        InstanceRow { instance, status: status.to_string(), values: decimal_map(values) }
    }
}

fn decimal_map(values: &[(&str, &Exact)]) -> BTreeMap<String, String> {
    values.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// No violation among the instances checked; says nothing beyond them.
    ConsistentOverSweptRange,
    ViolationFound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_micros: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub family: String,
    pub instances: u64,
    pub fed: u64,
    pub fld: u64,
    /// Elementary evaluations (subsets, matrices, colorings).
    #[serde(with = "crate::scalar::decimal_u128")]
    pub work: u128,
    pub determinability_checks: u64,
    pub verdict: Verdict,
    pub violations: Vec<Violation>,
    pub skipped: Vec<Skipped>,
    pub rows: Vec<InstanceRow>,
    /// Only field that varies between identical runs.
    pub timing: Timing,
}

impl SweepReport {
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn new(
        family: String,
        instances: u64,
        fed: u64,
        fld: u64,
        work: u128,
        determinability_checks: u64,
        violations: Vec<Violation>,
        skipped: Vec<Skipped>,
        rows: Vec<InstanceRow>,
        elapsed: Duration,
    ) -> Self {
        let verdict = if violations.is_empty() { Verdict::ConsistentOverSweptRange } else { Verdict::ViolationFound };
        SweepReport {
            family,
            instances,
            fed,
            fld,
            work,
            determinability_checks,
            verdict,
            violations,
            skipped,
            rows,
            timing: Timing { elapsed_micros: elapsed.as_micros().to_string() },
        }
    }
}
