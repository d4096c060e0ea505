//! Exhaustive FED/FLD sweeps and the colored-forest / GR comparison.
//!
//! Sweeps only ever report agreement over the range they covered.

mod report;

use std::time::Instant;

use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::budget::{saturating_pow, Budget};
use crate::census::{colored_forest_census, colored_recurrence, count_degree_tuples, count_forests_brute, count_forests_dc};
use crate::error::{Error, Result};
use crate::graph::{random_cactus, random_tree, Graph};
use crate::structure::{
    bipartite, book_graph, count_d_factored, count_f_factored, is_degree_determinable_brute, BookSpec,
};
use crate::tridiagonal::{complete_tridiagonal_graph, count_gr, grid2, EntrySet};
use crate::Exact;

pub use report::{describe, InstanceRow, Skipped, SweepReport, Timing, Verdict, Violation};

/// Largest instance (edges) on which the sweep also brute-checks that every
/// vertex of a bipartite graph is degree-determinable.
const DETERMINABILITY_EDGES: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FedStatus {
    Fed,
    Fld,
    Violation,
}

impl std::fmt::Display for FedStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            FedStatus::Fed => "FED",
            FedStatus::Fld => "FLD",
            FedStatus::Violation => "violation",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FedCheck {
    pub status: FedStatus,
    #[serde(with = "crate::scalar::decimal")]
    pub f: Exact,
    #[serde(with = "crate::scalar::decimal")]
    pub d: Exact,
    pub bipartite: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
}

/// Status implied by the counts. Anything contradicting `F <= D`, or the
/// expectation that equality holds exactly on bipartite graphs, is a
/// violation.
pub fn classify(f: &Exact, d: &Exact, bipartite: bool) -> (FedStatus, Option<String>) {
    if f > d {
        (FedStatus::Violation, Some("F > D".into()))
    } else if bipartite && f != d {
        (FedStatus::Violation, Some("bipartite graph with F < D".into()))
    } else if !bipartite && f == d {
        (FedStatus::Violation, Some("non-bipartite graph with F = D".into()))
    } else if f == d {
        (FedStatus::Fed, None)
    } else {
        (FedStatus::Fld, None)
    }
}

/// Recounts a suspected violation with deletion-contraction and plain
/// brute force. Disagreement means a counting bug, not a counterexample.
fn reverify(g: &Graph, f: &Exact, d: &Exact, budget: Budget) -> Result<()> {
    let f2 = count_forests_dc(g);
    let d2 = BigUint::from(count_degree_tuples(g, budget)?);
    if &f2 != f || &d2 != d {
        return Err(Error::Domain(format!(
            "counting paths disagree on {}: F {f} vs {f2}, D {d} vs {d2}",
            describe(g)
        )));
    }
    Ok(())
}

/// FED/FLD status from the factored counts.
pub fn fed_status(g: &Graph, budget: Budget) -> Result<FedCheck> {
    let f = count_f_factored(g, budget)?;
    let d = count_d_factored(g, budget)?;
    let bip = bipartite(g);
    let (status, reason) = classify(&f, &d, bip);
    if status == FedStatus::Violation {
        reverify(g, &f, &d, budget)?;
    }
    Ok(FedCheck { status, f, d, bipartite: bip, reason })
}

#[derive(Default)]
struct Tally {
    instances: u64,
    fed: u64,
    fld: u64,
    work: u128,
    determinability_checks: u64,
    violations: Vec<Violation>,
    failures: Vec<Error>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.instances += other.instances;
        self.fed += other.fed;
        self.fld += other.fld;
        self.work += other.work;
        self.determinability_checks += other.determinability_checks;
        self.violations.extend(other.violations);
        self.failures.extend(other.failures);
        self
    }

    fn record(&mut self, instance: String, check: &FedCheck) {
        self.instances += 1;
        match check.status {
            FedStatus::Fed => self.fed += 1,
            FedStatus::Fld => self.fld += 1,
            FedStatus::Violation => self.violations.push(Violation::counts(
                instance,
                check.reason.clone().unwrap_or_default(),
                &check.f,
                &check.d,
            )),
        }
    }

    fn into_report(mut self, family: String, skipped: Vec<Skipped>, rows: Vec<InstanceRow>, start: Instant) -> Result<SweepReport> {
        if let Some(e) = self.failures.into_iter().next() {
            return Err(e);
        }
        self.violations.sort();
        Ok(SweepReport::new(
            family,
            self.instances,
            self.fed,
            self.fld,
            self.work,
            self.determinability_checks,
            self.violations,
            skipped,
            rows,
            start.elapsed(),
        ))
    }
}

/// Brute F and D for one small sweep instance.
fn check_small(g: &Graph) -> Result<(FedCheck, u64)> {
    let f = BigUint::from(count_forests_brute(g, Budget::unlimited())?);
    let d = BigUint::from(count_degree_tuples(g, Budget::unlimited())?);
    let bip = bipartite(g);
    let (status, reason) = classify(&f, &d, bip);
    if status == FedStatus::Violation {
        reverify(g, &f, &d, Budget::unlimited())?;
    }
    let mut det = 0;
    if bip && g.edge_count() <= DETERMINABILITY_EDGES {
        for v in 0..g.vertex_count() {
            det += 1;
            if !is_degree_determinable_brute(g, v, Budget::unlimited())? {
                return Err(Error::Domain(format!("vertex {v} of bipartite {} is not degree-determinable", describe(g))));
            }
        }
    }
    Ok((FedCheck { status, f, d, bipartite: bip, reason }, det))
}

/// Every labeled graph whose edges are a subset of `pool` on `n` vertices.
fn sweep_pool(n: usize, pool: &[(usize, usize)]) -> Tally {
    let m = pool.len();
    (0u64..1 << m)
        .into_par_iter()
        .fold(Tally::default, |mut t, bits| {
            let edges = (0..m).filter(|&i| bits >> i & 1 == 1).map(|i| pool[i]);
            let g = Graph::new(n, edges).expect("pool edges are distinct");
            match check_small(&g) {
                Ok((check, det)) => {
                    t.work += 1u128 << g.edge_count();
                    t.determinability_checks += det;
                    t.record(describe(&g), &check);
                }
                Err(e) => t.failures.push(e),
            }
            t
        })
        .reduce(Tally::default, Tally::merge)
}

/// Labeled graphs on exactly `n` vertices for each `n <= max_vertices`: all
/// subsets of `K_n`, or with `bipartite_only` all subsets of `K_{a,b}` for
/// every split `a + b = n`, `a <= b`. Total work `sum 3^|pool|`.
pub fn sweep_all_graphs(max_vertices: usize, bipartite_only: bool, budget: Budget) -> Result<SweepReport> {
    let start = Instant::now();
    let mut pools: Vec<(usize, Vec<(usize, usize)>)> = Vec::new();
    for n in 1..=max_vertices {
        if bipartite_only {
            for a in 0..=n / 2 {
                let pool = (0..a).flat_map(|i| (a..n).map(move |j| (i, j))).collect();
                pools.push((n, pool));
            }
        } else {
            pools.push((n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()));
        }
    }
    let projected = pools
        .iter()
        .fold(0u128, |acc, (_, p)| acc.saturating_add(saturating_pow(3, p.len() as u32)));
    let family = if bipartite_only {
        format!("bipartite graphs on at most {max_vertices} vertices")
    } else {
        format!("all graphs on at most {max_vertices} vertices")
    };
    budget.check(family.clone(), projected)?;
    if pools.iter().any(|(_, p)| p.len() > 40) {
        return Err(Error::invalid_param("sweep pool too large"));
    }
    let tally = pools
        .iter()
        .map(|(n, pool)| sweep_pool(*n, pool))
        .fold(Tally::default(), Tally::merge);
    tally.into_report(family, Vec::new(), Vec::new(), start)
}

/// For each cell `n <= max_n`, `1 <= k <= max_k`: the colored forest census,
/// the order-two recurrence and `|GR|` over `{0..k}` must coincide. Cells
/// over budget are listed as skipped.
pub fn sweep_colored_gr(max_n: usize, max_k: u32, budget: Budget) -> Result<SweepReport> {
    let start = Instant::now();
    let mut tally = Tally::default();
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for n in 1..=max_n {
        for k in 1..=max_k {
            let instance = format!("n={n} k={k}");
            let recurrence: Exact = colored_recurrence(n, k)?;
            let census = match colored_forest_census(n, k, budget) {
                Ok(c) => c.a,
                Err(Error::BudgetExceeded { .. }) => {
                    skipped.push(Skipped::new(instance, "colored census over budget"));
                    continue;
                }
                Err(e) => return Err(e),
            };
            let gr = match count_gr(n, EntrySet::new(0, k), budget) {
                Ok(c) => BigUint::from(c),
                Err(Error::BudgetExceeded { .. }) => {
                    skipped.push(Skipped::new(instance, "GR enumeration over budget"));
                    continue;
                }
                Err(e) => return Err(e),
            };
            tally.instances += 1;
            tally.work += 2 * saturating_pow(k as u128 + 1, 3 * n as u32 - 2);
            let agree = census == recurrence && recurrence == gr;
            let values = [("census", &census), ("recurrence", &recurrence), ("gr", &gr)];
            if agree {
                tally.fed += 1;
            } else {
                tally.violations.push(Violation::new(instance.clone(), "three-way disagreement", &values));
            }
            rows.push(InstanceRow::new(instance, if agree { "agree" } else { "violation" }, &values));
        }
    }
    tally.into_report(format!("colored forests vs GR, n <= {max_n}, k <= {max_k}"), skipped, rows, start)
}

/// All page multisets (non-decreasing lengths >= 3) with `sum <= max_sum`
/// and at most `max_pages` pages.
pub fn book_page_lists(max_sum: u32, max_pages: usize) -> Vec<Vec<u32>> {
    fn grow(prefix: &mut Vec<u32>, min: u32, left: u32, max_pages: usize, out: &mut Vec<Vec<u32>>) {
        if !prefix.is_empty() {
            out.push(prefix.clone());
        }
        if prefix.len() == max_pages {
            return;
        }
        for c in min..=left {
            prefix.push(c);
            grow(prefix, c, left - c, max_pages, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    grow(&mut Vec::new(), 3, max_sum, max_pages, &mut out);
    out
}

/// FED/FLD status over families with known answers: ladders and complete
/// tridiagonal graphs (`n <= min(max_size, 7)`), seeded random trees and
/// cacti of both parities (up to `max_size` edges, capped at 24), and every
/// book with page sum at most `min(max_size, 20)`, with and without base.
/// Each status must match bipartiteness.
pub fn sweep_known_fed_families(max_size: usize, seed: u64, budget: Budget) -> Result<SweepReport> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut instances: Vec<(String, Graph)> = Vec::new();
    for n in 1..=max_size.min(7) {
        instances.push((format!("grid2:{n}"), grid2(n)?));
        instances.push((format!("ktri:{n}"), complete_tridiagonal_graph(n)?));
    }
    for n in 1..=max_size.max(1) {
        instances.push((format!("tree:{n}#{}", instances.len()), random_tree(n, &mut rng)));
    }
    let cactus_edges = max_size.min(24);
    if cactus_edges >= 3 {
        for i in 0..40 {
            let even = i % 2 == 0;
            let edges = 3 + i % (cactus_edges - 2);
            let g = random_cactus(edges, 8, even, &mut rng);
            let tag = if even { "even" } else { "mixed" };
            instances.push((format!("cactus:{tag}:{edges}#{i}"), g));
        }
    }
    for pages in book_page_lists(max_size.min(20) as u32, usize::MAX) {
        for base in [true, false] {
            let spec = BookSpec::new(pages.clone(), base)?;
            instances.push((spec.to_string(), book_graph(&spec)));
        }
    }

    let mut tally = Tally::default();
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for (name, g) in instances {
        match fed_status(&g, budget) {
            Ok(check) => {
                let values = [("F", &check.f), ("D", &check.d)];
                rows.push(InstanceRow::new(name.clone(), &check.status.to_string(), &values));
                tally.record(name, &check);
            }
            Err(Error::BudgetExceeded { .. }) => skipped.push(Skipped::new(name, "over budget")),
            Err(e) => return Err(e),
        }
    }
    tally.into_report(format!("known families, size <= {max_size}, seed {seed}"), skipped, rows, start)
}
