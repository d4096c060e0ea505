//! Degree-determinability: whether the degree of `v` in a spanning subgraph
//! is forced by the degrees of every other vertex.

use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::census::degree_tuple_set;
use crate::error::{Error, Result};
use crate::graph::{is_bipartite, Graph, Vertex};

/// Reason a vertex is known to be degree-determinable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Certificate {
    /// The graph is bipartite.
    Bipartite,
    /// `v` has degree at most one.
    Leaf,
    /// Checked over every degree tuple.
    Brute,
}

/// Cheap certificates only; `None` means "unknown", not "false".
pub fn quick_certificate(g: &Graph, v: Vertex) -> Option<Certificate> {
    if g.degree(v) <= 1 {
        Some(Certificate::Leaf)
    } else if is_bipartite(g).is_bipartite() {
        Some(Certificate::Bipartite)
    } else {
        None
    }
}

/// Exhaustive check: no two realized degree tuples agree off `v` and
/// differ at `v`.
pub fn is_degree_determinable_brute(g: &Graph, v: Vertex, budget: Budget) -> Result<bool> {
    check_vertex(g, v)?;
    let tuples = degree_tuple_set(g, budget)?;
    let mut restricted = FxHashSet::default();
    for mut t in tuples.iter().cloned() {
        t.0[v] = 0;
        restricted.insert(t);
    }
    Ok(restricted.len() == tuples.len())
}

/// Certificate for `v`, or `None` if `v` is not degree-determinable. Falls
/// back to [`is_degree_determinable_brute`] when no fast path applies.
pub fn degree_determinability(g: &Graph, v: Vertex, budget: Budget) -> Result<Option<Certificate>> {
    check_vertex(g, v)?;
    if let Some(c) = quick_certificate(g, v) {
        return Ok(Some(c));
    }
    Ok(is_degree_determinable_brute(g, v, budget)?.then_some(Certificate::Brute))
}

pub fn is_degree_determinable(g: &Graph, v: Vertex, budget: Budget) -> Result<bool> {
    Ok(degree_determinability(g, v, budget)?.is_some())
}

fn check_vertex(g: &Graph, v: Vertex) -> Result<()> {
    if v >= g.vertex_count() {
        return Err(Error::invalid_param(format!("vertex {v} out of range")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle};

    #[test]
    fn fast_paths() {
        let c6 = cycle(6).unwrap();
        for v in 0..6 {
            assert_eq!(degree_determinability(&c6, v, Budget::DEFAULT).unwrap(), Some(Certificate::Bipartite));
            assert!(is_degree_determinable_brute(&c6, v, Budget::DEFAULT).unwrap());
        }
        let paw = Graph::new(4, [(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap();
        assert_eq!(degree_determinability(&paw, 3, Budget::DEFAULT).unwrap(), Some(Certificate::Leaf));
        assert!(is_degree_determinable_brute(&paw, 3, Budget::DEFAULT).unwrap());
    }

    #[test]
    fn triangle_vertices_are_not_determinable() {
        let t = cycle(3).unwrap();
        for v in 0..3 {
            assert!(!is_degree_determinable(&t, v, Budget::DEFAULT).unwrap());
        }
        assert!(!is_degree_determinable(&complete(4), 0, Budget::DEFAULT).unwrap());
    }

    #[test]
    fn budget_is_only_needed_without_certificate() {
        let tiny = Budget(4);
        assert!(is_degree_determinable(&cycle(8).unwrap(), 0, tiny).unwrap());
        assert!(matches!(
            is_degree_determinable(&cycle(5).unwrap(), 0, tiny),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(is_degree_determinable(&cycle(5).unwrap(), 9, tiny).is_err());
    }
}
