//! Structural counting: degree-determinability, factorization over blocks
//! and cut vertices, closed forms for books, and the subset identities
//! behind them.

mod books;
mod determinable;
mod factor;
mod identities;

pub use books::{book_degree_count, book_forest_count, book_graph, recognize_book, BookSpec};
pub use determinable::{
    degree_determinability, is_degree_determinable, is_degree_determinable_brute, quick_certificate, Certificate,
};
pub use factor::{
    count_d_factored, count_f_factored, degree_plan, forest_plan, CertifiedSide, CutCertificate, FactorizationPlan,
    Method, PlanNode, Quantity,
};
pub use identities::{identity_f1_d1, identity_f2_d2, MAX_IDENTITY_TERMS};

pub(crate) use factor::bipartite;

#[cfg(test)]
mod tests {
    use crate::census::degree_tuple_set;
    use crate::graph::path;
    use crate::Budget;
    use std::collections::BTreeMap;

    /// Path `l, v_1..v_n, r` with `n` even: a pattern of internal degrees
    /// containing a 0 or a 2 fixes `d(l)` and `d(r)`; the all-ones pattern
    /// has exactly the completions `(0, 0)` and `(1, 1)`.
    #[test]
    fn path_end_degrees_are_forced_by_internal_zero_or_two() {
        for n in (2..=8).step_by(2) {
            let g = path(n + 2).unwrap();
            let tuples = degree_tuple_set(&g, Budget::DEFAULT).unwrap();
            let mut by_internal: BTreeMap<Vec<u32>, Vec<(u32, u32)>> = BTreeMap::new();
            for t in &tuples {
                let d = t.as_slice();
                by_internal.entry(d[1..=n].to_vec()).or_default().push((d[0], d[n + 1]));
            }
            let mut forced = 0u64;
            for (internal, ends) in &by_internal {
                if internal.iter().any(|&x| x == 0 || x == 2) {
                    assert_eq!(ends.len(), 1, "{internal:?}");
                    forced += 1;
                } else {
                    let mut ends = ends.clone();
                    ends.sort_unstable();
                    assert_eq!(ends, vec![(0, 0), (1, 1)]);
                }
            }
            assert_eq!(forced, (1 << (n + 1)) - 2);
        }
    }
}
