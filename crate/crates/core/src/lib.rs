//! Exact enumeration of subforests and subgraph degree tuples.
//!
//! The crate counts, for a labeled simple graph `G`:
//!
//! * `|F(G)|`, the number of acyclic spanning subgraphs (subforests, the
//!   empty one included), by brute force, by deletion-contraction, and by
//!   structural factorization with closed forms for cycles and books;
//! * `|D(G)|`, the number of distinct ordered degree tuples realized by
//!   spanning subgraphs.
//!
//! It also enumerates the realizable row/column sum pairs of tridiagonal
//! matrices over contiguous integer entry sets, evaluates the recurrences
//! that count them, and runs exhaustive sweeps checking whether
//! `|F(G)| = |D(G)|` holds exactly on bipartite graphs.
//!
//! Closed forms are generic over the integer scalar through [`Count`];
//! [`Exact`] is the arbitrary-precision default used by every report.

pub mod budget;
pub mod census;
pub mod error;
pub mod graph;
pub mod harness;
pub mod scalar;
pub mod structure;
pub mod tridiagonal;

mod dedup;

pub use budget::Budget;
pub use error::{Error, Result};
pub use graph::{DegreeTuple, Graph, SubgraphMask, Vertex};
pub use scalar::Count;

/// Arbitrary-precision count type used in reports.
pub type Exact = num_bigint::BigUint;
/// Machine-word count, enough for every brute-force result within budget.
pub type Count64 = u64;
/// Wide machine count for closed forms that outgrow `u64`.
pub type Count128 = u128;
