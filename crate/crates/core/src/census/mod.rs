//! Counting engines for subforests and degree tuples.
//!
//! * [`count_forests_brute`] and [`count_degree_tuples`] enumerate every
//!   edge subset; they are the reference oracles.
//! * [`count_forests_dc`] is deletion-contraction on multigraphs with
//!   memoization, for graphs beyond brute-force reach.
//! * [`colored`] holds the k-colored ladder census and its recurrences.

mod brute;
pub mod colored;
mod dc;

pub use brute::{count_degree_tuples, count_forests_brute, degree_tuple_set, DegreeKeyer};
pub use colored::{
    colored_forest_census, colored_recurrence, colored_streams, is_semicyclic, ColoredCensus, ColoredStreams,
    ColoredSubgraph,
};
pub use dc::{count_forests_dc, ForestCounter};
