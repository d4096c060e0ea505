//! Graph family constructors with fixed vertex numbering.

use rand::seq::SliceRandom;
use rand::Rng;

use super::{Graph, Vertex};
use crate::error::{Error, Result};

/// `C_n` on vertices `0..n`, edges `(i, i+1)` and `(0, n-1)`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::invalid_param(format!("cycle needs at least 3 vertices, got {n}")));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// `P_n` on vertices `0..n` in order; `path(1)` is a single vertex.
pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::invalid_param("path needs at least 1 vertex"));
    }
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

/// `K_{m,n}`: part one is `0..m`, part two is `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    if m < 1 || n < 1 {
        return Err(Error::invalid_param(format!("K_{{{m},{n}}} needs non-empty parts")));
    }
    Graph::new(m + n, (0..m).flat_map(|i| (0..n).map(move |j| (i, m + j))))
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).expect("complete graph is simple")
}

/// Star with center 0 and `leaves` leaves.
pub fn star(leaves: usize) -> Graph {
    Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star is simple")
}

/// Random recursive tree on `n` vertices: vertex `i` joins a uniformly
/// chosen earlier vertex, then labels are shuffled.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    let mut labels: Vec<Vertex> = (0..n).collect();
    labels.shuffle(rng);
    let edges: Vec<(Vertex, Vertex)> = (1..n).map(|i| (labels[rng.gen_range(0..i)], labels[i])).collect();
    Graph::new(n, edges).expect("tree is simple")
}

/// Random labeled graph on `n` vertices with `min(m, n(n-1)/2)` edges
/// chosen uniformly without replacement.
pub fn random_graph<R: Rng + ?Sized>(n: usize, m: usize, rng: &mut R) -> Graph {
    let mut all: Vec<(Vertex, Vertex)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    all.shuffle(rng);
    all.truncate(m);
    Graph::new(n, all).expect("sampled edges are distinct")
}

/// Random connected cactus with exactly `edges` edges, grown by attaching
/// pendant edges and cycles of length `3..=max_cycle` at random vertices.
/// With `even_cycles_only` every cycle has even length, so the result is
/// bipartite.
pub fn random_cactus<R: Rng + ?Sized>(edges: usize, max_cycle: usize, even_cycles_only: bool, rng: &mut R) -> Graph {
    let mut list: Vec<(Vertex, Vertex)> = Vec::new();
    let mut n = 1;
    while list.len() < edges {
        let remaining = edges - list.len();
        let at = rng.gen_range(0..n);
        let lengths: Vec<usize> = (3..=max_cycle.min(remaining))
            .filter(|l| !even_cycles_only || l % 2 == 0)
            .collect();
        if lengths.is_empty() || rng.gen_bool(0.3) {
            list.push((at, n));
            n += 1;
        } else {
            let len = *lengths.choose(rng).expect("non-empty");
            let mut prev = at;
            for _ in 0..len - 1 {
                list.push((prev, n));
                prev = n;
                n += 1;
            }
            list.push((prev, at));
        }
    }
    let mut labels: Vec<Vertex> = (0..n).collect();
    labels.shuffle(rng);
    Graph::new(n, list.into_iter().map(|(u, v)| (labels[u], labels[v]))).expect("cactus is simple")
}
