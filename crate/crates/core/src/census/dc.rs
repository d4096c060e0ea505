//! Forest counting by deletion-contraction on multigraphs.
//!
//! For an edge class `uv` of multiplicity `mu`, a forest uses at most one
//! of its copies, so `F(G) = F(G - uv) + mu * F(G / uv)` where contraction
//! merges parallel classes and drops the loops it creates. Pendant classes
//! contribute a factor `1 + mu`, isolated vertices a factor 1, and
//! components multiply.

use std::collections::VecDeque;

use num_bigint::BigUint;
use num_traits::One;
use rustc_hash::FxHashMap;

use crate::graph::Graph;

/// Multigraph edge class `(u, v, multiplicity)` with `u < v`.
type Class = (u32, u32, u32);

/// Relabeled multigraph: the memo key is the whole graph, so distinct
/// multigraphs never share an entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct MultiGraph {
    n: u32,
    classes: Vec<Class>,
}

impl MultiGraph {
    fn from_classes(n: usize, mut classes: Vec<Class>) -> Self {
        classes.sort_unstable();
        MultiGraph { n: n as u32, classes }
    }

    fn adjacency(&self) -> Vec<Vec<(u32, u32)>> {
        let mut adj = vec![Vec::new(); self.n as usize];
        for &(u, v, mu) in &self.classes {
            adj[u as usize].push((v, mu));
            adj[v as usize].push((u, mu));
        }
        adj
    }
}

/// Memoizing deletion-contraction forest counter.
#[derive(Debug)]
pub struct ForestCounter {
    memo: FxHashMap<MultiGraph, BigUint>,
    capacity: usize,
    hits: u64,
    calls: u64,
}

impl Default for ForestCounter {
    fn default() -> Self {
        Self::with_capacity(1 << 20)
    }
}

impl ForestCounter {
    /// Once `capacity` entries are stored, further results are computed
    /// without being memoized.
    pub fn with_capacity(capacity: usize) -> Self {
        ForestCounter { memo: FxHashMap::default(), capacity, hits: 0, calls: 0 }
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn memo_hits(&self) -> u64 {
        self.hits
    }

    pub fn calls(&self) -> u64 {
        self.calls
    }

    pub fn count(&mut self, g: &Graph) -> BigUint {
        let classes = g.edges().iter().map(|&(u, v)| (u as u32, v as u32, 1)).collect();
        self.count_multi(g.vertex_count(), classes)
    }

    fn count_multi(&mut self, n: usize, classes: Vec<Class>) -> BigUint {
        self.calls += 1;
        let (factor, pieces) = reduce(n, classes);
        let mut total = factor;
        for piece in pieces {
            total *= self.count_connected(piece);
        }
        total
    }

    /// `g` is connected, has no pendant classes and at least one class.
    fn count_connected(&mut self, g: MultiGraph) -> BigUint {
        if let Some(v) = self.memo.get(&g) {
            self.hits += 1;
            return v.clone();
        }
        let adj = g.adjacency();
        let pivot = (0..g.n as usize).max_by_key(|&v| (adj[v].len(), std::cmp::Reverse(v))).expect("non-empty");
        let &(other, mu) = adj[pivot]
            .iter()
            .max_by_key(|&&(w, _)| (adj[w as usize].len(), std::cmp::Reverse(w)))
            .expect("pivot has a neighbor");
        let (a, b) = (pivot.min(other as usize) as u32, pivot.max(other as usize) as u32);

        let deleted: Vec<Class> = g.classes.iter().copied().filter(|&(u, v, _)| (u, v) != (a, b)).collect();
        let contracted = contract(&g.classes, a, b);

        let without = self.count_multi(g.n as usize, deleted);
        let with = self.count_multi(g.n as usize - 1, contracted);
        let result = without + with * BigUint::from(mu);
        if self.memo.len() < self.capacity {
            self.memo.insert(g, result.clone());
        }
        result
    }
}

/// Merges `b` into `a` (`a < b`), dropping the contracted class and
/// renumbering vertices above `b` down by one.
fn contract(classes: &[Class], a: u32, b: u32) -> Vec<Class> {
    let map = |x: u32| -> u32 {
        if x == b {
            a
        } else if x > b {
            x - 1
        } else {
            x
        }
    };
    let mut merged: FxHashMap<(u32, u32), u32> = FxHashMap::default();
    for &(u, v, mu) in classes {
        let (x, y) = (map(u), map(v));
        if x == y {
            continue;
        }
        *merged.entry((x.min(y), x.max(y))).or_insert(0) += mu;
    }
    merged.into_iter().map(|((u, v), mu)| (u, v, mu)).collect()
}

/// Strips pendant classes (factor `1 + mu` each) and isolated vertices,
/// splits into components, and relabels each component in BFS order from
/// its lowest-degree vertex.
fn reduce(n: usize, classes: Vec<Class>) -> (BigUint, Vec<MultiGraph>) {
    let mut adj: Vec<FxHashMap<u32, u32>> = vec![FxHashMap::default(); n];
    for &(u, v, mu) in &classes {
        adj[u as usize].insert(v, mu);
        adj[v as usize].insert(u, mu);
    }
    let mut factor = BigUint::one();
    let mut queue: Vec<usize> = (0..n).filter(|&v| adj[v].len() == 1).collect();
    while let Some(v) = queue.pop() {
        if adj[v].len() != 1 {
            continue;
        }
        let (&w, &mu) = adj[v].iter().next().expect("one neighbor");
        factor *= BigUint::from(mu) + 1u32;
        adj[v].clear();
        adj[w as usize].remove(&(v as u32));
        if adj[w as usize].len() == 1 {
            queue.push(w as usize);
        }
    }

    let mut seen = vec![false; n];
    let mut pieces = Vec::new();
    for start in 0..n {
        if seen[start] || adj[start].is_empty() {
            continue;
        }
        let mut comp = Vec::new();
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            comp.push(v);
            for &w in adj[v].keys() {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    stack.push(w as usize);
                }
            }
        }
        pieces.push(canonical_piece(&adj, &comp));
    }
    (factor, pieces)
}

fn canonical_piece(adj: &[FxHashMap<u32, u32>], comp: &[usize]) -> MultiGraph {
    let root = *comp.iter().min_by_key(|&&v| (adj[v].len(), v)).expect("non-empty component");
    let mut label: FxHashMap<usize, u32> = FxHashMap::default();
    label.insert(root, 0);
    let mut order = VecDeque::from([root]);
    let mut next = 1u32;
    while let Some(v) = order.pop_front() {
        let mut nbrs: Vec<(usize, u32, usize)> =
            adj[v].iter().map(|(&w, &mu)| (adj[w as usize].len(), mu, w as usize)).collect();
        nbrs.sort_unstable();
        for (_, _, w) in nbrs {
            if let std::collections::hash_map::Entry::Vacant(e) = label.entry(w) {
                e.insert(next);
                next += 1;
                order.push_back(w);
            }
        }
    }
    let mut classes = Vec::new();
    for &v in comp {
        for (&w, &mu) in &adj[v] {
            let (a, b) = (label[&v], label[&(w as usize)]);
            if a < b {
                classes.push((a, b, mu));
            }
        }
    }
    MultiGraph::from_classes(comp.len(), classes)
}

/// `|F(G)|` by memoized deletion-contraction.
pub fn count_forests_dc(g: &Graph) -> BigUint {
    ForestCounter::default().count(g)
}
