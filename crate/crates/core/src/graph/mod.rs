//! Labeled simple graphs, spanning subgraphs as edge masks, degree tuples
//! and the structural predicates the counting engines rely on.
//!
//! Edges are stored in lexicographic order of `(u, v)` with `u < v`. The
//! position of an edge in that order is its index, and bit `i` of a
//! [`SubgraphMask`] selects edge `i` (little-endian over 64-bit words), so
//! a mask means the same subgraph wherever the graph is reconstructed.

mod blocks;
mod euler;
mod families;
mod predicates;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use blocks::{articulation_points, block_decomposition, bridges, is_cactus, Block};
pub use euler::{alternating_circuits, symmetric_difference, verify_alternating_euler, AlternatingCircuit};
pub use families::{complete, complete_bipartite, cycle, path, random_cactus, random_graph, random_tree, star};
pub use predicates::{is_acyclic, is_acyclic_bits, is_bipartite, Bipartiteness};

pub type Vertex = usize;

/// Labeled simple undirected graph with canonically ordered edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl Graph {
    /// Builds a graph from unordered pairs. Pairs are normalized to `u < v`
    /// and sorted; loops, duplicates and out-of-range endpoints are errors.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut list: Vec<(Vertex, Vertex)> = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
            }
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a}, {b}) out of range for {n} vertices"
                )));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!("duplicate edge ({}, {})", w[0].0, w[0].1)));
        }
        Ok(Graph { n, edges: list })
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> (Vertex, Vertex) {
        self.edges[index]
    }

    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_index(u, v).is_some()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Adjacency lists of `(neighbor, edge index)`, neighbors ascending.
    pub fn adjacency(&self) -> Vec<Vec<(Vertex, usize)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((v, i));
            adj[v].push((u, i));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// The subgraph formed by the given edges, with vertices relabeled
    /// compactly in increasing order of their original labels. Returns the
    /// graph and the new-to-old vertex map.
    pub fn edge_induced(&self, edge_ids: &[usize]) -> (Graph, Vec<Vertex>) {
        let mut verts: Vec<Vertex> = edge_ids
            .iter()
            .flat_map(|&e| {
                let (u, v) = self.edges[e];
                [u, v]
            })
            .collect();
        verts.sort_unstable();
        verts.dedup();
        let mut relabel = vec![usize::MAX; self.n];
        for (new, &old) in verts.iter().enumerate() {
            relabel[old] = new;
        }
        let edges = edge_ids.iter().map(|&e| {
            let (u, v) = self.edges[e];
            (relabel[u], relabel[v])
        });
        let g = Graph::new(verts.len(), edges).expect("edge-induced subgraph of a simple graph is simple");
        (g, verts)
    }

    /// Connected components as sorted vertex lists (isolated vertices are
    /// singleton components).
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut dsu = Dsu::new(self.n);
        for &(u, v) in &self.edges {
            dsu.union(u, v);
        }
        let mut by_root: Vec<Vec<Vertex>> = vec![Vec::new(); self.n];
        for v in 0..self.n {
            by_root[dsu.find(v)].push(v);
        }
        let mut comps: Vec<Vec<Vertex>> = by_root.into_iter().filter(|c| !c.is_empty()).collect();
        comps.sort();
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn full_mask(&self) -> SubgraphMask {
        SubgraphMask::full(self.edge_count())
    }

    pub fn empty_mask(&self) -> SubgraphMask {
        SubgraphMask::empty(self.edge_count())
    }

    /// Degree tuple of the spanning subgraph selected by `mask`.
    pub fn degree_tuple(&self, mask: &SubgraphMask) -> Result<DegreeTuple> {
        self.check_mask(mask)?;
        let mut deg = vec![0u32; self.n];
        for e in mask.iter_ones() {
            let (u, v) = self.edges[e];
            deg[u] += 1;
            deg[v] += 1;
        }
        Ok(DegreeTuple(deg))
    }

    pub(crate) fn check_mask(&self, mask: &SubgraphMask) -> Result<()> {
        if mask.parent_edge_count() != self.edge_count() {
            return Err(Error::InvalidMask(format!(
                "mask covers {} edges, graph has {}",
                mask.parent_edge_count(),
                self.edge_count()
            )));
        }
        Ok(())
    }

    /// Text form: `n m` then one `u v` line per edge in canonical order.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Parses the text form. Blank lines and `#` comments are skipped; line
    /// numbers in errors refer to the input as given.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (header_line, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing header `n m`".into(),
        })?;
        let nums = parse_pair(header_line, header)?;
        let (n, m) = nums;
        let mut edges = Vec::with_capacity(m);
        let mut seen = std::collections::HashSet::new();
        for (line, body) in lines.by_ref().take(m) {
            let (u, v) = parse_pair(line, body)?;
            if u == v {
                return Err(Error::Parse { line, message: format!("loop at vertex {u}") });
            }
            if u > v {
                return Err(Error::Parse { line, message: format!("edge ({u}, {v}) must have u < v") });
            }
            if v >= n {
                return Err(Error::Parse { line, message: format!("vertex {v} out of range for n = {n}") });
            }
            if !seen.insert((u, v)) {
                return Err(Error::Parse { line, message: format!("duplicate edge ({u}, {v})") });
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: header_line,
                message: format!("header announces {m} edges, found {}", edges.len()),
            });
        }
        if let Some((line, _)) = lines.next() {
            return Err(Error::Parse { line, message: "unexpected content after the last edge".into() });
        }
        Graph::new(n, edges)
    }
}

fn parse_pair(line: usize, body: &str) -> Result<(usize, usize)> {
    let fields: Vec<&str> = body.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse { line, message: format!("expected two integers, got `{body}`") });
    }
    let p = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| Error::Parse { line, message: format!("`{s}` is not a non-negative integer") })
    };
    Ok((p(fields[0])?, p(fields[1])?))
}

impl FromStr for Graph {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Graph::parse(s)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// A subset of a parent graph's edge indices, i.e. a spanning subgraph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SubgraphMask {
    parent_edge_count: usize,
    words: Vec<u64>,
}

impl SubgraphMask {
    pub fn empty(parent_edge_count: usize) -> Self {
        SubgraphMask { parent_edge_count, words: vec![0; parent_edge_count.div_ceil(64)] }
    }

    pub fn full(parent_edge_count: usize) -> Self {
        let mut mask = Self::empty(parent_edge_count);
        for i in 0..parent_edge_count {
            mask.insert(i);
        }
        mask
    }

    /// Mask from the low bits of a single word. Bits at or above
    /// `parent_edge_count` are rejected.
    pub fn from_bits(parent_edge_count: usize, bits: u64) -> Result<Self> {
        if parent_edge_count < 64 && bits >> parent_edge_count != 0 {
            return Err(Error::InvalidMask(format!(
                "bits {bits:#x} exceed {parent_edge_count} edges"
            )));
        }
        let mut mask = Self::empty(parent_edge_count);
        if parent_edge_count > 0 {
            mask.words[0] = bits;
        }
        Ok(mask)
    }

    pub fn from_indices(parent_edge_count: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut mask = Self::empty(parent_edge_count);
        for i in indices {
            if i >= parent_edge_count {
                return Err(Error::InvalidMask(format!("edge index {i} out of range {parent_edge_count}")));
            }
            mask.insert(i);
        }
        Ok(mask)
    }

    pub fn parent_edge_count(&self) -> usize {
        self.parent_edge_count
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// The mask as one word, if the parent has at most 64 edges.
    pub fn as_u64(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.parent_edge_count && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.parent_edge_count, "edge index out of range");
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        assert!(i < self.parent_edge_count, "edge index out of range");
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let b = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }
}

/// Ordered tuple of vertex degrees, indexed by vertex label. Never sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DegreeTuple(pub Vec<u32>);

impl DegreeTuple {
    pub fn zeros(n: usize) -> Self {
        DegreeTuple(vec![0; n])
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&d| d as u64).sum()
    }
}

impl fmt::Display for DegreeTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// Union-find with path halving and union by size.
#[derive(Debug, Clone)]
pub(crate) struct Dsu {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl Dsu {
    pub fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle_with_pendant() -> Graph {
        // triangle on 0,1,2 with pendant leaf 3 attached at 0
        Graph::new(4, [(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap()
    }

    #[test]
    fn canonical_edge_order() {
        let g = Graph::new(3, [(2, 1), (1, 0), (2, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(g.edge_index(2, 0), Some(1));
    }

    #[test]
    fn rejects_loops_duplicates_and_range() {
        assert!(matches!(Graph::new(2, [(0, 0)]), Err(Error::InvalidGraph(_))));
        assert!(matches!(Graph::new(2, [(0, 1), (1, 0)]), Err(Error::InvalidGraph(_))));
        assert!(matches!(Graph::new(2, [(0, 2)]), Err(Error::InvalidGraph(_))));
    }

    #[test]
    fn degree_tuple_examples() {
        let c4 = cycle(4).unwrap();
        assert_eq!(c4.degree_tuple(&c4.full_mask()).unwrap(), DegreeTuple(vec![2, 2, 2, 2]));
        assert_eq!(c4.degree_tuple(&c4.empty_mask()).unwrap(), DegreeTuple::zeros(4));

        let g = triangle_with_pendant();
        let pendant = g.edge_index(0, 3).unwrap();
        let h = SubgraphMask::from_indices(4, [pendant]).unwrap();
        assert_eq!(g.degree_tuple(&h).unwrap(), DegreeTuple(vec![1, 0, 0, 1]));
    }

    #[test]
    fn degree_tuple_rejects_foreign_mask() {
        let g = cycle(5).unwrap();
        assert!(matches!(g.degree_tuple(&SubgraphMask::empty(4)), Err(Error::InvalidMask(_))));
    }

    #[test]
    fn text_round_trip_and_errors() {
        let g = triangle_with_pendant();
        assert_eq!(Graph::parse(&g.to_text()).unwrap(), g);

        let err = Graph::parse("3 2\n0 1\n1 1\n").unwrap_err();
        assert_eq!(err, Error::Parse { line: 3, message: "loop at vertex 1".into() });
        let err = Graph::parse("3 2\n0 1\n0 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        let err = Graph::parse("3 1\n0 5\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = Graph::parse("3 2\n0 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        assert!(Graph::parse("").is_err());
    }

    #[test]
    fn mask_bits_and_words() {
        let m = SubgraphMask::from_bits(5, 0b10110).unwrap();
        assert_eq!(m.iter_ones().collect::<Vec<_>>(), vec![1, 2, 4]);
        assert_eq!(m.len(), 3);
        assert!(SubgraphMask::from_bits(3, 0b1000).is_err());

        let mut big = SubgraphMask::empty(130);
        big.insert(0);
        big.insert(64);
        big.insert(129);
        assert_eq!(big.words().len(), 3);
        assert_eq!(big.iter_ones().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert_eq!(big.as_u64(), None);
    }

    #[test]
    fn edge_induced_relabels() {
        let g = triangle_with_pendant();
        let ids = [g.edge_index(0, 3).unwrap()];
        let (h, map) = g.edge_induced(&ids);
        assert_eq!(h.vertex_count(), 2);
        assert_eq!(h.edges(), &[(0, 1)]);
        assert_eq!(map, vec![0, 3]);
    }

    #[test]
    fn degenerate_graphs() {
        let g = Graph::empty(0);
        assert_eq!(g.degree_tuple(&g.empty_mask()).unwrap(), DegreeTuple(vec![]));
        assert!(g.is_connected());
        assert_eq!(Graph::empty(3).components().len(), 3);
    }
}
