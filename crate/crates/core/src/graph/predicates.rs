use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::{Dsu, Graph, SubgraphMask, Vertex};
use crate::error::Result;

/// True iff the spanning subgraph selected by `mask` has no cycle.
pub fn is_acyclic(g: &Graph, mask: &SubgraphMask) -> Result<bool> {
    g.check_mask(mask)?;
    let mut dsu = Dsu::new(g.vertex_count());
    for e in mask.iter_ones() {
        let (u, v) = g.edge(e);
        if !dsu.union(u, v) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Word-mask acyclicity for graphs with at most 64 edges and 256 vertices;
/// the hot path of brute-force enumeration.
#[inline]
pub fn is_acyclic_bits(edges: &[(u8, u8)], n: usize, bits: u64) -> bool {
    let mut parent = [0u8; 256];
    for (i, p) in parent.iter_mut().enumerate().take(n) {
        *p = i as u8;
    }
    #[inline]
    fn find(parent: &mut [u8; 256], mut x: u8) -> u8 {
        while parent[x as usize] != x {
            let gp = parent[parent[x as usize] as usize];
            parent[x as usize] = gp;
            x = gp;
        }
        x
    }
    let mut rest = bits;
    while rest != 0 {
        let e = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let (u, v) = edges[e];
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a == b {
            return false;
        }
        parent[a as usize] = b;
    }
    true
}

/// Outcome of a bipartiteness test, always with a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Bipartiteness {
    /// Side (0 or 1) of every vertex; adjacent vertices differ.
    Bipartite(Vec<u8>),
    /// Vertex sequence of an odd cycle, each consecutive pair (and the last
    /// with the first) adjacent.
    OddCycle(Vec<Vertex>),
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite(_))
    }
}

/// BFS two-coloring. On failure the witness is the odd cycle closed by the
/// first monochromatic edge found.
pub fn is_bipartite(g: &Graph) -> Bipartiteness {
    let n = g.vertex_count();
    let adj = g.adjacency();
    let mut color = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for root in 0..n {
        if color[root] != u8::MAX {
            continue;
        }
        color[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &(w, _) in &adj[u] {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if color[w] == color[u] {
                    return Bipartiteness::OddCycle(close_cycle(u, w, &parent, &depth));
                }
            }
        }
    }
    Bipartiteness::Bipartite(color)
}

fn close_cycle(u: Vertex, w: Vertex, parent: &[usize], depth: &[usize]) -> Vec<Vertex> {
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    // left ends at the common ancestor; right repeats it
    right.pop();
    right.reverse();
    left.extend(right);
    left
}
