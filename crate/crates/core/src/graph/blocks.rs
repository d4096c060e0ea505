//! Biconnected blocks, cut vertices and bridges (Hopcroft-Tarjan lowpoints).

use serde::{Deserialize, Serialize};

use super::{Graph, Vertex};

/// A maximal 2-connected piece, a single bridge, or an isolated vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    /// Sorted vertex labels.
    pub vertices: Vec<Vertex>,
    /// Sorted edge indices into the parent graph.
    pub edges: Vec<usize>,
}

impl Block {
    pub fn is_bridge(&self) -> bool {
        self.edges.len() == 1
    }

    /// A block is a cycle iff it has as many edges as vertices (and at
    /// least three of each); 2-connected blocks with that count are cycles.
    pub fn is_cycle(&self) -> bool {
        self.edges.len() >= 3 && self.edges.len() == self.vertices.len()
    }
}

struct Lowpoints {
    blocks: Vec<Block>,
    cut: Vec<bool>,
}

fn lowpoints(g: &Graph) -> Lowpoints {
    let n = g.vertex_count();
    let adj = g.adjacency();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut cut = vec![false; n];
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut timer = 0;

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        if adj[root].is_empty() {
            disc[root] = timer;
            timer += 1;
            blocks.push(Block { vertices: vec![root], edges: vec![] });
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0;
        // (vertex, parent edge, next adjacency position)
        let mut stack: Vec<(Vertex, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (u, parent_edge, ref mut pos)) = stack.last_mut() {
            if *pos < adj[u].len() {
                let (w, e) = adj[u][*pos];
                *pos += 1;
                if e == parent_edge {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push(e);
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if u == root {
                        root_children += 1;
                    }
                    stack.push((w, e, 0));
                } else if disc[w] < disc[u] {
                    edge_stack.push(e);
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        if p != root {
                            cut[p] = true;
                        }
                        let mut edges = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            edges.push(e);
                            if e == parent_edge {
                                break;
                            }
                        }
                        blocks.push(make_block(g, edges));
                    }
                }
            }
        }
        if root_children > 1 {
            cut[root] = true;
        }
    }
    Lowpoints { blocks, cut }
}

fn make_block(g: &Graph, mut edges: Vec<usize>) -> Block {
    edges.sort_unstable();
    let mut vertices: Vec<Vertex> = edges
        .iter()
        .flat_map(|&e| {
            let (u, v) = g.edge(e);
            [u, v]
        })
        .collect();
    vertices.sort_unstable();
    vertices.dedup();
    Block { vertices, edges }
}

/// Blocks of `g`, ordered by their smallest edge index; isolated vertices
/// form edgeless blocks listed after all others.
pub fn block_decomposition(g: &Graph) -> Vec<Block> {
    let mut blocks = lowpoints(g).blocks;
    blocks.sort_by_key(|b| (b.edges.is_empty(), b.edges.first().copied(), b.vertices[0]));
    blocks
}

pub fn articulation_points(g: &Graph) -> Vec<Vertex> {
    let cut = lowpoints(g).cut;
    (0..g.vertex_count()).filter(|&v| cut[v]).collect()
}

/// Edge indices of all bridges, ascending.
pub fn bridges(g: &Graph) -> Vec<usize> {
    let mut out: Vec<usize> = lowpoints(g)
        .blocks
        .into_iter()
        .filter(|b| b.is_bridge())
        .map(|b| b.edges[0])
        .collect();
    out.sort_unstable();
    out
}

/// Connected, and every block is a single edge or a cycle.
pub fn is_cactus(g: &Graph) -> bool {
    g.is_connected()
        && lowpoints(g)
            .blocks
            .iter()
            .all(|b| b.edges.len() <= 1 || b.is_cycle())
}
