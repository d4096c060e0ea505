//! Symmetric differences of subgraphs and color-alternating Euler circuits.
//!
//! Edges of `H1 \ H2` are red, edges of `H2 \ H1` are blue. Two subgraphs
//! have the same degree tuple exactly when every vertex meets as many red
//! as blue edges, which in turn holds exactly when every component of the
//! difference carries a closed trail covering it with alternating colors.

use serde::{Deserialize, Serialize};

use super::{Dsu, Graph, SubgraphMask, Vertex};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    /// Edge of the first subgraph only.
    First,
    /// Edge of the second subgraph only.
    Second,
}

/// A closed trail through one component of the symmetric difference:
/// `vertices[i]` to `vertices[i + 1]` (cyclically) along `edges[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlternatingCircuit {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<usize>,
    pub sides: Vec<Side>,
}

pub fn symmetric_difference(a: &SubgraphMask, b: &SubgraphMask) -> Result<SubgraphMask> {
    if a.parent_edge_count() != b.parent_edge_count() {
        return Err(Error::InvalidMask(format!(
            "masks over {} and {} edges",
            a.parent_edge_count(),
            b.parent_edge_count()
        )));
    }
    let mut out = a.clone();
    for (w, &bw) in out.words.iter_mut().zip(b.words()) {
        *w ^= bw;
    }
    Ok(out)
}

/// True iff every component of `H1 △ H2` has a color-alternating Euler
/// circuit. A `true` answer is backed by an explicitly constructed and
/// checked set of circuits.
pub fn verify_alternating_euler(g: &Graph, h1: &SubgraphMask, h2: &SubgraphMask) -> Result<bool> {
    Ok(alternating_circuits(g, h1, h2)?.is_some())
}

/// Constructs one alternating Euler circuit per component of `H1 △ H2`,
/// or `None` if some vertex meets unequal numbers of red and blue edges.
pub fn alternating_circuits(
    g: &Graph,
    h1: &SubgraphMask,
    h2: &SubgraphMask,
) -> Result<Option<Vec<AlternatingCircuit>>> {
    g.check_mask(h1)?;
    g.check_mask(h2)?;
    let diff = symmetric_difference(h1, h2)?;
    if diff.is_empty() {
        return Err(Error::DegenerateInput);
    }
    let n = g.vertex_count();
    let edges: Vec<usize> = diff.iter_ones().collect();
    let side = |e: usize| if h1.contains(e) { Side::First } else { Side::Second };

    let mut red: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut blue: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &e in &edges {
        let (u, v) = g.edge(e);
        let lists = if side(e) == Side::First { &mut red } else { &mut blue };
        lists[u].push(e);
        lists[v].push(e);
    }
    if (0..n).any(|v| red[v].len() != blue[v].len()) {
        return Ok(None);
    }

    // Transition system: at vertex v the i-th red edge is paired with the
    // i-th blue edge. Half-edge (e, end) is keyed by e*2 + end, end 0 = low
    // endpoint.
    let m = g.edge_count();
    let mut partner = vec![usize::MAX; 2 * m];
    let half = |e: usize, v: Vertex| e * 2 + usize::from(g.edge(e).1 == v);
    for v in 0..n {
        for (&r, &b) in red[v].iter().zip(&blue[v]) {
            partner[half(r, v)] = half(b, v);
            partner[half(b, v)] = half(r, v);
        }
    }

    // Label the closed trails of the initial transition system.
    let mut trail_of = vec![usize::MAX; m];
    let mut trails = 0;
    for &start in &edges {
        if trail_of[start] != usize::MAX {
            continue;
        }
        walk(g, &partner, start, |e| trail_of[e] = trails);
        trails += 1;
    }

    // Re-pair at shared vertices to splice distinct trails together.
    let mut dsu = Dsu::new(trails);
    for v in 0..n {
        let pairs = red[v].len();
        for i in 1..pairs {
            let (r0, b0) = (red[v][0], blue[v][0]);
            let (ri, bi) = (red[v][i], blue[v][i]);
            let t0 = trail_of[r0];
            let ti = trail_of[ri];
            if dsu.find(t0) != dsu.find(ti) {
                dsu.union(t0, ti);
                partner[half(r0, v)] = half(bi, v);
                partner[half(bi, v)] = half(r0, v);
                partner[half(ri, v)] = half(b0, v);
                partner[half(b0, v)] = half(ri, v);
                blue[v].swap(0, i);
            }
        }
    }

    let mut used = vec![false; m];
    let mut circuits = Vec::new();
    for &start in &edges {
        if used[start] {
            continue;
        }
        let mut circuit = AlternatingCircuit { vertices: Vec::new(), edges: Vec::new(), sides: Vec::new() };
        let (lo, _) = g.edge(start);
        let mut at = lo;
        walk(g, &partner, start, |e| {
            used[e] = true;
            circuit.vertices.push(at);
            circuit.edges.push(e);
            circuit.sides.push(side(e));
            let (a, b) = g.edge(e);
            at = if a == at { b } else { a };
        });
        circuits.push(circuit);
    }

    check_circuits(g, &diff, &circuits)?;
    Ok(Some(circuits))
}

/// Follows transitions from `start`, leaving through its high endpoint,
/// until the trail closes. Visits every edge of the trail once.
fn walk(g: &Graph, partner: &[usize], start: usize, mut visit: impl FnMut(usize)) {
    let mut e = start;
    // enter e at its low endpoint, so we leave through the high endpoint
    let mut entry_end = 0usize;
    loop {
        visit(e);
        let exit_half = e * 2 + (1 - entry_end);
        let next_half = partner[exit_half];
        let next = next_half / 2;
        let next_entry = next_half % 2;
        if next == start && next_entry == 0 {
            break;
        }
        debug_assert!(next != start || g.edge(start).0 == g.edge(start).1);
        e = next;
        entry_end = next_entry;
    }
}

fn check_circuits(g: &Graph, diff: &SubgraphMask, circuits: &[AlternatingCircuit]) -> Result<()> {
    let mut covered = SubgraphMask::empty(g.edge_count());
    let comps = component_count(g, diff);
    if circuits.len() != comps {
        return Err(Error::Precondition(format!(
            "{} circuits for {comps} components",
            circuits.len()
        )));
    }
    for c in circuits {
        let len = c.edges.len();
        if len % 2 != 0 {
            return Err(Error::Precondition("odd alternating circuit".into()));
        }
        for i in 0..len {
            let (a, b) = g.edge(c.edges[i]);
            let (from, to) = (c.vertices[i], c.vertices[(i + 1) % len]);
            if !((a == from && b == to) || (a == to && b == from)) {
                return Err(Error::Precondition("circuit is not a trail".into()));
            }
            if c.sides[i] == c.sides[(i + 1) % len] {
                return Err(Error::Precondition("circuit colors do not alternate".into()));
            }
            if covered.contains(c.edges[i]) {
                return Err(Error::Precondition("circuit reuses an edge".into()));
            }
            covered.insert(c.edges[i]);
        }
    }
    if &covered != diff {
        return Err(Error::Precondition("circuits do not cover the difference".into()));
    }
    Ok(())
}

fn component_count(g: &Graph, mask: &SubgraphMask) -> usize {
    let mut dsu = Dsu::new(g.vertex_count());
    let mut touched = vec![false; g.vertex_count()];
    for e in mask.iter_ones() {
        let (u, v) = g.edge(e);
        dsu.union(u, v);
        touched[u] = true;
        touched[v] = true;
    }
    let mut roots: Vec<usize> = (0..g.vertex_count()).filter(|&v| touched[v]).map(|v| dsu.find(v)).collect();
    roots.sort_unstable();
    roots.dedup();
    roots.len()
}
