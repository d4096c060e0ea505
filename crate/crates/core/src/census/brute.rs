use num_traits::ToPrimitive;
use rayon::prelude::*;
use rustc_hash::FxHashSet;

use crate::budget::Budget;
use crate::dedup::{merge_sets, AtomicBitset, Bitset, BITSET_LIMIT};
use crate::error::{Error, Result};
use crate::graph::{is_acyclic_bits, DegreeTuple, Graph};

/// Below this many edges enumeration stays on the calling thread.
const SERIAL_EDGES: usize = 18;
/// Number of high mask bits fixed per shard.
const SHARD_BITS: usize = 8;

/// Edge list relabeled onto the vertices that carry edges, as bytes.
struct Compact {
    n: usize,
    edges: Vec<(u8, u8)>,
}

fn compact(g: &Graph, what: &str, budget: Budget) -> Result<Compact> {
    let m = g.edge_count();
    if m > 63 {
        return Err(Error::BudgetExceeded {
            what: what.to_string(),
            projected: u128::MAX,
            budget: budget.0,
        });
    }
    budget.check(what, 1u128 << m)?;
    let (h, _) = g.edge_induced(&(0..m).collect::<Vec<_>>());
    Ok(Compact {
        n: h.vertex_count(),
        edges: h.edges().iter().map(|&(u, v)| (u as u8, v as u8)).collect(),
    })
}

fn shards(m: usize) -> (usize, usize) {
    if m <= SERIAL_EDGES {
        (0, m)
    } else {
        let hi = SHARD_BITS.min(m);
        (hi, m - hi)
    }
}

/// Number of edge subsets that form a forest, the empty subset included.
pub fn count_forests_brute(g: &Graph, budget: Budget) -> Result<u64> {
    let c = compact(g, "forest brute force", budget)?;
    let m = c.edges.len();
    let (hi_bits, lo_bits) = shards(m);
    let count_shard = |hi: u64| -> u64 {
        let base = hi << lo_bits;
        (0..1u64 << lo_bits)
            .filter(|&lo| is_acyclic_bits(&c.edges, c.n, base | lo))
            .count() as u64
    };
    if hi_bits == 0 {
        Ok(count_shard(0))
    } else {
        Ok((0..1u64 << hi_bits).into_par_iter().map(count_shard).sum())
    }
}

/// Packs degree tuples of subgraphs of a fixed graph into dense integer
/// keys: vertex `v` contributes `d(v) * w_v` with `w_v = prod_{u<v}
/// (deg_G(u) + 1)`, so the key space is `prod_v (deg_G(v) + 1)`.
#[derive(Debug, Clone)]
pub struct DegreeKeyer {
    weights: Vec<u128>,
    radices: Vec<u128>,
    space: u128,
    edge_steps: Vec<u128>,
}

impl DegreeKeyer {
    pub fn new(g: &Graph) -> Self {
        let degs = g.degrees();
        let mut weights = Vec::with_capacity(degs.len());
        let mut space: u128 = 1;
        for &d in &degs {
            weights.push(space);
            space = space.saturating_mul(d as u128 + 1);
        }
        let edge_steps = g.edges().iter().map(|&(u, v)| weights[u] + weights[v]).collect();
        DegreeKeyer { weights, radices: degs.iter().map(|&d| d as u128 + 1).collect(), space, edge_steps }
    }

    pub fn space(&self) -> u128 {
        self.space
    }

    /// Key change caused by adding edge `e` to a subgraph.
    pub fn edge_step(&self, e: usize) -> u128 {
        self.edge_steps[e]
    }

    pub fn key(&self, tuple: &DegreeTuple) -> u128 {
        tuple.0.iter().zip(&self.weights).map(|(&d, &w)| d as u128 * w).sum()
    }

    pub fn key_of_bits(&self, bits: u64) -> u128 {
        let mut key = 0;
        let mut rest = bits;
        while rest != 0 {
            key += self.edge_steps[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        key
    }

    pub fn decode(&self, mut key: u128) -> DegreeTuple {
        DegreeTuple(
            self.radices
                .iter()
                .map(|&r| {
                    let d = key % r;
                    key /= r;
                    d.to_u32().expect("degree fits u32")
                })
                .collect(),
        )
    }
}

enum KeySet {
    Bits(u64),
    Dense(Vec<u64>),
    Sparse(FxHashSet<u128>),
}

/// Gray-code walk over the low `lo_bits` bits with the high part fixed,
/// reporting the degree key of every subset.
#[inline]
fn gray_walk(keyer: &DegreeKeyer, hi: u64, lo_bits: usize, mut visit: impl FnMut(u128)) {
    let base = hi << lo_bits;
    let mut key = keyer.key_of_bits(base);
    let mut cur: u64 = 0;
    visit(key);
    for i in 1..1u64 << lo_bits {
        let bit = i.trailing_zeros() as usize;
        cur ^= 1 << bit;
        if cur >> bit & 1 == 1 {
            key += keyer.edge_steps[bit];
        } else {
            key -= keyer.edge_steps[bit];
        }
        visit(key);
    }
}

fn collect_keys(g: &Graph, budget: Budget, want_keys: bool) -> Result<(DegreeKeyer, KeySet)> {
    let m = g.edge_count();
    // degree-tuple keys depend only on the graph, not on compaction
    compact(g, "degree tuple brute force", budget)?;
    let keyer = DegreeKeyer::new(g);
    let (hi_bits, lo_bits) = shards(m);
    if keyer.space <= BITSET_LIMIT {
        let space = keyer.space as u64;
        if hi_bits == 0 {
            let mut set = Bitset::new(space);
            gray_walk(&keyer, 0, lo_bits, |k| set.insert(k as u64));
            let out = if want_keys { KeySet::Dense(set.ones()) } else { KeySet::Bits(set.count()) };
            return Ok((keyer, out));
        }
        let set = AtomicBitset::new(space);
        (0..1u64 << hi_bits)
            .into_par_iter()
            .for_each(|hi| gray_walk(&keyer, hi, lo_bits, |k| set.set(k as u64)));
        let out = if want_keys { KeySet::Dense(set.ones()) } else { KeySet::Bits(set.count()) };
        return Ok((keyer, out));
    }
    let set = (0..1u64 << hi_bits)
        .into_par_iter()
        .map(|hi| {
            let mut local = FxHashSet::default();
            gray_walk(&keyer, hi, lo_bits, |k| {
                local.insert(k);
            });
            local
        })
        .reduce(FxHashSet::default, merge_sets);
    Ok((keyer, KeySet::Sparse(set)))
}

/// `|D(G)|`: the number of distinct ordered degree tuples over all `2^m`
/// spanning subgraphs.
pub fn count_degree_tuples(g: &Graph, budget: Budget) -> Result<u64> {
    let (_, keys) = collect_keys(g, budget, false)?;
    Ok(match keys {
        KeySet::Bits(c) => c,
        KeySet::Dense(v) => v.len() as u64,
        KeySet::Sparse(s) => s.len() as u64,
    })
}

/// The set `D(G)` itself, sorted lexicographically.
pub fn degree_tuple_set(g: &Graph, budget: Budget) -> Result<Vec<DegreeTuple>> {
    let (keyer, keys) = collect_keys(g, budget, true)?;
    let mut out: Vec<DegreeTuple> = match keys {
        KeySet::Bits(_) => unreachable!("keys requested"),
        KeySet::Dense(v) => v.into_iter().map(|k| keyer.decode(k as u128)).collect(),
        KeySet::Sparse(s) => s.into_iter().map(|k| keyer.decode(k)).collect(),
    };
    out.sort_unstable();
    Ok(out)
}
