//! Enumeration of realizable row/column sum pairs of tridiagonal matrices.
//!
//! Band positions are visited by an odometer over `sub ++ main ++ super`,
//! least significant first. Each position adds a fixed amount to a packed
//! key of the sum pair, so the key is maintained incrementally and
//! deduplicated in a shared bitset (or merged hash sets when the key space
//! is too large).

use std::collections::BTreeMap;

use rayon::prelude::*;
use rustc_hash::{FxHashMap, FxHashSet};
use serde::{Deserialize, Serialize};

use super::{EntrySet, RowColPair};
use crate::budget::{saturating_pow, Budget};
use crate::dedup::{merge_sets, AtomicBitset, Bitset, BITSET_LIMIT};
use crate::error::{Error, Result};
use crate::scalar::Count;

/// Packs `(r, c)` for order-`n` matrices over `X` into an integer. The last
/// column sum is implied by `sum r = sum c` and is left out of the key.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrCodec {
    n: usize,
    x: EntrySet,
    band: Vec<i64>,
    row_weight: Vec<u128>,
    col_weight: Vec<u128>,
    space: u128,
}

impl GrCodec {
    pub fn new(n: usize, x: EntrySet) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid_param("matrix order must be at least 1"));
        }
        let band: Vec<i64> = (0..n).map(|i| ((i + 2).min(n) - i.saturating_sub(1)) as i64).collect();
        let radix = |i: usize| band[i] as u128 * x.k as u128 + 1;
        let mut space: u128 = 1;
        let mut row_weight = Vec::with_capacity(n);
        for i in 0..n {
            row_weight.push(space);
            space = space.saturating_mul(radix(i));
        }
        let mut col_weight = Vec::with_capacity(n);
        for j in 0..n {
            if j + 1 == n {
                col_weight.push(0);
            } else {
                col_weight.push(space);
                space = space.saturating_mul(radix(j));
            }
        }
        Ok(GrCodec { n, x, band, row_weight, col_weight, space })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn entry_set(&self) -> EntrySet {
        self.x
    }

    /// Number of representable keys.
    pub fn space(&self) -> u128 {
        self.space
    }

    /// `(row, column)` of odometer position `p`.
    pub fn position(&self, p: usize) -> (usize, usize) {
        let n = self.n;
        if p < n - 1 {
            (p + 1, p)
        } else if p < 2 * n - 1 {
            (p - (n - 1), p - (n - 1))
        } else {
            let i = p - (2 * n - 1);
            (i, i + 1)
        }
    }

    /// Key increment for raising the digit at position `p` by one.
    pub fn step(&self, p: usize) -> u128 {
        let (i, j) = self.position(p);
        self.row_weight[i] + self.col_weight[j]
    }

    pub fn encode(&self, pair: &RowColPair) -> Result<u128> {
        if pair.r.len() != self.n || pair.c.len() != self.n {
            return Err(Error::invalid_param("pair has the wrong order"));
        }
        let q = self.x.q;
        let mut key = 0u128;
        for i in 0..self.n {
            let lo = self.band[i] * q;
            let hi = self.band[i] * (q + self.x.k as i64);
            for (v, w) in [(pair.r[i], self.row_weight[i]), (pair.c[i], self.col_weight[i])] {
                if v < lo || v > hi {
                    return Err(Error::Domain(format!("sum {v} outside [{lo}, {hi}]")));
                }
                key += (v - lo) as u128 * w;
            }
        }
        Ok(key)
    }

    pub fn decode(&self, mut key: u128) -> RowColPair {
        let q = self.x.q;
        let k = self.x.k as u128;
        let mut r = Vec::with_capacity(self.n);
        for i in 0..self.n {
            let radix = self.band[i] as u128 * k + 1;
            r.push((key % radix) as i64 + self.band[i] * q);
            key /= radix;
        }
        let mut c = Vec::with_capacity(self.n);
        for j in 0..self.n - 1 {
            let radix = self.band[j] as u128 * k + 1;
            c.push((key % radix) as i64 + self.band[j] * q);
            key /= radix;
        }
        let last = r.iter().sum::<i64>() - c.iter().sum::<i64>();
        c.push(last);
        RowColPair { r, c }
    }
}

/// Deduplicated set of sum pairs, stored as sorted keys.
#[derive(Debug, Clone)]
pub struct GrSet {
    codec: GrCodec,
    keys: Vec<u128>,
}

impl GrSet {
    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn codec(&self) -> &GrCodec {
        &self.codec
    }

    pub fn keys(&self) -> &[u128] {
        &self.keys
    }

    pub fn pairs(&self) -> impl Iterator<Item = RowColPair> + '_ {
        self.keys.iter().map(|&k| self.codec.decode(k))
    }

    pub fn contains(&self, pair: &RowColPair) -> bool {
        self.codec
            .encode(pair)
            .map(|k| self.keys.binary_search(&k).is_ok())
            .unwrap_or(false)
    }
}

/// Visits the key of every matrix whose top `fixed` digits spell `shard`.
fn walk_shard(codec: &GrCodec, fixed: usize, shard: u64, mut visit: impl FnMut(u128)) {
    let m = 3 * codec.n - 2;
    let base = codec.x.k as u64 + 1;
    let inner = m - fixed;
    let steps: Vec<u128> = (0..m).map(|p| codec.step(p)).collect();
    let wrap: Vec<u128> = steps.iter().map(|&s| s * codec.x.k as u128).collect();
    let mut key = 0u128;
    let mut rest = shard;
    for &step in steps.iter().skip(inner) {
        key += (rest % base) as u128 * step;
        rest /= base;
    }
    let mut digits = vec![0u64; inner];
    loop {
        visit(key);
        let mut p = 0;
        loop {
            if p == inner {
                return;
            }
            if digits[p] + 1 == base {
                digits[p] = 0;
                key -= wrap[p];
                p += 1;
            } else {
                digits[p] += 1;
                key += steps[p];
                break;
            }
        }
    }
}

enum Collected {
    Count(u64),
    Keys(Vec<u128>),
}

fn collect(n: usize, x: EntrySet, budget: Budget, want_keys: bool) -> Result<(GrCodec, Collected)> {
    let codec = GrCodec::new(n, x)?;
    let m = 3 * n - 2;
    let work = saturating_pow(x.k as u128 + 1, m as u32);
    budget.check(format!("GR enumeration n={n} q={} k={}", x.q, x.k), work)?;
    let base = x.k as u64 + 1;
    // fix enough top digits to get a few hundred shards on large runs
    let mut fixed = 0;
    while fixed < m && work > 1 << 20 && base.pow(fixed as u32) < 256 {
        fixed += 1;
    }
    let shards = base.pow(fixed as u32);

    if codec.space <= BITSET_LIMIT {
        let space = codec.space as u64;
        if fixed == 0 {
            let mut set = Bitset::new(space);
            walk_shard(&codec, 0, 0, |k| set.insert(k as u64));
            let out = if want_keys {
                Collected::Keys(set.ones().into_iter().map(u128::from).collect())
            } else {
                Collected::Count(set.count())
            };
            return Ok((codec, out));
        }
        let set = AtomicBitset::new(space);
        (0..shards)
            .into_par_iter()
            .for_each(|s| walk_shard(&codec, fixed, s, |k| set.set(k as u64)));
        let out = if want_keys {
            Collected::Keys(set.ones().into_iter().map(u128::from).collect())
        } else {
            Collected::Count(set.count())
        };
        return Ok((codec, out));
    }
    let set = (0..shards)
        .into_par_iter()
        .map(|s| {
            let mut local = FxHashSet::default();
            walk_shard(&codec, fixed, s, |k| {
                local.insert(k);
            });
            local
        })
        .reduce(FxHashSet::default, merge_sets);
    let out = if want_keys {
        let mut keys: Vec<u128> = set.into_iter().collect();
        keys.sort_unstable();
        Collected::Keys(keys)
    } else {
        Collected::Count(set.len() as u64)
    };
    Ok((codec, out))
}

/// All distinct `(r, c)` over the `(k+1)^(3n-2)` order-`n` tridiagonal
/// matrices with entries in `X`.
pub fn enumerate_gr(n: usize, x: EntrySet, budget: Budget) -> Result<GrSet> {
    match collect(n, x, budget, true)? {
        (codec, Collected::Keys(keys)) => Ok(GrSet { codec, keys }),
        _ => unreachable!("keys requested"),
    }
}

/// Cardinality of [`enumerate_gr`] without materializing the set.
pub fn count_gr(n: usize, x: EntrySet, budget: Budget) -> Result<u64> {
    match collect(n, x, budget, false)? {
        (_, Collected::Count(c)) => Ok(c),
        (_, Collected::Keys(k)) => Ok(k.len() as u64),
    }
}

/// `a_1 = 2`, `a_2 = 15`, `a_n = 8 a_{n-1} - 4 a_{n-2}`; terms `1..=n_max`.
pub fn gr_recurrence_sequence<T: Count>(n_max: usize) -> Result<Vec<T>> {
    if n_max == 0 {
        return Err(Error::invalid_param("need at least one term"));
    }
    let mut out: Vec<T> = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let term = match n {
            1 => T::from(2),
            2 => T::from(15),
            _ => T::from(8) * out[n - 2].clone() - T::from(4) * out[n - 3].clone(),
        };
        out.push(term);
    }
    Ok(out)
}

/// How many order-`(n-1)` sum pairs each order-`n` pair extends, where
/// `(r, c)` extends `(r', c')` if some matrix realizing `(r, c)` has a
/// top-left order-`(n-1)` submatrix realizing `(r', c')`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollisionCensus {
    pub n: usize,
    pub gr_count: u64,
    pub extends_one: u64,
    pub extends_two: u64,
    /// Pairs extending three or more predecessors.
    pub extends_more: u64,
    /// Histogram: number of predecessors -> number of pairs.
    pub histogram: BTreeMap<usize, u64>,
    /// `4 |GR(n-2)|`, counted by enumeration.
    pub predicted_two: u64,
    /// Pairs with `(r_n, c_n) != (1, 1)` that extend other than exactly one
    /// predecessor.
    pub unique_extension_failures: Vec<RowColPair>,
}

/// Classifies every pair of `GR(3_n)` over `{0,1}` by its number of
/// predecessors. Requires `n >= 3`.
pub fn gr_collision_census(n: usize, budget: Budget) -> Result<CollisionCensus> {
    if n < 3 {
        return Err(Error::invalid_param("collision census needs n >= 3"));
    }
    let m = 3 * n - 2;
    budget.check(format!("collision census n={n}"), 1u128 << m)?;
    let big = GrCodec::new(n, EntrySet::BINARY)?;
    let small = GrCodec::new(n - 1, EntrySet::BINARY)?;
    let big_steps: Vec<u128> = (0..m).map(|p| big.step(p)).collect();
    // position in the order-(n-1) layout of each retained big position
    let small_pos = |p: usize| -> Option<usize> {
        let (i, j) = big.position(p);
        if i >= n - 1 || j >= n - 1 {
            return None;
        }
        let sm = 3 * (n - 1) - 2;
        (0..sm).find(|&s| small.position(s) == (i, j))
    };
    let small_steps: Vec<u128> = (0..m).map(|p| small_pos(p).map_or(0, |s| small.step(s))).collect();

    let mut links: FxHashSet<(u128, u128)> = FxHashSet::default();
    for bits in 0u64..1 << m {
        let (mut kb, mut ks) = (0u128, 0u128);
        let mut rest = bits;
        while rest != 0 {
            let p = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            kb += big_steps[p];
            ks += small_steps[p];
        }
        links.insert((kb, ks));
    }
    let mut per_pair: FxHashMap<u128, usize> = FxHashMap::default();
    for &(kb, _) in &links {
        *per_pair.entry(kb).or_insert(0) += 1;
    }

    let mut histogram = BTreeMap::new();
    let mut failures = Vec::new();
    for (&key, &count) in &per_pair {
        *histogram.entry(count).or_insert(0u64) += 1;
        let pair = big.decode(key);
        if (pair.r[n - 1], pair.c[n - 1]) != (1, 1) && count != 1 {
            failures.push(pair);
        }
    }
    failures.sort();
    let predicted_two = 4 * count_gr(n - 2, EntrySet::BINARY, budget)?;
    Ok(CollisionCensus {
        n,
        gr_count: per_pair.len() as u64,
        extends_one: histogram.get(&1).copied().unwrap_or(0),
        extends_two: histogram.get(&2).copied().unwrap_or(0),
        extends_more: histogram.range(3..).map(|(_, &c)| c).sum(),
        histogram,
        predicted_two,
        unique_extension_failures: failures,
    })
}
