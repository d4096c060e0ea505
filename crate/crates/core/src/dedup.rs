//! Deduplication of packed integer keys: a dense bitset when the key space
//! is small enough, otherwise a hash set.

use std::sync::atomic::{AtomicU64, Ordering};

use rustc_hash::FxHashSet;

/// Key spaces up to this many bits use a bitset (at most 512 MiB).
pub(crate) const BITSET_LIMIT: u128 = 1 << 32;

/// Lock-free bitset shared by parallel workers; the final population count
/// does not depend on which worker set which bit.
pub(crate) struct AtomicBitset {
    words: Vec<AtomicU64>,
}

impl AtomicBitset {
    pub fn new(bits: u64) -> Self {
        let words = (bits as usize).div_ceil(64).max(1);
        AtomicBitset { words: (0..words).map(|_| AtomicU64::new(0)).collect() }
    }

    #[inline]
    pub fn set(&self, key: u64) {
        let w = &self.words[(key / 64) as usize];
        let bit = 1u64 << (key % 64);
        if w.load(Ordering::Relaxed) & bit == 0 {
            w.fetch_or(bit, Ordering::Relaxed);
        }
    }

    pub fn count(&self) -> u64 {
        self.words.iter().map(|w| w.load(Ordering::Relaxed).count_ones() as u64).sum()
    }

    pub fn ones(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for (i, w) in self.words.iter().enumerate() {
            let mut rest = w.load(Ordering::Relaxed);
            while rest != 0 {
                out.push(i as u64 * 64 + rest.trailing_zeros() as u64);
                rest &= rest - 1;
            }
        }
        out
    }
}

/// Plain bitset for single-threaded small enumerations.
pub(crate) struct Bitset {
    words: Vec<u64>,
    count: u64,
}

impl Bitset {
    pub fn new(bits: u64) -> Self {
        Bitset { words: vec![0; (bits as usize).div_ceil(64).max(1)], count: 0 }
    }

    #[inline]
    pub fn insert(&mut self, key: u64) {
        let w = &mut self.words[(key / 64) as usize];
        let bit = 1u64 << (key % 64);
        if *w & bit == 0 {
            *w |= bit;
            self.count += 1;
        }
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn ones(&self) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.count as usize);
        for (i, &w) in self.words.iter().enumerate() {
            let mut rest = w;
            while rest != 0 {
                out.push(i as u64 * 64 + rest.trailing_zeros() as u64);
                rest &= rest - 1;
            }
        }
        out
    }
}

/// Merges per-shard hash sets; associative, so any reduction order gives
/// the same set.
pub(crate) fn merge_sets(mut a: FxHashSet<u128>, b: FxHashSet<u128>) -> FxHashSet<u128> {
    if a.len() < b.len() {
        return merge_sets(b, a);
    }
    a.extend(b);
    a
}
