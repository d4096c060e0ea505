//! k-colored subforests of the 2 x n ladder.
//!
//! Every ladder edge is either absent (color 0) or carries one of `k`
//! colors. A colored forest on `n` columns is *semicyclic* when adding a
//! fully wired extra column (two horizontals and a rung) would close a
//! cycle; equivalently, for some column `i` the rung at `i` and both
//! horizontal runs from `i` to the last column are present.

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::budget::{saturating_pow, Budget};
use crate::error::{Error, Result};
use crate::graph::is_acyclic_bits;
use crate::scalar::{pow2, Count};
use crate::tridiagonal::{grid2, Ladder};
use crate::Exact;

/// A coloring of the edges of the `2 x n` ladder in canonical edge order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoredSubgraph {
    columns: usize,
    k: u32,
    colors: Vec<u32>,
}

impl ColoredSubgraph {
    pub fn new(columns: usize, k: u32, colors: Vec<u32>) -> Result<Self> {
        if columns == 0 || k == 0 {
            return Err(Error::invalid_param("colored ladder needs n >= 1 and k >= 1"));
        }
        if colors.len() != 3 * columns - 2 {
            return Err(Error::invalid_param(format!(
                "{} colors for a ladder with {} edges",
                colors.len(),
                3 * columns - 2
            )));
        }
        if let Some(&c) = colors.iter().find(|&&c| c > k) {
            return Err(Error::invalid_param(format!("color {c} exceeds k = {k}")));
        }
        Ok(ColoredSubgraph { columns, k, colors })
    }

    /// Builds a coloring from present edges given as ladder roles; every
    /// listed edge gets color 1.
    pub fn from_roles(columns: usize, k: u32, rungs: &[usize], top: &[usize], bottom: &[usize]) -> Result<Self> {
        let ladder = Ladder::new(columns);
        let mut colors = vec![0; 3 * columns - 2];
        for &i in rungs {
            colors[ladder.rung(i)] = 1;
        }
        for &i in top {
            colors[ladder.top(i)] = 1;
        }
        for &i in bottom {
            colors[ladder.bottom(i)] = 1;
        }
        Self::new(columns, k, colors)
    }

    pub fn columns(&self) -> usize {
        self.columns
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn support(&self) -> u64 {
        self.colors
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .fold(0, |acc, (i, _)| acc | 1 << i)
    }

    pub fn is_acyclic(&self) -> bool {
        let g = grid2(self.columns).expect("columns >= 1");
        let edges: Vec<(u8, u8)> = g.edges().iter().map(|&(u, v)| (u as u8, v as u8)).collect();
        is_acyclic_bits(&edges, g.vertex_count(), self.support())
    }
}

/// Semicyclicity of an acyclic colored ladder; cyclic input is rejected.
pub fn is_semicyclic(f: &ColoredSubgraph) -> Result<bool> {
    if f.columns > 64 {
        return Err(Error::invalid_param("ladders above 64 columns are not supported"));
    }
    if !f.is_acyclic() {
        return Err(Error::Precondition("semicyclic test needs an acyclic subgraph".into()));
    }
    let ladder = Ladder::new(f.columns);
    Ok(semicyclic_support(&ladder, f.support()))
}

/// Scans columns from the last one down; the runs to the last column stay
/// intact only while both horizontals keep being present.
pub(crate) fn semicyclic_support(ladder: &Ladder, support: u64) -> bool {
    let has = |e: usize| support >> e & 1 == 1;
    let n = ladder.columns();
    let mut i = n - 1;
    loop {
        if has(ladder.rung(i)) {
            return true;
        }
        if i == 0 || !(has(ladder.top(i - 1)) && has(ladder.bottom(i - 1))) {
            return false;
        }
        i -= 1;
    }
}

/// Exact census of colored forests: total, semicyclic and non-semicyclic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredCensus<T = Exact> {
    pub a: T,
    pub a_semi: T,
    pub a_not: T,
}

#[derive(Clone, Copy)]
enum Class {
    Cyclic,
    Plain,
    Semi,
}

/// Enumerates all `(k+1)^(3n-2)` colorings of the ladder, keeps the
/// acyclic ones and classifies them. Colorings are visited by an odometer
/// over canonical edge positions, least significant first; the top digits
/// are fixed per parallel shard.
pub fn colored_forest_census(n: usize, k: u32, budget: Budget) -> Result<ColoredCensus> {
    if n == 0 || k == 0 {
        return Err(Error::invalid_param("colored census needs n >= 1 and k >= 1"));
    }
    let m = 3 * n - 2;
    let work = saturating_pow(k as u128 + 1, m as u32);
    budget.check(format!("colored census n={n} k={k}"), work)?;
    if m > 40 {
        return Err(Error::invalid_param("ladder too long for colored enumeration"));
    }
    let g = grid2(n)?;
    let ladder = Ladder::new(n);
    let edges: Vec<(u8, u8)> = g.edges().iter().map(|&(u, v)| (u as u8, v as u8)).collect();
    let classes: Vec<Class> = (0u64..1 << m)
        .map(|s| {
            if !is_acyclic_bits(&edges, g.vertex_count(), s) {
                Class::Cyclic
            } else if semicyclic_support(&ladder, s) {
                Class::Semi
            } else {
                Class::Plain
            }
        })
        .collect();

    let base = k as u64 + 1;
    let fixed = m.min(if work > 1 << 16 { 3 } else { 0 });
    let inner = m - fixed;
    let shard_count = base.pow(fixed as u32);
    let tally = |shard: u64| -> (u64, u64) {
        let mut digits = vec![0u64; m];
        let mut support: u64 = 0;
        let mut rest = shard;
        for (pos, d) in digits.iter_mut().enumerate().skip(inner) {
            *d = rest % base;
            rest /= base;
            if *d != 0 {
                support |= 1 << pos;
            }
        }
        let (mut plain, mut semi) = (0u64, 0u64);
        loop {
            match classes[support as usize] {
                Class::Cyclic => {}
                Class::Plain => plain += 1,
                Class::Semi => semi += 1,
            }
            let mut pos = 0;
            loop {
                if pos == inner {
                    return (plain, semi);
                }
                digits[pos] += 1;
                if digits[pos] == base {
                    digits[pos] = 0;
                    support &= !(1 << pos);
                    pos += 1;
                } else {
                    support |= 1 << pos;
                    break;
                }
            }
        }
    };
    let (plain, semi) = (0..shard_count)
        .into_par_iter()
        .map(tally)
        .reduce(|| (0, 0), |x, y| (x.0 + y.0, x.1 + y.1));
    Ok(ColoredCensus {
        a: BigUint::from(plain + semi),
        a_semi: BigUint::from(semi),
        a_not: BigUint::from(plain),
    })
}

/// Terms `1..=n_max` of the coupled recurrences
/// `a_not(n) = (2k+1) a(n-1) + k^2 a_not(n-1)` and
/// `a_semi(n) = k a_not(n) + k^2 a_semi(n-1)`, seeded with
/// `a_not(1) = 1`, `a_semi(1) = k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredStreams<T = Exact> {
    pub terms: Vec<ColoredCensus<T>>,
}

pub fn colored_streams<T: Count>(n_max: usize, k: u32) -> ColoredStreams<T> {
    let kk = T::from(k);
    let k2 = kk.clone() * kk.clone();
    let mut terms: Vec<ColoredCensus<T>> = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let term = if n == 1 {
            ColoredCensus { a: kk.clone() + T::one(), a_semi: kk.clone(), a_not: T::one() }
        } else {
            let prev = &terms[n - 2];
            let a_not = (T::from(2) * kk.clone() + T::one()) * prev.a.clone() + k2.clone() * prev.a_not.clone();
            let a_semi = kk.clone() * a_not.clone() + k2.clone() * prev.a_semi.clone();
            ColoredCensus { a: a_not.clone() + a_semi.clone(), a_semi, a_not }
        };
        terms.push(term);
    }
    ColoredStreams { terms }
}

/// `a_n` from `a_1 = k+1`, `a_2 = 4k^3 + 6k^2 + 4k + 1` and
/// `a_n = (4k^2 + 3k + 1) a_{n-1} - (k^4 + 2k^3 + k^2) a_{n-2}`.
pub fn colored_recurrence<T: Count>(n: usize, k: u32) -> Result<T> {
    if n == 0 || k == 0 {
        return Err(Error::invalid_param("colored recurrence needs n >= 1 and k >= 1"));
    }
    let kk = T::from(k);
    let k2 = kk.clone() * kk.clone();
    let k3 = k2.clone() * kk.clone();
    let k4 = k2.clone() * k2.clone();
    let a1 = kk.clone() + T::one();
    let a2 = T::from(4) * k3.clone() + T::from(6) * k2.clone() + T::from(4) * kk.clone() + T::one();
    if n == 1 {
        return Ok(a1);
    }
    let grow = T::from(4) * k2.clone() + T::from(3) * kk.clone() + T::one();
    let shrink = k4 + T::from(2) * k3 + k2;
    let (mut prev, mut cur) = (a1, a2);
    for _ in 2..n {
        let next = grow.clone() * cur.clone() - shrink.clone() * prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `2^(3n-2)`, the number of uncolored ladder subgraphs; a sanity bound.
pub fn ladder_subsets<T: Count>(n: usize) -> T {
    pow2(3 * n as u32 - 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_column() {
        for k in 1..6 {
            let c = colored_forest_census(1, k, Budget::DEFAULT).unwrap();
            assert_eq!(c.a, BigUint::from(k + 1));
            assert_eq!(c.a_semi, BigUint::from(k));
            assert_eq!(c.a_not, BigUint::from(1u32));
        }
        let rung = ColoredSubgraph::from_roles(1, 3, &[0], &[], &[]).unwrap();
        assert!(is_semicyclic(&rung).unwrap());
        let empty = ColoredSubgraph::from_roles(1, 3, &[], &[], &[]).unwrap();
        assert!(!is_semicyclic(&empty).unwrap());
    }

    #[test]
    fn semicyclic_through_earlier_rung() {
        // both horizontals, rung at the first column, last rung absent
        let f = ColoredSubgraph::from_roles(2, 1, &[0], &[0], &[0]).unwrap();
        assert!(is_semicyclic(&f).unwrap());
        let broken = ColoredSubgraph::from_roles(2, 1, &[0], &[0], &[]).unwrap();
        assert!(!is_semicyclic(&broken).unwrap());
        let cyclic = ColoredSubgraph::from_roles(2, 1, &[0, 1], &[0], &[0]).unwrap();
        assert!(matches!(is_semicyclic(&cyclic), Err(Error::Precondition(_))));
    }

    #[test]
    fn small_census_values() {
        assert_eq!(colored_forest_census(2, 1, Budget::DEFAULT).unwrap().a, BigUint::from(15u32));
        assert_eq!(colored_forest_census(2, 2, Budget::DEFAULT).unwrap().a, BigUint::from(65u32));
        assert_eq!(colored_forest_census(3, 2, Budget::DEFAULT).unwrap().a, BigUint::from(1387u32));
    }

    #[test]
    fn recurrence_values() {
        assert_eq!(colored_recurrence::<u64>(2, 1).unwrap(), 15);
        assert_eq!(colored_recurrence::<u64>(3, 1).unwrap(), 112);
        assert_eq!(colored_recurrence::<u64>(3, 2).unwrap(), 1387);
        assert_eq!(colored_recurrence::<u64>(1, 4).unwrap(), 5);
        for k in 1..=6u64 {
            assert_eq!(colored_recurrence::<u64>(2, k as u32).unwrap(), 4 * k.pow(3) + 6 * k * k + 4 * k + 1);
        }
        assert!(colored_recurrence::<u64>(0, 1).is_err());
    }

    #[test]
    fn streams_agree_with_order_two_recurrence() {
        for k in 1..6 {
            let s = colored_streams::<u128>(12, k);
            for (i, t) in s.terms.iter().enumerate() {
                assert_eq!(t.a, colored_recurrence::<u128>(i + 1, k).unwrap());
                assert_eq!(t.a, t.a_semi + t.a_not);
            }
        }
    }

    #[test]
    fn uncolored_census_is_bounded_by_subsets() {
        for n in 1..5 {
            let c = colored_forest_census(n, 1, Budget::DEFAULT).unwrap();
            assert!(c.a <= ladder_subsets::<BigUint>(n));
        }
    }

    #[test]
    fn budget_rejects_large_cells() {
        assert!(matches!(
            colored_forest_census(5, 4, Budget(1_000_000)),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
