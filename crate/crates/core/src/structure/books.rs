//! Generalized books: cycles ("pages") sharing one base edge, with or
//! without the base itself.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::scalar::{pow2, Count};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BookSpec {
    pages: Vec<u32>,
    with_base: bool,
}

impl BookSpec {
    pub fn new(pages: Vec<u32>, with_base: bool) -> Result<Self> {
        if pages.is_empty() {
            return Err(Error::invalid_param("a book needs at least one page"));
        }
        if let Some(c) = pages.iter().find(|&&c| c < 3) {
            return Err(Error::invalid_param(format!("page length {c} is below 3")));
        }
        Ok(BookSpec { pages, with_base })
    }

    /// Page cycle lengths, counted with the base edge.
    pub fn pages(&self) -> &[u32] {
        &self.pages
    }

    pub fn with_base(&self) -> bool {
        self.with_base
    }

    pub fn vertex_count(&self) -> usize {
        2 + self.pages.iter().map(|&c| c as usize - 2).sum::<usize>()
    }

    pub fn edge_count(&self) -> usize {
        self.pages.iter().map(|&c| c as usize - 1).sum::<usize>() + usize::from(self.with_base)
    }

    /// With the base every page is a cycle, so all pages must be even.
    /// Without it the cycles are unions of two pages of lengths
    /// `c_i + c_j - 2`, so all pages must share a parity.
    pub fn is_bipartite(&self) -> bool {
        if self.with_base {
            self.pages.iter().all(|c| c % 2 == 0)
        } else {
            self.pages.iter().all(|c| c % 2 == self.pages[0] % 2)
        }
    }
}

impl std::fmt::Display for BookSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let pages: Vec<String> = self.pages.iter().map(u32::to_string).collect();
        write!(f, "book:{}", pages.join(","))?;
        if !self.with_base {
            write!(f, ":nobase")?;
        }
        Ok(())
    }
}

/// Base endpoints are 0 and 1; the internal vertices of page `i` follow in
/// order from 0's side to 1's side.
pub fn book_graph(spec: &BookSpec) -> Graph {
    let mut edges = Vec::with_capacity(spec.edge_count());
    if spec.with_base {
        edges.push((0, 1));
    }
    let mut next = 2;
    for &c in &spec.pages {
        let mut prev = 0;
        for _ in 0..c - 2 {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 1));
    }
    Graph::new(next, edges).expect("book construction is simple")
}

/// Recognizes a graph that is exactly a book with at least two pages (with
/// base) or three pages (without). Isolated vertices are not allowed.
pub fn recognize_book(g: &Graph) -> Option<BookSpec> {
    let deg = g.degrees();
    if deg.iter().any(|&d| d == 0 || d == 1) {
        return None;
    }
    let hubs: Vec<Vertex> = (0..g.vertex_count()).filter(|&v| deg[v] >= 3).collect();
    if hubs.len() != 2 {
        return None;
    }
    let (l, r) = (hubs[0], hubs[1]);
    if deg[l] != deg[r] {
        return None;
    }
    let adj = g.adjacency();
    let with_base = g.has_edge(l, r);
    let mut pages = Vec::new();
    let mut used = 0;
    for &(start, _) in &adj[l] {
        if start == r {
            continue;
        }
        let (mut prev, mut cur, mut len) = (l, start, 1u32);
        while cur != r {
            if cur == l || deg[cur] != 2 {
                return None;
            }
            let next = adj[cur].iter().map(|&(w, _)| w).find(|&w| w != prev)?;
            prev = cur;
            cur = next;
            len += 1;
        }
        used += len as usize;
        pages.push(len + 1);
    }
    if used + usize::from(with_base) != g.edge_count() {
        return None;
    }
    if !with_base && pages.len() < 3 {
        return None;
    }
    pages.sort_unstable();
    BookSpec::new(pages, with_base).ok()
}

fn page_factors<T: Count>(spec: &BookSpec, offset: u32) -> Vec<T> {
    spec.pages.iter().map(|&c| pow2::<T>(c - 1) - T::from(offset)).collect()
}

/// `R = prod (2^(c-1) - 1)`; with base `2R + sum_j R / (2^(c_j-1) - 1)`,
/// without base `R + sum_j ...`. Each quotient is the product with factor
/// `j` left out.
pub fn book_forest_count<T: Count>(spec: &BookSpec) -> T {
    let r = page_factors::<T>(spec, 1);
    let k = r.len();
    // prefix/suffix products give every leave-one-out product
    let mut prefix = vec![T::one(); k + 1];
    for i in 0..k {
        prefix[i + 1] = prefix[i].clone() * r[i].clone();
    }
    let mut suffix = vec![T::one(); k + 1];
    for i in (0..k).rev() {
        suffix[i] = suffix[i + 1].clone() * r[i].clone();
    }
    let mut total = prefix[k].clone();
    if spec.with_base {
        total = total * T::from(2);
    }
    for j in 0..k {
        total = total + prefix[j].clone() * suffix[j + 1].clone();
    }
    total
}

/// `sum_S coef(S) prod_{i not in S} (2^(c_i-1) - 2)` with coefficient
/// `(|S_even|+2)(|S_odd|+1)` with base and `(|S_even|+1)(|S_odd|+1)`
/// without. Evaluated by a DP over `(|S_even|, |S_odd|)` instead of all
/// `2^k` subsets.
pub fn book_degree_count<T: Count>(spec: &BookSpec) -> T {
    let t = page_factors::<T>(spec, 2);
    let evens = spec.pages.iter().filter(|c| *c % 2 == 0).count();
    let odds = spec.pages.len() - evens;
    let width = odds + 1;
    // dp[e * width + o]: sum over subsets with e even and o odd pages in S
    let mut dp = vec![T::zero(); (evens + 1) * width];
    dp[0] = T::one();
    let (mut seen_e, mut seen_o) = (0, 0);
    for (i, &c) in spec.pages.iter().enumerate() {
        let even = c % 2 == 0;
        let mut next = vec![T::zero(); dp.len()];
        for e in 0..=seen_e {
            for o in 0..=seen_o {
                let cur = dp[e * width + o].clone();
                if cur.is_zero() {
                    continue;
                }
                next[e * width + o] = next[e * width + o].clone() + cur.clone() * t[i].clone();
                let idx = if even { (e + 1) * width + o } else { e * width + o + 1 };
                next[idx] = next[idx].clone() + cur;
            }
        }
        dp = next;
        if even {
            seen_e += 1;
        } else {
            seen_o += 1;
        }
    }
    let base_extra = u32::from(spec.with_base);
    let mut total = T::zero();
    for e in 0..=evens {
        for o in 0..=odds {
            let coef = T::from((e as u32 + 1 + base_extra) * (o as u32 + 1));
            total = total + coef * dp[e * width + o].clone();
        }
    }
    total
}
