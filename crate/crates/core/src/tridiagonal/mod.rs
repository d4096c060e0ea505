//! Tridiagonal matrices over contiguous entry sets and their realizable
//! row/column sum pairs.

mod gr;
mod ladder;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{DegreeTuple, Graph};

pub use gr::{
    count_gr, enumerate_gr, gr_collision_census, gr_recurrence_sequence, CollisionCensus, GrCodec, GrSet,
};
pub use ladder::{complete_tridiagonal_graph, grid2, grid_tridiagonal_isomorphism, Ladder};

/// `X = {q, q+1, ..., q+k}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EntrySet {
    pub q: i64,
    pub k: u32,
}

impl EntrySet {
    pub const BINARY: EntrySet = EntrySet { q: 0, k: 1 };

    pub fn new(q: i64, k: u32) -> Self {
        EntrySet { q, k }
    }

    /// Accepts only contiguous integer ranges.
    pub fn from_values(values: &[i64]) -> Result<Self> {
        let mut v = values.to_vec();
        v.sort_unstable();
        v.dedup();
        let (&lo, &hi) = match (v.first(), v.last()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Err(Error::invalid_param("entry set is empty")),
        };
        if (hi - lo) as usize + 1 != v.len() {
            return Err(Error::invalid_param(format!("entry set {v:?} is not a contiguous range")));
        }
        Ok(EntrySet { q: lo, k: (hi - lo) as u32 })
    }

    pub fn len(&self) -> usize {
        self.k as usize + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= self.q && x <= self.q + self.k as i64
    }

    pub fn values(&self) -> impl Iterator<Item = i64> {
        let q = self.q;
        (0..=self.k as i64).map(move |d| q + d)
    }
}

/// Order-`n` matrix with band `|i - j| <= 1`; `sub[i] = a_{i+1,i}`,
/// `main[i] = a_{i,i}`, `sup[i] = a_{i,i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TridiagonalMatrix {
    n: usize,
    sub: Vec<i64>,
    main: Vec<i64>,
    sup: Vec<i64>,
}

impl TridiagonalMatrix {
    pub fn new(sub: Vec<i64>, main: Vec<i64>, sup: Vec<i64>) -> Result<Self> {
        let n = main.len();
        if n == 0 {
            return Err(Error::invalid_param("matrix order must be at least 1"));
        }
        if sub.len() != n - 1 || sup.len() != n - 1 {
            return Err(Error::invalid_param(format!(
                "diagonals of lengths {}, {}, {} do not form an order-{n} band",
                sub.len(),
                n,
                sup.len()
            )));
        }
        Ok(TridiagonalMatrix { n, sub, main, sup })
    }

    pub fn identity(n: usize) -> Self {
        Self::new(vec![0; n.saturating_sub(1)], vec![1; n], vec![0; n.saturating_sub(1)]).expect("valid order")
    }

    pub fn zero(n: usize) -> Self {
        Self::new(vec![0; n.saturating_sub(1)], vec![0; n], vec![0; n.saturating_sub(1)]).expect("valid order")
    }

    /// All band entries equal to one.
    pub fn complete(n: usize) -> Self {
        Self::new(vec![1; n.saturating_sub(1)], vec![1; n], vec![1; n.saturating_sub(1)]).expect("valid order")
    }

    /// Builds the matrix from positions in odometer order: sub, main, super.
    pub fn from_positions(n: usize, values: &[i64]) -> Result<Self> {
        if n == 0 || values.len() != 3 * n - 2 {
            return Err(Error::invalid_param("wrong number of band entries"));
        }
        Self::new(
            values[..n - 1].to_vec(),
            values[n - 1..2 * n - 1].to_vec(),
            values[2 * n - 1..].to_vec(),
        )
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        if i == j {
            self.main[i]
        } else if i == j + 1 {
            self.sub[j]
        } else if j == i + 1 {
            self.sup[i]
        } else {
            0
        }
    }

    pub fn entries_in(&self, x: &EntrySet) -> bool {
        self.sub.iter().chain(&self.main).chain(&self.sup).all(|&v| x.contains(v))
    }

    /// Top-left submatrix of order `n - 1`.
    pub fn truncate(&self) -> Option<Self> {
        if self.n < 2 {
            return None;
        }
        let m = self.n - 1;
        Some(
            Self::new(
                self.sub[..m.saturating_sub(1)].to_vec(),
                self.main[..m].to_vec(),
                self.sup[..m.saturating_sub(1)].to_vec(),
            )
            .expect("truncation keeps the band shape"),
        )
    }
}

/// Row and column sum vectors of a matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RowColPair {
    pub r: Vec<i64>,
    pub c: Vec<i64>,
}

pub fn row_col_sums(a: &TridiagonalMatrix) -> RowColPair {
    let n = a.n;
    let mut r = a.main.clone();
    let mut c = a.main.clone();
    for i in 0..n - 1 {
        r[i + 1] += a.sub[i];
        c[i] += a.sub[i];
        r[i] += a.sup[i];
        c[i + 1] += a.sup[i];
    }
    RowColPair { r, c }
}

/// Bipartite graph with biadjacency matrix `a`: row `i` is vertex `i`,
/// column `j` is vertex `n + j`.
pub fn biadjacency_graph(a: &TridiagonalMatrix) -> Result<Graph> {
    if !a.entries_in(&EntrySet::BINARY) {
        return Err(Error::Domain("biadjacency needs a (0,1) matrix".into()));
    }
    let n = a.n;
    let edges = (0..n).flat_map(|i| (i.saturating_sub(1)..(i + 2).min(n)).map(move |j| (i, j)));
    let present: Vec<(usize, usize)> = edges.filter(|&(i, j)| a.get(i, j) == 1).map(|(i, j)| (i, n + j)).collect();
    Graph::new(2 * n, present)
}

/// `(r, c)` as the degree tuple of the biadjacency graph: rows first.
pub fn rowcol_to_degree_tuple(p: &RowColPair) -> Result<DegreeTuple> {
    if p.r.len() != p.c.len() {
        return Err(Error::invalid_param("row and column vectors differ in length"));
    }
    p.r.iter()
        .chain(&p.c)
        .map(|&x| u32::try_from(x).map_err(|_| Error::Domain(format!("sum {x} is not a degree"))))
        .collect::<Result<Vec<u32>>>()
        .map(DegreeTuple)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_bipartite;

    #[test]
    fn sums_of_small_matrices() {
        let z = TridiagonalMatrix::zero(1);
        assert_eq!(row_col_sums(&z), RowColPair { r: vec![0], c: vec![0] });
        let id = TridiagonalMatrix::identity(2);
        assert_eq!(row_col_sums(&id), RowColPair { r: vec![1, 1], c: vec![1, 1] });
        let anti = TridiagonalMatrix::new(vec![1], vec![0, 0], vec![1]).unwrap();
        assert_eq!(row_col_sums(&anti), row_col_sums(&id));
    }

    #[test]
    fn sums_match_dense_definition() {
        let a = TridiagonalMatrix::new(vec![2, -1, 0], vec![1, 3, 0, 5], vec![4, 1, -2]).unwrap();
        let p = row_col_sums(&a);
        for i in 0..4 {
            assert_eq!(p.r[i], (0..4).map(|j| a.get(i, j)).sum::<i64>());
            assert_eq!(p.c[i], (0..4).map(|j| a.get(j, i)).sum::<i64>());
        }
        assert_eq!(p.r.iter().sum::<i64>(), p.c.iter().sum::<i64>());
    }

    #[test]
    fn entry_sets() {
        assert_eq!(EntrySet::from_values(&[3, 1, 2]).unwrap(), EntrySet::new(1, 2));
        assert!(EntrySet::from_values(&[0, 2]).is_err());
        assert!(EntrySet::from_values(&[]).is_err());
        assert_eq!(EntrySet::new(-2, 3).values().collect::<Vec<_>>(), vec![-2, -1, 0, 1]);
    }

    #[test]
    fn biadjacency_examples() {
        for n in 1..6 {
            let id = biadjacency_graph(&TridiagonalMatrix::identity(n)).unwrap();
            assert_eq!(id.edge_count(), n);
            assert!(id.degrees().iter().all(|&d| d == 1));
            let full = biadjacency_graph(&TridiagonalMatrix::complete(n)).unwrap();
            assert_eq!(full, complete_tridiagonal_graph(n).unwrap());
            assert!(is_bipartite(&full).is_bipartite());
            let zero = biadjacency_graph(&TridiagonalMatrix::zero(n)).unwrap();
            assert_eq!(zero.edge_count(), 0);
            let t = rowcol_to_degree_tuple(&row_col_sums(&TridiagonalMatrix::zero(n))).unwrap();
            assert_eq!(t, DegreeTuple::zeros(2 * n));
        }
        let bad = TridiagonalMatrix::new(vec![2], vec![0, 1], vec![0]).unwrap();
        assert!(matches!(biadjacency_graph(&bad), Err(Error::Domain(_))));
    }

    #[test]
    fn biadjacency_degrees_are_sums() {
        let a = TridiagonalMatrix::new(vec![1, 0], vec![1, 1, 0], vec![0, 1]).unwrap();
        let g = biadjacency_graph(&a).unwrap();
        let t = rowcol_to_degree_tuple(&row_col_sums(&a)).unwrap();
        assert_eq!(g.degree_tuple(&g.full_mask()).unwrap(), t);
    }

    #[test]
    fn truncation() {
        let a = TridiagonalMatrix::from_positions(3, &[1, 2, 3, 4, 5, 6, 7]).unwrap();
        assert_eq!(a.get(1, 0), 1);
        assert_eq!(a.get(2, 2), 5);
        assert_eq!(a.get(1, 2), 7);
        let t = a.truncate().unwrap();
        assert_eq!(t, TridiagonalMatrix::new(vec![1], vec![3, 4], vec![6]).unwrap());
        assert!(TridiagonalMatrix::identity(1).truncate().is_none());
    }
}
