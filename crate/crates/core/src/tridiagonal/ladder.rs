//! The complete 2 x n grid (ladder) and the complete tridiagonal bipartite
//! graph, with the explicit isomorphism between them.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Ladder `2 x n`: top row `v^i` is vertex `i`, bottom row `v_i` is vertex
/// `n + i`, columns `i = 0..n`.
pub fn grid2(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::invalid_param("grid needs at least one column"));
    }
    let top = (1..n).map(|i| (i - 1, i));
    let bottom = (1..n).map(|i| (n + i - 1, n + i));
    let rungs = (0..n).map(|i| (i, n + i));
    Graph::new(2 * n, top.chain(bottom).chain(rungs))
}

/// `K^3_{n,n}`: top part `0..n`, bottom part `n..2n`, top `i` adjacent to
/// bottom `j` iff `|i - j| <= 1`.
pub fn complete_tridiagonal_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::invalid_param("complete tridiagonal graph needs n >= 1"));
    }
    Graph::new(
        2 * n,
        (0..n).flat_map(|i| (i.saturating_sub(1)..(i + 2).min(n)).map(move |j| (i, n + j))),
    )
}

/// Vertex map from the ladder onto `K^3_{n,n}`: in every second column
/// (odd 0-based index) the top and bottom vertices trade places. Checked
/// edge by edge before returning.
pub fn grid_tridiagonal_isomorphism(n: usize) -> Result<Vec<Vertex>> {
    let grid = grid2(n)?;
    let tri = complete_tridiagonal_graph(n)?;
    let mut map = vec![0; 2 * n];
    for i in 0..n {
        let (top, bottom) = if i % 2 == 0 { (i, n + i) } else { (n + i, i) };
        map[i] = top;
        map[n + i] = bottom;
    }
    if grid.edge_count() != tri.edge_count() {
        return Err(Error::Precondition("edge counts differ".into()));
    }
    for &(u, v) in grid.edges() {
        if !tri.has_edge(map[u], map[v]) {
            return Err(Error::Precondition(format!("edge ({u}, {v}) is not preserved")));
        }
    }
    Ok(map)
}

/// Canonical edge indices of the ladder by role.
#[derive(Debug, Clone)]
pub struct Ladder {
    columns: usize,
    top: Vec<usize>,
    bottom: Vec<usize>,
    rung: Vec<usize>,
}

impl Ladder {
    pub fn new(columns: usize) -> Self {
        let g = grid2(columns).expect("columns >= 1");
        let n = columns;
        let idx = |u, v| g.edge_index(u, v).expect("ladder edge");
        Ladder {
            columns,
            top: (1..n).map(|i| idx(i - 1, i)).collect(),
            bottom: (1..n).map(|i| idx(n + i - 1, n + i)).collect(),
            rung: (0..n).map(|i| idx(i, n + i)).collect(),
        }
    }

    pub fn columns(&self) -> usize {
        self.columns
    }

    /// Top horizontal between columns `i` and `i + 1`.
    pub fn top(&self, i: usize) -> usize {
        self.top[i]
    }

    /// Bottom horizontal between columns `i` and `i + 1`.
    pub fn bottom(&self, i: usize) -> usize {
        self.bottom[i]
    }

    pub fn rung(&self, i: usize) -> usize {
        self.rung[i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle;

    #[test]
    fn small_cases() {
        let g1 = grid2(1).unwrap();
        let t1 = complete_tridiagonal_graph(1).unwrap();
        assert_eq!(g1.edges(), &[(0, 1)]);
        assert_eq!(t1.edges(), &[(0, 1)]);

        let c4 = cycle(4).unwrap();
        let g2 = grid2(2).unwrap();
        assert_eq!(g2.edge_count(), 4);
        assert_eq!(g2.degrees(), c4.degrees());
        assert!(g2.is_connected());
        let t2 = complete_tridiagonal_graph(2).unwrap();
        assert_eq!(t2.edge_count(), 4);
        assert_eq!(t2.degrees(), vec![2; 4]);
    }

    #[test]
    fn isomorphism_preserves_edges() {
        for n in 1..12 {
            let map = grid_tridiagonal_isomorphism(n).unwrap();
            let grid = grid2(n).unwrap();
            let tri = complete_tridiagonal_graph(n).unwrap();
            assert_eq!(grid.edge_count(), 3 * n - 2);
            assert_eq!(tri.edge_count(), 3 * n - 2);
            let mut image = map.clone();
            image.sort_unstable();
            assert_eq!(image, (0..2 * n).collect::<Vec<_>>());
            let mapped = Graph::new(2 * n, grid.edges().iter().map(|&(u, v)| (map[u], map[v]))).unwrap();
            assert_eq!(mapped, tri);
        }
    }

    #[test]
    fn ladder_roles() {
        let l = Ladder::new(3);
        let g = grid2(3).unwrap();
        assert_eq!(g.edge(l.top(1)), (1, 2));
        assert_eq!(g.edge(l.bottom(0)), (3, 4));
        assert_eq!(g.edge(l.rung(2)), (2, 5));
    }
}
