//! Cluster block decomposition of the adjacency matrix.

use crate::binary::BinaryMatrix;
use crate::density::{DensityMatrix, Sign};
use crate::error::{Error, Result};
use crate::graph::{ClusterLabeling, Graph};

/// `A(G) = [A_{mu,nu}]` as an `m x m` grid of `n x n` binary blocks, plus the
/// whole-graph degree `d_{mu,i}` of every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    m: usize,
    n: usize,
    blocks: Vec<BinaryMatrix>,
    degrees: Vec<usize>,
    total_degree: usize,
}

/// Splits `g` into cluster blocks under `lab`.
pub fn block_decompose(g: &Graph, lab: &ClusterLabeling) -> Result<BlockDecomposition> {
    if g.vertex_count() != lab.vertex_count() {
        return Err(Error::Dimension(format!(
            "graph has {} vertices but m*n = {}",
            g.vertex_count(),
            lab.vertex_count()
        )));
    }
    let (m, n) = (lab.m(), lab.n());
    let adj = g.adjacency();
    let graph_degrees = g.degrees();
    let mut blocks = Vec::with_capacity(m * m);
    for mu in 0..m {
        for nu in 0..m {
            blocks.push(BinaryMatrix::from_fn(n, |i, j| {
                adj.get(lab.vertex(mu, i), lab.vertex(nu, j))
            }));
        }
    }
    let degrees = (0..m * n).map(|k| graph_degrees[lab.permutation()[k]]).collect();
    Ok(BlockDecomposition {
        m,
        n,
        blocks,
        degrees,
        total_degree: g.total_degree(),
    })
}

impl BlockDecomposition {
    /// Assembles a decomposition directly from blocks; degrees are the row
    /// sums of each block row. Fails unless the grid is a valid symmetric
    /// adjacency matrix.
    pub fn from_blocks(m: usize, n: usize, blocks: Vec<BinaryMatrix>) -> Result<Self> {
        if m == 0 || n == 0 || blocks.len() != m * m || blocks.iter().any(|b| b.order() != n) {
            return Err(Error::Dimension(format!("expected {m}x{m} grid of order-{n} blocks")));
        }
        for mu in 0..m {
            for nu in 0..m {
                if blocks[nu * m + mu] != blocks[mu * m + nu].transpose() {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        let mut degrees = vec![0; m * n];
        for mu in 0..m {
            for i in 0..n {
                degrees[mu * n + i] = (0..m).map(|nu| blocks[mu * m + nu].row_sum(i)).sum();
            }
        }
        // a loop contributes 1, each proper edge is seen from both ends
        let total_degree = degrees.iter().sum();
        Ok(BlockDecomposition {
            m,
            n,
            blocks,
            degrees,
            total_degree,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.m * self.n
    }

    /// `A_{mu,nu}` (0-based cluster indices).
    pub fn block(&self, mu: usize, nu: usize) -> &BinaryMatrix {
        &self.blocks[mu * self.m + nu]
    }

    /// `d_{mu,i}`.
    pub fn degree(&self, mu: usize, i: usize) -> usize {
        self.degrees[mu * self.n + i]
    }

    /// Degrees of the vertices of `C_mu`, i.e. the diagonal of `D_mu`.
    pub fn cluster_degrees(&self, mu: usize) -> &[usize] {
        &self.degrees[mu * self.n..(mu + 1) * self.n]
    }

    pub fn total_degree(&self) -> usize {
        self.total_degree
    }

    /// `X_{mu,nu}(i, j)`.
    pub fn edge_characteristic(&self, mu: usize, nu: usize, i: usize, j: usize) -> Result<u8> {
        for (index, order) in [(mu, self.m), (nu, self.m), (i, self.n), (j, self.n)] {
            if index >= order {
                return Err(Error::IndexOutOfRange { index, order });
            }
        }
        Ok(self.block(mu, nu).entry(i, j))
    }

    /// Reassembles the full `mn x mn` adjacency matrix in labeling order.
    pub fn adjacency(&self) -> BinaryMatrix {
        let n = self.n;
        BinaryMatrix::from_fn(self.vertex_count(), |r, c| {
            self.block(r / n, c / n).get(r % n, c % n)
        })
    }

    /// Row-major integer matrix `D + sA` in labeling order.
    pub(crate) fn shifted_adjacency(&self, sign: Sign) -> Vec<i64> {
        let order = self.vertex_count();
        let s = sign.value();
        let n = self.n;
        let mut out = vec![0i64; order * order];
        for r in 0..order {
            for c in 0..order {
                let a = i64::from(self.block(r / n, c / n).entry(r % n, c % n));
                out[r * order + c] = s * a;
            }
            out[r * order + r] += self.degrees[r] as i64;
        }
        out
    }

    /// Every block `A_{mu,nu}` is symmetric.
    pub fn is_partially_symmetric(&self) -> bool {
        self.blocks.iter().all(BinaryMatrix::is_symmetric)
    }

    pub fn density_matrix(&self, sign: Sign) -> Result<DensityMatrix> {
        DensityMatrix::from_decomposition(self, sign)
    }
}

/// Bipartite graph `G_M` on `2n` vertices with adjacency `[[0, M], [M^t, 0]]`:
/// vertex `k < n` is `v_{mu,k}` and vertex `n + k` is `v_{nu,k}`.
pub fn bipartite_graph_of(matrix: &BinaryMatrix) -> Graph {
    let n = matrix.order();
    let edges = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| matrix.get(i, j))
        .map(|(i, j)| (i, n + j));
    Graph::from_zero_based(2 * n.max(1), edges, []).expect("bipartite edges are in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn final_example() -> BlockDecomposition {
        let g = Graph::build(4, &[(1, 3), (1, 4), (2, 3)], &[]).unwrap();
        block_decompose(&g, &ClusterLabeling::natural(2, 2).unwrap()).unwrap()
    }

    fn complete(count: usize) -> Graph {
        let edges: Vec<_> = (0..count)
            .flat_map(|u| (u + 1..count).map(move |v| (u, v)))
            .collect();
        Graph::from_zero_based(count, edges, []).unwrap()
    }

    #[test]
    fn final_example_blocks() {
        let dec = final_example();
        assert!(dec.block(0, 0).is_zero());
        assert!(dec.block(1, 1).is_zero());
        assert_eq!(dec.block(0, 1), &BinaryMatrix::from_rows(&[[1, 1], [1, 0]]).unwrap());
        assert_eq!(dec.cluster_degrees(0), &[2, 1]);
        assert_eq!(dec.cluster_degrees(1), &[2, 1]);
        assert_eq!(dec.total_degree(), 6);
    }

    #[test]
    fn empty_graph_blocks() {
        let g = Graph::empty(6).unwrap();
        let dec = block_decompose(&g, &ClusterLabeling::new(2, 3, &[6, 5, 4, 3, 2, 1]).unwrap()).unwrap();
        assert!((0..2).all(|a| (0..2).all(|b| dec.block(a, b).is_zero())));
        assert_eq!(dec.total_degree(), 0);
    }

    #[test]
    fn complete_k4_blocks() {
        let dec = block_decompose(&complete(4), &ClusterLabeling::natural(2, 2).unwrap()).unwrap();
        let swap = BinaryMatrix::from_rows(&[[0, 1], [1, 0]]).unwrap();
        assert_eq!(dec.block(0, 0), &swap);
        assert_eq!(dec.block(1, 1), &swap);
        assert_eq!(dec.block(0, 1), &BinaryMatrix::ones(2));
    }

    #[test]
    fn dimension_mismatch() {
        let g = Graph::empty(5).unwrap();
        assert!(matches!(
            block_decompose(&g, &ClusterLabeling::natural(2, 2).unwrap()),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn edge_characteristic_values() {
        let dec = final_example();
        assert_eq!(dec.edge_characteristic(0, 1, 0, 0), Ok(1));
        assert_eq!(dec.edge_characteristic(0, 0, 0, 1), Ok(0));
        for mu in 0..2 {
            for i in 0..2 {
                assert_eq!(dec.edge_characteristic(mu, mu, i, i), Ok(0));
            }
        }
        assert!(dec.edge_characteristic(2, 0, 0, 0).is_err());
        assert!(dec.edge_characteristic(0, 0, 0, 2).is_err());
    }

    #[test]
    fn loops_on_block_diagonal() {
        let g = Graph::build(4, &[(1, 2)], &[2]).unwrap();
        let dec = block_decompose(&g, &ClusterLabeling::natural(2, 2).unwrap()).unwrap();
        assert_eq!(dec.block(0, 0), &BinaryMatrix::from_rows(&[[0, 1], [1, 1]]).unwrap());
        assert_eq!(dec.degree(0, 1), 2);
    }

    #[test]
    fn bipartite_graph_of_example_3_1() {
        let m = BinaryMatrix::from_rows(&[[0, 1, 1], [1, 0, 0], [1, 0, 0]]).unwrap();
        let g = bipartite_graph_of(&m);
        assert_eq!(g.vertex_count(), 6);
        let one_based: Vec<_> = g.edges().map(|(u, v)| (u + 1, v + 1)).collect();
        assert_eq!(one_based, vec![(1, 5), (1, 6), (2, 4), (3, 4)]);

        assert_eq!(bipartite_graph_of(&BinaryMatrix::zeros(3)).edge_count(), 0);
        let k22 = bipartite_graph_of(&BinaryMatrix::ones(2));
        assert_eq!(k22.edge_count(), 4);
        assert!(k22.has_edge(0, 2) && k22.has_edge(1, 3) && !k22.has_edge(0, 1));
    }

    #[test]
    fn partial_symmetry() {
        assert!(final_example().is_partially_symmetric());
        let g = Graph::build(4, &[(1, 4)], &[]).unwrap();
        let dec = block_decompose(&g, &ClusterLabeling::natural(2, 2).unwrap()).unwrap();
        assert!(!dec.is_partially_symmetric());
        let k33: Vec<_> = (1..=3).flat_map(|i| (4..=6).map(move |j| (i, j))).collect();
        let g = Graph::build(6, &k33, &[]).unwrap();
        let dec = block_decompose(&g, &ClusterLabeling::natural(2, 3).unwrap()).unwrap();
        assert!(dec.is_partially_symmetric());
    }

    #[test]
    fn from_blocks_matches_decompose() {
        let dec = final_example();
        let blocks = (0..2)
            .flat_map(|a| (0..2).map(move |b| (a, b)))
            .map(|(a, b)| dec.block(a, b).clone())
            .collect();
        assert_eq!(BlockDecomposition::from_blocks(2, 2, blocks).unwrap(), dec);
        let bad = vec![
            BinaryMatrix::zeros(2),
            BinaryMatrix::identity(2),
            BinaryMatrix::zeros(2),
            BinaryMatrix::zeros(2),
        ];
        assert_eq!(BlockDecomposition::from_blocks(2, 2, bad), Err(Error::NotSymmetric));
    }
}
