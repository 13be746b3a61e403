//! Independent verification layer: direct integer matrix algebra on the
//! blocks of `D + sA`, floating-point validation of density matrices, and
//! the entropy-based discord for a fixed measurement basis.
//!
//! The matrix routines never call into [`crate::measures`]; only the
//! equivalence sweeps put the two side by side.

mod entropy;
mod equivalence;
mod intmatrix;

pub use entropy::{
    basis_discord, block_eigenbasis, eigenbasis_discord, fixed_basis_discord, von_neumann_entropy, EntropyReport,
};
pub use equivalence::{
    exhaustive_equivalence, qd_oracle_sweep, sampled_equivalence, MAX_EXHAUSTIVE_ORDER, OrderCount, VerificationMode,
    VerificationSummary,
};
pub use intmatrix::{commutator_l1, normality_defect_l1, IntMatrix};

use nalgebra::SymmetricEigen;
use num_rational::Ratio;
use serde::Serialize;

use crate::block::BlockDecomposition;
use crate::density::{DensityMatrix, Sign};

/// `B_{mu,mu} = D_mu + s A_{mu,mu}`.
pub fn diagonal_block(decomp: &BlockDecomposition, mu: usize, sign: Sign) -> IntMatrix {
    let d = IntMatrix::diagonal(
        &decomp
            .cluster_degrees(mu)
            .iter()
            .map(|&x| x as i64)
            .collect::<Vec<_>>(),
    );
    d.scaled_add(&IntMatrix::from(decomp.block(mu, mu)), sign.value())
}

/// The four violation sums evaluated by matrix products:
/// `[prop2, prop3, prop4, prop5]`.
pub fn oracle_violations(decomp: &BlockDecomposition, sign: Sign) -> [u64; 4] {
    let m = decomp.m();
    let off: Vec<(usize, usize)> = (0..m)
        .flat_map(|mu| (0..m).map(move |nu| (mu, nu)))
        .filter(|(mu, nu)| mu != nu)
        .collect();
    let blocks: Vec<IntMatrix> = (0..m * m)
        .map(|k| IntMatrix::from(decomp.block(k / m, k % m)))
        .collect();
    let block = |mu: usize, nu: usize| &blocks[mu * m + nu];
    let diag: Vec<IntMatrix> = (0..m).map(|mu| diagonal_block(decomp, mu, sign)).collect();

    let prop2 = off.iter().map(|&(mu, nu)| normality_defect_l1(block(mu, nu))).sum();
    let mut prop3 = 0;
    for &p in &off {
        for &q in &off {
            if p != q {
                prop3 += commutator_l1(block(p.0, p.1), block(q.0, q.1)).expect("equal orders");
            }
        }
    }
    let mut prop4 = 0;
    for d in &diag {
        for &(alpha, beta) in &off {
            prop4 += commutator_l1(d, block(alpha, beta)).expect("equal orders");
        }
    }
    let prop5 = off
        .iter()
        .map(|&(mu, nu)| commutator_l1(&diag[mu], &diag[nu]).expect("equal orders"))
        .sum();
    [prop2, prop3, prop4, prop5]
}

/// Oracle value of `QD(G)`: sum of [`oracle_violations`].
pub fn oracle_qd(decomp: &BlockDecomposition, sign: Sign) -> u64 {
    oracle_violations(decomp, sign).iter().sum()
}

/// Truth value of each block condition, by direct matrix algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BlockConditions {
    pub prop1: bool,
    pub prop2: bool,
    pub prop3: bool,
    pub prop4: bool,
    pub prop5: bool,
}

impl BlockConditions {
    pub fn all(&self) -> bool {
        self.prop1 && self.prop2 && self.prop3 && self.prop4 && self.prop5
    }
}

pub fn check_block_conditions(decomp: &BlockDecomposition, sign: Sign) -> BlockConditions {
    let prop1 = (0..decomp.m()).all(|mu| normality_defect_l1(&diagonal_block(decomp, mu, sign)) == 0);
    let [p2, p3, p4, p5] = oracle_violations(decomp, sign);
    BlockConditions {
        prop1,
        prop2: p2 == 0,
        prop3: p3 == 0,
        prop4: p4 == 0,
        prop5: p5 == 0,
    }
}

/// Outcome of [`validate_density`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DensityValidation {
    Valid,
    NotSymmetric,
    TraceNotOne,
    NotPositiveSemidefinite { min_eigenvalue: f64 },
}

impl DensityValidation {
    pub fn is_valid(&self) -> bool {
        matches!(self, DensityValidation::Valid)
    }
}

/// Exact symmetry and unit trace, then eigenvalues `>= -tolerance`.
pub fn validate_density(rho: &DensityMatrix, tolerance: f64) -> DensityValidation {
    if !rho.is_symmetric() {
        return DensityValidation::NotSymmetric;
    }
    if rho.trace() != Ratio::from_integer(1) {
        return DensityValidation::TraceNotOne;
    }
    let eig = SymmetricEigen::new(rho.to_f64());
    let min = eig.eigenvalues.iter().copied().fold(f64::INFINITY, f64::min);
    if min < -tolerance {
        DensityValidation::NotPositiveSemidefinite { min_eigenvalue: min }
    } else {
        DensityValidation::Valid
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::block::block_decompose;
    use crate::density::Rational;
    use crate::graph::{ClusterLabeling, Graph};

    fn natural(g: &Graph, m: usize, n: usize) -> BlockDecomposition {
        block_decompose(g, &ClusterLabeling::natural(m, n).unwrap()).unwrap()
    }

    fn complete(count: usize) -> Graph {
        let edges: Vec<_> = (0..count)
            .flat_map(|u| (u + 1..count).map(move |v| (u, v)))
            .collect();
        Graph::from_zero_based(count, edges, []).unwrap()
    }

    #[test]
    fn conditions_complete_graph() {
        let dec = natural(&complete(4), 2, 2);
        for s in Sign::BOTH {
            assert!(check_block_conditions(&dec, s).all());
        }
    }

    #[test]
    fn conditions_werner_d3() {
        let d = 3;
        let edges: Vec<_> = (0..d)
            .flat_map(|i| (i + 1..d).map(move |j| (i * d + j, j * d + i)))
            .collect();
        let g = Graph::from_zero_based(d * d, edges, 0..d * d).unwrap();
        let c = check_block_conditions(&natural(&g, d, d), Sign::Signless);
        assert!(c.prop1);
        assert!(!c.prop2);
    }

    #[test]
    fn conditions_final_example() {
        let g = Graph::build(4, &[(1, 3), (1, 4), (2, 3)], &[]).unwrap();
        let c = check_block_conditions(&natural(&g, 2, 2), Sign::Laplacian);
        assert!(c.prop1 && c.prop2 && c.prop3 && c.prop5);
        assert!(!c.prop4);
        assert_eq!(oracle_violations(&natural(&g, 2, 2), Sign::Laplacian), [0, 0, 8, 0]);
    }

    #[test]
    fn validate_graph_states() {
        let g = Graph::build(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (1, 3)], &[]).unwrap();
        let dec = natural(&g, 1, 5);
        for s in Sign::BOTH {
            assert_eq!(validate_density(&dec.density_matrix(s).unwrap(), 1e-9), DensityValidation::Valid);
        }
    }

    #[test]
    fn validate_rejects_bad_matrices() {
        let tenth = |k: i64| Rational::new(k, 10);
        let short = DensityMatrix::from_raw(2, vec![tenth(5), tenth(0), tenth(0), tenth(4)], Sign::Laplacian, 1).unwrap();
        assert_eq!(validate_density(&short, 1e-9), DensityValidation::TraceNotOne);

        let asym = DensityMatrix::from_raw(2, vec![tenth(5), tenth(1), tenth(0), tenth(5)], Sign::Laplacian, 1).unwrap();
        assert_eq!(validate_density(&asym, 1e-9), DensityValidation::NotSymmetric);

        // eigenvalues 1/2 +- 9/10
        let indefinite = DensityMatrix::from_raw(2, vec![tenth(5), tenth(9), tenth(9), tenth(5)], Sign::Laplacian, 1).unwrap();
        assert!(matches!(
            validate_density(&indefinite, 1e-9),
            DensityValidation::NotPositiveSemidefinite { min_eigenvalue } if (min_eigenvalue + 0.4).abs() < 1e-12
        ));
    }
}
