//! Von Neumann entropies and the measurement-dependent discord
//! `D_{k}(rho) = sum_k p_k S(rho_k) - [S(rho) - S(rho_B)]`
//! for a projective measurement of subsystem B (the slot index).
//!
//! Subsystem A is the cluster index `mu` (dimension `m`), subsystem B the
//! slot index `i` (dimension `n`); `rho` is laid out as an `m x m` grid of
//! `n x n` blocks.

use nalgebra::{Complex, DMatrix, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::density::DensityMatrix;
use crate::error::{Error, Result};
use crate::oracle::validate_density;

type C64 = Complex<f64>;

const PSD_TOLERANCE: f64 = 1e-9;
const DIAGONALIZATION_TOLERANCE: f64 = 1e-8;

/// Entropies in bits.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EntropyReport {
    pub s_rho: f64,
    pub s_rho_b: f64,
    /// `sum_k p_k S(rho_k)`.
    pub conditional: f64,
    pub discord_fixed_basis: f64,
    /// Outcome probabilities `p_k`.
    pub probabilities: Vec<f64>,
}

impl EntropyReport {
    fn new(s_rho: f64, s_rho_b: f64, conditional: f64, probabilities: Vec<f64>) -> Self {
        EntropyReport {
            s_rho,
            s_rho_b,
            conditional,
            discord_fixed_basis: conditional - (s_rho - s_rho_b),
            probabilities,
        }
    }
}

/// `-sum lambda log2 lambda` over the given spectrum, with `0 log 0 = 0`.
pub fn von_neumann_entropy(eigenvalues: impl IntoIterator<Item = f64>) -> f64 {
    eigenvalues
        .into_iter()
        .filter(|&l| l > 0.0)
        .map(|l| -l * l.log2())
        .sum()
}

fn entropy_real(m: DMatrix<f64>) -> f64 {
    von_neumann_entropy(SymmetricEigen::new(m).eigenvalues.iter().copied())
}

fn entropy_hermitian(m: DMatrix<C64>) -> f64 {
    von_neumann_entropy(SymmetricEigen::new(m).eigenvalues.iter().copied())
}

fn check_input(rho: &DensityMatrix, m: usize, n: usize) -> Result<DMatrix<f64>> {
    if m == 0 || n == 0 || rho.order() != m * n {
        return Err(Error::Dimension(format!(
            "density matrix of order {} is not {m} x {n}",
            rho.order()
        )));
    }
    let check = validate_density(rho, PSD_TOLERANCE);
    if !check.is_valid() {
        return Err(Error::InvalidParameter(format!("invalid density matrix: {check:?}")));
    }
    Ok(rho.to_f64())
}

fn reduced_b(full: &DMatrix<f64>, m: usize, n: usize) -> DMatrix<f64> {
    DMatrix::from_fn(n, n, |i, j| (0..m).map(|mu| full[(mu * n + i, mu * n + j)]).sum())
}

/// Discord for the computational basis `{|k>}` of subsystem B.
pub fn fixed_basis_discord(rho: &DensityMatrix, m: usize, n: usize) -> Result<EntropyReport> {
    let full = check_input(rho, m, n)?;
    let s_rho_b = entropy_real(reduced_b(&full, m, n));
    let mut conditional = 0.0;
    let mut probabilities = Vec::with_capacity(n);
    for k in 0..n {
        let p: f64 = (0..m).map(|mu| full[(mu * n + k, mu * n + k)]).sum();
        probabilities.push(p);
        if p <= 0.0 {
            continue;
        }
        let conditional_state = DMatrix::from_fn(m, m, |mu, nu| full[(mu * n + k, nu * n + k)] / p);
        conditional += p * entropy_real(conditional_state);
    }
    let s_rho = entropy_real(full);
    Ok(EntropyReport::new(s_rho, s_rho_b, conditional, probabilities))
}

/// Discord for the orthonormal basis of B given by the columns of `basis`.
pub fn basis_discord(rho: &DensityMatrix, m: usize, n: usize, basis: &DMatrix<C64>) -> Result<EntropyReport> {
    let full = check_input(rho, m, n)?;
    if basis.nrows() != n || basis.ncols() != n {
        return Err(Error::Dimension(format!("basis must be {n} x {n}")));
    }
    let blocks: Vec<DMatrix<C64>> = (0..m * m)
        .map(|b| {
            let (mu, nu) = (b / m, b % m);
            DMatrix::from_fn(n, n, |i, j| C64::new(full[(mu * n + i, nu * n + j)], 0.0))
        })
        .collect();

    let s_rho_b = entropy_real(reduced_b(&full, m, n));
    let mut conditional = 0.0;
    let mut probabilities = Vec::with_capacity(n);
    for k in 0..n {
        let u = basis.column(k);
        let sandwich = |block: &DMatrix<C64>| (u.adjoint() * block * u)[(0, 0)];
        let p: f64 = (0..m).map(|mu| sandwich(&blocks[mu * m + mu]).re).sum();
        probabilities.push(p);
        if p <= 0.0 {
            continue;
        }
        let conditional_state = DMatrix::from_fn(m, m, |mu, nu| sandwich(&blocks[mu * m + nu]) / p);
        conditional += p * entropy_hermitian(conditional_state);
    }
    let s_rho = entropy_real(full);
    Ok(EntropyReport::new(s_rho, s_rho_b, conditional, probabilities))
}

/// Unitary whose columns simultaneously diagonalize every block `rho_{mu,nu}`.
///
/// Exists exactly when the blocks are normal and commute pairwise. Found by
/// diagonalizing a generic Hermitian combination of the blocks and checking
/// the result; fails with [`Error::Numerical`] when no common basis exists.
pub fn block_eigenbasis(rho: &DensityMatrix, m: usize, n: usize) -> Result<DMatrix<C64>> {
    let full = check_input(rho, m, n)?;
    let blocks: Vec<DMatrix<f64>> = (0..m * m)
        .map(|b| DMatrix::from_fn(n, n, |i, j| full[((b / m) * n + i, (b % m) * n + j)]))
        .collect();

    // fixed seed: the basis is a deterministic function of rho
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_b10c);
    let mut h = DMatrix::<C64>::zeros(n, n);
    for b in &blocks {
        let (c, e): (f64, f64) = (rng.gen_range(0.5..1.5), rng.gen_range(0.5..1.5));
        let sym = b + b.transpose();
        let skew = b - b.transpose();
        h += sym.map(|x| C64::new(c * x, 0.0)) + skew.map(|x| C64::new(0.0, e * x));
    }
    let basis = SymmetricEigen::new(h).eigenvectors;

    let scale = blocks.iter().map(|b| b.amax()).fold(0.0, f64::max).max(f64::MIN_POSITIVE);
    for b in &blocks {
        let bc = b.map(|x| C64::new(x, 0.0));
        let rotated = basis.adjoint() * bc * &basis;
        for i in 0..n {
            for j in 0..n {
                if i != j && rotated[(i, j)].norm() > DIAGONALIZATION_TOLERANCE * scale {
                    return Err(Error::Numerical(
                        "blocks are not simultaneously diagonalizable (not normal and commuting)".into(),
                    ));
                }
            }
        }
    }
    Ok(basis)
}

/// Discord measured in the common eigenbasis of the blocks.
pub fn eigenbasis_discord(rho: &DensityMatrix, m: usize, n: usize) -> Result<EntropyReport> {
    let basis = block_eigenbasis(rho, m, n)?;
    basis_discord(rho, m, n, &basis)
}
