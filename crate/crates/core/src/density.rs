//! Exact rational density matrices `(D + sA) / tr(D + sA)`.

use nalgebra::DMatrix;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::block::BlockDecomposition;
use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

/// Sign `s` in `D + sA`: `-1` gives the Laplacian state, `+1` the signless
/// Laplacian state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Laplacian,
    Signless,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Laplacian, Sign::Signless];

    pub fn value(self) -> i64 {
        match self {
            Sign::Laplacian => -1,
            Sign::Signless => 1,
        }
    }

    /// Short name used on the command line: `l` or `q`.
    pub fn short_name(self) -> &'static str {
        match self {
            Sign::Laplacian => "l",
            Sign::Signless => "q",
        }
    }

    pub fn from_value(s: i64) -> Option<Sign> {
        match s {
            -1 => Some(Sign::Laplacian),
            1 => Some(Sign::Signless),
            _ => None,
        }
    }
}

/// Symmetric `N x N` matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityMatrix {
    order: usize,
    entries: Vec<Rational>,
    sign: Sign,
    total_degree: usize,
}

impl DensityMatrix {
    /// Normalizes `D + sA` by its trace. For loop-free graphs the trace is
    /// the total degree `d`; each loop shifts it by `s`.
    pub fn from_decomposition(decomp: &BlockDecomposition, sign: Sign) -> Result<Self> {
        let d = decomp.total_degree();
        if d == 0 {
            return Err(Error::EmptyGraph);
        }
        let integer = decomp.shifted_adjacency(sign);
        let order = decomp.vertex_count();
        let trace: i64 = (0..order).map(|k| integer[k * order + k]).sum();
        if trace <= 0 {
            // only reachable with loops and no proper edges under s = -1
            return Err(Error::EmptyGraph);
        }
        let entries = integer.into_iter().map(|x| Rational::new(x, trace)).collect();
        Ok(DensityMatrix {
            order,
            entries,
            sign,
            total_degree: d,
        })
    }

    /// Wraps raw entries without enforcing the density-matrix invariants;
    /// use [`crate::oracle::validate_density`] to check them.
    pub fn from_raw(order: usize, entries: Vec<Rational>, sign: Sign, total_degree: usize) -> Result<Self> {
        if entries.len() != order * order {
            return Err(Error::Dimension(format!(
                "{} entries for order {order}",
                entries.len()
            )));
        }
        Ok(DensityMatrix {
            order,
            entries,
            sign,
            total_degree,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn source_total_degree(&self) -> usize {
        self.total_degree
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.entries[i * self.order + j]
    }

    pub fn trace(&self) -> Rational {
        (0..self.order).map(|k| self.get(k, k)).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (i + 1..self.order).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn to_f64(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.order, self.order, |i, j| {
            let r = self.get(i, j);
            *r.numer() as f64 / *r.denom() as f64
        })
    }

    /// Block `rho_{mu,nu}` of an `m x m` grid of `n x n` blocks, as `f64`.
    pub fn block_f64(&self, n: usize, mu: usize, nu: usize) -> DMatrix<f64> {
        DMatrix::from_fn(n, n, |i, j| {
            let r = self.get(mu * n + i, nu * n + j);
            *r.numer() as f64 / *r.denom() as f64
        })
    }
}
