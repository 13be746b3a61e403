//! Dense square matrices over {0, 1} and the index sets ("supports") of their
//! rows and columns.
//!
//! A binary matrix `M` of order `n` doubles as the biadjacency matrix of a
//! bipartite graph between two clusters `C_mu` and `C_nu`: row `i` lists the
//! neighbors of `v_{mu,i}` in `C_nu`, column `j` lists the neighbors of
//! `v_{nu,j}` in `C_mu`.

use std::fmt;

use crate::error::{Error, Result};

/// Fixed-width bitset over `0..len`, used for neighborhoods.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Support {
    len: usize,
    words: Vec<u64>,
}

impl Support {
    pub fn empty(len: usize) -> Self {
        Support {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Support::empty(len);
        for i in indices {
            s.insert(i);
        }
        s
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.len, "support index {i} out of range {}", self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// Universe size, not cardinality.
    pub fn universe(&self) -> usize {
        self.len
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// `#(self ∩ other)`.
    pub fn intersection_count(&self, other: &Support) -> usize {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.contains(i))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for Support {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Which side of a bipartite block a neighborhood is taken on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// Support of row `i`: neighbors of `v_{mu,i}`.
    Row,
    /// Support of column `i`: neighbors of `v_{nu,i}`.
    Column,
}

/// Square `n x n` matrix with entries in {0, 1}, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    order: usize,
    bits: Vec<bool>,
}

impl BinaryMatrix {
    pub fn zeros(order: usize) -> Self {
        BinaryMatrix {
            order,
            bits: vec![false; order * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        Self::from_fn(order, |i, j| i == j)
    }

    pub fn ones(order: usize) -> Self {
        Self::from_fn(order, |_, _| true)
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut bits = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                bits.push(f(i, j));
            }
        }
        BinaryMatrix { order, bits }
    }

    /// Builds from integer rows; every row must have the same length as the
    /// number of rows and every entry must be 0 or 1.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let order = rows.len();
        let mut bits = Vec::with_capacity(order * order);
        for row in rows {
            let row = row.as_ref();
            if row.len() != order {
                return Err(Error::Dimension(format!(
                    "row of length {} in matrix of order {order}",
                    row.len()
                )));
            }
            for &x in row {
                match x {
                    0 => bits.push(false),
                    1 => bits.push(true),
                    other => return Err(Error::NotBinary(other)),
                }
            }
        }
        Ok(BinaryMatrix { order, bits })
    }

    /// Decodes the `code`-th matrix of the given order: bit `i*n + j` of
    /// `code` is entry `(i, j)`. Enumerating `0..2^(n*n)` visits every matrix.
    pub fn from_code(order: usize, code: u64) -> Self {
        assert!(order * order <= 64, "order {order} too large for a u64 code");
        Self::from_fn(order, |i, j| code >> (i * order + j) & 1 == 1)
    }

    /// `n x n` circulant with ones at `(i, (i + k) mod n)` for every shift `k`.
    pub fn circulant(order: usize, shifts: &[usize]) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            for &k in shifts {
                m.set(i, (i + k) % order, true);
            }
        }
        m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.order + j]
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> u8 {
        u8::from(self.get(i, j))
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.bits[i * self.order + j] = value;
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.order, |i, j| self.get(j, i))
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (i + 1..self.order).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|b| !b)
    }

    pub fn row_sum(&self, i: usize) -> usize {
        (0..self.order).filter(|&j| self.get(i, j)).count()
    }

    pub fn col_sum(&self, j: usize) -> usize {
        (0..self.order).filter(|&i| self.get(i, j)).count()
    }

    pub fn row_support(&self, i: usize) -> Support {
        Support::from_indices(self.order, (0..self.order).filter(|&j| self.get(i, j)))
    }

    pub fn col_support(&self, j: usize) -> Support {
        Support::from_indices(self.order, (0..self.order).filter(|&i| self.get(i, j)))
    }

    /// `P^t M P` where `P` maps basis vector `e_i` to `e_{perm[i]}`, i.e.
    /// entry `(i, j)` moves to `(perm[i], perm[j])`.
    pub fn conjugate_by(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.order);
        let mut out = Self::zeros(self.order);
        for i in 0..self.order {
            for j in 0..self.order {
                if self.get(i, j) {
                    out.set(perm[i], perm[j], true);
                }
            }
        }
        out
    }

    pub fn rows(&self) -> impl Iterator<Item = &[bool]> {
        self.bits.chunks(self.order.max(1))
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryMatrix[")?;
        for i in 0..self.order {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.order {
                write!(f, "{}", self.entry(i, j))?;
            }
        }
        write!(f, "]")
    }
}

/// Neighborhood of slot `i` within a bipartite block: the support of row `i`
/// (neighbors of `v_{mu,i}`) or of column `i` (neighbors of `v_{nu,i}`).
pub fn neighborhood(block: &BinaryMatrix, side: Side, i: usize) -> Result<Support> {
    if i >= block.order() {
        return Err(Error::IndexOutOfRange {
            index: i,
            order: block.order(),
        });
    }
    Ok(match side {
        Side::Row => block.row_support(i),
        Side::Column => block.col_support(i),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_3_1() -> BinaryMatrix {
        BinaryMatrix::from_rows(&[[0, 1, 1], [1, 0, 0], [1, 0, 0]]).unwrap()
    }

    #[test]
    fn column_neighborhood_of_example() {
        let nb = neighborhood(&example_3_1(), Side::Column, 0).unwrap();
        // {2, 3} in 1-based slots
        assert_eq!(nb.to_vec(), vec![1, 2]);
    }

    #[test]
    fn zero_and_identity_neighborhoods() {
        let z = BinaryMatrix::zeros(4);
        for i in 0..4 {
            assert!(neighborhood(&z, Side::Row, i).unwrap().is_empty());
        }
        let id = BinaryMatrix::identity(4);
        for i in 0..4 {
            assert_eq!(neighborhood(&id, Side::Row, i).unwrap().to_vec(), vec![i]);
        }
    }

    #[test]
    fn neighborhood_out_of_range() {
        assert_eq!(
            neighborhood(&BinaryMatrix::zeros(2), Side::Row, 2),
            Err(Error::IndexOutOfRange { index: 2, order: 2 })
        );
    }

    #[test]
    fn rejects_non_binary_and_ragged() {
        assert_eq!(
            BinaryMatrix::from_rows(&[[0, 2], [1, 0]]),
            Err(Error::NotBinary(2))
        );
        assert!(matches!(
            BinaryMatrix::from_rows(&[vec![0, 1], vec![1]]),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn support_spans_word_boundary() {
        let s = Support::from_indices(130, [0, 63, 64, 129]);
        let t = Support::from_indices(130, [63, 129, 5]);
        assert_eq!(s.count(), 4);
        assert_eq!(s.intersection_count(&t), 2);
        assert_eq!(s.to_vec(), vec![0, 63, 64, 129]);
    }

    #[test]
    fn from_code_enumerates_distinct_matrices() {
        let all: std::collections::HashSet<_> = (0..16).map(|c| BinaryMatrix::from_code(2, c)).collect();
        assert_eq!(all.len(), 16);
    }

    #[test]
    fn circulant_rows_are_regular() {
        let c = BinaryMatrix::circulant(5, &[1, 3]);
        for i in 0..5 {
            assert_eq!(c.row_sum(i), 2);
            assert_eq!(c.col_sum(i), 2);
        }
    }
}
