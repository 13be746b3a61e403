use std::ops::{Mul, Sub};

use crate::binary::BinaryMatrix;
use crate::error::{Error, Result};

/// Dense square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    order: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(order: usize) -> Self {
        IntMatrix {
            order,
            entries: vec![0; order * order],
        }
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                entries.push(f(i, j));
            }
        }
        IntMatrix { order, entries }
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let order = rows.len();
        if rows.iter().any(|r| r.as_ref().len() != order) {
            return Err(Error::Dimension("ragged integer matrix".into()));
        }
        Ok(Self::from_fn(order, |i, j| rows[i].as_ref()[j]))
    }

    pub fn diagonal(values: &[i64]) -> Self {
        Self::from_fn(values.len(), |i, j| if i == j { values[i] } else { 0 })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.order + j]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.order, |i, j| self.get(j, i))
    }

    pub fn scaled_add(&self, other: &IntMatrix, factor: i64) -> Self {
        assert_eq!(self.order, other.order);
        Self::from_fn(self.order, |i, j| self.get(i, j) + factor * other.get(i, j))
    }

    /// Sum of absolute values of all entries.
    pub fn l1(&self) -> u64 {
        self.entries.iter().map(|x| x.unsigned_abs()).sum()
    }
}

impl From<&BinaryMatrix> for IntMatrix {
    fn from(m: &BinaryMatrix) -> Self {
        IntMatrix::from_fn(m.order(), |i, j| i64::from(m.entry(i, j)))
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.order, rhs.order, "order mismatch in product");
        let n = self.order;
        let mut out = IntMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out.entries[i * n + j] += a * rhs.get(k, j);
                }
            }
        }
        out
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;

    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        self.scaled_add(rhs, -1)
    }
}

/// `sum |(AB - BA)_{ij}|` by direct multiplication.
pub fn commutator_l1(a: &IntMatrix, b: &IntMatrix) -> Result<u64> {
    if a.order() != b.order() {
        return Err(Error::Dimension(format!(
            "orders {} and {} differ",
            a.order(),
            b.order()
        )));
    }
    Ok((&(a * b) - &(b * a)).l1())
}

/// `sum |(M M^t - M^t M)_{ij}|`.
pub fn normality_defect_l1(m: &IntMatrix) -> u64 {
    let t = m.transpose();
    (&(m * &t) - &(&t * m)).l1()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn im<const N: usize>(rows: [[i64; N]; N]) -> IntMatrix {
        IntMatrix::from_rows(&rows).unwrap()
    }

    #[test]
    fn commutator_examples() {
        let a = im([[0, 1, 0], [1, 0, 1], [0, 1, 0]]);
        let e = im([[0, 0, 1], [0, 0, 0], [1, 0, 0]]);
        assert_eq!(commutator_l1(&a, &a), Ok(0));
        assert_eq!(commutator_l1(&IntMatrix::diagonal(&[2, 1]), &im([[1, 1], [1, 0]])), Ok(2));
        assert_eq!(commutator_l1(&a, &e), Ok(4));
        assert!(commutator_l1(&a, &IntMatrix::zeros(2)).is_err());
    }

    #[test]
    fn normality_examples() {
        assert_eq!(normality_defect_l1(&im([[0, 1, 1], [1, 0, 0], [1, 0, 0]])), 0);
        assert_eq!(normality_defect_l1(&im([[0, 0], [1, 0]])), 2);
        assert_eq!(normality_defect_l1(&im([[0, 1, 0], [0, 0, 1], [1, 0, 0]])), 0);
    }
}
