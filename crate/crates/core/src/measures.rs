//! Neighborhood-counting measures of non-normality and non-commutativity,
//! the per-condition violation sums, and the combinatorial discord `QD(G)`.
//!
//! Everything here is computed from row and column supports of binary
//! blocks and from vertex degrees. No matrix products are formed; the
//! [`crate::oracle`] module provides the matrix-algebra counterpart.
//!
//! Block conditions, with `B_{mu,mu} = D_mu + s A_{mu,mu}` and
//! `B_{mu,nu} = A_{mu,nu}`:
//!
//! * prop2: every off-diagonal block is normal,
//! * prop3: off-diagonal blocks commute pairwise,
//! * prop4: diagonal blocks commute with off-diagonal blocks,
//! * prop5: diagonal blocks commute pairwise.
//!
//! (prop1, normality of the diagonal blocks, holds for every graph.)

use serde::Serialize;

use crate::binary::{BinaryMatrix, Support};
use crate::block::{block_decompose, BlockDecomposition};
use crate::density::Sign;
use crate::error::{Error, Result};
use crate::graph::{ClusterLabeling, Graph};

/// Row and column supports of one block, computed once.
struct Neighborhoods {
    rows: Vec<Support>,
    cols: Vec<Support>,
}

impl Neighborhoods {
    fn of(m: &BinaryMatrix) -> Self {
        let n = m.order();
        Neighborhoods {
            rows: (0..n).map(|i| m.row_support(i)).collect(),
            cols: (0..n).map(|j| m.col_support(j)).collect(),
        }
    }

    fn order(&self) -> usize {
        self.rows.len()
    }
}

fn l1_sum(n: usize, entry: impl Fn(usize, usize) -> i64) -> u64 {
    (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| entry(i, j).unsigned_abs())
        .sum()
}

fn nn_entry(a: &Neighborhoods, i: usize, j: usize) -> i64 {
    a.rows[i].intersection_count(&a.rows[j]) as i64 - a.cols[i].intersection_count(&a.cols[j]) as i64
}

// #(nbd(v_{mu i}) ∩ nbd(v_{beta j})) - #(nbd(v_{nu j}) ∩ nbd(v_{alpha i}))
fn nc1_entry(a: &Neighborhoods, b: &Neighborhoods, i: usize, j: usize) -> i64 {
    a.rows[i].intersection_count(&b.cols[j]) as i64 - a.cols[j].intersection_count(&b.rows[i]) as i64
}

// A symmetric: #(nbd(v_{mu i}) ∩ nbd(v_{beta j})) - #(nbd(v_{mu j}) ∩ nbd(v_{alpha i}))
fn nc2_entry_raw(a: &Neighborhoods, b: &Neighborhoods, i: usize, j: usize) -> i64 {
    a.rows[i].intersection_count(&b.cols[j]) as i64 - a.rows[j].intersection_count(&b.rows[i]) as i64
}

// A, B symmetric: #(nbd(v_{mu i}) ∩ nbd(v_{nu j})) - #(nbd(v_{mu j}) ∩ nbd(v_{nu i}))
fn nc3_entry_raw(a: &Neighborhoods, b: &Neighborhoods, i: usize, j: usize) -> i64 {
    a.rows[i].intersection_count(&b.rows[j]) as i64 - a.rows[j].intersection_count(&b.rows[i]) as i64
}

fn check_orders(a: &BinaryMatrix, b: &BinaryMatrix) -> Result<()> {
    if a.order() != b.order() {
        return Err(Error::Dimension(format!(
            "orders {} and {} differ",
            a.order(),
            b.order()
        )));
    }
    Ok(())
}

fn check_index(i: usize, order: usize) -> Result<()> {
    if i >= order {
        return Err(Error::IndexOutOfRange { index: i, order });
    }
    Ok(())
}

/// Non-normality `NN(M)`: zero iff `M M^t = M^t M`.
pub fn nn(m: &BinaryMatrix) -> u64 {
    let nb = Neighborhoods::of(m);
    l1_sum(nb.order(), |i, j| nn_entry(&nb, i, j))
}

/// Non-commutativity `NC1(A, B)` of arbitrary binary matrices.
pub fn nc1(a: &BinaryMatrix, b: &BinaryMatrix) -> Result<u64> {
    check_orders(a, b)?;
    let (na, nb) = (Neighborhoods::of(a), Neighborhoods::of(b));
    Ok(l1_sum(na.order(), |i, j| nc1_entry(&na, &nb, i, j)))
}

/// Signed entry `NC2(A, B)_{ij}` for symmetric `A` (a cluster adjacency,
/// possibly with loops on the diagonal).
pub fn nc2_entry(a: &BinaryMatrix, b: &BinaryMatrix, i: usize, j: usize) -> Result<i64> {
    check_orders(a, b)?;
    if !a.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    check_index(i, a.order())?;
    check_index(j, a.order())?;
    Ok(nc2_entry_raw(&Neighborhoods::of(a), &Neighborhoods::of(b), i, j))
}

pub fn nc2(a: &BinaryMatrix, b: &BinaryMatrix) -> Result<u64> {
    check_orders(a, b)?;
    if !a.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let (na, nb) = (Neighborhoods::of(a), Neighborhoods::of(b));
    Ok(l1_sum(na.order(), |i, j| nc2_entry_raw(&na, &nb, i, j)))
}

/// Signed entry `NC3(A, B)_{ij}` for symmetric `A` and `B`.
pub fn nc3_entry(a: &BinaryMatrix, b: &BinaryMatrix, i: usize, j: usize) -> Result<i64> {
    check_orders(a, b)?;
    if !a.is_symmetric() || !b.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    check_index(i, a.order())?;
    check_index(j, a.order())?;
    Ok(nc3_entry_raw(&Neighborhoods::of(a), &Neighborhoods::of(b), i, j))
}

pub fn nc3(a: &BinaryMatrix, b: &BinaryMatrix) -> Result<u64> {
    check_orders(a, b)?;
    if !a.is_symmetric() || !b.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let (na, nb) = (Neighborhoods::of(a), Neighborhoods::of(b));
    Ok(l1_sum(na.order(), |i, j| nc3_entry_raw(&na, &nb, i, j)))
}

/// Block condition measured by a violation sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Condition {
    Prop2,
    Prop3,
    Prop4,
    Prop5,
}

/// One nonzero signed summand of a violation sum. Cluster and slot indices
/// are 0-based; `others` holds `[nu]` for prop2/prop5, `[nu, alpha, beta]`
/// for prop3 and `[alpha, beta]` for prop4.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contribution {
    pub condition: Condition,
    pub mu: usize,
    pub others: Vec<usize>,
    pub i: usize,
    pub j: usize,
    pub value: i64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ViolationBreakdown {
    pub prop2_total: u64,
    pub prop3_total: u64,
    pub prop4_total: u64,
    pub prop5_total: u64,
    /// Nonzero summands only.
    pub per_pair: Vec<Contribution>,
}

impl ViolationBreakdown {
    pub fn total(&self, condition: Condition) -> u64 {
        match condition {
            Condition::Prop2 => self.prop2_total,
            Condition::Prop3 => self.prop3_total,
            Condition::Prop4 => self.prop4_total,
            Condition::Prop5 => self.prop5_total,
        }
    }

    fn record(&mut self, c: Contribution) {
        let abs = c.value.unsigned_abs();
        if abs == 0 {
            return;
        }
        match c.condition {
            Condition::Prop2 => self.prop2_total += abs,
            Condition::Prop3 => self.prop3_total += abs,
            Condition::Prop4 => self.prop4_total += abs,
            Condition::Prop5 => self.prop5_total += abs,
        }
        self.per_pair.push(c);
    }
}

/// Precomputed supports for every block of a decomposition.
struct BlockNeighborhoods<'a> {
    decomp: &'a BlockDecomposition,
    blocks: Vec<Neighborhoods>,
}

impl<'a> BlockNeighborhoods<'a> {
    fn new(decomp: &'a BlockDecomposition) -> Self {
        let m = decomp.m();
        let blocks = (0..m * m)
            .map(|k| Neighborhoods::of(decomp.block(k / m, k % m)))
            .collect();
        BlockNeighborhoods { decomp, blocks }
    }

    fn get(&self, mu: usize, nu: usize) -> &Neighborhoods {
        &self.blocks[mu * self.decomp.m() + nu]
    }

    fn off_diagonal_pairs(&self) -> Vec<(usize, usize)> {
        let m = self.decomp.m();
        (0..m)
            .flat_map(|mu| (0..m).map(move |nu| (mu, nu)))
            .filter(|(mu, nu)| mu != nu)
            .collect()
    }

    fn prop2(&self, out: &mut ViolationBreakdown) {
        let n = self.decomp.n();
        for (mu, nu) in self.off_diagonal_pairs() {
            let nb = self.get(mu, nu);
            for i in 0..n {
                for j in 0..n {
                    out.record(Contribution {
                        condition: Condition::Prop2,
                        mu,
                        others: vec![nu],
                        i,
                        j,
                        value: nn_entry(nb, i, j),
                    });
                }
            }
        }
    }

    fn prop3(&self, out: &mut ViolationBreakdown) {
        let n = self.decomp.n();
        let pairs = self.off_diagonal_pairs();
        for &(mu, nu) in &pairs {
            for &(alpha, beta) in &pairs {
                if (mu, nu) == (alpha, beta) {
                    continue;
                }
                let (a, b) = (self.get(mu, nu), self.get(alpha, beta));
                for i in 0..n {
                    for j in 0..n {
                        out.record(Contribution {
                            condition: Condition::Prop3,
                            mu,
                            others: vec![nu, alpha, beta],
                            i,
                            j,
                            value: nc1_entry(a, b, i, j),
                        });
                    }
                }
            }
        }
    }

    fn prop4(&self, s: i64, out: &mut ViolationBreakdown) {
        let (m, n) = (self.decomp.m(), self.decomp.n());
        let pairs = self.off_diagonal_pairs();
        for mu in 0..m {
            let diag = self.get(mu, mu);
            let deg = self.decomp.cluster_degrees(mu);
            for &(alpha, beta) in &pairs {
                let off = self.get(alpha, beta);
                let x = self.decomp.block(alpha, beta);
                for i in 0..n {
                    for j in 0..n {
                        let degree_term = i64::from(x.entry(i, j)) * (deg[i] as i64 - deg[j] as i64);
                        out.record(Contribution {
                            condition: Condition::Prop4,
                            mu,
                            others: vec![alpha, beta],
                            i,
                            j,
                            value: degree_term + s * nc2_entry_raw(diag, off, i, j),
                        });
                    }
                }
            }
        }
    }

    fn prop5(&self, s: i64, out: &mut ViolationBreakdown) {
        let n = self.decomp.n();
        for (mu, nu) in self.off_diagonal_pairs() {
            let (a, b) = (self.get(mu, mu), self.get(nu, nu));
            let (x_mu, x_nu) = (self.decomp.block(mu, mu), self.decomp.block(nu, nu));
            let (d_mu, d_nu) = (self.decomp.cluster_degrees(mu), self.decomp.cluster_degrees(nu));
            for i in 0..n {
                for j in 0..n {
                    let degree_terms = i64::from(x_nu.entry(i, j)) * (d_mu[i] as i64 - d_mu[j] as i64)
                        + i64::from(x_mu.entry(i, j)) * (d_nu[j] as i64 - d_nu[i] as i64);
                    out.record(Contribution {
                        condition: Condition::Prop5,
                        mu,
                        others: vec![nu],
                        i,
                        j,
                        value: nc3_entry_raw(a, b, i, j) + s * degree_terms,
                    });
                }
            }
        }
    }
}

/// Sum of `NN(A_{mu,nu})` over ordered pairs `mu != nu`.
pub fn violation_prop2(decomp: &BlockDecomposition) -> u64 {
    let mut b = ViolationBreakdown::default();
    BlockNeighborhoods::new(decomp).prop2(&mut b);
    b.prop2_total
}

/// Sum of `NC1(A_{mu,nu}, A_{alpha,beta})` over ordered off-diagonal pairs
/// with `(mu, nu) != (alpha, beta)`.
pub fn violation_prop3(decomp: &BlockDecomposition) -> u64 {
    let mut b = ViolationBreakdown::default();
    BlockNeighborhoods::new(decomp).prop3(&mut b);
    b.prop3_total
}

/// Sum over `mu` and `alpha != beta` of
/// `|X_{alpha,beta}(i,j)(d_{mu,i} - d_{mu,j}) + s NC2(A_{mu,mu}, A_{alpha,beta})_{ij}|`.
pub fn violation_prop4(decomp: &BlockDecomposition, sign: Sign) -> u64 {
    let mut b = ViolationBreakdown::default();
    BlockNeighborhoods::new(decomp).prop4(sign.value(), &mut b);
    b.prop4_total
}

/// Sum over `mu != nu` of
/// `|NC3(A_{mu,mu}, A_{nu,nu})_{ij} + s[X_{nu,nu}(i,j)(d_{mu,i} - d_{mu,j}) + X_{mu,mu}(i,j)(d_{nu,j} - d_{nu,i})]|`.
pub fn violation_prop5(decomp: &BlockDecomposition, sign: Sign) -> u64 {
    let mut b = ViolationBreakdown::default();
    BlockNeighborhoods::new(decomp).prop5(sign.value(), &mut b);
    b.prop5_total
}

/// All four violation sums with their nonzero summands.
pub fn violations(decomp: &BlockDecomposition, sign: Sign) -> ViolationBreakdown {
    let nb = BlockNeighborhoods::new(decomp);
    let mut b = ViolationBreakdown::default();
    nb.prop2(&mut b);
    nb.prop3(&mut b);
    nb.prop4(sign.value(), &mut b);
    nb.prop5(sign.value(), &mut b);
    b
}

/// Result of evaluating `QD(G)` for one labeling and sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscordReport {
    pub breakdown: ViolationBreakdown,
    pub qd_total: u64,
    pub sign: Sign,
    pub labeling: ClusterLabeling,
}

impl DiscordReport {
    pub fn is_zero_discord(&self) -> bool {
        self.qd_total == 0
    }

    pub fn m(&self) -> usize {
        self.labeling.m()
    }

    pub fn n(&self) -> usize {
        self.labeling.n()
    }
}

/// `QD(G)` from an existing decomposition.
pub fn qd_of_decomposition(decomp: &BlockDecomposition, labeling: &ClusterLabeling, sign: Sign) -> Result<DiscordReport> {
    if decomp.total_degree() == 0 {
        return Err(Error::EmptyGraph);
    }
    let breakdown = violations(decomp, sign);
    let qd_total = breakdown.prop2_total + breakdown.prop3_total + breakdown.prop4_total + breakdown.prop5_total;
    Ok(DiscordReport {
        breakdown,
        qd_total,
        sign,
        labeling: labeling.clone(),
    })
}

/// Combinatorial discord of the state `rho(G)` under `lab`.
pub fn qd(g: &Graph, lab: &ClusterLabeling, sign: Sign) -> Result<DiscordReport> {
    let decomp = block_decompose(g, lab)?;
    qd_of_decomposition(&decomp, lab, sign)
}

pub fn is_zero_discord(g: &Graph, lab: &ClusterLabeling, sign: Sign) -> Result<bool> {
    Ok(qd(g, lab, sign)?.is_zero_discord())
}
