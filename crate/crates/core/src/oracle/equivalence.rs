//! Sweeps checking the neighborhood-counting measures against direct
//! matrix products.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::binary::BinaryMatrix;
use crate::block::block_decompose;
use crate::density::Sign;
use crate::error::{Error, Result};
use crate::generators::random_graph;
use crate::measures::{self, Condition};
use crate::oracle::{commutator_l1, normality_defect_l1, oracle_violations, IntMatrix};

/// Largest order enumerated pair-exhaustively: `(2^(n^2))^2` pairs.
pub const MAX_EXHAUSTIVE_ORDER: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VerificationMode {
    Exhaustive,
    Sampled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderCount {
    pub order: usize,
    pub matrices: u64,
    pub pairs: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationSummary {
    /// Matrices plus pairs examined.
    pub checked: u64,
    pub mismatches: u64,
    pub mode: VerificationMode,
    pub seed: u64,
    #[serde(skip)]
    pub per_order: Vec<OrderCount>,
}

impl VerificationSummary {
    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }

    fn merge(&mut self, other: VerificationSummary) {
        self.checked += other.checked;
        self.mismatches += other.mismatches;
        self.per_order.extend(other.per_order);
    }
}

#[derive(Default)]
struct Tally {
    mismatches: u64,
}

impl Tally {
    fn matrix(&mut self, m: &BinaryMatrix, im: &IntMatrix) {
        if measures::nn(m) != normality_defect_l1(im) {
            self.mismatches += 1;
        }
    }

    fn pair(&mut self, a: &BinaryMatrix, ia: &IntMatrix, b: &BinaryMatrix, ib: &IntMatrix) {
        let oracle = commutator_l1(ia, ib).expect("equal orders");
        if measures::nc1(a, b).expect("equal orders") != oracle {
            self.mismatches += 1;
        }
        if a.is_symmetric() {
            if measures::nc2(a, b).expect("symmetric first argument") != oracle {
                self.mismatches += 1;
            }
            if b.is_symmetric() && measures::nc3(a, b).expect("symmetric arguments") != oracle {
                self.mismatches += 1;
            }
        }
    }
}

/// Every matrix and every ordered pair of matrices of orders `1..=order_bound`.
pub fn exhaustive_equivalence(order_bound: usize) -> Result<VerificationSummary> {
    if order_bound > MAX_EXHAUSTIVE_ORDER {
        return Err(Error::SearchCap(format!(
            "exhaustive pair enumeration supports order <= {MAX_EXHAUSTIVE_ORDER}, got {order_bound}"
        )));
    }
    let mut tally = Tally::default();
    let mut per_order = Vec::new();
    let mut checked = 0;
    for order in 1..=order_bound {
        let all: Vec<(BinaryMatrix, IntMatrix)> = (0..1u64 << (order * order))
            .map(|code| {
                let m = BinaryMatrix::from_code(order, code);
                let im = IntMatrix::from(&m);
                (m, im)
            })
            .collect();
        for (m, im) in &all {
            tally.matrix(m, im);
        }
        for (a, ia) in &all {
            for (b, ib) in &all {
                tally.pair(a, ia, b, ib);
            }
        }
        let matrices = all.len() as u64;
        let pairs = matrices * matrices;
        checked += matrices + pairs;
        per_order.push(OrderCount {
            order,
            matrices,
            pairs,
        });
    }
    Ok(VerificationSummary {
        checked,
        mismatches: tally.mismatches,
        mode: VerificationMode::Exhaustive,
        seed: 0,
        per_order,
    })
}

fn random_matrix(rng: &mut impl Rng, order: usize) -> BinaryMatrix {
    BinaryMatrix::from_fn(order, |_, _| rng.gen_bool(0.5))
}

fn random_symmetric(rng: &mut impl Rng, order: usize) -> BinaryMatrix {
    let mut m = BinaryMatrix::zeros(order);
    for i in 0..order {
        for j in i..order {
            let bit = rng.gen_bool(0.5);
            m.set(i, j, bit);
            m.set(j, i, bit);
        }
    }
    m
}

/// Seeded random pairs at each order in `orders`. Each trial checks `nn` on
/// a random matrix, `nc1` on a random pair, and `nc2`/`nc3` on pairs with
/// symmetric arguments.
pub fn sampled_equivalence(
    orders: std::ops::RangeInclusive<usize>,
    pairs_per_order: u64,
    seed: u64,
) -> VerificationSummary {
    let mut summary = VerificationSummary {
        checked: 0,
        mismatches: 0,
        mode: VerificationMode::Sampled,
        seed,
        per_order: Vec::new(),
    };
    for order in orders {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (order as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
        let mut tally = Tally::default();
        for _ in 0..pairs_per_order {
            let a = random_matrix(&mut rng, order);
            let b = random_matrix(&mut rng, order);
            let sa = random_symmetric(&mut rng, order);
            let sb = random_symmetric(&mut rng, order);
            let (ia, ib) = (IntMatrix::from(&a), IntMatrix::from(&b));
            let (isa, isb) = (IntMatrix::from(&sa), IntMatrix::from(&sb));
            tally.matrix(&a, &ia);
            tally.pair(&a, &ia, &b, &ib);
            tally.pair(&sa, &isa, &b, &ib);
            tally.pair(&sa, &isa, &sb, &isb);
        }
        summary.merge(VerificationSummary {
            checked: pairs_per_order,
            mismatches: tally.mismatches,
            mode: VerificationMode::Sampled,
            seed,
            per_order: vec![OrderCount {
                order,
                matrices: 2 * pairs_per_order,
                pairs: pairs_per_order,
            }],
        });
    }
    summary
}

/// Seeded random graphs cycling through `shapes`, each compared under both
/// signs: every per-condition total of `qd` must equal the matrix-product
/// value. Edge probabilities are drawn from `[0.1, 0.9]`; edgeless draws are
/// skipped. `checked` counts (graph, sign) comparisons.
pub fn qd_oracle_sweep(shapes: &[(usize, usize)], graphs: u64, seed: u64) -> Result<VerificationSummary> {
    if shapes.is_empty() {
        return Err(Error::InvalidParameter("no graph shapes given".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut summary = VerificationSummary {
        checked: 0,
        mismatches: 0,
        mode: VerificationMode::Sampled,
        seed,
        per_order: Vec::new(),
    };
    for k in 0..graphs {
        let (m, n) = shapes[(k % shapes.len() as u64) as usize];
        let p = rng.gen_range(0.1..=0.9);
        let inst = random_graph(m, n, p, rng.gen())?;
        if inst.graph.total_degree() == 0 {
            continue;
        }
        let decomp = block_decompose(&inst.graph, &inst.labeling)?;
        for sign in Sign::BOTH {
            let report = measures::qd_of_decomposition(&decomp, &inst.labeling, sign)?;
            let b = &report.breakdown;
            let ours = [Condition::Prop2, Condition::Prop3, Condition::Prop4, Condition::Prop5].map(|c| b.total(c));
            let oracle = oracle_violations(&decomp, sign);
            summary.checked += 1;
            if ours != oracle || report.qd_total != oracle.iter().sum::<u64>() {
                summary.mismatches += 1;
            }
        }
    }
    Ok(summary)
}
