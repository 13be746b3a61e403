//! Minimum and maximum of `QD` over vertex labelings of a fixed graph.

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::block::block_decompose;
use crate::density::Sign;
use crate::error::{Error, Result};
use crate::graph::{ClusterLabeling, Graph};
use crate::measures::qd_of_decomposition;

/// Exhaustive search visits all `N!` orderings, so it is capped here.
pub const MAX_EXHAUSTIVE_VERTICES: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    Exhaustive,
    Sampled,
}

impl SearchMode {
    /// Exhaustive up to the cap, sampled beyond it.
    pub fn auto(vertex_count: usize) -> SearchMode {
        if vertex_count <= MAX_EXHAUSTIVE_VERTICES {
            SearchMode::Exhaustive
        } else {
            SearchMode::Sampled
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Extremum {
    pub qd: u64,
    /// 1-based vertex order of the first labeling reaching `qd`.
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabelingSearch {
    pub m: usize,
    pub n: usize,
    pub s: i64,
    pub mode: SearchMode,
    pub searched: u64,
    pub seed: u64,
    pub min: Extremum,
    pub max: Extremum,
    pub zero_found: bool,
}

struct Tracker {
    min: Option<Extremum>,
    max: Option<Extremum>,
}

impl Tracker {
    fn offer(&mut self, qd: u64, order: &[usize]) {
        let witness = || order.iter().map(|v| v + 1).collect();
        if self.min.as_ref().is_none_or(|e| qd < e.qd) {
            self.min = Some(Extremum { qd, witness: witness() });
        }
        if self.max.as_ref().is_none_or(|e| qd > e.qd) {
            self.max = Some(Extremum { qd, witness: witness() });
        }
    }
}

/// Evaluates `QD` for each sign over labelings of `g`. Exhaustive mode
/// walks all orderings lexicographically starting from the identity;
/// sampled mode evaluates the identity and then `trials - 1` seeded
/// shuffles. Returns one result per sign, in the order given.
pub fn search_labelings(
    g: &Graph,
    m: usize,
    n: usize,
    signs: &[Sign],
    mode: SearchMode,
    trials: u64,
    seed: u64,
) -> Result<Vec<LabelingSearch>> {
    let count = g.vertex_count();
    if m * n != count {
        return Err(Error::Dimension(format!("m*n = {} but the graph has {count} vertices", m * n)));
    }
    if g.total_degree() == 0 {
        return Err(Error::EmptyGraph);
    }
    if mode == SearchMode::Exhaustive && count > MAX_EXHAUSTIVE_VERTICES {
        return Err(Error::SearchCap(format!(
            "exhaustive labeling search needs N <= {MAX_EXHAUSTIVE_VERTICES}, got {count}"
        )));
    }
    let mut trackers: Vec<Tracker> = signs.iter().map(|_| Tracker { min: None, max: None }).collect();
    let mut searched = 0u64;
    let mut visit = |order: &[usize]| -> Result<()> {
        let lab = ClusterLabeling::from_zero_based(m, n, order.to_vec())?;
        let decomp = block_decompose(g, &lab)?;
        for (t, &s) in trackers.iter_mut().zip(signs) {
            t.offer(qd_of_decomposition(&decomp, &lab, s)?.qd_total, order);
        }
        searched += 1;
        Ok(())
    };
    match mode {
        SearchMode::Exhaustive => {
            for order in (0..count).permutations(count) {
                visit(&order)?;
            }
        }
        SearchMode::Sampled => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut order: Vec<usize> = (0..count).collect();
            visit(&order)?;
            for _ in 1..trials {
                order.shuffle(&mut rng);
                visit(&order)?;
            }
        }
    }
    Ok(trackers
        .into_iter()
        .zip(signs)
        .map(|(t, &s)| {
            let min = t.min.expect("at least one labeling visited");
            LabelingSearch {
                m,
                n,
                s: s.value(),
                mode,
                searched,
                seed,
                zero_found: min.qd == 0,
                min,
                max: t.max.expect("at least one labeling visited"),
            }
        })
        .collect())
}
