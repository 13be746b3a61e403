//! Graph families with known discord behavior, seeded random instances, and
//! simultaneous slot relabeling.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::binary::BinaryMatrix;
use crate::error::{Error, Result};
use crate::graph::{ClusterLabeling, Graph, Instance};

/// How the two sides of a complete bipartite graph sit relative to the
/// clusters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BipartiteLabeling {
    /// Sides coincide with the clusters `{1..n}` and `{n+1..2n}`.
    Natural,
    /// 1-based permutation of `1..=2n`: the first `n` entries form one side
    /// and the rest the other, while clusters stay `{1..n}`, `{n+1..2n}`.
    Permutation(Vec<usize>),
}

/// Complete graph on `m*n` vertices, natural labeling.
pub fn complete_graph(m: usize, n: usize) -> Result<Instance> {
    let count = m * n;
    if m == 0 || n == 0 || count < 2 {
        return Err(Error::InvalidParameter(format!("complete graph needs m*n >= 2, got {m}x{n}")));
    }
    let edges = (0..count).flat_map(|u| (u + 1..count).map(move |v| (u, v)));
    Instance::new(Graph::from_zero_based(count, edges, [])?, ClusterLabeling::natural(m, n)?)
}

/// Complete bipartite graph on `2n` vertices with two clusters of `n`.
pub fn complete_bipartite(n: usize, labeling: &BipartiteLabeling) -> Result<Instance> {
    if n == 0 {
        return Err(Error::InvalidParameter("complete bipartite graph needs n >= 1".into()));
    }
    let order: Vec<usize> = match labeling {
        BipartiteLabeling::Natural => (0..2 * n).collect(),
        BipartiteLabeling::Permutation(p) => ClusterLabeling::new(2, n, p)?.permutation().to_vec(),
    };
    let (left, right) = order.split_at(n);
    let edges = left.iter().flat_map(|&u| right.iter().map(move |&v| (u, v)));
    Instance::new(Graph::from_zero_based(2 * n, edges, [])?, ClusterLabeling::natural(2, n)?)
}

/// Graph `G` of the isomorphic-pair example: `K_{3,3}` aligned with the clusters.
pub fn figure3_g() -> Instance {
    complete_bipartite(3, &BipartiteLabeling::Natural).expect("fixed parameters")
}

/// Graph `H` of the isomorphic-pair example: `K_{3,3}` with sides
/// `{1,4,5}` / `{2,3,6}` under clusters `{1,2,3}` / `{4,5,6}`.
pub fn figure3_h() -> Instance {
    complete_bipartite(3, &BipartiteLabeling::Permutation(vec![1, 4, 5, 2, 3, 6])).expect("fixed parameters")
}

/// Loop-decorated graph of the Werner state at `x = 1`: vertex `(i, j)` sits
/// in cluster `i`, slot `j`; every vertex has a loop and `(i, j)` is joined
/// to `(j, i)` for `i != j`.
pub fn werner_graph(d: usize) -> Result<Instance> {
    if d < 2 {
        return Err(Error::InvalidParameter(format!("werner graph needs d >= 2, got {d}")));
    }
    let edges = (0..d).flat_map(|i| (i + 1..d).map(move |j| (i * d + j, j * d + i)));
    Instance::new(Graph::from_zero_based(d * d, edges, 0..d * d)?, ClusterLabeling::natural(d, d)?)
}

/// Separable two-qubit example: edges `v11-v21`, `v11-v22`, `v12-v21`.
pub fn final_example() -> Instance {
    Instance::new(
        Graph::build(4, &[(1, 3), (1, 4), (2, 3)], &[]).expect("fixed edges"),
        ClusterLabeling::natural(2, 2).expect("fixed shape"),
    )
    .expect("fixed shape")
}

/// Two edgeless clusters joined by the biadjacency `block`.
fn bipartite_from_block(block: &BinaryMatrix) -> Result<Instance> {
    let n = block.order();
    let edges = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| block.get(i, j))
        .map(|(i, j)| (i, n + j));
    Instance::new(Graph::from_zero_based(2 * n, edges, [])?, ClusterLabeling::natural(2, n)?)
}

fn check_regular(n: usize, r: usize) -> Result<()> {
    if n == 0 || r == 0 || r > n {
        return Err(Error::InvalidParameter(format!("need 1 <= r <= n, got n={n}, r={r}")));
    }
    Ok(())
}

/// `r` shifts `S` of `Z_n` with `S = -S`, so the circulant is symmetric.
/// Self-inverse shifts are `0` and `n/2`; the rest come in pairs `{k, n-k}`.
fn symmetric_shift_set(n: usize, r: usize, rng: Option<&mut ChaCha8Rng>) -> Vec<usize> {
    let mut selfs = vec![0];
    if n % 2 == 0 && n > 1 {
        selfs.push(n / 2);
    }
    let mut pairs: Vec<(usize, usize)> = (1..n).take_while(|&k| k < n - k).map(|k| (k, n - k)).collect();
    let feasible: Vec<usize> = (0..=selfs.len())
        .filter(|&c| c <= r && (r - c) % 2 == 0 && (r - c) / 2 <= pairs.len())
        .collect();
    let self_count = match rng {
        Some(rng) => {
            let c = *feasible.choose(rng).expect("every 1 <= r <= n is feasible");
            selfs.shuffle(rng);
            pairs.shuffle(rng);
            c
        }
        None => feasible[0],
    };
    let mut shifts: Vec<usize> = selfs[..self_count].to_vec();
    for &(a, b) in &pairs[..(r - self_count) / 2] {
        shifts.push(a);
        shifts.push(b);
    }
    shifts
}

/// Bipartite graph whose cross block is symmetric and `r`-regular, with
/// edgeless clusters. With a seed the shift set is random and the block is
/// conjugated by a random slot permutation.
pub fn partially_symmetric_regular(n: usize, r: usize, seed: Option<u64>) -> Result<Instance> {
    check_regular(n, r)?;
    let block = match seed {
        None => BinaryMatrix::circulant(n, &symmetric_shift_set(n, r, None)),
        Some(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let c = BinaryMatrix::circulant(n, &symmetric_shift_set(n, r, Some(&mut rng)));
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            c.conjugate_by(&perm)
        }
    };
    debug_assert!(block.is_symmetric());
    bipartite_from_block(&block)
}

/// Bipartite graph whose cross block is an `r`-regular circulant (normal,
/// generally asymmetric), with edgeless clusters. Without a seed the shifts
/// are `1..=r`; with a seed they are a random `r`-subset of `Z_n` followed by
/// a random slot conjugation.
pub fn regular_normal_block(n: usize, r: usize, seed: Option<u64>) -> Result<Instance> {
    check_regular(n, r)?;
    let block = match seed {
        None => BinaryMatrix::circulant(n, &(1..=r).map(|k| k % n).collect::<Vec<_>>()),
        Some(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut all: Vec<usize> = (0..n).collect();
            all.shuffle(&mut rng);
            let c = BinaryMatrix::circulant(n, &all[..r]);
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            c.conjugate_by(&perm)
        }
    };
    bipartite_from_block(&block)
}

/// Each of the `C(mn, 2)` vertex pairs is an edge with probability `p`.
pub fn random_graph(m: usize, n: usize, edge_probability: f64, seed: u64) -> Result<Instance> {
    if !(0.0..=1.0).contains(&edge_probability) {
        return Err(Error::InvalidParameter(format!(
            "edge probability {edge_probability} outside [0, 1]"
        )));
    }
    let labeling = ClusterLabeling::natural(m, n)?;
    let count = m * n;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..count {
        for v in u + 1..count {
            if rng.gen_bool(edge_probability) {
                edges.push((u, v));
            }
        }
    }
    Instance::new(Graph::from_zero_based(count, edges, [])?, labeling)
}

/// Renames slot `i` to `slot_permutation[i]` (0-based) inside every cluster
/// at once. Under the returned labeling every block becomes `P^t A P`.
pub fn local_relabel(g: &Graph, lab: &ClusterLabeling, slot_permutation: &[usize]) -> Result<Instance> {
    let n = lab.n();
    if slot_permutation.len() != n {
        return Err(Error::Dimension(format!(
            "slot permutation of length {} for n = {n}",
            slot_permutation.len()
        )));
    }
    let mut seen = vec![false; n];
    for &p in slot_permutation {
        if p >= n || seen[p] {
            return Err(Error::NotBijective(n));
        }
        seen[p] = true;
    }
    let mut map = vec![0; lab.vertex_count()];
    for mu in 0..lab.m() {
        for i in 0..n {
            map[lab.vertex(mu, i)] = lab.vertex(mu, slot_permutation[i]);
        }
    }
    Instance::new(g.map_vertices(&map)?, lab.clone())
}

/// Parameterized family, as named on the command line.
#[derive(Debug, Clone, PartialEq)]
pub enum FamilySpec {
    Complete { m: usize, n: usize },
    CompleteBipartite { n: usize, labeling: BipartiteLabeling },
    PartiallySymmetricRegular { n: usize, r: usize, seed: Option<u64> },
    RegularNormalBlock { n: usize, r: usize, seed: Option<u64> },
    Werner { d: usize },
    Figure3G,
    Figure3H,
    FinalExample,
    Random { m: usize, n: usize, p: f64, seed: u64 },
}

pub const FAMILY_NAMES: [&str; 9] = [
    "complete",
    "complete_bipartite",
    "partially_symmetric_regular",
    "regular_normal_block",
    "werner",
    "figure3_G",
    "figure3_H",
    "final_example",
    "random",
];

struct Params<'a> {
    pairs: Vec<(&'a str, &'a str)>,
}

impl<'a> Params<'a> {
    fn parse(text: &'a str) -> Result<Self> {
        let mut pairs = Vec::new();
        for tok in text.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            let (k, v) = tok
                .split_once('=')
                .ok_or_else(|| Error::InvalidParameter(format!("expected key=value, got {tok:?}")))?;
            pairs.push((k, v));
        }
        Ok(Params { pairs })
    }

    fn raw(&self, key: &str) -> Option<&'a str> {
        self.pairs.iter().rev().find(|(k, _)| *k == key).map(|(_, v)| *v)
    }

    fn get<T: std::str::FromStr>(&self, key: &str) -> Result<Option<T>> {
        self.raw(key)
            .map(|v| {
                v.parse::<T>()
                    .map_err(|_| Error::InvalidParameter(format!("bad value {v:?} for {key}")))
            })
            .transpose()
    }

    fn require<T: std::str::FromStr>(&self, key: &str) -> Result<T> {
        self.get(key)?
            .ok_or_else(|| Error::InvalidParameter(format!("missing parameter {key}")))
    }
}

impl FamilySpec {
    /// Parses a family name and `key=value` parameters separated by commas
    /// or whitespace, e.g. `("werner", "d=3")`.
    pub fn parse(name: &str, params: &str) -> Result<FamilySpec> {
        let p = Params::parse(params)?;
        Ok(match name {
            "complete" => FamilySpec::Complete {
                m: p.require("m")?,
                n: p.require("n")?,
            },
            "complete_bipartite" => {
                let labeling = match p.raw("perm") {
                    None | Some("natural") => BipartiteLabeling::Natural,
                    Some(list) => BipartiteLabeling::Permutation(
                        list.split(['-', ':', '/'])
                            .map(|t| {
                                t.parse()
                                    .map_err(|_| Error::InvalidParameter(format!("bad permutation entry {t:?}")))
                            })
                            .collect::<Result<_>>()?,
                    ),
                };
                FamilySpec::CompleteBipartite {
                    n: p.require("n")?,
                    labeling,
                }
            }
            "partially_symmetric_regular" => FamilySpec::PartiallySymmetricRegular {
                n: p.require("n")?,
                r: p.require("r")?,
                seed: p.get("seed")?,
            },
            "regular_normal_block" => FamilySpec::RegularNormalBlock {
                n: p.require("n")?,
                r: p.require("r")?,
                seed: p.get("seed")?,
            },
            "werner" => FamilySpec::Werner { d: p.require("d")? },
            "figure3_G" => FamilySpec::Figure3G,
            "figure3_H" => FamilySpec::Figure3H,
            "final_example" => FamilySpec::FinalExample,
            "random" => FamilySpec::Random {
                m: p.require("m")?,
                n: p.require("n")?,
                p: p.get("p")?.unwrap_or(0.5),
                seed: p.get("seed")?.unwrap_or(0),
            },
            other => {
                return Err(Error::InvalidParameter(format!(
                    "unknown family {other:?}; expected one of {}",
                    FAMILY_NAMES.join(", ")
                )))
            }
        })
    }

    pub fn generate(&self) -> Result<Instance> {
        match self {
            FamilySpec::Complete { m, n } => complete_graph(*m, *n),
            FamilySpec::CompleteBipartite { n, labeling } => complete_bipartite(*n, labeling),
            FamilySpec::PartiallySymmetricRegular { n, r, seed } => partially_symmetric_regular(*n, *r, *seed),
            FamilySpec::RegularNormalBlock { n, r, seed } => regular_normal_block(*n, *r, *seed),
            FamilySpec::Werner { d } => werner_graph(*d),
            FamilySpec::Figure3G => Ok(figure3_g()),
            FamilySpec::Figure3H => Ok(figure3_h()),
            FamilySpec::FinalExample => Ok(final_example()),
            FamilySpec::Random { m, n, p, seed } => random_graph(*m, *n, *p, *seed),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::CompleteBipartite { .. } => "complete_bipartite",
            FamilySpec::PartiallySymmetricRegular { .. } => "partially_symmetric_regular",
            FamilySpec::RegularNormalBlock { .. } => "regular_normal_block",
            FamilySpec::Werner { .. } => "werner",
            FamilySpec::Figure3G => "figure3_G",
            FamilySpec::Figure3H => "figure3_H",
            FamilySpec::FinalExample => "final_example",
            FamilySpec::Random { .. } => "random",
        }
    }
}
