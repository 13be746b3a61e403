//! Combinatorial quantum discord of graph states.
//!
//! A graph on `N = m n` vertices, with its vertices split into `m` clusters
//! of `n`, defines the density matrices `rho_l = L(G)/d` and
//! `rho_q = Q(G)/d`. [`measures::qd`] evaluates the discord measure `QD(G)`
//! from neighborhood intersections of the adjacency blocks; it vanishes
//! exactly when the blocks of `rho` are normal and commute pairwise.
//! [`oracle`] recomputes every quantity by direct matrix products.

pub mod binary;
pub mod block;
pub mod cli;
pub mod density;
pub mod error;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod measures;
pub mod oracle;
pub mod report;
pub mod search;

pub use binary::{neighborhood, BinaryMatrix, Side, Support};
pub use block::{bipartite_graph_of, block_decompose, BlockDecomposition};
pub use density::{DensityMatrix, Rational, Sign};
pub use error::{Error, Result};
pub use graph::{parse_edge_list, write_edge_list, ClusterLabeling, EdgeListDocument, Graph, Instance};
pub use measures::{is_zero_discord, qd, DiscordReport, ViolationBreakdown};
