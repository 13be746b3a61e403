//! Labeled graphs, cluster labelings and the canonical edge-list text format.
//!
//! Rust-side indices are 0-based. The text formats (edge lists, `perm:`
//! lines, graph6, JSON reports) and [`Graph::build`] / [`ClusterLabeling::new`]
//! use the 1-based vertex numbering of the ingest format.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::binary::BinaryMatrix;
use crate::error::{Error, Result};

/// Undirected graph with simple edges and optional self-loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    // (u, v) with u < v
    edges: BTreeSet<(usize, usize)>,
    loops: BTreeSet<usize>,
}

impl Graph {
    /// Builds a graph from 1-based endpoints. Duplicate and reversed pairs
    /// collapse to one edge; `(v, v)` must be given through `loops`.
    pub fn build(vertex_count: usize, edges: &[(usize, usize)], loops: &[usize]) -> Result<Graph> {
        let check = |v: usize| {
            if v == 0 || v > vertex_count {
                Err(Error::VertexOutOfRange {
                    vertex: v,
                    count: vertex_count,
                })
            } else {
                Ok(v - 1)
            }
        };
        let mut zero_edges = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            let (a, b) = (check(u)?, check(v)?);
            if a == b {
                return Err(Error::SelfPair(u));
            }
            zero_edges.push((a, b));
        }
        let zero_loops = loops.iter().map(|&v| check(v)).collect::<Result<Vec<_>>>()?;
        Graph::from_zero_based(vertex_count, zero_edges, zero_loops)
    }

    /// Same as [`Graph::build`] with 0-based endpoints.
    pub fn from_zero_based(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        loops: impl IntoIterator<Item = usize>,
    ) -> Result<Graph> {
        if vertex_count == 0 {
            return Err(Error::InvalidParameter("graph needs at least one vertex".into()));
        }
        let oob = |v: usize| Error::VertexOutOfRange {
            vertex: v + 1,
            count: vertex_count,
        };
        let mut edge_set = BTreeSet::new();
        for (u, v) in edges {
            if u >= vertex_count {
                return Err(oob(u));
            }
            if v >= vertex_count {
                return Err(oob(v));
            }
            if u == v {
                return Err(Error::SelfPair(u + 1));
            }
            edge_set.insert((u.min(v), u.max(v)));
        }
        let mut loop_set = BTreeSet::new();
        for v in loops {
            if v >= vertex_count {
                return Err(oob(v));
            }
            loop_set.insert(v);
        }
        Ok(Graph {
            vertex_count,
            edges: edge_set,
            loops: loop_set,
        })
    }

    pub fn empty(vertex_count: usize) -> Result<Graph> {
        Graph::from_zero_based(vertex_count, [], [])
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as 0-based `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn loops(&self) -> impl Iterator<Item = usize> + '_ {
        self.loops.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.loops.contains(&v)
    }

    /// Adjacency entry: edge for `u != v`, loop for `u == v`.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        if u == v {
            self.has_loop(v)
        } else {
            self.has_edge(u, v)
        }
    }

    /// Degree in the whole graph; a loop counts once.
    pub fn degree(&self, v: usize) -> usize {
        let incident = self.edges.iter().filter(|&&(a, b)| a == v || b == v).count();
        incident + usize::from(self.has_loop(v))
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        for &v in &self.loops {
            deg[v] += 1;
        }
        deg
    }

    pub fn total_degree(&self) -> usize {
        2 * self.edges.len() + self.loops.len()
    }

    pub fn adjacency(&self) -> BinaryMatrix {
        let mut a = BinaryMatrix::zeros(self.vertex_count);
        for &(u, v) in &self.edges {
            a.set(u, v, true);
            a.set(v, u, true);
        }
        for &v in &self.loops {
            a.set(v, v, true);
        }
        a
    }

    /// Image of the graph under the vertex bijection `v -> map[v]`.
    pub fn map_vertices(&self, map: &[usize]) -> Result<Graph> {
        if map.len() != self.vertex_count {
            return Err(Error::Dimension(format!(
                "vertex map of length {} for {} vertices",
                map.len(),
                self.vertex_count
            )));
        }
        check_bijection(map)?;
        Graph::from_zero_based(
            self.vertex_count,
            self.edges.iter().map(|&(u, v)| (map[u], map[v])),
            self.loops.iter().map(|&v| map[v]),
        )
    }
}

fn check_bijection(perm: &[usize]) -> Result<()> {
    let mut seen = vec![false; perm.len()];
    for &p in perm {
        if p >= perm.len() || seen[p] {
            return Err(Error::NotBijective(perm.len()));
        }
        seen[p] = true;
    }
    Ok(())
}

/// Split of `N = m*n` vertices into `m` clusters of `n` slots each.
///
/// Position `k` (0-based) of the permutation is slot `(k / n, k % n)`, so the
/// first `n` listed vertices form `C_1`, the next `n` form `C_2`, and so on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterLabeling {
    m: usize,
    n: usize,
    // position -> vertex
    order: Vec<usize>,
    // vertex -> position
    position: Vec<usize>,
}

impl ClusterLabeling {
    /// Labeling from a 1-based vertex permutation of length `m*n`.
    pub fn new(m: usize, n: usize, permutation: &[usize]) -> Result<Self> {
        let zero = permutation
            .iter()
            .map(|&p| p.checked_sub(1).ok_or(Error::NotBijective(permutation.len())))
            .collect::<Result<Vec<_>>>()?;
        Self::from_zero_based(m, n, zero)
    }

    pub fn from_zero_based(m: usize, n: usize, order: Vec<usize>) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidParameter(format!("cluster shape {m}x{n}")));
        }
        if order.len() != m * n {
            return Err(Error::Dimension(format!(
                "permutation of length {} for m*n = {}",
                order.len(),
                m * n
            )));
        }
        check_bijection(&order)?;
        let mut position = vec![0; order.len()];
        for (k, &v) in order.iter().enumerate() {
            position[v] = k;
        }
        Ok(ClusterLabeling {
            m,
            n,
            order,
            position,
        })
    }

    pub fn natural(m: usize, n: usize) -> Result<Self> {
        Self::from_zero_based(m, n, (0..m * n).collect())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.m * self.n
    }

    /// Vertex `v_{mu,i}` (all 0-based).
    pub fn vertex(&self, mu: usize, i: usize) -> usize {
        self.order[mu * self.n + i]
    }

    /// `(mu, i)` of vertex `v`.
    pub fn slot_of(&self, v: usize) -> (usize, usize) {
        let k = self.position[v];
        (k / self.n, k % self.n)
    }

    pub fn cluster(&self, mu: usize) -> &[usize] {
        &self.order[mu * self.n..(mu + 1) * self.n]
    }

    pub fn permutation(&self) -> &[usize] {
        &self.order
    }

    pub fn permutation_one_based(&self) -> Vec<usize> {
        self.order.iter().map(|v| v + 1).collect()
    }

    pub fn is_natural(&self) -> bool {
        self.order.iter().enumerate().all(|(k, &v)| k == v)
    }
}

/// A graph together with the labeling that clusters it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub labeling: ClusterLabeling,
}

impl Instance {
    pub fn new(graph: Graph, labeling: ClusterLabeling) -> Result<Self> {
        if graph.vertex_count() != labeling.vertex_count() {
            return Err(Error::Dimension(format!(
                "graph has {} vertices but m*n = {}",
                graph.vertex_count(),
                labeling.vertex_count()
            )));
        }
        Ok(Instance { graph, labeling })
    }

    pub fn to_edge_list(&self) -> String {
        write_edge_list(&self.graph, &self.labeling)
    }
}

/// Parsed contents of an edge-list document. `m*n` is not checked against
/// `N` here so callers can override the cluster shape first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeListDocument {
    pub graph: Graph,
    pub m: usize,
    pub n: usize,
    /// 1-based permutation from a `perm:` line, if present.
    pub permutation: Option<Vec<usize>>,
}

impl EdgeListDocument {
    pub fn into_instance(self) -> Result<Instance> {
        let labeling = match &self.permutation {
            Some(p) => ClusterLabeling::new(self.m, self.n, p)?,
            None => ClusterLabeling::natural(self.m, self.n)?,
        };
        Instance::new(self.graph, labeling)
    }
}

fn parse_usize(tok: &str, line: usize) -> Result<usize> {
    tok.parse::<usize>()
        .map_err(|_| Error::parse(line, format!("expected a non-negative integer, found {tok:?}")))
}

/// Parses the edge-list format: a header `N m n`, one `u v` line per edge
/// (`u u` for a loop), and an optional `perm: p1 ... pN` line. Blank lines
/// and lines starting with `#` are ignored.
pub fn parse_edge_list(text: &str) -> Result<EdgeListDocument> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    let mut loops = Vec::new();
    let mut permutation = None;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("perm:") {
            if header.is_none() {
                return Err(Error::parse(lineno, "perm line before header"));
            }
            if permutation.is_some() {
                return Err(Error::parse(lineno, "duplicate perm line"));
            }
            let p = rest
                .split_whitespace()
                .map(|t| parse_usize(t, lineno))
                .collect::<Result<Vec<_>>>()?;
            permutation = Some(p);
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match header {
            None => {
                if toks.len() != 3 {
                    return Err(Error::parse(lineno, "header must be `N m n`"));
                }
                header = Some((
                    parse_usize(toks[0], lineno)?,
                    parse_usize(toks[1], lineno)?,
                    parse_usize(toks[2], lineno)?,
                ));
            }
            Some(_) => {
                if toks.len() != 2 {
                    return Err(Error::parse(lineno, "edge line must be `u v`"));
                }
                let (u, v) = (parse_usize(toks[0], lineno)?, parse_usize(toks[1], lineno)?);
                if u == v {
                    loops.push(u);
                } else {
                    edges.push((u, v));
                }
            }
        }
    }

    let (count, m, n) = header.ok_or_else(|| Error::parse(0, "missing `N m n` header"))?;
    let graph = Graph::build(count, &edges, &loops)?;
    Ok(EdgeListDocument {
        graph,
        m,
        n,
        permutation,
    })
}

/// Writes the canonical edge-list document, always including the `perm:` line.
pub fn write_edge_list(graph: &Graph, labeling: &ClusterLabeling) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {} {}", graph.vertex_count(), labeling.m(), labeling.n());
    for (u, v) in graph.edges() {
        let _ = writeln!(out, "{} {}", u + 1, v + 1);
    }
    for v in graph.loops() {
        let _ = writeln!(out, "{} {}", v + 1, v + 1);
    }
    let perm: Vec<String> = labeling
        .permutation_one_based()
        .iter()
        .map(ToString::to_string)
        .collect();
    let _ = writeln!(out, "perm: {}", perm.join(" "));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_final_example() {
        let g = Graph::build(4, &[(1, 3), (1, 4), (2, 3)], &[]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.degrees(), vec![2, 1, 2, 1]);
        assert_eq!(g.total_degree(), 6);
    }

    #[test]
    fn empty_graph_and_dedup() {
        let g = Graph::build(3, &[], &[]).unwrap();
        assert_eq!(g.edge_count(), 0);
        let g = Graph::build(2, &[(1, 2), (2, 1)], &[]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn build_errors() {
        assert_eq!(
            Graph::build(3, &[(1, 4)], &[]),
            Err(Error::VertexOutOfRange { vertex: 4, count: 3 })
        );
        assert_eq!(
            Graph::build(3, &[(0, 1)], &[]),
            Err(Error::VertexOutOfRange { vertex: 0, count: 3 })
        );
        assert_eq!(Graph::build(3, &[(2, 2)], &[]), Err(Error::SelfPair(2)));
        assert!(Graph::build(3, &[], &[5]).is_err());
    }

    #[test]
    fn loops_count_once_in_degree() {
        let g = Graph::build(2, &[(1, 2)], &[1]).unwrap();
        assert_eq!(g.degree(0), 2);
        assert_eq!(g.degree(1), 1);
        assert_eq!(g.total_degree(), 3);
        assert!(g.adjacency().get(0, 0));
    }

    #[test]
    fn labelings() {
        let nat = ClusterLabeling::new(2, 3, &[1, 2, 3, 4, 5, 6]).unwrap();
        assert_eq!(nat.cluster(0), &[0, 1, 2]);
        assert_eq!(nat.cluster(1), &[3, 4, 5]);
        assert!(nat.is_natural());

        let h = ClusterLabeling::new(2, 3, &[1, 4, 5, 2, 3, 6]).unwrap();
        assert_eq!(h.cluster(0), &[0, 3, 4]);
        assert_eq!(h.cluster(1), &[1, 2, 5]);
        assert_eq!(h.slot_of(3), (0, 1));

        let single = ClusterLabeling::new(1, 4, &[1, 2, 3, 4]).unwrap();
        assert_eq!(single.m(), 1);
        assert_eq!(single.cluster(0).len(), 4);
    }

    #[test]
    fn labeling_errors() {
        assert_eq!(
            ClusterLabeling::new(2, 2, &[1, 1, 2, 3]),
            Err(Error::NotBijective(4))
        );
        assert!(matches!(
            ClusterLabeling::new(2, 2, &[1, 2, 3]),
            Err(Error::Dimension(_))
        ));
        assert_eq!(
            ClusterLabeling::new(1, 2, &[0, 1]),
            Err(Error::NotBijective(2))
        );
    }

    #[test]
    fn edge_list_parse() {
        let doc = parse_edge_list("4 2 2\n1 3\n1 4\n\n2 3\n2 2\nperm: 2 1 3 4\n").unwrap();
        assert_eq!(doc.graph.edge_count(), 3);
        assert!(doc.graph.has_loop(1));
        assert_eq!(doc.permutation, Some(vec![2, 1, 3, 4]));
        let inst = doc.into_instance().unwrap();
        assert_eq!(inst.labeling.vertex(0, 0), 1);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(parse_edge_list(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("4 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("4 2 2\n1 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("4 2 2\n1 2 3\n"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_edge_list("4 2 2\n1 9\n"),
            Err(Error::VertexOutOfRange { .. })
        ));
        let doc = parse_edge_list("5 2 2\n1 2\n").unwrap();
        assert!(matches!(doc.into_instance(), Err(Error::Dimension(_))));
    }

    #[test]
    fn edge_list_writer_emits_perm() {
        let g = Graph::build(4, &[(1, 3)], &[2]).unwrap();
        let lab = ClusterLabeling::natural(2, 2).unwrap();
        assert_eq!(write_edge_list(&g, &lab), "4 2 2\n1 3\n2 2\nperm: 1 2 3 4\n");
    }
}
