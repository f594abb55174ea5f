//! Simple undirected graphs over at most 62 vertices, stored as one
//! adjacency bit set per vertex.

use std::fmt;

use thiserror::Error;

/// Hard vertex capacity. Matches the graph6 short-form limit; subset
/// enumeration is additionally capped by [`crate::engine::EngineOptions`].
pub const MAX_VERTICES: usize = 62;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order {0} exceeds capacity {MAX_VERTICES}")]
    CapacityExceeded(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("{family} requires order >= {min}, got {got}")]
    OrderBelowMinimum {
        family: &'static str,
        min: usize,
        got: usize,
    },
    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),
}

/// An immutable simple undirected graph with vertices labeled `0..n-1`.
///
/// Row `v` of `adj` holds the neighbor set of `v` as a bit mask, so degree
/// queries and neighborhood intersections are single popcount/AND
/// operations.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<u64>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::CapacityExceeded(n));
        }
        Ok(Graph {
            adj: vec![0; n],
            m: 0,
        })
    }

    /// Builds a graph from an explicit edge list. Rejects out-of-range
    /// endpoints, self-loops and duplicate edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.order();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    order: n,
                });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.adj[u] >> v & 1 == 1 {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        self.m += 1;
        Ok(())
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.m
    }

    /// Neighbor bit mask of vertex `v`.
    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Maximum degree; 0 for graphs without edges.
    pub fn max_degree(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Minimum degree; 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .min()
            .unwrap_or(0)
    }

    /// Mask with one bit per vertex.
    pub fn full_mask(&self) -> u64 {
        if self.order() == 0 {
            0
        } else {
            u64::MAX >> (64 - self.order())
        }
    }

    /// Edges as `(u, v)` pairs with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.order() {
            let mut higher = self.adj[u] & !(u64::MAX >> (63 - u));
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                higher &= higher - 1;
                out.push((u, v));
            }
        }
        out
    }

    /// Connected components as vertex bit masks, in order of smallest member.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for v in 0..self.order() {
            if seen >> v & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << v;
            let mut frontier = comp;
            while frontier != 0 {
                let mut expand = 0u64;
                let mut f = frontier;
                while f != 0 {
                    let w = f.trailing_zeros() as usize;
                    f &= f - 1;
                    expand |= self.adj[w];
                }
                frontier = expand & !comp;
                comp |= frontier;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order() > 0 && self.components().len() == 1
    }

    /// Asserts simplicity and symmetry; used by tests and debug builds.
    pub fn check_invariants(&self) {
        let n = self.order();
        let mut total = 0usize;
        for v in 0..n {
            assert_eq!(self.adj[v] & !self.full_mask(), 0, "bits beyond order");
            assert_eq!(self.adj[v] >> v & 1, 0, "self-loop at {v}");
            total += self.degree(v);
        }
        for (u, v) in self.edges() {
            assert!(self.has_edge(v, u), "asymmetric edge ({u},{v})");
        }
        assert_eq!(total, 2 * self.m, "edge count mismatch");
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, m={}, edges={:?})",
            self.order(),
            self.m,
            self.edges()
        )
    }
}

/// Named graph families with canonical vertex labelings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFamily {
    /// `E_n`: n isolated vertices.
    Empty(usize),
    /// `P_n`: path `0 - 1 - ... - (n-1)`.
    Path(usize),
    /// `C_n`: cycle with `i` adjacent to `i±1 mod n`.
    Cycle(usize),
    /// `K_n`: complete graph.
    Complete(usize),
    /// `K_n` minus the edge `(0, 1)`.
    CompleteMinusEdge(usize),
    /// `S_n`: star on `n` vertices, center 0.
    Star(usize),
    /// `W_n`: wheel on `n` vertices; center 0, rim cycle `1..n-1` in index
    /// order.
    Wheel(usize),
}

impl GraphFamily {
    pub fn order(&self) -> usize {
        match *self {
            GraphFamily::Empty(n)
            | GraphFamily::Path(n)
            | GraphFamily::Cycle(n)
            | GraphFamily::Complete(n)
            | GraphFamily::CompleteMinusEdge(n)
            | GraphFamily::Star(n)
            | GraphFamily::Wheel(n) => n,
        }
    }

    fn check_minimum(&self) -> Result<(), GraphError> {
        let (family, min) = match self {
            GraphFamily::Empty(_) => ("empty", 1),
            GraphFamily::Path(_) => ("path", 1),
            GraphFamily::Cycle(_) => ("cycle", 3),
            GraphFamily::Complete(_) => ("complete", 1),
            GraphFamily::CompleteMinusEdge(_) => ("complete-minus-edge", 2),
            GraphFamily::Star(_) => ("star", 1),
            GraphFamily::Wheel(_) => ("wheel", 4),
        };
        if self.order() < min {
            return Err(GraphError::OrderBelowMinimum {
                family,
                min,
                got: self.order(),
            });
        }
        Ok(())
    }
}

/// Builds the canonical representative of a graph family.
pub fn generate(family: GraphFamily) -> Result<Graph, GraphError> {
    family.check_minimum()?;
    let n = family.order();
    let edges: Vec<(usize, usize)> = match family {
        GraphFamily::Empty(_) => Vec::new(),
        GraphFamily::Path(_) => (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect(),
        GraphFamily::Cycle(_) => (0..n).map(|i| (i, (i + 1) % n)).collect(),
        GraphFamily::Complete(_) => complete_edges(n),
        GraphFamily::CompleteMinusEdge(_) => complete_edges(n)
            .into_iter()
            .filter(|&e| e != (0, 1))
            .collect(),
        GraphFamily::Star(_) => (1..n).map(|i| (0, i)).collect(),
        GraphFamily::Wheel(_) => {
            let mut e: Vec<(usize, usize)> = (1..n).map(|i| (0, i)).collect();
            e.extend((1..n - 1).map(|i| (i, i + 1)));
            e.push((1, n - 1));
            e
        }
    };
    Graph::from_edges(n, &edges)
}

fn complete_edges(n: usize) -> Vec<(usize, usize)> {
    let mut e = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            e.push((u, v));
        }
    }
    e
}

/// Graph join: disjoint union plus all edges between the two parts.
/// Vertices of `g1` keep their labels; vertices of `g2` are shifted by
/// `g1.order()`.
pub fn join(g1: &Graph, g2: &Graph) -> Result<Graph, GraphError> {
    let mut g = disjoint_union(g1, g2)?;
    let n1 = g1.order();
    let n2 = g2.order();
    let low = if n1 == 0 { 0 } else { u64::MAX >> (64 - n1) };
    let high = if n2 == 0 {
        0
    } else {
        (u64::MAX >> (64 - n2)) << n1
    };
    for u in 0..n1 {
        g.adj[u] |= high;
    }
    for v in n1..n1 + n2 {
        g.adj[v] |= low;
    }
    g.m += n1 * n2;
    Ok(g)
}

/// Disjoint union with `g2`'s labels shifted by `g1.order()`.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Result<Graph, GraphError> {
    let n1 = g1.order();
    let n = n1 + g2.order();
    if n > MAX_VERTICES {
        return Err(GraphError::CapacityExceeded(n));
    }
    let mut adj = Vec::with_capacity(n);
    adj.extend_from_slice(&g1.adj);
    adj.extend(g2.adj.iter().map(|r| r << n1));
    Ok(Graph {
        adj,
        m: g1.m + g2.m,
    })
}

/// Parses the edge-list format: first line `n m`, then `m` lines `u v`
/// with 0-based endpoints.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| GraphError::MalformedEdgeList("missing header line".into()))?;
    let mut parts = header.split_whitespace();
    let n: usize = parse_field(parts.next(), header, "vertex count")?;
    let m: usize = parse_field(parts.next(), header, "edge count")?;
    if parts.next().is_some() {
        return Err(GraphError::MalformedEdgeList(format!(
            "header has trailing fields: {header:?}"
        )));
    }
    let mut g = Graph::empty(n)?;
    let mut seen = 0usize;
    for line in lines {
        if seen == m {
            return Err(GraphError::MalformedEdgeList(format!(
                "more than {m} edge lines"
            )));
        }
        let mut parts = line.split_whitespace();
        let u: usize = parse_field(parts.next(), line, "endpoint")?;
        let v: usize = parse_field(parts.next(), line, "endpoint")?;
        if parts.next().is_some() {
            return Err(GraphError::MalformedEdgeList(format!(
                "edge line has trailing fields: {line:?}"
            )));
        }
        g.add_edge(u, v)?;
        seen += 1;
    }
    if seen != m {
        return Err(GraphError::MalformedEdgeList(format!(
            "expected {m} edges, got {seen}"
        )));
    }
    Ok(g)
}

fn parse_field(field: Option<&str>, line: &str, what: &str) -> Result<usize, GraphError> {
    field
        .ok_or_else(|| GraphError::MalformedEdgeList(format!("missing {what} in {line:?}")))?
        .parse()
        .map_err(|_| GraphError::MalformedEdgeList(format!("bad {what} in {line:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_minimums() {
        assert!(generate(GraphFamily::Cycle(2)).is_err());
        assert!(generate(GraphFamily::Wheel(3)).is_err());
        assert!(generate(GraphFamily::CompleteMinusEdge(1)).is_err());
        assert!(generate(GraphFamily::Path(1)).is_ok());
        assert!(generate(GraphFamily::Star(1)).is_ok());
    }

    #[test]
    fn wheel_4_is_k4() {
        let w4 = generate(GraphFamily::Wheel(4)).unwrap();
        let k4 = generate(GraphFamily::Complete(4)).unwrap();
        assert_eq!(w4, k4);
        assert_eq!(w4.size(), 6);
    }

    #[test]
    fn cycle_3_is_k3() {
        let c3 = generate(GraphFamily::Cycle(3)).unwrap();
        let k3 = generate(GraphFamily::Complete(3)).unwrap();
        assert_eq!(c3, k3);
    }

    #[test]
    fn star_5_degrees() {
        let s5 = generate(GraphFamily::Star(5)).unwrap();
        let mut degs: Vec<usize> = (0..5).map(|v| s5.degree(v)).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 1, 1, 4]);
    }

    #[test]
    fn wheel_degree_sequence() {
        for n in 5..=12 {
            let w = generate(GraphFamily::Wheel(n)).unwrap();
            assert_eq!(w.degree(0), n - 1);
            for v in 1..n {
                assert_eq!(w.degree(v), 3, "rim vertex {v} of W_{n}");
            }
            w.check_invariants();
        }
    }

    #[test]
    fn join_e1_cycle_matches_wheel_labeling() {
        for n in 4..=10 {
            let e1 = generate(GraphFamily::Empty(1)).unwrap();
            let c = generate(GraphFamily::Cycle(n - 1)).unwrap();
            let joined = join(&e1, &c).unwrap();
            let wheel = generate(GraphFamily::Wheel(n)).unwrap();
            assert_eq!(joined, wheel, "E_1 + C_{} vs W_{}", n - 1, n);
        }
    }

    #[test]
    fn join_e1_e1_is_k2() {
        let e1 = generate(GraphFamily::Empty(1)).unwrap();
        let k2 = generate(GraphFamily::Complete(2)).unwrap();
        assert_eq!(join(&e1, &e1).unwrap(), k2);
    }

    #[test]
    fn disjoint_union_examples() {
        let e1 = generate(GraphFamily::Empty(1)).unwrap();
        let e2 = generate(GraphFamily::Empty(2)).unwrap();
        assert_eq!(disjoint_union(&e1, &e1).unwrap(), e2);

        let c3 = generate(GraphFamily::Cycle(3)).unwrap();
        let two_triangles = disjoint_union(&c3, &c3).unwrap();
        assert_eq!(two_triangles.order(), 6);
        assert_eq!(two_triangles.components().len(), 2);
        assert!((0..6).all(|v| two_triangles.degree(v) == 2));

        let c4 = generate(GraphFamily::Cycle(4)).unwrap();
        let u = disjoint_union(&c3, &c4).unwrap();
        assert_eq!((u.order(), u.size()), (7, 7));
    }

    #[test]
    fn union_capacity() {
        let k32 = generate(GraphFamily::Complete(32)).unwrap();
        assert_eq!(
            disjoint_union(&k32, &k32).unwrap_err(),
            GraphError::CapacityExceeded(64)
        );
        assert!(join(&k32, &k32).is_err());
    }

    #[test]
    fn edge_list_examples() {
        let k2 = parse_edge_list("2 1\n0 1").unwrap();
        assert_eq!(k2, generate(GraphFamily::Complete(2)).unwrap());

        let c3 = parse_edge_list("3 3\n0 1\n1 2\n0 2").unwrap();
        assert_eq!(c3, generate(GraphFamily::Cycle(3)).unwrap());

        assert_eq!(
            parse_edge_list("3 1\n0 0").unwrap_err(),
            GraphError::SelfLoop(0)
        );
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(
            parse_edge_list("2 1\n0 1\n1 0"),
            Err(GraphError::MalformedEdgeList(_))
        ));
        assert_eq!(
            parse_edge_list("2 2\n0 1\n1 0").unwrap_err(),
            GraphError::DuplicateEdge(1, 0)
        );
        assert!(matches!(
            parse_edge_list("2 2\n0 1"),
            Err(GraphError::MalformedEdgeList(_))
        ));
        assert_eq!(
            parse_edge_list("2 1\n0 2").unwrap_err(),
            GraphError::VertexOutOfRange {
                vertex: 2,
                order: 2
            }
        );
        assert!(matches!(
            parse_edge_list("2 x\n0 1"),
            Err(GraphError::MalformedEdgeList(_))
        ));
        assert!(parse_edge_list("").is_err());
    }

    #[test]
    fn components_and_edges() {
        let g = Graph::from_edges(5, &[(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.components().len(), 3);
        assert_eq!(g.edges(), vec![(0, 1), (3, 4)]);
        assert!(!g.is_connected());
        g.check_invariants();
    }
}
