//! Simple undirected graphs on up to 64 vertices.
//!
//! Adjacency is stored as one `u64` bitmask per vertex, so neighborhood
//! intersections, connectivity sweeps, and clique search are word ops.
//! Vertices are `0..n`; no self-loops, no multi-edges.

use thiserror::Error;

/// Hard cap on vertex count imposed by the `u64` row representation.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count {0} out of range 1..={MAX_VERTICES}")]
    OrderOutOfRange(usize),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0} not allowed")]
    SelfLoop(usize),
    #[error("edge ({0}, {1}) not present")]
    MissingEdge(usize, usize),
    #[error("combined order {0} exceeds {MAX_VERTICES} vertices")]
    CombinedOrderTooLarge(usize),
}

/// Undirected simple graph, adjacency bitmask per vertex.
///
/// Invariants (maintained by every constructor): `1 <= n <= 64`, rows are
/// symmetric, diagonal bits clear, bits at positions >= n clear.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::OrderOutOfRange(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        let full = mask_n(n);
        for v in 0..n {
            g.adj[v] = full & !bit(v);
        }
        Ok(g)
    }

    /// Graph from an explicit edge list. Duplicate edges collapse silently.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.adj[u] |= bit(v);
            g.adj[v] |= bit(u);
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    /// Neighborhood of `v` as a bitmask.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as ordered pairs (u, v) with u < v, lexicographic.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            let mut rest = self.adj[u] >> (u + 1) << (u + 1);
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some((u, v))
            })
        })
    }

    /// Copy of the graph with one edge removed; errors if absent.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::MissingEdge(u, v));
        }
        let mut g = self.clone();
        g.adj[u] &= !bit(v);
        g.adj[v] &= !bit(u);
        Ok(g)
    }

    /// Complement on the same vertex set.
    pub fn complement(&self) -> Self {
        let full = mask_n(self.n);
        let adj = (0..self.n).map(|v| full & !self.adj[v] & !bit(v)).collect();
        Graph { n: self.n, adj }
    }

    /// Disjoint union; `other`'s vertices are shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::CombinedOrderTooLarge(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| r << self.n));
        Ok(Graph { n, adj })
    }

    /// Join: disjoint union plus every cross edge.
    pub fn join(&self, other: &Graph) -> Result<Self, GraphError> {
        let mut g = self.disjoint_union(other)?;
        let left = mask_n(self.n);
        let right = mask_n(g.n) & !left;
        for v in 0..self.n {
            g.adj[v] |= right;
        }
        for v in self.n..g.n {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    /// Degrees sorted non-increasing.
    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(d)
    }

    /// Clique number via branch-and-bound over candidate bitmasks.
    pub fn clique_number(&self) -> usize {
        let mut best = 0;
        self.expand_clique(mask_n(self.n), 0, &mut best);
        best
    }

    fn expand_clique(&self, mut cand: u64, size: usize, best: &mut usize) {
        if size > *best {
            *best = size;
        }
        while cand != 0 {
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            self.expand_clique(cand & self.adj[v], size + 1, best);
        }
    }

    /// Connectivity via bitmask BFS from vertex 0.
    pub fn is_connected(&self) -> bool {
        let mut seen = bit(0);
        let mut frontier = bit(0);
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == mask_n(self.n)
    }

    /// Cyclomatic class: Some(c) with e = n + c - 1 if connected, else None.
    /// c = 0 trees, 1 unicyclic, 2 bicyclic.
    pub fn cyclomatic_class(&self) -> Option<usize> {
        if self.is_connected() {
            Some(self.edge_count() + 1 - self.n)
        } else {
            None
        }
    }
}

#[inline]
fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Low `n` bits set (all vertices).
#[inline]
fn mask_n(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Degree sequence in non-increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence(pub(crate) Vec<usize>);

impl DegreeSequence {
    /// Values must already be sorted non-increasing.
    pub fn new(values: Vec<usize>) -> Self {
        debug_assert!(values.windows(2).all(|w| w[0] >= w[1]));
        DegreeSequence(values)
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn min(&self) -> usize {
        self.0.last().copied().unwrap_or(0)
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }
}
