//! Generators for the structured graph families used as equality witnesses
//! and counterexample probes by the verification layer.

use crate::graph::{Graph, GraphError, MAX_VERTICES};
use crate::threshold::CreationSequence;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn param_err<T>(msg: impl Into<String>) -> Result<T, FamilyError> {
    Err(FamilyError::InvalidParameter(msg.into()))
}

/// Complete split graph: a k-clique joined to n-k isolated vertices.
/// Laplacian spectrum (n^k, k^{n-k-1}, 0); achieves s_k = e + C(k+1, 2).
pub fn complete_split(n: usize, clique: usize) -> Result<Graph, FamilyError> {
    if clique == 0 || clique >= n {
        return param_err(format!("complete split needs 1 <= clique < n, got clique={clique}, n={n}"));
    }
    let kk = Graph::complete(clique)?;
    let rest = Graph::empty(n - clique)?;
    Ok(kk.join(&rest)?)
}

/// Nested split graph: a clique of size `clique`, `saturated` vertices
/// adjacent to the whole clique, and one extra vertex per entry of `tails`
/// adjacent to exactly that many clique vertices (a canonical prefix).
/// `tails` must be non-increasing with entries < clique. Always a threshold
/// graph with clique number `clique + 1`.
pub fn nested_split(clique: usize, saturated: usize, tails: &[usize]) -> Result<Graph, FamilyError> {
    if clique == 0 {
        return param_err("nested split needs a non-empty clique");
    }
    if saturated == 0 {
        return param_err("nested split needs at least one saturated vertex");
    }
    if tails.windows(2).any(|w| w[0] < w[1]) {
        return param_err("tail attachment counts must be non-increasing");
    }
    if let Some(&a0) = tails.first() {
        if a0 >= clique {
            return param_err(format!("tail attachment {a0} must be below clique size {clique}"));
        }
    }
    let n = clique + saturated + tails.len();
    if n > MAX_VERTICES {
        return param_err(format!("order {n} exceeds {MAX_VERTICES}"));
    }
    let mut edges = Vec::new();
    for u in 0..clique {
        for v in u + 1..clique {
            edges.push((u, v));
        }
    }
    for s in 0..saturated {
        let v = clique + s;
        edges.extend((0..clique).map(|u| (u, v)));
    }
    for (i, &a) in tails.iter().enumerate() {
        let v = clique + saturated + i;
        edges.extend((0..a).map(|u| (u, v)));
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// Book with pendants: `pages` triangles sharing a common edge, plus
/// `pendants` degree-1 vertices on one of the two shared-edge endpoints.
/// Creation sequence 0^pages 1 0^pendants 1. Clique number 3;
/// e = pages + n - 1. The unicyclic (pages=1) and bicyclic (pages=2) members
/// are the unique equality cases at k = 2 in their classes.
pub fn book_with_pendants(pendants: usize, pages: usize) -> Result<Graph, FamilyError> {
    if pages == 0 {
        return param_err("book needs at least one page (clique number must reach 3)");
    }
    let n = pendants + pages + 2;
    if n > MAX_VERTICES {
        return param_err(format!("order {n} exceeds {MAX_VERTICES}"));
    }
    let mut bits = vec![false; pages];
    bits.push(true);
    bits.extend(std::iter::repeat_n(false, pendants));
    bits.push(true);
    let seq = CreationSequence::new(bits).expect("sequence starts with 0 since pages >= 1");
    Ok(seq.realize())
}

/// Spider: a star on `n` vertices with `long_legs` of its legs subdivided
/// once (legs of length 2), the rest kept as pendants.
pub fn spider(n: usize, long_legs: usize) -> Result<Graph, FamilyError> {
    if n == 0 || n > MAX_VERTICES {
        return param_err(format!("order {n} out of range"));
    }
    if 2 * long_legs + 1 > n {
        return param_err(format!("{long_legs} subdivided legs need {} vertices, have {n}", 2 * long_legs + 1));
    }
    let mut edges = Vec::new();
    // Center 0; leg j uses vertices 1+2j (inner) and 2+2j (tip).
    for j in 0..long_legs {
        let inner = 1 + 2 * j;
        edges.push((0, inner));
        edges.push((inner, inner + 1));
    }
    for v in 2 * long_legs + 1..n {
        edges.push((0, v));
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// Infinity graph: cycles C_p and C_q linked through a path on `l` vertices
/// whose endpoints are identified with one vertex of each cycle; `l = 1`
/// means the two cycles share a single vertex. n = p + q + l - 2, e = n + 1.
pub fn infinity_graph(p: usize, l: usize, q: usize) -> Result<Graph, FamilyError> {
    if p < 3 || q < 3 {
        return param_err(format!("cycle lengths must be at least 3, got p={p}, q={q}"));
    }
    if l < 1 {
        return param_err("path must have at least one vertex");
    }
    let n = p + q + l - 2;
    if n > MAX_VERTICES {
        return param_err(format!("order {n} exceeds {MAX_VERTICES}"));
    }
    let mut edges = Vec::new();
    // First cycle on 0..p, attachment at 0.
    for i in 0..p {
        edges.push((i, (i + 1) % p));
    }
    // Path from 0, on l-2 fresh internal vertices p..p+l-2, ending at `tail`.
    let mut prev = 0;
    for step in 0..l.saturating_sub(1) {
        let next = p + step;
        edges.push((prev, next));
        prev = next;
    }
    let tail = prev; // equals 0 when l == 1
    // Second cycle: tail plus q-1 fresh vertices starting at p + l - 1.
    let base = p + l - 1;
    let second: Vec<usize> = std::iter::once(tail).chain(base..base + q - 1).collect();
    for i in 0..q {
        edges.push((second[i], second[(i + 1) % q]));
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// Theta graph: two hub vertices linked by three internally disjoint paths
/// of p, l, q edges. Requires p >= 1, l >= 1, q >= 1 with at most one path
/// of length 1 (two would be a multi-edge). n = p + q + l - 1, e = n + 1.
pub fn theta_graph(p: usize, l: usize, q: usize) -> Result<Graph, FamilyError> {
    if p == 0 || l == 0 || q == 0 {
        return param_err("every path needs at least one edge");
    }
    let ones = [p, l, q].iter().filter(|&&x| x == 1).count();
    if ones > 1 {
        return param_err("at most one path may be a single edge (no multi-edges)");
    }
    let n = p + q + l - 1;
    if n > MAX_VERTICES {
        return param_err(format!("order {n} exceeds {MAX_VERTICES}"));
    }
    let hub_a = 0;
    let hub_b = 1;
    let mut edges = Vec::new();
    let mut fresh = 2;
    for len in [p, l, q] {
        // Path of `len` edges from hub_a to hub_b through len-1 fresh vertices.
        let mut prev = hub_a;
        for _ in 0..len - 1 {
            edges.push((prev, fresh));
            prev = fresh;
            fresh += 1;
        }
        edges.push((prev, hub_b));
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// Multi-apex cone: the base joined to `apexes` isolated vertices.
pub fn cone_over(base: &Graph, apexes: usize) -> Result<Graph, FamilyError> {
    if apexes == 0 {
        return param_err("cone needs at least one apex vertex");
    }
    Ok(base.join(&Graph::empty(apexes)?)?)
}
