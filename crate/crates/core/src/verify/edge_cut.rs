//! Edge-cut reduction report: removing a t-edge cut from a connected graph
//! splits it into two parts, and the eigenvalue-sum of the whole is pinned by
//! the parts via s_k(G) <= s_k(G1 u G2) + 2t - mu_{n-1}(G). Under any of four
//! side conditions this forces strictness of the main bound at k.

use super::{binom2, VerifyError, DEFAULT_TOL_EQ};
use crate::graph::{Graph, GraphError};
use crate::spectra::{laplacian_spectrum, Spectrum};

/// Outcome of analysing one edge cut at one index k.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeCutReport {
    /// Cut size t.
    pub t: usize,
    /// Orders of the two parts, larger first (n1 >= 3, n2 >= 2).
    pub n1: usize,
    pub n2: usize,
    /// Edge counts of the two parts.
    pub e1: usize,
    pub e2: usize,
    /// Both parts retain at least t edges.
    pub nice: bool,
    /// s_k of the whole graph.
    pub lhs: f64,
    /// s_k(G1 u G2) + 2t - mu_{n-1}(G): the sharp middle of the chain.
    pub mid: f64,
    /// s_k(G1 u G2) + 2t: the weak end of the chain.
    pub upper: f64,
    /// lhs <= mid < upper held numerically.
    pub chain_holds: bool,
    /// Which of the four strictness conditions hold:
    /// [0] top-k of the union comes from one part alone, and the cut is nice;
    /// [1] t <= k-1 and the top-k splits as k1 + k2 with both parts used;
    /// [2] t <= k-1 and the cut is nice;
    /// [3] t = k, part 1 is a star and part 2 is a star or a 2- or 3-legged
    ///     spider of admissible order.
    pub conditions: [bool; 4],
    /// Every prefix sum of each part obeyed its own budget line
    /// s_l <= e_i + C(l+1, 2) for l up to min(n_i - 1, k).
    pub hypotheses_hold: bool,
    /// s_k(G) < e(G) + C(k+1, 2) held with margin.
    pub conclusion_strict: bool,
}

impl EdgeCutReport {
    /// The lemma's premises are met: some condition holds and the parts
    /// satisfied their budget lines.
    pub fn applies(&self) -> bool {
        self.hypotheses_hold && self.conditions.iter().any(|&c| c)
    }
}

/// Analyse the cut `cut` of connected `g` at index `k` (3 <= k <= n-2).
/// Removing the cut must leave exactly two components, of orders >= 3 and
/// >= 2; the larger becomes part 1 (ties: the part holding the lowest
/// vertex).
pub fn edge_cut_analysis(
    g: &Graph,
    cut: &[(usize, usize)],
    k: usize,
) -> Result<EdgeCutReport, VerifyError> {
    let n = g.n();
    if !g.is_connected() {
        return Err(VerifyError::Disconnected);
    }
    if cut.is_empty() {
        return Err(VerifyError::InvalidParameter(
            "cut must contain at least one edge".into(),
        ));
    }
    if k < 3 || k + 2 > n {
        return Err(VerifyError::KOutOfRange {
            k,
            max: n.saturating_sub(2),
        });
    }

    let mut reduced = g.clone();
    for &(u, v) in cut {
        reduced = reduced.without_edge(u, v)?;
    }
    let comps = components(&reduced);
    if comps.len() != 2 {
        return Err(VerifyError::InvalidParameter(format!(
            "removing the cut leaves {} components, need exactly 2",
            comps.len()
        )));
    }
    let mut masks = [comps[0], comps[1]];
    if masks[1].count_ones() > masks[0].count_ones() {
        masks.swap(0, 1);
    }
    let part1 = induced(&reduced, masks[0])?;
    let part2 = induced(&reduced, masks[1])?;
    let (n1, n2) = (part1.n(), part2.n());
    if n1 < 3 || n2 < 2 {
        return Err(VerifyError::InvalidParameter(format!(
            "component orders ({n1}, {n2}) are below the required (3, 2)"
        )));
    }

    let t = cut.len();
    let (e1, e2) = (part1.edge_count(), part2.edge_count());
    let nice = e1 >= t && e2 >= t;

    let full = laplacian_spectrum(g)?;
    let union_spec = laplacian_spectrum(&reduced)?;
    let spec1 = laplacian_spectrum(&part1)?;
    let spec2 = laplacian_spectrum(&part2)?;

    let lhs = full.s_k(k)?;
    let s_union_k = union_spec.s_k(k)?;
    let upper = s_union_k + 2.0 * t as f64;
    let mid = upper - full.mu(n - 1);
    // Per-eigenvalue solver error compounds over the k summands.
    let tol_chain = (full.tol() + union_spec.tol()) * (k as f64 + 1.0);
    let chain_holds = lhs <= mid + tol_chain && mid < upper;

    // Prefix sums of a descending spectrum are exactly the s_l values.
    let psum = |sp: &Spectrum, l: usize| sp.values()[..l].iter().sum::<f64>();

    let cond_one = nice
        && ((k < n1 && (s_union_k - psum(&spec1, k)).abs() <= DEFAULT_TOL_EQ)
            || (k < n2 && (s_union_k - psum(&spec2, k)).abs() <= DEFAULT_TOL_EQ));
    let cond_two = t < k
        && (1..k).any(|k1| {
            let k2 = k - k1;
            k1 < n1
                && k2 < n2
                && (s_union_k - psum(&spec1, k1) - psum(&spec2, k2)).abs() <= DEFAULT_TOL_EQ
        });
    let cond_three = t < k && nice;
    let cond_four = t == k
        && is_star_shape(&part1)
        && (is_star_shape(&part2)
            || (n2 >= 6 && is_spider_shape(&part2, 2))
            || (n2 >= 7 && is_spider_shape(&part2, 3)));

    let hypotheses_hold = [(&part2, &spec2), (&part1, &spec1)]
        .into_iter()
        .all(|(part, spec)| {
            let cap = (part.n() - 1).min(k);
            (1..=cap).all(|l| {
                psum(spec, l) <= (part.edge_count() as u64 + binom2(l + 1)) as f64 + DEFAULT_TOL_EQ
            })
        });

    let budget = (g.edge_count() as u64 + binom2(k + 1)) as f64;
    let conclusion_strict = lhs < budget - DEFAULT_TOL_EQ;

    Ok(EdgeCutReport {
        t,
        n1,
        n2,
        e1,
        e2,
        nice,
        lhs,
        mid,
        upper,
        chain_holds,
        conditions: [cond_one, cond_two, cond_three, cond_four],
        hypotheses_hold,
        conclusion_strict,
    })
}

/// Connected components as vertex bitmasks, ordered by lowest vertex.
fn components(g: &Graph) -> Vec<u64> {
    let mut seen = 0u64;
    let mut comps = Vec::new();
    for v in 0..g.n() {
        if seen >> v & 1 == 1 {
            continue;
        }
        let mut comp = 1u64 << v;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let u = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= g.neighbors(u);
            }
            frontier = next & !comp;
            comp |= next;
        }
        seen |= comp;
        comps.push(comp);
    }
    comps
}

/// Subgraph induced on the vertices of `mask`, relabelled in ascending order.
fn induced(g: &Graph, mask: u64) -> Result<Graph, GraphError> {
    let verts: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
    let mut edges = Vec::new();
    for (i, &u) in verts.iter().enumerate() {
        for (j, &v) in verts.iter().enumerate().skip(i + 1) {
            if g.has_edge(u, v) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(verts.len(), &edges)
}

/// One centre adjacent to every other vertex; all else pendant.
fn is_star_shape(g: &Graph) -> bool {
    let n = g.n();
    n >= 2 && g.edge_count() == n - 1 && g.is_connected() && g.degree_sequence().max() == n - 1
}

/// Tree with `legs` paths of length 2 and pendants otherwise, all at one
/// centre. Requires centre degree > 2 (n >= 2*legs + 2) so the centre is
/// unambiguous.
fn is_spider_shape(g: &Graph, legs: usize) -> bool {
    let n = g.n();
    if n < 2 * legs + 2 || g.edge_count() != n - 1 || !g.is_connected() {
        return false;
    }
    let center_deg = n - 1 - legs;
    let mut center = None;
    let mut mids = Vec::new();
    for v in 0..n {
        let d = g.degree(v);
        if d == center_deg && center.is_none() {
            center = Some(v);
        } else if d == 2 {
            mids.push(v);
        } else if d != 1 {
            return false;
        }
    }
    let Some(c) = center else { return false };
    mids.len() == legs
        && mids.iter().all(|&m| {
            let other = g.neighbors(m) & !(1u64 << c);
            g.has_edge(c, m)
                && other.count_ones() == 1
                && g.degree(other.trailing_zeros() as usize) == 1
        })
}
