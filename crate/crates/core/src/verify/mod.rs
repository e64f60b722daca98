//! Verdicts for the eigenvalue-sum conjectures and the supporting
//! identities.
//!
//! The headline check: s_k(G) <= e(G) + C(k+1, 2) for every k, with equality
//! exactly for threshold graphs of clique number k + 1. Its Nordhaus-Gaddum
//! variant bounds s_k(G) + s_k(complement G). Classification is
//! combinatorial-first: `Equality` is declared from (threshold, clique
//! number), never from floating-point closeness alone, and the `consistent`
//! flag records whether the numeric slack agrees with that call.

mod bounds;
mod edge_cut;
mod polynomials;

pub use bounds::{
    bound_nikiforov_ng, bound_report, bound_wang, bound_zhou, nikiforov_from_spectra, BoundReport,
};
pub use edge_cut::{edge_cut_analysis, EdgeCutReport};
pub use polynomials::{
    density_quartic, density_quartic_half_closed, ng_density_guarantee, ng_near_regular_guarantee,
    ng_strict_k_ranges, spider2_charpoly_factor, spider2_charpoly_factor_int,
    spider3_charpoly_factor, spider3_charpoly_factor_int, spider3_factor_tail_closed,
    spread_quartic, spread_quartic_half_closed,
};

use crate::graph::{Graph, GraphError};
use crate::spectra::{self, SpectraError, Spectrum};
use crate::threshold::{conjugate_degrees, recognize_threshold, ConjugateDegrees};
use thiserror::Error;

/// Default tolerance for *semantic* equality of eigenvalue sums. Solver
/// noise is orders of magnitude below this for all graph orders we handle.
pub const DEFAULT_TOL_EQ: f64 = 1e-6;

#[derive(Debug, Error, PartialEq)]
pub enum VerifyError {
    #[error("k = {k} out of range 1..={max}")]
    KOutOfRange { k: usize, max: usize },
    #[error("graph must be connected")]
    Disconnected,
    #[error("{0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// How an instance relates to a conjectured bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Class {
    /// Bound holds with room to spare.
    Strict,
    /// Combinatorial equality case (threshold graph of the right clique number).
    Equality,
    /// Numeric value exceeds the bound beyond tolerance — a counterexample
    /// candidate. Reported, never asserted away.
    Violation,
}

impl std::fmt::Display for Class {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Class::Strict => "Strict",
            Class::Equality => "Equality",
            Class::Violation => "Violation",
        })
    }
}

/// Verdict for s_k(G) <= e + C(k+1, 2).
#[derive(Debug, Clone, PartialEq)]
pub struct BrouwerVerdict {
    pub k: usize,
    pub s_k: f64,
    /// e + C(k+1, 2), exact.
    pub bound: u64,
    /// bound - s_k; negative beyond tolerance means violation.
    pub slack: f64,
    pub class: Class,
    /// threshold and clique number k + 1.
    pub combinatorial_equality: bool,
    /// Numeric near-equality agrees with the combinatorial call.
    pub consistent: bool,
}

/// Verdict for the Nordhaus-Gaddum form
/// s_k(G) + s_k(comp G) <= C(n, 2) + 2 C(k+1, 2).
#[derive(Debug, Clone, PartialEq)]
pub struct NgVerdict {
    pub k: usize,
    pub lhs: f64,
    /// C(n, 2) + 2 C(k+1, 2), exact.
    pub rhs: u64,
    pub slack: f64,
    pub class: Class,
    /// threshold, n = 2k + 1, and clique number k + 1.
    pub combinatorial_equality: bool,
    pub consistent: bool,
}

fn binom2(x: usize) -> u64 {
    (x as u64) * (x as u64 - 1) / 2
}

fn classify(slack: f64, combinatorial: bool, tol_eq: f64) -> (Class, bool) {
    let numeric_eq = slack.abs() <= tol_eq;
    let class = if combinatorial {
        Class::Equality
    } else if slack < -tol_eq {
        Class::Violation
    } else {
        Class::Strict
    };
    (class, combinatorial == numeric_eq)
}

/// Everything the per-graph checks need, computed once: Laplacian spectrum,
/// its complement-rule twin, threshold recognition, clique number, conjugate
/// degrees.
#[derive(Debug, Clone)]
pub struct GraphProfile {
    graph: Graph,
    edges: usize,
    spectrum: Spectrum,
    comp_spectrum: Spectrum,
    threshold: bool,
    omega: usize,
    conjugate: ConjugateDegrees,
}

impl GraphProfile {
    pub fn new(graph: &Graph) -> Result<Self, VerifyError> {
        let spectrum = spectra::laplacian_spectrum(graph)?;
        let comp_spectrum = spectra::complement_spectrum(&spectrum, graph.n())?;
        let threshold = recognize_threshold(graph).is_some();
        let omega = graph.clique_number();
        let conjugate = conjugate_degrees(&graph.degree_sequence());
        Ok(GraphProfile {
            graph: graph.clone(),
            edges: graph.edge_count(),
            spectrum,
            comp_spectrum,
            threshold,
            omega,
            conjugate,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn spectrum(&self) -> &Spectrum {
        &self.spectrum
    }

    pub fn comp_spectrum(&self) -> &Spectrum {
        &self.comp_spectrum
    }

    pub fn is_threshold(&self) -> bool {
        self.threshold
    }

    pub fn omega(&self) -> usize {
        self.omega
    }

    pub fn conjugate(&self) -> &ConjugateDegrees {
        &self.conjugate
    }

    fn check_k(&self, k: usize) -> Result<(), VerifyError> {
        let max = self.n().saturating_sub(1);
        if k == 0 || k > max {
            return Err(VerifyError::KOutOfRange { k, max });
        }
        Ok(())
    }

    /// Brouwer verdict at one k, 1 <= k <= n-1.
    pub fn brouwer(&self, k: usize, tol_eq: f64) -> Result<BrouwerVerdict, VerifyError> {
        self.check_k(k)?;
        let s_k = self.spectrum.s_k(k)?;
        let bound = self.edges as u64 + binom2(k + 1);
        let slack = bound as f64 - s_k;
        let combinatorial = self.threshold && self.omega == k + 1;
        let (class, consistent) = classify(slack, combinatorial, tol_eq);
        Ok(BrouwerVerdict { k, s_k, bound, slack, class, combinatorial_equality: combinatorial, consistent })
    }

    /// Nordhaus-Gaddum verdict at one k, 1 <= k <= n-1.
    pub fn ng(&self, k: usize, tol_eq: f64) -> Result<NgVerdict, VerifyError> {
        self.check_k(k)?;
        let lhs = self.spectrum.s_k(k)? + self.comp_spectrum.s_k(k)?;
        let rhs = binom2(self.n()) + 2 * binom2(k + 1);
        let slack = rhs as f64 - lhs;
        let combinatorial = self.threshold && self.n() == 2 * k + 1 && self.omega == k + 1;
        let (class, consistent) = classify(slack, combinatorial, tol_eq);
        Ok(NgVerdict { k, lhs, rhs, slack, class, combinatorial_equality: combinatorial, consistent })
    }
}

/// Brouwer verdict with the default equality tolerance.
pub fn brouwer_check(g: &Graph, k: usize) -> Result<BrouwerVerdict, VerifyError> {
    GraphProfile::new(g)?.brouwer(k, DEFAULT_TOL_EQ)
}

/// Verdicts for every k in 1..=n-1 (empty for K1).
pub fn full_brouwer(g: &Graph) -> Result<Vec<BrouwerVerdict>, VerifyError> {
    let profile = GraphProfile::new(g)?;
    (1..g.n()).map(|k| profile.brouwer(k, DEFAULT_TOL_EQ)).collect()
}

/// Nordhaus-Gaddum verdict with the default equality tolerance.
pub fn ng_check(g: &Graph, k: usize) -> Result<NgVerdict, VerifyError> {
    GraphProfile::new(g)?.ng(k, DEFAULT_TOL_EQ)
}

/// Grone-Merris gap f_k(G) = e + C(k+1, 2) - sum_{i<=k} d*_i. Non-negative
/// for split graphs, zero at k = trace; may be negative otherwise.
pub fn grone_merris_gap(g: &Graph, k: usize) -> Result<i64, VerifyError> {
    let n = g.n();
    if k == 0 || k > n {
        return Err(VerifyError::KOutOfRange { k, max: n });
    }
    let conj = conjugate_degrees(&g.degree_sequence());
    Ok(g.edge_count() as i64 + binom2(k + 1) as i64 - conj.prefix_sum(k) as i64)
}

/// The complement-sum duality
/// s_k(G) + s_k(comp G) = s_{n-k-1}(G) + s_{n-k-1}(comp G) - (n - (2k+1)) n,
/// valid for 1 <= k <= (n-1)/2. Returns (lhs, rhs); they agree to rounding.
pub fn ng_duality_identity(g: &Graph, k: usize) -> Result<(f64, f64), VerifyError> {
    let n = g.n();
    if k == 0 || 2 * k + 1 > n {
        return Err(VerifyError::KOutOfRange { k, max: n.saturating_sub(1) / 2 });
    }
    let spec = spectra::laplacian_spectrum(g)?;
    let comp = spectra::complement_spectrum(&spec, n)?;
    let lhs = spec.s_k(k)? + comp.s_k(k)?;
    let j = n - k - 1;
    let rhs = spec.s_k(j)? + comp.s_k(j)? - ((n - (2 * k + 1)) * n) as f64;
    Ok((lhs, rhs))
}

/// Cone recursion s_k(G v K1) = p + k + s_{k-1}(G) for 1 <= k <= p = n(G),
/// with s_0 = 0. Returns (lhs, rhs), lhs from a direct eigensolve of the cone.
pub fn cone_sum_identity(g: &Graph, k: usize) -> Result<(f64, f64), VerifyError> {
    let p = g.n();
    if k == 0 || k > p {
        return Err(VerifyError::KOutOfRange { k, max: p });
    }
    let cone = g.join(&Graph::empty(1)?)?;
    let lhs = spectra::laplacian_spectrum(&cone)?.s_k(k)?;
    let prev = if k == 1 { 0.0 } else { spectra::laplacian_spectrum(g)?.s_k(k - 1)? };
    Ok((lhs, (p + k) as f64 + prev))
}

/// Adding an isolated vertex shifts nothing below the top index:
/// s_k(G u K1) = s_k(G) for k <= p-1, and s_p(G u K1) = s_{p-1}(G).
pub fn isolated_vertex_shift_holds(g: &Graph) -> Result<bool, VerifyError> {
    let p = g.n();
    let with_isolated = g.disjoint_union(&Graph::empty(1)?)?;
    let a = spectra::laplacian_spectrum(g)?;
    let b = spectra::laplacian_spectrum(&with_isolated)?;
    let tol = (a.tol() + b.tol()) * p as f64;
    for k in 1..p {
        if (b.s_k(k)? - a.s_k(k)?).abs() > tol {
            return Ok(false);
        }
    }
    let prev = if p == 1 { 0.0 } else { a.s_k(p - 1)? };
    Ok((b.s_k(p)? - prev).abs() <= tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::threshold::CreationSequence;

    fn k(n: usize) -> Graph {
        Graph::complete(n).unwrap()
    }

    fn star(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn c5() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    #[test]
    fn brouwer_on_complete_graph() {
        // K4: strict at k=2 (8 < 9), equality at k=3 (12 = 12, omega = 4).
        let v2 = brouwer_check(&k(4), 2).unwrap();
        assert_eq!((v2.class, v2.bound), (Class::Strict, 9));
        assert!((v2.s_k - 8.0).abs() < 1e-9 && v2.consistent);
        let v3 = brouwer_check(&k(4), 3).unwrap();
        assert_eq!((v3.class, v3.bound), (Class::Equality, 12));
        assert!(v3.combinatorial_equality && v3.consistent);
    }

    #[test]
    fn brouwer_on_star_and_cycle() {
        let v = brouwer_check(&star(5), 1).unwrap();
        assert_eq!(v.class, Class::Equality);
        assert!((v.s_k - 5.0).abs() < 1e-9);
        let v = brouwer_check(&c5(), 2).unwrap();
        assert_eq!(v.class, Class::Strict);
        assert!((v.s_k - 7.2360679).abs() < 1e-6);
        assert!(v.consistent);
    }

    #[test]
    fn brouwer_on_non_threshold_strict_cases() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let v = brouwer_check(&p4, 1).unwrap();
        assert_eq!(v.class, Class::Strict);
        assert!((v.s_k - (2.0 + 2f64.sqrt())).abs() < 1e-9);
        let m2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let v = brouwer_check(&m2, 1).unwrap();
        assert_eq!(v.class, Class::Strict);
        assert!((v.s_k - 2.0).abs() < 1e-9 && v.consistent);
    }

    #[test]
    fn full_brouwer_covers_all_k() {
        assert_eq!(full_brouwer(&k(4)).unwrap().len(), 3);
        assert!(full_brouwer(&Graph::empty(1).unwrap()).unwrap().is_empty());
        assert_eq!(
            brouwer_check(&k(4), 4).unwrap_err(),
            VerifyError::KOutOfRange { k: 4, max: 3 }
        );
    }

    #[test]
    fn threshold_graph_has_equality_exactly_at_clique_minus_one() {
        let g = CreationSequence::parse("0010110").unwrap().realize();
        let omega = g.clique_number();
        for v in full_brouwer(&g).unwrap() {
            let expect = if v.k + 1 == omega { Class::Equality } else { Class::Strict };
            assert_eq!(v.class, expect, "k = {}", v.k);
            assert!(v.consistent);
        }
    }

    #[test]
    fn ng_equality_on_star_three() {
        let v = ng_check(&star(3), 1).unwrap();
        assert_eq!((v.class, v.rhs), (Class::Equality, 5));
        assert!((v.lhs - 5.0).abs() < 1e-9 && v.consistent);
    }

    #[test]
    fn ng_strict_on_c5_and_k4() {
        let v = ng_check(&c5(), 2).unwrap();
        assert_eq!((v.class, v.rhs), (Class::Strict, 16));
        assert!((v.lhs - 14.472135).abs() < 1e-5);
        let v = ng_check(&k(4), 2).unwrap();
        assert_eq!((v.class, v.rhs), (Class::Strict, 12));
        assert!((v.lhs - 8.0).abs() < 1e-9);
    }

    #[test]
    fn grone_merris_gap_examples() {
        // S5, k=1: 4 + 1 - 5 = 0 (split, k = trace).
        assert_eq!(grone_merris_gap(&star(5), 1).unwrap(), 0);
        // C4, k=2: 4 + 3 - 8 = -1 (not split).
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(grone_merris_gap(&c4, 2).unwrap(), -1);
        // Split graphs: non-negative for every k.
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        for kk in 1..=4 {
            assert!(grone_merris_gap(&p4, kk).unwrap() >= 0);
        }
    }

    #[test]
    fn ng_duality_on_c5_and_k4() {
        let (lhs, rhs) = ng_duality_identity(&c5(), 1).unwrap();
        assert!((lhs - rhs).abs() < 1e-9);
        assert!((lhs - 7.2360679).abs() < 1e-6);
        let (lhs, rhs) = ng_duality_identity(&k(4), 1).unwrap();
        assert!((lhs - rhs).abs() < 1e-9);
        assert!((lhs - 4.0).abs() < 1e-9);
        assert!(ng_duality_identity(&k(4), 2).is_err()); // 2k+1 > n
    }

    #[test]
    fn cone_recursion_on_k3() {
        // s_2(K4) = 8 = 3 + 2 + s_1(K3).
        let (lhs, rhs) = cone_sum_identity(&k(3), 2).unwrap();
        assert!((lhs - 8.0).abs() < 1e-9);
        assert!((lhs - rhs).abs() < 1e-9);
        // k = 1 uses s_0 = 0.
        let (lhs, rhs) = cone_sum_identity(&c5(), 1).unwrap();
        assert!((lhs - rhs).abs() < 1e-9);
    }

    #[test]
    fn isolated_vertex_shift_on_assorted_graphs() {
        for g in [k(4), c5(), star(6), Graph::empty(1).unwrap()] {
            assert!(isolated_vertex_shift_holds(&g).unwrap());
        }
    }

    #[test]
    fn complete_split_family_equality_pattern() {
        // K_k v (n-k) K1 hits equality exactly at k.
        let g = families::complete_split(9, 4).unwrap();
        for v in full_brouwer(&g).unwrap() {
            let expect = if v.k == 4 { Class::Equality } else { Class::Strict };
            assert_eq!(v.class, expect, "k = {}", v.k);
            assert!(v.consistent);
        }
    }
}
