//! Classical upper bounds on s_k and the adjacency-side Nordhaus-Gaddum
//! inequality, each with its stated domain of validity.

use super::VerifyError;
use crate::graph::Graph;
use crate::spectra::{self, Spectrum};
use crate::threshold::conjugate_degrees;

/// Wang et al.: for connected G and 1 <= k <= n,
/// s_k <= 2e - n + 2k - (2k - 2)/n. Tight only for k = 1 on stars.
pub fn bound_wang(g: &Graph, k: usize) -> Result<f64, VerifyError> {
    let n = g.n();
    if !g.is_connected() {
        return Err(VerifyError::Disconnected);
    }
    if k == 0 || k > n {
        return Err(VerifyError::KOutOfRange { k, max: n });
    }
    let (e, n, k) = (g.edge_count() as f64, n as f64, k as f64);
    Ok(2.0 * e - n + 2.0 * k - (2.0 * k - 2.0) / n)
}

/// Zhou: for 1 <= k <= n - 2,
/// s_k <= (2ke + sqrt(k (n-k-1) (n(n-1) - 2e) e)) / (n - 1).
/// Tight for stars at k = 1 and complete graphs at every valid k.
pub fn bound_zhou(g: &Graph, k: usize) -> Result<f64, VerifyError> {
    let n = g.n();
    if k == 0 || k + 2 > n {
        return Err(VerifyError::KOutOfRange { k, max: n.saturating_sub(2) });
    }
    let (e, nf, kf) = (g.edge_count() as f64, n as f64, k as f64);
    let radicand = kf * (nf - kf - 1.0) * (nf * (nf - 1.0) - 2.0 * e) * e;
    Ok((2.0 * kf * e + radicand.sqrt()) / (nf - 1.0))
}

/// Nikiforov's adjacency-side Nordhaus-Gaddum bound, for 1 <= k <= (n-1)/2:
/// sum_{i<=k} (|lambda_{n-i+1}(A(G))| + |lambda_{n-i+1}(A(comp G))|)
///   <= sqrt(2k) (n/2 + k).
/// Returns (lhs, rhs).
pub fn bound_nikiforov_ng(g: &Graph, k: usize) -> Result<(f64, f64), VerifyError> {
    let n = g.n();
    if k == 0 || 2 * k + 1 > n {
        return Err(VerifyError::KOutOfRange { k, max: n.saturating_sub(1) / 2 });
    }
    let a = spectra::adjacency_spectrum(g)?;
    let b = spectra::adjacency_spectrum(&g.complement())?;
    Ok(nikiforov_from_spectra(&a, &b, k))
}

/// Same bound evaluated from precomputed adjacency spectra of a graph and
/// its complement, so sweeps can share one solve across every k.
pub fn nikiforov_from_spectra(a: &Spectrum, b: &Spectrum, k: usize) -> (f64, f64) {
    let n = a.len();
    let lhs: f64 = (0..k)
        .map(|i| a.values()[n - 1 - i].abs() + b.values()[n - 1 - i].abs())
        .sum();
    let rhs = (2.0 * k as f64).sqrt() * (n as f64 / 2.0 + k as f64);
    (lhs, rhs)
}

/// All bounds applicable to (G, k) side by side, for reporting.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub k: usize,
    pub s_k: f64,
    /// e + C(k+1, 2).
    pub brouwer: f64,
    /// sum_{i<=k} d*_i — an upper bound by Grone-Merris-Bai majorization.
    pub grone_merris: f64,
    /// Absent when G is disconnected.
    pub wang: Option<f64>,
    /// Absent when k > n - 2.
    pub zhou: Option<f64>,
    /// (lhs, rhs) of the adjacency Nordhaus-Gaddum bound; absent when
    /// 2k + 1 > n.
    pub nikiforov: Option<(f64, f64)>,
}

pub fn bound_report(g: &Graph, k: usize) -> Result<BoundReport, VerifyError> {
    let n = g.n();
    if k == 0 || k >= n {
        return Err(VerifyError::KOutOfRange { k, max: n.saturating_sub(1) });
    }
    let s_k = spectra::laplacian_spectrum(g)?.s_k(k)?;
    let e = g.edge_count() as f64;
    let brouwer = e + (k * (k + 1) / 2) as f64;
    let grone_merris = conjugate_degrees(&g.degree_sequence()).prefix_sum(k) as f64;
    let wang = if g.is_connected() { Some(bound_wang(g, k)?) } else { None };
    let zhou = if k + 2 <= n { Some(bound_zhou(g, k)?) } else { None };
    let nikiforov = if 2 * k + 1 <= n { Some(bound_nikiforov_ng(g, k)?) } else { None };
    Ok(BoundReport { k, s_k, brouwer, grone_merris, wang, zhou, nikiforov })
}
