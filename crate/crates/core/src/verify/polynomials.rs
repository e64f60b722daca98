//! Closed-form polynomials behind the strictness guarantees: the quintic and
//! septic factors of the spider characteristic polynomials, and the quartics
//! whose positivity drives the Nordhaus-Gaddum strict ranges.

use super::VerifyError;
use crate::graph::Graph;

/// Quintic factor of phi(spider with 2 long legs; x) = x (x-1)^{n-6} g(x):
/// g(x) = x^5 - (n+4)x^4 + (6n-1)x^3 - (11n-14)x^2 + (6n-5)x - n.
pub fn spider2_charpoly_factor(n: i64, x: f64) -> f64 {
    let nf = n as f64;
    ((((x - (nf + 4.0)) * x + (6.0 * nf - 1.0)) * x - (11.0 * nf - 14.0)) * x + (6.0 * nf - 5.0))
        * x
        - nf
}

/// Exact integer evaluation of the same quintic.
pub fn spider2_charpoly_factor_int(n: i64, x: i64) -> i128 {
    let n = n as i128;
    let x = x as i128;
    ((((x - (n + 4)) * x + (6 * n - 1)) * x - (11 * n - 14)) * x + (6 * n - 5)) * x - n
}

/// Septic factor of phi(spider with 3 long legs; x) = x (x-1)^{n-8} g(x):
/// g(x) = x^7 - (n+6)x^6 + (9n+3)x^5 - (30n-42)x^4 + (45n-87)x^3
///        - (30n-48)x^2 + (9n-8)x - n.
pub fn spider3_charpoly_factor(n: i64, x: f64) -> f64 {
    let nf = n as f64;
    ((((((x - (nf + 6.0)) * x + (9.0 * nf + 3.0)) * x - (30.0 * nf - 42.0)) * x
        + (45.0 * nf - 87.0))
        * x
        - (30.0 * nf - 48.0))
        * x
        + (9.0 * nf - 8.0))
        * x
        - nf
}

/// Exact integer evaluation of the septic.
pub fn spider3_charpoly_factor_int(n: i64, x: i64) -> i128 {
    let n = n as i128;
    let x = x as i128;
    ((((((x - (n + 6)) * x + (9 * n + 3)) * x - (30 * n - 42)) * x + (45 * n - 87)) * x
        - (30 * n - 48))
        * x
        + (9 * n - 8))
        * x
        - n
}

/// The septic collapses at x = n - 2:
/// g(n-2) = (n^2 - 7n + 11)^2 (n^2 - 7n + 8).
pub fn spider3_factor_tail_closed(n: i64) -> i128 {
    let n = n as i128;
    let a = n * n - 7 * n + 11;
    let b = n * n - 7 * n + 8;
    a * a * b
}

/// Quartic controlling the edge-density strictness guarantee:
/// h(x) = 4x^4 - 8(n-1)x^3 + (3n-2)^2 x^2 - (5n-4) n (n-1) x + n^2 (n-1)^2.
pub fn density_quartic(n: f64, x: f64) -> f64 {
    (((4.0 * x - 8.0 * (n - 1.0)) * x + (3.0 * n - 2.0) * (3.0 * n - 2.0)) * x
        - (5.0 * n - 4.0) * n * (n - 1.0))
        * x
        + n * n * (n - 1.0) * (n - 1.0)
}

/// Value at the midpoint x = (n-1)/2: exactly (2n+1)(n-1)^2 / 4.
pub fn density_quartic_half_closed(n: f64) -> f64 {
    (2.0 * n + 1.0) * (n - 1.0) * (n - 1.0) / 4.0
}

/// Quartic controlling the near-regular strictness guarantee (t > 2):
/// 4t^2 x^4 - 8t(nt + n - t) x^3
///   + 4[(2t^2 + 2t + 1)n^2 - (7t^2 + 4t)n + 4t^2] x^2
///   - 2nt[2(t+1)n^2 - (5t+2)n + 4t] x + n^2 (n-1)^2 t^2.
pub fn spread_quartic(n: f64, t: f64, x: f64) -> f64 {
    let c4 = 4.0 * t * t;
    let c3 = -8.0 * t * (n * t + n - t);
    let c2 = 4.0 * ((2.0 * t * t + 2.0 * t + 1.0) * n * n - (7.0 * t * t + 4.0 * t) * n + 4.0 * t * t);
    let c1 = -2.0 * n * t * (2.0 * (t + 1.0) * n * n - (5.0 * t + 2.0) * n + 4.0 * t);
    let c0 = n * n * (n - 1.0) * (n - 1.0) * t * t;
    (((c4 * x + c3) * x + c2) * x + c1) * x + c0
}

/// Value at x = (n-1)/2:
/// (n-1)/4 * [(t-2)^2 n^3 - (11t^2 + 8t + 4) n^2 + (19t^2 + 12t) n - 13t^2].
pub fn spread_quartic_half_closed(n: f64, t: f64) -> f64 {
    (n - 1.0) / 4.0
        * (((t - 2.0) * (t - 2.0) * n - (11.0 * t * t + 8.0 * t + 4.0)) * n * n
            + (19.0 * t * t + 12.0 * t) * n
            - 13.0 * t * t)
}

/// The k ranges where the Nordhaus-Gaddum check is guaranteed strict:
/// 1 <= k <= n - (phi+1)/2 and (phi-1)/2 <= k <= n-2, phi = sqrt(2n^2-2n+1).
/// Boundaries are decided with exact integer comparisons; either range may
/// be empty (encoded as start > end).
pub fn ng_strict_k_ranges(
    n: usize,
) -> (std::ops::RangeInclusive<usize>, std::ops::RangeInclusive<usize>) {
    let n_ = n as u128;
    let phi_sq = 2 * n_ * n_ - 2 * n_ + 1;
    // low: k <= n - (phi+1)/2  <=>  2n - 2k - 1 >= phi  <=>  (2n-2k-1)^2 >= phi^2.
    let mut low_max = 0usize;
    for k in 1..n {
        let rest = 2 * n_ - 2 * k as u128 - 1; // positive for k <= n - 1
        if rest * rest >= phi_sq {
            low_max = k;
        } else {
            break;
        }
    }
    // high: k >= (phi-1)/2  <=>  (2k+1)^2 >= phi^2.
    let mut high_min = n; // sentinel: empty
    for k in 1..n.max(1) {
        let side = 2 * k as u128 + 1;
        if side * side >= phi_sq {
            high_min = k;
            break;
        }
    }
    let high_end = n.saturating_sub(2);
    (1..=low_max, high_min..=high_end)
}

/// Edge-density guarantee: the Nordhaus-Gaddum check is strict for every k
/// when e <= (2-sqrt2)/4 C(n,2) or e >= (2+sqrt2)/4 C(n,2).
pub fn ng_density_guarantee(g: &Graph) -> bool {
    let pairs = (g.n() * (g.n() - 1) / 2) as f64;
    let e = g.edge_count() as f64;
    let s = 2f64.sqrt();
    e <= (2.0 - s) / 4.0 * pairs || e >= (2.0 + s) / 4.0 * pairs
}

/// Near-regular guarantee: for t > 2, strictness for every k once
/// n >= (11t^2 + 8t + 4)/(t-2)^2 and max-degree minus min-degree <= n/t.
pub fn ng_near_regular_guarantee(g: &Graph, t: f64) -> Result<bool, VerifyError> {
    if !(t > 2.0) {
        return Err(VerifyError::InvalidParameter(format!(
            "spread parameter must exceed 2, got {t}"
        )));
    }
    let n = g.n() as f64;
    let d = g.degree_sequence();
    let spread = (d.max() - d.min()) as f64;
    Ok(n >= (11.0 * t * t + 8.0 * t + 4.0) / ((t - 2.0) * (t - 2.0)) && spread <= n / t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spider3_tail_closed_form_at_8() {
        // n=8: (64-56+11)^2 (64-56+8) = 361 * 16 = 5776.
        assert_eq!(spider3_factor_tail_closed(8), 5776);
        assert_eq!(spider3_charpoly_factor_int(8, 6), 5776);
        for n in 8..=20 {
            assert_eq!(
                spider3_charpoly_factor_int(n, n - 2),
                spider3_factor_tail_closed(n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn float_and_int_factor_evaluations_agree() {
        for n in 6..=14i64 {
            for x in -3..=9i64 {
                let f = spider2_charpoly_factor(n, x as f64);
                let i = spider2_charpoly_factor_int(n, x);
                assert_eq!(f, i as f64, "quintic n={n} x={x}");
            }
        }
        for n in 8..=14i64 {
            for x in -3..=9i64 {
                let f = spider3_charpoly_factor(n, x as f64);
                let i = spider3_charpoly_factor_int(n, x);
                assert_eq!(f, i as f64, "septic n={n} x={x}");
            }
        }
    }

    #[test]
    fn density_quartic_midpoint_value() {
        // n=5, x=2: 64 - 256 + 676 - 840 + 400 = 44 = (2n+1)(n-1)^2/4.
        assert_eq!(density_quartic(5.0, 2.0), 44.0);
        assert_eq!(density_quartic_half_closed(5.0), 44.0);
        for n in 3..=200 {
            let nf = n as f64;
            let x = (nf - 1.0) / 2.0;
            assert_eq!(
                density_quartic(nf, x),
                density_quartic_half_closed(nf),
                "exact midpoint agreement at n = {n}"
            );
        }
    }

    #[test]
    fn spread_quartic_midpoint_matches_closed_form() {
        for t in [3.0, 4.0, 5.5, 10.0] {
            for n in 3..=120 {
                let nf = n as f64;
                let x = (nf - 1.0) / 2.0;
                let direct = spread_quartic(nf, t, x);
                let closed = spread_quartic_half_closed(nf, t);
                let scale = direct.abs().max(closed.abs()).max(1.0);
                assert!(
                    ((direct - closed) / scale).abs() < 1e-12,
                    "n={n} t={t}: {direct} vs {closed}"
                );
            }
        }
    }

    #[test]
    fn strict_ranges_frozen_cases() {
        // n=10: phi = sqrt(181) ~ 13.45; low = {1,2}, high = {7,8}.
        let (low, high) = ng_strict_k_ranges(10);
        assert_eq!((low.start(), low.end()), (&1, &2));
        assert_eq!((high.start(), high.end()), (&7, &8));
        // n=3: both empty by direct evaluation.
        let (low, high) = ng_strict_k_ranges(3);
        assert!(low.is_empty() && high.is_empty());
        // n=4: phi = 5 exactly; boundaries are inclusive.
        let (low, high) = ng_strict_k_ranges(4);
        assert_eq!((low.start(), low.end()), (&1, &1));
        assert_eq!((high.start(), high.end()), (&2, &2));
        // n=100: phi = sqrt(19801) ~ 140.716; high starts at 70.
        let (low, high) = ng_strict_k_ranges(100);
        assert_eq!(*high.start(), 70);
        assert_eq!(*high.end(), 98);
        assert_eq!(*low.end(), 100 - 71); // n - ceil((phi+1)/2) = 29
    }

    #[test]
    fn density_guarantee_extremes() {
        assert!(ng_density_guarantee(&Graph::empty(6).unwrap()));
        assert!(ng_density_guarantee(&Graph::complete(6).unwrap()));
        // Half-density C(7,2)/2 ~ 10.5 edges: 10 or 11 edges on 7 vertices
        // sits between the cutoffs.
        let mid = Graph::from_edges(
            7,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6), (3, 4)],
        )
        .unwrap();
        assert!(!ng_density_guarantee(&mid));
    }

    #[test]
    fn near_regular_guarantee_domains() {
        assert!(ng_near_regular_guarantee(&Graph::complete(4).unwrap(), 2.0).is_err());
        // Regular graph with t = 3 needs n >= 127.
        let k4 = Graph::complete(4).unwrap();
        assert!(!ng_near_regular_guarantee(&k4, 3.0).unwrap());
        let k60 = Graph::complete(60).unwrap();
        // (11*9 + 24 + 4)/1 = 127 > 60 for t = 3; with t = 10: (1100+80+4)/64 = 18.5.
        assert!(!ng_near_regular_guarantee(&k60, 3.0).unwrap());
        assert!(ng_near_regular_guarantee(&k60, 10.0).unwrap());
    }
}
