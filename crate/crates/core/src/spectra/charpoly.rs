//! Exact integer evaluation of the Laplacian characteristic polynomial
//! phi(G; x) = det(xI - L) at integer points, via Bareiss fraction-free
//! elimination over arbitrary-precision integers. Every intermediate division
//! is exact, so the result is the true integer value regardless of order.

use crate::graph::Graph;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// det(xI - L(G)) as an exact integer.
pub fn char_poly_eval(g: &Graph, x: i64) -> BigInt {
    let n = g.n();
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::from(x - g.degree(i) as i64)
                    } else if g.has_edge(i, j) {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();

    let mut sign = 1i64;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev; // exact by Bareiss
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}
