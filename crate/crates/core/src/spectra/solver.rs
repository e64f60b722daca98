//! Dense symmetric eigenvalue solver: Householder reduction to tridiagonal
//! form followed by implicit-shift QL iteration. Eigenvalues only — no
//! eigenvector accumulation — which is all the verification layer needs.
//!
//! Classic EISPACK/Numerical-Recipes structure, ported for values-only use.
//! Non-convergence surfaces as an error instead of a panic so batch runs can
//! report the offending matrix.

use super::SpectraError;

const MAX_SWEEPS_PER_VALUE: usize = 64;

/// Householder reduction of a symmetric matrix (row-major, `n * n`) to
/// tridiagonal form. Only the lower triangle is read. Returns (diag, offdiag)
/// with `offdiag[0] == 0`. The buffer is clobbered.
pub(super) fn tridiagonalize(a: &mut [f64], n: usize) -> (Vec<f64>, Vec<f64>) {
    debug_assert_eq!(a.len(), n * n);
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    for i in (1..n).rev() {
        let l = i - 1;
        if l == 0 {
            e[i] = a[i * n];
            continue;
        }
        let scale: f64 = a[i * n..=i * n + l].iter().map(|x| x.abs()).sum();
        if scale == 0.0 {
            e[i] = a[i * n + l];
            continue;
        }
        let mut h = 0.0;
        for k in 0..=l {
            a[i * n + k] /= scale;
            h += a[i * n + k] * a[i * n + k];
        }
        let f = a[i * n + l];
        let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
        e[i] = scale * g;
        h -= f * g;
        a[i * n + l] = f - g;
        // u = A v / h, stored in e[0..=l]; then rank-2 update A -= v w' + w v'.
        let mut f_acc = 0.0;
        for j in 0..=l {
            let mut g = 0.0;
            for k in 0..=j {
                g += a[j * n + k] * a[i * n + k];
            }
            for k in j + 1..=l {
                g += a[k * n + j] * a[i * n + k];
            }
            e[j] = g / h;
            f_acc += e[j] * a[i * n + j];
        }
        let hh = f_acc / (h + h);
        for j in 0..=l {
            let f = a[i * n + j];
            let g = e[j] - hh * f;
            e[j] = g;
            for k in 0..=j {
                a[j * n + k] -= f * e[k] + g * a[i * n + k];
            }
        }
    }
    for i in 0..n {
        d[i] = a[i * n + i];
    }
    e[0] = 0.0;
    (d, e)
}

/// Implicit-shift QL on a tridiagonal matrix. `d` is the diagonal, `e` the
/// off-diagonal with `e[0]` unused. On success `d` holds the eigenvalues.
pub(super) fn ql_implicit_shift(d: &mut [f64], e: &mut [f64]) -> Result<(), SpectraError> {
    let n = d.len();
    if n <= 1 {
        return Ok(());
    }
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;
    for l in 0..n {
        let mut iter = 0;
        loop {
            // Look for a negligible off-diagonal to split the problem.
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > MAX_SWEEPS_PER_VALUE {
                return Err(SpectraError::NonConvergence { index: l });
            }
            // Wilkinson-style shift from the 2x2 block at l.
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + if g >= 0.0 { r } else { -r });
            let (mut s, mut c) = (1.0f64, 1.0f64);
            let mut p = 0.0;
            let mut underflow_restart = false;
            for i in (l..m).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    // Off-diagonal underflow: deflate and retry the sweep.
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow_restart = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                f = (d[i] - g) * s + 2.0 * c * b;
                p = s * f;
                d[i + 1] = g + p;
                g = c * f - b;
            }
            if underflow_restart {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}
