//! Symmetric matrices, Laplacian/adjacency spectra, and eigenvalue-sum
//! helpers.
//!
//! A `Spectrum` is a non-increasing list of eigenvalues plus the absolute
//! tolerance its entries are good to; downstream classification always
//! threads that tolerance instead of inventing ad-hoc epsilons.

mod charpoly;
mod solver;

pub use charpoly::char_poly_eval;

use crate::graph::{Graph, GraphError};
use thiserror::Error;

/// Relative factor for solver output tolerance: tol = 1e-9 * max(1, ||M||_inf).
const SOLVER_TOL_FACTOR: f64 = 1e-9;

#[derive(Debug, Error, PartialEq)]
pub enum SpectraError {
    #[error("QL iteration failed to converge at eigenvalue index {index}")]
    NonConvergence { index: usize },
    #[error("k = {k} out of range 1..={max}")]
    KOutOfRange { k: usize, max: usize },
    #[error("spectrum length {got} does not match order {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("matrix orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Dense symmetric matrix, row-major. Symmetry is maintained by construction:
/// all mutation goes through `set_sym`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "matrix order must be at least 1");
        SymMatrix { n, data: vec![0.0; n * n] }
    }

    /// Laplacian L = D - A of a graph.
    pub fn laplacian(g: &Graph) -> Self {
        let n = g.n();
        let mut m = SymMatrix::zeros(n);
        for v in 0..n {
            m.data[v * n + v] = g.degree(v) as f64;
        }
        for (u, v) in g.edges() {
            m.data[u * n + v] = -1.0;
            m.data[v * n + u] = -1.0;
        }
        m
    }

    /// Adjacency matrix of a graph.
    pub fn adjacency(g: &Graph) -> Self {
        let n = g.n();
        let mut m = SymMatrix::zeros(n);
        for (u, v) in g.edges() {
            m.data[u * n + v] = 1.0;
            m.data[v * n + u] = 1.0;
        }
        m
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Set entries (i, j) and (j, i).
    pub fn set_sym(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.n + j] = value;
        self.data[j * self.n + i] = value;
    }

    /// Entrywise sum; orders must match.
    pub fn add(&self, other: &SymMatrix) -> Result<SymMatrix, SpectraError> {
        if self.n != other.n {
            return Err(SpectraError::OrderMismatch(self.n, other.n));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(SymMatrix { n: self.n, data })
    }

    /// Max absolute row sum.
    pub fn inf_norm(&self) -> f64 {
        (0..self.n)
            .map(|i| self.data[i * self.n..(i + 1) * self.n].iter().map(|x| x.abs()).sum())
            .fold(0.0, f64::max)
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.data[i * self.n + i]).sum()
    }
}

/// Eigenvalues sorted non-increasing, with the absolute tolerance they carry.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    tol: f64,
}

impl Spectrum {
    /// Wrap precomputed eigenvalues; sorts non-increasing.
    pub fn new(mut values: Vec<f64>, tol: f64) -> Self {
        assert!(!values.is_empty(), "spectrum must be non-empty");
        values.sort_by(|a, b| b.partial_cmp(a).expect("eigenvalues are finite"));
        Spectrum { values, tol }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// i-th largest eigenvalue, 1-indexed as in the literature.
    pub fn mu(&self, i: usize) -> f64 {
        self.values[i - 1]
    }

    /// s_k: sum of the k largest eigenvalues, 1 <= k <= n.
    pub fn s_k(&self, k: usize) -> Result<f64, SpectraError> {
        if k == 0 || k > self.values.len() {
            return Err(SpectraError::KOutOfRange { k, max: self.values.len() });
        }
        Ok(self.values[..k].iter().sum())
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }
}

/// All eigenvalues of a symmetric matrix, non-increasing.
pub fn sym_eigenvalues(m: &SymMatrix) -> Result<Spectrum, SpectraError> {
    let mut buf = m.data.clone();
    let (mut d, mut e) = solver::tridiagonalize(&mut buf, m.n);
    solver::ql_implicit_shift(&mut d, &mut e)?;
    let tol = SOLVER_TOL_FACTOR * m.inf_norm().max(1.0);
    Ok(Spectrum::new(d, tol))
}

/// Laplacian spectrum of a graph.
pub fn laplacian_spectrum(g: &Graph) -> Result<Spectrum, SpectraError> {
    sym_eigenvalues(&SymMatrix::laplacian(g))
}

/// Adjacency spectrum of a graph.
pub fn adjacency_spectrum(g: &Graph) -> Result<Spectrum, SpectraError> {
    sym_eigenvalues(&SymMatrix::adjacency(g))
}

/// Laplacian spectrum of the complement from the graph's own spectrum:
/// mu_i(comp G) = n - mu_{n-i}(G) for i < n, plus the trailing zero.
pub fn complement_spectrum(spec: &Spectrum, n: usize) -> Result<Spectrum, SpectraError> {
    if spec.len() != n {
        return Err(SpectraError::LengthMismatch { expected: n, got: spec.len() });
    }
    let mut values: Vec<f64> = spec.values[..n - 1].iter().rev().map(|mu| n as f64 - mu).collect();
    values.push(0.0);
    Ok(Spectrum::new(values, spec.tol))
}

/// Laplacian spectrum of a join from the parts' spectra:
/// {n1 + n2} ∪ {n1 + mu_i(G2)}_{i<n2} ∪ {n2 + mu_i(G1)}_{i<n1} ∪ {0}.
pub fn join_spectrum(
    spec1: &Spectrum,
    n1: usize,
    spec2: &Spectrum,
    n2: usize,
) -> Result<Spectrum, SpectraError> {
    if spec1.len() != n1 {
        return Err(SpectraError::LengthMismatch { expected: n1, got: spec1.len() });
    }
    if spec2.len() != n2 {
        return Err(SpectraError::LengthMismatch { expected: n2, got: spec2.len() });
    }
    let mut values = Vec::with_capacity(n1 + n2);
    values.push((n1 + n2) as f64);
    values.extend(spec2.values[..n2 - 1].iter().map(|mu| n1 as f64 + mu));
    values.extend(spec1.values[..n1 - 1].iter().map(|mu| n2 as f64 + mu));
    values.push(0.0);
    Ok(Spectrum::new(values, spec1.tol.max(spec2.tol)))
}

/// Edge-deletion interlacing check: with G' = G - e,
/// mu_i(G) >= mu_i(G') >= mu_{i+1}(G) for 1 <= i <= n-1 (within tolerance).
pub fn edge_deletion_interlaces(g: &Graph, u: usize, v: usize) -> Result<bool, SpectraError> {
    let smaller = g.without_edge(u, v)?;
    let a = laplacian_spectrum(g)?;
    let b = laplacian_spectrum(&smaller)?;
    let tol = a.tol + b.tol;
    let n = g.n();
    let ok = (1..n).all(|i| {
        a.mu(i) >= b.mu(i) - tol && b.mu(i) >= a.mu(i + 1) - tol
    });
    Ok(ok)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FanCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

/// Fan's inequality: sum of k largest eigenvalues is subadditive,
/// s_k(B + C) <= s_k(B) + s_k(C).
pub fn fan_inequality(b: &SymMatrix, c: &SymMatrix, k: usize) -> Result<FanCheck, SpectraError> {
    if b.order() != c.order() {
        return Err(SpectraError::OrderMismatch(b.order(), c.order()));
    }
    let sum = b.add(c)?;
    let sb = sym_eigenvalues(b)?;
    let sc = sym_eigenvalues(c)?;
    let ss = sym_eigenvalues(&sum)?;
    let lhs = ss.s_k(k)?;
    let rhs = sb.s_k(k)? + sc.s_k(k)?;
    let tol = sb.tol() + sc.tol() + ss.tol();
    Ok(FanCheck { lhs, rhs, holds: lhs <= rhs + tol })
}
