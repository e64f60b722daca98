//! Threshold graphs and degree-sequence combinatorics.
//!
//! A threshold graph is built by repeatedly adding either an isolated vertex
//! (bit 0) or a dominating vertex (bit 1); the bit string is its creation
//! sequence. Threshold graphs are exactly the graphs whose Laplacian spectrum
//! equals the conjugate degree sequence, which is what makes them the
//! equality cases of the eigenvalue-sum bounds verified in `verify`.

use crate::graph::{DegreeSequence, Graph};
use crate::spectra::{self, SpectraError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ThresholdError {
    #[error("creation sequence must be non-empty")]
    EmptySequence,
    #[error("creation sequence must start with 0 (first vertex has no predecessors)")]
    LeadingOne,
    #[error("creation sequence length {0} exceeds 64 vertices")]
    TooLong(usize),
    #[error("sequence length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
}

/// Creation sequence of a threshold graph. `bits[0]` is always 0; `bits[i]`
/// says whether vertex i arrived dominating (true) or isolated (false).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CreationSequence {
    bits: Vec<bool>,
}

impl CreationSequence {
    pub fn new(bits: Vec<bool>) -> Result<Self, ThresholdError> {
        if bits.is_empty() {
            return Err(ThresholdError::EmptySequence);
        }
        if bits.len() > 64 {
            return Err(ThresholdError::TooLong(bits.len()));
        }
        if bits[0] {
            return Err(ThresholdError::LeadingOne);
        }
        Ok(CreationSequence { bits })
    }

    /// Convenience constructor from '0'/'1' text, e.g. "00101".
    pub fn parse(s: &str) -> Result<Self, ThresholdError> {
        CreationSequence::new(s.chars().map(|c| c == '1').collect())
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Clique number of the realization: one per dominating vertex, plus one.
    pub fn clique_number(&self) -> usize {
        self.ones() + 1
    }

    /// Sequence of the complement graph: flip every bit after the first.
    pub fn complemented(&self) -> CreationSequence {
        let mut bits = vec![false];
        bits.extend(self.bits[1..].iter().map(|b| !b));
        CreationSequence { bits }
    }

    /// Build the labeled realization: vertex i joins all earlier vertices iff
    /// bits[i].
    pub fn realize(&self) -> Graph {
        let n = self.bits.len();
        let mut edges = Vec::new();
        for (i, &dominating) in self.bits.iter().enumerate() {
            if dominating {
                edges.extend((0..i).map(|j| (j, i)));
            }
        }
        Graph::from_edges(n, &edges).expect("creation sequence indices are in range")
    }
}

/// Strip-based threshold recognition. Repeatedly removes a dominating vertex
/// if one exists, else an isolated vertex; any failure means not threshold.
/// (For n >= 2 a graph cannot have both, so the preference only settles the
/// final single vertex, which is recorded as 0.)
pub fn recognize_threshold(g: &Graph) -> Option<CreationSequence> {
    let n = g.n();
    let mut alive: Vec<usize> = (0..n).collect();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut strip_bits = Vec::with_capacity(n);
    while alive.len() > 1 {
        let r = alive.len();
        let pick_dominating = alive.iter().position(|&v| degree[v] == r - 1);
        let (pos, bit) = match pick_dominating {
            Some(pos) => (pos, true),
            None => (alive.iter().position(|&v| degree[v] == 0)?, false),
        };
        let removed = alive.swap_remove(pos);
        if bit {
            for &v in &alive {
                degree[v] -= usize::from(g.has_edge(removed, v));
            }
        }
        strip_bits.push(bit);
    }
    strip_bits.push(false); // first vertex of the build
    strip_bits.reverse();
    Some(CreationSequence { bits: strip_bits })
}

/// Conjugate degree sequence d*_i = #{j : d_j >= i} for i = 1..n, plus the
/// trace T = max{i : d_i >= i} (0 for edgeless graphs).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugateDegrees {
    values: Vec<usize>,
    trace: usize,
}

impl ConjugateDegrees {
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn trace(&self) -> usize {
        self.trace
    }

    /// Partial sum of the k largest conjugate degrees.
    pub fn prefix_sum(&self, k: usize) -> usize {
        self.values[..k].iter().sum()
    }
}

pub fn conjugate_degrees(d: &DegreeSequence) -> ConjugateDegrees {
    let n = d.len();
    let values: Vec<usize> = (1..=n)
        .map(|i| d.values().iter().take_while(|&&dj| dj >= i).count())
        .collect();
    let trace = (0..n).take_while(|&i| d.values()[i] >= i + 1).count();
    ConjugateDegrees { values, trace }
}

/// The degree/conjugate inequality up to the trace, in its prefix-sum form:
/// sum_{i<=j} (d_i + 1) <= sum_{i<=j} d*_i for every j <= T. (The pointwise
/// form fails already on the 4-vertex path, whose trace-2 column count is
/// 2 < d_2 + 1 = 3; the prefix form is what holds for every graph.) Equality
/// at every j <= T — equivalently d_i + 1 = d*_i pointwise — characterizes
/// threshold graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceInequality {
    pub holds: bool,
    pub equality_all: bool,
}

pub fn trace_inequality(g: &Graph) -> TraceInequality {
    let d = g.degree_sequence();
    let conj = conjugate_degrees(&d);
    let t = conj.trace();
    let mut lhs = 0;
    let mut rhs = 0;
    let mut holds = true;
    for i in 0..t {
        lhs += d.values()[i] + 1;
        rhs += conj.values()[i];
        holds &= lhs <= rhs;
    }
    let equality_all = (0..t).all(|i| d.values()[i] + 1 == conj.values()[i]);
    TraceInequality { holds, equality_all }
}

/// Ferrers-diagram box counts around the trace: X is the (T+1) x T head
/// block (rows 1..=T+1 of the first T columns), Y the rest of those columns,
/// Z everything beyond column T. For threshold graphs n_x = T(T+1) and
/// n_y = n_z.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FerrersParts {
    pub n_x: usize,
    pub n_y: usize,
    pub n_z: usize,
}

pub fn ferrers_parts(g: &Graph) -> FerrersParts {
    let d = g.degree_sequence();
    let t = conjugate_degrees(&d).trace();
    let mut parts = FerrersParts { n_x: 0, n_y: 0, n_z: 0 };
    for (row, &di) in d.values().iter().enumerate() {
        let in_first_cols = di.min(t);
        if row < t + 1 {
            parts.n_x += in_first_cols;
        } else {
            parts.n_y += in_first_cols;
        }
        parts.n_z += di.saturating_sub(t);
    }
    parts
}

/// Weak majorization with tolerance: every prefix sum of `a` at most the
/// matching prefix of `b` plus tol, and totals equal within tol.
pub fn majorizes(a: &[f64], b: &[f64], tol: f64) -> Result<bool, ThresholdError> {
    if a.len() != b.len() {
        return Err(ThresholdError::LengthMismatch(a.len(), b.len()));
    }
    let mut pa = 0.0;
    let mut pb = 0.0;
    for i in 0..a.len() {
        pa += a[i];
        pb += b[i];
        if i + 1 < a.len() && pa > pb + tol {
            return Ok(false);
        }
    }
    Ok((pa - pb).abs() <= tol)
}

/// Grone-Merris-Bai check: the Laplacian spectrum is majorized by the
/// conjugate degree sequence; equality (componentwise) iff threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GmbCheck {
    pub majorized: bool,
    pub equality: bool,
}

pub fn grone_merris_bai_check(g: &Graph) -> Result<GmbCheck, SpectraError> {
    let spec = spectra::laplacian_spectrum(g)?;
    let conj = conjugate_degrees(&g.degree_sequence());
    let dstar: Vec<f64> = conj.values().iter().map(|&v| v as f64).collect();
    let tol = 1e-6f64.max(10.0 * spec.tol());
    let majorized = majorizes(spec.values(), &dstar, tol).expect("lengths match by construction");
    let equality = spec
        .values()
        .iter()
        .zip(&dstar)
        .all(|(mu, ds)| (mu - ds).abs() <= tol);
    Ok(GmbCheck { majorized, equality })
}

/// Split graph test via the Hammer-Simeone degree criterion:
/// sum_{i<=T} d_i = T(T-1) + sum_{i>T} d_i.
pub fn is_split(g: &Graph) -> bool {
    let d = g.degree_sequence();
    let t = conjugate_degrees(&d).trace();
    let head: usize = d.values()[..t].iter().sum();
    let tail: usize = d.values()[t..].iter().sum();
    head == t * t.saturating_sub(1) + tail
}

/// Complete split graph: k vertices of degree n-1 and n-k of degree k for
/// some 1 <= k < n. The degree pattern forces the structure.
pub fn is_complete_split(g: &Graph) -> bool {
    let n = g.n();
    let d = g.degree_sequence();
    (1..n).any(|k| {
        d.values()[..k].iter().all(|&di| di == n - 1) && d.values()[k..].iter().all(|&di| di == k)
    })
}
