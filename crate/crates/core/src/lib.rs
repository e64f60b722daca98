//! Laplacian eigenvalue-sum toolkit for small graphs.
//!
//! The crate centres on the quantity s_k(G): the sum of the k largest
//! Laplacian eigenvalues of a graph. Around it sit
//!
//! * [`graph`] — undirected graphs on up to 64 vertices as bitset adjacency
//!   rows, plus the graph6 interchange format in [`graph6`];
//! * [`spectra`] — a dense symmetric eigensolver, Laplacian/adjacency
//!   spectra, exact characteristic-polynomial evaluation, and the complement
//!   and join spectral rules;
//! * [`threshold`] — creation sequences, threshold recognition, conjugate
//!   degrees, majorization, and split-graph predicates;
//! * [`families`] — the structured constructions the equality analysis
//!   needs (complete split graphs, nested split graphs, books, spiders,
//!   two-cycle and theta shapes, cones);
//! * [`verify`] — the conjecture checks themselves: the eigenvalue-sum
//!   budget s_k <= e + C(k+1, 2), its complement-pair variant, bound
//!   comparisons, spectral identities, and edge-cut strictness reports.

pub mod families;
pub mod graph;
pub mod graph6;
pub mod spectra;
pub mod threshold;
pub mod verify;

pub use families::FamilyError;
pub use graph::{DegreeSequence, Graph, GraphError, MAX_VERTICES};
pub use graph6::{parse_graph6, write_graph6, Graph6Error};
pub use spectra::{
    adjacency_spectrum, laplacian_spectrum, sym_eigenvalues, Spectrum, SpectraError, SymMatrix,
};
pub use threshold::{recognize_threshold, ConjugateDegrees, CreationSequence, ThresholdError};
pub use verify::{
    brouwer_check, full_brouwer, ng_check, BrouwerVerdict, Class, GraphProfile, NgVerdict,
    VerifyError, DEFAULT_TOL_EQ,
};
