//! Harness side of the workspace: graph streams, the parallel verification
//! pipeline, and the per-verdict record formats behind the `lapsum` binary.

pub mod enumerate;
pub mod pipeline;
pub mod records;
