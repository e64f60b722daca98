//! Flat per-check output records and their JSONL / CSV encodings.

use std::io::Write;

use lapsum::verify::{BrouwerVerdict, NgVerdict};
use serde::Serialize;

/// One row per (graph, k, check). For the sum-bound check `s_k` and `bound`
/// are the two sides of s_k(G) <= m + C(k+1,2); for the complement-pair
/// check they are the two sides of s_k(G) + s_k(comp G) <= C(n,2) + 2C(k+1,2).
#[derive(Debug, Clone, Serialize)]
pub struct Record {
    pub index: usize,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub s_k: f64,
    pub bound: u64,
    pub slack: f64,
    pub class: String,
    pub threshold: bool,
    pub omega: usize,
    pub consistent: bool,
    pub check: String,
}

impl Record {
    pub fn from_brouwer(
        index: usize,
        graph6: String,
        n: usize,
        m: usize,
        threshold: bool,
        omega: usize,
        v: &BrouwerVerdict,
    ) -> Self {
        Record {
            index,
            graph6,
            n,
            m,
            k: v.k,
            s_k: v.s_k,
            bound: v.bound,
            slack: v.slack,
            class: v.class.to_string(),
            threshold,
            omega,
            consistent: v.consistent,
            check: "sum_bound".into(),
        }
    }

    pub fn from_ng(
        index: usize,
        graph6: String,
        n: usize,
        m: usize,
        threshold: bool,
        omega: usize,
        v: &NgVerdict,
    ) -> Self {
        Record {
            index,
            graph6,
            n,
            m,
            k: v.k,
            s_k: v.lhs,
            bound: v.rhs,
            slack: v.slack,
            class: v.class.to_string(),
            threshold,
            omega,
            consistent: v.consistent,
            check: "complement_pair".into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Jsonl,
    Csv,
}

pub const CSV_HEADER: &str =
    "index,graph6,n,m,k,s_k,bound,slack,class,threshold,omega,consistent,check";

/// Write one record in the chosen format. graph6 bytes are all in 63..=126,
/// so CSV needs no quoting.
pub fn write_record(
    w: &mut impl Write,
    format: OutputFormat,
    r: &Record,
) -> std::io::Result<()> {
    match format {
        OutputFormat::Jsonl => {
            serde_json::to_writer(&mut *w, r)?;
            writeln!(w)
        }
        OutputFormat::Csv => writeln!(
            w,
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            r.index,
            r.graph6,
            r.n,
            r.m,
            r.k,
            r.s_k,
            r.bound,
            r.slack,
            r.class,
            r.threshold,
            r.omega,
            r.consistent,
            r.check
        ),
    }
}
