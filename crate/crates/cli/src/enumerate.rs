//! Graph streams feeding the verification pipeline: exhaustive labeled
//! enumeration, the threshold family by creation sequence, cyclomatic-class
//! filtering, and graph6 files.

use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use lapsum::graph::Graph;
use lapsum::graph6::{parse_graph6, Graph6Error};
use lapsum::threshold::CreationSequence;

/// Hard cap for exhaustive labeled enumeration: 2^C(8,2) = 268M graphs is
/// the most a single explicit run should ever attempt.
pub const LABELED_CAP: usize = 8;

#[derive(Debug, thiserror::Error)]
pub enum StreamError {
    #[error("labeled enumeration supports 1 <= n <= {cap}, got {n}")]
    OrderOutOfRange { n: usize, cap: usize },
    #[error("threshold enumeration supports 1 <= n <= 64, got {n}")]
    ThresholdOrderOutOfRange { n: usize },
    #[error("line {line}: {source}")]
    Parse { line: usize, source: Graph6Error },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Every labeled graph on `n` vertices exactly once, in edge-mask counter
/// order: bit b of the counter is edge number b in the lexicographic pair
/// order (0,1), (0,2), (1,2), (0,3), ...
pub fn enumerate_labeled(n: usize) -> Result<impl Iterator<Item = Graph>, StreamError> {
    if n == 0 || n > LABELED_CAP {
        return Err(StreamError::OrderOutOfRange { n, cap: LABELED_CAP });
    }
    let pairs: Vec<(usize, usize)> = (1..n)
        .flat_map(|v| (0..v).map(move |u| (u, v)))
        .collect();
    let total: u64 = 1 << pairs.len();
    Ok((0..total).map(move |code| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|&(b, _)| code >> b & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        Graph::from_edges(n, &edges).expect("enumeration edges are valid")
    }))
}

/// Every threshold graph on `n` vertices exactly once, by realizing all
/// 2^(n-1) creation sequences that begin with 0.
pub fn enumerate_threshold(n: usize) -> Result<impl Iterator<Item = Graph>, StreamError> {
    if n == 0 || n > 64 {
        return Err(StreamError::ThresholdOrderOutOfRange { n });
    }
    Ok((0u64..1 << (n - 1)).map(move |code| {
        let bits: Vec<bool> = (0..n).map(|i| i > 0 && code >> (i - 1) & 1 == 1).collect();
        CreationSequence::new(bits)
            .expect("leading bit is zero")
            .realize()
    }))
}

/// Keep the connected graphs with cyclomatic number `c` (e = n + c - 1):
/// c = 0 trees, 1 unicyclic, 2 bicyclic.
pub fn filter_c_cyclic(
    stream: impl Iterator<Item = Graph>,
    c: usize,
) -> impl Iterator<Item = Graph> {
    stream.filter(move |g| {
        g.edge_count() + 1 == g.n() + c && g.is_connected()
    })
}

/// Graphs from a file with one graph6 line per graph. Parsing is lazy; a
/// bad line surfaces as an error carrying its 1-based line number.
pub fn read_graph6_file(
    path: impl AsRef<Path>,
) -> Result<impl Iterator<Item = Result<Graph, StreamError>>, StreamError> {
    let reader = BufReader::new(File::open(path)?);
    Ok(reader.lines().enumerate().map(|(i, line)| {
        let line = line?;
        parse_graph6(line.trim_end()).map_err(|source| StreamError::Parse {
            line: i + 1,
            source,
        })
    }))
}
