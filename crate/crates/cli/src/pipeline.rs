//! Parallel verification pipeline.
//!
//! A producer thread streams graphs in fixed-size chunks to a pool of
//! workers over bounded channels; workers compute verdicts and serialize
//! their chunk's records; the coordinating thread reassembles chunks in
//! production order. Output bytes and summary witnesses are therefore
//! identical for any worker count.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use lapsum::graph::Graph;
use lapsum::graph6::write_graph6;
use lapsum::spectra;
use lapsum::verify::{
    self, bound_wang, bound_zhou, nikiforov_from_spectra, Class, GraphProfile, DEFAULT_TOL_EQ,
};

use crate::enumerate::{enumerate_labeled, enumerate_threshold, read_graph6_file, StreamError};
use crate::records::{write_record, OutputFormat, Record, CSV_HEADER};

const CHUNK: usize = 1024;
/// Proven-theorem bounds and exact identities are reported as anomalies when
/// they miss by more than this.
const TOL_CHECK: f64 = 1e-6;
/// Retained equality witnesses are capped here; the equality count is not.
pub const WITNESS_CAP: usize = 1000;

#[derive(Debug, Clone)]
pub enum GraphSource {
    /// All 2^C(n,2) labeled graphs on n vertices (n <= 8).
    LabeledExhaustive { n: usize },
    /// All 2^(n-1) threshold graphs on n vertices by creation sequence.
    ThresholdExhaustive { n: usize },
    /// One graph6 line per graph.
    Graph6File(PathBuf),
    /// An explicit list.
    List(Vec<Graph>),
}

#[derive(Debug, Clone)]
pub enum KSelect {
    /// Every k in 1..=n-1.
    All,
    /// A fixed list, silently intersected with 1..=n-1 per graph.
    List(Vec<usize>),
}

impl KSelect {
    pub fn for_n(&self, n: usize) -> Vec<usize> {
        let max = n.saturating_sub(1);
        match self {
            KSelect::All => (1..=max).collect(),
            KSelect::List(ks) => {
                let mut v: Vec<usize> =
                    ks.iter().copied().filter(|&k| (1..=max).contains(&k)).collect();
                v.sort_unstable();
                v.dedup();
                v
            }
        }
    }
}

/// Which checks run per graph. The two conjecture checks emit records; the
/// bound and identity cross-checks only raise anomalies when a proven
/// inequality or exact identity fails, which points at a solver defect.
#[derive(Debug, Clone, Copy)]
pub struct Checks {
    pub brouwer: bool,
    pub ng: bool,
    pub bounds: bool,
    pub identities: bool,
}

impl Default for Checks {
    fn default() -> Self {
        Checks { brouwer: true, ng: true, bounds: false, identities: false }
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub source: GraphSource,
    pub ks: KSelect,
    pub checks: Checks,
    /// Numeric-equality tolerance for the verdict consistency flag.
    pub tol_eq: f64,
    pub jobs: usize,
    pub out: Option<(PathBuf, OutputFormat)>,
}

impl RunConfig {
    pub fn new(source: GraphSource) -> Self {
        RunConfig {
            source,
            ks: KSelect::All,
            checks: Checks::default(),
            tol_eq: DEFAULT_TOL_EQ,
            jobs: std::thread::available_parallelism().map_or(1, |p| p.get()),
            out: None,
        }
    }
}

/// A graph/k pair where a conjectured bound was attained exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqualityWitness {
    pub index: usize,
    pub graph6: String,
    pub k: usize,
    pub check: String,
}

#[derive(Debug, Clone, Default)]
pub struct RunSummary {
    pub graphs: usize,
    /// Verdict rows evaluated (counted whether or not an output file was
    /// written).
    pub records: usize,
    pub violations: usize,
    pub anomalies: usize,
    pub equalities: usize,
    /// First `WITNESS_CAP` equality witnesses in stream order.
    pub witnesses: Vec<EqualityWitness>,
    pub elapsed: Duration,
}

#[derive(Debug, Default)]
struct ChunkStats {
    graphs: usize,
    records: usize,
    violations: usize,
    anomalies: usize,
    equalities: usize,
    witnesses: Vec<EqualityWitness>,
}

struct ChunkOutput {
    chunk_id: usize,
    result: Result<(Vec<u8>, ChunkStats), StreamError>,
}

fn source_iter(
    source: &GraphSource,
) -> Result<Box<dyn Iterator<Item = Result<Graph, StreamError>> + Send>, StreamError> {
    match source {
        GraphSource::LabeledExhaustive { n } => Ok(Box::new(enumerate_labeled(*n)?.map(Ok))),
        GraphSource::ThresholdExhaustive { n } => Ok(Box::new(enumerate_threshold(*n)?.map(Ok))),
        GraphSource::Graph6File(path) => Ok(Box::new(read_graph6_file(path.clone())?)),
        GraphSource::List(gs) => Ok(Box::new(gs.clone().into_iter().map(Ok))),
    }
}

fn tally(
    stats: &mut ChunkStats,
    class: Class,
    consistent: bool,
    index: usize,
    g6: &str,
    k: usize,
    check: &str,
) {
    stats.records += 1;
    match class {
        Class::Violation => stats.violations += 1,
        Class::Equality => {
            stats.equalities += 1;
            stats.witnesses.push(EqualityWitness {
                index,
                graph6: g6.to_string(),
                k,
                check: check.to_string(),
            });
        }
        Class::Strict => {}
    }
    if !consistent {
        stats.anomalies += 1;
    }
}

fn process_graph(
    index: usize,
    g: &Graph,
    checks: Checks,
    ks: &KSelect,
    tol_eq: f64,
    keep_records: bool,
    records: &mut Vec<Record>,
    stats: &mut ChunkStats,
) {
    stats.graphs += 1;
    let g6 = write_graph6(g);
    let n = g.n();
    let m = g.edge_count();
    let profile = match GraphProfile::new(g) {
        Ok(p) => p,
        Err(_) => {
            stats.anomalies += 1;
            return;
        }
    };
    let ks = ks.for_n(n);

    if checks.brouwer {
        for &k in &ks {
            match profile.brouwer(k, tol_eq) {
                Ok(v) => {
                    tally(stats, v.class, v.consistent, index, &g6, k, "sum_bound");
                    if keep_records {
                        records.push(Record::from_brouwer(
                            index,
                            g6.clone(),
                            n,
                            m,
                            profile.is_threshold(),
                            profile.omega(),
                            &v,
                        ));
                    }
                }
                Err(_) => stats.anomalies += 1,
            }
        }
    }

    if checks.ng {
        for &k in &ks {
            match profile.ng(k, tol_eq) {
                Ok(v) => {
                    tally(stats, v.class, v.consistent, index, &g6, k, "complement_pair");
                    if keep_records {
                        records.push(Record::from_ng(
                            index,
                            g6.clone(),
                            n,
                            m,
                            profile.is_threshold(),
                            profile.omega(),
                            &v,
                        ));
                    }
                }
                Err(_) => stats.anomalies += 1,
            }
        }
    }

    if checks.bounds {
        // Adjacency spectra solved once per graph, shared across all k.
        let adj = spectra::adjacency_spectrum(g).ok();
        let comp_adj = spectra::adjacency_spectrum(&g.complement()).ok();
        let connected = g.is_connected();
        for &k in &ks {
            let s_k = match profile.spectrum().s_k(k) {
                Ok(v) => v,
                Err(_) => {
                    stats.anomalies += 1;
                    continue;
                }
            };
            // Conjugate-degree majorization: proven upper bound on s_k.
            if s_k > profile.conjugate().prefix_sum(k) as f64 + TOL_CHECK {
                stats.anomalies += 1;
            }
            if connected {
                match bound_wang(g, k) {
                    Ok(b) if s_k <= b + TOL_CHECK => {}
                    _ => stats.anomalies += 1,
                }
            }
            if k + 2 <= n {
                match bound_zhou(g, k) {
                    Ok(b) if s_k <= b + TOL_CHECK => {}
                    _ => stats.anomalies += 1,
                }
            }
            if 2 * k + 1 <= n {
                if let (Some(a), Some(b)) = (&adj, &comp_adj) {
                    let (lhs, rhs) = nikiforov_from_spectra(a, b, k);
                    if lhs > rhs + TOL_CHECK {
                        stats.anomalies += 1;
                    }
                }
            }
        }
    }

    if checks.identities {
        // Complement rule: spectrum derived from G against a direct solve.
        match spectra::laplacian_spectrum(&g.complement()) {
            Ok(direct) => {
                let agree = profile
                    .comp_spectrum()
                    .values()
                    .iter()
                    .zip(direct.values())
                    .all(|(a, b)| (a - b).abs() <= TOL_CHECK);
                if !agree {
                    stats.anomalies += 1;
                }
            }
            Err(_) => stats.anomalies += 1,
        }
        for k in 1..=n.saturating_sub(1) / 2 {
            match verify::ng_duality_identity(g, k) {
                Ok((lhs, rhs)) if (lhs - rhs).abs() <= TOL_CHECK => {}
                _ => stats.anomalies += 1,
            }
        }
        if n < 64 {
            match verify::isolated_vertex_shift_holds(g) {
                Ok(true) => {}
                _ => stats.anomalies += 1,
            }
        }
    }
}

/// Execute a run. Violations and anomalies are counted, never panicked on;
/// a stream error (bad input line, I/O failure) aborts the run.
pub fn run(config: &RunConfig) -> Result<RunSummary, StreamError> {
    let start = Instant::now();
    let jobs = config.jobs.max(1);
    let iter = source_iter(&config.source)?;
    let fmt = config.out.as_ref().map(|(_, f)| *f);

    let mut out = match &config.out {
        Some((path, f)) => {
            let mut w = BufWriter::new(File::create(path)?);
            if *f == OutputFormat::Csv {
                writeln!(w, "{CSV_HEADER}")?;
            }
            Some(w)
        }
        None => None,
    };

    let (work_tx, work_rx) = crossbeam::channel::bounded::<(
        usize,
        Result<Vec<(usize, Graph)>, StreamError>,
    )>(jobs * 2);
    let (done_tx, done_rx) = crossbeam::channel::bounded::<ChunkOutput>(jobs * 2);
    // Set on any fatal error; the producer checks it so a failed run stops
    // enumerating instead of streaming to a dead writer.
    let abort = AtomicBool::new(false);

    let totals = std::thread::scope(|s| -> Result<ChunkStats, StreamError> {
        let abort = &abort;
        s.spawn(move || {
            let mut chunk_id = 0usize;
            let mut index = 0usize;
            let mut buf: Vec<(usize, Graph)> = Vec::with_capacity(CHUNK);
            for item in iter {
                if abort.load(Ordering::Relaxed) {
                    return;
                }
                match item {
                    Ok(g) => {
                        buf.push((index, g));
                        index += 1;
                        if buf.len() == CHUNK {
                            let full = std::mem::replace(&mut buf, Vec::with_capacity(CHUNK));
                            if work_tx.send((chunk_id, Ok(full))).is_err() {
                                return;
                            }
                            chunk_id += 1;
                        }
                    }
                    Err(e) => {
                        if !buf.is_empty() {
                            let full = std::mem::take(&mut buf);
                            if work_tx.send((chunk_id, Ok(full))).is_err() {
                                return;
                            }
                            chunk_id += 1;
                        }
                        let _ = work_tx.send((chunk_id, Err(e)));
                        return;
                    }
                }
            }
            if !buf.is_empty() {
                let _ = work_tx.send((chunk_id, Ok(buf)));
            }
        });

        for _ in 0..jobs {
            let work_rx = work_rx.clone();
            let done_tx = done_tx.clone();
            let checks = config.checks;
            let ks = &config.ks;
            let tol_eq = config.tol_eq;
            s.spawn(move || {
                for (chunk_id, item) in work_rx.iter() {
                    let result = match item {
                        Ok(graphs) => {
                            let mut stats = ChunkStats::default();
                            let mut records = Vec::new();
                            for (index, g) in &graphs {
                                process_graph(
                                    *index,
                                    g,
                                    checks,
                                    ks,
                                    tol_eq,
                                    fmt.is_some(),
                                    &mut records,
                                    &mut stats,
                                );
                            }
                            let mut bytes = Vec::new();
                            if let Some(f) = fmt {
                                for r in &records {
                                    write_record(&mut bytes, f, r)
                                        .expect("writing to a Vec cannot fail");
                                }
                            }
                            Ok((bytes, stats))
                        }
                        Err(e) => Err(e),
                    };
                    if done_tx.send(ChunkOutput { chunk_id, result }).is_err() {
                        return;
                    }
                }
            });
        }
        drop(done_tx);
        drop(work_rx);

        // Reassemble chunk outputs in production order. This loop never
        // returns early: it drains the done channel to completion so every
        // spawned thread can finish, and only then reports any fatal error.
        let mut pending: BTreeMap<usize, Result<(Vec<u8>, ChunkStats), StreamError>> =
            BTreeMap::new();
        let mut next = 0usize;
        let mut totals = ChunkStats::default();
        let mut fatal: Option<StreamError> = None;
        for output in done_rx.iter() {
            pending.insert(output.chunk_id, output.result);
            while let Some(result) = pending.remove(&next) {
                next += 1;
                if fatal.is_some() {
                    continue;
                }
                match result {
                    Ok((bytes, stats)) => {
                        if let Some(w) = &mut out {
                            if let Err(e) = w.write_all(&bytes) {
                                fatal = Some(StreamError::Io(e));
                                abort.store(true, Ordering::Relaxed);
                                continue;
                            }
                        }
                        merge(&mut totals, stats);
                    }
                    Err(e) => {
                        fatal = Some(e);
                        abort.store(true, Ordering::Relaxed);
                    }
                }
            }
        }
        match fatal {
            Some(e) => Err(e),
            None => Ok(totals),
        }
    })?;

    if let Some(mut w) = out {
        w.flush()?;
    }

    let mut witnesses = totals.witnesses;
    witnesses.truncate(WITNESS_CAP);
    Ok(RunSummary {
        graphs: totals.graphs,
        records: totals.records,
        violations: totals.violations,
        anomalies: totals.anomalies,
        equalities: totals.equalities,
        witnesses,
        elapsed: start.elapsed(),
    })
}

fn merge(totals: &mut ChunkStats, stats: ChunkStats) {
    totals.graphs += stats.graphs;
    totals.records += stats.records;
    totals.violations += stats.violations;
    totals.anomalies += stats.anomalies;
    totals.equalities += stats.equalities;
    if totals.witnesses.len() < WITNESS_CAP {
        totals.witnesses.extend(stats.witnesses);
    }
}
