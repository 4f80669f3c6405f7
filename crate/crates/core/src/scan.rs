//! Exhaustive scans over graph6 streams: parameter chains, empirical
//! thresholds, and verified single-graph extraction.
//!
//! Work is split per graph over a rayon pool and merged in input order, so a
//! report does not depend on the worker count.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::BufReader;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::extraction::{
    extract_independence_witness, extract_induced_matching_witness, extract_matching_witness, ExtractionError,
    ExtractionOutcome,
};
use crate::families::{contains_induced, generate, verify_witness, FamilySpec};
use crate::graph::Graph;
use crate::graph6::{parse_graph6, read_graph6, write_graph6, Graph6Error};
use crate::invariants::{
    fractional_matching_number, independence_number, induced_matching_number, matching_number, Rational,
};

/// Version of the JSON report layout.
pub const REPORT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    /// Large independence number forces `P_n`, `H_n^1` or `K_{1,n}`.
    Independence,
    /// Large induced matching number forces `P_n`, `H_n^2`, `T_n`, `S_n^2` or `F_n`.
    InducedMatching,
    /// Large matching number forces `P_n`, `K_n`, `K_{n,n}`, `S_n^2` or `F_n`.
    Matching,
}

impl Theorem {
    pub fn targets(self, n: usize) -> Vec<FamilySpec> {
        match self {
            Theorem::Independence => vec![FamilySpec::path(n), FamilySpec::hairy_clique(n, 1), FamilySpec::star(n)],
            Theorem::InducedMatching => vec![
                FamilySpec::path(n),
                FamilySpec::hairy_clique(n, 2),
                FamilySpec::triangle_clique(n),
                FamilySpec::spider(n, 2),
                FamilySpec::friendship(n),
            ],
            Theorem::Matching => vec![
                FamilySpec::path(n),
                FamilySpec::clique(n),
                FamilySpec::biclique(n, n),
                FamilySpec::spider(n, 2),
                FamilySpec::friendship(n),
            ],
        }
    }

    /// The parameter whose size the theorem is about.
    pub fn parameter(self, g: &Graph) -> usize {
        match self {
            Theorem::Independence => independence_number(g).0,
            Theorem::InducedMatching => induced_matching_number(g).0,
            Theorem::Matching => matching_number(g),
        }
    }
}

#[derive(Debug, Error)]
pub enum ScanError {
    #[error("invalid scan configuration: {0}")]
    Config(String),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{}:{line}: {source}", path.display())]
    Parse { path: PathBuf, line: usize, source: Graph6Error },
    #[error("could not start the worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanConfig {
    pub inputs: Vec<PathBuf>,
    pub theorem: Theorem,
    pub n: usize,
    pub jobs: usize,
    pub output: Option<PathBuf>,
    /// Include one record per graph in invariant reports.
    #[serde(default)]
    pub records: bool,
}

impl ScanConfig {
    pub fn validate(&self) -> Result<(), ScanError> {
        if self.n < 2 {
            return Err(ScanError::Config(format!("n must be at least 2, got {}", self.n)));
        }
        if self.inputs.is_empty() {
            return Err(ScanError::Config("at least one input file is required".into()));
        }
        if self.jobs == 0 {
            return Err(ScanError::Config("worker count must be at least 1".into()));
        }
        Ok(())
    }
}

/// Reads every graph from graph6 files, in file then line order.
pub fn read_inputs(paths: &[PathBuf]) -> Result<Vec<Graph>, ScanError> {
    let mut out = Vec::new();
    for path in paths {
        let io = |source| ScanError::Io { path: path.clone(), source };
        let file = File::open(path).map_err(io)?;
        for item in read_graph6(BufReader::new(file)) {
            let (line, parsed) = item.map_err(io)?;
            out.push(parsed.map_err(|source| ScanError::Parse { path: path.clone(), line, source })?);
        }
    }
    Ok(out)
}

fn in_pool<T: Send>(jobs: usize, work: impl FnOnce() -> T + Send) -> Result<T, ScanError> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build()?;
    Ok(pool.install(work))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantRecord {
    pub graph6: String,
    pub order: usize,
    pub size: usize,
    pub independence: usize,
    pub matching: usize,
    pub induced_matching: usize,
    pub vertex_cover: usize,
    pub fractional_matching: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub graph6: String,
    pub check: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Distributions {
    pub independence: BTreeMap<usize, usize>,
    pub matching: BTreeMap<usize, usize>,
    pub induced_matching: BTreeMap<usize, usize>,
    pub vertex_cover: BTreeMap<usize, usize>,
    /// Keyed by twice the fractional matching number.
    pub fractional_matching_doubled: BTreeMap<usize, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub version: u32,
    pub graphs_scanned: usize,
    pub disconnected_skipped: usize,
    pub violations: usize,
    pub violation_details: Vec<Violation>,
    pub distributions: Distributions,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub records: Option<Vec<InvariantRecord>>,
}

fn rational_text(r: Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// All parameters of one connected graph plus the names of failed checks.
fn invariant_record(g: &Graph) -> (InvariantRecord, Vec<&'static str>, Rational) {
    let (alpha, independent) = independence_number(g);
    let matching = matching_number(g);
    let induced = induced_matching_number(g).0;
    let cover = g.order() - alpha;
    let fractional = fractional_matching_number(g);
    let m = Rational::from_integer(matching as i64);

    let checks = [
        ("induced-matching <= matching", induced <= matching),
        ("matching <= fractional", m <= fractional),
        ("fractional <= 3/2 matching", fractional <= m * Rational::new(3, 2)),
        ("matching <= vertex-cover", matching <= cover),
        ("vertex-cover <= 2 matching", cover <= 2 * matching),
        ("vertex-cover = order - independence", g.is_independent(independent.as_slice())),
    ];
    let failed = checks.iter().filter(|(_, ok)| !ok).map(|(name, _)| *name).collect();
    let record = InvariantRecord {
        graph6: write_graph6(g),
        order: g.order(),
        size: g.size(),
        independence: alpha,
        matching,
        induced_matching: induced,
        vertex_cover: cover,
        fractional_matching: rational_text(fractional),
    };
    (record, failed, fractional)
}

/// Computes α, α′, α″, β and α′_f for every connected graph and checks
/// `α″ ≤ α′ ≤ α′_f ≤ 3α′/2` and `α′ ≤ β ≤ 2α′`.
pub fn scan_invariant_graphs(graphs: &[Graph], jobs: usize, records: bool) -> Result<InvariantReport, ScanError> {
    let results: Vec<Option<(InvariantRecord, Vec<&str>, Rational)>> = in_pool(jobs, || {
        graphs
            .par_iter()
            .map(|g| g.is_connected().then(|| invariant_record(g)))
            .collect()
    })?;

    let mut report = InvariantReport {
        version: REPORT_VERSION,
        graphs_scanned: 0,
        disconnected_skipped: 0,
        violations: 0,
        violation_details: Vec::new(),
        distributions: Distributions::default(),
        records: records.then(Vec::new),
    };
    for result in results {
        let Some((record, failed, fractional)) = result else {
            report.disconnected_skipped += 1;
            continue;
        };
        report.graphs_scanned += 1;
        let d = &mut report.distributions;
        *d.independence.entry(record.independence).or_default() += 1;
        *d.matching.entry(record.matching).or_default() += 1;
        *d.induced_matching.entry(record.induced_matching).or_default() += 1;
        *d.vertex_cover.entry(record.vertex_cover).or_default() += 1;
        let doubled = (fractional * 2).to_integer() as usize;
        *d.fractional_matching_doubled.entry(doubled).or_default() += 1;
        report.violations += failed.len();
        for check in failed {
            report.violation_details.push(Violation { graph6: record.graph6.clone(), check: check.to_string() });
        }
        if let Some(list) = &mut report.records {
            list.push(record);
        }
    }
    Ok(report)
}

pub fn scan_invariants(config: &ScanConfig) -> Result<InvariantReport, ScanError> {
    config.validate()?;
    scan_invariant_graphs(&read_inputs(&config.inputs)?, config.jobs, config.records)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bucket {
    pub graphs: usize,
    pub structure_free: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdReport {
    pub version: u32,
    pub theorem: Theorem,
    pub n: usize,
    pub graphs_scanned: usize,
    pub disconnected_skipped: usize,
    pub structure_free: usize,
    /// One more than the largest parameter of a structure-free graph (1 if
    /// there is none).
    pub empirical_threshold: usize,
    /// Structure-free graphs attaining the maximum, as sorted graph6 strings.
    pub extremal: Vec<String>,
    /// Parameter value → counts.
    pub histogram: BTreeMap<usize, Bucket>,
}

/// Whether `g` contains any target structure of `theorem` at parameter `n`.
pub fn has_target(g: &Graph, patterns: &[Graph]) -> bool {
    patterns.iter().any(|p| contains_induced(g, p).is_some())
}

pub fn target_patterns(theorem: Theorem, n: usize) -> Vec<Graph> {
    theorem.targets(n).iter().map(|s| generate(s).expect("n >= 1")).collect()
}

/// Scans for the largest parameter value among connected graphs that contain
/// none of the theorem's target structures at parameter `n`.
pub fn empirical_threshold_graphs(
    graphs: &[Graph],
    theorem: Theorem,
    n: usize,
    jobs: usize,
) -> Result<ThresholdReport, ScanError> {
    if n == 0 {
        return Err(ScanError::Config("n must be at least 1".into()));
    }
    let patterns = target_patterns(theorem, n);
    let results: Vec<Option<(usize, bool)>> = in_pool(jobs, || {
        graphs
            .par_iter()
            .map(|g| g.is_connected().then(|| (theorem.parameter(g), !has_target(g, &patterns))))
            .collect()
    })?;

    let mut report = ThresholdReport {
        version: REPORT_VERSION,
        theorem,
        n,
        graphs_scanned: 0,
        disconnected_skipped: 0,
        structure_free: 0,
        empirical_threshold: 1,
        extremal: Vec::new(),
        histogram: BTreeMap::new(),
    };
    let mut best: Option<usize> = None;
    for (g, result) in graphs.iter().zip(results) {
        let Some((rho, free)) = result else {
            report.disconnected_skipped += 1;
            continue;
        };
        report.graphs_scanned += 1;
        let bucket = report.histogram.entry(rho).or_default();
        bucket.graphs += 1;
        if !free {
            continue;
        }
        bucket.structure_free += 1;
        report.structure_free += 1;
        if best.is_none_or(|b| rho > b) {
            best = Some(rho);
            report.extremal.clear();
        }
        if best == Some(rho) {
            report.extremal.push(write_graph6(g));
        }
    }
    report.extremal.sort();
    report.extremal.dedup();
    report.empirical_threshold = best.map_or(1, |b| b + 1);
    Ok(report)
}

pub fn empirical_threshold(config: &ScanConfig) -> Result<ThresholdReport, ScanError> {
    config.validate()?;
    empirical_threshold_graphs(&read_inputs(&config.inputs)?, config.theorem, config.n, config.jobs)
}

#[derive(Debug, Error)]
pub enum RunError {
    #[error("could not parse graph6 input: {0}")]
    Parse(#[from] Graph6Error),
    #[error(transparent)]
    Extraction(#[from] ExtractionError),
    #[error("internal soundness failure: returned witness {0} does not verify")]
    Soundness(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtractionReport {
    pub version: u32,
    pub theorem: Theorem,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    pub graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parameter: Option<usize>,
    pub outcome: ExtractionOutcome,
}

/// Runs one pipeline on a graph and re-checks any witness before reporting.
/// `r` defaults to `n` for the matching pipeline and is ignored otherwise.
pub fn run_extraction_on(g: &Graph, theorem: Theorem, n: usize, r: Option<usize>) -> Result<ExtractionReport, RunError> {
    let (outcome, r) = match theorem {
        Theorem::Independence => (extract_independence_witness(g, n)?, None),
        Theorem::InducedMatching => (extract_induced_matching_witness(g, n)?, None),
        Theorem::Matching => {
            let r = r.unwrap_or(n);
            (extract_matching_witness(g, n, r)?, Some(r))
        }
    };
    if let Some(w) = outcome.witness() {
        if !verify_witness(g, w) {
            return Err(RunError::Soundness(serde_json::to_string(w).unwrap_or_default()));
        }
    }
    Ok(ExtractionReport {
        version: REPORT_VERSION,
        theorem,
        n,
        r,
        graph6: write_graph6(g),
        family: outcome.witness().map(|w| w.spec.label()),
        parameter: outcome.witness().map(|w| w.spec.parameter()),
        outcome,
    })
}

pub fn run_extraction(graph6: &str, theorem: Theorem, n: usize, r: Option<usize>) -> Result<ExtractionReport, RunError> {
    run_extraction_on(&parse_graph6(graph6)?, theorem, n, r)
}

/// Writes `value` as pretty JSON with a trailing newline, to `path` or stdout.
pub fn write_json<T: Serialize>(value: &T, path: Option<&Path>) -> std::io::Result<()> {
    let mut text = serde_json::to_string_pretty(value).map_err(std::io::Error::other)?;
    text.push('\n');
    match path {
        Some(p) => std::fs::write(p, text),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(text.as_bytes())
        }
    }
}
