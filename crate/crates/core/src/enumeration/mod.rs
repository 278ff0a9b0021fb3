//! Construction of every inequivalent closed knight path of a given length.
//!
//! Two engines share one driver:
//!
//! * [`Algorithm::Dfs`] grows paths of `k` cells from each start cell by
//!   backtracking and keeps the closed ones that are written canonically.
//! * [`Algorithm::Mitm`] builds all `k/2`-edge paths between a start cell `s`
//!   and an antipodal cell `t`, then glues pairs with disjoint interiors.
//!
//! Every canonical sequence starts at a top-row cell `s <= k/2 + 1` and uses
//! no cell smaller than `s`, so both engines restrict the search to cells
//! above the start. Each class is accepted exactly once because only its
//! canonical sequence passes the minimality test, so no cross-shard
//! deduplication is needed.
//!
//! Work is split into shards (start cell and path prefix for DFS, `(s, t)`
//! pairs for meet-in-the-middle). Shards of one start cell run on the
//! executor; their outputs are merged in shard order and sorted before they
//! reach the sink, so results do not depend on scheduling.

mod dfs;
mod mitm;
mod parallel;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::board::{BoardSpec, Coord, KnightGraph};
use crate::cycle::CanonicalKey;
use crate::geometry::is_simple_polygon;

pub use mitm::{assemble, half_paths, HalfPath};

pub type SinkError = Box<dyn std::error::Error + Send + Sync>;

#[derive(Debug, Error)]
pub enum EnumerationError {
    #[error("cycle length {0} is not supported (need an even value in 4..=16)")]
    InvalidLength(usize),
    #[error("jobs must be at least 1")]
    InvalidJobs,
    #[error("failed to start worker pool: {0}")]
    ThreadPool(String),
    #[error("half-path list for s={s}, t={t} exceeds the memory budget of {budget} bytes")]
    MemoryBudget { s: u16, t: u16, budget: usize },
    #[error("half paths {a:?} and {b:?} do not share endpoints")]
    MismatchedEndpoints { a: (u16, u16), b: (u16, u16) },
    #[error("cycle sink failed: {0}")]
    Sink(#[source] SinkError),
}

/// Longest supported cycle: its board must fit a [`crate::board::CellSet`].
pub const MAX_LENGTH: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Dfs,
    Mitm,
}

impl Algorithm {
    pub const ALL: [Algorithm; 2] = [Algorithm::Dfs, Algorithm::Mitm];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Dfs => "dfs",
            Algorithm::Mitm => "mitm",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dfs" => Ok(Algorithm::Dfs),
            "mitm" => Ok(Algorithm::Mitm),
            other => Err(format!(
                "unknown algorithm `{other}` (expected dfs or mitm)"
            )),
        }
    }
}

/// Candidate start cells `1..=k/2+1` on the `(k+1) x (k+1)` board.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StartSet {
    k: usize,
    cells: Vec<u16>,
}

impl StartSet {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn cells(&self) -> &[u16] {
        &self.cells
    }
}

pub fn start_set(k: usize) -> Result<StartSet, EnumerationError> {
    check_length(k)?;
    Ok(StartSet {
        k,
        cells: (1..=(k / 2 + 1) as u16).collect(),
    })
}

fn check_length(k: usize) -> Result<(), EnumerationError> {
    if k < 4 || k % 2 == 1 || k > MAX_LENGTH {
        return Err(EnumerationError::InvalidLength(k));
    }
    Ok(())
}

#[derive(Debug, Clone)]
pub struct EnumerationOptions {
    /// Worker threads. `1` runs everything on the calling thread.
    pub jobs: usize,
    /// Also count the non-self-intersecting cycles.
    pub count_simple: bool,
    /// Deliver only non-self-intersecting cycles to the sink. Implies
    /// `count_simple`.
    pub emit_simple_only: bool,
    /// Upper bound in bytes for the half-path list of a single `(s, t)` pair.
    pub memory_budget: Option<usize>,
    /// Length of the path prefixes used to split DFS work.
    pub dfs_split_depth: usize,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            jobs: 1,
            count_simple: false,
            emit_simple_only: false,
            memory_budget: None,
            dfs_split_depth: 3,
        }
    }
}

impl EnumerationOptions {
    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }

    pub fn with_simple(mut self) -> Self {
        self.count_simple = true;
        self
    }
}

#[derive(Debug, Clone)]
pub struct EnumerationSummary {
    pub k: usize,
    pub algorithm: Algorithm,
    /// Inequivalent cycles found.
    pub total: u64,
    /// Non-self-intersecting cycles among them, when counted.
    pub simple: Option<u64>,
    pub per_start: BTreeMap<u16, u64>,
    pub elapsed: Duration,
}

impl EnumerationSummary {
    /// Compares everything except the wall time.
    pub fn same_counts(&self, other: &EnumerationSummary) -> bool {
        self.k == other.k
            && self.total == other.total
            && self.simple == other.simple
            && self.per_start == other.per_start
    }
}

/// Receives canonical cycles in ascending order, one at a time.
pub trait CycleSink {
    fn accept(&mut self, cycle: &CanonicalKey) -> Result<(), SinkError>;
}

impl CycleSink for Vec<CanonicalKey> {
    fn accept(&mut self, cycle: &CanonicalKey) -> Result<(), SinkError> {
        self.push(cycle.clone());
        Ok(())
    }
}

/// Adapts a closure into a sink.
pub struct FnSink<F>(pub F);

impl<F> CycleSink for FnSink<F>
where
    F: FnMut(&CanonicalKey) -> Result<(), SinkError>,
{
    fn accept(&mut self, cycle: &CanonicalKey) -> Result<(), SinkError> {
        (self.0)(cycle)
    }
}

/// Shared, read-only state of one enumeration run.
pub(crate) struct Context {
    pub(crate) k: usize,
    pub(crate) graph: KnightGraph,
    rows: Vec<i32>,
    cols: Vec<i32>,
    pub(crate) count_simple: bool,
    pub(crate) emit_simple_only: bool,
    pub(crate) collect: bool,
    pub(crate) memory_budget: Option<usize>,
}

impl Context {
    fn new(k: usize, options: &EnumerationOptions, collect: bool) -> Self {
        let board = BoardSpec::for_length(k);
        let graph = KnightGraph::new(board);
        let n = board.cell_count() as u16;
        let rows = (0..=n)
            .map(|i| if i == 0 { 0 } else { graph.row(i) })
            .collect();
        let cols = (0..=n)
            .map(|i| if i == 0 { 0 } else { graph.col(i) })
            .collect();
        Context {
            k,
            graph,
            rows,
            cols,
            count_simple: options.count_simple || options.emit_simple_only,
            emit_simple_only: options.emit_simple_only,
            collect,
            memory_budget: options.memory_budget,
        }
    }
}

/// Counts and collected cycles of one shard.
#[derive(Debug, Default)]
pub(crate) struct ShardOutcome {
    pub(crate) total: u64,
    pub(crate) simple: u64,
    /// Emitted cycles, `k` cells each, concatenated.
    pub(crate) cycles: Vec<u16>,
}

/// Per-shard scratch space shared by both engines.
pub(crate) struct Acceptor<'a> {
    ctx: &'a Context,
    checker: crate::cycle::MinimalityChecker,
    points: Vec<Coord>,
    pub(crate) outcome: ShardOutcome,
}

impl<'a> Acceptor<'a> {
    pub(crate) fn new(ctx: &'a Context) -> Self {
        Acceptor {
            ctx,
            checker: Default::default(),
            points: Vec::with_capacity(ctx.k),
            outcome: ShardOutcome::default(),
        }
    }

    /// Records `cycle` if it is the canonical representative of its class.
    #[inline]
    pub(crate) fn offer(&mut self, cycle: &[u16]) {
        if !self
            .checker
            .is_minimal_cells(cycle, &self.ctx.rows, &self.ctx.cols)
        {
            return;
        }
        self.outcome.total += 1;
        let mut emit = self.ctx.collect;
        if self.ctx.count_simple {
            self.points.clear();
            self.points
                .extend(cycle.iter().map(|&c| self.ctx.graph.coord(c)));
            let simple = is_simple_polygon(&self.points);
            if simple {
                self.outcome.simple += 1;
            }
            emit &= simple || !self.ctx.emit_simple_only;
        }
        if emit {
            self.outcome.cycles.extend_from_slice(cycle);
        }
    }
}

/// Runs `algorithm` for cycles of length `k`, streaming canonical cycles to
/// `sink` in ascending order when one is given.
pub fn enumerate(
    k: usize,
    algorithm: Algorithm,
    options: &EnumerationOptions,
    mut sink: Option<&mut dyn CycleSink>,
) -> Result<EnumerationSummary, EnumerationError> {
    let started = Instant::now();
    let starts = start_set(k)?;
    let executor = parallel::Executor::new(options.jobs)?;
    let ctx = Context::new(k, options, sink.is_some());
    let board = ctx.graph.board();

    let mut total = 0u64;
    let mut simple = 0u64;
    let mut per_start = BTreeMap::new();
    for &s in starts.cells() {
        let outcomes = match algorithm {
            Algorithm::Dfs => {
                let shards = dfs::shards(&ctx, s, options.dfs_split_depth);
                executor.map(&shards, |prefix| Ok(dfs::run(&ctx, prefix)))?
            }
            Algorithm::Mitm => {
                let shards = mitm::shards(&ctx, s);
                executor.map(&shards, |&t| mitm::run(&ctx, s, t))?
            }
        };

        let mut start_total = 0;
        let mut emitted: Vec<&[u16]> = Vec::new();
        for o in &outcomes {
            start_total += o.total;
            simple += o.simple;
            emitted.extend(o.cycles.chunks_exact(k));
        }
        total += start_total;
        per_start.insert(s, start_total);

        if let Some(sink) = sink.as_deref_mut() {
            emitted.sort_unstable();
            for cells in emitted {
                let key = CanonicalKey::from_trusted(cells.to_vec(), board);
                sink.accept(&key).map_err(EnumerationError::Sink)?;
            }
        }
    }

    Ok(EnumerationSummary {
        k,
        algorithm,
        total,
        simple: ctx.count_simple.then_some(simple),
        per_start,
        elapsed: started.elapsed(),
    })
}

/// Exhaustive backtracking over paths of `k` cells.
pub fn enumerate_dfs(
    k: usize,
    sink: Option<&mut dyn CycleSink>,
    options: &EnumerationOptions,
) -> Result<EnumerationSummary, EnumerationError> {
    enumerate(k, Algorithm::Dfs, options, sink)
}

/// Half-path assembly.
pub fn enumerate_mitm(
    k: usize,
    sink: Option<&mut dyn CycleSink>,
    options: &EnumerationOptions,
) -> Result<EnumerationSummary, EnumerationError> {
    enumerate(k, Algorithm::Mitm, options, sink)
}

/// Collects the full sorted listing of canonical cycles.
pub fn canonical_listing(
    k: usize,
    algorithm: Algorithm,
    options: &EnumerationOptions,
) -> Result<(EnumerationSummary, Vec<CanonicalKey>), EnumerationError> {
    let mut keys = Vec::new();
    let summary = enumerate(k, algorithm, options, Some(&mut keys))?;
    Ok((summary, keys))
}
