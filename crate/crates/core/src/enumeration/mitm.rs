use super::{Acceptor, Context, EnumerationError, ShardOutcome};
use crate::board::{BoardSpec, CellSet, KnightGraph};
use crate::cycle::CycleSeq;

/// An open knight path from `s` to `t` with `k/2` edges that never visits a
/// cell numbered below `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfPath {
    cells: Vec<u16>,
    visited: CellSet,
    board: BoardSpec,
}

impl HalfPath {
    pub fn cells(&self) -> &[u16] {
        &self.cells
    }

    pub fn visited(&self) -> &CellSet {
        &self.visited
    }

    pub fn start(&self) -> u16 {
        self.cells[0]
    }

    pub fn end(&self) -> u16 {
        self.cells[self.cells.len() - 1]
    }

    pub fn board(&self) -> BoardSpec {
        self.board
    }

    fn interior(&self) -> CellSet {
        let mut set = self.visited;
        set.remove(self.start());
        set.remove(self.end());
        set
    }
}

/// Depth-first generator of half paths, pruned by knight distance to `t`.
struct Generator<'a> {
    graph: &'a KnightGraph,
    s: u16,
    t: u16,
    edges: usize,
    dist_to_t: Vec<u8>,
    path: Vec<u16>,
    visited: CellSet,
    cells: Vec<u16>,
    interiors: Vec<CellSet>,
    max_paths: usize,
    exceeded: bool,
}

impl<'a> Generator<'a> {
    fn new(graph: &'a KnightGraph, s: u16, t: u16, edges: usize, max_paths: usize) -> Self {
        Generator {
            graph,
            s,
            t,
            edges,
            dist_to_t: graph.distances_to(t),
            path: vec![0; edges + 1],
            visited: CellSet::default(),
            cells: Vec::new(),
            interiors: Vec::new(),
            max_paths,
            exceeded: false,
        }
    }

    fn run(mut self) -> Self {
        if self.t > self.s && usize::from(self.dist_to_t[self.s as usize]) <= self.edges {
            self.path[0] = self.s;
            self.visited.insert(self.s);
            self.grow(1);
        }
        self
    }

    fn grow(&mut self, len: usize) {
        if self.exceeded {
            return;
        }
        let remaining = self.edges + 1 - len;
        let u = self.path[len - 1];
        if remaining == 0 {
            if u == self.t {
                self.record();
            }
            return;
        }
        let graph = self.graph;
        for &v in graph.neighbors(u) {
            if v > self.s
                && !self.visited.contains(v)
                && usize::from(self.dist_to_t[v as usize]) < remaining
                && (v != self.t || remaining == 1)
            {
                self.path[len] = v;
                self.visited.insert(v);
                self.grow(len + 1);
                self.visited.remove(v);
            }
        }
    }

    fn record(&mut self) {
        if self.interiors.len() == self.max_paths {
            self.exceeded = true;
            return;
        }
        let mut interior = self.visited;
        interior.remove(self.s);
        interior.remove(self.t);
        self.interiors.push(interior);
        self.cells.extend_from_slice(&self.path);
    }
}

/// Every half path from `s` to `t` of `k/2` edges on `board`, in
/// lexicographic order.
///
/// # Panics
///
/// If `board` has more cells than a [`CellSet`] can hold.
pub fn half_paths(s: u16, t: u16, k: usize, board: BoardSpec) -> Vec<HalfPath> {
    assert!(
        (board.cell_count() as usize) < CellSet::CAPACITY,
        "board {board} is too large"
    );
    let graph = KnightGraph::new(board);
    if !board.contains_index(u32::from(s)) || !board.contains_index(u32::from(t)) {
        return Vec::new();
    }
    let edges = k / 2;
    let gen = Generator::new(&graph, s, t, edges, usize::MAX).run();
    gen.cells
        .chunks_exact(edges + 1)
        .map(|cells| {
            let mut visited = CellSet::default();
            cells.iter().for_each(|&c| visited.insert(c));
            HalfPath {
                cells: cells.to_vec(),
                visited,
                board,
            }
        })
        .collect()
}

/// Joins `a` with `b` walked backwards. Returns `None` when the halves are
/// equal or share a cell besides their endpoints.
pub fn assemble(a: &HalfPath, b: &HalfPath) -> Result<Option<CycleSeq>, EnumerationError> {
    if a.start() != b.start() || a.end() != b.end() || a.cells.len() != b.cells.len() {
        return Err(EnumerationError::MismatchedEndpoints {
            a: (a.start(), a.end()),
            b: (b.start(), b.end()),
        });
    }
    if a.cells == b.cells || !a.interior().is_disjoint(&b.interior()) {
        return Ok(None);
    }
    let h = b.cells.len();
    let mut cells = a.cells.clone();
    cells.extend(b.cells[1..h - 1].iter().rev());
    Ok(Some(CycleSeq::from_trusted(cells, a.board)))
}

/// Antipodal cells worth trying for start `s`.
pub(super) fn shards(ctx: &Context, s: u16) -> Vec<u16> {
    let n = ctx.graph.board().cell_count() as u16;
    (s + 1..=n).collect()
}

pub(super) fn run(ctx: &Context, s: u16, t: u16) -> Result<ShardOutcome, EnumerationError> {
    let half = ctx.k / 2;
    let h = half + 1;
    let max_paths = match ctx.memory_budget {
        Some(budget) => budget / (h * std::mem::size_of::<u16>() + std::mem::size_of::<CellSet>()),
        None => usize::MAX,
    };
    let gen = Generator::new(&ctx.graph, s, t, half, max_paths).run();
    if gen.exceeded {
        return Err(EnumerationError::MemoryBudget {
            s,
            t,
            budget: ctx.memory_budget.unwrap_or_default(),
        });
    }
    let cells = &gen.cells;
    let interiors = &gen.interiors;
    let n = interiors.len();
    let second = |i: usize| cells[i * h + 1];
    debug_assert!((1..n).all(|i| second(i - 1) <= second(i)));

    let mut acceptor = Acceptor::new(ctx);
    let mut cycle = vec![0u16; ctx.k];
    // A canonical sequence has its second cell below its last, so `b` only
    // ranges over halves whose first step is larger than `a`'s.
    let mut later = 0;
    for a in 0..n {
        while later < n && second(later) <= second(a) {
            later += 1;
        }
        let a_cells = &cells[a * h..(a + 1) * h];
        let a_interior = &interiors[a];
        for b in later..n {
            if !a_interior.is_disjoint(&interiors[b]) {
                continue;
            }
            let b_cells = &cells[b * h..(b + 1) * h];
            cycle[..h].copy_from_slice(a_cells);
            for (slot, &c) in cycle[h..].iter_mut().zip(b_cells[1..half].iter().rev()) {
                *slot = c;
            }
            acceptor.offer(&cycle);
        }
    }
    Ok(acceptor.outcome)
}
