//! Board model: row-major cell numbering, knight adjacency and the eight
//! symmetries of the square.

use std::fmt;

use thiserror::Error;

/// Errors raised when a coordinate or cell index falls outside a board.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoardError {
    #[error("coordinate ({row}, {col}) lies outside the {width}x{height} board")]
    OutOfBoard {
        row: i32,
        col: i32,
        width: u16,
        height: u16,
    },
    #[error("cell index {index} outside 1..={max}")]
    IndexOutOfRange { index: u32, max: u32 },
    #[error("board dimensions must be positive, got {width}x{height}")]
    EmptyBoard { width: u16, height: u16 },
}

/// A lattice point. Rows grow downward, columns grow rightward.
///
/// Coordinates are signed because symmetry images of a placed figure leave
/// the board until they are translated back.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coord {
    pub row: i32,
    pub col: i32,
}

impl Coord {
    pub const fn new(row: i32, col: i32) -> Self {
        Coord { row, col }
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.row, self.col)
    }
}

/// A 1-based, row-major cell number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellIndex(u16);

impl CellIndex {
    pub const fn new(value: u16) -> Self {
        CellIndex(value)
    }

    pub const fn get(self) -> u16 {
        self.0
    }
}

impl fmt::Display for CellIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Board dimensions. Cells are numbered `1..=width*height` row by row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoardSpec {
    width: u16,
    height: u16,
}

impl BoardSpec {
    pub fn new(width: u16, height: u16) -> Result<Self, BoardError> {
        if width == 0 || height == 0 {
            return Err(BoardError::EmptyBoard { width, height });
        }
        Ok(BoardSpec { width, height })
    }

    /// Square board of the given side.
    pub fn square(side: u16) -> Result<Self, BoardError> {
        Self::new(side, side)
    }

    /// The `(k+1) x (k+1)` board that holds every closed path of length `k`.
    pub fn for_length(k: usize) -> Self {
        let side = u16::try_from(k + 1).expect("cycle length fits the board type");
        BoardSpec {
            width: side,
            height: side,
        }
    }

    pub const fn width(&self) -> u16 {
        self.width
    }

    pub const fn height(&self) -> u16 {
        self.height
    }

    pub const fn cell_count(&self) -> u32 {
        self.width as u32 * self.height as u32
    }

    pub fn contains(&self, c: Coord) -> bool {
        c.row >= 0 && c.col >= 0 && c.row < self.height as i32 && c.col < self.width as i32
    }

    pub fn contains_index(&self, index: u32) -> bool {
        (1..=self.cell_count()).contains(&index)
    }
}

impl fmt::Display for BoardSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.width, self.height)
    }
}

pub fn index_of(c: Coord, b: BoardSpec) -> Result<CellIndex, BoardError> {
    if !b.contains(c) {
        return Err(BoardError::OutOfBoard {
            row: c.row,
            col: c.col,
            width: b.width,
            height: b.height,
        });
    }
    Ok(CellIndex((c.row * b.width as i32 + c.col + 1) as u16))
}

pub fn coord_of(i: CellIndex, b: BoardSpec) -> Result<Coord, BoardError> {
    let index = u32::from(i.0);
    if !b.contains_index(index) {
        return Err(BoardError::IndexOutOfRange {
            index,
            max: b.cell_count(),
        });
    }
    let zero = i32::from(i.0) - 1;
    let w = i32::from(b.width);
    Ok(Coord::new(zero / w, zero % w))
}

pub fn is_knight_move(a: Coord, b: Coord) -> bool {
    let dr = (a.row - b.row).abs();
    let dc = (a.col - b.col).abs();
    (dr == 1 && dc == 2) || (dr == 2 && dc == 1)
}

pub const KNIGHT_OFFSETS: [(i32, i32); 8] = [
    (-2, -1),
    (-2, 1),
    (-1, -2),
    (-1, 2),
    (1, -2),
    (1, 2),
    (2, -1),
    (2, 1),
];

/// On-board knight neighbours of `i` in ascending index order.
pub fn knight_neighbors(i: CellIndex, b: BoardSpec) -> Result<Vec<CellIndex>, BoardError> {
    let c = coord_of(i, b)?;
    // Offsets are listed row-major, so the output is already ascending.
    Ok(KNIGHT_OFFSETS
        .iter()
        .map(|&(dr, dc)| Coord::new(c.row + dr, c.col + dc))
        .filter(|n| b.contains(*n))
        .map(|n| index_of(n, b).expect("checked on board"))
        .collect())
}

/// The eight symmetries of the square acting on lattice points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DihedralElem {
    Identity,
    /// Counter-clockwise quarter turn.
    Rot90,
    Rot180,
    Rot270,
    /// Mirror in the vertical axis.
    FlipVertical,
    /// Mirror in the horizontal axis.
    FlipHorizontal,
    /// Mirror in the main diagonal (transpose).
    FlipDiagonal,
    /// Mirror in the anti-diagonal.
    FlipAntiDiagonal,
}

impl DihedralElem {
    pub const ALL: [DihedralElem; 8] = [
        DihedralElem::Identity,
        DihedralElem::Rot90,
        DihedralElem::Rot180,
        DihedralElem::Rot270,
        DihedralElem::FlipVertical,
        DihedralElem::FlipHorizontal,
        DihedralElem::FlipDiagonal,
        DihedralElem::FlipAntiDiagonal,
    ];

    pub fn apply(self, c: Coord) -> Coord {
        let Coord { row: r, col: c } = c;
        let (row, col) = match self {
            DihedralElem::Identity => (r, c),
            DihedralElem::Rot90 => (c, -r),
            DihedralElem::Rot180 => (-r, -c),
            DihedralElem::Rot270 => (-c, r),
            DihedralElem::FlipVertical => (r, -c),
            DihedralElem::FlipHorizontal => (-r, c),
            DihedralElem::FlipDiagonal => (c, r),
            DihedralElem::FlipAntiDiagonal => (-c, -r),
        };
        Coord::new(row, col)
    }

    /// `self.then(other)` applies `self` first, then `other`.
    pub fn then(self, other: DihedralElem) -> DihedralElem {
        // Probe with a point that has a trivial stabiliser.
        let probe = Coord::new(1, 2);
        let image = other.apply(self.apply(probe));
        DihedralElem::ALL
            .into_iter()
            .find(|e| e.apply(probe) == image)
            .expect("the dihedral group is closed")
    }

    pub fn inverse(self) -> DihedralElem {
        match self {
            DihedralElem::Rot90 => DihedralElem::Rot270,
            DihedralElem::Rot270 => DihedralElem::Rot90,
            other => other,
        }
    }
}

pub fn apply_dihedral(pts: &[Coord], e: DihedralElem) -> Vec<Coord> {
    pts.iter().map(|&p| e.apply(p)).collect()
}

/// Shifts all points so that the minimum row and minimum column are both 0.
///
/// Returns an empty vector for empty input.
pub fn normalize_translation(pts: &[Coord]) -> Vec<Coord> {
    let Some(min_row) = pts.iter().map(|p| p.row).min() else {
        return Vec::new();
    };
    let min_col = pts.iter().map(|p| p.col).min().unwrap_or(0);
    pts.iter()
        .map(|p| Coord::new(p.row - min_row, p.col - min_col))
        .collect()
}

/// Fixed-capacity bit set over cell indices `0..CellSet::CAPACITY`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct CellSet {
    words: [u64; 5],
}

impl CellSet {
    pub const CAPACITY: usize = 320;

    #[inline]
    pub fn insert(&mut self, cell: u16) {
        self.words[(cell >> 6) as usize] |= 1 << (cell & 63);
    }

    #[inline]
    pub fn remove(&mut self, cell: u16) {
        self.words[(cell >> 6) as usize] &= !(1 << (cell & 63));
    }

    #[inline]
    pub fn contains(&self, cell: u16) -> bool {
        self.words[(cell >> 6) as usize] & (1 << (cell & 63)) != 0
    }

    #[inline]
    pub fn is_disjoint(&self, other: &CellSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & b == 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }
}

/// Precomputed knight graph of one board.
///
/// Cells keep their 1-based numbers; slot 0 of every table is unused.
#[derive(Debug, Clone)]
pub struct KnightGraph {
    board: BoardSpec,
    neighbors: Vec<[u16; 8]>,
    degree: Vec<u8>,
    rows: Vec<i32>,
    cols: Vec<i32>,
}

impl KnightGraph {
    pub fn new(board: BoardSpec) -> Self {
        let n = board.cell_count() as usize;
        let mut neighbors = vec![[0u16; 8]; n + 1];
        let mut degree = vec![0u8; n + 1];
        let mut rows = vec![0i32; n + 1];
        let mut cols = vec![0i32; n + 1];
        for idx in 1..=n {
            let cell = CellIndex(idx as u16);
            let c = coord_of(cell, board).expect("index in range");
            rows[idx] = c.row;
            cols[idx] = c.col;
            let adj = knight_neighbors(cell, board).expect("index in range");
            degree[idx] = adj.len() as u8;
            for (slot, v) in neighbors[idx].iter_mut().zip(adj) {
                *slot = v.get();
            }
        }
        KnightGraph {
            board,
            neighbors,
            degree,
            rows,
            cols,
        }
    }

    pub fn board(&self) -> BoardSpec {
        self.board
    }

    #[inline]
    pub fn neighbors(&self, cell: u16) -> &[u16] {
        let i = cell as usize;
        &self.neighbors[i][..self.degree[i] as usize]
    }

    #[inline]
    pub fn row(&self, cell: u16) -> i32 {
        self.rows[cell as usize]
    }

    #[inline]
    pub fn col(&self, cell: u16) -> i32 {
        self.cols[cell as usize]
    }

    #[inline]
    pub fn coord(&self, cell: u16) -> Coord {
        Coord::new(self.row(cell), self.col(cell))
    }

    #[inline]
    pub fn adjacent(&self, a: u16, b: u16) -> bool {
        let dr = (self.row(a) - self.row(b)).abs();
        let dc = (self.col(a) - self.col(b)).abs();
        dr * dc == 2
    }

    /// Number of undirected edges.
    pub fn edge_count(&self) -> usize {
        self.degree.iter().map(|&d| d as usize).sum::<usize>() / 2
    }

    /// Knight distances from `target` to every cell (`u8::MAX` when unreachable).
    pub fn distances_to(&self, target: u16) -> Vec<u8> {
        let mut dist = vec![u8::MAX; self.neighbors.len()];
        let mut queue = std::collections::VecDeque::new();
        dist[target as usize] = 0;
        queue.push_back(target);
        while let Some(u) = queue.pop_front() {
            let d = dist[u as usize];
            for &v in self.neighbors(u) {
                if dist[v as usize] == u8::MAX {
                    dist[v as usize] = d + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }
}
