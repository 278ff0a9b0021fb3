//! Closed knight cycles and their canonical forms.
//!
//! A cycle placed on a board can be written down in `2k` ways (start cell and
//! direction). Two placements are equivalent when one maps onto the other by
//! a translation and one of the eight symmetries of the square. The canonical
//! form is the lexicographically smallest index sequence over all of these
//! choices, expressed on a square board.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::board::{
    apply_dihedral, coord_of, index_of, is_knight_move, normalize_translation, BoardSpec,
    CellIndex, Coord, DihedralElem,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleError {
    #[error("cycle length {len} is odd")]
    OddLength { len: usize },
    #[error("cycle length {len} is below the minimum of 4")]
    TooShort { len: usize },
    #[error("cell {cell} at position {position} is outside the {board} board")]
    IndexOutOfRange {
        position: usize,
        cell: u32,
        board: BoardSpec,
    },
    #[error("cell {cell} at position {position} repeats position {first}")]
    DuplicateCell {
        position: usize,
        first: usize,
        cell: u16,
    },
    #[error("step {from} -> {to} at position {position} is not a knight move")]
    NotKnightMove { position: usize, from: u16, to: u16 },
    #[error("last cell {last} is not a knight move away from first cell {first}")]
    OpenEndpoints { first: u16, last: u16 },
}

/// A closed knight cycle: `k` distinct cells, each a knight move from the
/// next, with the last cell a knight move from the first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleSeq {
    cells: Vec<u16>,
    board: BoardSpec,
}

pub fn validate_cycle(cells: &[u16], board: BoardSpec) -> Result<CycleSeq, CycleError> {
    let len = cells.len();
    if len % 2 == 1 {
        return Err(CycleError::OddLength { len });
    }
    if len < 4 {
        return Err(CycleError::TooShort { len });
    }
    let mut coords = Vec::with_capacity(len);
    for (position, &cell) in cells.iter().enumerate() {
        let c = coord_of(CellIndex::new(cell), board).map_err(|_| CycleError::IndexOutOfRange {
            position,
            cell: u32::from(cell),
            board,
        })?;
        coords.push(c);
    }
    let mut seen = std::collections::HashMap::with_capacity(len);
    for (position, &cell) in cells.iter().enumerate() {
        if let Some(&first) = seen.get(&cell) {
            return Err(CycleError::DuplicateCell {
                position,
                first,
                cell,
            });
        }
        seen.insert(cell, position);
    }
    for position in 1..len {
        if !is_knight_move(coords[position - 1], coords[position]) {
            return Err(CycleError::NotKnightMove {
                position,
                from: cells[position - 1],
                to: cells[position],
            });
        }
    }
    if !is_knight_move(coords[len - 1], coords[0]) {
        return Err(CycleError::OpenEndpoints {
            first: cells[0],
            last: cells[len - 1],
        });
    }
    Ok(CycleSeq {
        cells: cells.to_vec(),
        board,
    })
}

impl CycleSeq {
    /// Wraps cells already known to form a valid cycle.
    pub(crate) fn from_trusted(cells: Vec<u16>, board: BoardSpec) -> Self {
        debug_assert!(validate_cycle(&cells, board).is_ok());
        CycleSeq { cells, board }
    }

    pub fn cells(&self) -> &[u16] {
        &self.cells
    }

    pub fn board(&self) -> BoardSpec {
        self.board
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn coords(&self) -> Vec<Coord> {
        self.cells
            .iter()
            .map(|&i| coord_of(CellIndex::new(i), self.board).expect("validated cycle"))
            .collect()
    }

    /// The same placement numbered on another board.
    pub fn reembed(&self, board: BoardSpec) -> Result<CycleSeq, CycleError> {
        let mut cells = Vec::with_capacity(self.len());
        for (position, c) in self.coords().into_iter().enumerate() {
            let idx = index_of(c, board).map_err(|_| CycleError::IndexOutOfRange {
                position,
                cell: u32::from(self.cells[position]),
                board,
            })?;
            cells.push(idx.get());
        }
        Ok(CycleSeq { cells, board })
    }

    /// Start cell rotated to `offset` and, optionally, the direction reversed.
    pub fn rotated(&self, offset: usize, reversed: bool) -> CycleSeq {
        let k = self.len();
        let cells = (0..k)
            .map(|i| {
                let j = if reversed {
                    (offset + k - i) % k
                } else {
                    (offset + i) % k
                };
                self.cells[j]
            })
            .collect();
        CycleSeq {
            cells,
            board: self.board,
        }
    }

    /// Image under `e`, translated back to the origin, on a board large enough
    /// to hold it.
    pub fn transformed(&self, e: DihedralElem) -> CycleSeq {
        let board = canonical_board(self.board);
        let pts = normalize_translation(&apply_dihedral(&self.coords(), e));
        CycleSeq {
            cells: encode(&pts, board),
            board,
        }
    }
}

impl fmt::Display for CycleSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.cells, ",")
    }
}

/// The canonical representative of an equivalence class.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey {
    cells: Vec<u16>,
    board: BoardSpec,
}

impl CanonicalKey {
    pub(crate) fn from_trusted(cells: Vec<u16>, board: BoardSpec) -> Self {
        CanonicalKey { cells, board }
    }

    pub fn cells(&self) -> &[u16] {
        &self.cells
    }

    pub fn board(&self) -> BoardSpec {
        self.board
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn to_cycle(&self) -> CycleSeq {
        CycleSeq {
            cells: self.cells.clone(),
            board: self.board,
        }
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.cells, ",")
    }
}

/// Symmetry-minimised sorted cell set of a cycle.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellSetKey {
    cells: Vec<u16>,
    board: BoardSpec,
}

impl CellSetKey {
    pub fn cells(&self) -> &[u16] {
        &self.cells
    }

    pub fn board(&self) -> BoardSpec {
        self.board
    }
}

impl fmt::Display for CellSetKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.cells, ",")
    }
}

fn write_joined(f: &mut fmt::Formatter<'_>, cells: &[u16], sep: &str) -> fmt::Result {
    for (i, c) in cells.iter().enumerate() {
        if i > 0 {
            f.write_str(sep)?;
        }
        write!(f, "{c}")?;
    }
    Ok(())
}

/// Canonical forms live on a square board wide enough for every symmetry
/// image of a figure that fits `board`.
pub fn canonical_board(board: BoardSpec) -> BoardSpec {
    BoardSpec::square(board.width().max(board.height())).expect("non-empty board")
}

fn encode(pts: &[Coord], board: BoardSpec) -> Vec<u16> {
    pts.iter()
        .map(|&p| {
            index_of(p, board)
                .expect("image fits the canonical board")
                .get()
        })
        .collect()
}

/// Smallest coordinate sequence over all 16k representations. Row-major
/// comparison of coordinates matches comparison of cell indices for any
/// figure that fits a board.
fn canonical_coords(c: &CycleSeq) -> Vec<Coord> {
    let coords = c.coords();
    let k = coords.len();
    let mut best: Option<Vec<Coord>> = None;
    let mut candidate = Vec::with_capacity(k);
    for e in DihedralElem::ALL {
        let image = normalize_translation(&apply_dihedral(&coords, e));
        for start in 0..k {
            for reversed in [false, true] {
                candidate.clear();
                candidate.extend((0..k).map(|i| {
                    let j = if reversed {
                        (start + k - i) % k
                    } else {
                        (start + i) % k
                    };
                    image[j]
                }));
                if best.as_ref().is_none_or(|b| candidate < *b) {
                    best = Some(candidate.clone());
                }
            }
        }
    }
    best.expect("cycles are non-empty")
}

pub fn canonicalize(c: &CycleSeq) -> CanonicalKey {
    let board = canonical_board(c.board);
    CanonicalKey {
        cells: encode(&canonical_coords(c), board),
        board,
    }
}

/// True when `c` is already written as its canonical representative.
///
/// Checks only the 16 candidates that can beat `c`: each symmetry image
/// read from its smallest cell in both directions.
pub fn is_minimal(c: &CycleSeq) -> bool {
    MinimalityChecker::default().is_minimal(c.coords())
}

pub fn are_equivalent(a: &CycleSeq, b: &CycleSeq) -> bool {
    a.len() == b.len() && canonical_coords(a) == canonical_coords(b)
}

pub fn canonical_cell_set(c: &CycleSeq) -> CellSetKey {
    let board = canonical_board(c.board);
    let coords = c.coords();
    let best = DihedralElem::ALL
        .into_iter()
        .map(|e| {
            let mut img = normalize_translation(&apply_dihedral(&coords, e));
            img.sort_unstable();
            img
        })
        .min()
        .expect("eight images");
    CellSetKey {
        cells: encode(&best, board),
        board,
    }
}

/// Reusable scratch space for the early-exit minimality test.
///
/// Points are packed as `row << 16 | col`, which orders them row-major for
/// any non-negative coordinates below 2^15.
#[derive(Debug, Default, Clone)]
pub struct MinimalityChecker {
    orig: Vec<i32>,
    rows: Vec<i32>,
    cols: Vec<i32>,
    image: Vec<i32>,
}

const SYMMETRY_PARAMS: [(bool, i32, i32); 8] = [
    // (swap axes, row sign, col sign) for each element of DihedralElem::ALL
    (false, 1, 1),
    (true, 1, -1),
    (false, -1, -1),
    (true, -1, 1),
    (false, 1, -1),
    (false, -1, 1),
    (true, 1, 1),
    (true, -1, -1),
];

#[inline]
fn pack(row: i32, col: i32) -> i32 {
    (row << 16) | col
}

impl MinimalityChecker {
    /// `coords` must be on-board (non-negative) points of a closed cycle.
    pub fn is_minimal<I>(&mut self, coords: I) -> bool
    where
        I: IntoIterator<Item = Coord>,
    {
        self.rows.clear();
        self.cols.clear();
        for c in coords {
            self.rows.push(c.row);
            self.cols.push(c.col);
        }
        self.check_loaded()
    }

    /// Same test, reading coordinates through row/column lookup tables.
    #[inline]
    pub(crate) fn is_minimal_cells(&mut self, cells: &[u16], rows: &[i32], cols: &[i32]) -> bool {
        self.rows.clear();
        self.cols.clear();
        for &c in cells {
            self.rows.push(rows[c as usize]);
            self.cols.push(cols[c as usize]);
        }
        self.check_loaded()
    }

    fn check_loaded(&mut self) -> bool {
        let k = self.rows.len();
        self.orig.clear();
        self.orig
            .extend(self.rows.iter().zip(&self.cols).map(|(&r, &c)| pack(r, c)));
        self.image.resize(k, 0);
        let first = self.orig[0];

        for &(swap, sr, sc) in &SYMMETRY_PARAMS {
            let (src_r, src_c) = if swap {
                (&self.cols, &self.rows)
            } else {
                (&self.rows, &self.cols)
            };
            let mut min_r = i32::MAX;
            let mut min_c = i32::MAX;
            for i in 0..k {
                min_r = min_r.min(sr * src_r[i]);
                min_c = min_c.min(sc * src_c[i]);
            }
            let mut best = i32::MAX;
            let mut at = 0;
            for i in 0..k {
                let p = pack(sr * src_r[i] - min_r, sc * src_c[i] - min_c);
                self.image[i] = p;
                if p < best {
                    best = p;
                    at = i;
                }
            }
            match best.cmp(&first) {
                Ordering::Less => return false,
                Ordering::Greater => continue,
                Ordering::Equal => {}
            }
            let forward = (1..k).map(|i| self.image[(at + i) % k]);
            if lex_cmp(forward, &self.orig[1..]) == Ordering::Less {
                return false;
            }
            let backward = (1..k).map(|i| self.image[(at + k - i) % k]);
            if lex_cmp(backward, &self.orig[1..]) == Ordering::Less {
                return false;
            }
        }
        true
    }
}

#[inline]
fn lex_cmp(candidate: impl Iterator<Item = i32>, reference: &[i32]) -> Ordering {
    for (a, &b) in candidate.zip(reference) {
        match a.cmp(&b) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}
