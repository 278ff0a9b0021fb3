//! Independent oracles shared by the integration suites. None of them use
//! the crate's minimality test, enumeration engines or orientation
//! predicates.

#![allow(dead_code)]

use std::collections::BTreeSet;

use knight_cycles::board::{BoardSpec, Coord, KnightGraph};
use knight_cycles::cycle::{canonicalize, validate_cycle, CanonicalKey, CycleSeq};
use num_rational::Ratio;

const OFFSETS: [(i32, i32); 8] = [
    (-2, -1),
    (-2, 1),
    (-1, -2),
    (-1, 2),
    (1, -2),
    (1, 2),
    (2, -1),
    (2, 1),
];

type Pt = (i32, i32);

fn image(g: usize, (r, c): Pt) -> Pt {
    match g {
        0 => (r, c),
        1 => (c, -r),
        2 => (-r, -c),
        3 => (-c, r),
        4 => (r, -c),
        5 => (-r, c),
        6 => (c, r),
        _ => (-c, -r),
    }
}

/// Sorted undirected edges after moving the figure to the origin.
fn edge_set(pts: &[Pt]) -> Vec<(Pt, Pt)> {
    let mr = pts.iter().map(|p| p.0).min().unwrap();
    let mc = pts.iter().map(|p| p.1).min().unwrap();
    let q: Vec<Pt> = pts.iter().map(|p| (p.0 - mr, p.1 - mc)).collect();
    let k = q.len();
    let mut e: Vec<(Pt, Pt)> = (0..k)
        .map(|i| {
            let (a, b) = (q[i], q[(i + 1) % k]);
            if a < b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    e.sort_unstable();
    e
}

/// Visits one directed representative of every translation class of closed
/// knight paths of length `k` on the unbounded lattice: the walk starts at
/// the row-major smallest vertex, placed at the origin, and leaves through
/// the smaller of its two neighbours.
pub fn for_each_translation_class(k: usize, mut f: impl FnMut(&[Pt])) {
    fn walk(path: &mut Vec<Pt>, k: usize, f: &mut dyn FnMut(&[Pt])) {
        let u = *path.last().unwrap();
        if path.len() == k {
            let d = (u.0.abs(), u.1.abs());
            if (d == (1, 2) || d == (2, 1)) && path[1] < path[k - 1] {
                f(path);
            }
            return;
        }
        for (dr, dc) in OFFSETS {
            let v = (u.0 + dr, u.1 + dc);
            if v > (0, 0) && !path.contains(&v) {
                path.push(v);
                walk(path, k, f);
                path.pop();
            }
        }
    }
    walk(&mut vec![(0, 0)], k, &mut f);
}

/// Number of classes under translation, rotation and reflection, by
/// Burnside's lemma over the translation classes.
pub fn burnside_class_count(k: usize) -> u64 {
    let mut stabiliser_sum = 0u64;
    for_each_translation_class(k, |path| {
        let base = edge_set(path);
        stabiliser_sum += (0..8)
            .filter(|&g| {
                let im: Vec<Pt> = path.iter().map(|&p| image(g, p)).collect();
                edge_set(&im) == base
            })
            .count() as u64;
    });
    assert_eq!(stabiliser_sum % 8, 0);
    stabiliser_sum / 8
}

/// The translation class representative as a cycle on the `(k+1)^2` board,
/// shifted so it touches row 0 and column 0.
pub fn placed(path: &[Pt], k: usize) -> CycleSeq {
    let board = BoardSpec::for_length(k);
    let mc = path.iter().map(|p| p.1).min().unwrap();
    let cells: Vec<u16> = path
        .iter()
        .map(|&(r, c)| (r * (k as i32 + 1) + (c - mc) + 1) as u16)
        .collect();
    validate_cycle(&cells, board).unwrap()
}

/// Every directed closed path of length `k` on `board`, all starts and both
/// directions, without any pruning.
pub fn all_directed_cycles(k: usize, board: BoardSpec) -> Vec<Vec<u16>> {
    let g = KnightGraph::new(board);
    let n = board.cell_count() as u16;
    let mut out = Vec::new();
    fn grow(g: &KnightGraph, k: usize, path: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        let u = *path.last().unwrap();
        if path.len() == k {
            if g.adjacent(u, path[0]) {
                out.push(path.clone());
            }
            return;
        }
        for &v in g.neighbors(u) {
            if !path.contains(&v) {
                path.push(v);
                grow(g, k, path, out);
                path.pop();
            }
        }
    }
    for s in 1..=n {
        grow(&g, k, &mut vec![s], &mut out);
    }
    out
}

/// Class set from unpruned backtracking followed by canonicalisation and
/// deduplication.
pub fn brute_force_classes(k: usize) -> BTreeSet<CanonicalKey> {
    let board = BoardSpec::for_length(k);
    all_directed_cycles(k, board)
        .into_iter()
        .map(|cells| canonicalize(&validate_cycle(&cells, board).unwrap()))
        .collect()
}

type Q = Ratio<i64>;

fn q(v: i32) -> Q {
    Q::from_integer(i64::from(v))
}

/// All points shared by two closed segments, as a description: `None` when
/// disjoint, otherwise the parameter interval on the first segment.
fn shared_interval(a: Coord, b: Coord, c: Coord, d: Coord) -> Option<(Q, Q)> {
    // a + t (b - a) = c + u (d - c)
    let (bx, by) = (q(b.row - a.row), q(b.col - a.col));
    let (dx, dy) = (q(d.row - c.row), q(d.col - c.col));
    let (cx, cy) = (q(c.row - a.row), q(c.col - a.col));
    let den = bx * dy - by * dx;
    let zero = Q::from_integer(0);
    let one = Q::from_integer(1);
    if den != zero {
        let t = (cx * dy - cy * dx) / den;
        let u = (cx * by - cy * bx) / den;
        if t >= zero && t <= one && u >= zero && u <= one {
            return Some((t, t));
        }
        return None;
    }
    // Parallel: collinear only if c lies on the line through a, b.
    if cx * by - cy * bx != zero {
        return None;
    }
    let len2 = bx * bx + by * by;
    let proj = |px: Q, py: Q| (px * bx + py * by) / len2;
    let t0 = proj(cx, cy);
    let t1 = proj(cx + dx, cy + dy);
    let (lo, hi) = if t0 <= t1 { (t0, t1) } else { (t1, t0) };
    let lo = if lo > zero { lo } else { zero };
    let hi = if hi < one { hi } else { one };
    (lo <= hi).then_some((lo, hi))
}

/// Simple-polygon test in exact rational arithmetic.
pub fn rational_is_simple(pts: &[Coord]) -> bool {
    let k = pts.len();
    let zero = Q::from_integer(0);
    let one = Q::from_integer(1);
    for i in 0..k {
        for j in i + 1..k {
            let (a, b) = (pts[i], pts[(i + 1) % k]);
            let (c, d) = (pts[j], pts[(j + 1) % k]);
            let Some((lo, hi)) = shared_interval(a, b, c, d) else {
                continue;
            };
            let next = j == i + 1;
            let wrap = i == 0 && j == k - 1;
            // Consecutive edges may meet only at their common vertex.
            let allowed = (next && lo == one && hi == one) || (wrap && lo == zero && hi == zero);
            if !allowed {
                return false;
            }
        }
    }
    true
}
