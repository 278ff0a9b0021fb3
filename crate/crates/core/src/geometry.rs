//! Exact integer predicates for deciding whether a knight cycle, drawn as a
//! polygon through cell centres, crosses itself.

use crate::board::Coord;
use crate::cycle::CycleSeq;

/// A closed segment between two lattice points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Segment {
    pub a: Coord,
    pub b: Coord,
}

impl Segment {
    pub const fn new(a: Coord, b: Coord) -> Self {
        Segment { a, b }
    }

    /// Knight segments have coprime offsets, so no lattice point lies
    /// strictly inside them.
    pub fn has_interior_lattice_point(&self) -> bool {
        let dr = (self.b.row - self.a.row).unsigned_abs();
        let dc = (self.b.col - self.a.col).unsigned_abs();
        gcd(dr, dc) > 1
    }
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Sign of `(q - p) x (r - p)` with rows as the first axis and columns as
/// the second: `+1` when `r` lies counter-clockwise of `p -> q` in
/// (row, col) axes, `-1` when clockwise, `0` when collinear.
pub fn orientation(p: Coord, q: Coord, r: Coord) -> i32 {
    let cross = i64::from(q.row - p.row) * i64::from(r.col - p.col)
        - i64::from(q.col - p.col) * i64::from(r.row - p.row);
    cross.signum() as i32
}

/// `r` lies on the closed segment `p q`, given the three are collinear.
fn within_box(p: Coord, q: Coord, r: Coord) -> bool {
    r.row >= p.row.min(q.row)
        && r.row <= p.row.max(q.row)
        && r.col >= p.col.min(q.col)
        && r.col <= p.col.max(q.col)
}

fn on_segment(s: Segment, r: Coord) -> bool {
    orientation(s.a, s.b, r) == 0 && within_box(s.a, s.b, r)
}

/// Whether two closed segments meet anywhere.
fn intersects(s1: Segment, s2: Segment) -> bool {
    let d1 = orientation(s2.a, s2.b, s1.a);
    let d2 = orientation(s2.a, s2.b, s1.b);
    let d3 = orientation(s1.a, s1.b, s2.a);
    let d4 = orientation(s1.a, s1.b, s2.b);
    if d1 * d2 < 0 && d3 * d4 < 0 {
        return true;
    }
    (d1 == 0 && within_box(s2.a, s2.b, s1.a))
        || (d2 == 0 && within_box(s2.a, s2.b, s1.b))
        || (d3 == 0 && within_box(s1.a, s1.b, s2.a))
        || (d4 == 0 && within_box(s1.a, s1.b, s2.b))
}

/// True when the segments share a point other than a common endpoint:
/// a proper crossing, an endpoint touching the other's interior, or a
/// collinear overlap.
pub fn segments_cross(s1: Segment, s2: Segment) -> bool {
    let shared = [
        (s1.a == s2.a, s1.b, s2.b),
        (s1.a == s2.b, s1.b, s2.a),
        (s1.b == s2.a, s1.a, s2.b),
        (s1.b == s2.b, s1.a, s2.a),
    ];
    let mut common = shared.iter().filter(|s| s.0);
    match (common.next(), common.next()) {
        (None, _) => intersects(s1, s2),
        (Some(&(_, free1, free2)), None) => {
            // Meeting at one endpoint: any further contact means the free end
            // of one segment lies on the other.
            on_segment(s2, free1) || on_segment(s1, free2)
        }
        // Identical segments (possibly with a degenerate point segment).
        _ => true,
    }
}

/// Pairs of edge indices `(i, j)`, `i < j`, that do not share a vertex in a
/// cycle of length `k`. Edge `i` joins cell `i` to cell `i + 1 mod k`.
pub fn nonadjacent_edge_pairs(k: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..k).flat_map(move |i| {
        (i + 2..k)
            .filter(move |&j| !(i == 0 && j == k - 1))
            .map(move |j| (i, j))
    })
}

fn edges(c: &CycleSeq) -> Vec<Segment> {
    let pts = c.coords();
    let k = pts.len();
    (0..k)
        .map(|i| Segment::new(pts[i], pts[(i + 1) % k]))
        .collect()
}

pub fn is_simple(c: &CycleSeq) -> bool {
    is_simple_polygon(&c.coords())
}

/// Simple-polygon test over a closed vertex list.
pub fn is_simple_polygon(pts: &[Coord]) -> bool {
    let k = pts.len();
    let edge = |i: usize| Segment::new(pts[i], pts[(i + 1) % k]);
    // Neighbouring edges may share only their common vertex.
    for i in 0..k {
        if segments_cross(edge(i), edge((i + 1) % k)) {
            return false;
        }
    }
    !nonadjacent_edge_pairs(k).any(|(i, j)| segments_cross(edge(i), edge(j)))
}

/// Edge pairs of `c` that share a point beyond a common vertex.
pub fn crossing_pairs(c: &CycleSeq) -> Vec<(usize, usize)> {
    let e = edges(c);
    nonadjacent_edge_pairs(e.len())
        .filter(|&(i, j)| segments_cross(e[i], e[j]))
        .collect()
}
