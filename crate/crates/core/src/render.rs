//! SVG and ASCII pictures of a cycle on its board.

use std::fmt::Write;
use std::str::FromStr;

use crate::cycle::CycleSeq;

/// Side of one board square in SVG user units.
pub const CELL_SIZE: i32 = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Svg,
    Ascii,
}

impl FromStr for RenderFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "svg" => Ok(RenderFormat::Svg),
            "ascii" => Ok(RenderFormat::Ascii),
            other => Err(format!("unknown format `{other}` (expected svg or ascii)")),
        }
    }
}

pub fn render(c: &CycleSeq, format: RenderFormat) -> String {
    match format {
        RenderFormat::Svg => render_svg(c),
        RenderFormat::Ascii => render_ascii(c),
    }
}

/// Polyline vertices (cell centres, `x` = column) with the first point
/// repeated at the end.
pub fn polyline_points(c: &CycleSeq) -> Vec<(i32, i32)> {
    let half = CELL_SIZE / 2;
    let mut pts: Vec<(i32, i32)> = c
        .coords()
        .into_iter()
        .map(|p| (p.col * CELL_SIZE + half, p.row * CELL_SIZE + half))
        .collect();
    if let Some(&first) = pts.first() {
        pts.push(first);
    }
    pts
}

pub fn render_svg(c: &CycleSeq) -> String {
    let board = c.board();
    let width = i32::from(board.width()) * CELL_SIZE;
    let height = i32::from(board.height()) * CELL_SIZE;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        out,
        r##"<g fill="#ffffff" stroke="#999999" stroke-width="1">"##
    );
    for row in 0..i32::from(board.height()) {
        for col in 0..i32::from(board.width()) {
            let _ = writeln!(
                out,
                r#"<rect x="{}" y="{}" width="{CELL_SIZE}" height="{CELL_SIZE}"/>"#,
                col * CELL_SIZE,
                row * CELL_SIZE
            );
        }
    }
    out.push_str("</g>\n");
    let points: Vec<String> = polyline_points(c)
        .into_iter()
        .map(|(x, y)| format!("{x},{y}"))
        .collect();
    let _ = writeln!(
        out,
        r##"<polyline points="{}" fill="none" stroke="#c0392b" stroke-width="3" stroke-linejoin="round"/>"##,
        points.join(" ")
    );
    out.push_str("</svg>\n");
    out
}

/// Grid with the 1-based move number at visited cells and `.` elsewhere.
pub fn render_ascii(c: &CycleSeq) -> String {
    let board = c.board();
    let w = usize::from(board.width());
    let h = usize::from(board.height());
    let mut grid = vec![None; w * h];
    for (i, &cell) in c.cells().iter().enumerate() {
        grid[usize::from(cell) - 1] = Some(i + 1);
    }
    let width = c.len().to_string().len();
    let mut out = String::new();
    for row in grid.chunks(w) {
        let line: Vec<String> = row
            .iter()
            .map(|slot| match slot {
                Some(n) => format!("{n:>width$}"),
                None => format!("{:>width$}", "."),
            })
            .collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::{BoardSpec, DihedralElem};
    use crate::cycle::validate_cycle;

    fn minimal() -> CycleSeq {
        validate_cycle(
            &[2, 9, 18, 15, 24, 17, 6, 13],
            BoardSpec::square(5).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn svg_has_closed_polyline() {
        let svg = render(&minimal(), RenderFormat::Svg);
        assert!(svg.starts_with("<svg"));
        assert_eq!(svg.matches("<rect").count(), 25);
        let pts = polyline_points(&minimal());
        assert_eq!(pts.len(), 9);
        assert_eq!(pts[0], pts[8]);
        assert_eq!(render_svg(&minimal()), svg);
    }

    #[test]
    fn ascii_marks_move_order() {
        let text = render_ascii(&minimal());
        let expected = "\
. 1 . . .
7 . . 2 .
. . 8 . 4
. 6 3 . .
. . . 5 .
";
        assert_eq!(text, expected);
    }

    #[test]
    fn k4_cycle_renders_four_segments() {
        let c = validate_cycle(&[2, 9, 18, 11], BoardSpec::square(5).unwrap()).unwrap();
        let pts = polyline_points(&c);
        assert_eq!(pts.len(), 5);
        assert_eq!(pts.first(), pts.last());
    }

    #[test]
    fn symmetric_images_differ_by_the_transform() {
        // Mirror in the vertical axis: x -> 5*CELL - x, y unchanged.
        let c = minimal();
        let m = c.transformed(DihedralElem::FlipVertical);
        let a = polyline_points(&c);
        let b = polyline_points(&m);
        let span = 5 * CELL_SIZE;
        let mirrored: Vec<(i32, i32)> = a.iter().map(|&(x, y)| (span - x, y)).collect();
        assert_eq!(b, mirrored);

        // Quarter turn: (x, y) -> (span - y, x).
        let r = polyline_points(&c.transformed(DihedralElem::Rot90));
        let turned: Vec<(i32, i32)> = a.iter().map(|&(x, y)| (span - y, x)).collect();
        assert_eq!(r, turned);
    }
}
