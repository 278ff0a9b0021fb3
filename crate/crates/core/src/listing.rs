//! Plain-text cycle listings.
//!
//! ```text
//! KNIGHT-CYCLES v1 k=4 board=5x5 count=3 filter=all
//! 1 8 19 12
//! ...
//! ```
//!
//! One header line, then `count` lines of `k` space-separated cell indices,
//! sorted ascending. ASCII, LF line endings, no trailing whitespace.

use std::fmt;
use std::io::{self, BufRead, Write};
use std::str::FromStr;

use thiserror::Error;

use crate::board::BoardSpec;
use crate::cycle::{canonicalize, validate_cycle, CycleSeq};
use crate::geometry::is_simple;

const MAGIC: &str = "KNIGHT-CYCLES";
const VERSION: &str = "v1";

#[derive(Debug, Error)]
pub enum ListingError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("header declares count={declared} but {written} cycles were given")]
    CountMismatch { declared: usize, written: usize },
    #[error(transparent)]
    Io(#[from] io::Error),
}

fn parse_err(line: usize, message: impl Into<String>) -> ListingError {
    ListingError::Parse {
        line,
        message: message.into(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ListingFilter {
    All,
    Simple,
}

impl fmt::Display for ListingFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ListingFilter::All => "all",
            ListingFilter::Simple => "simple",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ListingHeader {
    pub k: usize,
    pub board: BoardSpec,
    pub count: usize,
    pub filter: ListingFilter,
}

impl fmt::Display for ListingHeader {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{MAGIC} {VERSION} k={} board={}x{} count={} filter={}",
            self.k,
            self.board.width(),
            self.board.height(),
            self.count,
            self.filter
        )
    }
}

impl FromStr for ListingHeader {
    type Err = String;

    fn from_str(line: &str) -> Result<Self, Self::Err> {
        let fields: Vec<&str> = line.split(' ').collect();
        let [magic, version, k, board, count, filter] = fields[..] else {
            return Err(format!("expected 6 header fields, found {}", fields.len()));
        };
        if magic != MAGIC || version != VERSION {
            return Err(format!("expected `{MAGIC} {VERSION}` header"));
        }
        let value = |field: &str, name: &str| -> Result<String, String> {
            field
                .strip_prefix(name)
                .and_then(|v| v.strip_prefix('='))
                .map(str::to_owned)
                .ok_or_else(|| format!("expected `{name}=` field, found `{field}`"))
        };
        let number = |text: String, name: &str| -> Result<usize, String> {
            if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
                return Err(format!("invalid {name} `{text}`"));
            }
            text.parse().map_err(|_| format!("invalid {name} `{text}`"))
        };
        let k = number(value(k, "k")?, "k")?;
        let board_text = value(board, "board")?;
        let (w, h) = board_text
            .split_once('x')
            .ok_or_else(|| format!("invalid board `{board_text}`"))?;
        let w = u16::try_from(number(w.to_owned(), "board width")?)
            .map_err(|_| "board width too large".to_owned())?;
        let h = u16::try_from(number(h.to_owned(), "board height")?)
            .map_err(|_| "board height too large".to_owned())?;
        let board = BoardSpec::new(w, h).map_err(|e| e.to_string())?;
        let count = number(value(count, "count")?, "count")?;
        let filter = match value(filter, "filter")?.as_str() {
            "all" => ListingFilter::All,
            "simple" => ListingFilter::Simple,
            other => return Err(format!("invalid filter `{other}`")),
        };
        Ok(ListingHeader {
            k,
            board,
            count,
            filter,
        })
    }
}

pub fn format_line(cells: &[u16]) -> String {
    let mut line = String::with_capacity(cells.len() * 4);
    for (i, c) in cells.iter().enumerate() {
        if i > 0 {
            line.push(' ');
        }
        line.push_str(&c.to_string());
    }
    line
}

/// Writes a complete listing. `header.count` must equal `cycles.len()`.
pub fn write_cycles<W: Write>(
    mut out: W,
    header: &ListingHeader,
    cycles: &[CycleSeq],
) -> Result<(), ListingError> {
    if header.count != cycles.len() {
        return Err(ListingError::CountMismatch {
            declared: header.count,
            written: cycles.len(),
        });
    }
    writeln!(out, "{header}")?;
    for c in cycles {
        writeln!(out, "{}", format_line(c.cells()))?;
    }
    out.flush()?;
    Ok(())
}

fn parse_cells(text: &str, k: usize, line: usize) -> Result<Vec<u16>, ListingError> {
    let cells = text
        .split(' ')
        .map(|t| {
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(parse_err(line, format!("invalid cell `{t}`")));
            }
            t.parse::<u16>()
                .map_err(|_| parse_err(line, format!("cell `{t}` out of range")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if cells.len() != k {
        return Err(parse_err(
            line,
            format!("expected {k} cells, found {}", cells.len()),
        ));
    }
    Ok(cells)
}

fn read_header<R: BufRead>(lines: &mut io::Lines<R>) -> Result<ListingHeader, ListingError> {
    let first = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing header"))??;
    first.parse().map_err(|m: String| parse_err(1, m))
}

/// Reads and validates a listing: every line must be a valid cycle on the
/// header's board and the body must hold exactly `count` lines.
pub fn read_cycles<R: BufRead>(input: R) -> Result<(ListingHeader, Vec<CycleSeq>), ListingError> {
    let mut lines = input.lines();
    let header = read_header(&mut lines)?;
    let mut cycles = Vec::with_capacity(header.count.min(1 << 20));
    for (i, text) in lines.enumerate() {
        let line = i + 2;
        let text = text?;
        if cycles.len() == header.count {
            return Err(parse_err(
                line,
                format!("more lines than the declared count={}", header.count),
            ));
        }
        let cells = parse_cells(&text, header.k, line)?;
        let cycle =
            validate_cycle(&cells, header.board).map_err(|e| parse_err(line, e.to_string()))?;
        cycles.push(cycle);
    }
    if cycles.len() != header.count {
        return Err(parse_err(
            cycles.len() + 2,
            format!(
                "declared count={} but found {} cycles",
                header.count,
                cycles.len()
            ),
        ));
    }
    Ok((header, cycles))
}

/// Result of a full consistency check of a listing.
#[derive(Debug, Clone, Default)]
pub struct CheckReport {
    pub header: Option<ListingHeader>,
    pub cycles: usize,
    /// `(line number, description)` of every problem found.
    pub problems: Vec<(usize, String)>,
}

impl CheckReport {
    pub fn is_valid(&self) -> bool {
        self.problems.is_empty()
    }
}

/// Validates every line of a listing: knight moves and closure, canonical
/// form, strict ascending order, the simple filter and the header count.
pub fn check_listing<R: BufRead>(input: R) -> Result<CheckReport, io::Error> {
    let mut report = CheckReport::default();
    let mut lines = input.lines();
    let header = match read_header(&mut lines) {
        Ok(h) => h,
        Err(ListingError::Io(e)) => return Err(e),
        Err(e) => {
            report.problems.push((1, e.to_string()));
            return Ok(report);
        }
    };
    report.header = Some(header);
    let mut previous: Option<Vec<u16>> = None;
    for (i, text) in lines.enumerate() {
        let line = i + 2;
        let text = text?;
        report.cycles += 1;
        let cells = match parse_cells(&text, header.k, line) {
            Ok(c) => c,
            Err(e) => {
                report.problems.push((line, e.to_string()));
                continue;
            }
        };
        match validate_cycle(&cells, header.board) {
            Ok(cycle) => {
                if canonicalize(&cycle).cells() != cycle.cells() {
                    report
                        .problems
                        .push((line, "cycle is not canonical".into()));
                }
                if header.filter == ListingFilter::Simple && !is_simple(&cycle) {
                    report
                        .problems
                        .push((line, "self-intersecting cycle in a simple listing".into()));
                }
            }
            Err(e) => report.problems.push((line, e.to_string())),
        }
        if let Some(prev) = &previous {
            if *prev >= cells {
                report
                    .problems
                    .push((line, "lines are not strictly ascending".into()));
            }
        }
        previous = Some(cells);
    }
    if report.cycles != header.count {
        report.problems.push((
            1,
            format!(
                "header count={} but the body has {} lines",
                header.count, report.cycles
            ),
        ));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::{canonical_listing, Algorithm, EnumerationOptions};
    use proptest::prelude::*;

    fn k4_listing() -> Vec<CycleSeq> {
        let (_, keys) =
            canonical_listing(4, Algorithm::Dfs, &EnumerationOptions::default()).unwrap();
        keys.iter().map(|k| k.to_cycle()).collect()
    }

    fn header(k: usize, count: usize) -> ListingHeader {
        ListingHeader {
            k,
            board: BoardSpec::for_length(k),
            count,
            filter: ListingFilter::All,
        }
    }

    #[test]
    fn round_trip_k4() {
        let cycles = k4_listing();
        let mut buf = Vec::new();
        write_cycles(&mut buf, &header(4, 3), &cycles).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("KNIGHT-CYCLES v1 k=4 board=5x5 count=3 filter=all\n"));
        assert!(text.lines().all(|l| !l.ends_with(' ')));
        let (h, back) = read_cycles(&buf[..]).unwrap();
        assert_eq!(h, header(4, 3));
        assert_eq!(back, cycles);
        assert!(check_listing(&buf[..]).unwrap().is_valid());
    }

    #[test]
    fn count_mismatch_is_a_parse_error() {
        let text =
            "KNIGHT-CYCLES v1 k=4 board=5x5 count=2 filter=all\n1 8 19 12\n2 9 18 11\n2 11 22 13\n";
        match read_cycles(text.as_bytes()) {
            Err(ListingError::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
        let short = "KNIGHT-CYCLES v1 k=4 board=5x5 count=2 filter=all\n1 8 19 12\n";
        assert!(matches!(
            read_cycles(short.as_bytes()),
            Err(ListingError::Parse { line: 3, .. })
        ));
        assert!(matches!(
            write_cycles(Vec::new(), &header(4, 2), &k4_listing()),
            Err(ListingError::CountMismatch { .. })
        ));
    }

    #[test]
    fn malformed_inputs() {
        let bad_header = "KNIGHT-CYCLES v2 k=4 board=5x5 count=0 filter=all\n";
        assert!(matches!(
            read_cycles(bad_header.as_bytes()),
            Err(ListingError::Parse { line: 1, .. })
        ));
        let out_of_range = "KNIGHT-CYCLES v1 k=4 board=5x5 count=1 filter=all\n1 8 19 26\n";
        assert!(matches!(
            read_cycles(out_of_range.as_bytes()),
            Err(ListingError::Parse { line: 2, .. })
        ));
        let not_cycle = "KNIGHT-CYCLES v1 k=4 board=5x5 count=1 filter=all\n1 8 19 13\n";
        assert!(matches!(
            read_cycles(not_cycle.as_bytes()),
            Err(ListingError::Parse { line: 2, .. })
        ));
        let trailing = "KNIGHT-CYCLES v1 k=4 board=5x5 count=1 filter=all\n1 8 19 12 \n";
        assert!(read_cycles(trailing.as_bytes()).is_err());
        assert!(read_cycles("".as_bytes()).is_err());
    }

    #[test]
    fn check_flags_order_and_canonicality() {
        // Valid cycles, but the second is not canonical and order is broken.
        let text = "KNIGHT-CYCLES v1 k=4 board=5x5 count=2 filter=all\n2 9 18 11\n1 8 19 12\n";
        let report = check_listing(text.as_bytes()).unwrap();
        assert!(!report.is_valid());
        assert!(report
            .problems
            .iter()
            .any(|(l, m)| *l == 3 && m.contains("ascending")));

        let rotated = "KNIGHT-CYCLES v1 k=4 board=5x5 count=1 filter=all\n8 19 12 1\n";
        let report = check_listing(rotated.as_bytes()).unwrap();
        assert!(report.problems.iter().any(|(_, m)| m.contains("canonical")));

        let miscount = "KNIGHT-CYCLES v1 k=4 board=5x5 count=5 filter=all\n1 8 19 12\n";
        assert!(!check_listing(miscount.as_bytes()).unwrap().is_valid());
    }

    proptest! {
        #[test]
        fn header_round_trip(k in 4usize..40, w in 1u16..300, h in 1u16..300, count in 0usize..1_000_000, simple: bool) {
            let header = ListingHeader {
                k,
                board: BoardSpec::new(w, h).unwrap(),
                count,
                filter: if simple { ListingFilter::Simple } else { ListingFilter::All },
            };
            prop_assert_eq!(header.to_string().parse::<ListingHeader>(), Ok(header));
        }
    }
}
