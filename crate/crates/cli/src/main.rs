use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::thread;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use knight_cycles::board::BoardSpec;
use knight_cycles::cycle::{validate_cycle, CanonicalKey};
use knight_cycles::enumeration::{
    canonical_listing, enumerate, Algorithm, CycleSink, EnumerationOptions, EnumerationSummary,
    FnSink, MAX_LENGTH,
};
use knight_cycles::listing::{check_listing, format_line, ListingFilter, ListingHeader};
use knight_cycles::render::{render, RenderFormat};
use knight_cycles::twins::group_geometric_twins;
use knight_cycles::verify::verify_tables;

/// Enumerate, verify and draw closed knight's paths.
#[derive(Debug, Parser)]
#[command(name = "knight-cycles", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count inequivalent cycles of one length.
    Count(CountArgs),
    /// Write the sorted canonical listing of one length to a file.
    List(ListArgs),
    /// Check counts for every even length up to a bound.
    Verify(VerifyArgs),
    /// Print groups of inequivalent cycles that visit congruent cell sets.
    Twins(TwinsArgs),
    /// Draw one cycle as SVG or ASCII.
    Render(RenderArgs),
    /// Re-validate a listing file.
    Check(CheckArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum AlgorithmArg {
    Dfs,
    Mitm,
}

impl From<AlgorithmArg> for Algorithm {
    fn from(a: AlgorithmArg) -> Self {
        match a {
            AlgorithmArg::Dfs => Algorithm::Dfs,
            AlgorithmArg::Mitm => Algorithm::Mitm,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VerifyAlgorithm {
    Dfs,
    Mitm,
    Both,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Svg,
    Ascii,
}

#[derive(Debug, Args)]
struct JobsArg {
    /// Worker threads [default: number of CPUs]
    #[arg(long, env = "KNIGHT_CYCLES_JOBS", value_parser = clap::value_parser!(u32).range(1..=1024))]
    jobs: Option<u32>,
}

impl JobsArg {
    fn get(&self) -> usize {
        match self.jobs {
            Some(j) => j as usize,
            None => thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

#[derive(Debug, Args)]
struct CountArgs {
    /// Cycle length (even, 4 to 16)
    #[arg(long, value_parser = parse_length)]
    length: usize,
    #[arg(long, value_enum, default_value = "mitm")]
    algorithm: AlgorithmArg,
    /// Also count the non-self-intersecting cycles
    #[arg(long)]
    simple_only: bool,
    #[command(flatten)]
    jobs: JobsArg,
}

#[derive(Debug, Args)]
struct ListArgs {
    #[arg(long, value_parser = parse_length)]
    length: usize,
    #[arg(long)]
    out: PathBuf,
    /// Write only the non-self-intersecting cycles
    #[arg(long)]
    simple_only: bool,
    #[arg(long, value_enum, default_value = "mitm")]
    algorithm: AlgorithmArg,
    #[command(flatten)]
    jobs: JobsArg,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_parser = parse_length)]
    max_length: usize,
    #[arg(long, value_enum, default_value = "both")]
    algorithm: VerifyAlgorithm,
    #[command(flatten)]
    jobs: JobsArg,
}

#[derive(Debug, Args)]
struct TwinsArgs {
    #[arg(long, value_parser = parse_length)]
    length: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    jobs: JobsArg,
}

#[derive(Debug, Args)]
struct RenderArgs {
    /// Comma-separated 1-based cell numbers, e.g. "2,9,18,15,24,17,6,13"
    #[arg(long, value_parser = parse_seq)]
    seq: CellSeq,
    /// Board width; the board is square
    #[arg(long, value_parser = clap::value_parser!(u16).range(1..=1000))]
    width: u16,
    #[arg(long, value_enum, default_value = "svg")]
    format: FormatArg,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CheckArgs {
    #[arg(long = "in")]
    input: PathBuf,
}

fn parse_length(s: &str) -> Result<usize, String> {
    let k: usize = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if k < 4 || k % 2 == 1 || k > MAX_LENGTH {
        return Err(format!(
            "length must be even and between 4 and {MAX_LENGTH}"
        ));
    }
    Ok(k)
}

#[derive(Debug, Clone)]
struct CellSeq(Vec<u16>);

fn parse_seq(s: &str) -> Result<CellSeq, String> {
    s.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<u16>()
                .map_err(|_| format!("invalid cell number `{t}`"))
        })
        .collect::<Result<_, _>>()
        .map(CellSeq)
}

fn format_summary(s: &EnumerationSummary) -> String {
    let mut line = format!("k={} total={}", s.k, s.total);
    if let Some(simple) = s.simple {
        line.push_str(&format!(" simple={simple}"));
    }
    line.push_str(&format!(" elapsed={:.3}", s.elapsed.as_secs_f64()));
    line
}

/// Destination that is either stdout or a file replaced atomically on
/// completion.
enum Output {
    Stdout(io::Stdout),
    File(tempfile::NamedTempFile, PathBuf),
}

impl Output {
    fn open(path: Option<&Path>) -> Result<Self> {
        match path {
            None => Ok(Output::Stdout(io::stdout())),
            Some(p) => Ok(Output::File(temp_beside(p)?, p.to_owned())),
        }
    }

    fn writer(&mut self) -> Box<dyn Write + '_> {
        match self {
            Output::Stdout(s) => Box::new(s.lock()),
            Output::File(f, _) => Box::new(BufWriter::new(f.as_file_mut())),
        }
    }

    fn finish(self) -> Result<()> {
        if let Output::File(f, path) = self {
            f.persist(&path)
                .with_context(|| format!("cannot write {}", path.display()))?;
        }
        Ok(())
    }
}

fn temp_beside(path: &Path) -> Result<tempfile::NamedTempFile> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    tempfile::NamedTempFile::new_in(dir)
        .with_context(|| format!("cannot create a file in {}", dir.display()))
}

fn count(args: CountArgs) -> Result<bool> {
    let options = EnumerationOptions {
        count_simple: args.simple_only,
        ..EnumerationOptions::default().with_jobs(args.jobs.get())
    };
    let summary = enumerate(args.length, args.algorithm.into(), &options, None)?;
    println!("{}", format_summary(&summary));
    Ok(true)
}

fn list(args: ListArgs) -> Result<bool> {
    let options = EnumerationOptions {
        count_simple: args.simple_only,
        emit_simple_only: args.simple_only,
        ..EnumerationOptions::default().with_jobs(args.jobs.get())
    };
    // The body goes to a scratch file first because the header carries the
    // final count.
    let mut body = tempfile::tempfile_in(
        args.out
            .parent()
            .filter(|d| !d.as_os_str().is_empty())
            .unwrap_or(Path::new(".")),
    )
    .context("cannot create scratch file")?;
    let mut written = 0usize;
    let summary = {
        let mut w = BufWriter::new(&mut body);
        let mut sink = FnSink(|key: &CanonicalKey| {
            written += 1;
            writeln!(w, "{}", format_line(key.cells()))?;
            Ok(())
        });
        let summary = enumerate(
            args.length,
            args.algorithm.into(),
            &options,
            Some(&mut sink as &mut dyn CycleSink),
        )?;
        w.flush()?;
        summary
    };

    let header = ListingHeader {
        k: args.length,
        board: BoardSpec::for_length(args.length),
        count: written,
        filter: if args.simple_only {
            ListingFilter::Simple
        } else {
            ListingFilter::All
        },
    };
    let mut out = Output::open(Some(&args.out))?;
    {
        let mut w = out.writer();
        writeln!(w, "{header}")?;
        io::Seek::rewind(&mut body)?;
        io::copy(&mut body, &mut w)?;
        w.flush()?;
    }
    out.finish()?;
    println!("{}", format_summary(&summary));
    Ok(true)
}

fn verify(args: VerifyArgs) -> Result<bool> {
    let algorithms: &[Algorithm] = match args.algorithm {
        VerifyAlgorithm::Dfs => &[Algorithm::Dfs],
        VerifyAlgorithm::Mitm => &[Algorithm::Mitm],
        VerifyAlgorithm::Both => &Algorithm::ALL,
    };
    let report = verify_tables(args.max_length, algorithms, args.jobs.get())?;
    print!("{report}");
    Ok(report.all_passed())
}

fn twins(args: TwinsArgs) -> Result<bool> {
    let options = EnumerationOptions::default().with_jobs(args.jobs.get());
    let (_, keys) = canonical_listing(args.length, Algorithm::Mitm, &options)?;
    let groups = group_geometric_twins(keys)?;
    let mut out = Output::open(args.out.as_deref())?;
    {
        let mut w = out.writer();
        for (i, g) in groups.iter().enumerate() {
            if i > 0 {
                writeln!(w)?;
            }
            writeln!(w, "cells {}", format_line(g.key.cells()))?;
            for m in &g.members {
                writeln!(w, "{}", format_line(m.cells()))?;
            }
        }
        w.flush()?;
    }
    out.finish()?;
    Ok(true)
}

fn render_cmd(args: RenderArgs) -> Result<bool> {
    let board = BoardSpec::square(args.width)?;
    let cycle = match validate_cycle(&args.seq.0, board) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(false);
        }
    };
    let format = match args.format {
        FormatArg::Svg => RenderFormat::Svg,
        FormatArg::Ascii => RenderFormat::Ascii,
    };
    let mut out = Output::open(args.out.as_deref())?;
    {
        let mut w = out.writer();
        w.write_all(render(&cycle, format).as_bytes())?;
        w.flush()?;
    }
    out.finish()?;
    Ok(true)
}

fn check(args: CheckArgs) -> Result<bool> {
    let file =
        File::open(&args.input).with_context(|| format!("cannot open {}", args.input.display()))?;
    let report = check_listing(BufReader::new(file))?;
    for (line, problem) in &report.problems {
        eprintln!("{}:{line}: {problem}", args.input.display());
    }
    if report.is_valid() {
        println!("ok: {} cycles", report.cycles);
    } else {
        println!("invalid: {} problems", report.problems.len());
    }
    Ok(report.is_valid())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Count(a) => count(a),
        Command::List(a) => list(a),
        Command::Verify(a) => verify(a),
        Command::Twins(a) => twins(a),
        Command::Render(a) => render_cmd(a),
        Command::Check(a) => check(a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
