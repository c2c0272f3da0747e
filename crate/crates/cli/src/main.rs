//! `gaussphi`: evaluate, expand, count, enumerate, draw and verify the
//! minimal Euclidean function on the Gaussian integers.
//!
//! Exit codes: 0 success, 1 computational or verification failure, 2 usage
//! error.

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gaussphi::{
    expansion_of, phi, phi_oracle, preimage_count, preimage_enumerate, render_decomposition,
    render_region, sequence, verify, Error, GaussianInt, Region, RenderStyle, VerifyConfig,
};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "gaussphi", version, about = "Minimal Euclidean function on Z[i]")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print phi(x + yi).
    #[command(allow_negative_numbers = true)]
    Phi {
        x: i64,
        y: i64,
        /// Use the exhaustive digit search instead of the octagon formula.
        #[arg(long)]
        oracle: bool,
    },
    /// Print a shortest (1+i)-ary expansion, most significant digit first.
    #[command(allow_negative_numbers = true)]
    Expand { x: i64, y: i64 },
    /// Print |phi^-1([0, n])|, the origin included.
    Count { n: u32 },
    /// Print a(0..=N) of OEIS A006457, where a(0) = 1 and a(m) = |phi^-1([0, m-1])|.
    Sequence {
        max_index: u32,
        /// One "m a(m)" pair per line instead of a comma-separated list.
        #[arg(long)]
        b_file: bool,
    },
    /// List every point of phi^-1([0, n]) with its layer j and phi value.
    Enumerate {
        n: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Write an SVG of a region or of a pre-image decomposition.
    Render {
        #[command(subcommand)]
        target: RenderTarget,
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
        /// Leave out the axis cross.
        #[arg(long, global = true)]
        no_axes: bool,
    },
    /// Cross-check every formula against enumeration and the oracle.
    Verify {
        /// Oracle sweep over |x|, |y| <= radius.
        #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(i64).range(1..))]
        radius: i64,
        #[arg(long, default_value_t = 10)]
        max_level: u32,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        threads: u64,
    },
}

#[derive(Subcommand)]
enum RenderTarget {
    /// phi^-1([0, n]) shaded by layer.
    Level { n: u32 },
    /// The region E(a, b).
    Region { a: i64, b: i64 },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

/// Point record for `enumerate`. The origin has neither a layer nor a phi
/// value.
#[derive(Serialize)]
struct PointRecord {
    x: i64,
    y: i64,
    j: Option<u32>,
    phi: Option<u32>,
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Zero | Error::InvalidRegion { .. } => Failure::Usage(e.to_string()),
            Error::Overflow(_) => Failure::Compute(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Compute(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Compute(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Compute(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn nonzero(x: i64, y: i64) -> Result<GaussianInt, Failure> {
    let z = GaussianInt::new(x, y);
    if z.is_zero() {
        return Err(Error::Zero.into());
    }
    Ok(z)
}

fn cmd_phi(out: &mut impl Write, x: i64, y: i64, oracle: bool) -> CmdResult {
    let z = nonzero(x, y)?;
    let v = if oracle { phi_oracle(z)? } else { phi(z)? };
    writeln!(out, "{v}")?;
    Ok(())
}

fn cmd_expand(out: &mut impl Write, x: i64, y: i64) -> CmdResult {
    let z = nonzero(x, y)?;
    writeln!(out, "{} = {z}", expansion_of(z)?)?;
    Ok(())
}

fn cmd_sequence(out: &mut impl Write, max_index: u32, b_file: bool) -> CmdResult {
    let seq = sequence(max_index)?;
    if b_file {
        for (m, a) in seq.iter().enumerate() {
            writeln!(out, "{m} {a}")?;
        }
    } else {
        let parts: Vec<String> = seq.iter().map(|a| a.to_string()).collect();
        writeln!(out, "{}", parts.join(", "))?;
    }
    Ok(())
}

fn cmd_enumerate(out: &mut impl Write, n: u32, format: Format) -> CmdResult {
    let records = preimage_enumerate(n)?.map(|p| -> Result<PointRecord, Error> {
        let phi = match p.layer {
            Some(_) => Some(phi(p.z)?),
            None => None,
        };
        Ok(PointRecord { x: p.z.x, y: p.z.y, j: p.layer, phi })
    });
    match format {
        Format::Json => {
            for r in records {
                serde_json::to_writer(&mut *out, &r?)?;
                out.write_all(b"\n")?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            for r in records {
                w.serialize(r?)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn cmd_render(
    out: &mut impl Write,
    target: RenderTarget,
    output: Option<PathBuf>,
    no_axes: bool,
) -> CmdResult {
    let style = RenderStyle { axes: !no_axes, ..RenderStyle::default() };
    let svg = match target {
        RenderTarget::Level { n } => render_decomposition(n, &style)?,
        RenderTarget::Region { a, b } => render_region(&Region::new(a, b)?, &style),
    };
    let markers = svg.matches("<rect ").count();
    match output {
        Some(path) => fs::write(&path, &svg)
            .map_err(|e| Failure::Compute(format!("cannot write {}: {e}", path.display())))?,
        None => return Err(Failure::Usage("render needs --output <PATH>".into())),
    }
    writeln!(out, "{markers}")?;
    Ok(())
}

fn cmd_verify(out: &mut impl Write, radius: i64, max_level: u32, threads: u64) -> CmdResult {
    let config = VerifyConfig { radius, max_level, threads: threads as usize };
    let report = verify::run(&config);
    write!(out, "{report}")?;
    if report.ok() {
        Ok(())
    } else {
        let first = report
            .first_failure
            .map(|f| f.to_string())
            .unwrap_or_else(|| "unknown".into());
        Err(Failure::Compute(format!("verification failed: {first}")))
    }
}

fn run(cli: Cli, out: &mut impl Write) -> CmdResult {
    match cli.command {
        Command::Phi { x, y, oracle } => cmd_phi(out, x, y, oracle),
        Command::Expand { x, y } => cmd_expand(out, x, y),
        Command::Count { n } => {
            writeln!(out, "{}", preimage_count(n)?)?;
            Ok(())
        }
        Command::Sequence { max_index, b_file } => cmd_sequence(out, max_index, b_file),
        Command::Enumerate { n, format } => cmd_enumerate(out, n, format),
        Command::Render { target, output, no_axes } => cmd_render(out, target, output, no_axes),
        Command::Verify { radius, max_level, threads } => {
            cmd_verify(out, radius, max_level, threads)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(()), Ok(())) => ExitCode::SUCCESS,
        (Ok(()), Err(e)) => {
            eprintln!("gaussphi: {e}");
            ExitCode::from(1)
        }
        (Err(Failure::Usage(msg)), _) => {
            eprintln!("gaussphi: {msg}");
            ExitCode::from(2)
        }
        (Err(Failure::Compute(msg)), _) => {
            eprintln!("gaussphi: {msg}");
            ExitCode::from(1)
        }
    }
}
