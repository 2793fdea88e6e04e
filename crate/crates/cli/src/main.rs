//! `gentle-mirror`: invariants of glued surfaces, mirror surfaces of stacky
//! curves, and the invertible-polynomial families.
//!
//! Exit status: 0 on success, 1 if any computed result disagrees with its
//! closed form or quiver check, 2 on unusable input.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use gentle_mirror::invertible::InvertiblePoly;
use gentle_mirror::quiver::generating_quiver;
use gentle_mirror::report::{CurveReport, GlueReport, PolyReport};
use gentle_mirror::sweep::{self, Execution, PolyCase};
use gentle_mirror::{GluedSurfaceSpec, StackyCurveSpec};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "gentle-mirror", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of a surface glued from columns of annuli (JSON spec file).
    Glue {
        spec: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Mirror surface of a cycle or chain of stacky curves (JSON spec file).
    Curve {
        spec: PathBuf,
        /// Compare the exceptional quiver with the mirror's generating quiver.
        #[arg(long)]
        check_quivers: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Mirror of an invertible polynomial, e.g. `loop:5,5` or `bp:3,2`.
    Poly {
        /// Polynomial; omit with --grid.
        #[arg(required_unless_present = "grid")]
        poly: Option<String>,
        #[arg(long, default_value_t = 1, conflicts_with = "all_ell")]
        ell: u64,
        /// Run every admissible index.
        #[arg(long)]
        all_ell: bool,
        /// Sweep every family with p <= PMAX and q <= min(p, QMAX), one
        /// summary line per case.
        #[arg(long, value_name = "PMAX,QMAX", value_parser = parse_grid, conflicts_with = "poly")]
        grid: Option<(u64, u64)>,
        #[arg(long)]
        check_quivers: bool,
        /// Evaluate grid cases on one thread.
        #[arg(long)]
        sequential: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Output {
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write the ribbon graph of the surface as DOT.
    #[arg(long)]
    dot_ribbon: Option<PathBuf>,
    /// Write the generating quiver of the surface as DOT.
    #[arg(long)]
    dot_quiver: Option<PathBuf>,
}

fn parse_grid(s: &str) -> Result<(u64, u64), String> {
    let (p, q) = s
        .split_once(',')
        .ok_or_else(|| format!("expected PMAX,QMAX, got {s:?}"))?;
    let parse = |x: &str| x.trim().parse::<u64>().map_err(|e| format!("{x:?}: {e}"));
    Ok((parse(p)?, parse(q)?))
}

/// Failure that maps to an exit status.
enum Failure {
    Input(String),
    Io(String),
}

type Outcome = Result<bool, Failure>;

fn input<E: std::fmt::Display>(context: &str) -> impl Fn(E) -> Failure + '_ {
    move |e| Failure::Input(format!("{context}: {e}"))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(input(&path.display().to_string()))?;
    serde_json::from_str(&text).map_err(input(&path.display().to_string()))
}

fn write(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn write_dots(spec: &GluedSurfaceSpec, out: &Output) -> Result<(), Failure> {
    if let Some(p) = &out.dot_ribbon {
        write(Some(p), &spec.ribbon_graph().to_dot())?;
    }
    if let Some(p) = &out.dot_quiver {
        write(Some(p), &generating_quiver(spec).to_dot())?;
    }
    Ok(())
}

fn glue(path: &Path, out: &Output) -> Outcome {
    let spec: GluedSurfaceSpec = read_json(path)?;
    let report = GlueReport::new(&spec).map_err(input("invalid spec"))?;
    write(out.out.as_deref(), &pretty(&report))?;
    write_dots(&spec, out)?;
    Ok(true)
}

fn curve(path: &Path, check_quivers: bool, out: &Output) -> Outcome {
    let curve: StackyCurveSpec = read_json(path)?;
    let report = CurveReport::new(&curve, check_quivers).map_err(input("invalid curve"))?;
    write(out.out.as_deref(), &pretty(&report))?;
    write_dots(&report.mirror, out)?;
    Ok(report
        .quiver_check
        .as_ref()
        .is_none_or(|c| c.verdict.is_match()))
}

fn poly(
    poly: Option<&str>,
    ell: u64,
    all_ell: bool,
    grid: Option<(u64, u64)>,
    check_quivers: bool,
    exec: Execution,
    out: Option<&Path>,
) -> Outcome {
    if let Some((pmax, qmax)) = grid {
        let cases = sweep::family_grid(pmax, qmax);
        let reports = sweep::evaluate(&cases, exec, check_quivers);
        let mut text = String::new();
        let mut ok = true;
        for r in reports {
            let r = r.map_err(input("grid case"))?;
            ok &= r.verdict.is_match();
            text.push_str(&serde_json::to_string(&r).expect("reports serialize"));
            text.push('\n');
        }
        write(out, &text)?;
        return Ok(ok);
    }

    let w: InvertiblePoly = poly
        .expect("clap requires a polynomial without --grid")
        .parse()
        .map_err(input("polynomial"))?;
    if all_ell {
        let cases: Vec<PolyCase> = w
            .admissible_indices()
            .into_iter()
            .map(|ell| PolyCase { poly: w, ell })
            .collect();
        let reports = sweep::map(&cases, exec, |c| {
            PolyReport::new(&c.poly, c.ell, check_quivers, true)
        })
        .into_iter()
        .collect::<Result<Vec<_>, _>>()
        .map_err(input("polynomial"))?;
        write(out, &pretty(&reports))?;
        Ok(reports.iter().all(|r| r.verdict.is_match()))
    } else {
        let report = PolyReport::new(&w, ell, check_quivers, true).map_err(input("polynomial"))?;
        write(out, &pretty(&report))?;
        Ok(report.verdict.is_match())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Glue { spec, out } => glue(spec, out),
        Command::Curve {
            spec,
            check_quivers,
            out,
        } => curve(spec, *check_quivers, out),
        Command::Poly {
            poly: p,
            ell,
            all_ell,
            grid,
            check_quivers,
            sequential,
            out,
        } => {
            let exec = if *sequential {
                Execution::Sequential
            } else {
                Execution::default()
            };
            poly(
                p.as_deref(),
                *ell,
                *all_ell,
                *grid,
                *check_quivers,
                exec,
                out.as_deref(),
            )
        }
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("MISMATCH");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
