use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use legendre_core::transform::conjugate_point;
use legendre_core::{CheckReport, Interval, DEFAULT_TOL};

use crate::checks::{self, FENCHEL_YOUNG_TOL, INVOLUTION_TOL};
use crate::output::{write_csv, write_json, write_json_rows};
use crate::{parse_function, CliError, EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE};

#[derive(Parser, Debug)]
#[command(name = "legendre", version)]
#[command(about = "Legendre transform tables and invariant checks for convex functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Tabulate the conjugate over the inner 90% of [f(lo), f(hi)]
    Transform(TransformArgs),
    /// Run one invariant check and print a JSON report
    #[command(subcommand)]
    Check(CheckCommand),
}

#[derive(Args, Debug)]
struct FunctionArgs {
    /// Catalog name or poly:c0,c1,...,ck
    #[arg(long = "fn", value_name = "SPEC")]
    function: String,

    /// Domain as a:b; defaults to the catalog entry's domain
    #[arg(long, value_name = "A:B", allow_hyphen_values = true, value_parser = parse_interval)]
    domain: Option<Interval>,
}

#[derive(Args, Debug)]
struct TransformArgs {
    #[command(flatten)]
    function: FunctionArgs,

    /// Number of conjugate values
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    grid: u64,

    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
enum CheckCommand {
    /// Double transform against the original function
    Involution {
        #[command(flatten)]
        function: FunctionArgs,
        #[arg(long, default_value_t = INVOLUTION_TOL)]
        tol: f64,
    },
    /// F(x) + G(f(x)) - x f(x), relative to max(1, |x f(x)|)
    FenchelYoung {
        #[command(flatten)]
        function: FunctionArgs,
        #[arg(long, default_value_t = FENCHEL_YOUNG_TOL)]
        tol: f64,
    },
    /// Area decomposition; --box switches to the mixed-sign form
    Area {
        #[command(flatten)]
        function: FunctionArgs,
        /// Box corner x0:y0
        #[arg(long = "box", value_name = "X0:Y0", allow_hyphen_values = true, value_parser = parse_pair)]
        box_corner: Option<(f64, f64)>,
        /// Comma-separated x values
        #[arg(long, value_name = "V1,V2,...", allow_hyphen_values = true, value_parser = parse_list)]
        xs: Option<PointList>,
        /// Quadrature tolerance
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Inversion-based conjugate against the sampled brute-force maximum
    Oracle {
        #[command(flatten)]
        function: FunctionArgs,
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        samples: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        grid: u64,
    },
}

fn parse_number(s: &str) -> Result<f64, String> {
    s.trim()
        .parse::<f64>()
        .ok()
        .filter(|v| v.is_finite())
        .ok_or_else(|| format!("`{s}` is not a finite number"))
}

fn parse_pair(s: &str) -> Result<(f64, f64), String> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| format!("expected two numbers as a:b, got `{s}`"))?;
    Ok((parse_number(a)?, parse_number(b)?))
}

fn parse_interval(s: &str) -> Result<Interval, String> {
    let (lo, hi) = parse_pair(s)?;
    Interval::new(lo, hi).map_err(|e| e.to_string())
}

/// Comma-separated numbers, kept as one argument value.
#[derive(Clone, Debug, PartialEq)]
struct PointList(Vec<f64>);

fn parse_list(s: &str) -> Result<PointList, String> {
    s.split(',')
        .map(parse_number)
        .collect::<Result<_, _>>()
        .map(PointList)
}

/// Runs the CLI on `args` (program name first), writing results to `out`
/// and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T, O, E>(args: I, out: &mut O, err: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    O: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli.command, out) {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_CHECK_FAILED,
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", e.name());
            EXIT_USAGE
        }
    }
}

fn model_for(args: &FunctionArgs) -> Result<legendre_core::ConvexModel, CliError> {
    parse_function(&args.function)?.model(args.domain)
}

fn emit<O: Write, T: serde::Serialize>(out: &mut O, value: &T) -> Result<(), CliError> {
    write_json(out, value).map_err(|e| CliError::Usage(format!("cannot write output: {e}")))
}

fn report<O: Write>(out: &mut O, r: CheckReport) -> Result<bool, CliError> {
    emit(out, &r)?;
    Ok(r.pass)
}

/// `Ok(pass)` when the command ran; the boolean is the check outcome.
fn execute<O: Write>(command: Command, out: &mut O) -> Result<bool, CliError> {
    match command {
        Command::Transform(args) => {
            let model = model_for(&args.function)?;
            let rows = model
                .slope_range()
                .interior_grid(args.grid as usize)
                .map(|y| conjugate_point(&model, y))
                .collect::<Result<Vec<_>, _>>()?;
            match args.format {
                Format::Csv => write_csv(out, &rows),
                Format::Json => write_json_rows(out, &rows),
            }
            .map_err(|e| CliError::Usage(format!("cannot write output: {e}")))?;
            Ok(true)
        }
        Command::Check(CheckCommand::Involution { function, tol }) => {
            let model = model_for(&function)?;
            report(out, checks::involution(&function.function, &model, tol)?)
        }
        Command::Check(CheckCommand::FenchelYoung { function, tol }) => {
            let model = model_for(&function)?;
            report(out, checks::fenchel_young(&function.function, &model, tol)?)
        }
        Command::Check(CheckCommand::Area {
            function,
            box_corner,
            xs,
            tol,
        }) => {
            let model = model_for(&function)?;
            let result = checks::area(
                &function.function,
                &model,
                box_corner,
                xs.as_ref().map(|p| p.0.as_slice()),
                tol,
            )?;
            emit(out, &result)?;
            Ok(result.report.pass)
        }
        Command::Check(CheckCommand::Oracle {
            function,
            samples,
            grid,
        }) => {
            let model = model_for(&function)?;
            report(
                out,
                checks::oracle(&function.function, &model, samples as usize, grid as usize)?,
            )
        }
    }
}
