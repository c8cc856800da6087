use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qcspec::qc::PolarGrid;
use qcspec::report::{self, exit, OutputFormat, RunSettings, SweepParam};
use qcspec::{Error, MapFamily, Result};

/// Eigenvalue bounds for quasiconformal images of the unit disc.
#[derive(Parser)]
#[command(name = "qcspec", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Distortion, Jacobian norm and every closed-form bound for one map.
    Analyze {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Compare the bounds against a finite-element eigenvalue.
    Verify {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Reproduce the table of worked examples.
    PaperTable {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Bounds along a one-parameter slice of a family.
    Sweep {
        #[command(flatten)]
        family: FamilyArgs,
        /// Parameter to vary: a, A or B.
        #[arg(long)]
        param: String,
        #[arg(long)]
        from: f64,
        #[arg(long)]
        to: f64,
        #[arg(long)]
        step: f64,
        /// Also solve the FEM eigenproblem for every row.
        #[arg(long)]
        with_fem: bool,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Identity,
    Ellipse,
    RosePetal,
    Epicycloid,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Md,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    a: Option<f64>,
    #[arg(long = "A")]
    big_a: Option<f64>,
    #[arg(long = "B")]
    big_b: Option<f64>,
    #[arg(long)]
    n: Option<u32>,
}

#[derive(Args)]
struct CommonArgs {
    #[arg(long, default_value_t = report::DEFAULT_RINGS)]
    rings: usize,
    #[arg(long, default_value_t = qcspec::fem::DEFAULT_TOL)]
    tol: f64,
    /// Polar grid as RADIALxANGULAR.
    #[arg(long, default_value = "512x512", value_parser = parse_grid)]
    grid: PolarGrid,
    /// Defaults to json, or csv for sweep.
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_grid(s: &str) -> std::result::Result<PolarGrid, String> {
    let (r, a) = s
        .split_once(['x', 'X'])
        .ok_or_else(|| format!("expected RADIALxANGULAR, got `{s}`"))?;
    let radial = r.trim().parse().map_err(|e| format!("radial size: {e}"))?;
    let angular = a.trim().parse().map_err(|e| format!("angular size: {e}"))?;
    PolarGrid::new(radial, angular).map_err(|e| e.to_string())
}

impl FamilyArgs {
    fn build(&self) -> Result<MapFamily> {
        let name = match self.family {
            Family::Identity => "identity",
            Family::Ellipse => "ellipse",
            Family::RosePetal => "rose-petal",
            Family::Epicycloid => "epicycloid",
        };
        report::family_from_parts(name, self.a, self.big_a, self.big_b, self.n)
    }
}

impl CommonArgs {
    fn settings(&self) -> Result<RunSettings> {
        if !(self.tol > 0.0 && self.tol < 1.0) {
            return Err(Error::InvalidInput(format!(
                "--tol must lie in (0, 1), got {}",
                self.tol
            )));
        }
        Ok(RunSettings {
            rings: self.rings,
            tol: self.tol,
            grid: self.grid,
        })
    }

    fn format(&self, default: OutputFormat) -> OutputFormat {
        match self.format {
            Some(Format::Json) => OutputFormat::Json,
            Some(Format::Csv) => OutputFormat::Csv,
            Some(Format::Md) => OutputFormat::Md,
            None => default,
        }
    }

    fn emit(&self, text: &str) -> Result<()> {
        match &self.out {
            Some(path) => fs::write(path, text)?,
            None => print!("{text}"),
        }
        Ok(())
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Analyze { family, common } => {
            let rec = report::cmd_analyze(&family.build()?, &common.settings()?)?;
            common.emit(&report::render_record(
                &rec,
                common.format(OutputFormat::Json),
            ))?;
            Ok(exit::SUCCESS)
        }
        Command::Verify { family, common } => {
            let rec = report::cmd_verify(&family.build()?, &common.settings()?)?;
            common.emit(&report::render_record(
                &rec,
                common.format(OutputFormat::Json),
            ))?;
            Ok(if rec.all_hold {
                exit::SUCCESS
            } else {
                exit::VIOLATION
            })
        }
        Command::PaperTable { common } => {
            let rows = report::cmd_paper_table(&common.settings()?);
            common.emit(&report::render_rows(
                &rows,
                common.format(OutputFormat::Json),
            ))?;
            Ok(if report::paper_table_holds(&rows) {
                exit::SUCCESS
            } else {
                exit::VIOLATION
            })
        }
        Command::Sweep {
            family,
            param,
            from,
            to,
            step,
            with_fem,
            common,
        } => {
            let param = SweepParam::parse(&param)?;
            let base = sweep_base(&family, param)?;
            let rows =
                report::cmd_sweep(&base, param, from, to, step, with_fem, &common.settings()?)?;
            common.emit(&report::render_rows(
                &rows,
                common.format(OutputFormat::Csv),
            ))?;
            Ok(exit::SUCCESS)
        }
    }
}

/// The swept parameter need not be given; it gets a placeholder, while the
/// fixed ones are required.
fn sweep_base(args: &FamilyArgs, param: SweepParam) -> Result<MapFamily> {
    let fixed = |v: Option<f64>, p: SweepParam, flag: &str| match (v, p == param) {
        (_, true) => Ok(0.0),
        (Some(x), false) => Ok(x),
        (None, false) => Err(Error::InvalidParameters(format!(
            "family `epicycloid` requires --{flag}"
        ))),
    };
    let f = match args.family {
        Family::Ellipse => MapFamily::Ellipse { a: 0.0 },
        Family::RosePetal => MapFamily::RosePetal { a: 0.0 },
        Family::Epicycloid => MapFamily::Epicycloid {
            analytic: fixed(args.big_a, SweepParam::BigA, "A")?,
            antianalytic: fixed(args.big_b, SweepParam::BigB, "B")?,
            n: args.n.ok_or_else(|| {
                Error::InvalidParameters("family `epicycloid` requires --n".into())
            })?,
        },
        Family::Identity => {
            return Err(Error::InvalidRange(
                "the identity family has no parameter to sweep".into(),
            ))
        }
    };
    Ok(f)
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("QCSPEC_THREADS") {
        match threads.parse::<usize>() {
            Ok(n) if n > 0 => {
                // only fails if a pool already exists
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global();
            }
            _ => {
                eprintln!("error: QCSPEC_THREADS must be a positive integer, got `{threads}`");
                return ExitCode::from(exit::BAD_INPUT);
            }
        }
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(report::exit_code(&e))
        }
    }
}
