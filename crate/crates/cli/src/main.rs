use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qtiling::enumerate::{lex_first_tiling, tiling_polynomial, tiling_polynomial_naive};
use qtiling::formulas::{formula_for, FormulaValue};
use qtiling::lattice::WeightScheme;
use qtiling::qalgebra::QPoly;
use qtiling_cli::input::parse_region;
use qtiling_cli::verify::{verify, Constraints, Suite};
use qtiling_cli::{render, Failure};

/// Exact q-enumeration of lozenge tilings of dented hexagons.
///
/// SPEC is a JSON region spec such as {"family":"hex","params":{"a":1,"b":1,"c":1}},
/// an explicit cell list {"cells":[[i,j,"up"],...]}, or a file holding either.
#[derive(Parser)]
#[command(name = "qtiling", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the number of tilings.
    Count { spec: String },
    /// Print the tiling generating polynomial as JSON.
    Qpoly {
        spec: String,
        #[arg(long, value_enum, default_value = "wt2")]
        weight: Weight,
        #[arg(long, value_enum, default_value = "dp")]
        engine: Engine,
    },
    /// Compare enumeration with the closed forms, or check the identities,
    /// for every parameter tuple up to --max. Exit 0 iff every case passes.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 1)]
        max: u32,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Reading of the plane-partition constraints for the corollary suite.
        #[arg(long, value_enum, default_value = "literal")]
        constraints: Constraints,
    },
    /// Write the region, and optionally a tiling, as SVG.
    Render {
        spec: String,
        #[arg(long, value_enum, default_value = "none")]
        tiling: TilingMode,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Weight {
    None,
    Wt1,
    Wt2,
    Wt3,
}

impl From<Weight> for WeightScheme {
    fn from(w: Weight) -> Self {
        match w {
            Weight::None => WeightScheme::Unweighted,
            Weight::Wt1 => WeightScheme::Wt1,
            Weight::Wt2 => WeightScheme::Wt2,
            Weight::Wt3 => WeightScheme::Wt3,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Engine {
    Dp,
    Naive,
    Formula,
}

#[derive(Clone, Copy, ValueEnum)]
enum TilingMode {
    None,
    LexFirst,
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Count { spec } => {
            let r = parse_region(&spec)?;
            let p = tiling_polynomial(&r.region, WeightScheme::Unweighted)?.value;
            println!("{}", p.eval_at_one());
        }
        Command::Qpoly { spec, weight, engine } => {
            let r = parse_region(&spec)?;
            let scheme = WeightScheme::from(weight);
            let p = match engine {
                Engine::Dp => tiling_polynomial(&r.region, scheme)?.value,
                Engine::Naive => tiling_polynomial_naive(&r.region, scheme)?.value,
                Engine::Formula => {
                    let spec = r
                        .spec
                        .ok_or_else(|| Failure::Capability("the formula engine needs a family spec".into()))?;
                    match formula_for(&spec, scheme).map_err(|e| Failure::Capability(e.to_string()))? {
                        FormulaValue::Product(p) => p.expand()?,
                        FormulaValue::Integer(n) => QPoly::constant(n),
                    }
                }
            };
            println!("{}", p.to_json());
        }
        Command::Verify {
            suite,
            max,
            jobs,
            constraints,
        } => {
            let report = verify(suite, max, jobs, constraints)?;
            println!("{}", serde_json::to_string(&report).expect("reports serialise"));
            if !report.all_passed() {
                if let Some(first) = report.cases.iter().find(|c| c.status != "pass") {
                    eprintln!(
                        "{} of {} cases failed; first: {} {}",
                        report.total - report.passed,
                        report.total,
                        first.suite,
                        first.params
                    );
                }
                return Err(Failure::Mismatch);
            }
        }
        Command::Render { spec, tiling, out } => {
            let r = parse_region(&spec)?;
            if r.region.is_empty() {
                return Err(Failure::Region("nothing to render: the region is empty".into()));
            }
            let lozenges = match tiling {
                TilingMode::None => None,
                TilingMode::LexFirst => Some(
                    lex_first_tiling(&r.region)
                        .ok_or_else(|| Failure::Region("the region has no tiling".into()))?,
                ),
            };
            let svg = render::svg(&r.region, r.spec.as_ref(), lozenges.as_deref());
            std::fs::write(&out, svg).map_err(|e| Failure::Parse(format!("{}: {e}", out.display())))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.exit_code() as u8)
        }
    }
}
