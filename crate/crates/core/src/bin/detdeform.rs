use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use detdeform::cli::{
    cmd_analyze_file, cmd_analyze_random, cmd_invariants, cmd_reproduce, cmd_survey,
    render, AnalyzeOptions, FieldSpec, SurveyParams, DEFAULT_SURVEY_BUDGET,
};
use detdeform::detmodel::DegreeData;
use detdeform::gradeddef::DEFAULT_SLICE_CAP;

#[derive(Parser)]
#[command(name = "detdeform", version, about = "Determinantal schemes and their graded deformations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct DegreeArgs {
    /// Dimension of the ambient projective space
    #[arg(long)]
    n: usize,
    /// Row degrees b_1..b_t, ascending
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    b: Vec<i64>,
    /// Column degrees a_0..a_{t+c-2}, ascending
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    a: Vec<i64>,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form invariants and hypothesis flags of the degree data
    Invariants(#[command(flatten)] DegreeArgs),
    /// Full pipeline on a matrix file or a random matrix
    Analyze {
        /// Matrix file
        file: Option<PathBuf>,
        /// Use a random matrix with this seed instead of a file
        #[arg(long, requires_all = ["n", "b", "a"])]
        random: Option<u64>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        b: Option<Vec<i64>>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        a: Option<Vec<i64>>,
        /// Coefficient field for random matrices (a prime)
        #[arg(long, default_value = "32003")]
        field: String,
        /// Skip the degreewise exactness checks of the resolutions
        #[arg(long)]
        no_exactness: bool,
        /// Largest slice dimension for the codimension estimates
        #[arg(long, default_value_t = DEFAULT_SLICE_CAP)]
        slice_cap: usize,
        /// Add per-stage timings to the report
        #[arg(long)]
        timing: bool,
    },
    /// Random sweep comparing ext1_R with the closed formula
    Survey {
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        t: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        c: Vec<usize>,
        /// Allowed values of n - c
        #[arg(long, value_delimiter = ',', default_value = "1,2")]
        excess: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        max_degree: i64,
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Redraw instances whose largest quotient slice exceeds this dimension
        #[arg(long, default_value_t = DEFAULT_SURVEY_BUDGET)]
        budget: usize,
    },
    /// Run a built-in example and check its known values
    Reproduce {
        /// One of 5.10, twisted-cubic, exception-points
        id: String,
        #[arg(long)]
        timing: bool,
    },
}

fn input_error(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(2)
}

/// Writes to stdout, treating a closed pipe as a quiet success.
fn emit(text: impl std::fmt::Display) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}");
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Invariants(d) => match cmd_invariants(d.n, d.b, d.a) {
            Ok(r) => emit(render(&r)),
            Err(e) => return input_error(e),
        },
        Command::Analyze {
            file,
            random,
            n,
            b,
            a,
            field,
            no_exactness,
            slice_cap,
            timing,
        } => {
            let mut opts = AnalyzeOptions {
                exactness: !no_exactness,
                slice_cap,
                timing,
                ..AnalyzeOptions::default()
            };
            let result = match (file, random) {
                (Some(path), None) => match std::fs::read_to_string(&path) {
                    Ok(text) => cmd_analyze_file(&text, &opts),
                    Err(e) => return input_error(format!("{}: {e}", path.display())),
                },
                (None, Some(seed)) => {
                    opts.seed = seed;
                    let field = match field.parse::<FieldSpec>() {
                        Ok(f) => f,
                        Err(e) => return input_error(e),
                    };
                    DegreeData::new(n.unwrap_or(0), b.unwrap_or_default(), a.unwrap_or_default())
                        .and_then(|dd| cmd_analyze_random(&dd, field, &opts))
                }
                _ => return input_error("give either a matrix file or --random SEED with --n, --b, --a"),
            };
            match result {
                Ok(an) => emit(render(&an.report(timing))),
                Err(e) => return input_error(e),
            }
        }
        Command::Survey {
            t,
            c,
            excess,
            max_degree,
            count,
            seed,
            budget,
        } => {
            let params = SurveyParams {
                t,
                c,
                excess,
                max_degree,
                count,
                seed,
                budget,
            };
            match cmd_survey(&params) {
                Ok(s) => emit(s),
                Err(e) => return input_error(e),
            }
        }
        Command::Reproduce { id, timing } => match cmd_reproduce(&id, timing) {
            Ok(rep) => {
                emit(render(&rep.analysis.report(timing)));
                for c in &rep.checks {
                    let status = if c.passed() { "ok" } else { "MISMATCH" };
                    eprintln!("{:<20} expected {:<22} found {:<22} {status}", c.name, c.expected, c.found);
                }
                if !rep.passed() {
                    return ExitCode::from(1);
                }
            }
            Err(e) => return input_error(e),
        },
    }
    ExitCode::SUCCESS
}
