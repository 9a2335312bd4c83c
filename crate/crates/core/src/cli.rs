//! Command-line front end. [`run`] is the whole program minus process I/O so
//! that it can be driven from tests.

use clap::{Args, Parser, Subcommand};

use crate::bounds::{self, check_morphism_params, check_pair_params};
use crate::chow::{cotangent_total_chern, twisted_top_chern, CompleteIntersectionSpec};
use crate::error::Error;
use crate::feasibility::{classify_case, classify_m, generate_table, CharMode, CharProfile, MorphismCase};
use crate::golden::{parse_golden, verify_paper_tables, verify_tables};
use crate::numerics::render;
use crate::render::{self, BoundPoint, BoundScan, ChernOutput, Format};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "morphcheck", version, about = "Exact Hurwitz-type bounds for morphisms of hypersurfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Chern classes of the cotangent sheaf of a complete intersection.
    Chern {
        #[arg(long)]
        n: u32,
        /// Multidegree, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<u32>,
        #[arg(long, allow_negative_numbers = true)]
        twist: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Both sides of the Hurwitz inequality, for one m or for the whole scan.
    Bound {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        e: u32,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Rule-engine verdicts for (n, d, e), or for a single m.
    Check {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        e: u32,
        #[arg(long)]
        m: Option<u32>,
        #[command(flatten)]
        profile: ProfileArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// One row per d = 1..dmax.
    Table {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        e: u32,
        #[arg(long)]
        dmax: u32,
        #[command(flatten)]
        profile: ProfileArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Regenerate the built-in P^4 tables and compare with the golden sets.
    VerifyPaper {
        /// Compare against this golden file instead of the built-in one.
        #[arg(long)]
        golden: Option<std::path::PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Debug, Args)]
struct ProfileArgs {
    /// Characteristic: 0 or p.
    #[arg(long = "char", default_value = "0", value_parser = parse_char)]
    characteristic: CharMode,
    /// Add the integrality and small-m rules.
    #[arg(long)]
    strict: bool,
}

impl ProfileArgs {
    fn profile(&self) -> CharProfile {
        CharProfile::new(self.characteristic, self.strict)
    }
}

fn parse_char(s: &str) -> Result<CharMode, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: String) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

/// Runs the CLI on `argv` (including the program name).
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            if matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome::ok(err.to_string());
            }
            // clap renders several lines with usage; keep only the diagnostic.
            let text = err.to_string();
            let first = text.lines().next().unwrap_or("invalid arguments");
            return Outcome::usage(first.trim_start_matches("error: ").to_string());
        }
    };
    match execute(cli.command) {
        Ok(outcome) => outcome,
        Err(err) => Outcome::usage(err.to_string()),
    }
}

fn bound_point(n: u32, d: u32, e: u32, m: u32) -> BoundPoint {
    BoundPoint {
        n,
        d,
        e,
        m,
        hurwitz: bounds::hurwitz_check(n, d, e, m),
        relaxed: bounds::relaxed_sides(n, d, e, m),
        degree_f: bounds::degree_f(n, d, e, m),
        asymptotic: bounds::asymptotic_necessary(d, e, m),
        alpha: bounds::separability_threshold(n, d, e, m).ok(),
    }
}

fn execute(command: Command) -> Result<Outcome, Error> {
    let stdout = match command {
        Command::Chern {
            n,
            degrees,
            twist,
            format,
        } => {
            let spec = CompleteIntersectionSpec::new(n, degrees.clone())?;
            let total = cotangent_total_chern(&spec);
            let output = ChernOutput {
                n,
                degrees,
                twist,
                total_chern: total.coefficients().iter().map(render).collect(),
                top_chern: render(&twisted_top_chern(&spec, twist)),
            };
            render::chern(&output, format)
        }
        Command::Bound { n, d, e, m, format } => match m {
            Some(m) => {
                check_morphism_params(n, d, e, m)?;
                render::bound_point(&bound_point(n, d, e, m), format)
            }
            None => {
                check_pair_params(n, d, e)?;
                let bound = bounds::max_poly_degree(n, d, e);
                let points = (1..=bound.relaxed_threshold).map(|m| bound_point(n, d, e, m)).collect();
                render::bound_scan(&BoundScan::new(n, d, e, bound, points), format)
            }
        },
        Command::Check {
            n,
            d,
            e,
            m,
            profile,
            format,
        } => {
            let profile = profile.profile();
            match m {
                Some(m) => {
                    let case = MorphismCase::new(n, d, e, m, profile)?;
                    render::single_verdict(n, d, e, profile, &classify_m(&case), format)
                }
                None => render::case_report(&classify_case(n, d, e, profile)?, format),
            }
        }
        Command::Table {
            n,
            e,
            dmax,
            profile,
            format,
        } => {
            let profile = profile.profile();
            let rows = generate_table(n, e, dmax, profile)?;
            render::table(n, e, dmax, profile, &rows, format)
        }
        Command::VerifyPaper { golden, format } => {
            let report = match golden {
                None => verify_paper_tables(),
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|err| Error::Parse(format!("{}: {err}", path.display())))?;
                    verify_tables(&parse_golden(&text)?)?
                }
            };
            let stdout = render::verification(&report, format);
            return Ok(Outcome {
                code: if report.passed { EXIT_OK } else { EXIT_MISMATCH },
                stdout,
                stderr: String::new(),
            });
        }
    };
    Ok(Outcome::ok(stdout))
}
