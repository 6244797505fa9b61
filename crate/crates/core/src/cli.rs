//! The `charvar` command line: pairing queries, pairing tables, Gram
//! matrices, dual partners, the `a^g = 0` check and the numerical
//! representation-variety suite, with plain, JSON and CSV output.
//!
//! Exit codes: 0 success, 1 bad input (syntax, index, genus or degree
//! range), 2 strict-mode degree mismatch, 3 violated verification
//! assertions.

use crate::error::Error;
use crate::monomial::{normalize, parse_monomial, Genus};
use crate::pairing::{
    dual_partner, enumerate_monomials, functional, gram, newstead_check, pair_monomial,
    rank_and_radical, table, Generator, SignConvention,
};
use crate::repvar;
use clap::{Parser, Subcommand, ValueEnum};
use std::process::ExitCode;

const SIGN_HELP: &str = "Sign conventions: `consistent` (default) carries the global sign (-1)^g \
in the closed-form pairing, so the empty pairing at genus 1 counts the single point as +1 and \
the gamma anchors at genus 2 come out as 4 and 1. `paper-literal` keeps the (-1)^(g-1) of the \
published closed form, which flips every nonzero pairing (the genus-1 anchor becomes -1); it is \
retained for auditing.";

#[derive(Parser)]
#[command(
    name = "charvar",
    version,
    about = "Exact intersection pairings and Poincare duals on the SU(2) character variety \
             (moduli of rank-2, odd-degree stable bundles) of a genus-g surface",
    after_long_help = SIGN_HELP
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Genus of the surface (at least 1).
    #[arg(long, global = true)]
    genus: Option<u32>,

    /// Global sign of the closed-form pairing (see --help).
    #[arg(long, global = true, value_enum, default_value_t = SignConvention::Consistent)]
    sign_convention: SignConvention,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,

    /// Make degree-mismatched pairing queries an error (exit 2) instead
    /// of evaluating to 0.
    #[arg(long, global = true)]
    strict: bool,

    /// Base seed for verify-rep sampling; sample s uses seed + s.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Number of seeded fiber samples for verify-rep.
    #[arg(long, global = true, default_value_t = 100)]
    samples: u32,

    /// Residual tolerance for verify-rep.
    #[arg(long, global = true, default_value_t = 1e-12)]
    tol: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Pair a monomial (e.g. "f^3", "b1 b3", "gamma") against the
    /// fundamental class.
    Pair { monomial: String },
    /// List every admissible pairing f^m a^n gamma^p with its value.
    Table,
    /// Gram matrix of the Poincare pairing between complementary-degree
    /// monomial bases, with exact rank and radical.
    Gram {
        /// Row degree, between 0 and 6g-6.
        #[arg(long)]
        degree: i64,
    },
    /// Dual partner of a generator (f, a or b<k>) under the pairing,
    /// plus its full pairing vector.
    Dual {
        /// Generator token: f, a or b<k>.
        #[arg(long = "gen")]
        generator: String,
    },
    /// Check that a^g pairs to zero against every complementary
    /// monomial.
    Newstead,
    /// Numerically verify fiber membership, regularity (Jacobian rank
    /// 3), freeness (stabilizer rank 3) and the dimension count.
    VerifyRep,
}

/// Parsed and validated global configuration.
struct CliConfig {
    genus: Genus,
    conv: SignConvention,
    format: Format,
    strict: bool,
    seed: u64,
    samples: u32,
    tol: f64,
}

/// A failure with a chosen process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn bad_input(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::bad_input(e.to_string())
    }
}

type CmdResult = Result<ExitCode, Failure>;

/// Entry point used by the binary.
pub fn run() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn dispatch(cli: Cli) -> CmdResult {
    let genus = cli
        .genus
        .ok_or_else(|| Failure::bad_input("--genus is required"))?;
    let config = CliConfig {
        genus: Genus::new(genus)?,
        conv: cli.sign_convention,
        format: cli.format,
        strict: cli.strict,
        seed: cli.seed,
        samples: cli.samples,
        tol: cli.tol,
    };
    if config.samples < 1 {
        return Err(Failure::bad_input("--samples must be at least 1"));
    }
    if !config.tol.is_finite() || config.tol <= 0.0 {
        return Err(Failure::bad_input("--tol must be positive"));
    }
    match cli.command {
        Command::Pair { monomial } => cmd_pair(&config, &monomial),
        Command::Table => cmd_table(&config),
        Command::Gram { degree } => cmd_gram(&config, degree),
        Command::Dual { generator } => cmd_dual(&config, &generator),
        Command::Newstead => cmd_newstead(&config),
        Command::VerifyRep => cmd_verify_rep(&config),
    }
}

fn cmd_pair(config: &CliConfig, text: &str) -> CmdResult {
    let parsed = parse_monomial(text, config.genus)?;
    let nm = normalize(&parsed, config.genus)?;
    let top = config.genus.top_degree();
    if config.strict && !nm.is_zero() && nm.degree() != top {
        return Err(Failure {
            code: 2,
            message: format!(
                "strict mode: monomial degree {} does not match top degree {top}",
                nm.degree()
            ),
        });
    }
    let value = pair_monomial(&nm, config.genus, config.conv);
    match config.format {
        Format::Json => println!("{}", serde_json::to_string(&value).expect("rational to json")),
        Format::Plain | Format::Csv => println!("{value}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_table(config: &CliConfig) -> CmdResult {
    let rows = table(config.genus, config.conv);
    match config.format {
        Format::Plain => {
            println!("m n p value");
            for r in &rows {
                println!("{} {} {} {}", r.f_exp, r.a_exp, r.gamma_exp, r.value);
            }
        }
        Format::Csv => {
            for r in &rows {
                println!("{},{},{},{}", r.f_exp, r.a_exp, r.gamma_exp, r.value);
            }
        }
        Format::Json => {
            println!("{}", crate::pairing::table_json(config.genus, config.conv));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_gram(config: &CliConfig, degree: i64) -> CmdResult {
    let top = config.genus.top_degree();
    if degree < 0 || degree > top as i64 {
        return Err(Error::DegreeOutOfRange { degree, max: top }.into());
    }
    let gm = gram(config.genus, degree as u32, config.conv)?;
    let (rank, radical) = rank_and_radical(&gm);
    match config.format {
        Format::Plain => {
            let labels = |ms: &[crate::monomial::NormalizedMonomial]| {
                ms.iter().map(|m| m.render()).collect::<Vec<_>>().join(", ")
            };
            println!(
                "Gram matrix, genus {}, degree {} vs {}",
                config.genus,
                gm.degree,
                top - gm.degree
            );
            println!("rows: {}", labels(&gm.rows));
            println!("cols: {}", labels(&gm.cols));
            for (row, entries) in gm.rows.iter().zip(&gm.entries) {
                let line = entries
                    .iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
                println!("{}: {line}", row.render());
            }
            println!("rank: {rank}");
            println!("radical dimension: {}", radical.len());
            for class in &radical {
                println!("radical: {}", class.render());
            }
        }
        Format::Csv => {
            print!("{}", gm.to_csv());
            println!("rank,{rank}");
            println!("radical_dim,{}", radical.len());
            for class in &radical {
                println!("radical,{}", class.render());
            }
        }
        Format::Json => {
            let mut value = gm.to_json_value();
            let obj = value.as_object_mut().expect("gram json is an object");
            obj.insert("rank".into(), serde_json::json!(rank));
            obj.insert("radical_dim".into(), serde_json::json!(radical.len()));
            obj.insert(
                "radical".into(),
                serde_json::json!(radical.iter().map(|c| c.render()).collect::<Vec<_>>()),
            );
            println!("{value}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_dual(config: &CliConfig, token: &str) -> CmdResult {
    let generator = Generator::parse(token, config.genus)?;
    let partner = dual_partner(config.genus, generator, config.conv)?;
    let values = functional(config.genus, &generator.monomial(), config.conv)?;
    let basis = enumerate_monomials(
        config.genus,
        config.genus.top_degree() - generator.degree(),
    )?;
    match config.format {
        Format::Plain => {
            println!("{}", partner.render());
            for (m, v) in basis.iter().zip(&values) {
                println!("{}: {v}", m.render());
            }
        }
        Format::Csv => {
            println!("partner,{}", partner.render());
            for (m, v) in basis.iter().zip(&values) {
                println!("{},{}", m.render(), v.machine_form());
            }
        }
        Format::Json => {
            let out = crate::pairing::dual_json(config.genus, generator, config.conv)?;
            println!("{out}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_newstead(config: &CliConfig) -> CmdResult {
    let report = newstead_check(config.genus, config.conv);
    match config.format {
        Format::Plain | Format::Csv => {
            if report.vacuous {
                println!(
                    "genus {}: vacuous (a^{} already exceeds top degree {})",
                    report.genus,
                    report.genus,
                    config.genus.top_degree()
                );
            } else {
                println!(
                    "genus {}: checked {} complementary pairings of a^{}, {} violations",
                    report.genus,
                    report.checked,
                    report.genus,
                    report.violations.len()
                );
            }
        }
        Format::Json => {
            println!("{}", serde_json::to_string(&report).expect("report to json"));
        }
    }
    if report.passed() {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!(
            "{}",
            serde_json::json!({"failures": report.violations})
        );
        Ok(ExitCode::from(3))
    }
}

fn cmd_verify_rep(config: &CliConfig) -> CmdResult {
    let (report, failures) =
        repvar::verify(config.genus, config.samples, config.seed, config.tol)?;
    match config.format {
        Format::Plain | Format::Csv => {
            println!("genus: {}", report.genus);
            println!("samples: {}", report.samples);
            println!("mu residual max: {:e}", report.mu_residual_max);
            println!("jacobian rank histogram: {:?}", report.jacobian_rank_histogram);
            println!("stabilizer rank histogram: {:?}", report.stabilizer_rank_histogram);
            println!(
                "dimensions: ambient {}, fiber {}, quotient {}",
                report.dims.ambient, report.dims.fiber, report.dims.quotient
            );
        }
        Format::Json => {
            println!("{}", serde_json::to_string(&report).expect("report to json"));
        }
    }
    if failures.is_empty() {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("{}", serde_json::json!({ "failures": failures }));
        Ok(ExitCode::from(3))
    }
}
