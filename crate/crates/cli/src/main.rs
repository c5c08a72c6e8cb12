//! `betti`: command-line front end.
//!
//! Exit codes: 0 success, 1 mathematical finding (violation, not in cone),
//! 2 usage or input error. Failures print one `betti: <code>: <message>` line
//! on stderr.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use betti_core::asymptotics::{self, AsymptoticParams};
use betti_core::beh::{self, ScanMode};
use betti_core::decomposition::{decompose, recompose, validate_bounds};
use betti_core::lemmas;
use betti_core::monomial::{corpus, taylor_betti, MonomialIdeal};
use betti_core::rational;
use betti_core::{herzog_kuhl, BettiDiagram, DegreeSequence, Error};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "betti", version, about = "Exact Betti diagram toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Table)]
    format: Format,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    json: bool,
}

impl OutputArgs {
    fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else {
            self.format
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Normalized pure diagram of a degree sequence.
    Pure {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        degrees: Vec<i64>,
    },
    /// Boij-Söderberg decomposition of a diagram file.
    Decompose { file: PathBuf },
    /// Rank bound beta_j >= beta_0 C(c, j) for a diagram file.
    CheckBeh {
        file: PathBuf,
        #[arg(long)]
        codim: Option<usize>,
    },
    /// Rank bound beta_j >= C(s, j) for a pure diagram.
    CheckPure {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        degrees: Vec<i64>,
    },
    /// Exhaustive scan over pure diagrams with d_0 = 0.
    Scan {
        #[arg(long, default_value_t = 1)]
        s_min: usize,
        #[arg(long)]
        s_max: usize,
        #[arg(long)]
        d_max: i64,
        #[arg(long, value_parser = parse_mode)]
        mode: ScanMode,
    },
    /// Lower bounds for beta_j(S/I^t) over t = 1..t_max.
    Asymptotic {
        #[arg(long)]
        codim: u32,
        #[arg(long)]
        delta: u32,
        #[arg(long)]
        defect: u32,
        #[arg(long)]
        j: u32,
        #[arg(long)]
        t_max: u32,
        /// Gap coordinates (e_2, ..., e_s); adds the pure-diagram column.
        #[arg(long, value_delimiter = ',')]
        tail: Option<Vec<i64>>,
    },
    /// Seeded exact checks of the b_j derivative and minimum properties.
    VerifyLemmas {
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        s_max: usize,
    },
    /// Betti diagram of S/I for a monomial ideal file or named family.
    MonomialBetti {
        #[arg(required_unless_present = "family", conflicts_with = "family")]
        file: Option<PathBuf>,
        #[arg(long)]
        family: Option<String>,
    },
}

fn parse_mode(s: &str) -> Result<ScanMode, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Outcome of a subcommand that ran to completion.
enum Outcome {
    Ok,
    Finding(String),
}

enum Failure {
    Usage(String, String),
    Finding(String, String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_finding() {
            Failure::Finding(e.code().into(), e.to_string())
        } else {
            Failure::Usage(e.code().into(), e.to_string())
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::Usage("io-error".into(), format!("{}: {e}", path.display())))
}

fn read_diagram(path: &Path) -> Result<BettiDiagram, Failure> {
    Ok(BettiDiagram::parse_json(&read(path)?)?)
}

fn print_diagram(d: &BettiDiagram, format: Format) {
    match format {
        Format::Json => println!("{}", d.to_json_string()),
        _ => print!("{}", d.render_table()),
    }
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    let format = cli.output.format();
    match cli.command {
        Command::Pure { degrees } => {
            let d = DegreeSequence::new(degrees)?;
            print_diagram(&herzog_kuhl(&d).diagram, format);
            Ok(Outcome::Ok)
        }
        Command::Decompose { file } => {
            let d = read_diagram(&file)?;
            let dec = decompose(&d)?;
            debug_assert_eq!(recompose(&dec), d);
            let bounds = validate_bounds(&dec, &d)?;
            match format {
                Format::Json => println!("{}", dec.to_json_string()),
                _ => {
                    for t in &dec.terms {
                        println!("{} * pi{}", rational::format(&t.coefficient), t.degrees);
                    }
                    println!(
                        "bounds: {} (codim {}, pd {})",
                        if bounds.passed() { "ok" } else { "violated" },
                        bounds.codim,
                        bounds.proj_dim
                    );
                }
            }
            Ok(if bounds.passed() {
                Outcome::Ok
            } else {
                Outcome::Finding("decomposition term outside the degree bounds".into())
            })
        }
        Command::CheckBeh { file, codim } => {
            let d = read_diagram(&file)?;
            let report = beh::beh_check(&d, codim)?;
            if report.shift != 0 {
                eprintln!("notice: generators translated by {}", report.shift);
            }
            print_beh(&report, format);
            Ok(beh_outcome(&report))
        }
        Command::CheckPure { degrees } => {
            let d = DegreeSequence::new(degrees)?;
            let report = beh::pure_beh_check(&d);
            print_beh(&report, format);
            Ok(beh_outcome(&report))
        }
        Command::Scan {
            s_min,
            s_max,
            d_max,
            mode,
        } => {
            let report = beh::scan(s_min..=s_max, d_max, mode)?;
            print!("{}", report.to_csv());
            Ok(match report.violations {
                0 => Outcome::Ok,
                n => Outcome::Finding(format!("{n} violating sequences")),
            })
        }
        Command::Asymptotic {
            codim,
            delta,
            defect,
            j,
            t_max,
            tail,
        } => {
            let p = AsymptoticParams {
                codim,
                delta,
                defect,
                j,
                t: 1,
            };
            let rows = asymptotics::table(&p, t_max, tail.as_deref())?;
            let mut failed = None;
            if let Some(tail) = &tail {
                for t in 1..=t_max {
                    let cmp = asymptotics::bound_vs_pure(&p.with_t(t), tail)?;
                    if !cmp.pass && failed.is_none() {
                        failed = Some(format!("t={t}: b_j {} < bound {}", cmp.b_j, cmp.exact_bound));
                    }
                }
            }
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&rows).expect("rows serialize")
                ),
                _ => {
                    let header = if tail.is_some() { "t\tleading\texact\tb_j" } else { "t\tleading\texact" };
                    println!("{header}");
                    for r in &rows {
                        match &r.b_j {
                            Some(b) => println!("{}\t{}\t{}\t{}", r.t, r.leading, r.exact_bound, b),
                            None => println!("{}\t{}\t{}", r.t, r.leading, r.exact_bound),
                        }
                    }
                }
            }
            Ok(failed.map_or(Outcome::Ok, Outcome::Finding))
        }
        Command::VerifyLemmas {
            samples,
            seed,
            s_max,
        } => {
            let reports = lemmas::verify_all(s_max, samples, seed);
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&reports).expect("reports serialize")
                ),
                _ => {
                    for r in &reports {
                        println!(
                            "{}: {} samples, seed {}, {} violations",
                            r.lemma,
                            r.samples,
                            r.seed,
                            r.violations.len()
                        );
                    }
                }
            }
            let bad: usize = reports.iter().map(|r| r.violations.len()).sum();
            Ok(match bad {
                0 => Outcome::Ok,
                n => Outcome::Finding(format!("{n} lemma violations")),
            })
        }
        Command::MonomialBetti { file, family } => {
            let ideal = match (file, family) {
                (_, Some(name)) => corpus(&name)?,
                (Some(path), None) => MonomialIdeal::parse_json(&read(&path)?)?,
                (None, None) => unreachable!("clap enforces one source"),
            };
            print_diagram(&taylor_betti(&ideal)?, format);
            Ok(Outcome::Ok)
        }
    }
}

fn print_beh(report: &beh::BehReport, format: Format) {
    match format {
        Format::Json => println!("{}", report.to_json_string()),
        _ => println!("{report}"),
    }
}

fn beh_outcome(report: &beh::BehReport) -> Outcome {
    match report.first_failure() {
        None => Outcome::Ok,
        Some(c) => Outcome::Finding(format!("j={}: {} < {}", c.j, c.actual, c.required)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Finding(msg)) => {
            eprintln!("betti: finding: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Finding(code, msg)) => {
            eprintln!("betti: {code}: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(code, msg)) => {
            eprintln!("betti: {code}: {msg}");
            ExitCode::from(2)
        }
    }
}
