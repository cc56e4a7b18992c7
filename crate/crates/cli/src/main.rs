//! `thom`: command-line front end for thom-core.
//!
//! Results go to standard output as JSON. Domain errors print
//! `{"error": ..., "kind": ...}` on standard error and exit with status 1;
//! usage errors exit with status 2.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thom_core::chern::{relative_chern, twist_by_line};
use thom_core::jets::{compose, local_algebra};
use thom_core::symfunc::{expand_in_schur, lr_product, schur_in_elementary};
use thom_core::verify::{
    catalogue_load, default_truncation, reduce_mod2, sigma1_oracle_at, summary_line, verify_catalogue,
};
use thom_core::{ChernSeries, Error, Expansion, Family, GrassmannianRing, JetMap, Partition, Polynomial, Rational};

#[derive(Parser)]
#[command(name = "thom", version, about = "Exact computations with Chern classes, jets and Schur polynomials")]
struct Cli {
    /// Render results for reading instead of as JSON.
    #[arg(long, global = true)]
    human: bool,

    /// Write the result to a file instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Conjugate (transpose) of a partition.
    Conjugate { partition: String },
    /// Schur polynomial of a partition in elementary classes.
    Schur {
        partition: String,
        #[arg(long, default_value = "c")]
        family: String,
    },
    /// Expands a single-family polynomial in the Schur basis.
    Expand {
        poly: String,
        /// Defaults to the only family occurring in the polynomial.
        #[arg(long)]
        family: Option<String>,
    },
    /// Littlewood–Richardson product of two Schur classes.
    Lr { lambda: String, mu: String },
    /// Relative classes c'/c of two series.
    Relchern {
        cprime: String,
        c: String,
        #[arg(long)]
        trunc: Option<usize>,
    },
    /// Total Chern class of a rank-r bundle twisted by alpha times a line class m.
    Twist {
        series: String,
        #[arg(long)]
        rank: usize,
    },
    /// Composition outer ∘ inner of two jets.
    Compose { inner: String, outer: String },
    /// Invariants of the local algebra of a jet.
    Localalg { jet: String },
    /// Schubert calculus on Gr(n, N).
    Grassmann {
        op: GrassmannOp,
        lambda: String,
        mu: String,
        #[arg(long)]
        n: usize,
        #[arg(long = "N")]
        ambient: usize,
    },
    /// Runs the verification harness over a catalogue file.
    Verify {
        catalogue: PathBuf,
        #[arg(long)]
        trunc: Option<usize>,
    },
    /// Generates a catalogue entry from a first-principles oracle.
    Oracle {
        which: OracleKind,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long)]
        trunc: Option<usize>,
    },
    /// Reduces an integer polynomial mod 2 in Stiefel–Whitney letters.
    Mod2 { poly: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum GrassmannOp {
    Product,
    Pair,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleKind {
    Sigma1,
}

/// Result text plus whether the command counts as a success.
struct Outcome {
    text: String,
    ok: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, ok: true }
    }
}

/// Reads an inline JSON argument or the contents of a file.
fn read_input(arg: &str) -> Result<String, Error> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        Ok(arg.to_string())
    } else {
        Ok(fs::read_to_string(arg).map_err(|e| Error::Io(format!("{arg}: {e}")))?)
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(arg: &str) -> Result<T, Error> {
    serde_json::from_str(&read_input(arg)?).map_err(|e| Error::Parse(e.to_string()))
}

fn partition(arg: &str) -> Result<Partition, Error> {
    arg.parse()
}

fn family(tag: &str) -> Result<Family, Error> {
    Family::new(tag)
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, Error> {
    Ok(serde_json::to_string(value)?)
}

fn render<T: serde::Serialize + std::fmt::Display>(value: &T, human: bool) -> Result<String, Error> {
    if human {
        Ok(value.to_string())
    } else {
        to_json(value)
    }
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let human = cli.human;
    let text = match &cli.command {
        Command::Conjugate { partition: p } => render(&partition(p)?.conjugate(), human)?,
        Command::Schur { partition: p, family: f } => {
            render(&schur_in_elementary::<Rational>(&partition(p)?, &family(f)?), human)?
        }
        Command::Expand { poly, family: f } => {
            let p: Polynomial = parse_json(poly)?;
            let fam = match f {
                Some(tag) => family(tag)?,
                None => {
                    let families = p.families();
                    match families.len() {
                        0 => Family::C,
                        1 => families.into_iter().next().expect("one family"),
                        _ => {
                            return Err(Error::Parse(
                                "polynomial mixes variable families; pass --family".into(),
                            ))
                        }
                    }
                }
            };
            render(&expand_in_schur(&p, &fam)?, human)?
        }
        Command::Lr { lambda, mu } => render(&lr_product::<Rational>(&partition(lambda)?, &partition(mu)?), human)?,
        Command::Relchern { cprime, c, trunc } => {
            let a: ChernSeries<Rational> = parse_json(cprime)?;
            let b: ChernSeries<Rational> = parse_json(c)?;
            let d = trunc.unwrap_or_else(|| (2 * a.degree().max(b.degree())).max(1));
            render(&relative_chern(&a.retruncate(d), &b.retruncate(d))?, human)?
        }
        Command::Twist { series, rank } => {
            let e: ChernSeries<Rational> = parse_json(series)?;
            let e = e.with_rank(Some(*rank))?;
            render(&twist_by_line(&e, &Family::M.var(1), &Family::ALPHA.var(1))?, human)?
        }
        Command::Compose { inner, outer } => {
            let a: JetMap<Rational> = parse_json(inner)?;
            let b: JetMap<Rational> = parse_json(outer)?;
            render(&compose(&a, &b)?, human)?
        }
        Command::Localalg { jet } => {
            let psi: JetMap<Rational> = parse_json(jet)?;
            let report = local_algebra(&psi);
            if human {
                format!(
                    "dimension        {}\nhilbert          {:?}\nnilpotency index {}\npairing ranks    {:?}",
                    report.dimension, report.hilbert, report.nilpotency_index, report.pairing_ranks
                )
            } else {
                to_json(&report)?
            }
        }
        Command::Grassmann { op, lambda, mu, n, ambient } => {
            let ring = GrassmannianRing::new(*n, *ambient)?;
            let (l, m) = (partition(lambda)?, partition(mu)?);
            match op {
                GrassmannOp::Product => render(&ring.cup_product::<Rational>(&l, &m)?, human)?,
                GrassmannOp::Pair => ring.intersection_number(&l, &m)?.to_string(),
            }
        }
        Command::Verify { catalogue, trunc } => return verify(catalogue, *trunc, human),
        Command::Oracle { which: OracleKind::Sigma1, k, n, trunc } => {
            let d = trunc.unwrap_or(2 * (k + 1).saturating_sub(*n)).max(1);
            let entry = sigma1_oracle_at(*n, *k, d)?;
            if human {
                format!("{} (n={}, k={}, codim {}): {}", entry.name, entry.n, entry.k, entry.codim, entry.poly)
            } else {
                to_json(&entry)?
            }
        }
        Command::Mod2 { poly } => {
            let p: Polynomial = parse_json(poly)?;
            render(&reduce_mod2(&p)?, human)?
        }
    };
    Ok(Outcome::ok(text))
}

fn verify(path: &PathBuf, trunc: Option<usize>, human: bool) -> Result<Outcome, Error> {
    let entries = catalogue_load(path)?;
    let d = trunc.unwrap_or_else(|| default_truncation(&entries));
    let reports = verify_catalogue(&entries, d);
    let mut lines = Vec::with_capacity(reports.len() + 1);
    for r in &reports {
        if human {
            let form = r.relative_form.as_ref().map_or("-".to_string(), Expansion::to_string);
            let flag = |b: bool| if b { "yes" } else { "no" };
            lines.push(format!(
                "{:<12} n={:<2} k={:<2} damon={:<3} positive={:<3} stable={:<3} substitution={:<3} form={}{}",
                r.name,
                r.n,
                r.k,
                flag(r.damon_ok),
                flag(r.positive_ok),
                flag(r.stabilization_ok),
                flag(r.substitution_ok),
                form,
                if r.notes.is_empty() { String::new() } else { format!("  ({})", r.notes.join("; ")) }
            ));
        } else {
            lines.push(to_json(r)?);
        }
    }
    lines.push(summary_line(&reports));
    Ok(Outcome { text: lines.join("\n"), ok: reports.iter().all(|r| r.passed()) })
}

fn diagnostic(err: &Error) -> Value {
    json!({ "error": err.to_string(), "kind": err.kind() })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            let mut text = outcome.text;
            text.push('\n');
            let written = match &cli.output {
                Some(path) => fs::write(path, &text).map_err(|e| Error::Io(format!("{}: {e}", path.display()))),
                None => std::io::stdout().write_all(text.as_bytes()).map_err(Error::from),
            };
            if let Err(err) = written {
                eprintln!("{}", diagnostic(&err));
                return ExitCode::from(1);
            }
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("{}", diagnostic(&err));
            ExitCode::from(1)
        }
    }
}
