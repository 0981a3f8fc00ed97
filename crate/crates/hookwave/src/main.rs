use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use hookwave::bijections::{complement, eta, mu, nu, phi, psi, reverse, theta, Semipermutation};
use hookwave::cohomology::{
    enumerate_basis, monomial_to_permutation, permutation_to_monomial, ChainMonomial,
};
use hookwave::enumeration::{eulerian_table, verify_all, Report};
use hookwave::waves::{srdes, srw_split, sw_split};
use hookwave::words::{des, des_set, hook_factorization, inv, lec, Word};
use hookwave::Error;

#[derive(Parser)]
#[command(
    name = "hookwave",
    about = "Statistics, decompositions and bijections on words with distinct entries",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MapName {
    Theta,
    Eta,
    Psi,
    Phi,
    Mu,
    Nu,
    /// Complement c(σ) = (n+1−σ_1)…(n+1−σ_n).
    C,
    /// Reversal r(σ) = σ_n…σ_1.
    R,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Direction {
    /// Monomial text to permutation.
    ToPerm,
    /// Permutation to monomial text.
    ToMonomial,
}

#[derive(Subcommand)]
enum Command {
    /// All statistics and decompositions of one word.
    Stats {
        word: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Apply one of the named maps to a word or semipermutation.
    Apply {
        #[arg(value_enum)]
        map: MapName,
        input: String,
        /// Required for nu; ignored elsewhere.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Generalized Eulerian row: counts of semipermutations by descents.
    Table {
        n: u32,
        k: usize,
        /// OEIS b-file style output: one "i count" line per entry.
        #[arg(long)]
        bfile: bool,
    },
    /// List the monomial basis in canonical order.
    Basis {
        n: u32,
        k: u32,
        #[arg(long)]
        grade: Option<usize>,
    },
    /// Convert between chain monomials and permutations.
    Monomial {
        #[arg(value_enum)]
        direction: Direction,
        input: String,
        #[arg(long)]
        k: u32,
        /// Ambient size; required for to-perm (the text form does not carry it).
        #[arg(long)]
        n: Option<u32>,
    },
    /// Run the exhaustive verification suite for all n ≤ n_max.
    Verify {
        n_max: u32,
        /// Override the safety cap on n_max.
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn show(w: &Word) -> String {
    if w.is_empty() {
        "ε".into()
    } else {
        w.to_string()
    }
}

fn run_stats(word: &str, format: Format) -> Result<(), Error> {
    let w: Word = word.parse()?;
    let hf = hook_factorization(&w);
    let (srw, srw_rest, sd) = if w.is_empty() {
        (Word::empty(), Word::empty(), 0)
    } else {
        let split = srw_split(&w)?;
        (split.srw, split.rest, srdes(&w)?)
    };
    let (sw, sw_rest) = if w.is_empty() {
        (Word::empty(), Word::empty())
    } else {
        let split = sw_split(&w)?;
        (split.sw, split.rest)
    };
    match format {
        Format::Text => {
            println!("word: {}", show(&w));
            println!("des: {}", des(&w));
            let positions: Vec<String> = des_set(&w).iter().map(|p| p.to_string()).collect();
            println!("Des: {}", if positions.is_empty() { "-".into() } else { positions.join(" ") });
            println!("inv: {}", inv(&w));
            println!("lec: {}", lec(&w));
            let mut parts = vec![show(&hf.gamma)];
            parts.extend(hf.hooks.iter().map(|h| h.to_string()));
            println!("hook factorization: {}", parts.join(" | "));
            println!("srw: {}", show(&srw));
            println!("srw rest: {}", show(&srw_rest));
            println!("srdes: {sd}");
            println!("sw: {}", show(&sw));
            println!("sw rest: {}", show(&sw_rest));
        }
        Format::Json => {
            let value = json!({
                "word": w.to_string(),
                "des": des(&w),
                "des_set": des_set(&w),
                "inv": inv(&w),
                "lec": lec(&w),
                "gamma": hf.gamma.to_string(),
                "hooks": hf.hooks.iter().map(|h| h.to_string()).collect::<Vec<_>>(),
                "srw": srw.to_string(),
                "srw_rest": srw_rest.to_string(),
                "srdes": sd,
                "sw": sw.to_string(),
                "sw_rest": sw_rest.to_string(),
            });
            println!("{value}");
        }
    }
    Ok(())
}

fn run_apply(map: MapName, input: &str, k: Option<usize>) -> Result<(), Error> {
    match map {
        MapName::Theta | MapName::Eta | MapName::Psi | MapName::Phi | MapName::R => {
            let w: Word = input.parse()?;
            let image = match map {
                MapName::Theta => theta(&w),
                MapName::Eta => eta(&w),
                MapName::Psi => psi(&w),
                MapName::Phi => phi(&w),
                MapName::R => reverse(&w),
                _ => unreachable!(),
            };
            println!("{image}");
        }
        MapName::C => {
            let w: Word = input.parse()?;
            println!("{}", complement(&w, w.len() as u32)?);
        }
        MapName::Mu => {
            let sp: Semipermutation = input.parse()?;
            println!("{}", mu(&sp));
        }
        MapName::Nu => {
            let k = k.ok_or_else(|| Error::domain("nu requires --k"))?;
            let w: Word = input.parse()?;
            println!("{}", nu(&w, k)?);
        }
    }
    Ok(())
}

fn run_table(n: u32, k: usize, bfile: bool) -> Result<(), Error> {
    let table = eulerian_table(n, k)?;
    if bfile {
        for (i, count) in table.counts.iter().enumerate() {
            println!("{i} {count}");
        }
    } else {
        let row: Vec<String> = table.counts.iter().map(|c| c.to_string()).collect();
        println!("{}", row.join(" "));
    }
    Ok(())
}

fn run_basis(n: u32, k: u32, grade: Option<usize>) -> Result<(), Error> {
    for m in enumerate_basis(n, k, grade)? {
        println!("{m}");
    }
    Ok(())
}

fn run_monomial(direction: Direction, input: &str, k: u32, n: Option<u32>) -> Result<(), Error> {
    match direction {
        Direction::ToPerm => {
            let n = n.ok_or_else(|| Error::domain("to-perm requires --n"))?;
            let m = ChainMonomial::parse(input, n, k)?;
            println!("{}", monomial_to_permutation(&m)?);
        }
        Direction::ToMonomial => {
            let w: Word = input.parse()?;
            println!("{}", permutation_to_monomial(&w, k)?);
        }
    }
    Ok(())
}

fn print_report(report: &Report, format: Format) {
    match format {
        Format::Text => {
            for check in &report.checks {
                if check.passed {
                    println!("PASS {} ({})", check.name, check.params);
                } else {
                    println!(
                        "FAIL {} ({}): {}",
                        check.name,
                        check.params,
                        check.counterexample.as_deref().unwrap_or("no counterexample recorded")
                    );
                }
            }
            let failed = report.checks.iter().filter(|c| !c.passed).count();
            println!("{} checks, {} failed", report.checks.len(), failed);
        }
        Format::Json => {
            for check in &report.checks {
                println!("{}", serde_json::to_string(check).expect("serializable"));
            }
        }
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Stats { word, format } => run_stats(&word, format).map(|()| 0),
        Command::Apply { map, input, k } => run_apply(map, &input, k).map(|()| 0),
        Command::Table { n, k, bfile } => run_table(n, k, bfile).map(|()| 0),
        Command::Basis { n, k, grade } => run_basis(n, k, grade).map(|()| 0),
        Command::Monomial { direction, input, k, n } => {
            run_monomial(direction, &input, k, n).map(|()| 0)
        }
        Command::Verify { n_max, force, format } => {
            let report = verify_all(n_max, force)?;
            print_report(&report, format);
            Ok(if report.all_passed() { 0 } else { 3 })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            let code = match err {
                Error::Parse { .. } => 1,
                _ => 2,
            };
            ExitCode::from(code)
        }
    }
}
