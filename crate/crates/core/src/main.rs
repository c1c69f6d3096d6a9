use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use serde_json::json;

use rookshuffle::boards::{
    adjacency_hit_numbers, adjacency_rook_numbers, hits_from_rook_numbers, parse_condition_file,
    rook_numbers, rook_polynomial_from_numbers, BoardError, ConditionFile, RookNumbers,
};
use rookshuffle::closedforms::{full_adjacency_poly, full_board_poly};
use rookshuffle::exactnum::{group_digits, BigInteger};
use rookshuffle::polynomial::IntPolynomial;
use rookshuffle::shuffle::{
    adjacency_distribution, approximate, bruteforce_distribution, generalized_derangement_count,
    perfect_shuffle_report_with_digits, DeckComposition, DeckError, DEFAULT_DIGITS, MAX_DECK_SIZE,
};
use rookshuffle::verify::simulate_with_threads;

/// Largest deck for which `simulate` also prints the exact probability.
const EXACT_COMPARISON_LIMIT: usize = 60;

#[derive(Parser)]
#[command(name = "rookshuffle", version, about = "Exact perfect-shuffle probabilities via rook polynomials")]
struct Cli {
    /// Emit JSON instead of key: value text.
    #[arg(long, global = true)]
    json: bool,
    /// Insert thousands separators into exact integers (text output only).
    #[arg(long, global = true)]
    group: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact probability that no two cards of equal value are adjacent.
    Prob {
        /// Deck spec: "RxC" (e.g. 13x4) or a comma list (e.g. 4,4,4).
        #[arg(long)]
        deck: String,
        #[arg(long, default_value_t = DEFAULT_DIGITS)]
        digits: usize,
        /// Also print counts of value sequences (labels ignored).
        #[arg(long)]
        words: bool,
    },
    /// Distribution of the number of equal-value adjacent pairs.
    Dist {
        #[arg(long)]
        deck: String,
    },
    /// Rook polynomial of a board or adjacency file.
    Rook {
        file: PathBuf,
        /// Also print the hit numbers.
        #[arg(long)]
        hits: bool,
    },
    /// Closed-form polynomial l_n (complete board) or l*_n (all adjacencies).
    #[command(group(ArgGroup::new("kind").required(true).args(["full", "linear"])))]
    Poly {
        #[arg(long, value_name = "N")]
        full: Option<u64>,
        #[arg(long, value_name = "N")]
        linear: Option<u64>,
        #[arg(long, default_value_t = 1)]
        power: u32,
        /// Also print the image under x^k -> k!.
        #[arg(long)]
        phi: bool,
    },
    /// Generalized derangements: permutations moving every card to a different value.
    Derange {
        #[arg(long)]
        counts: String,
    },
    /// Monte Carlo estimate with a reproducible seed.
    Simulate {
        #[arg(long)]
        deck: String,
        #[arg(long)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads; the result does not depend on this.
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Exhaustive distribution, checked against the exact method.
    Brute {
        #[arg(long)]
        deck: String,
    },
}

enum Failure {
    Usage(String),
    Guard(String),
    Mismatch,
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Guard(_) => 2,
            Failure::Mismatch => 3,
        }
    }
}

impl From<DeckError> for Failure {
    fn from(e: DeckError) -> Self {
        match e {
            DeckError::TooLarge { .. } | DeckError::TooLargeForEnumeration { .. } => Failure::Guard(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<BoardError> for Failure {
    fn from(e: BoardError) -> Self {
        match e {
            BoardError::TooLargeForEnumeration { .. } | BoardError::SearchBudgetExceeded { .. } => {
                Failure::Guard(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            match &failure {
                Failure::Usage(msg) | Failure::Guard(msg) => eprintln!("error: {msg}"),
                Failure::Mismatch => eprintln!("error: exact and exhaustive distributions differ"),
            }
            ExitCode::from(failure.exit_code())
        }
    }
}

fn int(v: &BigInteger, group: bool) -> String {
    if group {
        group_digits(&v.to_string())
    } else {
        v.to_string()
    }
}

fn pretty(v: serde_json::Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(&v).expect("JSON values always serialize"))
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let (json, group) = (cli.json, cli.group);
    match &cli.command {
        Command::Prob { deck, digits, words } => {
            let deck: DeckComposition = deck.parse()?;
            let report = perfect_shuffle_report_with_digits(&deck, *digits);
            Ok(if json { pretty(report.to_json()) } else { report.to_text(group, *words) })
        }
        Command::Dist { deck } => {
            let dist = adjacency_distribution(&deck.parse()?);
            Ok(if json { pretty(dist.to_json()) } else { dist.to_text(group) })
        }
        Command::Rook { file, hits } => {
            let text = fs::read_to_string(file)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", file.display())))?;
            let parsed =
                parse_condition_file(&text).map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?;
            rook_command(&parsed, *hits, json)
        }
        Command::Poly { full, linear, power, phi } => {
            let (n, closed_form): (u64, fn(u64) -> IntPolynomial) = match (full, linear) {
                (Some(n), _) => (*n, full_board_poly),
                (_, Some(n)) => (*n, full_adjacency_poly),
                _ => unreachable!("clap enforces one of --full/--linear"),
            };
            let degree = n.saturating_mul(u64::from(*power));
            if degree > MAX_DECK_SIZE as u64 {
                return Err(Failure::Guard(format!("degree {degree} exceeds the limit of {MAX_DECK_SIZE}")));
            }
            let poly = closed_form(n).pow(*power);
            if json {
                let coeffs: Vec<String> = poly.coeffs().iter().map(ToString::to_string).collect();
                let mut v = json!({ "polynomial": poly.to_string(), "coefficients": coeffs });
                if *phi {
                    v["phi"] = json!(poly.phi().to_string());
                }
                return Ok(pretty(v));
            }
            let mut out = format!("{poly}\n");
            if *phi {
                out.push_str(&format!("phi: {}\n", int(&poly.phi(), group)));
            }
            Ok(out)
        }
        Command::Derange { counts } => {
            let deck: DeckComposition = counts.parse()?;
            let count = generalized_derangement_count(&deck);
            Ok(if json {
                pretty(json!({ "deck": deck.to_string(), "derangements": count.to_string() }))
            } else {
                format!("{}\n", int(&count, group))
            })
        }
        Command::Simulate { deck, trials, seed, threads } => {
            let deck: DeckComposition = deck.parse()?;
            let result = simulate_with_threads(&deck, *trials, *seed, *threads)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            let exact = (deck.cards() <= EXACT_COMPARISON_LIMIT)
                .then(|| perfect_shuffle_report_with_digits(&deck, DEFAULT_DIGITS));
            let sigma = exact.as_ref().and_then(|r| {
                (result.stderr > 0.0).then(|| (result.estimate - approximate(&r.probability)) / result.stderr)
            });
            if json {
                let mut v = result.to_json();
                v["deck"] = json!(deck.to_string());
                if let Some(r) = &exact {
                    v["exact"] = json!(r.decimal);
                    v["exact_fraction"] = json!(r.probability.to_string());
                }
                if let Some(s) = sigma {
                    v["deviation_sigma"] = json!(s);
                }
                return Ok(pretty(v));
            }
            let mut out = format!("deck: {deck}\n{}", result.to_text());
            if let Some(r) = &exact {
                out.push_str(&format!("exact: {}\n", r.decimal));
            }
            if let Some(s) = sigma {
                out.push_str(&format!("deviation_sigma: {s:.3}\n"));
            }
            Ok(out)
        }
        Command::Brute { deck } => {
            let deck: DeckComposition = deck.parse()?;
            let brute = bruteforce_distribution(&deck)?;
            let exact = adjacency_distribution(&deck);
            let pass = brute == exact;
            let out = if json {
                let mut v = brute.to_json();
                v["agrees_with_exact"] = json!(pass);
                pretty(v)
            } else {
                format!("{}{}\n", brute.to_text(group), if pass { "PASS" } else { "FAIL" })
            };
            if pass {
                Ok(out)
            } else {
                print!("{out}");
                Err(Failure::Mismatch)
            }
        }
    }
}

fn rook_command(parsed: &ConditionFile, hits: bool, json: bool) -> Result<String, Failure> {
    let (kind, n, rook, compatible): (_, _, RookNumbers, _) = match parsed {
        ConditionFile::Board(b) => ("board", b.n(), rook_numbers(b), None),
        ConditionFile::Adjacency(a) => ("adjacency", a.n(), adjacency_rook_numbers(a)?, Some(a.is_compatible())),
    };
    let poly = rook_polynomial_from_numbers(n, &rook);
    let hit_numbers = match parsed {
        ConditionFile::Board(_) => hits_from_rook_numbers(n, &rook),
        ConditionFile::Adjacency(a) => adjacency_hit_numbers(a)?,
    };
    if json {
        let strings = |v: &[BigInteger]| v.iter().map(ToString::to_string).collect::<Vec<_>>();
        let mut v = json!({
            "kind": kind,
            "n": n,
            "rook_numbers": strings(rook.as_slice()),
            "rook_polynomial": poly.to_string(),
            "avoiders": poly.phi().to_string(),
        });
        if let Some(c) = compatible {
            v["compatible"] = json!(c);
        }
        if hits {
            v["hits"] = json!(strings(hit_numbers.as_slice()));
        }
        return Ok(pretty(v));
    }
    let mut out = format!("kind: {kind}\nn: {n}\n");
    if let Some(c) = compatible {
        out.push_str(&format!("compatible: {c}\n"));
    }
    out.push_str(&format!("rook_numbers: {rook}\nrook_polynomial: {poly}\navoiders: {}\n", poly.phi()));
    if hits {
        out.push_str(&format!("hits: {hit_numbers}\n"));
    }
    Ok(out)
}

