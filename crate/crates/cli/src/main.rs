mod error;
mod output;

use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use star_frobenius::automata::{format_nfa, parse_nfa};
use star_frobenius::frobenius::finite_set_regex;
use star_frobenius::numeric::numeric_frobenius;
use star_frobenius::oracle::{
    bruteforce_cofinite, conclusive_horizon, fallback_bound, word_count, DEFAULT_BUDGET,
};
use star_frobenius::reduction::{
    boolean_alphabet, cnf_to_regex, parse_dimacs, reduction_symbol_count, sat_bruteforce,
    CnfInstance,
};
use star_frobenius::selftest::run_selftest;
use star_frobenius::{
    alphabet_of, decide_cofinite, frobenius_of_finite_set, parse_regex, Alphabet, CofiniteResult,
    Decision, RegexAst, StarInput,
};

use error::{exit, CliError};
use output::{render, Format, OutputEnvelope, SCHEMA_VERSION};

const BUDGET_VAR: &str = "STAR_FROBENIUS_BUDGET";

/// Co-finiteness of Kleene closures and their Frobenius length.
#[derive(Debug, Parser)]
#[command(name = "star-frobenius", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Report wall-clock time in `timing_ms` (otherwise 0).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether E* (or L(M)* for an NFA M) is co-finite.
    Decide {
        /// Regular expression.
        regex: Option<String>,
        /// Read the expression from a file.
        #[arg(short = 'f', long = "file", conflicts_with = "regex")]
        file: Option<PathBuf>,
        /// Read an NFA in text format instead of an expression.
        #[arg(long, conflicts_with_all = ["regex", "file"])]
        nfa: Option<PathBuf>,
        /// Alphabet to decide over, e.g. `ab`. Defaults to the input's symbols.
        #[arg(long)]
        alphabet: Option<String>,
    },
    /// Frobenius length of S* for an explicit finite word set S.
    Frobenius {
        #[arg(long)]
        alphabet: String,
        #[arg(required = true)]
        words: Vec<String>,
    },
    /// Build the expression for a 3-CNF formula given in DIMACS format.
    Reduce {
        /// DIMACS file, or `-` for standard input.
        #[arg(default_value = "-")]
        input: String,
        /// Also decide co-finiteness of the resulting closure.
        #[arg(long)]
        decide: bool,
    },
    /// Brute-force satisfiability of a DIMACS 3-CNF formula.
    Sat {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Enumerate words up to a horizon and report those missing from E*.
    Oracle {
        regex: Option<String>,
        #[arg(short = 'f', long = "file", conflicts_with = "regex")]
        file: Option<PathBuf>,
        #[arg(long)]
        alphabet: Option<String>,
        /// Longest word length to enumerate. Defaults to the conclusive
        /// horizon of the bound.
        #[arg(long)]
        horizon: Option<usize>,
        /// Window bound: a number, `auto` (trimmed complement DFA size) or
        /// `paper` (2^(t+1)).
        #[arg(long)]
        bound: Option<String>,
    },
    /// Frobenius number of positive integers with gcd 1.
    Numeric {
        #[arg(required = true)]
        values: Vec<u64>,
    },
    /// Run the seeded randomized self-checks.
    Selftest {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        cases: usize,
    },
}

struct Outcome {
    command: &'static str,
    input_echo: Value,
    result: Value,
    code: u8,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    match run(cli.command) {
        Ok(outcome) => {
            let envelope = OutputEnvelope {
                schema_version: SCHEMA_VERSION,
                command: outcome.command,
                input_echo: outcome.input_echo,
                result: outcome.result,
                timing_ms: if cli.timing {
                    started.elapsed().as_millis() as u64
                } else {
                    0
                },
            };
            let mut stdout = io::stdout().lock();
            if stdout
                .write_all(render(&envelope, cli.format).as_bytes())
                .is_err()
            {
                return ExitCode::from(exit::INTERNAL);
            }
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code)
        }
    }
}

fn run(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Decide {
            regex,
            file,
            nfa,
            alphabet,
        } => cmd_decide(regex, file, nfa, alphabet),
        Command::Frobenius { alphabet, words } => cmd_frobenius(&alphabet, &words),
        Command::Reduce { input, decide } => cmd_reduce(&input, decide),
        Command::Sat { input } => cmd_sat(&input),
        Command::Oracle {
            regex,
            file,
            alphabet,
            horizon,
            bound,
        } => cmd_oracle(regex, file, alphabet, horizon, bound),
        Command::Numeric { values } => cmd_numeric(&values),
        Command::Selftest { seed, cases } => cmd_selftest(seed, cases),
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))
}

fn read_input(input: &str) -> Result<String, CliError> {
    if input == "-" {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::input(format!("cannot read standard input: {e}")))?;
        Ok(text)
    } else {
        read_file(Path::new(input))
    }
}

fn regex_argument(inline: Option<String>, file: Option<PathBuf>) -> Result<RegexAst, CliError> {
    let text = match (inline, file) {
        (Some(text), _) => text,
        (None, Some(path)) => read_file(&path)?.trim_end_matches(['\n', '\r']).to_string(),
        (None, None) => return Err(CliError::input("no expression given")),
    };
    Ok(parse_regex(&text)?)
}

fn alphabet_argument(text: Option<&str>) -> Result<Option<Alphabet>, CliError> {
    text.map(|t| Alphabet::parse(t).map_err(CliError::from))
        .transpose()
}

fn budget() -> Result<u64, CliError> {
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::input(format!("{BUDGET_VAR} must be a non-negative integer"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn decision_body(d: &Decision) -> Value {
    let (frobenius_length, witness, window_witness) = match &d.result {
        CofiniteResult::Cofinite {
            frobenius_length,
            witness,
        } => (json!(frobenius_length), json!(witness), Value::Null),
        CofiniteResult::NotCofinite { length, witness } => (
            Value::Null,
            json!(witness),
            json!({"length": length, "word": witness}),
        ),
    };
    json!({
        "cofinite": d.result.is_cofinite(),
        "frobenius_length": frobenius_length,
        "witness": witness,
        "window_witness": window_witness,
        "dfa_states": d.dfa_states,
        "nfa_states": d.nfa_states,
        "t": d.symbol_length,
        "complement_useful_states": d.complement_useful_states,
        "alphabet": d.alphabet.to_string(),
    })
}

fn cmd_decide(
    regex: Option<String>,
    file: Option<PathBuf>,
    nfa: Option<PathBuf>,
    alphabet: Option<String>,
) -> Result<Outcome, CliError> {
    let alphabet = alphabet_argument(alphabet.as_deref())?;
    let (decision, input_echo) = match nfa {
        Some(path) => {
            let m = parse_nfa(&read_file(&path)?)?;
            let d = decide_cofinite(StarInput::Nfa(&m), alphabet.as_ref())?;
            let echo = json!({"nfa": format_nfa(&m), "alphabet": d.alphabet.to_string()});
            (d, echo)
        }
        None => {
            let ast = regex_argument(regex, file)?;
            let d = decide_cofinite(StarInput::Regex(&ast), alphabet.as_ref())?;
            let echo = json!({"regex": ast.to_string(), "alphabet": d.alphabet.to_string()});
            (d, echo)
        }
    };
    Ok(Outcome {
        command: "decide",
        input_echo,
        result: decision_body(&decision),
        code: exit::OK,
    })
}

fn cmd_frobenius(alphabet: &str, words: &[String]) -> Result<Outcome, CliError> {
    let alphabet = Alphabet::parse(alphabet)?;
    let d = frobenius_of_finite_set(words, &alphabet)?;
    let mut distinct: Vec<&str> = words.iter().map(String::as_str).collect();
    distinct.sort_unstable();
    distinct.dedup();
    Ok(Outcome {
        command: "frobenius",
        input_echo: json!({
            "words": distinct,
            "alphabet": alphabet.to_string(),
            "regex": finite_set_regex(words).to_string(),
        }),
        result: decision_body(&d),
        code: exit::OK,
    })
}

fn cnf_echo(cnf: &CnfInstance) -> Value {
    json!({"dimacs": cnf.to_dimacs()})
}

fn cmd_reduce(input: &str, decide: bool) -> Result<Outcome, CliError> {
    let cnf = parse_dimacs(&read_input(input)?)?;
    let e = cnf_to_regex(&cnf);
    let decision = if decide {
        let d = decide_cofinite(StarInput::Regex(&e), Some(&boolean_alphabet()))?;
        decision_body(&d)
    } else {
        Value::Null
    };
    Ok(Outcome {
        command: "reduce",
        input_echo: cnf_echo(&cnf),
        result: json!({
            "regex": e.to_string(),
            "n": cnf.variable_count(),
            "m": cnf.clause_count(),
            "symbol_count": reduction_symbol_count(&cnf),
            "decision": decision,
        }),
        code: exit::OK,
    })
}

fn cmd_sat(input: &str) -> Result<Outcome, CliError> {
    let cnf = parse_dimacs(&read_input(input)?)?;
    let assignment = sat_bruteforce(&cnf)?;
    Ok(Outcome {
        command: "sat",
        input_echo: cnf_echo(&cnf),
        result: json!({
            "satisfiable": assignment.is_some(),
            "assignment": assignment.map(|a| a.0),
            "n": cnf.variable_count(),
            "m": cnf.clause_count(),
        }),
        code: exit::OK,
    })
}

fn cmd_oracle(
    regex: Option<String>,
    file: Option<PathBuf>,
    alphabet: Option<String>,
    horizon: Option<usize>,
    bound: Option<String>,
) -> Result<Outcome, CliError> {
    let ast = regex_argument(regex, file)?;
    let alphabet = alphabet_argument(alphabet.as_deref())?.unwrap_or_else(|| alphabet_of(&ast));
    let budget = budget()?;
    let bound = match bound.as_deref() {
        None => None,
        Some("auto") => {
            let d = decide_cofinite(StarInput::Regex(&ast), Some(&alphabet))?;
            Some(d.complement_useful_states)
        }
        Some("paper") => {
            let t = star_frobenius::symbol_length(&ast);
            let b = fallback_bound(t).ok_or_else(|| CliError {
                code: exit::BUDGET,
                message: format!("the fallback bound 2^{} does not fit in memory", t + 1),
            })?;
            let needed = conclusive_horizon(b);
            if word_count(alphabet.len(), needed) > budget {
                eprintln!(
                    "warning: the fallback bound {b} needs horizon {needed}, \
                     which exceeds the enumeration budget of {budget} words"
                );
            }
            Some(b)
        }
        Some(n) => Some(n.parse().map_err(|_| {
            CliError::input(format!(
                "--bound must be a number, 'auto' or 'paper', not {n:?}"
            ))
        })?),
    };
    let horizon = match (horizon, bound) {
        (Some(h), _) => h,
        (None, Some(b)) => conclusive_horizon(b),
        (None, None) => return Err(CliError::input("give --horizon or --bound")),
    };
    let report = bruteforce_cofinite(&ast, &alphabet, horizon, bound, budget)?;
    Ok(Outcome {
        command: "oracle",
        input_echo: json!({
            "regex": ast.to_string(),
            "alphabet": alphabet.to_string(),
            "horizon": horizon,
            "bound": bound,
            "budget": budget,
        }),
        result: serde_json::to_value(&report).map_err(|e| CliError::internal(e.to_string()))?,
        code: exit::OK,
    })
}

fn cmd_numeric(values: &[u64]) -> Result<Outcome, CliError> {
    let r = numeric_frobenius(values)?;
    Ok(Outcome {
        command: "numeric",
        input_echo: json!({"values": values}),
        result: json!({"g": r.g}),
        code: exit::OK,
    })
}

fn cmd_selftest(seed: u64, cases: usize) -> Result<Outcome, CliError> {
    let report = run_selftest(seed, cases);
    let code = if report.passed {
        exit::OK
    } else {
        exit::INTERNAL
    };
    Ok(Outcome {
        command: "selftest",
        input_echo: json!({"seed": seed, "cases": cases}),
        result: serde_json::to_value(&report).map_err(|e| CliError::internal(e.to_string()))?,
        code,
    })
}
