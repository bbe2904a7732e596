//! `lexilog` — evaluate, rank, synthesize, compare, and tabulate formulas of
//! lexicographic logic.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 syntax error, 3 unbound atom or
//! missing attribute column, 4 malformed data, 5 resource budget exceeded.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use thiserror::Error;

use lexilog_core::formula::{self, Formula};
use lexilog_core::semantics::{
    equivalent, evaluate, rank_models, Assignment, AssignmentParseError, EvalError, Equivalence,
};
use lexilog_core::synthesis::{synthesize, verify_synthesis, PatternScheme, SynthesisVerdict};
use lexilog_core::tables;
use lexilog_core::valuation::{value_of, DEFAULT_DECIMAL_PRECISION};
use lexilog_core::value::enumerate_values;

mod dataset;

use dataset::{load_level_table, Dataset};

/// Largest depth the `values` listing will enumerate.
const VALUES_DEPTH_CAP: usize = 3;

#[derive(Parser)]
#[command(name = "lexilog", version, about = "Lexicographic-logic preference engine")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a formula under a truth assignment
    Eval {
        /// Formula text (alternatively use --file)
        formula: Option<String>,
        /// Read the formula from a file; `#` starts a comment
        #[arg(long, value_name = "PATH")]
        file: Option<PathBuf>,
        /// Inline assignment `{x:[T], y:[0,T,F]}`, or a path to a file of
        /// `atom = VALUE` lines
        #[arg(long, value_name = "SRC")]
        assign: String,
    },
    /// Rank the records of a classical CSV dataset by a formula
    Rank {
        /// Formula text (alternatively use --file)
        formula: Option<String>,
        /// Read the formula from a file; `#` starts a comment
        #[arg(long, value_name = "PATH")]
        file: Option<PathBuf>,
        /// Dataset CSV: header row of attribute names, optional leading
        /// `id` column, cells T/F, 1/0, or true/false
        #[arg(long, value_name = "PATH")]
        data: PathBuf,
        /// Emit one JSON object per record instead of aligned text
        #[arg(long)]
        json: bool,
    },
    /// Compile a level-annotated truth table (CSV) into a formula
    Synth {
        /// Table CSV with header `x1,...,xn,level`
        table: PathBuf,
        /// Length of the priority chain (default: one less than the number
        /// of levels)
        #[arg(long, value_name = "N")]
        chain_length: Option<usize>,
        /// Check the synthesized formula against the table hierarchy
        #[arg(long)]
        verify: bool,
    },
    /// Check two formulas for equivalence up to an enumeration depth
    Equiv {
        formula1: String,
        formula2: String,
        /// Truth values enumerated up to this combination depth (0 =
        /// classical values only)
        #[arg(long, default_value_t = 2)]
        depth: usize,
    },
    /// Print a built-in reference table: 1, 2, 3, and-if-possible,
    /// or-at-least, or more
    Tables { name: String },
    /// List the truth values constructible within a combination depth
    Values {
        #[arg(long, default_value_t = 2)]
        depth: usize,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Syntax(String),
    #[error("{0}")]
    Binding(String),
    #[error("{0}")]
    Data(String),
    #[error("{0}")]
    Budget(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Syntax(_) => 2,
            CliError::Binding(_) => 3,
            CliError::Data(_) => 4,
            CliError::Budget(_) => 5,
        }
    }
}

impl From<formula::ParseError> for CliError {
    fn from(err: formula::ParseError) -> CliError {
        CliError::Syntax(err.to_string())
    }
}

impl From<AssignmentParseError> for CliError {
    fn from(err: AssignmentParseError) -> CliError {
        CliError::Syntax(err.to_string())
    }
}

impl From<EvalError> for CliError {
    fn from(err: EvalError) -> CliError {
        match err {
            EvalError::UnboundAtom(_) => CliError::Binding(err.to_string()),
            EvalError::AtomLimitExceeded { .. } | EvalError::BudgetExceeded { .. } => {
                CliError::Budget(err.to_string())
            }
        }
    }
}

impl From<dataset::DataError> for CliError {
    fn from(err: dataset::DataError) -> CliError {
        CliError::Data(err.to_string())
    }
}

impl From<lexilog_core::synthesis::SchemeError> for CliError {
    fn from(err: lexilog_core::synthesis::SchemeError) -> CliError {
        CliError::Data(err.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Eval { formula, file, assign } => {
            cmd_eval(&load_formula(formula, file)?, &assign)
        }
        Command::Rank { formula, file, data, json } => {
            cmd_rank(&load_formula(formula, file)?, &data, json)
        }
        Command::Synth { table, chain_length, verify } => cmd_synth(&table, chain_length, verify),
        Command::Equiv { formula1, formula2, depth } => cmd_equiv(&formula1, &formula2, depth),
        Command::Tables { name } => cmd_tables(&name),
        Command::Values { depth } => cmd_values(depth),
    }
}

fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|err| CliError::Io(format!("cannot read {}: {err}", path.display())))
}

fn load_formula(argument: Option<String>, file: Option<PathBuf>) -> Result<Formula, CliError> {
    let text = match (argument, file) {
        (Some(text), None) => text,
        (None, Some(path)) => read_text(&path)?,
        _ => {
            return Err(CliError::Syntax(
                "give the formula either as an argument or via --file, not both".to_string(),
            ))
        }
    };
    Ok(formula::parse(&text)?)
}

fn load_assignment(source: &str) -> Result<Assignment, CliError> {
    if source.trim_start().starts_with('{') {
        Ok(Assignment::parse_inline(source)?)
    } else {
        Ok(Assignment::parse_lines(&read_text(Path::new(source))?)?)
    }
}

/// Left-aligned columns with a two-space gutter; trailing padding trimmed.
fn print_aligned(rows: &[Vec<String>]) {
    let columns = rows.iter().map(|row| row.len()).max().unwrap_or(0);
    let mut widths = vec![0usize; columns];
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    for row in rows {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            if i + 1 < row.len() {
                for _ in cell.len()..widths[i] {
                    line.push(' ');
                }
            }
        }
        println!("{}", line.trim_end());
    }
}

fn digit_name(bit: bool) -> &'static str {
    if bit {
        "T"
    } else {
        "F"
    }
}

fn cmd_eval(formula: &Formula, assign: &str) -> Result<(), CliError> {
    let assignment = load_assignment(assign)?;
    let value = evaluate(formula, &assignment)?;
    let score = value_of(&value);
    println!(
        "{value}  sign={}  {score}  {}",
        value.sign(),
        score.decimal_string(DEFAULT_DECIMAL_PRECISION)
    );
    Ok(())
}

fn cmd_rank(formula: &Formula, data: &Path, json: bool) -> Result<(), CliError> {
    let dataset = Dataset::from_path(data)?;
    for atom in formula.atoms() {
        if !dataset.columns.contains(&atom) {
            return Err(CliError::Binding(format!(
                "dataset {} has no column `{atom}`",
                data.display()
            )));
        }
    }
    let ranked = rank_models(formula, &dataset.assignments())?;
    if json {
        for model in &ranked {
            let record = serde_json::json!({
                "rank": model.rank,
                "id": dataset.label(model.index),
                "value": model.value.to_string(),
                "fraction": model.score.to_string(),
                "decimal": model.score.decimal_string(DEFAULT_DECIMAL_PRECISION),
            });
            println!("{record}");
        }
    } else {
        let rows: Vec<Vec<String>> = ranked
            .iter()
            .map(|model| {
                vec![
                    model.rank.to_string(),
                    dataset.label(model.index),
                    model.value.to_string(),
                    model.score.to_string(),
                    model.score.decimal_string(DEFAULT_DECIMAL_PRECISION),
                ]
            })
            .collect();
        print_aligned(&rows);
    }
    Ok(())
}

fn cmd_synth(table: &Path, chain_length: Option<usize>, verify: bool) -> Result<(), CliError> {
    let table = load_level_table(table)?;
    let scheme = PatternScheme::staircase(table.level_count(), chain_length)?;
    let formula = synthesize(&table, Some(&scheme))?;
    println!("{formula}");
    if verify {
        match verify_synthesis(&table, &formula) {
            SynthesisVerdict::Ok => println!("ok"),
            SynthesisVerdict::Violation(violation) => println!("violation: {violation}"),
        }
    }
    Ok(())
}

fn cmd_equiv(formula1: &str, formula2: &str, depth: usize) -> Result<(), CliError> {
    let lhs = formula::parse(formula1)?;
    let rhs = formula::parse(formula2)?;
    match equivalent(&lhs, &rhs, depth)? {
        Equivalence::EquivalentUpToDepth(depth) => println!("equivalent (up to depth {depth})"),
        Equivalence::Counterexample { assignment, lhs, rhs } => {
            println!("counterexample {assignment}: {lhs} vs {rhs}");
        }
    }
    Ok(())
}

fn cmd_tables(name: &str) -> Result<(), CliError> {
    match name {
        "1" => {
            let mut rows = vec![["x", "y", "z", "(x >> y) >> z", "x >> (y >> z)"]
                .map(String::from)
                .to_vec()];
            for row in tables::association_rows() {
                rows.push(vec![
                    digit_name(row.inputs[0]).to_string(),
                    digit_name(row.inputs[1]).to_string(),
                    digit_name(row.inputs[2]).to_string(),
                    row.grouped_left.to_string(),
                    row.grouped_right.to_string(),
                ]);
            }
            print_aligned(&rows);
        }
        "2" => {
            let rows: Vec<Vec<String>> = tables::ordered_expressions()
                .into_iter()
                .map(|entry| vec![entry.rendering, entry.value.to_string()])
                .collect();
            print_aligned(&rows);
        }
        "3" => {
            for (value, score) in tables::short_value_rows() {
                println!("{value}  {score}");
            }
        }
        "and-if-possible" | "or-at-least" => {
            let (header, rows) = if name == "and-if-possible" {
                ("x &> y", tables::if_possible_rows())
            } else {
                ("x |> y", tables::or_at_least_rows())
            };
            let mut lines = vec![["x", "y", header].map(String::from).to_vec()];
            for row in rows {
                lines.push(vec![
                    digit_name(row.inputs[0]).to_string(),
                    digit_name(row.inputs[1]).to_string(),
                    row.value.to_string(),
                ]);
            }
            print_aligned(&lines);
        }
        "more" => {
            let mut lines = vec![["x1", "x2", "x3", "assignment", "value"]
                .map(String::from)
                .to_vec()];
            for row in tables::more_rows() {
                let chain: Vec<&str> = row.pattern.iter().map(|b| digit_name(*b)).collect();
                lines.push(vec![
                    digit_name(row.inputs[0]).to_string(),
                    digit_name(row.inputs[1]).to_string(),
                    digit_name(row.inputs[2]).to_string(),
                    chain.join(" >> "),
                    row.value.to_string(),
                ]);
            }
            print_aligned(&lines);
        }
        other => {
            return Err(CliError::Syntax(format!(
                "unknown table `{other}`; expected 1, 2, 3, and-if-possible, or-at-least, or more"
            )))
        }
    }
    Ok(())
}

fn cmd_values(depth: usize) -> Result<(), CliError> {
    if depth > VALUES_DEPTH_CAP {
        return Err(CliError::Budget(format!(
            "depth {depth} exceeds the cap of {VALUES_DEPTH_CAP}"
        )));
    }
    for value in enumerate_values(depth) {
        let score = value_of(&value);
        println!(
            "{value}  {score}  {}",
            score.decimal_string(DEFAULT_DECIMAL_PRECISION)
        );
    }
    Ok(())
}
