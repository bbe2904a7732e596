//! Compiles hierarchical preference operators out of level-annotated
//! classical truth tables.
//!
//! A [`LevelTable`] fixes, for every combination of `n` classical inputs, a
//! preference level (0 is best). A [`PatternScheme`] gives each level a
//! strictly decreasing classical bit pattern over a chain of length `L`.
//! Position `i` of the chain becomes the disjunction `E_i` of the minterms
//! of all rows whose pattern is `T` there, and the synthesized operator is
//! the right-associated chain `E_1 >> (E_2 >> ... >> E_L)`. On a classical
//! assignment each `E_i` evaluates classically, so every row evaluates to
//! its level's chained pattern, and the strict pattern order carries over
//! to the value order. [`verify_synthesis`] checks exactly that, by brute
//! force.

use std::fmt;

use thiserror::Error;

use crate::formula::Formula;
use crate::semantics::{evaluate, Assignment};
use crate::value::TruthValue;

/// Keeps `2^arity` row vectors comfortably small.
pub const MAX_TABLE_ARITY: usize = 20;

fn bits_text(bits: &[bool]) -> String {
    let cells: Vec<&str> = bits.iter().map(|b| if *b { "T" } else { "F" }).collect();
    format!("({})", cells.join(","))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("a level table needs at least one input column")]
    ZeroArity,
    #[error("arity {0} exceeds the supported maximum of {MAX_TABLE_ARITY}")]
    ArityTooLarge(usize),
    #[error("row {row} has {got} inputs, expected {expected}")]
    RowWidth { row: usize, expected: usize, got: usize },
    #[error("input combination {0} appears more than once")]
    DuplicateCombination(String),
    #[error("input combination {0} is missing")]
    MissingCombination(String),
    #[error("no row uses level {0}; levels must cover 0..m-1 contiguously")]
    LevelGap(usize),
}

/// One table row: a classical input combination and its preference level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelRow {
    pub inputs: Vec<bool>,
    pub level: usize,
}

/// A complete classical truth table over `arity` inputs whose rows carry
/// preference levels `0..m-1`, level 0 being the most preferred. Rows are
/// stored in counting order, all-`F` first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelTable {
    arity: usize,
    rows: Vec<LevelRow>,
    level_count: usize,
}

impl LevelTable {
    pub fn new(
        arity: usize,
        rows: impl IntoIterator<Item = (Vec<bool>, usize)>,
    ) -> Result<LevelTable, TableError> {
        if arity == 0 {
            return Err(TableError::ZeroArity);
        }
        if arity > MAX_TABLE_ARITY {
            return Err(TableError::ArityTooLarge(arity));
        }
        let mut slots: Vec<Option<usize>> = vec![None; 1 << arity];
        for (row_number, (inputs, level)) in rows.into_iter().enumerate() {
            if inputs.len() != arity {
                return Err(TableError::RowWidth {
                    row: row_number + 1,
                    expected: arity,
                    got: inputs.len(),
                });
            }
            let mut index = 0usize;
            for bit in &inputs {
                index = (index << 1) | usize::from(*bit);
            }
            if slots[index].is_some() {
                return Err(TableError::DuplicateCombination(bits_text(&inputs)));
            }
            slots[index] = Some(level);
        }
        let mut table_rows = Vec::with_capacity(1 << arity);
        for (index, slot) in slots.iter().enumerate() {
            let inputs: Vec<bool> = (0..arity).map(|i| (index >> (arity - 1 - i)) & 1 == 1).collect();
            match slot {
                Some(level) => table_rows.push(LevelRow { inputs, level: *level }),
                None => return Err(TableError::MissingCombination(bits_text(&inputs))),
            }
        }
        let level_count = table_rows.iter().map(|r| r.level).max().unwrap_or(0) + 1;
        for level in 0..level_count {
            if !table_rows.iter().any(|r| r.level == level) {
                return Err(TableError::LevelGap(level));
            }
        }
        Ok(LevelTable { arity, rows: table_rows, level_count })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Number of distinct levels `m`; levels are `0..m-1`.
    pub fn level_count(&self) -> usize {
        self.level_count
    }

    /// Rows in counting order, all-`F` inputs first.
    pub fn rows(&self) -> &[LevelRow] {
        &self.rows
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchemeError {
    #[error("at least one level is required")]
    NoLevels,
    #[error("chain length {requested} cannot separate {levels} levels; need at least {minimum}")]
    ChainTooShort { requested: usize, levels: usize, minimum: usize },
    #[error("patterns must all share one positive length")]
    RaggedPatterns,
    #[error("the pattern of level {0} does not decrease strictly below level {1}")]
    NotDecreasing(usize, usize),
    #[error("scheme has {got} patterns but the table has {expected} levels")]
    LevelMismatch { expected: usize, got: usize },
}

/// The per-level classical bit patterns laid over a `>>`-chain. Patterns
/// decrease strictly in lexicographic order (`T` above `F`), so more
/// important levels evaluate to greater truth values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternScheme {
    patterns: Vec<Vec<bool>>,
}

impl PatternScheme {
    /// The default scheme: level `j` of `m` gets `T^(L-j) F^j` over a chain
    /// of length `L = max(requested, m-1, 1)`. A requested length below
    /// `m-1` cannot hold `m` strictly decreasing steps and is rejected.
    pub fn staircase(
        levels: usize,
        requested_length: Option<usize>,
    ) -> Result<PatternScheme, SchemeError> {
        if levels == 0 {
            return Err(SchemeError::NoLevels);
        }
        let minimum = levels - 1;
        if let Some(requested) = requested_length {
            if requested < minimum {
                return Err(SchemeError::ChainTooShort { requested, levels, minimum });
            }
        }
        let length = requested_length.unwrap_or(0).max(minimum).max(1);
        let patterns = (0..levels)
            .map(|level| (0..length).map(|i| i < length - level).collect())
            .collect();
        Ok(PatternScheme { patterns })
    }

    /// Accepts any uniform-length, strictly decreasing pattern list.
    pub fn from_patterns(patterns: Vec<Vec<bool>>) -> Result<PatternScheme, SchemeError> {
        if patterns.is_empty() {
            return Err(SchemeError::NoLevels);
        }
        let length = patterns[0].len();
        if length == 0 || patterns.iter().any(|p| p.len() != length) {
            return Err(SchemeError::RaggedPatterns);
        }
        for (upper, pair) in patterns.windows(2).enumerate() {
            if pair[1] >= pair[0] {
                return Err(SchemeError::NotDecreasing(upper + 1, upper));
            }
        }
        Ok(PatternScheme { patterns })
    }

    pub fn chain_length(&self) -> usize {
        self.patterns[0].len()
    }

    pub fn level_count(&self) -> usize {
        self.patterns.len()
    }

    pub fn pattern(&self, level: usize) -> &[bool] {
        &self.patterns[level]
    }

    /// The truth value a level's pattern denotes: its classical digits
    /// chained right-associatively through the combination.
    pub fn chain_value(&self, level: usize) -> TruthValue {
        let pattern = self.pattern(level);
        let mut value = TruthValue::from_bool(pattern[pattern.len() - 1]);
        for bit in pattern[..pattern.len() - 1].iter().rev() {
            value = TruthValue::from_bool(*bit).lex_combine(&value);
        }
        value
    }
}

impl fmt::Display for PatternScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (level, pattern) in self.patterns.iter().enumerate() {
            if level > 0 {
                f.write_str(" ")?;
            }
            for bit in pattern {
                f.write_str(if *bit { "T" } else { "F" })?;
            }
        }
        Ok(())
    }
}

/// Input atoms are always named `x1..xn`, matching the table columns.
fn input_atom(position: usize) -> String {
    format!("x{}", position + 1)
}

fn minterm(inputs: &[bool]) -> Formula {
    inputs
        .iter()
        .enumerate()
        .map(|(position, bit)| {
            let atom = Formula::atom(input_atom(position));
            if *bit {
                atom
            } else {
                Formula::not(atom)
            }
        })
        .reduce(Formula::and)
        .expect("tables have at least one input column")
}

/// The disjunction of the minterms of every row whose level pattern shows
/// `T` at the 1-based chain `position`; the empty disjunction is the
/// constant `[F]`.
pub fn build_level_expr(table: &LevelTable, scheme: &PatternScheme, position: usize) -> Formula {
    assert!(
        position >= 1 && position <= scheme.chain_length(),
        "position {position} outside chain 1..={}",
        scheme.chain_length()
    );
    assert!(
        scheme.level_count() >= table.level_count(),
        "scheme covers {} levels, table uses {}",
        scheme.level_count(),
        table.level_count()
    );
    let mut terms = table
        .rows()
        .iter()
        .filter(|row| scheme.pattern(row.level)[position - 1])
        .map(|row| minterm(&row.inputs));
    match terms.next() {
        None => Formula::constant(TruthValue::bottom()),
        Some(first) => terms.fold(first, Formula::or),
    }
}

/// Compiles the table into `E_1 >> (E_2 >> ... >> E_L)` under the given
/// scheme, or the default staircase when none is supplied.
pub fn synthesize(
    table: &LevelTable,
    scheme: Option<&PatternScheme>,
) -> Result<Formula, SchemeError> {
    let staircase;
    let scheme = match scheme {
        Some(given) => {
            if given.level_count() != table.level_count() {
                return Err(SchemeError::LevelMismatch {
                    expected: table.level_count(),
                    got: given.level_count(),
                });
            }
            given
        }
        None => {
            staircase = PatternScheme::staircase(table.level_count(), None)?;
            &staircase
        }
    };
    let expressions: Vec<Formula> = (1..=scheme.chain_length())
        .map(|position| build_level_expr(table, scheme, position))
        .collect();
    Ok(expressions
        .into_iter()
        .rev()
        .reduce(|chain, expr| Formula::lex_prio(expr, chain))
        .expect("chain length is at least 1"))
}

/// A failed check names the first offending row pair in counting order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SynthesisVerdict {
    Ok,
    Violation(Box<SynthesisViolation>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SynthesisViolation {
    pub row_a: usize,
    pub row_b: usize,
    pub level_a: usize,
    pub level_b: usize,
    pub value_a: TruthValue,
    pub value_b: TruthValue,
}

impl fmt::Display for SynthesisViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "rows {} and {}: level {} evaluates to {} but level {} evaluates to {}",
            self.row_a + 1,
            self.row_b + 1,
            self.level_a,
            self.value_a,
            self.level_b,
            self.value_b,
        )
    }
}

/// Evaluates `formula` (over atoms `x1..xn`) on all `2^n` classical rows and
/// checks that values strictly mirror the level hierarchy: a strictly more
/// preferred level must evaluate strictly greater, and equal levels must
/// evaluate equal.
pub fn verify_synthesis(table: &LevelTable, formula: &Formula) -> SynthesisVerdict {
    let values: Vec<TruthValue> = table
        .rows()
        .iter()
        .map(|row| {
            let mut assignment = Assignment::new();
            for (position, bit) in row.inputs.iter().enumerate() {
                assignment.bind(input_atom(position), TruthValue::from_bool(*bit));
            }
            evaluate(formula, &assignment).expect("formula atoms must be drawn from x1..xn")
        })
        .collect();
    let rows = table.rows();
    for a in 0..rows.len() {
        for b in (a + 1)..rows.len() {
            let level_cmp = rows[a].level.cmp(&rows[b].level);
            // lower level = more preferred = strictly greater value
            let expected_value_cmp = level_cmp.reverse();
            if values[a].cmp(&values[b]) != expected_value_cmp {
                return SynthesisVerdict::Violation(Box::new(SynthesisViolation {
                    row_a: a,
                    row_b: b,
                    level_a: rows[a].level,
                    level_b: rows[b].level,
                    value_a: values[a].clone(),
                    value_b: values[b].clone(),
                }));
            }
        }
    }
    SynthesisVerdict::Ok
}
