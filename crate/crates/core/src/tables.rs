//! Regenerates the reference tables the engine is checked against — the
//! association comparison, the ordered value listing, the rational values of
//! all short lists, the two binary preference operators, and the three-input
//! "the more the better" hierarchy. Everything here is recomputed from the
//! engine's own operations; nothing is stored.

use std::cmp::Reverse;

use crate::semantics::{evaluate, Assignment};
use crate::synthesis::{LevelTable, PatternScheme};
use crate::valuation::{value_of, Rational};
use crate::value::{enumerate_values, Digit, TruthValue};

fn classical_triples() -> impl Iterator<Item = [bool; 3]> {
    (0..8usize).map(|mask| [mask & 4 != 0, mask & 2 != 0, mask & 1 != 0])
}

fn digit_name(b: bool) -> &'static str {
    if b {
        "T"
    } else {
        "F"
    }
}

/// One row of the three-input association comparison: the inputs and the
/// values of the left-grouped and right-grouped priority chains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociationRow {
    pub inputs: [bool; 3],
    pub grouped_left: TruthValue,
    pub grouped_right: TruthValue,
}

/// `(x >> y) >> z` next to `x >> (y >> z)` on all 8 classical assignments,
/// in counting order.
pub fn association_rows() -> Vec<AssociationRow> {
    classical_triples()
        .map(|inputs| {
            let [x, y, z] = inputs.map(TruthValue::from_bool);
            AssociationRow {
                inputs,
                grouped_left: x.lex_combine(&y).lex_combine(&z),
                grouped_right: x.lex_combine(&y.lex_combine(&z)),
            }
        })
        .collect()
}

/// An expression label (with explicit grouping) and its value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedExpression {
    pub rendering: String,
    pub value: TruthValue,
}

/// The 16 grouped expressions of [`association_rows`] sorted by ascending
/// value. Equal values are ordered by descending inputs; between the two
/// groupings of one input row, the sign of the value picks which comes
/// first (left grouping on the false side, right grouping on the true
/// side), which keeps the listing symmetric under negation.
pub fn ordered_expressions() -> Vec<OrderedExpression> {
    struct Entry {
        rendering: String,
        value: TruthValue,
        inputs_rank: usize,
        grouped_right: bool,
    }
    let mut entries = Vec::with_capacity(16);
    for (inputs_rank, row) in association_rows().into_iter().enumerate() {
        let [x, y, z] = row.inputs.map(digit_name);
        entries.push(Entry {
            rendering: format!("({x} >> {y}) >> {z}"),
            value: row.grouped_left,
            inputs_rank,
            grouped_right: false,
        });
        entries.push(Entry {
            rendering: format!("{x} >> ({y} >> {z})"),
            value: row.grouped_right,
            inputs_rank,
            grouped_right: true,
        });
    }
    entries.sort_by(|a, b| {
        let form = |entry: &Entry| {
            if entry.value.sign() == Digit::T {
                !entry.grouped_right
            } else {
                entry.grouped_right
            }
        };
        (&a.value, Reverse(a.inputs_rank), form(a)).cmp(&(&b.value, Reverse(b.inputs_rank), form(b)))
    });
    entries
        .into_iter()
        .map(|e| OrderedExpression { rendering: e.rendering, value: e.value })
        .collect()
}

/// Every domain member of at most five digits with its rational value, in
/// ascending order. Two combination steps generate all of them.
pub fn short_value_rows() -> Vec<(TruthValue, Rational)> {
    enumerate_values(2)
        .into_iter()
        .filter(|v| v.digit_count() <= 5)
        .map(|v| {
            let r = value_of(&v);
            (v, r)
        })
        .collect()
}

/// One row of a binary operator table on classical inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryOpRow {
    pub inputs: [bool; 2],
    pub value: TruthValue,
}

fn binary_operator_rows(make: impl Fn(crate::formula::Formula, crate::formula::Formula) -> crate::formula::Formula) -> Vec<BinaryOpRow> {
    (0..4usize)
        .map(|mask| {
            let inputs = [mask & 2 != 0, mask & 1 != 0];
            let formula = make(
                crate::formula::Formula::constant(TruthValue::from_bool(inputs[0])),
                crate::formula::Formula::constant(TruthValue::from_bool(inputs[1])),
            );
            let value = evaluate(&formula, &Assignment::new()).expect("constant formula");
            BinaryOpRow { inputs, value }
        })
        .collect()
}

/// `x &> y` on the four classical input pairs, in counting order.
pub fn if_possible_rows() -> Vec<BinaryOpRow> {
    binary_operator_rows(crate::formula::Formula::if_possible)
}

/// `x |> y` on the four classical input pairs, in counting order.
pub fn or_at_least_rows() -> Vec<BinaryOpRow> {
    binary_operator_rows(crate::formula::Formula::or_at_least)
}

/// The "the more the better" level table: three inputs, level = number of
/// unsatisfied inputs, merged so that levels run 0..=3.
pub fn more_level_table() -> LevelTable {
    let rows = classical_triples().map(|inputs| {
        let satisfied = inputs.iter().filter(|b| **b).count();
        (inputs.to_vec(), 3 - satisfied)
    });
    LevelTable::new(3, rows).expect("complete by construction")
}

/// One row of the hierarchy table: inputs, the level's chain pattern, and
/// the truth value that pattern denotes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HierarchyRow {
    pub inputs: [bool; 3],
    pub pattern: Vec<bool>,
    pub value: TruthValue,
}

/// The 8 rows of the "more" table under the length-3 staircase scheme.
pub fn more_rows() -> Vec<HierarchyRow> {
    let table = more_level_table();
    let scheme = PatternScheme::staircase(table.level_count(), Some(3))
        .expect("four levels fit a length-3 chain");
    table
        .rows()
        .iter()
        .map(|row| HierarchyRow {
            inputs: [row.inputs[0], row.inputs[1], row.inputs[2]],
            pattern: scheme.pattern(row.level).to_vec(),
            value: scheme.chain_value(row.level),
        })
        .collect()
}
