//! Truth assignments and everything built on evaluation: the compositional
//! semantics, the "preferable to" comparison, classical-assignment
//! enumeration, model ranking, and a bounded brute-force equivalence check.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::formula::Formula;
use crate::valuation::{value_of, Rational};
use crate::value::{enumerate_values, TruthValue, ValueError};

/// Most atoms a classical enumeration will accept before refusing.
pub const DEFAULT_ATOM_LIMIT: usize = 20;

/// Most single-formula evaluations an equivalence check may need before
/// refusing.
pub const DEFAULT_EVALUATION_BUDGET: u64 = 10_000_000;

/// A finite map from atom names to truth values.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Assignment {
    bindings: BTreeMap<String, TruthValue>,
}

fn is_valid_atom(name: &str) -> bool {
    let mut chars = name.chars();
    let head_ok = matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_');
    head_ok
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && name != "T"
        && name != "F"
}

impl Assignment {
    pub fn new() -> Assignment {
        Assignment::default()
    }

    pub fn bind(&mut self, atom: impl Into<String>, value: TruthValue) {
        self.bindings.insert(atom.into(), value);
    }

    /// Builder form of [`bind`](Assignment::bind).
    pub fn with(mut self, atom: impl Into<String>, value: TruthValue) -> Assignment {
        self.bind(atom, value);
        self
    }

    pub fn get(&self, atom: &str) -> Option<&TruthValue> {
        self.bindings.get(atom)
    }

    pub fn len(&self) -> usize {
        self.bindings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bindings.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &TruthValue)> {
        self.bindings.iter()
    }

    /// Parses the compact inline form `{electric:[T], fast:[0,T,F]}`.
    pub fn parse_inline(text: &str) -> Result<Assignment, AssignmentParseError> {
        let trimmed = text.trim();
        let body = trimmed
            .strip_prefix('{')
            .and_then(|rest| rest.strip_suffix('}'))
            .ok_or_else(|| AssignmentParseError::Syntax("expected `{bindings}`".to_string()))?;
        let mut assignment = Assignment::new();
        // split on commas outside brackets; values contain commas themselves
        let mut depth = 0usize;
        let mut start = 0usize;
        let mut pieces = Vec::new();
        for (i, c) in body.char_indices() {
            match c {
                '[' => depth += 1,
                ']' => depth = depth.saturating_sub(1),
                ',' if depth == 0 => {
                    pieces.push(&body[start..i]);
                    start = i + 1;
                }
                _ => {}
            }
        }
        pieces.push(&body[start..]);
        for piece in pieces {
            if piece.trim().is_empty() && assignment.is_empty() {
                // `{}` is the empty assignment
                continue;
            }
            assignment.add_binding_text(piece, ':')?;
        }
        Ok(assignment)
    }

    /// Parses the line-oriented form: one `atom = VALUE` per line, with
    /// blank lines and `#` comments ignored.
    pub fn parse_lines(text: &str) -> Result<Assignment, AssignmentParseError> {
        let mut assignment = Assignment::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            assignment.add_binding_text(line, '=')?;
        }
        Ok(assignment)
    }

    fn add_binding_text(
        &mut self,
        piece: &str,
        separator: char,
    ) -> Result<(), AssignmentParseError> {
        let (name, value_text) = piece.split_once(separator).ok_or_else(|| {
            AssignmentParseError::Syntax(format!(
                "expected `atom {separator} VALUE` in `{}`",
                piece.trim()
            ))
        })?;
        let name = name.trim();
        if !is_valid_atom(name) {
            return Err(AssignmentParseError::BadAtom(name.to_string()));
        }
        let value: TruthValue = value_text
            .trim()
            .parse()
            .map_err(|err: ValueError| AssignmentParseError::BadValue {
                atom: name.to_string(),
                reason: err.to_string(),
            })?;
        if self.bindings.contains_key(name) {
            return Err(AssignmentParseError::Duplicate(name.to_string()));
        }
        self.bind(name, value);
        Ok(())
    }
}

impl fmt::Display for Assignment {
    /// Inline form with atoms in name order: `{a:[T], b:[F]}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (name, value)) in self.bindings.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{name}:{value}")?;
        }
        f.write_str("}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AssignmentParseError {
    #[error("assignment syntax error: {0}")]
    Syntax(String),
    #[error("invalid atom name `{0}`")]
    BadAtom(String),
    #[error("invalid value for atom `{atom}`: {reason}")]
    BadValue { atom: String, reason: String },
    #[error("duplicate binding for atom `{0}`")]
    Duplicate(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("atom `{0}` is not bound by the assignment")]
    UnboundAtom(String),
    #[error("{atoms} atoms exceed the classical enumeration limit of {limit}")]
    AtomLimitExceeded { atoms: usize, limit: usize },
    #[error("equivalence check needs {required} evaluations, over the budget of {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
}

/// Compositional evaluation: atoms look up the assignment, `&`/`|` take the
/// lexicographic min/max, `!` negates digit-wise, and `>>` combines. The
/// derived connectives evaluate through their core expansions.
pub fn evaluate(formula: &Formula, assignment: &Assignment) -> Result<TruthValue, EvalError> {
    match formula {
        Formula::Atom(name) => assignment
            .get(name)
            .cloned()
            .ok_or_else(|| EvalError::UnboundAtom(name.clone())),
        Formula::Const(v) => Ok(v.clone()),
        Formula::Not(c) => Ok(evaluate(c, assignment)?.negate()),
        Formula::And(l, r) => {
            Ok(evaluate(l, assignment)?.min(evaluate(r, assignment)?))
        }
        Formula::Or(l, r) => Ok(evaluate(l, assignment)?.max(evaluate(r, assignment)?)),
        Formula::LexPrio(l, r) => {
            Ok(evaluate(l, assignment)?.lex_combine(&evaluate(r, assignment)?))
        }
        Formula::IfPossible(l, r) => {
            let a = evaluate(l, assignment)?;
            let b = evaluate(r, assignment)?;
            let both = a.clone().min(b);
            Ok(a.lex_combine(&both))
        }
        Formula::OrAtLeast(l, r) => {
            let a = evaluate(l, assignment)?;
            let b = evaluate(r, assignment)?;
            Ok(a.clone().max(b).lex_combine(&a))
        }
        Formula::Xor(l, r) => {
            let a = evaluate(l, assignment)?;
            let b = evaluate(r, assignment)?;
            let either = a.clone().max(b.clone());
            let not_both = a.min(b).negate();
            Ok(either.min(not_both))
        }
    }
}

/// Compares two assignments on one formula. `Ordering::Greater` means the
/// first assignment is preferable, `Less` the second.
pub fn preferable(
    formula: &Formula,
    first: &Assignment,
    second: &Assignment,
) -> Result<Ordering, EvalError> {
    Ok(evaluate(formula, first)?.cmp(&evaluate(formula, second)?))
}

/// All `2^n` classical assignments over `atoms` in binary counting order
/// with `F < T`; the first atom is the most significant position.
pub fn enumerate_classical_assignments(atoms: &[String]) -> Result<Vec<Assignment>, EvalError> {
    enumerate_classical_assignments_with_limit(atoms, DEFAULT_ATOM_LIMIT)
}

pub fn enumerate_classical_assignments_with_limit(
    atoms: &[String],
    limit: usize,
) -> Result<Vec<Assignment>, EvalError> {
    let n = atoms.len();
    if n > limit {
        return Err(EvalError::AtomLimitExceeded { atoms: n, limit });
    }
    let mut out = Vec::with_capacity(1 << n);
    for mask in 0..(1usize << n) {
        let mut assignment = Assignment::new();
        for (i, atom) in atoms.iter().enumerate() {
            let bit = (mask >> (n - 1 - i)) & 1 == 1;
            assignment.bind(atom.clone(), TruthValue::from_bool(bit));
        }
        out.push(assignment);
    }
    Ok(out)
}

/// One ranked candidate: its position in the input, its evaluated value and
/// rational score, and its 1-based competition rank (ties share the rank of
/// the first of the block).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankedModel {
    /// Position of the candidate in the input sequence.
    pub index: usize,
    pub assignment: Assignment,
    pub value: TruthValue,
    pub score: Rational,
    pub rank: usize,
}

/// Evaluates every candidate and orders them by descending value. The sort
/// is stable, so tied candidates keep their input order.
pub fn rank_models(
    formula: &Formula,
    candidates: &[Assignment],
) -> Result<Vec<RankedModel>, EvalError> {
    let mut evaluated = Vec::with_capacity(candidates.len());
    for (index, assignment) in candidates.iter().enumerate() {
        let value = evaluate(formula, assignment)?;
        evaluated.push((index, assignment.clone(), value));
    }
    evaluated.sort_by(|a, b| b.2.cmp(&a.2));
    let mut out: Vec<RankedModel> = Vec::with_capacity(evaluated.len());
    for (position, (index, assignment, value)) in evaluated.into_iter().enumerate() {
        let rank = match out.last() {
            Some(previous) if previous.value == value => previous.rank,
            _ => position + 1,
        };
        out.push(RankedModel {
            index,
            score: value_of(&value),
            value,
            assignment,
            rank,
        });
    }
    Ok(out)
}

/// Outcome of a bounded equivalence check. A positive verdict is qualified
/// by the enumeration depth it was checked at; it is not a proof over the
/// full domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Equivalence {
    EquivalentUpToDepth(usize),
    Counterexample {
        assignment: Assignment,
        lhs: TruthValue,
        rhs: TruthValue,
    },
}

/// Tests the two formulas on every assignment that maps their atoms into
/// the depth-bounded value enumeration (depth 0 is the classical case).
/// Assignments are visited in counting order over ascending values with the
/// first atom cycling fastest, and the first disagreement is returned.
pub fn equivalent(
    lhs: &Formula,
    rhs: &Formula,
    depth: usize,
) -> Result<Equivalence, EvalError> {
    equivalent_with_budget(lhs, rhs, depth, DEFAULT_EVALUATION_BUDGET)
}

pub fn equivalent_with_budget(
    lhs: &Formula,
    rhs: &Formula,
    depth: usize,
    budget: u64,
) -> Result<Equivalence, EvalError> {
    let mut atoms = lhs.atoms();
    for atom in rhs.atoms() {
        if !atoms.contains(&atom) {
            atoms.push(atom);
        }
    }
    let values = enumerate_values(depth);
    let required = (values.len() as u128)
        .checked_pow(atoms.len() as u32)
        .unwrap_or(u128::MAX);
    if required > u128::from(budget) {
        return Err(EvalError::BudgetExceeded { required, budget });
    }

    let mut indices = vec![0usize; atoms.len()];
    let mut assignment = Assignment::new();
    loop {
        for (atom, &value_index) in atoms.iter().zip(&indices) {
            assignment.bind(atom.clone(), values[value_index].clone());
        }
        let left = evaluate(lhs, &assignment)?;
        let right = evaluate(rhs, &assignment)?;
        if left != right {
            return Ok(Equivalence::Counterexample {
                assignment,
                lhs: left,
                rhs: right,
            });
        }
        // odometer increment, first atom fastest
        let mut position = 0;
        loop {
            if position == indices.len() {
                return Ok(Equivalence::EquivalentUpToDepth(depth));
            }
            indices[position] += 1;
            if indices[position] < values.len() {
                break;
            }
            indices[position] = 0;
            position += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;

    fn tv(text: &str) -> TruthValue {
        text.parse().unwrap()
    }

    fn classical(bindings: &[(&str, bool)]) -> Assignment {
        let mut assignment = Assignment::new();
        for (name, bit) in bindings {
            assignment.bind(*name, TruthValue::from_bool(*bit));
        }
        assignment
    }

    fn car_formula() -> Formula {
        parse("electric >> (fast >> blue)").unwrap()
    }

    #[test]
    fn evaluates_nested_priorities() {
        let f = car_formula();
        let i1 = classical(&[("electric", true), ("fast", true), ("blue", true)]);
        let i2 = classical(&[("electric", true), ("fast", true), ("blue", false)]);
        let i3 = classical(&[("electric", false), ("fast", true), ("blue", true)]);
        assert_eq!(evaluate(&f, &i1).unwrap(), tv("[T]"));
        assert_eq!(evaluate(&f, &i2).unwrap(), tv("[0,T,0,T,F]"));
        assert_eq!(evaluate(&f, &i3).unwrap(), tv("[0,F,T]"));
    }

    #[test]
    fn evaluates_derived_connectives() {
        let f = parse("(electric ^ diesel) >> (fast & !expensive)").unwrap();
        let i1 = classical(&[
            ("electric", true),
            ("diesel", false),
            ("fast", true),
            ("expensive", false),
        ]);
        let i2 = classical(&[
            ("electric", false),
            ("diesel", true),
            ("fast", true),
            ("expensive", false),
        ]);
        assert_eq!(evaluate(&f, &i1).unwrap(), tv("[T]"));
        assert_eq!(evaluate(&f, &i2).unwrap(), tv("[T]"));
    }

    #[test]
    fn derived_connectives_match_their_expansions() {
        let derived = parse("a &> (b |> c)").unwrap();
        let expanded = derived.desugar();
        for a in enumerate_values(1) {
            for b in enumerate_values(1) {
                for c in enumerate_values(1) {
                    let assignment = Assignment::new()
                        .with("a", a.clone())
                        .with("b", b.clone())
                        .with("c", c.clone());
                    assert_eq!(
                        evaluate(&derived, &assignment).unwrap(),
                        evaluate(&expanded, &assignment).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn unbound_atom_is_reported_by_name() {
        let err = evaluate(&parse("x").unwrap(), &Assignment::new()).unwrap_err();
        assert_eq!(err, EvalError::UnboundAtom("x".to_string()));
    }

    #[test]
    fn preference_follows_the_value_order() {
        let f = car_formula();
        let i1 = classical(&[("electric", true), ("fast", true), ("blue", true)]);
        let i2 = classical(&[("electric", true), ("fast", true), ("blue", false)]);
        let i3 = classical(&[("electric", false), ("fast", true), ("blue", true)]);
        assert_eq!(preferable(&f, &i1, &i2).unwrap(), Ordering::Greater);
        assert_eq!(preferable(&f, &i3, &i2).unwrap(), Ordering::Less);
        assert_eq!(preferable(&f, &i1, &i1).unwrap(), Ordering::Equal);
    }

    #[test]
    fn classical_enumeration_counts_upward() {
        let atoms = vec!["x".to_string()];
        let single = enumerate_classical_assignments(&atoms).unwrap();
        assert_eq!(
            single,
            vec![
                classical(&[("x", false)]),
                classical(&[("x", true)]),
            ]
        );
        let atoms: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        let all = enumerate_classical_assignments(&atoms).unwrap();
        assert_eq!(all.len(), 8);
        assert_eq!(all[0], classical(&[("x", false), ("y", false), ("z", false)]));
        assert_eq!(all[1], classical(&[("x", false), ("y", false), ("z", true)]));
        assert_eq!(all[7], classical(&[("x", true), ("y", true), ("z", true)]));

        let four: Vec<String> = ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect();
        assert_eq!(enumerate_classical_assignments(&four).unwrap().len(), 16);
    }

    #[test]
    fn classical_enumeration_refuses_past_the_limit() {
        let atoms: Vec<String> = (0..25).map(|i| format!("a{i}")).collect();
        assert_eq!(
            enumerate_classical_assignments(&atoms).unwrap_err(),
            EvalError::AtomLimitExceeded { atoms: 25, limit: DEFAULT_ATOM_LIMIT }
        );
    }

    #[test]
    fn ranking_orders_descending_with_competition_ties() {
        let f = car_formula();
        let candidates = vec![
            classical(&[("electric", false), ("fast", true), ("blue", true)]),
            classical(&[("electric", true), ("fast", true), ("blue", true)]),
            classical(&[("electric", true), ("fast", true), ("blue", false)]),
        ];
        let ranked = rank_models(&f, &candidates).unwrap();
        assert_eq!(
            ranked.iter().map(|m| (m.index, m.rank)).collect::<Vec<_>>(),
            vec![(1, 1), (2, 2), (0, 3)]
        );
        assert_eq!(ranked[0].score, Rational::new(1, 1));

        assert!(rank_models(&f, &[]).unwrap().is_empty());
    }

    #[test]
    fn ranking_shares_rank_one_between_maximal_models() {
        let f = parse("(electric ^ diesel) >> (fast & !expensive)").unwrap();
        let candidates = vec![
            classical(&[("electric", true), ("diesel", false), ("fast", true), ("expensive", false)]),
            classical(&[("electric", false), ("diesel", true), ("fast", true), ("expensive", false)]),
        ];
        let ranked = rank_models(&f, &candidates).unwrap();
        assert_eq!(ranked[0].rank, 1);
        assert_eq!(ranked[1].rank, 1);
        // stable: input order preserved within the tie
        assert_eq!((ranked[0].index, ranked[1].index), (0, 1));
    }

    #[test]
    fn double_negation_is_equivalent() {
        let verdict = equivalent(&parse("!(!p)").unwrap(), &parse("p").unwrap(), 3).unwrap();
        assert_eq!(verdict, Equivalence::EquivalentUpToDepth(3));
    }

    #[test]
    fn disjunction_distributes_over_priority() {
        let verdict = equivalent(
            &parse("(a|b) >> c").unwrap(),
            &parse("(a >> c) | (b >> c)").unwrap(),
            2,
        )
        .unwrap();
        assert_eq!(verdict, Equivalence::EquivalentUpToDepth(2));
    }

    #[test]
    fn association_counterexample_is_the_first_in_counting_order() {
        let verdict = equivalent(
            &parse("x >> (y >> z)").unwrap(),
            &parse("(x >> y) >> z").unwrap(),
            0,
        )
        .unwrap();
        let expected = classical(&[("x", true), ("y", false), ("z", false)]);
        assert_eq!(
            verdict,
            Equivalence::Counterexample {
                assignment: expected,
                lhs: tv("[0,T,F]"),
                rhs: tv("[0,0,T,F,F]"),
            }
        );
    }

    #[test]
    fn budget_is_enforced() {
        let f = parse("a & b & c & d").unwrap();
        let err = equivalent(&f, &f, 3).unwrap_err();
        assert!(matches!(err, EvalError::BudgetExceeded { .. }));
    }

    #[test]
    fn inline_assignment_round_trips() {
        let a = Assignment::parse_inline("{electric:[T], fast:[0,T,F]}").unwrap();
        assert_eq!(a.get("electric"), Some(&tv("[T]")));
        assert_eq!(a.get("fast"), Some(&tv("[0,T,F]")));
        assert_eq!(a.to_string(), "{electric:[T], fast:[0,T,F]}");
        assert_eq!(Assignment::parse_inline(&a.to_string()).unwrap(), a);
        assert!(Assignment::parse_inline("{}").unwrap().is_empty());
    }

    #[test]
    fn line_assignments_allow_comments() {
        let a = Assignment::parse_lines("# car\nelectric = [T]\n\nfast = [F] # slow\n").unwrap();
        assert_eq!(a.len(), 2);
        assert_eq!(a.get("fast"), Some(&tv("[F]")));
    }

    #[test]
    fn assignment_parsing_rejects_duplicates_and_bad_names() {
        assert_eq!(
            Assignment::parse_inline("{x:[T], x:[F]}").unwrap_err(),
            AssignmentParseError::Duplicate("x".to_string())
        );
        assert_eq!(
            Assignment::parse_inline("{T:[T]}").unwrap_err(),
            AssignmentParseError::BadAtom("T".to_string())
        );
        assert!(matches!(
            Assignment::parse_lines("x = [0,T]").unwrap_err(),
            AssignmentParseError::BadValue { .. }
        ));
    }
}
