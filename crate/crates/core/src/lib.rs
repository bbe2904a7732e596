//! An engine for lexicographic logic: propositional logic extended with a
//! priority connective `>>` whose meaning lives in a domain of finite
//! ternary-digit lists.
//!
//! The crate covers the full pipeline: the truth domain and its operations
//! ([`value`]), exact rational valuation of truth values ([`valuation`]),
//! formula syntax and parsing ([`formula`]), evaluation, preference
//! comparison and ranking ([`semantics`]), compilation of hierarchical
//! preference operators from level-annotated truth tables ([`synthesis`]),
//! and regeneration of the reference tables ([`tables`]).
//!
//! Everything is exact and pure: truth values are immutable digit lists,
//! valuation uses unbounded integers, and no operation touches floating
//! point. Values and formulas can be shared freely across threads.

pub mod formula;
pub mod semantics;
pub mod synthesis;
pub mod tables;
pub mod valuation;
pub mod value;

pub use formula::{parse, Formula, ParseError};
pub use semantics::{
    enumerate_classical_assignments, equivalent, evaluate, preferable, rank_models, Assignment,
    EvalError, Equivalence, RankedModel,
};
pub use synthesis::{
    build_level_expr, synthesize, verify_synthesis, LevelTable, PatternScheme, SynthesisVerdict,
};
pub use valuation::{value_of, Rational, DEFAULT_DECIMAL_PRECISION};
pub use value::{enumerate_values, Digit, TruthValue, ValueError};
