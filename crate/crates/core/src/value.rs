//! The truth domain: odd-length lists of ternary digits closed under the
//! lexicographic-priority combination.
//!
//! A [`TruthValue`] is always a *canonical* member of the domain: it is `[F]`,
//! `[T]`, or a `0` followed by the digits of two member values that are not
//! both `[F]` and not both `[T]` (those two combinations collapse to `[F]` and
//! `[T]` at construction time). Members are never proper prefixes of one
//! another, every member has odd length, and the derived `Ord` instance is the
//! total lexicographic order under `F < 0 < T`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// One position of a truth-value list. The variant order realises the digit
/// ordering `F < 0 < T`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Digit {
    F,
    Zero,
    T,
}

impl Digit {
    /// Swaps `F` and `T`, fixing `0`.
    pub fn flip(self) -> Digit {
        match self {
            Digit::F => Digit::T,
            Digit::T => Digit::F,
            Digit::Zero => Digit::Zero,
        }
    }

    pub fn from_bool(b: bool) -> Digit {
        if b {
            Digit::T
        } else {
            Digit::F
        }
    }
}

impl fmt::Display for Digit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Digit::F => "F",
            Digit::Zero => "0",
            Digit::T => "T",
        })
    }
}

/// Why a digit sequence is not a canonical truth value, or why value text
/// failed to parse.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValueError {
    #[error("empty digit sequence")]
    Empty,
    #[error("digit count {0} is even; canonical values have odd length")]
    EvenLength(usize),
    #[error("digit sequence ends before a complete value was read")]
    Truncated,
    #[error("digit sequence continues past a complete value (index {0})")]
    TrailingDigits(usize),
    #[error("reducible form at index {0}: a 0 followed by two equal classical values")]
    Reducible(usize),
    #[error("value syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
}

/// A canonical element of the truth domain.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruthValue {
    digits: Vec<Digit>,
}

/// Reads one complete member starting at `start`, returning the index one
/// past its last digit. This is the Polish-notation reading of the domain:
/// a member is a single `F` or `T`, or a `0` followed by two members.
fn read_member(digits: &[Digit], start: usize) -> Result<usize, ValueError> {
    match digits.get(start) {
        None => Err(ValueError::Truncated),
        Some(Digit::F) | Some(Digit::T) => Ok(start + 1),
        Some(Digit::Zero) => {
            let mid = read_member(digits, start + 1)?;
            let end = read_member(digits, mid)?;
            let left = &digits[start + 1..mid];
            let right = &digits[mid..end];
            if left == right && (left == [Digit::F] || left == [Digit::T]) {
                return Err(ValueError::Reducible(start));
            }
            Ok(end)
        }
    }
}

impl TruthValue {
    /// The least value, `[F]`.
    pub fn bottom() -> TruthValue {
        TruthValue { digits: vec![Digit::F] }
    }

    /// The greatest value, `[T]`.
    pub fn top() -> TruthValue {
        TruthValue { digits: vec![Digit::T] }
    }

    pub fn from_bool(b: bool) -> TruthValue {
        if b {
            TruthValue::top()
        } else {
            TruthValue::bottom()
        }
    }

    /// Accepts a digit sequence iff it is a canonical member of the domain.
    pub fn from_digits(digits: Vec<Digit>) -> Result<TruthValue, ValueError> {
        if digits.is_empty() {
            return Err(ValueError::Empty);
        }
        if digits.len().is_multiple_of(2) {
            return Err(ValueError::EvenLength(digits.len()));
        }
        let end = read_member(&digits, 0)?;
        if end != digits.len() {
            return Err(ValueError::TrailingDigits(end));
        }
        Ok(TruthValue { digits })
    }

    pub fn digits(&self) -> &[Digit] {
        &self.digits
    }

    pub fn digit_count(&self) -> usize {
        self.digits.len()
    }

    /// True for `[F]` and `[T]`, the two classical values.
    pub fn is_classical(&self) -> bool {
        self.digits.len() == 1
    }

    /// Combines two values under lexicographic priority: equal classical
    /// operands collapse to themselves, anything else becomes
    /// `[0] ++ self ++ other`.
    pub fn lex_combine(&self, other: &TruthValue) -> TruthValue {
        if self == other && self.is_classical() {
            return self.clone();
        }
        let mut digits = Vec::with_capacity(1 + self.digits.len() + other.digits.len());
        digits.push(Digit::Zero);
        digits.extend_from_slice(&self.digits);
        digits.extend_from_slice(&other.digits);
        TruthValue { digits }
    }

    /// Digit-wise swap of `F` and `T`. The domain is closed under this map
    /// and it is an involution.
    pub fn negate(&self) -> TruthValue {
        TruthValue {
            digits: self.digits.iter().map(|d| d.flip()).collect(),
        }
    }

    /// The leftmost non-zero digit: `T` for the true degrees, `F` for the
    /// false ones. Every member has one by construction.
    pub fn sign(&self) -> Digit {
        self.digits
            .iter()
            .copied()
            .find(|d| *d != Digit::Zero)
            .expect("canonical values contain a non-zero digit")
    }

    /// Splits a non-classical value into the unique pair it combines;
    /// `None` for `[F]` and `[T]`. Uniqueness holds because no member is a
    /// proper prefix of another.
    pub fn decompose(&self) -> Option<(TruthValue, TruthValue)> {
        if self.is_classical() {
            return None;
        }
        let mid = read_member(&self.digits, 1).expect("canonical value decomposes");
        Some((
            TruthValue { digits: self.digits[1..mid].to_vec() },
            TruthValue { digits: self.digits[mid..].to_vec() },
        ))
    }
}

impl PartialOrd for TruthValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TruthValue {
    fn cmp(&self, other: &Self) -> Ordering {
        // Plain slice comparison under F < 0 < T. Prefix-freeness of the
        // domain means the shorter-is-less fallback never decides between
        // distinct members.
        self.digits.cmp(&other.digits)
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, d) in self.digits.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for TruthValue {
    type Err = ValueError;

    /// Parses the bracketed list syntax, e.g. `[0,T,F]`. Whitespace between
    /// tokens is ignored.
    fn from_str(text: &str) -> Result<TruthValue, ValueError> {
        let syntax = |offset: usize, message: &str| ValueError::Syntax {
            offset,
            message: message.to_string(),
        };
        let mut chars = text.char_indices().peekable();
        let skip_ws = |chars: &mut std::iter::Peekable<std::str::CharIndices>| {
            while matches!(chars.peek(), Some((_, c)) if c.is_whitespace()) {
                chars.next();
            }
        };
        skip_ws(&mut chars);
        match chars.next() {
            Some((_, '[')) => {}
            Some((i, c)) => return Err(syntax(i, &format!("expected `[`, found `{c}`"))),
            None => return Err(syntax(text.len(), "expected `[`, found end of input")),
        }
        let mut digits = Vec::new();
        loop {
            skip_ws(&mut chars);
            match chars.next() {
                Some((_, 'T')) => digits.push(Digit::T),
                Some((_, 'F')) => digits.push(Digit::F),
                Some((_, '0')) => digits.push(Digit::Zero),
                Some((i, c)) => {
                    return Err(syntax(i, &format!("expected digit T, F, or 0, found `{c}`")))
                }
                None => return Err(syntax(text.len(), "expected digit, found end of input")),
            }
            skip_ws(&mut chars);
            match chars.next() {
                Some((_, ',')) => continue,
                Some((_, ']')) => break,
                Some((i, c)) => {
                    return Err(syntax(i, &format!("expected `,` or `]`, found `{c}`")))
                }
                None => return Err(syntax(text.len(), "expected `,` or `]`, found end of input")),
            }
        }
        skip_ws(&mut chars);
        if let Some((i, c)) = chars.next() {
            return Err(syntax(i, &format!("unexpected `{c}` after `]`")));
        }
        TruthValue::from_digits(digits)
    }
}

/// All distinct members constructible with at most `depth` nested
/// combinations starting from `[F]` and `[T]`, in ascending order.
pub fn enumerate_values(depth: usize) -> Vec<TruthValue> {
    let mut set = BTreeSet::new();
    set.insert(TruthValue::bottom());
    set.insert(TruthValue::top());
    for _ in 0..depth {
        let current: Vec<TruthValue> = set.iter().cloned().collect();
        for u in &current {
            for v in &current {
                set.insert(u.lex_combine(v));
            }
        }
    }
    set.into_iter().collect()
}
