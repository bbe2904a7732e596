//! Formula syntax: the AST, a lexer and recursive-descent parser for the
//! concrete grammar, desugaring of the derived connectives, and a
//! minimal-parentheses renderer.
//!
//! Grammar, loosest binding last:
//!
//! ```text
//! formula  := lexp
//! lexp     := prefp ( ">>" lexp )?                  right-associative
//! prefp    := orp ( ("&>" | "|>") orp )*            left-associative
//! orp      := xorp ( "|" xorp )*
//! xorp     := andp ( "^" andp )*
//! andp     := notp ( "&" notp )*
//! notp     := "!" notp | primary
//! primary  := IDENT | VALUE | "(" formula ")"
//! VALUE    := "[" DIGIT ("," DIGIT)* "]" | "T" | "F"
//! ```
//!
//! `#` starts a line comment; whitespace is insignificant. `T` and `F` are
//! reserved value literals, never atoms.

use std::fmt;

use thiserror::Error;

use crate::value::{TruthValue, ValueError};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Atom(String),
    Const(TruthValue),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    /// `left >> right`: the left operand takes lexicographic priority.
    LexPrio(Box<Formula>, Box<Formula>),
    /// `left &> right`: "left, and if possible additionally right".
    IfPossible(Box<Formula>, Box<Formula>),
    /// `left |> right`: "left, or at least right".
    OrAtLeast(Box<Formula>, Box<Formula>),
    /// `left ^ right`: exclusive or.
    Xor(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Formula {
        Formula::Atom(name.into())
    }

    pub fn constant(value: TruthValue) -> Formula {
        Formula::Const(value)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(child: Formula) -> Formula {
        Formula::Not(Box::new(child))
    }

    pub fn and(left: Formula, right: Formula) -> Formula {
        Formula::And(Box::new(left), Box::new(right))
    }

    pub fn or(left: Formula, right: Formula) -> Formula {
        Formula::Or(Box::new(left), Box::new(right))
    }

    pub fn lex_prio(left: Formula, right: Formula) -> Formula {
        Formula::LexPrio(Box::new(left), Box::new(right))
    }

    pub fn if_possible(left: Formula, right: Formula) -> Formula {
        Formula::IfPossible(Box::new(left), Box::new(right))
    }

    pub fn or_at_least(left: Formula, right: Formula) -> Formula {
        Formula::OrAtLeast(Box::new(left), Box::new(right))
    }

    pub fn xor(left: Formula, right: Formula) -> Formula {
        Formula::Xor(Box::new(left), Box::new(right))
    }

    /// Rewrites the derived connectives into the core ones, bottom-up:
    /// `a &> b` becomes `a >> (a & b)`, `a |> b` becomes `(a | b) >> a`,
    /// and `a ^ b` becomes `(a | b) & !(a & b)`. Duplicated operands are
    /// structural copies.
    pub fn desugar(&self) -> Formula {
        match self {
            Formula::Atom(_) | Formula::Const(_) => self.clone(),
            Formula::Not(c) => Formula::not(c.desugar()),
            Formula::And(l, r) => Formula::and(l.desugar(), r.desugar()),
            Formula::Or(l, r) => Formula::or(l.desugar(), r.desugar()),
            Formula::LexPrio(l, r) => Formula::lex_prio(l.desugar(), r.desugar()),
            Formula::IfPossible(l, r) => {
                let a = l.desugar();
                let b = r.desugar();
                Formula::lex_prio(a.clone(), Formula::and(a, b))
            }
            Formula::OrAtLeast(l, r) => {
                let a = l.desugar();
                let b = r.desugar();
                Formula::lex_prio(Formula::or(a.clone(), b), a)
            }
            Formula::Xor(l, r) => {
                let a = l.desugar();
                let b = r.desugar();
                Formula::and(
                    Formula::or(a.clone(), b.clone()),
                    Formula::not(Formula::and(a, b)),
                )
            }
        }
    }

    /// Atom names in first-occurrence order, deduplicated.
    pub fn atoms(&self) -> Vec<String> {
        fn walk(f: &Formula, out: &mut Vec<String>) {
            match f {
                Formula::Atom(name) => {
                    if !out.iter().any(|n| n == name) {
                        out.push(name.clone());
                    }
                }
                Formula::Const(_) => {}
                Formula::Not(c) => walk(c, out),
                Formula::And(l, r)
                | Formula::Or(l, r)
                | Formula::LexPrio(l, r)
                | Formula::IfPossible(l, r)
                | Formula::OrAtLeast(l, r)
                | Formula::Xor(l, r) => {
                    walk(l, out);
                    walk(r, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::LexPrio(..) => 1,
            Formula::IfPossible(..) | Formula::OrAtLeast(..) => 2,
            Formula::Or(..) => 3,
            Formula::Xor(..) => 4,
            Formula::And(..) => 5,
            Formula::Not(..) => 6,
            Formula::Atom(_) | Formula::Const(_) => 7,
        }
    }
}

enum Assoc {
    Left,
    Right,
}

fn write_child(f: &mut fmt::Formatter<'_>, child: &Formula, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({child})")
    } else {
        write!(f, "{child}")
    }
}

fn write_binary(
    f: &mut fmt::Formatter<'_>,
    left: &Formula,
    op: &str,
    right: &Formula,
    prec: u8,
    assoc: Assoc,
) -> fmt::Result {
    let (left_parens, right_parens) = match assoc {
        Assoc::Left => (left.precedence() < prec, right.precedence() <= prec),
        Assoc::Right => (left.precedence() <= prec, right.precedence() < prec),
    };
    write_child(f, left, left_parens)?;
    write!(f, " {op} ")?;
    write_child(f, right, right_parens)
}

impl fmt::Display for Formula {
    /// Emits text that re-parses to a structurally identical tree, with the
    /// fewest parentheses the precedence table allows.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Atom(name) => f.write_str(name),
            Formula::Const(v) if v == &TruthValue::top() => f.write_str("T"),
            Formula::Const(v) if v == &TruthValue::bottom() => f.write_str("F"),
            Formula::Const(v) => write!(f, "{v}"),
            Formula::Not(c) => {
                f.write_str("!")?;
                write_child(f, c, c.precedence() < 6)
            }
            Formula::And(l, r) => write_binary(f, l, "&", r, 5, Assoc::Left),
            Formula::Xor(l, r) => write_binary(f, l, "^", r, 4, Assoc::Left),
            Formula::Or(l, r) => write_binary(f, l, "|", r, 3, Assoc::Left),
            Formula::IfPossible(l, r) => write_binary(f, l, "&>", r, 2, Assoc::Left),
            Formula::OrAtLeast(l, r) => write_binary(f, l, "|>", r, 2, Assoc::Left),
            Formula::LexPrio(l, r) => write_binary(f, l, ">>", r, 1, Assoc::Right),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected character `{ch}` at offset {offset}")]
    UnexpectedChar { ch: char, offset: usize },
    #[error("bad value literal at offset {offset}: {reason}")]
    BadValueLiteral { offset: usize, reason: String },
    #[error("syntax error at offset {offset}: expected {expected}, found {found}")]
    Syntax {
        offset: usize,
        expected: &'static str,
        found: String,
    },
}

impl ParseError {
    /// Byte offset the error points at.
    pub fn offset(&self) -> usize {
        match self {
            ParseError::UnexpectedChar { offset, .. }
            | ParseError::BadValueLiteral { offset, .. }
            | ParseError::Syntax { offset, .. } => *offset,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum TokenKind {
    Ident(String),
    Value(TruthValue),
    Not,
    And,
    Or,
    Xor,
    LexPrio,
    IfPossible,
    OrAtLeast,
    LParen,
    RParen,
    Eof,
}

impl TokenKind {
    fn describe(&self) -> String {
        match self {
            TokenKind::Ident(name) => format!("`{name}`"),
            TokenKind::Value(v) => format!("`{v}`"),
            TokenKind::Not => "`!`".to_string(),
            TokenKind::And => "`&`".to_string(),
            TokenKind::Or => "`|`".to_string(),
            TokenKind::Xor => "`^`".to_string(),
            TokenKind::LexPrio => "`>>`".to_string(),
            TokenKind::IfPossible => "`&>`".to_string(),
            TokenKind::OrAtLeast => "`|>`".to_string(),
            TokenKind::LParen => "`(`".to_string(),
            TokenKind::RParen => "`)`".to_string(),
            TokenKind::Eof => "end of input".to_string(),
        }
    }
}

struct Token {
    kind: TokenKind,
    offset: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some((offset, ch)) = chars.next() {
        let kind = match ch {
            c if c.is_whitespace() => continue,
            '#' => {
                while matches!(chars.peek(), Some((_, c)) if *c != '\n') {
                    chars.next();
                }
                continue;
            }
            '!' => TokenKind::Not,
            '(' => TokenKind::LParen,
            ')' => TokenKind::RParen,
            '^' => TokenKind::Xor,
            '&' => {
                if matches!(chars.peek(), Some((_, '>'))) {
                    chars.next();
                    TokenKind::IfPossible
                } else {
                    TokenKind::And
                }
            }
            '|' => {
                if matches!(chars.peek(), Some((_, '>'))) {
                    chars.next();
                    TokenKind::OrAtLeast
                } else {
                    TokenKind::Or
                }
            }
            '>' => {
                if matches!(chars.peek(), Some((_, '>'))) {
                    chars.next();
                    TokenKind::LexPrio
                } else {
                    return Err(ParseError::UnexpectedChar { ch: '>', offset });
                }
            }
            '[' => {
                let mut end = offset;
                for (i, c) in chars.by_ref() {
                    if c == ']' {
                        end = i;
                        break;
                    }
                }
                if end == offset {
                    return Err(ParseError::BadValueLiteral {
                        offset,
                        reason: "missing closing `]`".to_string(),
                    });
                }
                let literal = &text[offset..=end];
                match literal.parse::<TruthValue>() {
                    Ok(v) => TokenKind::Value(v),
                    Err(ValueError::Syntax { offset: rel, message }) => {
                        return Err(ParseError::BadValueLiteral {
                            offset: offset + rel,
                            reason: message,
                        })
                    }
                    Err(err) => {
                        return Err(ParseError::BadValueLiteral {
                            offset,
                            reason: err.to_string(),
                        })
                    }
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut end = offset + c.len_utf8();
                while let Some((i, c)) = chars.peek().copied() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        chars.next();
                        end = i + c.len_utf8();
                    } else {
                        break;
                    }
                }
                match &text[offset..end] {
                    "T" => TokenKind::Value(TruthValue::top()),
                    "F" => TokenKind::Value(TruthValue::bottom()),
                    name => TokenKind::Ident(name.to_string()),
                }
            }
            other => return Err(ParseError::UnexpectedChar { ch: other, offset }),
        };
        tokens.push(Token { kind, offset });
    }
    tokens.push(Token { kind: TokenKind::Eof, offset: bytes.len() });
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &TokenKind {
        &self.tokens[self.pos].kind
    }

    fn offset(&self) -> usize {
        self.tokens[self.pos].offset
    }

    fn bump(&mut self) -> TokenKind {
        let kind = self.tokens[self.pos].kind.clone();
        if kind != TokenKind::Eof {
            self.pos += 1;
        }
        kind
    }

    fn error(&self, expected: &'static str) -> ParseError {
        ParseError::Syntax {
            offset: self.offset(),
            expected,
            found: self.peek().describe(),
        }
    }

    fn lex_priority(&mut self) -> Result<Formula, ParseError> {
        let left = self.preference()?;
        if self.peek() == &TokenKind::LexPrio {
            self.bump();
            let right = self.lex_priority()?;
            Ok(Formula::lex_prio(left, right))
        } else {
            Ok(left)
        }
    }

    fn preference(&mut self) -> Result<Formula, ParseError> {
        let mut formula = self.disjunction()?;
        loop {
            match self.peek() {
                TokenKind::IfPossible => {
                    self.bump();
                    formula = Formula::if_possible(formula, self.disjunction()?);
                }
                TokenKind::OrAtLeast => {
                    self.bump();
                    formula = Formula::or_at_least(formula, self.disjunction()?);
                }
                _ => return Ok(formula),
            }
        }
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut formula = self.exclusive()?;
        while self.peek() == &TokenKind::Or {
            self.bump();
            formula = Formula::or(formula, self.exclusive()?);
        }
        Ok(formula)
    }

    fn exclusive(&mut self) -> Result<Formula, ParseError> {
        let mut formula = self.conjunction()?;
        while self.peek() == &TokenKind::Xor {
            self.bump();
            formula = Formula::xor(formula, self.conjunction()?);
        }
        Ok(formula)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut formula = self.negation()?;
        while self.peek() == &TokenKind::And {
            self.bump();
            formula = Formula::and(formula, self.negation()?);
        }
        Ok(formula)
    }

    fn negation(&mut self) -> Result<Formula, ParseError> {
        if self.peek() == &TokenKind::Not {
            self.bump();
            Ok(Formula::not(self.negation()?))
        } else {
            self.primary()
        }
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            TokenKind::Ident(name) => {
                self.bump();
                Ok(Formula::atom(name))
            }
            TokenKind::Value(v) => {
                self.bump();
                Ok(Formula::constant(v))
            }
            TokenKind::LParen => {
                self.bump();
                let inner = self.lex_priority()?;
                if self.peek() == &TokenKind::RParen {
                    self.bump();
                    Ok(inner)
                } else {
                    Err(self.error("`)`"))
                }
            }
            _ => Err(self.error("an atom, a value, or `(`")),
        }
    }
}

/// Parses formula text into an AST.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let mut parser = Parser { tokens: lex(text)?, pos: 0 };
    let formula = parser.lex_priority()?;
    if parser.peek() == &TokenKind::Eof {
        Ok(formula)
    } else {
        Err(parser.error("end of input"))
    }
}
