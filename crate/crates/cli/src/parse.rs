//! Surface syntax for groups and graded groups.
//!
//! ```text
//! group  := "0" | term ("+" term)*
//! term   := atom ("^" nat)?
//! atom   := "Z" | "Q" | "Z/" nat | "Z/" prime "^oo" | "Z_(" primes ")"
//!         | "Z_(~" primes ")" | "Z[1/" prime "]"
//! graded := "{" (nat ":" group ("," nat ":" group)*)? "}"
//! ```
//!
//! Whitespace is ignored between tokens. `⊕` is accepted for `+` and `∞`
//! for `oo`, so Unicode output parses back.

use std::collections::BTreeSet;

use extcalc::abelian::canonicalize;
use extcalc::{AdmissibleGroup, AtomExpr, GradedGroup, GroupExpr};
use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    /// `pos` is a 0-based character offset.
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("duplicate degree {degree} at position {pos}")]
    DuplicateDegree { pos: usize, degree: u32 },
    /// A well-formed term naming no group, such as a composite "prime".
    #[error("at position {pos}: {error}")]
    Invalid { pos: usize, error: extcalc::Error },
}

impl ParseError {
    pub fn code(&self) -> &'static str {
        match self {
            ParseError::Syntax { .. } => "syntax",
            ParseError::DuplicateDegree { .. } => "duplicate_degree",
            ParseError::Invalid { error, .. } => error.code(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(BigUint),
    Z,
    Q,
    Inf,
    Sym(char),
}

struct Lexer {
    toks: Vec<(usize, Tok)>,
    end: usize,
    at: usize,
}

fn syntax<T>(pos: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError::Syntax { pos, message: message.into() })
}

impl Lexer {
    fn new(text: &str) -> Result<Lexer, ParseError> {
        let chars: Vec<char> = text.chars().collect();
        let mut toks = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let start = i;
            i += 1;
            let tok = match c {
                c if c.is_whitespace() => continue,
                '0'..='9' => {
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let digits: String = chars[start..i].iter().collect();
                    Tok::Num(digits.parse().expect("ascii digits"))
                }
                'Z' | 'ℤ' => Tok::Z,
                'Q' | 'ℚ' => Tok::Q,
                'o' if chars.get(i) == Some(&'o') => {
                    i += 1;
                    Tok::Inf
                }
                '∞' => Tok::Inf,
                '⊕' => Tok::Sym('+'),
                '/' | '^' | '_' | '(' | ')' | '~' | '[' | ']' | ',' | '+' | '{' | '}' | ':' => Tok::Sym(c),
                _ => return syntax(start, format!("unexpected character {c:?}")),
            };
            toks.push((start, tok));
        }
        Ok(Lexer { toks, end: chars.len(), at: 0 })
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.0)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn eat(&mut self, sym: char) -> bool {
        if self.peek() == Some(&Tok::Sym(sym)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, sym: char) -> Result<(), ParseError> {
        if self.eat(sym) {
            Ok(())
        } else {
            syntax(self.pos(), format!("expected '{sym}'"))
        }
    }

    fn number(&mut self) -> Result<BigUint, ParseError> {
        match self.peek() {
            Some(Tok::Num(n)) => {
                let n = n.clone();
                self.at += 1;
                Ok(n)
            }
            _ => syntax(self.pos(), "expected a number"),
        }
    }

    fn small<T: TryFrom<u64>>(&mut self, what: &str) -> Result<T, ParseError> {
        let pos = self.pos();
        let n = self.number()?;
        u64::try_from(&n).ok().and_then(|v| T::try_from(v).ok()).map_or_else(|| syntax(pos, format!("{what} too large")), Ok)
    }

    fn finish(&self) -> Result<(), ParseError> {
        if self.at < self.toks.len() {
            syntax(self.pos(), "unexpected trailing input")
        } else {
            Ok(())
        }
    }
}

fn prime_list(lx: &mut Lexer) -> Result<Vec<u64>, ParseError> {
    let mut out = Vec::new();
    if matches!(lx.peek(), Some(Tok::Num(_))) {
        out.push(lx.small("prime")?);
        while lx.eat(',') {
            out.push(lx.small("prime")?);
        }
    }
    Ok(out)
}

fn atom(lx: &mut Lexer) -> Result<AtomExpr, ParseError> {
    let pos = lx.pos();
    match lx.peek() {
        Some(Tok::Q) => {
            lx.at += 1;
            Ok(AtomExpr::Rationals)
        }
        Some(Tok::Z) => {
            lx.at += 1;
            if lx.eat('/') {
                let n = lx.number()?;
                if lx.peek() == Some(&Tok::Sym('^')) && lx.toks.get(lx.at + 1).map(|t| &t.1) == Some(&Tok::Inf) {
                    lx.at += 2;
                    let p = u64::try_from(&n).or_else(|_| syntax(pos, "prime too large"))?;
                    return Ok(AtomExpr::Pruefer(p));
                }
                Ok(AtomExpr::Cyclic(n))
            } else if lx.eat('_') {
                lx.expect('(')?;
                let cofinite = lx.eat('~');
                let primes = prime_list(lx)?;
                lx.expect(')')?;
                Ok(AtomExpr::Localized { cofinite, primes })
            } else if lx.eat('[') {
                let one_pos = lx.pos();
                if lx.number()? != BigUint::from(1u8) {
                    return syntax(one_pos, "expected '1/p'");
                }
                lx.expect('/')?;
                let p = lx.small("prime")?;
                lx.expect(']')?;
                Ok(AtomExpr::InvertPrime(p))
            } else {
                Ok(AtomExpr::Integers)
            }
        }
        _ => syntax(pos, "expected a group atom (Z, Q, Z/n, Z/p^oo, Z_(..), Z[1/p])"),
    }
}

/// Terms with their positions.
fn group_terms(lx: &mut Lexer) -> Result<Vec<(usize, AtomExpr, u64)>, ParseError> {
    if let Some(Tok::Num(n)) = lx.peek() {
        if *n == BigUint::from(0u8) {
            lx.at += 1;
            return Ok(Vec::new());
        }
    }
    let mut terms = Vec::new();
    loop {
        let pos = lx.pos();
        let a = atom(lx)?;
        let exp = if lx.eat('^') { lx.small("exponent")? } else { 1 };
        terms.push((pos, a, exp));
        if !lx.eat('+') {
            return Ok(terms);
        }
    }
}

fn group_at(lx: &mut Lexer) -> Result<AdmissibleGroup, ParseError> {
    let mut out = AdmissibleGroup::trivial();
    for (pos, atom, exp) in group_terms(lx)? {
        let term = GroupExpr { terms: vec![(atom, exp)] };
        out.add_assign(&canonicalize(&term).map_err(|error| ParseError::Invalid { pos, error })?);
    }
    Ok(out)
}

pub fn parse_group(text: &str) -> Result<AdmissibleGroup, ParseError> {
    let mut lx = Lexer::new(text)?;
    let g = group_at(&mut lx)?;
    lx.finish()?;
    Ok(g)
}

pub fn parse_graded(text: &str) -> Result<GradedGroup, ParseError> {
    let mut lx = Lexer::new(text)?;
    lx.expect('{')?;
    let mut out = GradedGroup::new();
    let mut seen = BTreeSet::new();
    if !lx.eat('}') {
        loop {
            let pos = lx.pos();
            let degree: u32 = lx.small("degree")?;
            if !seen.insert(degree) {
                return Err(ParseError::DuplicateDegree { pos, degree });
            }
            lx.expect(':')?;
            let g = group_at(&mut lx)?;
            out.insert(degree, g);
            if !lx.eat(',') {
                break;
            }
        }
        lx.expect('}')?;
    }
    lx.finish()?;
    Ok(out)
}
