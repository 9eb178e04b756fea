//! Textual form for words and generator expressions.
//!
//! Word grammar: whitespace-separated items, each an identifier, a
//! parenthesized word, or a tail block `tail(front="ab", back="ba")` with an
//! optional `delta=k` argument; any item may carry a power suffix `^k`
//! (negative for inversion), which applies to the whole item. `e` denotes
//! the empty word. An identifier resolves as a whole name when possible and
//! otherwise decomposes letter by letter, so `ab` means `a b` over the
//! alphabet `{a, b}`.
//!
//! Expressions over group generators use the same grammar without tail
//! blocks and resolve identifiers against generator names.

use super::{Alphabet, FiniteWord, Word, WordError};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

const POWER_MAX: i64 = 10_000;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Str(String),
    LParen,
    RParen,
    Caret,
    Comma,
    Eq,
}

fn tokenize(s: &str) -> Result<Vec<Tok>, WordError> {
    let err = |m: String| WordError::Parse(m);
    let mut toks = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            toks.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if c.is_ascii_digit() || c == '-' {
            let start = i;
            i += 1;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            let n = text.parse::<BigInt>().map_err(|e| err(format!("bad integer {text:?}: {e}")))?;
            toks.push(Tok::Int(n));
        } else if c == '"' {
            let start = i + 1;
            let end = chars[start..]
                .iter()
                .position(|&c| c == '"')
                .ok_or_else(|| err("unterminated string".into()))?;
            toks.push(Tok::Str(chars[start..start + end].iter().collect()));
            i = start + end + 1;
        } else {
            toks.push(match c {
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '^' => Tok::Caret,
                ',' => Tok::Comma,
                '=' => Tok::Eq,
                _ => return Err(err(format!("unexpected character {c:?}"))),
            });
            i += 1;
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: &Tok) -> Result<(), WordError> {
        match self.next() {
            Some(t) if t == *want => Ok(()),
            other => Err(WordError::Parse(format!("expected {want:?}, found {other:?}"))),
        }
    }

    fn expect_ident(&mut self, want: &str) -> Result<(), WordError> {
        match self.next() {
            Some(Tok::Ident(s)) if s == want => Ok(()),
            other => Err(WordError::Parse(format!("expected {want:?}, found {other:?}"))),
        }
    }

    fn power_suffix(&mut self) -> Result<Option<i64>, WordError> {
        if self.peek() != Some(&Tok::Caret) {
            return Ok(None);
        }
        self.next();
        match self.next() {
            Some(Tok::Int(n)) => {
                let k = n
                    .to_i64()
                    .filter(|k| k.abs() <= POWER_MAX)
                    .ok_or_else(|| WordError::Parse(format!("power {n} out of range")))?;
                Ok(Some(k))
            }
            other => Err(WordError::Parse(format!("expected integer after ^, found {other:?}"))),
        }
    }
}

/// Resolve an identifier against a set of names: the whole identifier when
/// it is a name, otherwise one name per character.
fn resolve_ident<'a>(
    ident: &'a str,
    is_name: &dyn Fn(&str) -> bool,
) -> Result<Vec<&'a str>, WordError> {
    if ident == "e" {
        return Ok(Vec::new());
    }
    if is_name(ident) {
        return Ok(vec![ident]);
    }
    let mut parts = Vec::new();
    for (i, c) in ident.char_indices() {
        let part = &ident[i..i + c.len_utf8()];
        if !is_name(part) {
            return Err(WordError::UnknownName(ident.to_string()));
        }
        parts.push(part);
    }
    Ok(parts)
}

fn word_power(w: &Word, k: i64) -> Result<Word, WordError> {
    let base = if k < 0 { w.inverse() } else { w.clone() };
    let mut acc = Word::empty(w.rank());
    for _ in 0..k.unsigned_abs() {
        acc = acc.concat(&base)?;
    }
    Ok(acc)
}

fn parse_word_items(
    p: &mut Parser,
    alphabet: &Alphabet,
    rank: usize,
    allow_tail: bool,
) -> Result<Word, WordError> {
    let mut acc = Word::empty(rank);
    loop {
        let atom = match p.peek() {
            None | Some(Tok::RParen) => break,
            Some(Tok::LParen) => {
                p.next();
                let inner = parse_word_items(p, alphabet, rank, allow_tail)?;
                p.expect(&Tok::RParen)?;
                inner
            }
            Some(Tok::Ident(id)) if id == "tail" && allow_tail => {
                p.next();
                parse_tail(p, alphabet, rank)?
            }
            Some(Tok::Ident(_)) => {
                let Some(Tok::Ident(id)) = p.next() else { unreachable!() };
                let lookup = |s: &str| alphabet.contains(s);
                let mut letters = Vec::new();
                for part in resolve_ident(&id, &lookup)? {
                    letters.push(alphabet.letter(part, false).unwrap());
                }
                Word::from_letters(rank, letters)
            }
            Some(t) => return Err(WordError::Parse(format!("unexpected token {t:?}"))),
        };
        let atom = match p.power_suffix()? {
            Some(k) => word_power(&atom, k)?,
            None => atom,
        };
        acc = acc.concat(&atom)?;
    }
    Ok(acc)
}

fn parse_tail(p: &mut Parser, alphabet: &Alphabet, rank: usize) -> Result<Word, WordError> {
    p.expect(&Tok::LParen)?;
    p.expect_ident("front")?;
    p.expect(&Tok::Eq)?;
    let front = match p.next() {
        Some(Tok::Str(s)) => parse_finite_word(&s, alphabet)?,
        other => return Err(WordError::Parse(format!("expected string, found {other:?}"))),
    };
    p.expect(&Tok::Comma)?;
    p.expect_ident("back")?;
    p.expect(&Tok::Eq)?;
    let back = match p.next() {
        Some(Tok::Str(s)) => parse_finite_word(&s, alphabet)?,
        other => return Err(WordError::Parse(format!("expected string, found {other:?}"))),
    };
    let delta = if p.peek() == Some(&Tok::Comma) {
        p.next();
        p.expect_ident("delta")?;
        p.expect(&Tok::Eq)?;
        match p.next() {
            Some(Tok::Int(n)) => n,
            other => return Err(WordError::Parse(format!("expected integer, found {other:?}"))),
        }
    } else {
        BigInt::zero()
    };
    p.expect(&Tok::RParen)?;
    Word::tail(rank, front, back, delta)
}

/// Parse a word over `alphabet` at the given Λ-rank.
pub fn parse_word(text: &str, alphabet: &Alphabet, rank: usize) -> Result<Word, WordError> {
    let mut p = Parser { toks: tokenize(text)?, pos: 0 };
    let w = parse_word_items(&mut p, alphabet, rank, true)?;
    if p.peek().is_some() {
        return Err(WordError::Parse(format!("trailing input at token {:?}", p.peek())));
    }
    Ok(w)
}

/// Parse a finite word (no tail blocks) over `alphabet`.
pub fn parse_finite_word(text: &str, alphabet: &Alphabet) -> Result<FiniteWord, WordError> {
    let mut p = Parser { toks: tokenize(text)?, pos: 0 };
    let w = parse_word_items(&mut p, alphabet, 1, false)?;
    if p.peek().is_some() {
        return Err(WordError::Parse(format!("trailing input at token {:?}", p.peek())));
    }
    Ok(w.to_finite().expect("no tail blocks were allowed"))
}

fn expr_power(factors: &[(String, i64)], k: i64) -> Vec<(String, i64)> {
    let unit: Vec<(String, i64)> = if k < 0 {
        factors.iter().rev().map(|(n, e)| (n.clone(), -e)).collect()
    } else {
        factors.to_vec()
    };
    let mut out = Vec::new();
    for _ in 0..k.unsigned_abs() {
        out.extend(unit.iter().cloned());
    }
    out
}

fn parse_expr_items(
    p: &mut Parser,
    is_name: &dyn Fn(&str) -> bool,
) -> Result<Vec<(String, i64)>, WordError> {
    let mut acc: Vec<(String, i64)> = Vec::new();
    loop {
        let factors: Vec<(String, i64)> = match p.peek() {
            None | Some(Tok::RParen) => break,
            Some(Tok::LParen) => {
                p.next();
                let inner = parse_expr_items(p, is_name)?;
                p.expect(&Tok::RParen)?;
                inner
            }
            Some(Tok::Ident(_)) => {
                let Some(Tok::Ident(id)) = p.next() else { unreachable!() };
                resolve_ident(&id, is_name)?
                    .into_iter()
                    .map(|n| (n.to_string(), 1))
                    .collect()
            }
            Some(t) => return Err(WordError::Parse(format!("unexpected token {t:?}"))),
        };
        let factors = match p.power_suffix()? {
            Some(k) if factors.len() == 1 && factors[0].1 == 1 => {
                // A power on a single name stays one factor: s^-2 is (s, -2).
                if k == 0 {
                    Vec::new()
                } else {
                    vec![(factors[0].0.clone(), k)]
                }
            }
            Some(k) => expr_power(&factors, k),
            None => factors,
        };
        acc.extend(factors);
    }
    Ok(acc)
}

/// Parse a generator expression into a factor list `(name, exponent)`.
pub fn parse_expr(
    text: &str,
    is_name: &dyn Fn(&str) -> bool,
) -> Result<Vec<(String, i64)>, WordError> {
    let mut p = Parser { toks: tokenize(text)?, pos: 0 };
    let factors = parse_expr_items(&mut p, is_name)?;
    if p.peek().is_some() {
        return Err(WordError::Parse(format!("trailing input at token {:?}", p.peek())));
    }
    Ok(factors)
}

fn print_finite(fw: &FiniteWord, alphabet: &Alphabet) -> String {
    fw.letters().iter().map(|&l| alphabet.fmt_letter(l)).collect::<Vec<_>>().join(" ")
}

/// Round-trippable textual form of a word.
pub fn print_word(w: &Word, alphabet: &Alphabet) -> String {
    if w.is_empty() {
        return "e".to_string();
    }
    w.blocks()
        .iter()
        .map(|b| match b {
            super::Block::Finite(f) => print_finite(f, alphabet),
            super::Block::Tail { front, back, delta } => {
                let mut s = format!(
                    "tail(front=\"{}\", back=\"{}\"",
                    print_finite(front, alphabet),
                    print_finite(back, alphabet)
                );
                if !delta.is_zero() {
                    s.push_str(&format!(", delta={delta}"));
                }
                s.push(')');
                s
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Round-trippable textual form of a factor list.
pub fn print_expr(factors: &[(String, i64)]) -> String {
    if factors.is_empty() {
        return "e".to_string();
    }
    factors
        .iter()
        .map(|(n, e)| if *e == 1 { n.clone() } else { format!("{n}^{e}") })
        .collect::<Vec<_>>()
        .join(" ")
}
