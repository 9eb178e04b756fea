//! Letters, alphabets and finite words.

use super::WordError;
use crate::ordered_group::rem_euclid_usize;
use num_bigint::BigInt;
use std::fmt;

/// Names that cannot be used for alphabet symbols or generators.
pub const RESERVED_NAMES: [&str; 2] = ["e", "tail"];

/// A letter of X ∪ X⁻¹: an alphabet index plus an inversion flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    idx: u32,
    inv: bool,
}

impl Letter {
    pub const fn new(idx: u32, inv: bool) -> Self {
        Letter { idx, inv }
    }

    pub fn index(&self) -> u32 {
        self.idx
    }

    pub fn is_inverted(&self) -> bool {
        self.inv
    }

    pub fn inverse(&self) -> Letter {
        Letter { idx: self.idx, inv: !self.inv }
    }
}

/// An ordered set of distinct symbols naming the base letters X.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<String>,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_alphanumeric() || c == '_')
}

impl Alphabet {
    pub fn new<S: Into<String>>(symbols: Vec<S>) -> Result<Self, WordError> {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(WordError::EmptyAlphabet);
        }
        for (i, s) in symbols.iter().enumerate() {
            if !is_identifier(s) {
                return Err(WordError::BadSymbol(s.clone()));
            }
            if RESERVED_NAMES.contains(&s.as_str()) {
                return Err(WordError::ReservedName(s.clone()));
            }
            if symbols[..i].contains(s) {
                return Err(WordError::DuplicateSymbol(s.clone()));
            }
        }
        Ok(Alphabet { symbols })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn contains(&self, symbol: &str) -> bool {
        self.symbols.iter().any(|s| s == symbol)
    }

    pub fn index_of(&self, symbol: &str) -> Option<u32> {
        self.symbols.iter().position(|s| s == symbol).map(|i| i as u32)
    }

    pub fn symbol(&self, idx: u32) -> &str {
        &self.symbols[idx as usize]
    }

    pub fn letter(&self, symbol: &str, inverted: bool) -> Option<Letter> {
        self.index_of(symbol).map(|i| Letter::new(i, inverted))
    }

    /// `a` or `a^-1`.
    pub fn fmt_letter(&self, l: Letter) -> String {
        if l.is_inverted() {
            format!("{}^-1", self.symbol(l.index()))
        } else {
            self.symbol(l.index()).to_string()
        }
    }
}

/// A finite sequence of letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FiniteWord {
    letters: Vec<Letter>,
}

impl FiniteWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        FiniteWord { letters }
    }

    pub fn empty() -> Self {
        FiniteWord { letters: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// 0-based access.
    pub fn get(&self, i: usize) -> Letter {
        self.letters[i]
    }

    pub fn first(&self) -> Option<Letter> {
        self.letters.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.letters.last().copied()
    }

    /// No two adjacent letters are mutually inverse.
    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] != w[1].inverse())
    }

    /// Reduced, and the first letter is not the inverse of the last. The
    /// infinite periodic repetition of such a word is reduced.
    pub fn is_cyclically_reduced(&self) -> bool {
        if !self.is_reduced() {
            return false;
        }
        match (self.first(), self.last()) {
            (Some(f), Some(l)) => f != l.inverse(),
            _ => true,
        }
    }

    /// The formal inverse: reversed order, every letter inverted.
    pub fn reverse_inverted(&self) -> FiniteWord {
        FiniteWord { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    pub fn concat(&self, other: &FiniteWord) -> FiniteWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        FiniteWord { letters }
    }

    /// Left rotation by `k` positions: position 1 of the result is position
    /// `k+1` of the original (cyclically).
    pub fn rotate_left(&self, k: usize) -> FiniteWord {
        if self.is_empty() {
            return self.clone();
        }
        let n = self.letters.len();
        let k = k % n;
        let mut letters = Vec::with_capacity(n);
        letters.extend_from_slice(&self.letters[k..]);
        letters.extend_from_slice(&self.letters[..k]);
        FiniteWord { letters }
    }

    /// The shortest word whose repetition gives this one.
    pub fn primitive_root(&self) -> FiniteWord {
        let n = self.letters.len();
        'candidates: for d in 1..=n {
            if !n.is_multiple_of(d) {
                continue;
            }
            for i in d..n {
                if self.letters[i] != self.letters[i - d] {
                    continue 'candidates;
                }
            }
            return FiniteWord { letters: self.letters[..d].to_vec() };
        }
        self.clone()
    }

    pub fn is_primitive(&self) -> bool {
        !self.is_empty() && self.primitive_root().len() == self.len()
    }

    /// Letter of the forward-periodic stream `self^∞` at 0-based offset `i`
    /// (which may be negative or huge).
    pub fn cyclic_letter(&self, i: &BigInt) -> Letter {
        self.letters[rem_euclid_usize(i, self.letters.len())]
    }

    /// Letter of the backward-periodic stream anchored at the end: distance
    /// `j ≥ 0` from the final letter (`j = 0` is the final letter itself).
    pub fn back_anchored_letter(&self, j: &BigInt) -> Letter {
        let n = self.letters.len();
        self.letters[n - 1 - rem_euclid_usize(j, n)]
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Index-level fallback display; symbolic printing needs an Alphabet.
        if self.inv {
            write!(f, "x{}^-1", self.idx)
        } else {
            write!(f, "x{}", self.idx)
        }
    }
}
