//! Effective presentations through generator oracles.
//!
//! A group of Λ-words is *effective* relative to its generating family as
//! soon as two oracles are computable:
//!
//! 1. evaluate any generator (or its inverse) at a position, and
//! 2. compare suffixes: the length of the longest common initial segment of
//!    two generator suffixes.
//!
//! Everything else — multiplication, inversion, reduction, evaluation of
//! arbitrary products — is derived here without access to any internal
//! representation of the generators. [`OracleWord`] keeps group elements as
//! concatenations of generator subwords and runs the cancellation product
//! purely through [`GeneratorFamily::suffix_com`] calls.

use super::{Letter, Word, WordError};
use crate::ordered_group::LambdaElem;

/// A suffix of one generator: the subword of `gen` (inverted first when
/// `inverted`) on positions `(from, |gen|]`.
#[derive(Debug, Clone, PartialEq)]
pub struct SuffixId {
    pub generator: usize,
    pub inverted: bool,
    pub from: LambdaElem,
}

/// The two oracles of an effective generating family.
pub trait GeneratorFamily {
    fn rank(&self) -> usize;

    /// Number of generators; they are addressed by index.
    fn count(&self) -> usize;

    fn length(&self, i: usize) -> LambdaElem;

    /// Letter of generator `i` (not inverted) at position `pos ∈ [1, |g_i|]`.
    fn letter_at(&self, i: usize, pos: &LambdaElem) -> Result<Letter, WordError>;

    /// `|com|` of the two identified suffixes, taken to their full ends.
    fn suffix_com(&self, a: &SuffixId, b: &SuffixId) -> Result<LambdaElem, WordError>;
}

/// A subword of one generator power: positions `(lo, hi]` of `gen` or of its
/// inverse.
#[derive(Debug, Clone, PartialEq)]
struct Segment {
    gen: usize,
    inverted: bool,
    lo: LambdaElem,
    hi: LambdaElem,
}

impl Segment {
    fn len(&self) -> LambdaElem {
        &self.hi - &self.lo
    }

    /// Identify the suffix starting after `offset` consumed letters.
    fn suffix(&self, offset: &LambdaElem) -> SuffixId {
        SuffixId { generator: self.gen, inverted: self.inverted, from: &self.lo + offset }
    }
}

/// A reduced word presented as generator subwords; all group operations go
/// through the family's oracles.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleWord {
    rank: usize,
    segments: Vec<Segment>,
}

impl OracleWord {
    pub fn identity(rank: usize) -> Self {
        OracleWord { rank, segments: Vec::new() }
    }

    /// The whole generator `i`, inverted on request.
    pub fn generator(fam: &dyn GeneratorFamily, i: usize, inverted: bool) -> Self {
        let rank = fam.rank();
        let hi = fam.length(i);
        if hi.is_zero() {
            return Self::identity(rank);
        }
        OracleWord {
            rank,
            segments: vec![Segment { gen: i, inverted, lo: LambdaElem::zero(rank), hi }],
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_identity(&self) -> bool {
        self.segments.is_empty()
    }

    /// Number of generator subwords in the presentation.
    pub fn segment_count(&self) -> usize {
        self.segments.len()
    }

    pub fn length(&self) -> LambdaElem {
        self.segments
            .iter()
            .fold(LambdaElem::zero(self.rank), |acc, s| &acc + &s.len())
    }

    pub fn inverse(&self, fam: &dyn GeneratorFamily) -> Self {
        let segments = self
            .segments
            .iter()
            .rev()
            .map(|s| {
                let full = fam.length(s.gen);
                Segment {
                    gen: s.gen,
                    inverted: !s.inverted,
                    lo: &full - &s.hi,
                    hi: &full - &s.lo,
                }
            })
            .collect();
        OracleWord { rank: self.rank, segments }
    }

    /// Letter at position `beta ∈ [1, |w|]`, through the evaluation oracle.
    pub fn eval(
        &self,
        fam: &dyn GeneratorFamily,
        beta: &LambdaElem,
    ) -> Result<Letter, WordError> {
        let mut rest = beta.clone();
        let one = LambdaElem::one(self.rank);
        if beta.compare(&one)? == std::cmp::Ordering::Less {
            return Err(WordError::PositionOutOfDomain(beta.to_string()));
        }
        for s in &self.segments {
            let len = s.len();
            if rest.compare(&len)? != std::cmp::Ordering::Greater {
                let pos = &s.lo + &rest;
                return if s.inverted {
                    let full = fam.length(s.gen);
                    let mirror = &(&full + &one) - &pos;
                    Ok(fam.letter_at(s.gen, &mirror)?.inverse())
                } else {
                    fam.letter_at(s.gen, &pos)
                };
            }
            rest = &rest - &len;
        }
        Err(WordError::PositionOutOfDomain(beta.to_string()))
    }

    /// Drop the first `gamma` letters.
    fn suffix_from(&self, gamma: &LambdaElem) -> Self {
        let mut rest = gamma.clone();
        let mut segments = Vec::new();
        for s in &self.segments {
            if segments.is_empty() {
                let len = s.len();
                if rest.compare(&len).expect("same rank") != std::cmp::Ordering::Less {
                    rest = &rest - &len;
                    continue;
                }
                segments.push(Segment {
                    gen: s.gen,
                    inverted: s.inverted,
                    lo: &s.lo + &rest,
                    hi: s.hi.clone(),
                });
            } else {
                segments.push(s.clone());
            }
        }
        OracleWord { rank: self.rank, segments }
    }

    /// Drop the last `gamma` letters.
    fn drop_suffix(&self, fam: &dyn GeneratorFamily, gamma: &LambdaElem) -> Self {
        self.inverse(fam).suffix_from(gamma).inverse(fam)
    }

    /// Concatenate segment lists, merging contiguous pieces of one generator.
    fn join(mut self, other: Self) -> Self {
        for seg in other.segments {
            match self.segments.last_mut() {
                Some(last)
                    if last.gen == seg.gen
                        && last.inverted == seg.inverted
                        && last.hi == seg.lo =>
                {
                    last.hi = seg.hi;
                }
                _ => self.segments.push(seg),
            }
        }
        self
    }

    /// The cancellation product `self ∗ other`.
    pub fn mul(
        &self,
        fam: &dyn GeneratorFamily,
        other: &OracleWord,
    ) -> Result<OracleWord, WordError> {
        let gamma = self.inverse(fam).com(fam, other)?;
        let left = self.drop_suffix(fam, &gamma);
        let right = other.suffix_from(&gamma);
        Ok(left.join(right))
    }

    /// `|com(self, other)|`, computed segment against segment: each round
    /// asks the suffix oracle once and either certifies a mismatch inside
    /// both current segments or exhausts at least one of them.
    pub fn com(
        &self,
        fam: &dyn GeneratorFamily,
        other: &OracleWord,
    ) -> Result<LambdaElem, WordError> {
        let zero = LambdaElem::zero(self.rank);
        let mut gamma = zero.clone();
        let (mut i, mut j) = (0usize, 0usize);
        let (mut off_a, mut off_b) = (zero.clone(), zero.clone());
        loop {
            let (Some(a), Some(b)) = (self.segments.get(i), other.segments.get(j)) else {
                return Ok(gamma);
            };
            let rem_a = &a.len() - &off_a;
            let rem_b = &b.len() - &off_b;
            let q = fam.suffix_com(&a.suffix(&off_a), &b.suffix(&off_b))?;
            let m = LambdaElem::min_of(&q, &LambdaElem::min_of(&rem_a, &rem_b)?)?;
            gamma = &gamma + &m;
            if m < rem_a && m < rem_b {
                return Ok(gamma);
            }
            if m == rem_a {
                i += 1;
                off_a = zero.clone();
            } else {
                off_a = &off_a + &m;
            }
            if m == rem_b {
                j += 1;
                off_b = zero.clone();
            } else {
                off_b = &off_b + &m;
            }
        }
    }

    /// Whether two oracle words carry the same Λ-word.
    pub fn equals(
        &self,
        fam: &dyn GeneratorFamily,
        other: &OracleWord,
    ) -> Result<bool, WordError> {
        if self.length() != other.length() {
            return Ok(false);
        }
        Ok(self.com(fam, other)? == self.length())
    }

    /// Evaluate a factor list `(generator index, exponent)` by repeated
    /// cancellation products.
    pub fn evaluate(
        fam: &dyn GeneratorFamily,
        factors: &[(usize, i64)],
    ) -> Result<OracleWord, WordError> {
        let mut acc = OracleWord::identity(fam.rank());
        for &(i, e) in factors {
            let step = OracleWord::generator(fam, i, e < 0);
            for _ in 0..e.unsigned_abs() {
                acc = acc.mul(fam, &step)?;
            }
        }
        Ok(acc)
    }
}

/// A family backed by explicit block-form words: the oracles defer to the
/// word algebra. This is the standard bridge from a concrete presentation.
pub struct WordFamily {
    rank: usize,
    words: Vec<Word>,
}

impl WordFamily {
    pub fn new(rank: usize, words: Vec<Word>) -> Result<Self, WordError> {
        for w in &words {
            if w.rank() != rank {
                return Err(crate::ordered_group::LambdaError::RankMismatch(rank, w.rank()).into());
            }
            if !w.is_reduced() {
                return Err(WordError::NotReduced);
            }
        }
        Ok(WordFamily { rank, words })
    }

    pub fn word(&self, i: usize) -> &Word {
        &self.words[i]
    }

    fn oriented_suffix(&self, id: &SuffixId) -> Result<Word, WordError> {
        let w = if id.inverted { self.words[id.generator].inverse() } else {
            self.words[id.generator].clone()
        };
        w.suffix_from(&id.from)
    }
}

impl GeneratorFamily for WordFamily {
    fn rank(&self) -> usize {
        self.rank
    }

    fn count(&self) -> usize {
        self.words.len()
    }

    fn length(&self, i: usize) -> LambdaElem {
        self.words[i].length().clone()
    }

    fn letter_at(&self, i: usize, pos: &LambdaElem) -> Result<Letter, WordError> {
        self.words[i].eval(pos)
    }

    fn suffix_com(&self, a: &SuffixId, b: &SuffixId) -> Result<LambdaElem, WordError> {
        self.oriented_suffix(a)?.com_len(&self.oriented_suffix(b)?)
    }
}

/// The free family on `n` single-letter generators, answered by formula
/// rather than by stored words.
pub struct FreeLetterFamily {
    pub count: usize,
}

impl GeneratorFamily for FreeLetterFamily {
    fn rank(&self) -> usize {
        1
    }

    fn count(&self) -> usize {
        self.count
    }

    fn length(&self, _i: usize) -> LambdaElem {
        LambdaElem::one(1)
    }

    fn letter_at(&self, i: usize, pos: &LambdaElem) -> Result<Letter, WordError> {
        if *pos != LambdaElem::one(1) {
            return Err(WordError::PositionOutOfDomain(pos.to_string()));
        }
        Ok(Letter::new(i as u32, false))
    }

    fn suffix_com(&self, a: &SuffixId, b: &SuffixId) -> Result<LambdaElem, WordError> {
        let zero = LambdaElem::zero(1);
        let whole = a.from == zero && b.from == zero;
        if whole && a.generator == b.generator && a.inverted == b.inverted {
            Ok(LambdaElem::one(1))
        } else {
            Ok(zero)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{parse_word, Alphabet};
    use proptest::prelude::*;

    fn free2() -> FreeLetterFamily {
        FreeLetterFamily { count: 2 }
    }

    #[test]
    fn free_family_reduces_products() {
        let fam = free2();
        let a = OracleWord::generator(&fam, 0, false);
        let ai = OracleWord::generator(&fam, 0, true);
        let b = OracleWord::generator(&fam, 1, false);

        assert!(a.mul(&fam, &ai).unwrap().is_identity());
        let ab = a.mul(&fam, &b).unwrap();
        assert_eq!(ab.length(), LambdaElem::finite(1, 2));
        let back = ab.mul(&fam, &b.inverse(&fam)).unwrap();
        assert!(back.equals(&fam, &a).unwrap());

        // b^-1 a b, cubed, letter by letter.
        let w = OracleWord::evaluate(&fam, &[(1, -1), (0, 3), (1, 1)]).unwrap();
        assert_eq!(w.length(), LambdaElem::finite(1, 5));
        let b_inv = Letter::new(1, true);
        assert_eq!(w.eval(&fam, &LambdaElem::one(1)).unwrap(), b_inv);
        assert_eq!(w.eval(&fam, &LambdaElem::finite(1, 3)).unwrap(), Letter::new(0, false));
        assert_eq!(w.eval(&fam, &LambdaElem::finite(1, 5)).unwrap(), b_inv.inverse());
    }

    #[test]
    fn word_family_handles_tail_generators() {
        let ab = Alphabet::new(vec!["a", "b"]).unwrap();
        let u = parse_word("a b", &ab, 2).unwrap();
        let phi = parse_word("tail(front=\"ab\", back=\"ab\")", &ab, 2).unwrap();
        let fam = WordFamily::new(2, vec![u.clone(), phi.clone()]).unwrap();

        // u and the stable letter commute: u s u^-1 s^-1 is the identity.
        let w = OracleWord::evaluate(&fam, &[(0, 1), (1, 1), (0, -1), (1, -1)]).unwrap();
        assert!(w.is_identity());

        // u s has length (2, 1) and evaluates like the shifted tail.
        let us = OracleWord::evaluate(&fam, &[(0, 1), (1, 1)]).unwrap();
        assert_eq!(us.length(), *u.concat(&phi).unwrap().length());
        let shifted = u.concat(&phi).unwrap();
        for k in 1..=5i64 {
            let beta = LambdaElem::finite(2, k);
            assert_eq!(us.eval(&fam, &beta).unwrap(), shifted.eval(&beta).unwrap());
        }
    }

    proptest! {
        #[test]
        fn oracle_products_match_word_products(factors in prop::collection::vec((0usize..2, -2i64..=2), 0..6)) {
            let ab = Alphabet::new(vec!["a", "b"]).unwrap();
            let u = parse_word("a b", &ab, 2).unwrap();
            let phi = parse_word("tail(front=\"ab\", back=\"ab\")", &ab, 2).unwrap();
            let fam = WordFamily::new(2, vec![u.clone(), phi.clone()]).unwrap();
            let gens = [u, phi];

            let via_oracle = OracleWord::evaluate(&fam, &factors).unwrap();
            let mut via_words = crate::words::Word::empty(2);
            for &(i, e) in &factors {
                let step = if e < 0 { gens[i].inverse() } else { gens[i].clone() };
                for _ in 0..e.unsigned_abs() {
                    via_words = via_words.product(&step).unwrap();
                }
            }
            prop_assert_eq!(via_oracle.length(), via_words.length().clone());
            for beta in [LambdaElem::one(2), LambdaElem::finite(2, 2)] {
                if beta.in_segment(&LambdaElem::one(2), via_words.length()).unwrap() {
                    prop_assert_eq!(
                        via_oracle.eval(&fam, &beta).unwrap(),
                        via_words.eval(&beta).unwrap()
                    );
                }
            }
        }
    }
}
