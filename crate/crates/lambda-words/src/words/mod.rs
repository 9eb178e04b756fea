//! The algebra of reduced Λ-words in block normal form.
//!
//! A word is a function `w: [1, |w|] → X ∪ X⁻¹` where `|w|` lives in
//! Λ = ℤⁿ. The shipped representation is an alternating sequence of
//!
//! * finite blocks — explicit letter runs, and
//! * tail blocks — atomic segments of length `(δ, 1, 0, …)` whose positions
//!   finitely far from the start read a forward-periodic pattern and whose
//!   positions finitely far from the end read a backward-periodic pattern.
//!
//! Every position of a tail block is finitely far from one of its two ends,
//! so evaluation is total. The class is closed under inverse, restriction,
//! concatenation, longest common initial segment (`com`) and the cancellation
//! product `∗`; that closure is what the cutting and scanning code below
//! implements. Tail patterns are kept primitive (never proper powers) and
//! cyclically reduced.

mod dsl;
pub mod generator;
mod letter;
mod scan;

pub use dsl::{parse_expr, parse_finite_word, parse_word, print_expr, print_word};
pub use generator::{FreeLetterFamily, GeneratorFamily, OracleWord, SuffixId, WordFamily};
pub use letter::{Alphabet, FiniteWord, Letter, RESERVED_NAMES};

use crate::ordered_group::{rem_euclid_usize, LambdaElem, LambdaError};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use thiserror::Error;

/// Cutting a word may require materializing part of a periodic tail as an
/// explicit letter run; refuse beyond this many letters.
pub const MATERIALIZE_MAX: u64 = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error(transparent)]
    Lambda(#[from] LambdaError),
    #[error("empty alphabet")]
    EmptyAlphabet,
    #[error("invalid symbol {0:?}")]
    BadSymbol(String),
    #[error("reserved name {0:?}")]
    ReservedName(String),
    #[error("duplicate symbol {0:?}")]
    DuplicateSymbol(String),
    #[error("position outside [1,|w|]: {0}")]
    PositionOutOfDomain(String),
    #[error("position not covered by representation: {0}")]
    PositionNotCovered(String),
    #[error("restriction bounds outside [0,|w|]: {0}")]
    RestrictionOutOfRange(String),
    #[error("word is not reduced")]
    NotReduced,
    #[error("empty word")]
    EmptyWord,
    #[error("com undefined: the words agree on an unbounded set with no supremum")]
    ComUndefined,
    #[error("tail blocks require rank at least 2")]
    TailNeedsRankTwo,
    #[error("tail pattern is empty")]
    EmptyTailPattern,
    #[error("tail pattern is not cyclically reduced")]
    TailPatternNotCyclicallyReduced,
    #[error("materializing {0} letters exceeds the in-memory bound")]
    MaterializationTooLarge(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown name {0:?}")]
    UnknownName(String),
    #[error("generator not representable: {0}")]
    NotRepresentable(String),
}

/// One segment of a word in block normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Block {
    /// A nonempty explicit letter run.
    Finite(FiniteWord),
    /// An atomic segment of length `(delta, 1, 0, …)`. Positions `(k, 0, …)`
    /// with `k ≥ 1` read `front` forward-periodically; positions at finite
    /// distance `j` from the segment end read `back` backward-periodically
    /// (`j = 0` giving the last letter of `back`).
    Tail { front: FiniteWord, back: FiniteWord, delta: BigInt },
}

impl Block {
    pub fn length(&self, rank: usize) -> LambdaElem {
        match self {
            Block::Finite(f) => LambdaElem::finite(rank, f.len() as i64),
            Block::Tail { delta, .. } => {
                let mut l = LambdaElem::finite_big(rank, delta.clone());
                l = &l + &LambdaElem::unit(rank, 1);
                l
            }
        }
    }

    pub fn first_letter(&self) -> Letter {
        match self {
            Block::Finite(f) => f.first().expect("finite blocks are nonempty"),
            Block::Tail { front, .. } => front.get(0),
        }
    }

    pub fn last_letter(&self) -> Letter {
        match self {
            Block::Finite(f) => f.last().expect("finite blocks are nonempty"),
            Block::Tail { back, .. } => back.get(back.len() - 1),
        }
    }
}

/// Position within a tail block, in block-local coordinates.
enum LocalPos {
    /// `(k, 0, …)`: `k` letters into the forward-periodic region.
    Front(BigInt),
    /// `(x, 1, 0, …)`: in the backward-periodic region, `delta − x` letters
    /// before the block end.
    Back(BigInt),
}

fn classify_local(pos: &LambdaElem) -> LocalPos {
    if pos.is_finite() {
        LocalPos::Front(pos.coord(0).clone())
    } else {
        debug_assert_eq!(pos.height(), 1);
        debug_assert_eq!(*pos.coord(1), BigInt::from(1));
        LocalPos::Back(pos.coord(0).clone())
    }
}

/// A Λ-word in block normal form.
///
/// The `reduced` flag is trusted by `com`, `∗` and the group layer: it is set
/// honestly by every constructor and operation in this module. Concatenation
/// whose seam cancels yields a word flagged unreduced; the only public way
/// back to a reduced word is the cancellation product.
#[derive(Debug, Clone)]
pub struct Word {
    rank: usize,
    blocks: Vec<Block>,
    length: LambdaElem,
    reduced: bool,
}

impl Word {
    pub fn empty(rank: usize) -> Self {
        assert!(rank >= 1);
        Word { rank, blocks: Vec::new(), length: LambdaElem::zero(rank), reduced: true }
    }

    pub fn from_letters(rank: usize, letters: Vec<Letter>) -> Self {
        Self::from_finite(rank, FiniteWord::new(letters))
    }

    pub fn from_finite(rank: usize, fw: FiniteWord) -> Self {
        assert!(rank >= 1);
        if fw.is_empty() {
            return Self::empty(rank);
        }
        let reduced = fw.is_reduced();
        let length = LambdaElem::finite(rank, fw.len() as i64);
        Word { rank, blocks: vec![Block::Finite(fw)], length, reduced }
    }

    /// A single tail block: length `(delta, 1, 0, …)`, front pattern read
    /// forward from the start, back pattern read backward from the end.
    /// Patterns are normalized to their primitive roots and must be
    /// cyclically reduced.
    pub fn tail(
        rank: usize,
        front: FiniteWord,
        back: FiniteWord,
        delta: BigInt,
    ) -> Result<Self, WordError> {
        if rank < 2 {
            return Err(WordError::TailNeedsRankTwo);
        }
        if front.is_empty() || back.is_empty() {
            return Err(WordError::EmptyTailPattern);
        }
        let front = front.primitive_root();
        let back = back.primitive_root();
        if !front.is_cyclically_reduced() || !back.is_cyclically_reduced() {
            return Err(WordError::TailPatternNotCyclicallyReduced);
        }
        let block = Block::Tail { front, back, delta };
        let length = block.length(rank);
        Ok(Word { rank, blocks: vec![block], length, reduced: true })
    }

    /// Assemble from pieces known to come from a single consistent word.
    /// Empty finite blocks are dropped and adjacent finite blocks merged.
    fn assemble(rank: usize, pieces: Vec<Block>, reduced: bool) -> Self {
        let mut blocks: Vec<Block> = Vec::with_capacity(pieces.len());
        for piece in pieces {
            if let Block::Finite(f) = &piece {
                if f.is_empty() {
                    continue;
                }
                if let Some(Block::Finite(prev)) = blocks.last_mut() {
                    *prev = prev.concat(f);
                    continue;
                }
            }
            blocks.push(piece);
        }
        let mut length = LambdaElem::zero(rank);
        for b in &blocks {
            length = &length + &b.length(rank);
        }
        let w = Word { rank, blocks, length, reduced };
        debug_assert!(!reduced || w.verify_reduced(), "assembled word mislabeled as reduced");
        w
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn length(&self) -> &LambdaElem {
        &self.length
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// The top nonzero coordinate of `|w|`: 0 for finite words, 1 when tail
    /// blocks are present.
    pub fn height(&self) -> usize {
        self.length.height()
    }

    /// The trusted reducedness flag.
    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Full recheck of reducedness from the structure: inside finite blocks,
    /// periodic patterns, and across every seam.
    pub fn verify_reduced(&self) -> bool {
        for b in &self.blocks {
            match b {
                Block::Finite(f) => {
                    if !f.is_reduced() {
                        return false;
                    }
                }
                Block::Tail { front, back, .. } => {
                    if !front.is_cyclically_reduced() || !back.is_cyclically_reduced() {
                        return false;
                    }
                }
            }
        }
        self.blocks
            .windows(2)
            .all(|w| w[0].last_letter() != w[1].first_letter().inverse())
    }

    /// Override the reducedness flag. Exists so tests and negative controls
    /// can construct deliberately corrupted words; lying here voids every
    /// guarantee of the algebra.
    #[doc(hidden)]
    pub fn with_reduced_flag(mut self, flag: bool) -> Self {
        self.reduced = flag;
        self
    }

    pub fn first_letter(&self) -> Option<Letter> {
        self.blocks.first().map(|b| b.first_letter())
    }

    pub fn last_letter(&self) -> Option<Letter> {
        self.blocks.last().map(|b| b.last_letter())
    }

    /// The letter at position `β ∈ [1, |w|]`.
    pub fn eval(&self, beta: &LambdaElem) -> Result<Letter, WordError> {
        let one = LambdaElem::one(self.rank);
        if beta.compare(&one)? == std::cmp::Ordering::Less
            || beta.compare(&self.length)? == std::cmp::Ordering::Greater
        {
            return Err(WordError::PositionOutOfDomain(format!(
                "position {beta} in word of length {}",
                self.length
            )));
        }
        let mut cum = LambdaElem::zero(self.rank);
        for b in &self.blocks {
            let upper = &cum + &b.length(self.rank);
            if beta <= &upper {
                let local = beta - &cum;
                return match b {
                    Block::Finite(f) => {
                        let k = local
                            .to_finite()
                            .and_then(|k| k.to_usize())
                            .ok_or_else(|| WordError::PositionNotCovered(beta.to_string()))?;
                        Ok(f.get(k - 1))
                    }
                    Block::Tail { front, back, delta } => match classify_local(&local) {
                        LocalPos::Front(k) => Ok(front.cyclic_letter(&(&k - &BigInt::from(1)))),
                        LocalPos::Back(x) => Ok(back.back_anchored_letter(&(delta - &x))),
                    },
                };
            }
            cum = upper;
        }
        Err(WordError::PositionNotCovered(beta.to_string()))
    }

    /// The inverse word: `w⁻¹(β) = w(|w| + 1 − β)⁻¹`.
    pub fn inverse(&self) -> Word {
        let blocks = self
            .blocks
            .iter()
            .rev()
            .map(|b| match b {
                Block::Finite(f) => Block::Finite(f.reverse_inverted()),
                Block::Tail { front, back, delta } => Block::Tail {
                    front: back.reverse_inverted(),
                    back: front.reverse_inverted(),
                    delta: delta.clone(),
                },
            })
            .collect();
        Word { rank: self.rank, blocks, length: self.length.clone(), reduced: self.reduced }
    }

    /// Concatenation `uv`. The result is flagged reduced exactly when both
    /// parts are reduced and the seam letters are not mutually inverse, in
    /// which case `uv = u ∘ v`.
    pub fn concat(&self, other: &Word) -> Result<Word, WordError> {
        if self.rank != other.rank {
            return Err(LambdaError::RankMismatch(self.rank, other.rank).into());
        }
        if self.is_empty() {
            return Ok(other.clone());
        }
        if other.is_empty() {
            return Ok(self.clone());
        }
        let seam_ok = self.last_letter().unwrap() != other.first_letter().unwrap().inverse();
        let reduced = self.reduced && other.reduced && seam_ok;
        let mut pieces = self.blocks.clone();
        pieces.extend(other.blocks.iter().cloned());
        let mut w = Word::assemble(self.rank, pieces, false);
        w.reduced = reduced;
        debug_assert!(!reduced || w.verify_reduced());
        Ok(w)
    }

    /// Length of the longest common initial segment of two reduced words.
    ///
    /// Errors with [`WordError::ComUndefined`] when the set of common
    /// initial positions is unbounded but has no supremum (possible for
    /// words that do not lie in a common group).
    pub fn com_len(&self, other: &Word) -> Result<LambdaElem, WordError> {
        if self.rank != other.rank {
            return Err(LambdaError::RankMismatch(self.rank, other.rank).into());
        }
        if !self.reduced || !other.reduced {
            return Err(WordError::NotReduced);
        }
        scan::com_len(self, other)
    }

    /// The longest common initial segment `com(u, v)` and its length.
    pub fn com(&self, other: &Word) -> Result<(Word, LambdaElem), WordError> {
        let gamma = self.com_len(other)?;
        Ok((self.initial_subword(&gamma)?, gamma))
    }

    /// The cancellation product `u ∗ v`: cancel `com(u⁻¹, v)` and join.
    pub fn product(&self, other: &Word) -> Result<Word, WordError> {
        let gamma = self.inverse().com_len(other)?;
        let keep = self.length() - &gamma;
        let left = self.restrict(&LambdaElem::zero(self.rank), &keep)?;
        let right = other.restrict(&gamma, other.length())?;
        let result = left.concat(&right)?;
        debug_assert!(result.reduced, "maximality of com must leave a reduced seam");
        debug_assert_eq!(
            result.length,
            &(self.length() + other.length()) - &gamma.double()
        );
        Ok(result)
    }

    /// The initial subword `u_β`: restriction to `[1, β]`.
    pub fn initial_subword(&self, beta: &LambdaElem) -> Result<Word, WordError> {
        self.restrict(&LambdaElem::zero(self.rank), beta)
    }

    /// The suffix after dropping the first `γ` letters: restriction to
    /// `[γ+1, |w|]`.
    pub fn suffix_from(&self, gamma: &LambdaElem) -> Result<Word, WordError> {
        self.restrict(gamma, &self.length.clone())
    }

    /// The subword on positions `(from, to]`, with `0 ≤ from ≤ to ≤ |w|`.
    pub fn restrict(&self, from: &LambdaElem, to: &LambdaElem) -> Result<Word, WordError> {
        let zero = LambdaElem::zero(self.rank);
        let ok = from.compare(&zero)? != std::cmp::Ordering::Less
            && from.compare(to)? != std::cmp::Ordering::Greater
            && to.compare(&self.length)? != std::cmp::Ordering::Greater;
        if !ok {
            return Err(WordError::RestrictionOutOfRange(format!(
                "({from}, {to}] in word of length {}",
                self.length
            )));
        }
        let mut pieces: Vec<Block> = Vec::new();
        let mut cum = zero;
        for b in &self.blocks {
            let upper = &cum + &b.length(self.rank);
            // Overlap of (from, to] with (cum, upper], in block-local coords.
            let lo = LambdaElem::max_of(from, &cum)? - &cum;
            let hi = LambdaElem::min_of(to, &upper)? - &cum;
            if lo < hi {
                pieces.push(block_piece(b, &lo, &hi)?);
            }
            cum = upper;
        }
        Ok(Word::assemble(self.rank, pieces, self.reduced))
    }

    /// First letter is not the inverse of the last.
    pub fn is_cyclically_reduced(&self) -> Result<bool, WordError> {
        if !self.reduced {
            return Err(WordError::NotReduced);
        }
        match (self.first_letter(), self.last_letter()) {
            (Some(f), Some(l)) => Ok(f != l.inverse()),
            _ => Err(WordError::EmptyWord),
        }
    }

    /// The group-theoretic form of the same test: `|w ∗ w| = 2|w|`.
    pub fn square_doubles_length(&self) -> Result<bool, WordError> {
        let sq = self.product(self)?;
        Ok(*sq.length() == self.length.double())
    }

    /// Decompose `w = c⁻¹ ∘ core ∘ c` with `core` cyclically reduced,
    /// returning `(c, core)`. `None` when no such decomposition exists.
    pub fn cyclic_decomposition(&self) -> Result<Option<(Word, Word)>, WordError> {
        if !self.reduced {
            return Err(WordError::NotReduced);
        }
        if self.is_empty() {
            return Ok(Some((Word::empty(self.rank), Word::empty(self.rank))));
        }
        let gamma = match self.inverse().com_len(self) {
            Ok(g) => g,
            Err(WordError::ComUndefined) => return Ok(None),
            Err(e) => return Err(e),
        };
        if gamma.double().compare(&self.length)? != std::cmp::Ordering::Less {
            return Ok(None);
        }
        let c_inv = self.initial_subword(&gamma)?;
        let core = self.restrict(&gamma, &(self.length() - &gamma))?;
        debug_assert!(core.is_cyclically_reduced().unwrap_or(false));
        Ok(Some((c_inv.inverse(), core)))
    }

    /// Materialize a fully finite word as its letter sequence.
    pub fn to_finite(&self) -> Option<FiniteWord> {
        let mut letters = Vec::new();
        for b in &self.blocks {
            match b {
                Block::Finite(f) => letters.extend_from_slice(f.letters()),
                Block::Tail { .. } => return None,
            }
        }
        Some(FiniteWord::new(letters))
    }
}

/// Extract the subword of a block on local positions `(lo, hi]`.
fn block_piece(block: &Block, lo: &LambdaElem, hi: &LambdaElem) -> Result<Block, WordError> {
    match block {
        Block::Finite(f) => {
            let a = lo.to_finite().and_then(|v| v.to_usize()).expect("finite block offset");
            let b = hi.to_finite().and_then(|v| v.to_usize()).expect("finite block offset");
            Ok(Block::Finite(FiniteWord::new(f.letters()[a..b].to_vec())))
        }
        Block::Tail { front, back, delta } => match (classify_local(lo), classify_local(hi)) {
            (LocalPos::Front(k), LocalPos::Back(x)) => {
                let trimmed_end = delta - &x;
                Ok(Block::Tail {
                    front: front.rotate_left(rem_euclid_usize(&k, front.len())),
                    back: back.rotate_left(rem_euclid_usize(&-&trimmed_end, back.len())),
                    delta: &x - &k,
                })
            }
            (LocalPos::Front(k), LocalPos::Front(k2)) => {
                let count = materialize_count(&(&k2 - &k))?;
                let letters: Vec<Letter> =
                    (0..count).map(|i| front.cyclic_letter(&(&k + BigInt::from(i)))).collect();
                Ok(Block::Finite(FiniteWord::new(letters)))
            }
            (LocalPos::Back(x), LocalPos::Back(x2)) => {
                let count = materialize_count(&(&x2 - &x))?;
                let letters: Vec<Letter> = (1..=count)
                    .map(|i| back.back_anchored_letter(&(delta - &x - BigInt::from(i))))
                    .collect();
                Ok(Block::Finite(FiniteWord::new(letters)))
            }
            (LocalPos::Back(_), LocalPos::Front(_)) => {
                unreachable!("lo < hi rules out back-to-front ranges")
            }
        },
    }
}

fn materialize_count(n: &BigInt) -> Result<u64, WordError> {
    debug_assert!(!n.is_negative());
    n.to_u64()
        .filter(|&v| v <= MATERIALIZE_MAX)
        .ok_or_else(|| WordError::MaterializationTooLarge(n.to_string()))
}

/// Semantic equality: same length and the common initial segment exhausts
/// both words. For words not flagged reduced this falls back to structural
/// comparison.
impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        if self.rank != other.rank {
            return false;
        }
        if self.reduced && other.reduced {
            if self.length != other.length {
                return false;
            }
            return matches!(scan::com_len(self, other), Ok(g) if g == self.length);
        }
        self.reduced == other.reduced && self.blocks == other.blocks
    }
}

impl Eq for Word {}
