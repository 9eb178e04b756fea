//! Ready-made groups: free groups of finite rank, and the two families of
//! rank-2 extensions built from a height-one stable letter. Each
//! construction verifies its defining relation before returning.

use crate::group_core::{evaluate, is_identity, GroupDef, GroupError};
use crate::ordered_group::LambdaElem;
use crate::words::{parse_finite_word, Alphabet, FiniteWord, Word, WordError};
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("pattern {0:?} is not cyclically reduced")]
    NotCyclicallyReduced(String),
    #[error("pattern {0:?} is a proper power")]
    ProperPower(String),
    #[error("patterns {0:?} and {1:?} have different lengths")]
    LengthMismatch(String, String),
    #[error("alphabet already contains the stable letter name {0:?}")]
    StableLetterClash(String),
}

const STABLE_LETTER: &str = "s";

/// The free group on the given letters, acting on its Cayley tree: every
/// letter is a generator of length 1 and Λ = ℤ.
pub fn free_group<S: Into<String> + Clone>(symbols: &[S]) -> Result<GroupDef, ConstructionError> {
    let alphabet = Alphabet::new(symbols.to_vec())?;
    let gens = letter_generators(&alphabet, 1);
    Ok(GroupDef::new(alphabet, 1, gens, Vec::new())?)
}

fn letter_generators(alphabet: &Alphabet, rank: usize) -> Vec<(String, Word)> {
    alphabet
        .symbols()
        .iter()
        .map(|sym| {
            let letter = alphabet.letter(sym, false).expect("own symbol");
            (sym.clone(), Word::from_letters(rank, vec![letter]))
        })
        .collect()
}

fn checked_pattern(text: &str, alphabet: &Alphabet) -> Result<FiniteWord, ConstructionError> {
    let p = parse_finite_word(text, alphabet)?;
    if p.is_empty() {
        return Err(WordError::EmptyTailPattern.into());
    }
    if !p.is_reduced() || !p.is_cyclically_reduced() {
        return Err(ConstructionError::NotCyclicallyReduced(text.to_string()));
    }
    if !p.is_primitive() {
        return Err(ConstructionError::ProperPower(text.to_string()));
    }
    Ok(p)
}

fn stable_alphabet<S: Into<String> + Clone>(symbols: &[S]) -> Result<Alphabet, ConstructionError> {
    let symbols: Vec<String> = symbols.iter().cloned().map(Into::into).collect();
    if symbols.iter().any(|s| s == STABLE_LETTER) {
        return Err(ConstructionError::StableLetterClash(STABLE_LETTER.into()));
    }
    Ok(Alphabet::new(symbols)?)
}

/// The extension `⟨F(X), s | [s, u] = 1⟩` with `u` cyclically reduced and
/// primitive: the stable letter is the height-one word with both ends
/// asymptotic to the `u`-line, so it commutes with `u`.
pub fn hnn_stable<S: Into<String> + Clone>(
    symbols: &[S],
    u_text: &str,
) -> Result<GroupDef, ConstructionError> {
    let alphabet = stable_alphabet(symbols)?;
    let u = checked_pattern(u_text, &alphabet)?;
    let s = Word::tail(2, u.clone(), u.clone(), BigInt::from(0))?;
    let mut gens = letter_generators(&alphabet, 2);
    gens.push((STABLE_LETTER.into(), s));
    let aliases = vec![("u".to_string(), Word::from_finite(2, u))];
    let def = GroupDef::new(alphabet, 2, gens, aliases)?;

    let s_elem = evaluate(&def, STABLE_LETTER)?;
    if s_elem.length() != &LambdaElem::unit(2, 1) {
        return Err(GroupError::Internal("stable letter does not have length t".into()).into());
    }
    if !is_identity(&evaluate(&def, "s u s^-1 u^-1")?) {
        return Err(GroupError::Internal("stable letter fails to commute with u".into()).into());
    }
    Ok(def)
}

/// The extension `⟨F(X), s | s⁻¹us = v⟩` with `|u| = |v|`, both cyclically
/// reduced and primitive: the stable letter runs from the `u`-line to the
/// `v`-line, and `u ∘ s = s ∘ v` as infinite words.
pub fn hnn_conjugate<S: Into<String> + Clone>(
    symbols: &[S],
    u_text: &str,
    v_text: &str,
) -> Result<GroupDef, ConstructionError> {
    let alphabet = stable_alphabet(symbols)?;
    let u = checked_pattern(u_text, &alphabet)?;
    let v = checked_pattern(v_text, &alphabet)?;
    if u.len() != v.len() {
        return Err(ConstructionError::LengthMismatch(u_text.into(), v_text.into()));
    }
    let s = Word::tail(2, u.clone(), v.clone(), BigInt::from(0))?;
    let u_word = Word::from_finite(2, u);
    let v_word = Word::from_finite(2, v);

    let us = u_word.concat(&s)?;
    let sv = s.concat(&v_word)?;
    if us != sv {
        return Err(GroupError::Internal("u ∘ s and s ∘ v disagree".into()).into());
    }

    let mut gens = letter_generators(&alphabet, 2);
    gens.push((STABLE_LETTER.into(), s));
    let aliases = vec![("u".to_string(), u_word), ("v".to_string(), v_word)];
    let def = GroupDef::new(alphabet, 2, gens, aliases)?;
    if !is_identity(&evaluate(&def, "s^-1 u s v^-1")?) {
        return Err(GroupError::Internal("conjugation relation fails".into()).into());
    }
    Ok(def)
}
