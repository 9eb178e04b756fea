//! Differential tests of the generator-oracle interface.
//!
//! `StableFamily` below answers the two oracle questions for the generators
//! u = ab and s = (ab)^ω ⋯ ^ω(ab) by closed-form case analysis — no word
//! blocks, no scanning, no shared code with `WordFamily`. Running the same
//! products through both families (and through the block-form engine) pins
//! all three implementations to each other.

use lambda_words::constructions::hnn_stable;
use lambda_words::group_core::evaluate_factors;
use lambda_words::oracle::naive_reduce;
use lambda_words::ordered_group::LambdaElem;
use lambda_words::words::{
    FreeLetterFamily, GeneratorFamily, Letter, OracleWord, SuffixId, WordError, WordFamily,
};
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const A: Letter = Letter::new(0, false);
const B: Letter = Letter::new(1, false);

/// Oracles for u = ab and s = (ab)^ω ⋯ ^ω(ab) over Λ = ℤ², written directly
/// from the letter formulas: s(k) alternates a, b from the front and its
/// back half, anchored at the far end, finishes ⋯ a b.
struct StableFamily;

impl StableFamily {
    /// Letter `m` (1-based) of the identified suffix, if it exists at a
    /// finite depth. `None` means the position is past a finite suffix's end.
    fn suffix_letter(&self, s: &SuffixId, m: i64) -> Option<Letter> {
        assert!(m >= 1);
        match (s.generator, s.from.height()) {
            (0, _) => {
                let f = s.from.coord(0).to_i64().unwrap();
                let pos = f + m;
                if pos > 2 {
                    return None;
                }
                let plain = if pos == 1 { A } else { B };
                // u⁻¹ = b⁻¹ a⁻¹: mirror the position, invert the letter.
                Some(if s.inverted {
                    (if 3 - pos == 1 { A } else { B }).inverse()
                } else {
                    plain
                })
            }
            (1, 0) => {
                // Front of s (or of s⁻¹): period two, phase set by `from`.
                let k = s.from.coord(0).to_i64().unwrap();
                let odd = (k + m) % 2 != 0;
                Some(match (s.inverted, odd) {
                    (false, true) => A,
                    (false, false) => B,
                    (true, true) => B.inverse(),
                    (true, false) => A.inverse(),
                })
            }
            (1, _) => {
                // Back of s: position (x+m, 1), anchored so that x = 0 is the
                // final letter b; inverted, the roles of a and b swap.
                let x = s.from.coord(0).to_i64().unwrap();
                if x + m > 0 {
                    return None;
                }
                let even = (x + m).rem_euclid(2) == 0;
                Some(match (s.inverted, even) {
                    (false, true) => B,
                    (false, false) => A,
                    (true, true) => A.inverse(),
                    (true, false) => B.inverse(),
                })
            }
            _ => unreachable!("two generators"),
        }
    }

    fn suffix_len(&self, s: &SuffixId) -> LambdaElem {
        &self.length(s.generator) - &s.from
    }
}

impl GeneratorFamily for StableFamily {
    fn rank(&self) -> usize {
        2
    }

    fn count(&self) -> usize {
        2
    }

    fn length(&self, i: usize) -> LambdaElem {
        match i {
            0 => LambdaElem::finite(2, 2),
            1 => LambdaElem::unit(2, 1),
            _ => unreachable!("two generators"),
        }
    }

    fn letter_at(&self, i: usize, pos: &LambdaElem) -> Result<Letter, WordError> {
        let full = SuffixId { generator: i, inverted: false, from: LambdaElem::zero(2) };
        let m = match pos.height() {
            0 => pos.coord(0).to_i64().unwrap(),
            _ => {
                // A height-one position (x, 1) sits in the back half; route
                // it through the back-suffix formula starting at (x-1, 1).
                let from = pos - &LambdaElem::one(2);
                let back = SuffixId { generator: i, inverted: false, from };
                return self
                    .suffix_letter(&back, 1)
                    .ok_or(WordError::PositionOutOfDomain(pos.to_string()));
            }
        };
        if m < 1 {
            return Err(WordError::PositionOutOfDomain(pos.to_string()));
        }
        self.suffix_letter(&full, m).ok_or(WordError::PositionOutOfDomain(pos.to_string()))
    }

    fn suffix_com(&self, a: &SuffixId, b: &SuffixId) -> Result<LambdaElem, WordError> {
        let la = self.suffix_len(a);
        let lb = self.suffix_len(b);
        let min = LambdaElem::min_of(&la, &lb)?;
        if min.is_zero() {
            return Ok(LambdaElem::zero(2));
        }
        if la.height() == 1 && lb.height() == 1 {
            // Two forward tails of s±: the first letter settles orientation
            // and phase, after which one is an initial segment of the other.
            return Ok(if self.suffix_letter(a, 1) == self.suffix_letter(b, 1) {
                min
            } else {
                LambdaElem::zero(2)
            });
        }
        // At least one side is finite: walk it out.
        let cap = min.coord(0).to_i64().unwrap();
        let mut agree = 0;
        for m in 1..=cap {
            if self.suffix_letter(a, m) != self.suffix_letter(b, m) {
                break;
            }
            agree += 1;
        }
        Ok(LambdaElem::finite(2, agree))
    }
}

/// Positions worth probing in a word of length `len`: a few from the front,
/// a few from the very end, and a few around each intermediate tail seam.
fn probe_positions(len: &LambdaElem) -> Vec<LambdaElem> {
    let mut out = Vec::new();
    let one = LambdaElem::one(2);
    let mut push = |beta: LambdaElem| {
        if beta.compare(&one) != Ok(std::cmp::Ordering::Less)
            && beta.compare(len) != Ok(std::cmp::Ordering::Greater)
            && !out.contains(&beta)
        {
            out.push(beta);
        }
    };
    for k in 1..=4 {
        push(LambdaElem::finite(2, k));
    }
    for k in 0..4 {
        push(len - &LambdaElem::finite(2, k));
    }
    let tails = len.coord(1).to_i64().unwrap_or(0);
    for j in 1..tails {
        for x in -2..=2 {
            push(LambdaElem::new(vec![x.into(), j.into()]).unwrap());
        }
    }
    out
}

#[test]
fn formula_family_matches_word_family() {
    let g = hnn_stable(&["a", "b"], "ab").unwrap();
    let u = g.lookup("u").unwrap().clone();
    let s = g.lookup("s").unwrap().clone();
    let words = WordFamily::new(2, vec![u, s]).unwrap();
    let formulas = StableFamily;

    // The oracles themselves agree before any products are formed.
    for i in 0..2 {
        assert_eq!(words.length(i), formulas.length(i));
        for pos in probe_positions(&formulas.length(i)) {
            assert_eq!(
                words.letter_at(i, &pos).unwrap(),
                formulas.letter_at(i, &pos).unwrap(),
                "generator {i} at {pos}"
            );
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(414243);
    for _ in 0..300 {
        let n = rng.gen_range(1..=6);
        let factors: Vec<(usize, i64)> =
            (0..n).map(|_| (rng.gen_range(0..2), if rng.gen() { 1 } else { -1 })).collect();

        let via_words = OracleWord::evaluate(&words, &factors).unwrap();
        let via_formulas = OracleWord::evaluate(&formulas, &factors).unwrap();
        assert_eq!(via_words.length(), via_formulas.length(), "factors {factors:?}");

        // And both agree with the block-form engine.
        let named: Vec<(String, i64)> = factors
            .iter()
            .map(|&(i, e)| (if i == 0 { "u".to_string() } else { "s".to_string() }, e))
            .collect();
        let direct = evaluate_factors(&g, &named).unwrap();
        assert_eq!(&via_words.length(), direct.length(), "factors {named:?}");

        for beta in probe_positions(&via_words.length()) {
            let lw = via_words.eval(&words, &beta).unwrap();
            let lf = via_formulas.eval(&formulas, &beta).unwrap();
            let ld = direct.word().eval(&beta).unwrap();
            assert_eq!(lw, lf, "position {beta} of {factors:?}");
            assert_eq!(lw, ld, "position {beta} of {factors:?}");
        }
    }
}

#[test]
fn commutator_is_trivial_through_formulas_alone() {
    let fam = StableFamily;
    let commutator =
        OracleWord::evaluate(&fam, &[(1, 1), (0, 1), (1, -1), (0, -1)]).unwrap();
    assert!(commutator.is_identity(), "s u s^-1 u^-1 should vanish");

    // A non-relator stays visible.
    let sa = OracleWord::evaluate(&fam, &[(1, 1), (0, 1)]).unwrap();
    assert_eq!(sa.length(), LambdaElem::new(vec![2.into(), 1.into()]).unwrap());
}

#[test]
fn free_letter_family_matches_stack_reduction() {
    let fam = FreeLetterFamily { count: 3 };
    let mut rng = ChaCha8Rng::seed_from_u64(515253);
    for _ in 0..300 {
        let n = rng.gen_range(0..=12);
        let letters: Vec<Letter> =
            (0..n).map(|_| Letter::new(rng.gen_range(0..3), rng.gen())).collect();
        let factors: Vec<(usize, i64)> = letters
            .iter()
            .map(|l| (l.index() as usize, if l.is_inverted() { -1 } else { 1 }))
            .collect();
        let word = OracleWord::evaluate(&fam, &factors).unwrap();
        let oracle = naive_reduce(&letters);
        assert_eq!(word.length(), LambdaElem::finite(1, oracle.len() as i64));
        for (i, expect) in oracle.iter().enumerate() {
            let beta = LambdaElem::finite(1, i as i64 + 1);
            assert_eq!(word.eval(&fam, &beta).unwrap(), *expect);
        }
    }
}
