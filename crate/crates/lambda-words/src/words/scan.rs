//! Synchronized block scan computing the length of the longest common
//! initial segment of two words.
//!
//! The two words are walked in lockstep through segment views:
//!
//! * `Lit` — the remainder of an explicit letter run;
//! * `Per` — the remainder of a tail's backward-periodic region, which read
//!   forward is again periodic, of known finite length;
//! * `TailRem` — the remainder of a tail block entered through its
//!   forward-periodic region: infinitely many front positions followed by
//!   the backward-anchored end, total remaining length `(rem_d, 1)`.
//!
//! Finite-vs-periodic comparisons probe letters directly. Periodic-vs-
//! periodic comparisons probe `|p| + |q|` letters: by Fine–Wilf, two streams
//! with periods `|p|` and `|q|` agreeing that long agree on their whole
//! common extent. When both sides are in forward-periodic regions that agree
//! everywhere, the scan must cross the gap: the backward-anchored end
//! streams are compared the same way, and agreement there lets both cursors
//! jump a height-one amount at once. Disagreement of the end streams recurs
//! unboundedly far down by periodicity, so there is no longest common
//! segment at all: `com` is undefined.
//!
//! Every loop iteration either returns or exhausts at least one block, so
//! the scan terminates after at most `blocks(u) + blocks(v)` steps.

use super::{Block, FiniteWord, Letter, Word, WordError};
use crate::ordered_group::{rem_euclid_usize, LambdaElem};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

struct Cursor<'w> {
    blocks: &'w [Block],
    idx: usize,
    /// Letters consumed in the current block: `(low, 0)` when `!crossed`
    /// (finite block, or the front region of a tail), `(low, 1)` when
    /// `crossed` (the backward region of a tail).
    low: BigInt,
    crossed: bool,
}

enum View<'w> {
    Lit { letters: &'w [Letter] },
    Per { pat: FiniteWord, len: BigInt },
    TailRem { fpat: FiniteWord, back: &'w FiniteWord, rem_d: BigInt },
}

impl<'w> Cursor<'w> {
    fn new(w: &'w Word) -> Self {
        Cursor { blocks: w.blocks(), idx: 0, low: BigInt::zero(), crossed: false }
    }

    fn view(&self) -> Option<View<'w>> {
        let block = self.blocks.get(self.idx)?;
        Some(match block {
            Block::Finite(f) => {
                let k = self.low.to_usize().expect("finite offsets fit");
                View::Lit { letters: &f.letters()[k..] }
            }
            Block::Tail { front, back, delta } => {
                if self.crossed {
                    let rem = delta - &self.low;
                    // Forward view of the backward-anchored remainder: the
                    // i-th letter (1-based) sits rem−i from the block end.
                    let pat = FiniteWord::new(
                        (1..=back.len() as i64)
                            .map(|i| back.back_anchored_letter(&(&rem - BigInt::from(i))))
                            .collect(),
                    );
                    View::Per { pat, len: rem }
                } else {
                    let fpat = front.rotate_left(rem_euclid_usize(&self.low, front.len()));
                    View::TailRem { fpat, back, rem_d: delta - &self.low }
                }
            }
        })
    }

    /// Advance by `(n, 0)` within the current region.
    fn advance_finite(&mut self, n: &BigInt) {
        self.low += n;
        let done = match &self.blocks[self.idx] {
            Block::Finite(f) => self.low == BigInt::from(f.len()),
            Block::Tail { delta, .. } => self.crossed && self.low == *delta,
        };
        if done {
            self.idx += 1;
            self.low = BigInt::zero();
            self.crossed = false;
        }
    }

    /// From the front region of a tail, advance by `(m, 1)` into (or through)
    /// its backward region.
    fn advance_gap(&mut self, m: &BigInt) {
        debug_assert!(!self.crossed);
        debug_assert!(matches!(self.blocks[self.idx], Block::Tail { .. }));
        self.low += m;
        self.crossed = true;
        if let Block::Tail { delta, .. } = &self.blocks[self.idx] {
            if self.low == *delta {
                self.idx += 1;
                self.low = BigInt::zero();
                self.crossed = false;
            }
        }
    }
}

impl View<'_> {
    /// Letter at 0-based offset `i` within the view. Callers keep `i` within
    /// the view's extent.
    fn letter(&self, i: usize) -> Letter {
        match self {
            View::Lit { letters } => letters[i],
            View::Per { pat, .. } => pat.cyclic_letter(&BigInt::from(i)),
            View::TailRem { fpat, .. } => fpat.cyclic_letter(&BigInt::from(i)),
        }
    }

    /// Extent of the view for letterwise comparison; `None` is unbounded
    /// (the front region of a tail).
    fn finite_len(&self) -> Option<BigInt> {
        match self {
            View::Lit { letters } => Some(BigInt::from(letters.len())),
            View::Per { len, .. } => Some(len.clone()),
            View::TailRem { .. } => None,
        }
    }

    /// Probe budget that certifies full agreement via Fine–Wilf: period for
    /// periodic views, full length for literal runs.
    fn period_bound(&self) -> BigInt {
        match self {
            View::Lit { letters } => BigInt::from(letters.len()),
            View::Per { pat, .. } => BigInt::from(pat.len()),
            View::TailRem { fpat, .. } => BigInt::from(fpat.len()),
        }
    }
}

/// First disagreement among the first `n` letters of two views.
fn first_mismatch(a: &View, b: &View, n: &BigInt) -> Option<BigInt> {
    let n = n.to_usize().expect("probe counts are small or materialized");
    (0..n).find(|&i| a.letter(i) != b.letter(i)).map(BigInt::from)
}

pub(super) fn com_len(u: &Word, v: &Word) -> Result<LambdaElem, WordError> {
    let rank = u.rank();
    let mut a = Cursor::new(u);
    let mut b = Cursor::new(v);
    let mut gamma = LambdaElem::zero(rank);
    let fin = |k: &BigInt| LambdaElem::finite_big(rank, k.clone());

    loop {
        let (va, vb) = match (a.view(), b.view()) {
            (Some(va), Some(vb)) => (va, vb),
            _ => return Ok(gamma), // one word exhausted: com is the shorter
        };

        match (&va, &vb) {
            (View::TailRem { rem_d: da, back: qa, .. }, View::TailRem { rem_d: db, back: qb, .. }) => {
                // Compare the two forward-periodic fronts.
                let probe = &va.period_bound() + &vb.period_bound();
                if let Some(m) = first_mismatch(&va, &vb, &probe) {
                    return Ok(&gamma + &fin(&m));
                }
                // Fronts agree everywhere. Cross the gap: compare the
                // backward-anchored end streams. Relative position (x, 1)
                // reads qa at distance da − x and qb at distance db − x;
                // both are periodic in x, so |qa| + |qb| consecutive probes
                // ending at x = m decide everything.
                let m = da.min(db).clone();
                let nb = (qa.len() + qb.len()) as i64;
                for off in 0..nb {
                    let x = &m - BigInt::from(nb - 1 - off);
                    let la = qa.back_anchored_letter(&(da - &x));
                    let lb = qb.back_anchored_letter(&(db - &x));
                    if la != lb {
                        // Periodicity repeats this disagreement unboundedly
                        // far below: the agreement set has no supremum.
                        return Err(WordError::ComUndefined);
                    }
                }
                let gap = &fin(&m) + &LambdaElem::unit(rank, 1);
                gamma = &gamma + &gap;
                a.advance_gap(&m);
                b.advance_gap(&m);
            }
            _ => {
                // At least one side has a finite extent: compare letterwise
                // up to the smaller extent, with the Fine–Wilf bound
                // shortcutting agreement checks between long periodic runs.
                let min_len = match (va.finite_len(), vb.finite_len()) {
                    (Some(x), Some(y)) => x.min(y),
                    (Some(x), None) => x,
                    (None, Some(y)) => y,
                    (None, None) => unreachable!("handled by the tail/tail arm"),
                };
                let probe = (&va.period_bound() + &vb.period_bound()).min(min_len.clone());
                if let Some(m) = first_mismatch(&va, &vb, &probe) {
                    return Ok(&gamma + &fin(&m));
                }
                // Agreement through the probe certifies agreement through
                // min_len (Fine–Wilf when the probe was the period sum, and
                // trivially when the probe was min_len itself).
                gamma = &gamma + &fin(&min_len);
                a.advance_finite(&min_len);
                b.advance_finite(&min_len);
            }
        }
    }
}
