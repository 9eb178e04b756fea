//! The ordered abelian group Λ = ℤⁿ under the right-lexicographic order.
//!
//! Elements are coordinate vectors of arbitrary-precision integers with
//! `coords[0]` least significant: comparison starts from the highest
//! coordinate and works down. Λ is discretely ordered, its minimal positive
//! element being `1_Λ = (1, 0, …, 0)`, and every positive element `a`
//! satisfies `a + 1_Λ = min { b | b > a }`. Rank is a runtime value so the
//! same code serves ℤ, ℤ² and beyond.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LambdaError {
    /// Arithmetic or comparison attempted across different ranks.
    #[error("incompatible ordered groups: rank {0} vs rank {1}")]
    RankMismatch(usize, usize),
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("cannot parse lambda element {0:?}: {1}")]
    Parse(String, String),
}

/// An element of ℤⁿ, ordered right-lexicographically.
///
/// `coords[0]` is the least significant coordinate. Comparison operators
/// panic on rank mismatch; use [`LambdaElem::compare`] when the ranks are not
/// known to agree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LambdaElem {
    coords: Vec<BigInt>,
}

impl LambdaElem {
    pub fn new(coords: Vec<BigInt>) -> Result<Self, LambdaError> {
        if coords.is_empty() {
            return Err(LambdaError::ZeroRank);
        }
        Ok(LambdaElem { coords })
    }

    pub fn zero(rank: usize) -> Self {
        assert!(rank >= 1, "rank must be at least 1");
        LambdaElem { coords: vec![BigInt::zero(); rank] }
    }

    /// The minimal positive element `(1, 0, …, 0)`.
    pub fn one(rank: usize) -> Self {
        Self::finite(rank, 1)
    }

    /// The finite element `(k, 0, …, 0)`.
    pub fn finite(rank: usize, k: i64) -> Self {
        let mut e = Self::zero(rank);
        e.coords[0] = BigInt::from(k);
        e
    }

    pub fn finite_big(rank: usize, k: BigInt) -> Self {
        let mut e = Self::zero(rank);
        e.coords[0] = k;
        e
    }

    /// The unit vector with 1 in coordinate `i` (0-based).
    pub fn unit(rank: usize, i: usize) -> Self {
        assert!(i < rank);
        let mut e = Self::zero(rank);
        e.coords[i] = BigInt::from(1);
        e
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &BigInt {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_positive(&self) -> bool {
        self.cmp_same(&Self::zero(self.rank())) == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.cmp_same(&Self::zero(self.rank())) == Ordering::Less
    }

    /// Index of the highest nonzero coordinate; 0 for the zero element.
    pub fn height(&self) -> usize {
        for i in (0..self.coords.len()).rev() {
            if !self.coords[i].is_zero() {
                return i;
            }
        }
        0
    }

    /// True when only the least significant coordinate is (possibly) nonzero.
    pub fn is_finite(&self) -> bool {
        self.height() == 0
    }

    /// The value of a finite element as a plain integer.
    pub fn to_finite(&self) -> Option<BigInt> {
        if self.is_finite() {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    /// Right-lexicographic comparison, checking ranks.
    pub fn compare(&self, other: &Self) -> Result<Ordering, LambdaError> {
        if self.rank() != other.rank() {
            return Err(LambdaError::RankMismatch(self.rank(), other.rank()));
        }
        Ok(self.cmp_same(other))
    }

    fn cmp_same(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.rank(), other.rank());
        for i in (0..self.coords.len()).rev() {
            match self.coords[i].cmp(&other.coords[i]) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, LambdaError> {
        if self.rank() != other.rank() {
            return Err(LambdaError::RankMismatch(self.rank(), other.rank()));
        }
        Ok(self + other)
    }

    /// The order-minimum of two elements.
    pub fn min_of(a: &Self, b: &Self) -> Result<Self, LambdaError> {
        Ok(match a.compare(b)? {
            Ordering::Greater => b.clone(),
            _ => a.clone(),
        })
    }

    pub fn max_of(a: &Self, b: &Self) -> Result<Self, LambdaError> {
        Ok(match a.compare(b)? {
            Ordering::Less => b.clone(),
            _ => a.clone(),
        })
    }

    /// Membership in the closed segment `[a, b]`.
    pub fn in_segment(&self, a: &Self, b: &Self) -> Result<bool, LambdaError> {
        Ok(self.compare(a)? != Ordering::Less && self.compare(b)? != Ordering::Greater)
    }

    pub fn double(&self) -> Self {
        self.scale(&BigInt::from(2))
    }

    /// Exact halving; `None` when any coordinate is odd.
    pub fn half(&self) -> Option<Self> {
        let two = BigInt::from(2);
        let mut coords = Vec::with_capacity(self.coords.len());
        for c in &self.coords {
            if (c % &two).is_zero() {
                coords.push(c / &two);
            } else {
                return None;
            }
        }
        Some(LambdaElem { coords })
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        LambdaElem { coords: self.coords.iter().map(|c| c * k).collect() }
    }

    /// Successor in the discrete order: `self + 1_Λ`.
    pub fn succ(&self) -> Self {
        self + &Self::one(self.rank())
    }

    pub fn pred(&self) -> Self {
        self - &Self::one(self.rank())
    }

    /// Reinterpret in a higher rank by zero-extending the top coordinates.
    pub fn pad_to(&self, rank: usize) -> Result<Self, LambdaError> {
        if rank < self.rank() {
            return Err(LambdaError::RankMismatch(self.rank(), rank));
        }
        let mut coords = self.coords.clone();
        coords.resize(rank, BigInt::zero());
        Ok(LambdaElem { coords })
    }

    /// Parse from text. Accepted forms: a bare integer `k` (any rank, placed
    /// in the least significant coordinate), a tuple `(a1,...,an)` whose
    /// arity must equal `rank`, and for rank 2 the linear form `b t + a`
    /// (e.g. `t`, `3t`, `t+2`, `-2t+5`).
    pub fn parse(text: &str, rank: usize) -> Result<Self, LambdaError> {
        let err = |m: &str| LambdaError::Parse(text.to_string(), m.to_string());
        let s = text.trim();
        if s.is_empty() {
            return Err(err("empty input"));
        }
        if s.starts_with('(') {
            if !s.ends_with(')') {
                return Err(err("unterminated tuple"));
            }
            let inner = &s[1..s.len() - 1];
            let parts: Vec<&str> = inner.split(',').collect();
            if parts.len() != rank {
                return Err(err(&format!("tuple arity {} but rank {}", parts.len(), rank)));
            }
            let mut coords = Vec::with_capacity(parts.len());
            for p in parts {
                coords.push(p.trim().parse::<BigInt>().map_err(|e| err(&e.to_string()))?);
            }
            return LambdaElem::new(coords);
        }
        if s.contains('t') {
            if rank != 2 {
                return Err(err("linear form in t only supported for rank 2"));
            }
            return parse_linear_t(s).ok_or_else(|| err("bad linear form in t"));
        }
        let k = s.parse::<BigInt>().map_err(|e| err(&e.to_string()))?;
        Ok(Self::finite_big(rank, k))
    }
}

/// Parse `b t + a` variants: `t`, `-t`, `3t`, `t+2`, `3t-4`, `-2t+5`.
fn parse_linear_t(s: &str) -> Option<LambdaElem> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let tpos = compact.find('t')?;
    let (head, rest) = (&compact[..tpos], &compact[tpos + 1..]);
    let b: BigInt = match head {
        "" | "+" => BigInt::from(1),
        "-" => BigInt::from(-1),
        _ => head.parse().ok()?,
    };
    let a: BigInt = if rest.is_empty() {
        BigInt::zero()
    } else {
        if !rest.starts_with('+') && !rest.starts_with('-') {
            return None;
        }
        rest.parse().ok()?
    };
    LambdaElem::new(vec![a, b]).ok()
}

impl PartialOrd for LambdaElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LambdaElem {
    /// Panics on rank mismatch; use [`LambdaElem::compare`] when unsure.
    fn cmp(&self, other: &Self) -> Ordering {
        assert_eq!(self.rank(), other.rank(), "incompatible ordered groups");
        self.cmp_same(other)
    }
}

impl Add for &LambdaElem {
    type Output = LambdaElem;
    fn add(self, rhs: &LambdaElem) -> LambdaElem {
        assert_eq!(self.rank(), rhs.rank(), "incompatible ordered groups");
        LambdaElem {
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &LambdaElem {
    type Output = LambdaElem;
    fn sub(self, rhs: &LambdaElem) -> LambdaElem {
        assert_eq!(self.rank(), rhs.rank(), "incompatible ordered groups");
        LambdaElem {
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Add<&LambdaElem> for LambdaElem {
    type Output = LambdaElem;
    fn add(self, rhs: &LambdaElem) -> LambdaElem {
        &self + rhs
    }
}

impl Sub<&LambdaElem> for LambdaElem {
    type Output = LambdaElem;
    fn sub(self, rhs: &LambdaElem) -> LambdaElem {
        &self - rhs
    }
}

impl Neg for &LambdaElem {
    type Output = LambdaElem;
    fn neg(self) -> LambdaElem {
        LambdaElem { coords: self.coords.iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for LambdaElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rank() == 1 {
            return write!(f, "{}", self.coords[0]);
        }
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Euclidean remainder of a big offset by a small positive modulus, as an
/// index. Used for periodic pattern lookups.
pub(crate) fn rem_euclid_usize(a: &BigInt, m: usize) -> usize {
    debug_assert!(m > 0);
    let m_big = BigInt::from(m);
    let r = ((a % &m_big) + &m_big) % &m_big;
    r.to_usize().expect("remainder fits in usize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn le2(a: i64, b: i64) -> LambdaElem {
        LambdaElem::new(vec![BigInt::from(a), BigInt::from(b)]).unwrap()
    }

    #[test]
    fn right_lex_order() {
        assert_eq!(le2(3, 0).compare(&le2(0, 1)).unwrap(), Ordering::Less);
        assert_eq!(le2(0, 0).compare(&le2(0, 0)).unwrap(), Ordering::Equal);
        assert_eq!(le2(-5, 1).compare(&le2(7, 0)).unwrap(), Ordering::Greater);
    }

    #[test]
    fn arithmetic() {
        assert_eq!(&le2(2, 1) + &le2(3, -1), le2(5, 0));
        assert_eq!(-&le2(0, 1), le2(0, -1));
        assert_eq!(LambdaElem::min_of(&le2(4, 0), &le2(0, 1)).unwrap(), le2(4, 0));
    }

    #[test]
    fn segments() {
        assert!(le2(5, 0).in_segment(&le2(1, 0), &le2(0, 1)).unwrap());
        assert!(le2(0, 1).in_segment(&le2(1, 0), &le2(0, 1)).unwrap());
        assert!(!le2(0, -1).in_segment(&le2(0, 0), &le2(0, 1)).unwrap());
    }

    #[test]
    fn rank_mismatch_is_an_error() {
        let a = LambdaElem::finite(1, 3);
        let b = le2(3, 0);
        assert!(matches!(a.compare(&b), Err(LambdaError::RankMismatch(1, 2))));
        assert!(a.checked_add(&b).is_err());
    }

    #[test]
    fn minimal_positive_element() {
        let one = LambdaElem::one(2);
        assert!(one.is_positive());
        // a + 1 is the immediate successor: nothing fits strictly between.
        let a = le2(7, 3);
        let succ = a.succ();
        assert_eq!(succ, le2(8, 3));
        assert!(a < succ);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(LambdaElem::parse("5", 1).unwrap(), LambdaElem::finite(1, 5));
        assert_eq!(LambdaElem::parse("(3,2)", 2).unwrap(), le2(3, 2));
        assert_eq!(LambdaElem::parse("( -1 , 4 )", 2).unwrap(), le2(-1, 4));
        assert_eq!(LambdaElem::parse("t", 2).unwrap(), le2(0, 1));
        assert_eq!(LambdaElem::parse("3t+2", 2).unwrap(), le2(2, 3));
        assert_eq!(LambdaElem::parse("2 t + 1", 2).unwrap(), le2(1, 2));
        assert_eq!(LambdaElem::parse("-t-4", 2).unwrap(), le2(-4, -1));
        assert_eq!(LambdaElem::parse("7", 2).unwrap(), le2(7, 0));
        assert!(LambdaElem::parse("(1,2,3)", 2).is_err());
        assert!(LambdaElem::parse("t", 1).is_err());

        assert_eq!(le2(0, 1).to_string(), "(0,1)");
        assert_eq!(LambdaElem::finite(1, -3).to_string(), "-3");
        for s in ["(4,-7)", "12"] {
            let e = LambdaElem::parse(s, if s.starts_with('(') { 2 } else { 1 }).unwrap();
            assert_eq!(LambdaElem::parse(&e.to_string(), e.rank()).unwrap(), e);
        }
    }

    #[test]
    fn height_and_padding() {
        assert_eq!(le2(5, 0).height(), 0);
        assert_eq!(le2(5, 1).height(), 1);
        assert!(le2(5, 0).is_finite());
        assert_eq!(LambdaElem::finite(1, 5).pad_to(2).unwrap(), le2(5, 0));
    }

    #[test]
    fn halving() {
        assert_eq!(le2(4, 2).half().unwrap(), le2(2, 1));
        assert!(le2(3, 2).half().is_none());
        assert_eq!(le2(-4, 6).half().unwrap(), le2(-2, 3));
    }

    #[test]
    fn rem_euclid_helper() {
        assert_eq!(rem_euclid_usize(&BigInt::from(7), 3), 1);
        assert_eq!(rem_euclid_usize(&BigInt::from(-1), 3), 2);
        assert_eq!(rem_euclid_usize(&BigInt::from(-6), 3), 0);
    }

    fn arb_elem(rank: usize) -> impl Strategy<Value = LambdaElem> {
        prop::collection::vec(-100i64..100, rank).prop_map(|v| {
            LambdaElem::new(v.into_iter().map(BigInt::from).collect()).unwrap()
        })
    }

    proptest! {
        #[test]
        fn translation_invariance(a in arb_elem(3), b in arb_elem(3), c in arb_elem(3)) {
            if a <= b {
                prop_assert!(&a + &c <= &b + &c);
            }
        }

        #[test]
        fn total_order(a in arb_elem(2), b in arb_elem(2), c in arb_elem(2)) {
            // Antisymmetry.
            if a <= b && b <= a {
                prop_assert_eq!(&a, &b);
            }
            // Transitivity.
            if a <= b && b <= c {
                prop_assert!(a <= c);
            }
        }

        #[test]
        fn positive_elements_dominate_one(a in arb_elem(3)) {
            if a.is_positive() {
                prop_assert!(a >= LambdaElem::one(3));
            }
        }

        #[test]
        fn successor_is_minimal_above(a in arb_elem(2), b in arb_elem(2)) {
            // Discreteness: nothing lies strictly between a and a + 1.
            if b > a {
                prop_assert!(b >= a.succ());
            }
        }
    }
}
