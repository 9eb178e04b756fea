//! Finitely generated groups of Λ-words: generator tables, evaluation of
//! generator expressions through the cancellation product, the overlap
//! function `c`, the word problem, and the randomized length-axiom suite.

use crate::ordered_group::LambdaElem;
use crate::words::{parse_expr, print_expr, print_word, Alphabet, Word, WordError};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("unknown generator name {0:?}")]
    UnknownGenerator(String),
    #[error("bad generator table: {0}")]
    BadGeneratorTable(String),
    #[error("axis undefined for identity")]
    AxisUndefined,
    #[error("length function not preserved: {0}")]
    LengthNotPreserved(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// A group `G ≤ CDR(Λ, X)` given by a finite table of named reduced words.
///
/// Aliases are named abbreviations (words of the group that are not counted
/// as generators); expressions may use both. The `checked` flag records
/// whether the table passed semantic validation: every generator reduced and
/// admitting a cyclic decomposition. Tables loaded with `option unchecked`
/// skip that validation, and every checking suite revalidates first.
#[derive(Debug, Clone)]
pub struct GroupDef {
    alphabet: Alphabet,
    rank: usize,
    gens: Vec<(String, Word)>,
    aliases: Vec<(String, Word)>,
    checked: bool,
}

fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && name.chars().next().map(|c| c.is_alphabetic() || c == '_').unwrap_or(false)
        && name.chars().all(|c| c.is_alphanumeric() || c == '_')
        && !crate::words::RESERVED_NAMES.contains(&name)
}

impl GroupDef {
    pub fn new(
        alphabet: Alphabet,
        rank: usize,
        gens: Vec<(String, Word)>,
        aliases: Vec<(String, Word)>,
    ) -> Result<Self, GroupError> {
        let def = Self::new_unchecked(alphabet, rank, gens, aliases)?;
        def.validate_table()?;
        Ok(GroupDef { checked: true, ..def })
    }

    /// Structural checks only (names, ranks, letter indices); the semantic
    /// generator-table validation is deferred to [`GroupDef::validate_table`].
    pub fn new_unchecked(
        alphabet: Alphabet,
        rank: usize,
        gens: Vec<(String, Word)>,
        aliases: Vec<(String, Word)>,
    ) -> Result<Self, GroupError> {
        if rank < 1 {
            return Err(GroupError::InvalidInput("rank must be at least 1".into()));
        }
        let mut seen: Vec<&str> = Vec::new();
        for (name, word) in gens.iter().chain(aliases.iter()) {
            if !valid_name(name) {
                return Err(GroupError::InvalidInput(format!("bad generator name {name:?}")));
            }
            if let Some(letter) = alphabet.letter(name, false) {
                let expected = Word::from_letters(rank, vec![letter]);
                if word != &expected {
                    return Err(GroupError::InvalidInput(format!(
                        "name {name:?} shadows an alphabet letter"
                    )));
                }
            }
            if seen.contains(&name.as_str()) {
                return Err(GroupError::InvalidInput(format!("duplicate name {name:?}")));
            }
            seen.push(name);
            if word.rank() != rank {
                return Err(GroupError::InvalidInput(format!(
                    "generator {name:?} has rank {} in a rank-{rank} group",
                    word.rank()
                )));
            }
        }
        Ok(GroupDef { alphabet, rank, gens, aliases, checked: false })
    }

    /// Semantic validation: every generator and alias word is reduced and
    /// admits a cyclic decomposition.
    pub fn validate_table(&self) -> Result<(), GroupError> {
        for (name, word) in self.gens.iter().chain(self.aliases.iter()) {
            if !word.is_reduced() || !word.verify_reduced() {
                return Err(GroupError::BadGeneratorTable(format!("{name:?} is not reduced")));
            }
            match word.cyclic_decomposition() {
                Ok(Some(_)) => {}
                Ok(None) => {
                    return Err(GroupError::BadGeneratorTable(format!(
                        "{name:?} admits no cyclic decomposition"
                    )))
                }
                Err(e) => return Err(GroupError::BadGeneratorTable(format!("{name:?}: {e}"))),
            }
        }
        Ok(())
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_checked(&self) -> bool {
        self.checked
    }

    /// Primary generators, in table order.
    pub fn generators(&self) -> &[(String, Word)] {
        &self.gens
    }

    pub fn aliases(&self) -> &[(String, Word)] {
        &self.aliases
    }

    /// Look a name up among generators and aliases.
    pub fn lookup(&self, name: &str) -> Option<&Word> {
        self.gens
            .iter()
            .chain(self.aliases.iter())
            .find(|(n, _)| n == name)
            .map(|(_, w)| w)
    }

    /// Canonical serialization; two defs with equal text are the same group
    /// presentation.
    pub fn canonical_text(&self) -> String {
        let mut out = format!("rank={}\nalphabet={}\n", self.rank, self.alphabet.symbols().join(","));
        for (name, word) in &self.gens {
            out.push_str(&format!("gen {name} = {}\n", print_word(word, &self.alphabet)));
        }
        for (name, word) in &self.aliases {
            out.push_str(&format!("alias {name} = {}\n", print_word(word, &self.alphabet)));
        }
        out
    }

    /// First 12 hex digits of the SHA-256 of the canonical serialization.
    pub fn hash_hex(&self) -> String {
        let digest = Sha256::digest(self.canonical_text().as_bytes());
        digest.iter().map(|b| format!("{b:02x}")).collect::<String>()[..12].to_string()
    }
}

/// An element of the group: its reduced word together with the generator
/// expression it came from.
#[derive(Debug, Clone)]
pub struct GroupElem {
    word: Word,
    expr: Vec<(String, i64)>,
}

impl GroupElem {
    pub fn identity(rank: usize) -> Self {
        GroupElem { word: Word::empty(rank), expr: Vec::new() }
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn length(&self) -> &LambdaElem {
        self.word.length()
    }

    pub fn rank(&self) -> usize {
        self.word.rank()
    }

    pub fn expression(&self) -> &[(String, i64)] {
        &self.expr
    }

    pub fn expr_text(&self) -> String {
        print_expr(&self.expr)
    }

    pub fn inverse(&self) -> GroupElem {
        let expr = self.expr.iter().rev().map(|(n, e)| (n.clone(), -e)).collect();
        GroupElem { word: self.word.inverse(), expr }
    }

    pub fn mul(&self, other: &GroupElem) -> Result<GroupElem, GroupError> {
        let word = self.word.product(&other.word)?;
        let mut expr = self.expr.clone();
        expr.extend(other.expr.iter().cloned());
        Ok(GroupElem { word, expr })
    }
}

/// Elements are equal as group elements: same underlying word.
impl PartialEq for GroupElem {
    fn eq(&self, other: &Self) -> bool {
        self.word == other.word
    }
}

impl Eq for GroupElem {}

/// Evaluate a generator expression to a reduced word by a left-to-right
/// chain of cancellation products.
pub fn evaluate(g: &GroupDef, expr: &str) -> Result<GroupElem, GroupError> {
    let is_name = |s: &str| g.lookup(s).is_some();
    let factors = parse_expr(expr, &is_name).map_err(|e| match e {
        WordError::UnknownName(n) => GroupError::UnknownGenerator(n),
        other => GroupError::Word(other),
    })?;
    evaluate_factors(g, &factors)
}

/// The same evaluation from an already-parsed factor list.
pub fn evaluate_factors(g: &GroupDef, factors: &[(String, i64)]) -> Result<GroupElem, GroupError> {
    let mut word = Word::empty(g.rank());
    for (name, e) in factors {
        let gen = g.lookup(name).ok_or_else(|| GroupError::UnknownGenerator(name.clone()))?;
        let step = if *e < 0 { gen.inverse() } else { gen.clone() };
        for _ in 0..e.unsigned_abs() {
            word = word.product(&step)?;
        }
    }
    Ok(GroupElem { word, expr: factors.to_vec() })
}

/// The overlap `c(f,g) = |com(f,g)|`, cross-checked on every call against
/// the length-function route `½(|f| + |g| − |f⁻¹g|)`.
pub fn c_value(f: &GroupElem, g: &GroupElem) -> Result<LambdaElem, GroupError> {
    let via_com = f.word.com_len(&g.word)?;
    let quot = f.word.inverse().product(&g.word)?;
    let sum = &(f.length() + g.length()) - quot.length();
    if via_com.double() != sum {
        return Err(GroupError::Internal(format!(
            "c(f,g) disagreement: 2·|com| = {} but |f|+|g|−|f⁻¹g| = {sum}",
            via_com.double()
        )));
    }
    Ok(via_com)
}

/// The word problem: an element is the identity exactly when its reduced
/// word is empty.
pub fn is_identity(g: &GroupElem) -> bool {
    g.word.is_empty()
}

/// Search generator strings of length up to `bound` for a cyclically
/// reduced element `h ≠ 1` (that is, `|h²| = 2|h|`). `Some` certifies that
/// the universal tree is minimal; `None` is inconclusive.
pub fn minimality_witness(g: &GroupDef, bound: usize) -> Result<Option<GroupElem>, GroupError> {
    if bound < 1 {
        return Err(GroupError::InvalidInput("bound must be at least 1".into()));
    }
    g.validate_table().map_err(|e| match e {
        GroupError::BadGeneratorTable(m) => GroupError::BadGeneratorTable(m),
        other => other,
    })?;
    let m = g.gens.len();
    // Depth-first over strings in (index, sign) lexicographic order, so the
    // returned witness is deterministic.
    let mut stack: Vec<(GroupElem, usize)> = vec![(GroupElem::identity(g.rank()), 0)];
    while let Some((elem, depth)) = stack.pop() {
        if !elem.word().is_empty() && elem.word().square_doubles_length()? {
            return Ok(Some(elem));
        }
        if depth == bound {
            continue;
        }
        // Reverse push order keeps exploration lexicographic.
        for i in (0..m).rev() {
            for inverted in [true, false] {
                let (name, word) = &g.gens[i];
                let step_word = if inverted { word.inverse() } else { word.clone() };
                let next = GroupElem {
                    word: elem.word.product(&step_word)?,
                    expr: {
                        let mut e = elem.expr.clone();
                        e.push((name.clone(), if inverted { -1 } else { 1 }));
                        e
                    },
                };
                stack.push((next, depth + 1));
            }
        }
    }
    Ok(None)
}

/// One line of a check report: `PASS`/`FAIL`, the axiom identifier, and the
/// sample count (for `PASS`: how many samples were checked; for `FAIL`: the
/// index of the first counterexample).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckLine {
    pub pass: bool,
    pub axiom: String,
    pub sample: usize,
}

/// Line-oriented, machine-parseable result of a checking suite.
#[derive(Debug, Clone)]
pub struct Report {
    pub suite: String,
    pub lines: Vec<CheckLine>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.pass)
    }

    pub fn to_text(&self) -> String {
        self.lines
            .iter()
            .map(|l| {
                format!(
                    "{} axiom={} sample={}\n",
                    if l.pass { "PASS" } else { "FAIL" },
                    l.axiom,
                    l.sample
                )
            })
            .collect()
    }
}

/// Accumulates per-axiom outcomes: the first counterexample wins, otherwise
/// the axiom passes with the number of samples it saw.
pub(crate) struct SuiteRun {
    suite: String,
    axioms: Vec<(String, Option<usize>, usize)>,
}

impl SuiteRun {
    pub(crate) fn new(suite: &str) -> Self {
        SuiteRun { suite: suite.to_string(), axioms: Vec::new() }
    }

    /// A suite that fails before sampling (for unusable generator tables).
    pub(crate) fn table_failure(suite: &str) -> Report {
        Report {
            suite: suite.to_string(),
            lines: vec![CheckLine { pass: false, axiom: "generator-table".into(), sample: 0 }],
        }
    }

    pub(crate) fn check(&mut self, axiom: &str, sample: usize, ok: bool) {
        match self.axioms.iter_mut().find(|(id, _, _)| id == axiom) {
            Some((_, first_fail, count)) => {
                *count += 1;
                if first_fail.is_none() && !ok {
                    *first_fail = Some(sample);
                }
            }
            None => {
                self.axioms.push((
                    axiom.to_string(),
                    if ok { None } else { Some(sample) },
                    1,
                ))
            }
        }
    }

    pub(crate) fn finish(self) -> Report {
        let lines = self
            .axioms
            .into_iter()
            .map(|(axiom, first_fail, count)| match first_fail {
                Some(k) => CheckLine { pass: false, axiom, sample: k },
                None => CheckLine { pass: true, axiom, sample: count },
            })
            .collect();
        Report { suite: self.suite, lines }
    }
}

/// Seeded random element: a product of up to `max_factors` generator powers.
pub fn random_elem(
    g: &GroupDef,
    rng: &mut ChaCha8Rng,
    max_factors: usize,
) -> Result<GroupElem, GroupError> {
    let n = rng.gen_range(0..=max_factors);
    let mut factors = Vec::with_capacity(n);
    for _ in 0..n {
        let i = rng.gen_range(0..g.gens.len());
        let e = if rng.gen_bool(0.5) { 1 } else { -1 };
        factors.push((g.gens[i].0.clone(), e));
    }
    evaluate_factors(g, &factors)
}

fn isosceles(a: &LambdaElem, b: &LambdaElem, c: &LambdaElem) -> bool {
    let mut v = [a, b, c];
    v.sort();
    v[0] == v[1]
}

/// Randomized suite for the length-function axioms and their two derived
/// properties. Validates the generator table first: a corrupted table is
/// itself the reported violation.
pub fn check_length_axioms(g: &GroupDef, samples: usize, seed: u64) -> Report {
    if g.validate_table().is_err() {
        return SuiteRun::table_failure("length");
    }
    let mut run = SuiteRun::new("length");
    run.check("generator-table", 0, true);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let zero = LambdaElem::zero(g.rank());
    for k in 0..samples {
        let (x, y, z) = match (
            random_elem(g, &mut rng, 4),
            random_elem(g, &mut rng, 4),
            random_elem(g, &mut rng, 4),
        ) {
            (Ok(x), Ok(y), Ok(z)) => (x, y, z),
            _ => {
                run.check("L1", k, false);
                continue;
            }
        };
        let identity_len_ok = k > 0 || GroupElem::identity(g.rank()).length() == &zero;
        run.check("L1", k, !x.length().is_negative() && identity_len_ok);
        run.check("L2", k, x.inverse().length() == x.length());
        match (c_value(&x, &y), c_value(&x, &z), c_value(&y, &z)) {
            (Ok(cxy), Ok(cxz), Ok(cyz)) => {
                run.check("L3", k, isosceles(&cxy, &cxz, &cyz));
                run.check("L4", k, true);
                let min_len = LambdaElem::min_of(x.length(), y.length()).expect("same rank");
                run.check("c-range", k, !cxy.is_negative() && cxy <= min_len);
            }
            _ => {
                // c_value errors only on the dual-route disagreement, which
                // is exactly a failure of the divisibility axiom's contract.
                run.check("L3", k, false);
                run.check("L4", k, false);
                run.check("c-range", k, false);
            }
        }
        match x.mul(&y) {
            Ok(xy) => run.check("subadditive", k, xy.length() <= &(x.length() + y.length())),
            Err(_) => run.check("subadditive", k, false),
        }
    }
    run.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;
    use num_bigint::BigInt;

    fn free_ab() -> GroupDef {
        let ab = Alphabet::new(vec!["a", "b"]).unwrap();
        let gens = vec![
            ("a".into(), parse_word("a", &ab, 1).unwrap()),
            ("b".into(), parse_word("b", &ab, 1).unwrap()),
        ];
        GroupDef::new(ab, 1, gens, Vec::new()).unwrap()
    }

    fn stable_group() -> GroupDef {
        let ab = Alphabet::new(vec!["a", "b"]).unwrap();
        let gens = vec![
            ("a".into(), parse_word("a", &ab, 2).unwrap()),
            ("b".into(), parse_word("b", &ab, 2).unwrap()),
            ("s".into(), parse_word("tail(front=\"ab\", back=\"ab\")", &ab, 2).unwrap()),
        ];
        let aliases = vec![("u".into(), parse_word("a b", &ab, 2).unwrap())];
        GroupDef::new(ab, 2, gens, aliases).unwrap()
    }

    #[test]
    fn evaluation_reduces() {
        let f = free_ab();
        assert!(is_identity(&evaluate(&f, "a a^-1").unwrap()));
        let w = evaluate(&f, "a b b^-1 a").unwrap();
        assert_eq!(w.word(), &parse_word("a a", f.alphabet(), 1).unwrap());
        assert_eq!(w.expr_text(), "a b b^-1 a");
        assert!(matches!(evaluate(&f, "q"), Err(GroupError::UnknownGenerator(_))));
    }

    #[test]
    fn evaluation_is_homomorphic() {
        let f = free_ab();
        let whole = evaluate(&f, "a b a^-1 b a").unwrap();
        let left = evaluate(&f, "a b").unwrap();
        let right = evaluate(&f, "a^-1 b a").unwrap();
        assert_eq!(left.mul(&right).unwrap(), whole);
    }

    #[test]
    fn c_value_dual_route() {
        let f = free_ab();
        let x = evaluate(&f, "a b").unwrap();
        let y = evaluate(&f, "a b^-1").unwrap();
        assert_eq!(c_value(&x, &y).unwrap(), LambdaElem::one(1));
        assert_eq!(c_value(&x, &x).unwrap(), *x.length());

        let g = stable_group();
        let s = evaluate(&g, "s").unwrap();
        assert_eq!(s.length(), &LambdaElem::new(vec![BigInt::from(0), BigInt::from(1)]).unwrap());
        let us = evaluate(&g, "u s").unwrap();
        // u ∘ s extends s by a period, so the overlap is all of s.
        assert_eq!(c_value(&s, &us).unwrap(), *s.length());
    }

    #[test]
    fn stable_letter_commutes() {
        let g = stable_group();
        assert!(is_identity(&evaluate(&g, "s u s^-1 u^-1").unwrap()));
        assert!(is_identity(&evaluate(&g, "s^-1 u s u^-1").unwrap()));
        assert!(!is_identity(&evaluate(&g, "s a s^-1 a^-1").unwrap()));
    }

    #[test]
    fn witness_search() {
        let f = free_ab();
        let w = minimality_witness(&f, 1).unwrap().unwrap();
        assert_eq!(w.expr_text(), "a");

        // The cyclic subgroup generated by b^-1 a b: every power is a
        // conjugate of a power of a, never cyclically reduced.
        let ab = Alphabet::new(vec!["a", "b"]).unwrap();
        let gens = vec![("g".into(), parse_word("b^-1 a b", &ab, 1).unwrap())];
        let conj = GroupDef::new(ab, 1, gens, Vec::new()).unwrap();
        assert_eq!(minimality_witness(&conj, 3).unwrap(), None);
    }

    #[test]
    fn length_suite_passes_and_catches_corruption() {
        let rep = check_length_axioms(&free_ab(), 60, 7);
        assert!(rep.passed(), "{}", rep.to_text());
        for id in ["generator-table", "L1", "L2", "L3", "L4", "subadditive", "c-range"] {
            assert!(rep.lines.iter().any(|l| l.axiom == id));
        }
        let rep2 = check_length_axioms(&stable_group(), 40, 7);
        assert!(rep2.passed(), "{}", rep2.to_text());

        let ab = Alphabet::new(vec!["a", "b"]).unwrap();
        let bad = GroupDef::new_unchecked(
            ab.clone(),
            1,
            vec![("x".into(), parse_word("a a^-1 b", &ab, 1).unwrap())],
            Vec::new(),
        )
        .unwrap();
        assert!(!bad.is_checked());
        let rep3 = check_length_axioms(&bad, 10, 7);
        assert!(!rep3.passed());
        assert_eq!(rep3.lines[0].axiom, "generator-table");
        assert_eq!(rep3.to_text(), "FAIL axiom=generator-table sample=0\n");

        // The same table refuses strict construction.
        assert!(matches!(
            GroupDef::new(
                ab.clone(),
                1,
                vec![("x".into(), parse_word("a a^-1 b", &ab, 1).unwrap())],
                Vec::new()
            ),
            Err(GroupError::BadGeneratorTable(_))
        ));
    }

    #[test]
    fn hash_is_stable_and_sensitive() {
        let g = free_ab();
        assert_eq!(g.hash_hex(), free_ab().hash_hex());
        assert_eq!(g.hash_hex().len(), 12);
        assert_ne!(g.hash_hex(), stable_group().hash_hex());
    }
}
