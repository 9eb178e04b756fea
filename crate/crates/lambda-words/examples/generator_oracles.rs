//! Computing with a group through letter- and overlap-oracles alone: the
//! `GeneratorFamily` trait exposes nothing but generator letters (ER1) and
//! overlaps of generator suffixes (ER2), yet suffices for products,
//! inverses, evaluation and the word problem.

use lambda_words::ordered_group::LambdaElem;
use lambda_words::words::{
    parse_word, Alphabet, FreeLetterFamily, OracleWord, WordFamily,
};

fn main() {
    // A free group needs no word representation at all: its oracle answers
    // from the shape of the letters.
    let free = FreeLetterFamily { count: 2 };
    let a = OracleWord::generator(&free, 0, false);
    let b = OracleWord::generator(&free, 1, false);
    let w = a
        .mul(&free, &b)
        .unwrap()
        .mul(&free, &b.inverse(&free))
        .unwrap()
        .mul(&free, &a)
        .unwrap();
    println!("a b b^-1 a has length {} through the oracle", w.length());
    assert_eq!(w.length(), LambdaElem::finite(1, 2));

    // The same machinery over ℤ² with an infinite generator: the oracle for
    // {u, s} is backed by words here, but callers only see ER1/ER2.
    let ab = Alphabet::new(vec!["a", "b"]).unwrap();
    let u = parse_word("a b", &ab, 2).unwrap();
    let s = parse_word("tail(front=\"ab\", back=\"ab\")", &ab, 2).unwrap();
    let fam = WordFamily::new(2, vec![u, s]).unwrap();

    let commutator = OracleWord::evaluate(&fam, &[(1, 1), (0, 1), (1, -1), (0, -1)]).unwrap();
    println!("s u s^-1 u^-1 is trivial: {}", commutator.is_identity());
    assert!(commutator.is_identity());

    let mixed = OracleWord::evaluate(&fam, &[(0, 2), (1, 1), (0, -1)]).unwrap();
    println!("|u^2 s u^-1| = {}", mixed.length());

    // ER1: the oracle evaluates any position of the composite word.
    for (x, h) in [(1i64, 0i64), (4, 0), (2, 1), (1, 1)] {
        let beta = LambdaElem::new(vec![x.into(), h.into()]).unwrap();
        let letter = mixed.eval(&fam, &beta).unwrap();
        println!("  (u^2 s u^-1)({beta}) = {}", ab.fmt_letter(letter));
    }

    // Equality of oracle words is decided through ER2 overlaps, with no
    // normal form in sight: u s and s u agree.
    let us = OracleWord::evaluate(&fam, &[(0, 1), (1, 1)]).unwrap();
    let su = OracleWord::evaluate(&fam, &[(1, 1), (0, 1)]).unwrap();
    println!("u s = s u through the oracle: {}", us.equals(&fam, &su).unwrap());
    assert!(us.equals(&fam, &su).unwrap());

    // The oracle view and the word algebra agree, here checked on a product
    // that cancels deep into a tail.
    let direct = {
        let u = parse_word("a b", &ab, 2).unwrap();
        let s = parse_word("tail(front=\"ab\", back=\"ab\")", &ab, 2).unwrap();
        s.product(&u.inverse()).unwrap()
    };
    let via_oracle = OracleWord::evaluate(&fam, &[(1, 1), (0, -1)]).unwrap();
    assert_eq!(via_oracle.length(), direct.length().clone());
    println!("|s u^-1| = {} both ways", direct.length());
}
