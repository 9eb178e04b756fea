//! Tour of the word algebra: finite words over ℤ, infinite words over ℤ²,
//! evaluation, cancellation products, common prefixes, restriction, and
//! cyclic decomposition.

use lambda_words::ordered_group::LambdaElem;
use lambda_words::words::{parse_word, print_word, Alphabet, Word};

fn main() {
    let ab = Alphabet::new(vec!["a", "b"]).unwrap();

    // Rank 1: ordinary finite words with exact cancellation.
    let u = parse_word("a b b^-1 a b", &ab, 1).unwrap();
    println!("parsing keeps the raw blocks: {}", print_word(&u, &ab));
    println!("  reduced flag: {}", u.is_reduced());

    // Free reduction is the cancellation product folded over the letters.
    let mut red = Word::empty(1);
    for &l in u.to_finite().unwrap().letters() {
        red = red.product(&Word::from_letters(1, vec![l])).unwrap();
    }
    println!("  reduced form: {} (length {})", print_word(&red, &ab), red.length());
    assert_eq!(red.length(), &LambdaElem::finite(1, 3));

    let x = parse_word("a b a", &ab, 1).unwrap();
    let y = parse_word("a^-1 b^-1 a", &ab, 1).unwrap();
    let p = x.product(&y).unwrap();
    println!("(a b a) * (a^-1 b^-1 a) = {}", print_word(&p, &ab));
    assert_eq!(p.length(), &LambdaElem::finite(1, 2));

    let (c, gamma) = x.com(&parse_word("a b b", &ab, 1).unwrap()).unwrap();
    println!("com(a b a, a b b) = {} with |com| = {gamma}", print_word(&c, &ab));

    // Rank 2: Λ = ℤ² ordered right-lexicographically, 1 = (1,0), t = (0,1).
    // A tail block is an infinite word of length t: an ω-word followed by a
    // reversed ω-word, with `delta` shifting where the back half is anchored.
    let s = parse_word("tail(front=\"ab\", back=\"ab\")", &ab, 2).unwrap();
    println!("\nstable word s = {}", print_word(&s, &ab));
    println!("  |s| = {}", s.length());

    // Positions are Λ-values in [1, |s|]. The front half lives at (k, 0),
    // the back half at (x, 1).
    for (a, b) in [(1, 0), (2, 0), (3, 0), (0, 1), (-1, 1)] {
        let beta = LambdaElem::new(vec![a.into(), b.into()]).unwrap();
        let letter = s.eval(&beta).unwrap();
        println!("  s({beta}) = {}", ab.fmt_letter(letter));
    }

    // u ∘ s and s share the whole of s: the common prefix has length t.
    let u2 = parse_word("a b", &ab, 2).unwrap();
    let us = u2.concat(&s).unwrap();
    let (_, gamma) = s.com(&us).unwrap();
    println!("|com(s, u s)| = {gamma}");
    assert_eq!(gamma, *s.length());

    // Restriction cuts along any Λ-segment and renormalizes.
    let back_half = s.suffix_from(&LambdaElem::finite(2, 1)).unwrap();
    println!("s restricted past position 1: {}", print_word(&back_half, &ab));

    // Cancellation works across the height gap: s * s doubles the length,
    // while s * s^-1 collapses to the empty word.
    let ss = s.product(&s).unwrap();
    assert_eq!(ss.length(), &s.length().double());
    let trivial = s.product(&s.inverse()).unwrap();
    assert!(trivial.is_empty());
    println!("\n|s * s| = {}   |s * s^-1| = {}", ss.length(), trivial.length());

    // Cyclic decomposition: w = c^-1 ∘ core ∘ c with a cyclically reduced core.
    let w = parse_word("b^-1 a a b", &ab, 1).unwrap();
    let (conj, core) = w.cyclic_decomposition().unwrap().unwrap();
    println!(
        "b^-1 a a b = c^-1 (core) c with c = {} and core = {}",
        print_word(&conj, &ab),
        print_word(&core, &ab)
    );
    assert!(core.is_cyclically_reduced().unwrap());
}
