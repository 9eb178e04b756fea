//! The extension of F(a,b) by a letter conjugating u = ab to v = ba: s is
//! the infinite word whose front half runs along the u-line and whose back
//! half runs along the v-line, so u ∘ s = s ∘ v.

use lambda_words::constructions::hnn_conjugate;
use lambda_words::group_core::{evaluate, is_identity};
use lambda_words::ordered_group::LambdaElem;
use lambda_words::words::print_word;

fn main() {
    let g = hnn_conjugate(&["a", "b"], "ab", "ba").unwrap();
    let s = evaluate(&g, "s").unwrap();
    println!("s = {}", print_word(s.word(), g.alphabet()));

    // The two sides of the defining relation are the same infinite word.
    let us = evaluate(&g, "u s").unwrap();
    let sv = evaluate(&g, "s v").unwrap();
    assert_eq!(us, sv);
    for k in 1..=25i64 {
        for beta in [
            LambdaElem::new(vec![k.into(), 0.into()]).unwrap(),
            LambdaElem::new(vec![(1 - k).into(), 1.into()]).unwrap(),
        ] {
            assert_eq!(us.word().eval(&beta).unwrap(), sv.word().eval(&beta).unwrap());
        }
    }
    println!("u s = s v, checked letter by letter on both halves");

    println!("s^-1 u s v^-1 = 1: {}", is_identity(&evaluate(&g, "s^-1 u s v^-1").unwrap()));

    // s does not commute with u here; conjugation genuinely rewrites.
    println!("s u s^-1 u^-1 = 1: {}", is_identity(&evaluate(&g, "s u s^-1 u^-1").unwrap()));

    // Conjugating longer words: s^-1 u^k s = v^k for every k.
    for k in 1..=4 {
        let rel = format!("s^-1 u^{k} s v^-{k}");
        assert!(is_identity(&evaluate(&g, &rel).unwrap()));
    }
    println!("s^-1 u^k s = v^k for k = 1..4");

    // Elements have a normal form g₁ s^δ₁ g₂ s^δ₂ ... ; the total number of
    // stable-letter steps shows up as the top coordinate of the length.
    for expr in ["a s b s", "s a s^-1", "b s^-2 a"] {
        let w = evaluate(&g, expr).unwrap();
        println!("|{expr}| = {}", w.length());
    }

    // A mismatched pair is rejected before anything is built.
    assert!(hnn_conjugate(&["a", "b"], "ab", "a").is_err());
    assert!(hnn_conjugate(&["a", "b"], "abab", "baba").is_err());
}
