//! The extension of F(a,b) by a stable letter commuting with u = ab,
//! realized inside the words over ℤ²: s is the infinite word with both
//! halves asymptotic to the u-line, |s| = t = (0,1).

use lambda_words::constructions::hnn_stable;
use lambda_words::group_core::{c_value, evaluate, is_identity, minimality_witness};
use lambda_words::ordered_group::LambdaElem;
use lambda_words::tree::{act, translation_length, TreePoint};
use lambda_words::words::print_word;

fn main() {
    let g = hnn_stable(&["a", "b"], "ab").unwrap();
    let s = evaluate(&g, "s").unwrap();
    println!("s = {}", print_word(s.word(), g.alphabet()));
    println!("|s| = {} = t", s.length());

    // The defining relation, decided by exact cancellation.
    println!("s u s^-1 u^-1 = 1: {}", is_identity(&evaluate(&g, "s u s^-1 u^-1").unwrap()));
    println!("s a s^-1 a^-1 = 1: {}", is_identity(&evaluate(&g, "s a s^-1 a^-1").unwrap()));

    // u s and s u are literally the same infinite word, letter for letter.
    let us = evaluate(&g, "u s").unwrap();
    let su = evaluate(&g, "s u").unwrap();
    assert_eq!(us, su);
    let mut sampled = 0;
    for k in 1..=50i64 {
        for beta in [
            LambdaElem::new(vec![k.into(), 0.into()]).unwrap(),
            LambdaElem::new(vec![(1 - k).into(), 1.into()]).unwrap(),
        ] {
            assert_eq!(us.word().eval(&beta).unwrap(), su.word().eval(&beta).unwrap());
            sampled += 1;
        }
    }
    println!("u s and s u agree at {sampled} sampled positions across both tails");

    // Powers of s stack tails: |s^3| = (0,3).
    let s3 = evaluate(&g, "s^3").unwrap();
    println!("\n|s^3| = {}", s3.length());

    // Overlaps can be infinite: c(s, u s) = t, far above any finite word.
    println!("c(s, u s) = {}", c_value(&s, &us).unwrap());
    println!("c(s, a)  = {}", c_value(&s, &evaluate(&g, "a").unwrap()).unwrap());

    // The tree over ℤ² is a ℤ-tree of ℤ-trees; s translates the base copy.
    let base = TreePoint::base(2);
    println!("\ns · ε = {}", act(&s, &base).unwrap().text());
    println!("ℓ(s) = {}", translation_length(&s).unwrap());
    println!("ℓ(a s) = {}", translation_length(&evaluate(&g, "a s").unwrap()).unwrap());

    // The letter a is already cyclically reduced, so the action is minimal.
    let witness = minimality_witness(&g, 1).unwrap().unwrap();
    println!("minimality witness at bound 1: {}", witness.expr_text());
}
