//! The free group F(a,b) acting on its Cayley tree: points, distances,
//! medians, the action, axes and translation lengths.

use lambda_words::constructions::free_group;
use lambda_words::group_core::evaluate;
use lambda_words::ordered_group::LambdaElem;
use lambda_words::tree::{
    act, based_length, distance, median, on_axis, point_eq, translation_length, TreePoint,
};

fn main() {
    let f = free_group(&["a", "b"]).unwrap();
    let fin = |k: i64| LambdaElem::finite(1, k);

    // A point ⟨α, g⟩ is the place α along the segment from the basepoint ε
    // to g·ε. Different witnesses can name the same point.
    let base = TreePoint::base(1);
    let p = TreePoint::new(fin(1), evaluate(&f, "a b").unwrap()).unwrap();
    let q = TreePoint::new(fin(1), evaluate(&f, "a b^-1 a").unwrap()).unwrap();
    println!("⟨1, ab⟩ and ⟨1, ab⁻¹a⟩ are the same point: {}", point_eq(&p, &q).unwrap());

    let far = TreePoint::new(fin(3), evaluate(&f, "a b^-1 a").unwrap()).unwrap();
    println!("d(ε, ⟨3, ab⁻¹a⟩) = {}", distance(&base, &far).unwrap());
    println!("d(⟨1, ab⟩, ⟨3, ab⁻¹a⟩) = {}", distance(&p, &far).unwrap());

    // The median of three points is where their three segments meet.
    let left = TreePoint::new(fin(2), evaluate(&f, "a b").unwrap()).unwrap();
    let right = TreePoint::new(fin(2), evaluate(&f, "a b^-1").unwrap()).unwrap();
    let m = median(&left, &right, &base).unwrap();
    println!("median(⟨2,ab⟩, ⟨2,ab⁻¹⟩, ε) = {}", m.text());

    // The group acts on the left. Based lengths recover |g|.
    let g = evaluate(&f, "b a^-1").unwrap();
    let moved = act(&g, &base).unwrap();
    println!("\n(b a⁻¹) · ε = {}", moved.text());
    println!("based length of b a⁻¹: {}", based_length(&g).unwrap());

    // Hyperbolic elements translate along an axis; conjugation moves the
    // axis but not the translation length.
    for expr in ["a b", "b^-1 a b", "b a b^-1 a^-1"] {
        let h = evaluate(&f, expr).unwrap();
        println!(
            "ℓ({expr}) = {}   ε on axis: {}",
            translation_length(&h).unwrap(),
            on_axis(&h, &base).unwrap()
        );
    }

    // Points on the axis of a·b are exactly those the element slides along.
    let h = evaluate(&f, "a b").unwrap();
    let on = TreePoint::new(fin(1), evaluate(&f, "a").unwrap()).unwrap();
    let off = TreePoint::new(fin(1), evaluate(&f, "b").unwrap()).unwrap();
    assert!(on_axis(&h, &on).unwrap());
    assert!(!on_axis(&h, &off).unwrap());
    let slid = act(&h, &on).unwrap();
    assert_eq!(distance(&on, &slid).unwrap(), translation_length(&h).unwrap());
    println!("\n(ab) slides ⟨1,a⟩ to {} — exactly ℓ(ab) away", slid.text());
}
