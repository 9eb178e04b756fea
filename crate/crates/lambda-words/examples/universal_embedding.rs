//! Length-preserving embeddings between universal trees: the cyclic group
//! ⟨ab⟩ sits inside F(a,b), which sits inside the stable-letter extension
//! over ℤ². Each inclusion maps tree to tree isometrically and
//! equivariantly.

use lambda_words::constructions::{free_group, hnn_stable};
use lambda_words::group_core::{evaluate, GroupDef, GroupError};
use lambda_words::ordered_group::LambdaElem;
use lambda_words::tree::{act, canonical_embedding, distance, point_eq, Embedding, TreePoint};
use lambda_words::words::{parse_word, Alphabet};

fn main() {
    let free = free_group(&["a", "b"]).unwrap();
    let cyclic = {
        let ab = Alphabet::new(vec!["a", "b"]).unwrap();
        let gens = vec![("g".to_string(), parse_word("a b", &ab, 1).unwrap())];
        GroupDef::new(ab, 1, gens, Vec::new()).unwrap()
    };
    let stable = hnn_stable(&["a", "b"], "ab").unwrap();

    // ⟨g⟩ → F(a,b), g ↦ ab. The tree of ⟨g⟩ is a line; its image is the
    // axis of ab.
    let into_free = Embedding::new(&cyclic, &free, &[("g".into(), "a b".into())]).unwrap();
    // F(a,b) → the ℤ²-tree, letters to letters; lengths are preserved under
    // the canonical inclusion of ℤ into ℤ².
    let into_stable = Embedding::new(
        &free,
        &stable,
        &[("a".into(), "a".into()), ("b".into(), "b".into())],
    )
    .unwrap();

    let p = TreePoint::new(LambdaElem::finite(1, 3), evaluate(&cyclic, "g g").unwrap()).unwrap();
    let q = TreePoint::new(LambdaElem::finite(1, 1), evaluate(&cyclic, "g^-1").unwrap()).unwrap();
    let (pf, qf) = (into_free.apply(&p).unwrap(), into_free.apply(&q).unwrap());
    println!("⟨3, g²⟩ ↦ {}   ⟨1, g⁻¹⟩ ↦ {}", pf.text(), qf.text());
    assert_eq!(distance(&p, &q).unwrap(), distance(&pf, &qf).unwrap());

    // Distances survive the second hop too, now as ℤ²-values.
    let (ps, qs) = (into_stable.apply(&pf).unwrap(), into_stable.apply(&qf).unwrap());
    let d_up = distance(&ps, &qs).unwrap();
    println!("d = {} in F(a,b) and = {} upstairs", distance(&pf, &qf).unwrap(), d_up);

    // Equivariance: mapping then acting equals acting then mapping.
    let h = evaluate(&cyclic, "g^-2").unwrap();
    let lhs = into_free.apply(&act(&h, &p).unwrap()).unwrap();
    let rhs = act(&into_free.apply_elem(&h).unwrap(), &pf).unwrap();
    assert!(point_eq(&lhs, &rhs).unwrap());
    println!("μ(h · p) = ι(h) · μ(p) for h = g⁻²");

    // One-shot form for a single point.
    let image = canonical_embedding(&q, &cyclic, &free, &[("g".into(), "a b".into())]).unwrap();
    assert!(point_eq(&image, &qf).unwrap());

    // Refusals: a map that shortens a generator is not an embedding, and
    // one that only shortens products is caught per element.
    assert!(matches!(
        Embedding::new(&cyclic, &free, &[("g".into(), "a".into())]),
        Err(GroupError::LengthNotPreserved(_))
    ));
    let collapsing = Embedding::new(
        &free,
        &free,
        &[("a".into(), "a".into()), ("b".into(), "a^-1".into())],
    )
    .unwrap();
    let ab = evaluate(&free, "a b").unwrap();
    match collapsing.apply_elem(&ab) {
        Err(GroupError::LengthNotPreserved(msg)) => println!("rejected: {msg}"),
        other => panic!("expected a length failure, got {other:?}"),
    }
}
