//! Finite spines: the subtree spanned by the basepoint and a set of
//! elements, with branch points made explicit, exported as text and DOT.

use lambda_words::defs::parse_groupdef;
use lambda_words::group_core::evaluate;
use lambda_words::tree::spine;

fn main() {
    let free = parse_groupdef(include_str!("data/free_ab.groupdef")).unwrap();
    let elems: Vec<_> = ["a b a", "a b b", "a^-1 b"]
        .iter()
        .map(|e| evaluate(&free, e).unwrap())
        .collect();
    let sp = spine(&free, &elems).unwrap();
    println!("{}", sp.to_text(&free));

    // The same tree as Graphviz input: `dot -Tsvg` renders it directly.
    println!("{}", sp.to_dot(&free));

    // Spines read off overlaps: aba and abb branch at depth 2, and a⁻¹b
    // hangs off the basepoint on its own side.
    assert_eq!(sp.nodes.len(), 5);
    assert_eq!(sp.edges.len(), 4);

    // With infinite words the branch points sit at infinite depth; edge
    // lengths become Λ-values of height one.
    let stable = parse_groupdef(include_str!("data/hnn_stable_ab.groupdef")).unwrap();
    let elems: Vec<_> = ["s", "u s", "a"]
        .iter()
        .map(|e| evaluate(&stable, e).unwrap())
        .collect();
    let sp = spine(&stable, &elems).unwrap();
    println!("{}", sp.to_text(&stable));
}
