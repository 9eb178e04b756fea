//! The randomized checking suites: length-function axioms, metric axioms,
//! 0-hyperbolicity and the action laws, all with exact arithmetic and a
//! fixed seed. A deliberately corrupted generator table is the negative
//! control: every suite refuses it at the door.

use lambda_words::constructions::{free_group, hnn_conjugate};
use lambda_words::defs::parse_groupdef;
use lambda_words::group_core::check_length_axioms;
use lambda_words::tree::{action_suite, hyperbolicity_suite, metric_suite};

fn main() {
    let seed = 20260814;
    let free = free_group(&["a", "b"]).unwrap();
    let conj = hnn_conjugate(&["a", "b"], "ab", "ba").unwrap();

    for (name, g) in [("F(a,b)", &free), ("⟨F(a,b), s | u^s = v⟩", &conj)] {
        println!("== {name} ==");
        for rep in [
            check_length_axioms(g, 300, seed),
            metric_suite(g, 300, seed),
            hyperbolicity_suite(g, 300, seed),
            action_suite(g, 300, seed),
        ] {
            print!("suite {}\n{}", rep.suite, rep.to_text());
            assert!(rep.passed());
        }
        println!();
    }

    // The corrupted table: one generator is not even reduced. The suites
    // report it as the violation instead of sampling garbage.
    let bad = parse_groupdef(include_str!("data/corrupted.groupdef")).unwrap();
    let rep = check_length_axioms(&bad, 100, seed);
    print!("corrupted table:\n{}", rep.to_text());
    assert!(!rep.passed());
}
