//! Brute-force reference implementations on finite words.
//!
//! Everything here is deliberately naive and shares no algorithmic code with
//! the word engine: stack-based free reduction, the full prefix tree of a
//! finite word set, breadth-first graph distances, and exhaustive enumeration
//! of short products. Differential tests hold the engine to these.

use crate::words::Letter;
use std::collections::VecDeque;

/// Stack-based free reduction of a letter sequence.
pub fn naive_reduce(letters: &[Letter]) -> Vec<Letter> {
    let mut stack: Vec<Letter> = Vec::new();
    for &l in letters {
        if stack.last() == Some(&l.inverse()) {
            stack.pop();
        } else {
            stack.push(l);
        }
    }
    stack
}

/// The prefix tree of a finite set of finite words: one node per distinct
/// prefix (including the empty prefix at index 0), one edge per letter step.
pub struct PrefixGraph {
    pub nodes: Vec<Vec<Letter>>,
    pub adjacency: Vec<Vec<usize>>,
}

impl PrefixGraph {
    pub fn node_id(&self, prefix: &[Letter]) -> Option<usize> {
        self.nodes.iter().position(|n| n == prefix)
    }
}

pub fn prefix_tree(elems: &[Vec<Letter>]) -> PrefixGraph {
    let mut nodes: Vec<Vec<Letter>> = vec![Vec::new()];
    for w in elems {
        for i in 1..=w.len() {
            let p = w[..i].to_vec();
            if !nodes.contains(&p) {
                nodes.push(p);
            }
        }
    }
    let mut adjacency = vec![Vec::new(); nodes.len()];
    for (i, n) in nodes.iter().enumerate() {
        for (j, m) in nodes.iter().enumerate() {
            if m.len() == n.len() + 1 && m[..n.len()] == n[..] {
                adjacency[i].push(j);
                adjacency[j].push(i);
            }
        }
    }
    PrefixGraph { nodes, adjacency }
}

/// Breadth-first distance between two nodes of a [`PrefixGraph`].
pub fn brute_distance(graph: &PrefixGraph, p: usize, q: usize) -> usize {
    let mut seen = vec![usize::MAX; graph.nodes.len()];
    seen[p] = 0;
    let mut queue = VecDeque::from([p]);
    while let Some(n) = queue.pop_front() {
        if n == q {
            return seen[n];
        }
        for &m in &graph.adjacency[n] {
            if seen[m] == usize::MAX {
                seen[m] = seen[n] + 1;
                queue.push_back(m);
            }
        }
    }
    unreachable!("prefix trees are connected");
}

/// All freely reduced values of products `g_{i1}^{e1} ⋯ g_{ik}^{ek}` with
/// `k ≤ bound`, by exhaustive enumeration over the given generator words.
pub fn enumerate_reduced_products(gens: &[Vec<Letter>], bound: usize) -> Vec<Vec<Letter>> {
    let mut inv_gens: Vec<Vec<Letter>> = gens
        .iter()
        .map(|g| g.iter().rev().map(|l| l.inverse()).collect())
        .collect();
    let mut steps: Vec<Vec<Letter>> = gens.to_vec();
    steps.append(&mut inv_gens);
    let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
    let mut all: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..bound {
        let mut next = Vec::new();
        for w in &layer {
            for s in &steps {
                let mut cat = w.clone();
                cat.extend_from_slice(s);
                let red = naive_reduce(&cat);
                if !all.contains(&red) {
                    all.push(red.clone());
                }
                next.push(red);
            }
        }
        layer = next;
    }
    all
}
