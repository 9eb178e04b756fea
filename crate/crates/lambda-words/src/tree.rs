//! The universal Λ-tree of a group of Λ-words: points `⟨α, g⟩` with
//! `0 ≤ α ≤ |g|`, the four-point metric, the free isometric action by
//! `∗`, medians, axes, finite spines, and length-preserving embeddings
//! between trees. Everything is exact Λ-arithmetic; there are no
//! approximate comparisons anywhere.

use crate::group_core::{
    c_value, evaluate_factors, random_elem, GroupDef, GroupElem, GroupError, Report, SuiteRun,
};
use crate::ordered_group::LambdaElem;
use crate::words::{Letter, WordError};
use num_traits::ToPrimitive;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::cmp::Ordering;
use std::fmt::Write as _;

fn lambda_err(e: crate::ordered_group::LambdaError) -> GroupError {
    GroupError::Word(WordError::from(e))
}

fn min3(a: &LambdaElem, b: &LambdaElem, c: &LambdaElem) -> Result<LambdaElem, GroupError> {
    let ab = LambdaElem::min_of(a, b).map_err(lambda_err)?;
    LambdaElem::min_of(&ab, c).map_err(lambda_err)
}

/// A point of the tree: the place `α` along the segment `[ε, g·ε]`. Two
/// pairs name the same point when their parameters agree and do not exceed
/// the overlap of their witnesses; use [`point_eq`], not representative
/// equality.
#[derive(Debug, Clone)]
pub struct TreePoint {
    alpha: LambdaElem,
    elem: GroupElem,
}

impl TreePoint {
    pub fn new(alpha: LambdaElem, elem: GroupElem) -> Result<Self, GroupError> {
        let ord = alpha.compare(elem.length()).map_err(lambda_err)?;
        if alpha.is_negative() || ord == Ordering::Greater {
            return Err(GroupError::InvalidInput(format!(
                "point parameter {alpha} outside [0, {}]",
                elem.length()
            )));
        }
        Ok(TreePoint { alpha, elem })
    }

    /// The basepoint `ε = ⟨0, 1⟩`.
    pub fn base(rank: usize) -> Self {
        TreePoint { alpha: LambdaElem::zero(rank), elem: GroupElem::identity(rank) }
    }

    pub fn alpha(&self) -> &LambdaElem {
        &self.alpha
    }

    pub fn elem(&self) -> &GroupElem {
        &self.elem
    }

    pub fn rank(&self) -> usize {
        self.alpha.rank()
    }

    /// `<alpha>@<expr>`, or `e` for the basepoint.
    pub fn text(&self) -> String {
        if self.alpha.is_zero() {
            "e".to_string()
        } else {
            format!("{}@{}", self.alpha, self.elem.expr_text())
        }
    }
}

/// Whether two pairs name the same point of the tree.
pub fn point_eq(p: &TreePoint, q: &TreePoint) -> Result<bool, GroupError> {
    if p.alpha.compare(&q.alpha).map_err(lambda_err)? != Ordering::Equal {
        return Ok(false);
    }
    if p.alpha.is_zero() {
        return Ok(true);
    }
    let c = c_value(&p.elem, &q.elem)?;
    Ok(p.alpha.compare(&c).map_err(lambda_err)? != Ordering::Greater)
}

/// The tree metric `d(⟨α,f⟩, ⟨β,g⟩) = α + β − 2·min{α, β, c(f,g)}`.
pub fn distance(p: &TreePoint, q: &TreePoint) -> Result<LambdaElem, GroupError> {
    let c = c_value(&p.elem, &q.elem)?;
    let m = min3(&p.alpha, &q.alpha, &c)?;
    Ok(&(&p.alpha + &q.alpha) - &m.double())
}

/// The left action of the group on its tree.
pub fn act(f: &GroupElem, p: &TreePoint) -> Result<TreePoint, GroupError> {
    let c = c_value(&f.inverse(), &p.elem)?;
    let (alpha, elem) = if p.alpha.compare(&c).map_err(lambda_err)? != Ordering::Greater {
        (f.length() - &p.alpha, f.clone())
    } else {
        (&(f.length() + &p.alpha) - &c.double(), f.mul(&p.elem)?)
    };
    TreePoint::new(alpha, elem)
        .map_err(|e| GroupError::Internal(format!("action produced an invalid point: {e}")))
}

/// `d(ε, g·ε)`, which the action is required to base at `|g|`.
pub fn based_length(g: &GroupElem) -> Result<LambdaElem, GroupError> {
    let base = TreePoint::base(g.rank());
    let d = distance(&base, &act(g, &base)?)?;
    if &d != g.length() {
        return Err(GroupError::Internal(format!(
            "based length {d} differs from |g| = {}",
            g.length()
        )));
    }
    Ok(d)
}

/// The median of three points: the deepest of the three pairwise meets with
/// the basepoint.
pub fn median(p: &TreePoint, q: &TreePoint, r: &TreePoint) -> Result<TreePoint, GroupError> {
    let meet = |x: &TreePoint, y: &TreePoint| -> Result<LambdaElem, GroupError> {
        let c = c_value(&x.elem, &y.elem)?;
        min3(&x.alpha, &y.alpha, &c)
    };
    let mut best = (meet(p, q)?, p);
    for (depth, witness) in [(meet(p, r)?, p), (meet(q, r)?, q)] {
        if depth.compare(&best.0).map_err(lambda_err)? == Ordering::Greater {
            best = (depth, witness);
        }
    }
    TreePoint::new(best.0, best.1.elem.clone())
        .map_err(|e| GroupError::Internal(format!("median produced an invalid point: {e}")))
}

/// Whether `p` lies on the axis of `g`: exactly when `p` is the median of
/// `g⁻¹·p`, `p`, `g·p`.
pub fn on_axis(g: &GroupElem, p: &TreePoint) -> Result<bool, GroupError> {
    if g.word().is_empty() {
        return Err(GroupError::AxisUndefined);
    }
    let before = act(&g.inverse(), p)?;
    let after = act(g, p)?;
    let m = median(&before, p, &after)?;
    point_eq(&m, p)
}

/// The translation length `|g²| − |g|`, cross-checked against the core of
/// the cyclic decomposition of `g`.
pub fn translation_length(g: &GroupElem) -> Result<LambdaElem, GroupError> {
    let square = g.word().product(g.word())?;
    let primary = square.length() - g.length();
    match g.word().cyclic_decomposition()? {
        Some((_, core)) if core.length() == &primary => Ok(primary),
        Some((_, core)) => Err(GroupError::Internal(format!(
            "translation length {primary} differs from core length {}",
            core.length()
        ))),
        None => Err(GroupError::Internal(
            "element admits no cyclic decomposition".into(),
        )),
    }
}

/// A node of a spine: a tree point together with its direction label
/// `ξ(g(α))` (absent at the basepoint).
#[derive(Debug, Clone)]
pub struct SpineNode {
    pub point: TreePoint,
    pub label: Option<Letter>,
}

#[derive(Debug, Clone)]
pub struct SpineEdge {
    pub from: usize,
    pub to: usize,
    pub length: LambdaElem,
}

/// The finite subtree spanned by the basepoint and the endpoints
/// `⟨|g|, g⟩` of a list of elements, with branch points made explicit.
#[derive(Debug, Clone)]
pub struct Spine {
    pub nodes: Vec<SpineNode>,
    pub edges: Vec<SpineEdge>,
    group_hash: String,
    rank: usize,
}

pub fn spine(g: &GroupDef, elems: &[GroupElem]) -> Result<Spine, GroupError> {
    if elems.is_empty() {
        return Err(GroupError::InvalidInput("spine requires at least one element".into()));
    }
    let rank = g.rank();
    let mut candidates = vec![TreePoint::base(rank)];
    for e in elems {
        candidates.push(TreePoint::new(e.length().clone(), e.clone())?);
    }
    for (i, a) in elems.iter().enumerate() {
        for b in elems.iter().skip(i + 1) {
            let c = c_value(a, b)?;
            candidates.push(TreePoint::new(c, a.clone())?);
        }
    }

    // Dedupe as points, keeping the shortest expression as the canonical
    // representative of each.
    let mut nodes: Vec<TreePoint> = Vec::new();
    'cand: for cand in candidates {
        for known in nodes.iter_mut() {
            if point_eq(known, &cand)? {
                if shorter_expr(&cand, known) {
                    *known = cand;
                }
                continue 'cand;
            }
        }
        nodes.push(cand);
    }
    nodes.sort_by(|a, b| {
        a.alpha.cmp(&b.alpha).then_with(|| a.elem.expr_text().cmp(&b.elem.expr_text()))
    });

    // After sorting, the basepoint sits at index 0 and every node's parent
    // (its nearest strict ancestor toward the basepoint) precedes it.
    let mut edges = Vec::with_capacity(nodes.len().saturating_sub(1));
    for i in 1..nodes.len() {
        let mut parent: Option<(usize, LambdaElem)> = None;
        for (j, q) in nodes.iter().enumerate() {
            if j == i || q.alpha.compare(&nodes[i].alpha).map_err(lambda_err)? != Ordering::Less {
                continue;
            }
            let c = c_value(&q.elem, &nodes[i].elem)?;
            if q.alpha.compare(&c).map_err(lambda_err)? == Ordering::Greater {
                continue;
            }
            match &parent {
                Some((_, depth)) if q.alpha.compare(depth).map_err(lambda_err)? != Ordering::Greater => {}
                _ => parent = Some((j, q.alpha.clone())),
            }
        }
        let (j, depth) = parent.expect("the basepoint is an ancestor of every node");
        edges.push(SpineEdge { from: j, to: i, length: &nodes[i].alpha - &depth });
    }

    let nodes = nodes
        .into_iter()
        .map(|point| {
            let label = if point.alpha.is_zero() {
                None
            } else {
                Some(point.elem.word().eval(&point.alpha)?)
            };
            Ok(SpineNode { point, label })
        })
        .collect::<Result<Vec<_>, GroupError>>()?;

    Ok(Spine { nodes, edges, group_hash: g.hash_hex(), rank })
}

fn shorter_expr(a: &TreePoint, b: &TreePoint) -> bool {
    let (ta, tb) = (a.elem.expr_text(), b.elem.expr_text());
    (ta.len(), ta) < (tb.len(), tb)
}

impl Spine {
    /// Line-oriented export, stable across runs.
    pub fn to_text(&self, g: &GroupDef) -> String {
        let mut out = String::new();
        writeln!(out, "spine v1").unwrap();
        writeln!(out, "group {} rank {}", self.group_hash, self.rank).unwrap();
        for (i, node) in self.nodes.iter().enumerate() {
            let label = match node.label {
                Some(l) => g.alphabet().fmt_letter(l),
                None => "-".to_string(),
            };
            writeln!(
                out,
                "node {i} alpha={} expr=\"{}\" label={label}",
                node.point.alpha,
                node.point.elem.expr_text()
            )
            .unwrap();
        }
        for e in &self.edges {
            writeln!(out, "edge {} {} length={}", e.from, e.to, e.length).unwrap();
        }
        out
    }

    /// Graphviz export.
    pub fn to_dot(&self, g: &GroupDef) -> String {
        let mut out = String::new();
        writeln!(out, "graph spine {{").unwrap();
        writeln!(out, "  // group {} rank {}", self.group_hash, self.rank).unwrap();
        for (i, node) in self.nodes.iter().enumerate() {
            let mut label = node.point.text();
            if let Some(l) = node.label {
                label = format!("{label} | {}", g.alphabet().fmt_letter(l));
            }
            writeln!(out, "  n{i} [label=\"{label}\"];").unwrap();
        }
        for e in &self.edges {
            writeln!(out, "  n{} -- n{} [label=\"{}\"];", e.from, e.to, e.length).unwrap();
        }
        writeln!(out, "}}").unwrap();
        out
    }
}

/// A generator-wise length-preserving map between two groups' trees. The
/// generator check happens at construction; because preserving lengths on
/// generators does not force it on products, every application re-checks
/// the element it maps.
pub struct Embedding<'a> {
    sub: &'a GroupDef,
    sup: &'a GroupDef,
    map: Vec<(String, Vec<(String, i64)>)>,
}

impl<'a> Embedding<'a> {
    pub fn new(
        sub: &'a GroupDef,
        sup: &'a GroupDef,
        pairs: &[(String, String)],
    ) -> Result<Self, GroupError> {
        if sub.rank() > sup.rank() {
            return Err(GroupError::InvalidInput(format!(
                "cannot embed rank {} into rank {}",
                sub.rank(),
                sup.rank()
            )));
        }
        let mut map = Vec::with_capacity(pairs.len());
        for (name, target_expr) in pairs {
            let source = sub
                .lookup(name)
                .ok_or_else(|| GroupError::UnknownGenerator(name.clone()))?;
            if map.iter().any(|(n, _)| n == name) {
                return Err(GroupError::InvalidInput(format!("duplicate image for {name:?}")));
            }
            let target = crate::group_core::evaluate(sup, target_expr)?;
            let source_len = source.length().pad_to(sup.rank()).map_err(lambda_err)?;
            if target.length() != &source_len {
                return Err(GroupError::LengthNotPreserved(format!(
                    "generator {name:?} has length {} but its image has length {}",
                    source.length(),
                    target.length()
                )));
            }
            map.push((name.clone(), target.expression().to_vec()));
        }
        for (name, _) in sub.generators() {
            if !map.iter().any(|(n, _)| n == name) {
                return Err(GroupError::InvalidInput(format!("no image for generator {name:?}")));
            }
        }
        Ok(Embedding { sub, sup, map })
    }

    /// Map an element by substituting images for generators, then verify
    /// that its length survived.
    pub fn apply_elem(&self, f: &GroupElem) -> Result<GroupElem, GroupError> {
        let mut factors: Vec<(String, i64)> = Vec::new();
        for (name, e) in f.expression() {
            let (_, image) = self
                .map
                .iter()
                .find(|(n, _)| n == name)
                .ok_or_else(|| GroupError::UnknownGenerator(name.clone()))?;
            if *e < 0 {
                for _ in 0..e.unsigned_abs() {
                    factors.extend(image.iter().rev().map(|(n, k)| (n.clone(), -k)));
                }
            } else {
                for _ in 0..*e {
                    factors.extend(image.iter().cloned());
                }
            }
        }
        let h = evaluate_factors(self.sup, &factors)?;
        let expected = f.length().pad_to(self.sup.rank()).map_err(lambda_err)?;
        if h.length() != &expected {
            return Err(GroupError::LengthNotPreserved(format!(
                "element {} has length {} but its image has length {}",
                f.expr_text(),
                f.length(),
                h.length()
            )));
        }
        Ok(h)
    }

    /// The induced map of tree points `⟨α, f⟩ ↦ ⟨α, ι(f)⟩`.
    pub fn apply(&self, p: &TreePoint) -> Result<TreePoint, GroupError> {
        let elem = self.apply_elem(&p.elem)?;
        let alpha = p.alpha.pad_to(self.sup.rank()).map_err(lambda_err)?;
        TreePoint::new(alpha, elem)
    }

    pub fn sub(&self) -> &GroupDef {
        self.sub
    }

    pub fn sup(&self) -> &GroupDef {
        self.sup
    }
}

/// One-shot form of [`Embedding`]: map a single point.
pub fn canonical_embedding(
    p: &TreePoint,
    sub: &GroupDef,
    sup: &GroupDef,
    pairs: &[(String, String)],
) -> Result<TreePoint, GroupError> {
    Embedding::new(sub, sup, pairs)?.apply(p)
}

/// A seeded parameter `0 ≤ α ≤ len`. For a height-one length the sample is
/// drawn from the finite prefix, near a tail boundary, or in the gap
/// between them.
pub fn random_alpha_upto(len: &LambdaElem, rng: &mut ChaCha8Rng) -> LambdaElem {
    let rank = len.rank();
    if len.is_zero() {
        return LambdaElem::zero(rank);
    }
    match len.height() {
        0 => {
            let k = len.coord(0).to_i64().unwrap_or(64).min(64);
            LambdaElem::finite(rank, rng.gen_range(0..=k))
        }
        h => {
            let tails = len.coord(h).to_i64().unwrap_or(1);
            let j = rng.gen_range(0..=tails);
            let x = rng.gen_range(-5i64..=5);
            let x = if j == 0 {
                x.abs()
            } else if j == tails {
                len.coord(0).to_i64().unwrap_or(0) - x.abs()
            } else {
                x
            };
            let mut alpha = LambdaElem::finite(rank, x);
            alpha = &alpha + &LambdaElem::unit(rank, h).scale(&j.into());
            alpha
        }
    }
}

/// A seeded random point `⟨α, g⟩` of the tree.
pub fn random_point(
    g: &GroupDef,
    rng: &mut ChaCha8Rng,
    max_factors: usize,
) -> Result<TreePoint, GroupError> {
    let elem = random_elem(g, rng, max_factors)?;
    let alpha = random_alpha_upto(elem.length(), rng);
    TreePoint::new(alpha, elem)
}

/// Randomized suite for the metric axioms, plus well-definedness of the
/// metric under deliberate representative swaps.
pub fn metric_suite(g: &GroupDef, samples: usize, seed: u64) -> Report {
    if g.validate_table().is_err() {
        return SuiteRun::table_failure("metric");
    }
    let mut run = SuiteRun::new("metric");
    run.check("generator-table", 0, true);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let zero = LambdaElem::zero(g.rank());
    for k in 0..samples {
        let sampled = (|| -> Result<_, GroupError> {
            let p = random_point(g, &mut rng, 4)?;
            let q = random_point(g, &mut rng, 4)?;
            let r = random_point(g, &mut rng, 4)?;
            Ok((p, q, r))
        })();
        let (p, q, r) = match sampled {
            Ok(t) => t,
            Err(_) => {
                run.check("M1", k, false);
                continue;
            }
        };
        let checks = (|| -> Result<[bool; 5], GroupError> {
            let dpq = distance(&p, &q)?;
            let m1 = !dpq.is_negative();
            let m2 = (dpq == zero) == point_eq(&p, &q)? && distance(&p, &p)?.is_zero();
            let m3 = dpq == distance(&q, &p)?;
            let m4 = dpq <= &distance(&p, &r)? + &distance(&q, &r)?;

            // A representative swap: the same point carried by two
            // different group elements.
            let f = random_elem(g, &mut rng, 4)?;
            let h = random_elem(g, &mut rng, 4)?;
            let alpha = random_alpha_upto(&c_value(&f, &h)?, &mut rng);
            let p1 = TreePoint::new(alpha.clone(), f)?;
            let p2 = TreePoint::new(alpha, h)?;
            let wd = point_eq(&p1, &p2)? && distance(&p1, &r)? == distance(&p2, &r)?;
            Ok([m1, m2, m3, m4, wd])
        })();
        let [m1, m2, m3, m4, wd] = checks.unwrap_or([false; 5]);
        run.check("M1", k, m1);
        run.check("M2", k, m2);
        run.check("M3", k, m3);
        run.check("M4", k, m4);
        run.check("well-defined", k, wd);
    }
    run.finish()
}

/// Randomized suite for 0-hyperbolicity: the three pairwise meet depths of
/// any triple form an isosceles triple (the two smallest agree), and the
/// median realizes all three gates.
pub fn hyperbolicity_suite(g: &GroupDef, samples: usize, seed: u64) -> Report {
    if g.validate_table().is_err() {
        return SuiteRun::table_failure("hyperbolicity");
    }
    let mut run = SuiteRun::new("hyperbolicity");
    run.check("generator-table", 0, true);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..samples {
        let checks = (|| -> Result<[bool; 2], GroupError> {
            let p = random_point(g, &mut rng, 4)?;
            let q = random_point(g, &mut rng, 4)?;
            let r = random_point(g, &mut rng, 4)?;
            let meet = |x: &TreePoint, y: &TreePoint| -> Result<LambdaElem, GroupError> {
                let c = c_value(x.elem(), y.elem())?;
                min3(x.alpha(), y.alpha(), &c)
            };
            let mut depths = [meet(&p, &q)?, meet(&p, &r)?, meet(&q, &r)?];
            depths.sort();
            let iso = depths[0] == depths[1];

            let m = median(&p, &q, &r)?;
            let two_way = |x: &TreePoint, y: &TreePoint| -> Result<bool, GroupError> {
                Ok(&distance(x, &m)? + &distance(&m, y)? == distance(x, y)?)
            };
            let med = two_way(&p, &q)? && two_way(&p, &r)? && two_way(&q, &r)?;
            Ok([iso, med])
        })();
        let [iso, med] = checks.unwrap_or([false; 2]);
        run.check("isosceles", k, iso);
        run.check("median", k, med);
    }
    run.finish()
}

/// Randomized suite for the action: isometry, compatibility with the group
/// product, freeness, and the based length function.
pub fn action_suite(g: &GroupDef, samples: usize, seed: u64) -> Report {
    if g.validate_table().is_err() {
        return SuiteRun::table_failure("action");
    }
    let mut run = SuiteRun::new("action");
    run.check("generator-table", 0, true);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..samples {
        let checks = (|| -> Result<[bool; 4], GroupError> {
            let f = random_elem(g, &mut rng, 4)?;
            let h = random_elem(g, &mut rng, 4)?;
            let p = random_point(g, &mut rng, 4)?;
            let q = random_point(g, &mut rng, 4)?;

            let iso = distance(&act(&f, &p)?, &act(&f, &q)?)? == distance(&p, &q)?;
            let comp = point_eq(&act(&f, &act(&h, &p)?)?, &act(&f.mul(&h)?, &p)?)?;
            let free = f.word().is_empty() || !point_eq(&act(&f, &p)?, &p)?;
            let based = based_length(&f)? == *f.length();
            Ok([iso, comp, free, based])
        })();
        let [iso, comp, free, based] = checks.unwrap_or([false; 4]);
        run.check("isometry", k, iso);
        run.check("composition", k, comp);
        run.check("freeness", k, free);
        run.check("based-length", k, based);
    }
    run.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{free_group, hnn_stable};
    use crate::group_core::evaluate;

    fn fab() -> GroupDef {
        free_group(&["a", "b"]).unwrap()
    }

    fn point(g: &GroupDef, alpha: i64, expr: &str) -> TreePoint {
        let elem = evaluate(g, expr).unwrap();
        TreePoint::new(LambdaElem::finite(g.rank(), alpha), elem).unwrap()
    }

    #[test]
    fn points_and_equality() {
        let f = fab();
        assert!(point_eq(&point(&f, 1, "a b"), &point(&f, 1, "a b^-1")).unwrap());
        assert!(!point_eq(&point(&f, 2, "a b"), &point(&f, 2, "a b^-1")).unwrap());
        assert!(point_eq(&point(&f, 0, "a b"), &TreePoint::base(1)).unwrap());
        let long = evaluate(&f, "a b").unwrap();
        assert!(TreePoint::new(LambdaElem::finite(1, 3), long).is_err());
    }

    #[test]
    fn distances() {
        let f = fab();
        let d = distance(&point(&f, 2, "a b"), &point(&f, 2, "a b^-1")).unwrap();
        assert_eq!(d, LambdaElem::finite(1, 2));
        let d = distance(&TreePoint::base(1), &point(&f, 2, "a b")).unwrap();
        assert_eq!(d, LambdaElem::finite(1, 2));
        let d = distance(&point(&f, 1, "a"), &point(&f, 1, "b")).unwrap();
        assert_eq!(d, LambdaElem::finite(1, 2));
    }

    #[test]
    fn action_cases() {
        let f = fab();
        let a = evaluate(&f, "a").unwrap();
        // Overlapping case: a · ⟨1, a⁻¹⟩ = ε.
        let moved = act(&a, &point(&f, 1, "a^-1")).unwrap();
        assert!(point_eq(&moved, &TreePoint::base(1)).unwrap());
        // Disjoint case: b⁻¹ · ⟨1, a⟩ = ⟨2, b⁻¹a⟩.
        let binv = evaluate(&f, "b^-1").unwrap();
        let moved = act(&binv, &point(&f, 1, "a")).unwrap();
        assert!(point_eq(&moved, &point(&f, 2, "b^-1 a")).unwrap());
        assert_eq!(moved.text(), "2@b^-1 a");
        assert_eq!(based_length(&evaluate(&f, "a b a").unwrap()).unwrap(), LambdaElem::finite(1, 3));
    }

    #[test]
    fn medians_and_axes() {
        let f = fab();
        let m = median(&point(&f, 2, "a b"), &point(&f, 2, "a b^-1"), &TreePoint::base(1)).unwrap();
        assert!(point_eq(&m, &point(&f, 1, "a")).unwrap());
        let p = point(&f, 1, "b");
        let m2 = median(&p, &p, &point(&f, 2, "a b")).unwrap();
        assert!(point_eq(&m2, &p).unwrap());

        let g = evaluate(&f, "a b").unwrap();
        assert!(on_axis(&g, &TreePoint::base(1)).unwrap());
        assert!(on_axis(&g, &point(&f, 1, "a")).unwrap());
        assert!(!on_axis(&g, &point(&f, 1, "b")).unwrap());
        assert!(matches!(
            on_axis(&evaluate(&f, "e").unwrap(), &TreePoint::base(1)),
            Err(GroupError::AxisUndefined)
        ));
    }

    #[test]
    fn translation_lengths() {
        let f = fab();
        let tl = |e: &str| translation_length(&evaluate(&f, e).unwrap()).unwrap();
        assert_eq!(tl("a b"), LambdaElem::finite(1, 2));
        assert_eq!(tl("b^-1 a b"), LambdaElem::finite(1, 1));
        assert_eq!(tl("b a b^-1 a^-1"), LambdaElem::finite(1, 4));
        assert_eq!(tl("e"), LambdaElem::finite(1, 0));

        let g = hnn_stable(&["a", "b"], "ab").unwrap();
        assert_eq!(translation_length(&evaluate(&g, "s").unwrap()).unwrap(), LambdaElem::unit(2, 1));
        assert_eq!(
            translation_length(&evaluate(&g, "a s a^-1").unwrap()).unwrap(),
            LambdaElem::unit(2, 1)
        );
    }

    #[test]
    fn spine_shapes() {
        let f3 = free_group(&["a", "b", "c"]).unwrap();
        let elems = vec![evaluate(&f3, "a b").unwrap(), evaluate(&f3, "a c").unwrap()];
        let sp = spine(&f3, &elems).unwrap();
        assert_eq!(sp.nodes.len(), 4);
        assert_eq!(sp.edges.len(), 3);
        assert!(sp.edges.iter().all(|e| e.length == LambdaElem::finite(1, 1)));

        let f = fab();
        let sp = spine(&f, &[evaluate(&f, "a").unwrap()]).unwrap();
        assert_eq!((sp.nodes.len(), sp.edges.len()), (2, 1));

        let text = sp.to_text(&f);
        assert!(text.starts_with("spine v1\n"));
        assert!(text.contains("node 0 alpha=0 expr=\"e\" label=-"));
        assert!(text.contains("node 1 alpha=1 expr=\"a\" label=a"));
        assert!(text.contains("edge 0 1 length=1"));
        let dot = sp.to_dot(&f);
        assert!(dot.starts_with("graph spine {"));
        assert!(dot.contains("n0 -- n1"));
    }

    #[test]
    fn spine_of_radius_two_ball() {
        // Every reduced expression of length ≤ 2 over {a,b}: 17 points,
        // and every prefix is itself an endpoint, so no extra nodes.
        let f = fab();
        let mut elems = vec![evaluate(&f, "e").unwrap()];
        let letters = ["a", "a^-1", "b", "b^-1"];
        for x in letters {
            elems.push(evaluate(&f, x).unwrap());
            for y in letters {
                let two = evaluate(&f, &format!("{x} {y}")).unwrap();
                if two.length() == &LambdaElem::finite(1, 2) {
                    elems.push(two);
                }
            }
        }
        assert_eq!(elems.len(), 17);
        let sp = spine(&f, &elems).unwrap();
        assert_eq!(sp.nodes.len(), 17);
        assert_eq!(sp.edges.len(), 16);
        assert!(sp.edges.iter().all(|e| e.length == LambdaElem::finite(1, 1)));
    }

    #[test]
    fn spine_with_tails() {
        let g = hnn_stable(&["a", "b"], "ab").unwrap();
        let elems = vec![evaluate(&g, "s").unwrap(), evaluate(&g, "u s").unwrap()];
        let sp = spine(&g, &elems).unwrap();
        // ε, the shared branch point at ⟨t, s⟩, and the endpoint ⟨t+2, us⟩.
        assert_eq!(sp.nodes.len(), 3);
        assert_eq!(sp.edges.len(), 2);
        let text = sp.to_text(&g);
        assert!(text.contains("alpha=(0,1)"), "{text}");
    }

    #[test]
    fn embeddings() {
        let f = fab();
        let sub_def = {
            use crate::words::{parse_word, Alphabet};
            let ab = Alphabet::new(vec!["a", "b"]).unwrap();
            let gens = vec![("g".into(), parse_word("a b", &ab, 1).unwrap())];
            GroupDef::new(ab, 1, gens, Vec::new()).unwrap()
        };
        let pairs = vec![("g".to_string(), "a b".to_string())];
        let emb = Embedding::new(&sub_def, &f, &pairs).unwrap();
        let p = TreePoint::new(
            LambdaElem::finite(1, 1),
            evaluate(&sub_def, "g").unwrap(),
        )
        .unwrap();
        let image = emb.apply(&p).unwrap();
        assert!(point_eq(&image, &point(&f, 1, "a b")).unwrap());

        // Length must be preserved on generators...
        let bad = vec![("g".to_string(), "a".to_string())];
        assert!(matches!(
            Embedding::new(&sub_def, &f, &bad),
            Err(GroupError::LengthNotPreserved(_))
        ));
        // ...and on every element, which generator checks alone miss.
        let xy = {
            use crate::words::{parse_word, Alphabet};
            let ab = Alphabet::new(vec!["x", "y"]).unwrap();
            let gens = vec![
                ("x".into(), parse_word("x", &ab, 1).unwrap()),
                ("y".into(), parse_word("y", &ab, 1).unwrap()),
            ];
            GroupDef::new(ab, 1, gens, Vec::new()).unwrap()
        };
        let collapsing = vec![
            ("x".to_string(), "a".to_string()),
            ("y".to_string(), "a^-1".to_string()),
        ];
        let emb2 = Embedding::new(&xy, &f, &collapsing).unwrap();
        let xy_elem = evaluate(&xy, "x y").unwrap();
        assert!(matches!(
            emb2.apply_elem(&xy_elem),
            Err(GroupError::LengthNotPreserved(_))
        ));
    }

    #[test]
    fn suites_pass() {
        let f = fab();
        for rep in [
            metric_suite(&f, 60, 11),
            hyperbolicity_suite(&f, 60, 11),
            action_suite(&f, 60, 11),
        ] {
            assert!(rep.passed(), "{}", rep.to_text());
        }
        let g = hnn_stable(&["a", "b"], "ab").unwrap();
        for rep in [
            metric_suite(&g, 40, 11),
            hyperbolicity_suite(&g, 40, 11),
            action_suite(&g, 40, 11),
        ] {
            assert!(rep.passed(), "{}", rep.to_text());
        }
    }

    #[test]
    fn suites_reject_corrupt_tables() {
        use crate::words::{parse_word, Alphabet};
        let ab = Alphabet::new(vec!["a", "b"]).unwrap();
        let bad = GroupDef::new_unchecked(
            ab.clone(),
            1,
            vec![("x".into(), parse_word("a a^-1 b", &ab, 1).unwrap())],
            Vec::new(),
        )
        .unwrap();
        for rep in [
            metric_suite(&bad, 10, 1),
            hyperbolicity_suite(&bad, 10, 1),
            action_suite(&bad, 10, 1),
        ] {
            assert!(!rep.passed());
            assert_eq!(rep.to_text(), "FAIL axiom=generator-table sample=0\n");
        }
    }
}
