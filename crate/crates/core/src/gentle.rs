//! Validated gentle presentations `KQ/I` and their path bases.

use crate::error::QuiverError;
use crate::field::Field;
use crate::quiver::{Path, Quiver};
use crate::sparse::SparseVector;
use std::collections::{HashMap, HashSet};

/// A relation `[first, second]`: the length-2 path `second·first`.
pub type Relation = (usize, usize);

/// A quiver with length-2 zero relations satisfying the gentle conditions,
/// together with its (finite) path basis and maximal paths.
#[derive(Clone, Debug)]
pub struct GentlePresentation {
    quiver: Quiver,
    relations: Vec<Relation>,
    relation_set: HashSet<Relation>,
    basis: Vec<Path>,
    basis_index: HashMap<Path, usize>,
    maximal: Vec<Path>,
}

impl PartialEq for GentlePresentation {
    fn eq(&self, other: &Self) -> bool {
        self.quiver == other.quiver && self.relations == other.relations
    }
}

impl Eq for GentlePresentation {}

/// Validates relations given by arrow names.
pub fn validate_named<S: AsRef<str>>(
    quiver: Quiver,
    relations: &[(S, S)],
) -> Result<GentlePresentation, QuiverError> {
    let mut rel = Vec::new();
    for (first, second) in relations {
        let lookup = |n: &S| {
            quiver
                .arrow_index(n.as_ref())
                .ok_or_else(|| QuiverError::UnknownArrow(n.as_ref().to_string()))
        };
        rel.push((lookup(first)?, lookup(second)?));
    }
    validate_gentle(quiver, &rel)
}

/// Checks the gentle conditions and builds the path basis.
pub fn validate_gentle(quiver: Quiver, relations: &[Relation]) -> Result<GentlePresentation, QuiverError> {
    if quiver.vertex_count() == 0 {
        return Err(QuiverError::EmptyQuiver);
    }
    let name = |a: usize| quiver.arrow(a).name.clone();
    let mut relation_set = HashSet::new();
    for &(first, second) in relations {
        if first >= quiver.arrow_count() {
            return Err(QuiverError::UnknownArrow(format!("#{first}")));
        }
        if second >= quiver.arrow_count() {
            return Err(QuiverError::UnknownArrow(format!("#{second}")));
        }
        if quiver.arrow(first).target != quiver.arrow(second).source {
            return Err(QuiverError::NonComposableRelation { first: name(first), second: name(second) });
        }
        if !relation_set.insert((first, second)) {
            return Err(QuiverError::DuplicateRelation { first: name(first), second: name(second) });
        }
    }
    if !quiver.is_connected() {
        return Err(QuiverError::DisconnectedQuiver);
    }
    for v in 0..quiver.vertex_count() {
        let incoming = quiver.arrows_into(v).count();
        let outgoing = quiver.arrows_from(v).count();
        if incoming > 2 || outgoing > 2 {
            return Err(QuiverError::TooManyArrowsAtVertex {
                vertex: quiver.vertex_name(v).to_string(),
                incoming,
                outgoing,
            });
        }
    }
    for a in 0..quiver.arrow_count() {
        let after: Vec<usize> = quiver.arrows_from(quiver.arrow(a).target).collect();
        let before: Vec<usize> = quiver.arrows_into(quiver.arrow(a).source).collect();
        let checks = [
            (after.iter().filter(|&&b| !relation_set.contains(&(a, b))).count(), "more than one arrow continues it without a relation"),
            (after.iter().filter(|&&b| relation_set.contains(&(a, b))).count(), "more than one relation starts with it"),
            (before.iter().filter(|&&c| !relation_set.contains(&(c, a))).count(), "more than one arrow precedes it without a relation"),
            (before.iter().filter(|&&c| relation_set.contains(&(c, a))).count(), "more than one relation ends with it"),
        ];
        for (count, detail) in checks {
            if count > 1 {
                return Err(QuiverError::AmbiguousContinuation { arrow: name(a), detail: detail.to_string() });
            }
        }
    }
    if let Some(cycle) = relation_free_cycle(&quiver, &relation_set) {
        let p = Path::from_parts(quiver.arrow(cycle[0]).source, quiver.arrow(cycle[0]).source, cycle);
        return Err(QuiverError::InfinitePathBasis { cycle: quiver.render(&p) });
    }

    let mut relations: Vec<Relation> = relations.to_vec();
    relations.sort_by_key(|x| [x.0, x.1]);
    let basis = enumerate_basis(&quiver, &relation_set);
    let basis_index = basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let mut g = GentlePresentation {
        quiver,
        relations,
        relation_set,
        basis,
        basis_index,
        maximal: Vec::new(),
    };
    g.maximal = g
        .basis
        .iter()
        .filter(|p| g.right_extensions(p).is_empty() && g.left_extensions(p).is_empty())
        .cloned()
        .collect();
    Ok(g)
}

/// Arrow sequence of an oriented cycle avoiding all relations, if any.
fn relation_free_cycle(q: &Quiver, rel: &HashSet<Relation>) -> Option<Vec<usize>> {
    let n = q.arrow_count();
    let succ = |a: usize| q.arrows_from(q.arrow(a).target).filter(move |&b| !rel.contains(&(a, b)));
    // 0 = unvisited, 1 = on stack, 2 = done
    let mut state = vec![0u8; n];
    let mut stack_path: Vec<usize> = Vec::new();
    fn visit(
        a: usize,
        state: &mut [u8],
        path: &mut Vec<usize>,
        succ: &dyn Fn(usize) -> Vec<usize>,
    ) -> Option<Vec<usize>> {
        state[a] = 1;
        path.push(a);
        for b in succ(a) {
            if state[b] == 1 {
                let start = path.iter().position(|&x| x == b).unwrap();
                return Some(path[start..].to_vec());
            }
            if state[b] == 0 {
                if let Some(c) = visit(b, state, path, succ) {
                    return Some(c);
                }
            }
        }
        path.pop();
        state[a] = 2;
        None
    }
    let succ_vec = |a: usize| succ(a).collect::<Vec<_>>();
    for a in 0..n {
        if state[a] == 0 {
            if let Some(c) = visit(a, &mut state, &mut stack_path, &succ_vec) {
                return Some(c);
            }
        }
    }
    None
}

fn enumerate_basis(q: &Quiver, rel: &HashSet<Relation>) -> Vec<Path> {
    let mut out: Vec<Path> = (0..q.vertex_count()).map(Path::vertex).collect();
    let mut frontier: Vec<Path> = (0..q.arrow_count()).map(|a| q.arrow_path(a)).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for p in &frontier {
            let last = p.last().unwrap();
            for b in q.arrows_from(p.target()) {
                if !rel.contains(&(last, b)) {
                    next.push(p.then(&q.arrow_path(b)).unwrap());
                }
            }
        }
        out.append(&mut frontier);
        frontier = next;
    }
    out.sort();
    out
}

impl GentlePresentation {
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    /// Relations `[first, second]` in canonical order.
    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn is_relation(&self, first: usize, second: usize) -> bool {
        self.relation_set.contains(&(first, second))
    }

    /// Relations as length-2 paths.
    pub fn relation_paths(&self) -> Vec<Path> {
        self.relations.iter().map(|&(a, b)| self.quiver.path(&[a, b]).unwrap()).collect()
    }

    pub fn vertex_paths(&self) -> Vec<Path> {
        (0..self.quiver.vertex_count()).map(Path::vertex).collect()
    }

    pub fn arrow_paths(&self) -> Vec<Path> {
        (0..self.quiver.arrow_count()).map(|a| self.quiver.arrow_path(a)).collect()
    }

    /// The path basis `B`, sorted canonically.
    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn basis_position(&self, p: &Path) -> Option<usize> {
        self.basis_index.get(p).copied()
    }

    /// Maximal paths `M`: basis paths admitting no extension on either side.
    pub fn maximal_paths(&self) -> &[Path] {
        &self.maximal
    }

    /// Whether a composable word avoids every relation.
    pub fn in_basis(&self, p: &Path) -> bool {
        p.arrows().windows(2).all(|w| !self.relation_set.contains(&(w[0], w[1])))
    }

    /// `after ∘ before` in `A`, if it is a nonzero basis path.
    pub fn product(&self, before: &Path, after: &Path) -> Option<Path> {
        if before.target() != after.source() {
            return None;
        }
        if let (Some(x), Some(y)) = (before.last(), after.first()) {
            if self.relation_set.contains(&(x, y)) {
                return None;
            }
        }
        before.then(after)
    }

    /// Arrows `b` with `b·p` a basis path.
    pub fn right_extensions(&self, p: &Path) -> Vec<usize> {
        self.quiver
            .arrows_from(p.target())
            .filter(|&b| p.last().is_none_or(|x| !self.relation_set.contains(&(x, b))))
            .collect()
    }

    /// Arrows `c` with `p·c` a basis path.
    pub fn left_extensions(&self, p: &Path) -> Vec<usize> {
        self.quiver
            .arrows_into(p.source())
            .filter(|&c| p.first().is_none_or(|x| !self.relation_set.contains(&(c, x))))
            .collect()
    }

    pub fn arrow_in_relation(&self, a: usize) -> bool {
        self.relations.iter().any(|&(x, y)| x == a || y == a)
    }

    pub fn loops(&self) -> Vec<usize> {
        (0..self.quiver.arrow_count()).filter(|&a| self.quiver.arrow(a).is_loop()).collect()
    }

    pub fn valency(&self, v: usize) -> usize {
        self.quiver.valency(v)
    }

    /// Vertices whose idempotent joins the maximal paths as a degenerate
    /// ribbon vertex: ends of a single arrow, or pass-through vertices
    /// `b` then `a` with `a·b` nonzero and nothing else attached.
    /// An isolated vertex (the algebra `K`) is listed too, so that it
    /// still appears twice among the ribbon vertices.
    pub fn degenerate_vertices(&self) -> Vec<usize> {
        let q = &self.quiver;
        (0..q.vertex_count())
            .filter(|&v| {
                let out: Vec<usize> = q.arrows_from(v).collect();
                let inc: Vec<usize> = q.arrows_into(v).collect();
                match (inc.as_slice(), out.as_slice()) {
                    ([], []) => true,
                    ([], [_]) | ([_], []) => true,
                    ([b], [a]) => a != b && !self.relation_set.contains(&(*b, *a)),
                    _ => false,
                }
            })
            .collect()
    }

    /// `M̄`: the maximal paths followed by the idempotents of degenerate vertices.
    pub fn extended_maximal_paths(&self) -> Vec<Path> {
        let mut out = self.maximal.clone();
        out.extend(self.degenerate_vertices().into_iter().map(Path::vertex));
        out
    }

    /// One vertex, no arrows.
    pub fn is_ground_field(&self) -> bool {
        self.quiver.vertex_count() == 1 && self.quiver.arrow_count() == 0
    }

    /// One vertex with a single loop `x` and `x² = 0`.
    pub fn is_loop_square_zero(&self) -> bool {
        self.quiver.vertex_count() == 1 && self.quiver.arrow_count() == 1 && self.relations.len() == 1
    }

    /// Two vertices joined by two parallel arrows, no relations.
    pub fn is_kronecker(&self) -> bool {
        let q = &self.quiver;
        q.vertex_count() == 2
            && q.arrow_count() == 2
            && self.relations.is_empty()
            && q.arrow(0).source == q.arrow(1).source
            && q.arrow(0).target == q.arrow(1).target
            && !q.arrow(0).is_loop()
    }

    /// Two vertices joined by arrows in opposite directions, with both
    /// length-2 compositions zero.
    pub fn is_nakayama_two_cycle(&self) -> bool {
        let q = &self.quiver;
        q.vertex_count() == 2
            && q.arrow_count() == 2
            && self.relations.len() == 2
            && q.arrow(0).source == q.arrow(1).target
            && q.arrow(0).target == q.arrow(1).source
            && !q.arrow(0).is_loop()
    }

    /// Sum over single-occurrence replacements of `a` in `p` by `q`,
    /// keeping only results that avoid every relation.
    pub fn substitute(&self, p: &Path, a: usize, q: &Path, field: Field) -> Result<SparseVector<Path>, QuiverError> {
        let arrow = self.quiver.arrow_path(a);
        if !arrow.is_parallel_to(q) {
            return Err(QuiverError::NotParallel {
                arrow: self.quiver.arrow(a).name.clone(),
                path: self.quiver.render(q),
            });
        }
        let mut out = SparseVector::zero();
        for r in self.substitution_terms(p, a, q) {
            out.add_term(r, field.one());
        }
        Ok(out)
    }

    /// The individual replacement results, with repetition.
    pub fn substitution_terms(&self, p: &Path, a: usize, q: &Path) -> Vec<Path> {
        let mut out = Vec::new();
        for (i, &x) in p.arrows().iter().enumerate() {
            if x != a {
                continue;
            }
            let mut arrows = p.arrows()[..i].to_vec();
            arrows.extend_from_slice(q.arrows());
            arrows.extend_from_slice(&p.arrows()[i + 1..]);
            let r = Path::from_parts(p.source(), p.target(), arrows);
            if self.in_basis(&r) {
                out.push(r);
            }
        }
        out
    }

    /// Basis paths from `s` to `t`.
    pub fn basis_between(&self, s: usize, t: usize) -> impl Iterator<Item = &Path> {
        self.basis.iter().filter(move |p| p.source() == s && p.target() == t)
    }

    /// Pretty printer for paths of this presentation.
    pub fn render(&self, p: &Path) -> String {
        self.quiver.render(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[&str], a: &[(&str, &str, &str)]) -> Quiver {
        Quiver::new(v, a).unwrap()
    }

    #[test]
    fn kronecker_basis() {
        let g = validate_named::<&str>(q(&["e1", "e2"], &[("b1", "e1", "e2"), ("b2", "e1", "e2")]), &[]).unwrap();
        let names: Vec<String> = g.basis().iter().map(|p| g.render(p)).collect();
        assert_eq!(names, ["e1", "e2", "b1", "b2"]);
        assert!(g.is_kronecker());
        assert_eq!(g.maximal_paths().len(), 2);
    }

    #[test]
    fn loop_square_zero_basis() {
        let g = validate_named(q(&["e"], &[("x", "e", "e")]), &[("x", "x")]).unwrap();
        assert_eq!(g.basis().len(), 2);
        assert!(g.is_loop_square_zero());
    }

    #[test]
    fn three_loops_rejected() {
        let err = validate_named::<&str>(q(&["e"], &[("x", "e", "e"), ("y", "e", "e"), ("z", "e", "e")]), &[]).unwrap_err();
        assert_eq!(err.kind(), "TooManyArrowsAtVertex");
    }

    #[test]
    fn relation_free_cycle_rejected() {
        let quiver = q(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1")]);
        let err = validate_named::<&str>(quiver, &[]).unwrap_err();
        assert_eq!(err.kind(), "InfinitePathBasis");
    }

    #[test]
    fn non_composable_relation_rejected() {
        let quiver = q(&["1", "2"], &[("a", "1", "2"), ("b", "1", "2")]);
        let err = validate_named(quiver, &[("a", "b")]).unwrap_err();
        assert_eq!(err.kind(), "NonComposableRelation");
    }

    #[test]
    fn ambiguous_continuation_rejected() {
        let quiver = q(&["1", "2", "3", "4"], &[("a", "1", "2"), ("b", "2", "3"), ("c", "2", "4")]);
        let err = validate_named::<&str>(quiver.clone(), &[]).unwrap_err();
        assert_eq!(err.kind(), "AmbiguousContinuation");
        assert!(validate_named(quiver, &[("a", "b")]).is_ok());
    }

    #[test]
    fn disconnected_rejected() {
        let err = validate_named::<&str>(q(&["1", "2"], &[]), &[]).unwrap_err();
        assert_eq!(err.kind(), "DisconnectedQuiver");
    }

    #[test]
    fn substitution_into_loop_cycle() {
        let quiver = q(&["e1", "e2"], &[("a", "e1", "e2"), ("b", "e2", "e2"), ("c", "e2", "e1")]);
        let g = validate_named(quiver, &[("a", "c"), ("c", "a"), ("b", "b")]).unwrap();
        let cba = g.quiver().parse_path("c·b·a").unwrap();
        let b = g.quiver().arrow_index("b").unwrap();
        let out = g.substitute(&cba, b, &g.quiver().arrow_path(b), Field::Rational).unwrap();
        assert_eq!(out, SparseVector::unit(cba.clone(), Field::Rational));
        let a = g.quiver().arrow_index("a").unwrap();
        assert!(g.substitute(&cba, a, &g.quiver().arrow_path(b), Field::Rational).is_err());
    }

    #[test]
    fn degenerate_vertices_make_every_vertex_appear_twice() {
        let quiver = q(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]);
        let g = validate_named::<&str>(quiver, &[]).unwrap();
        assert_eq!(g.maximal_paths().len(), 1);
        assert_eq!(g.degenerate_vertices(), vec![0, 1, 2]);
        assert_eq!(g.extended_maximal_paths().len(), 4);
    }
}
