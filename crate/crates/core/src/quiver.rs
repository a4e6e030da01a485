//! Quivers and paths.
//!
//! Paths compose right to left: the path `c·b·a` traverses `a` first.
//! Internally a path stores its arrows in traversal order.

use crate::error::QuiverError;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::{HashMap, VecDeque};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

impl Arrow {
    pub fn is_loop(&self) -> bool {
        self.source == self.target
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// Builds a quiver from vertex names and `(name, source, target)` triples.
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S, S)]) -> Result<Quiver, QuiverError> {
        let mut index = HashMap::new();
        let mut names = Vec::new();
        for v in vertices {
            let v = v.as_ref().to_string();
            if index.insert(v.clone(), names.len()).is_some() {
                return Err(QuiverError::DuplicateVertex(v));
            }
            names.push(v);
        }
        let mut seen = HashMap::new();
        let mut list = Vec::new();
        for (name, s, t) in arrows {
            let name = name.as_ref().to_string();
            if seen.insert(name.clone(), ()).is_some() {
                return Err(QuiverError::DuplicateArrow(name));
            }
            let lookup = |v: &S| {
                index.get(v.as_ref()).copied().ok_or_else(|| QuiverError::UnknownVertex {
                    arrow: name.clone(),
                    vertex: v.as_ref().to_string(),
                })
            };
            let source = lookup(s)?;
            let target = lookup(t)?;
            list.push(Arrow { name, source, target });
        }
        Ok(Quiver { vertices: names, arrows: list })
    }

    /// Builds a quiver on vertices `e1..en` with arrows named `a1..am`.
    pub fn from_indices(vertex_count: usize, arrows: &[(usize, usize)]) -> Quiver {
        let vertices = (1..=vertex_count).map(|i| format!("e{i}")).collect();
        let arrows = arrows
            .iter()
            .enumerate()
            .map(|(i, &(s, t))| {
                assert!(s < vertex_count && t < vertex_count, "arrow endpoint out of range");
                Arrow { name: format!("a{}", i + 1), source: s, target: t }
            })
            .collect();
        Quiver { vertices, arrows }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Arrows starting at `v`, in declaration order.
    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].source == v)
    }

    /// Arrows ending at `v`, in declaration order.
    pub fn arrows_into(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].target == v)
    }

    /// Number of arrow ends at `v`; a loop counts twice.
    pub fn valency(&self, v: usize) -> usize {
        self.arrows_from(v).count() + self.arrows_into(v).count()
    }

    /// `|Q₀| - |Q₁|`.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.arrows.len() as i64
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return false;
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for a in &self.arrows {
                let other = if a.source == v {
                    a.target
                } else if a.target == v {
                    a.source
                } else {
                    continue;
                };
                if !seen[other] {
                    seen[other] = true;
                    queue.push_back(other);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn vertex_path(&self, v: usize) -> Path {
        Path::vertex(v)
    }

    pub fn arrow_path(&self, a: usize) -> Path {
        let arrow = &self.arrows[a];
        Path { source: arrow.source, target: arrow.target, arrows: vec![a] }
    }

    /// The path traversing `arrows` in the given order, if composable.
    pub fn path(&self, arrows: &[usize]) -> Option<Path> {
        let first = *arrows.first()?;
        let mut at = self.arrows[first].source;
        for &a in arrows {
            if self.arrows[a].source != at {
                return None;
            }
            at = self.arrows[a].target;
        }
        Some(Path { source: self.arrows[first].source, target: at, arrows: arrows.to_vec() })
    }

    /// Parses `"c·b·a"`, `"c.b.a"` or `"c b a"` (right to left) or a vertex name.
    pub fn parse_path(&self, text: &str) -> Option<Path> {
        let text = text.trim();
        if let Some(v) = self.vertex_index(text) {
            return Some(Path::vertex(v));
        }
        let mut arrows = Vec::new();
        for token in text.split(|c: char| c == '·' || c == '.' || c.is_whitespace()) {
            if token.is_empty() {
                continue;
            }
            arrows.push(self.arrow_index(token)?);
        }
        arrows.reverse();
        self.path(&arrows)
    }

    /// Renders a path right to left, e.g. `c·b·a`; a trivial path prints its vertex.
    pub fn render(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            return self.vertices[p.source].clone();
        }
        p.arrows
            .iter()
            .rev()
            .map(|&a| self.arrows[a].name.as_str())
            .collect::<Vec<_>>()
            .join("·")
    }
}

/// A path `a_n…a_1`, or the idempotent at a vertex when it has no arrows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    source: usize,
    target: usize,
    arrows: Vec<usize>,
}

impl Path {
    pub fn vertex(v: usize) -> Path {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    /// Arrows in traversal order `a_1, …, a_n`.
    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `a_1`, the arrow traversed first.
    pub fn first(&self) -> Option<usize> {
        self.arrows.first().copied()
    }

    /// `a_n`, the arrow traversed last.
    pub fn last(&self) -> Option<usize> {
        self.arrows.last().copied()
    }

    pub fn single_arrow(&self) -> Option<usize> {
        match self.arrows.as_slice() {
            [a] => Some(*a),
            _ => None,
        }
    }

    pub fn is_cycle(&self) -> bool {
        self.source == self.target
    }

    pub fn contains_arrow(&self, a: usize) -> bool {
        self.arrows.contains(&a)
    }

    pub fn occurrences(&self, a: usize) -> usize {
        self.arrows.iter().filter(|&&x| x == a).count()
    }

    pub fn is_parallel_to(&self, other: &Path) -> bool {
        self.source == other.source && self.target == other.target
    }

    pub fn is_cyclic_with(&self, other: &Path) -> bool {
        self.source == other.target && self.target == other.source
    }

    /// The vertex reached after the first `i` arrows.
    pub fn vertex_at(&self, q: &Quiver, i: usize) -> usize {
        if i == 0 {
            self.source
        } else {
            q.arrow(self.arrows[i - 1]).target
        }
    }

    /// The subpath made of arrows `i..j` in traversal order.
    pub fn segment(&self, q: &Quiver, i: usize, j: usize) -> Path {
        assert!(i <= j && j <= self.arrows.len());
        let source = self.vertex_at(q, i);
        let target = self.vertex_at(q, j);
        Path { source, target, arrows: self.arrows[i..j].to_vec() }
    }

    /// `next ∘ self`: traverse `self`, then `next`.
    pub fn then(&self, next: &Path) -> Option<Path> {
        if self.target != next.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&next.arrows);
        Some(Path { source: self.source, target: next.target, arrows })
    }

    /// If `self = y ∘ prefix`, returns `y`.
    pub fn strip_prefix(&self, q: &Quiver, prefix: &Path) -> Option<Path> {
        if prefix.source != self.source || !self.arrows.starts_with(&prefix.arrows) {
            return None;
        }
        Some(self.segment(q, prefix.len(), self.len()))
    }

    /// If `self = suffix ∘ y`, returns `y`.
    pub fn strip_suffix(&self, q: &Quiver, suffix: &Path) -> Option<Path> {
        if suffix.target != self.target || !self.arrows.ends_with(&suffix.arrows) {
            return None;
        }
        Some(self.segment(q, 0, self.len() - suffix.len()))
    }

    /// Builds a path from raw parts without composability checks.
    pub(crate) fn from_parts(source: usize, target: usize, arrows: Vec<usize>) -> Path {
        Path { source, target, arrows }
    }
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.arrows
            .len()
            .cmp(&other.arrows.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.source.cmp(&other.source))
            .then_with(|| self.target.cmp(&other.target))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
