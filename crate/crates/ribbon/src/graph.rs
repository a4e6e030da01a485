use gentle_core::GentlePresentation;
use serde::Serialize;
use std::collections::VecDeque;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RibbonError {
    #[error("edge {0} must occur exactly twice among the rotations, found {1}")]
    EdgeNotTwice(usize, usize),
    #[error("rotation refers to unknown edge {0}")]
    UnknownEdge(usize),
    #[error("the ribbon graph has no vertices")]
    Empty,
    #[error("the ribbon graph is not connected")]
    Disconnected,
    #[error("no admissible cut has vanishing Alt")]
    NoAltFreeCut,
}

/// A ribbon graph as a rotation system.
///
/// Half-edges are numbered vertex by vertex in rotation order, so every
/// rotation starts at its smallest half-edge id. The angle following a
/// half-edge may carry a label (the name of the Brauer-quiver arrow it
/// induces).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RibbonGraph {
    edge_labels: Vec<String>,
    rotations: Vec<Vec<usize>>,
    half_edge_edge: Vec<usize>,
    half_edge_vertex: Vec<usize>,
    angle_labels: Vec<Option<String>>,
}

impl RibbonGraph {
    /// Builds a ribbon graph from the cyclic edge order at each vertex.
    /// Every edge must occur exactly twice; a loop edge occupies two slots.
    pub fn from_rotations(edge_labels: Vec<String>, rotations: &[Vec<usize>]) -> Result<RibbonGraph, RibbonError> {
        if rotations.is_empty() {
            return Err(RibbonError::Empty);
        }
        let mut counts = vec![0; edge_labels.len()];
        let mut graph = RibbonGraph {
            edge_labels,
            rotations: Vec::new(),
            half_edge_edge: Vec::new(),
            half_edge_vertex: Vec::new(),
            angle_labels: Vec::new(),
        };
        for (v, rotation) in rotations.iter().enumerate() {
            let mut ids = Vec::new();
            for &e in rotation {
                if e >= counts.len() {
                    return Err(RibbonError::UnknownEdge(e));
                }
                counts[e] += 1;
                ids.push(graph.half_edge_edge.len());
                graph.half_edge_edge.push(e);
                graph.half_edge_vertex.push(v);
                graph.angle_labels.push(None);
            }
            graph.rotations.push(ids);
        }
        if let Some((e, &c)) = counts.iter().enumerate().find(|(_, &c)| c != 2) {
            return Err(RibbonError::EdgeNotTwice(e, c));
        }
        if !graph.is_connected() {
            return Err(RibbonError::Disconnected);
        }
        Ok(graph)
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_labels.len()
    }

    pub fn half_edge_count(&self) -> usize {
        self.half_edge_edge.len()
    }

    pub fn edge_label(&self, e: usize) -> &str {
        &self.edge_labels[e]
    }

    pub fn edge_labels(&self) -> &[String] {
        &self.edge_labels
    }

    /// Half-edges around vertex `v` in cyclic order.
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotations[v]
    }

    pub fn valency(&self, v: usize) -> usize {
        self.rotations[v].len()
    }

    pub fn edge_of(&self, h: usize) -> usize {
        self.half_edge_edge[h]
    }

    pub fn vertex_of(&self, h: usize) -> usize {
        self.half_edge_vertex[h]
    }

    /// Position of `h` in the rotation of its vertex.
    pub fn position_of(&self, h: usize) -> usize {
        self.rotations[self.vertex_of(h)].iter().position(|&x| x == h).unwrap()
    }

    /// The next half-edge around the same vertex.
    pub fn successor(&self, h: usize) -> usize {
        let rotation = &self.rotations[self.vertex_of(h)];
        rotation[(self.position_of(h) + 1) % rotation.len()]
    }

    /// The other half-edge of the same edge.
    pub fn partner(&self, h: usize) -> usize {
        let e = self.edge_of(h);
        (0..self.half_edge_count()).find(|&x| x != h && self.edge_of(x) == e).unwrap()
    }

    /// The two half-edges of edge `e`, smaller id first.
    pub fn half_edges_of(&self, e: usize) -> [usize; 2] {
        let mut hs = (0..self.half_edge_count()).filter(|&h| self.edge_of(h) == e);
        [hs.next().unwrap(), hs.next().unwrap()]
    }

    pub fn angle_label(&self, h: usize) -> Option<&str> {
        self.angle_labels[h].as_deref()
    }

    pub fn set_angle_label(&mut self, h: usize, label: impl Into<String>) {
        self.angle_labels[h] = Some(label.into());
    }

    /// `|vertices| − |edges|`.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &h in &self.rotations[v] {
                let w = self.vertex_of(self.partner(h));
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// The ribbon graph of a gentle algebra with one marked angle per maximal path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MarkedRibbonGraph {
    graph: RibbonGraph,
    vertex_paths: Vec<String>,
    markings: Vec<Option<usize>>,
}

impl MarkedRibbonGraph {
    pub fn graph(&self) -> &RibbonGraph {
        &self.graph
    }

    /// Drops the markings.
    pub fn unmark(&self) -> RibbonGraph {
        self.graph.clone()
    }

    /// The element of `M̄` behind each ribbon vertex, rendered as a path.
    pub fn vertex_paths(&self) -> &[String] {
        &self.vertex_paths
    }

    /// For each vertex, the rotation index of the half-edge after which the
    /// marked angle lies; `None` for idempotents of degenerate vertices.
    pub fn markings(&self) -> &[Option<usize>] {
        &self.markings
    }
}

/// Name for the trivial-extension arrow of the `i`-th maximal path, avoiding `taken`.
pub(crate) fn fresh_name(base: String, taken: &[String]) -> String {
    let mut name = base;
    while taken.contains(&name) {
        name.push('\'');
    }
    name
}

/// Vertices are `M̄` (maximal paths, then degenerate idempotents); the
/// half-edges of `m` are the vertices visited by `m` in order, and the
/// marked angle closes the rotation from `t(m)` back to `s(m)`.
pub fn ribbon_graph(g: &GentlePresentation) -> MarkedRibbonGraph {
    let q = g.quiver();
    let extended = g.extended_maximal_paths();
    let maximal = g.maximal_paths().len();
    let rotations: Vec<Vec<usize>> =
        extended.iter().map(|m| (0..=m.len()).map(|i| m.vertex_at(q, i)).collect()).collect();
    let labels = q.vertex_names().to_vec();
    let mut graph = RibbonGraph::from_rotations(labels, &rotations)
        .expect("every vertex of a gentle quiver occurs twice in the extended maximal paths");
    let arrow_names: Vec<String> = q.arrows().iter().map(|a| a.name.clone()).collect();
    let mut markings = Vec::new();
    for (v, m) in extended.iter().enumerate() {
        let ids = graph.rotation(v).to_vec();
        for (i, &a) in m.arrows().iter().enumerate() {
            graph.set_angle_label(ids[i], q.arrow(a).name.clone());
        }
        if v < maximal {
            graph.set_angle_label(ids[m.len()], fresh_name(format!("β{}", v + 1), &arrow_names));
            markings.push(Some(m.len()));
        } else {
            markings.push(None);
        }
    }
    MarkedRibbonGraph { graph, vertex_paths: extended.iter().map(|m| g.render(m)).collect(), markings }
}

/// `(χ(Q), χ(Γ), |M̄|)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EulerReport {
    pub quiver: i64,
    pub ribbon: i64,
    pub extended_maximal: usize,
}

impl EulerReport {
    /// `χ(Q) = χ(Γ)` and `|M̄| = 2|Q₀| − |Q₁|`.
    pub fn identities_hold(&self, g: &GentlePresentation) -> bool {
        let q = g.quiver();
        self.quiver == self.ribbon
            && self.extended_maximal as i64 == 2 * q.vertex_count() as i64 - q.arrow_count() as i64
    }
}

pub fn euler_report(g: &GentlePresentation) -> EulerReport {
    let gamma = ribbon_graph(g);
    EulerReport {
        quiver: g.quiver().euler_characteristic(),
        ribbon: gamma.graph().euler_characteristic(),
        extended_maximal: gamma.graph().vertex_count(),
    }
}
