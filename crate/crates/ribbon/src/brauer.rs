use crate::graph::{fresh_name, ribbon_graph, RibbonGraph};
use gentle_core::{GentlePresentation, Path, Quiver};
use serde::Serialize;

/// Quiver and defining relations of a multiplicity-one Brauer graph algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrauerPresentation {
    pub quiver: Quiver,
    /// `C_{v,m} − C_{v,n}` for edges whose ends both have valency at least 2.
    pub commutativity: Vec<(Path, Path)>,
    /// `C_{v,m}` followed by its own first arrow.
    pub zero_paths: Vec<Path>,
    /// Length-2 paths that are not subpaths of any special cycle, as
    /// `[first, second]`.
    pub zero_relations: Vec<(usize, usize)>,
    /// The half-edge whose following angle induces each arrow.
    pub arrow_angles: Vec<usize>,
}

/// Name-based view of a Brauer presentation, for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BrauerSummary {
    pub vertices: Vec<String>,
    pub arrows: Vec<(String, String, String)>,
    pub commutativity: Vec<(String, String)>,
    pub zero_paths: Vec<String>,
    pub zero_relations: Vec<(String, String)>,
}

impl BrauerPresentation {
    pub fn summary(&self) -> BrauerSummary {
        let q = &self.quiver;
        BrauerSummary {
            vertices: q.vertex_names().to_vec(),
            arrows: q
                .arrows()
                .iter()
                .map(|a| (a.name.clone(), q.vertex_name(a.source).to_string(), q.vertex_name(a.target).to_string()))
                .collect(),
            commutativity: self.commutativity.iter().map(|(x, y)| (q.render(x), q.render(y))).collect(),
            zero_paths: self.zero_paths.iter().map(|p| q.render(p)).collect(),
            zero_relations: self
                .zero_relations
                .iter()
                .map(|&(x, y)| (q.arrow(x).name.clone(), q.arrow(y).name.clone()))
                .collect(),
        }
    }

    /// Arrows as sorted `(name, source, target)` triples.
    pub fn arrow_multiset(&self) -> Vec<(String, usize, usize)> {
        arrow_multiset(&self.quiver)
    }
}

pub(crate) fn arrow_multiset(q: &Quiver) -> Vec<(String, usize, usize)> {
    let mut v: Vec<_> = q.arrows().iter().map(|a| (a.name.clone(), a.source, a.target)).collect();
    v.sort();
    v
}

/// The single edge whose two ends both have valency 1.
fn is_single_edge(gamma: &RibbonGraph) -> bool {
    gamma.edge_count() == 1 && gamma.vertex_count() == 2
}

/// Successor quiver of the ribbon graph with the three relation families.
///
/// Each angle (a half-edge followed by the next one around its vertex)
/// gives an arrow; vertices of valency 1 give none. A single edge between
/// two vertices of valency 1 yields one loop `α` with `α² = 0`.
pub fn brauer_algebra(gamma: &RibbonGraph) -> BrauerPresentation {
    let mut arrows: Vec<(String, String, String)> = Vec::new();
    let mut angles = Vec::new();
    let taken: Vec<String> = (0..gamma.half_edge_count()).filter_map(|h| gamma.angle_label(h).map(String::from)).collect();
    let mut counter = 0;
    let mut name_for = |h: usize| match gamma.angle_label(h) {
        Some(l) => l.to_string(),
        None => {
            counter += 1;
            fresh_name(format!("α{counter}"), &taken)
        }
    };
    for v in 0..gamma.vertex_count() {
        if gamma.valency(v) < 2 && !(is_single_edge(gamma) && v == 0) {
            continue;
        }
        for &h in gamma.rotation(v) {
            let from = gamma.edge_label(gamma.edge_of(h)).to_string();
            let to = gamma.edge_label(gamma.edge_of(gamma.successor(h))).to_string();
            arrows.push((name_for(h), from, to));
            angles.push(h);
        }
    }
    let quiver = Quiver::new(gamma.edge_labels(), &arrows).expect("angle names are distinct");
    let arrow_at = |h: usize| angles.iter().position(|&x| x == h);

    let cycle = |h: usize| -> Vec<usize> {
        let mut out = vec![arrow_at(h).unwrap()];
        let mut x = gamma.successor(h);
        while x != h {
            out.push(arrow_at(x).unwrap());
            x = gamma.successor(x);
        }
        out
    };

    let mut commutativity = Vec::new();
    let mut zero_paths = Vec::new();
    for e in 0..gamma.edge_count() {
        let [h1, h2] = gamma.half_edges_of(e);
        let cycles: Vec<Vec<usize>> = [h1, h2].into_iter().filter(|&h| arrow_at(h).is_some()).map(cycle).collect();
        if let [c1, c2] = cycles.as_slice() {
            commutativity.push((quiver.path(c1).unwrap(), quiver.path(c2).unwrap()));
        }
        for c in &cycles {
            let mut over = c.clone();
            over.push(c[0]);
            zero_paths.push(quiver.path(&over).unwrap());
        }
    }

    let mut zero_relations = Vec::new();
    for (x, &hx) in angles.iter().enumerate() {
        for (y, &hy) in angles.iter().enumerate() {
            let composable = quiver.arrow(x).target == quiver.arrow(y).source;
            if composable && gamma.successor(hx) != hy {
                zero_relations.push((x, y));
            }
        }
    }

    BrauerPresentation { quiver, commutativity, zero_paths, zero_relations, arrow_angles: angles }
}

/// `Q ∪ {β_m : m ∈ M}` with `β_m : t(m) → s(m)`, built directly from the presentation.
pub fn trivial_extension_arrows(g: &GentlePresentation) -> Quiver {
    let q = g.quiver();
    let names: Vec<String> = q.arrows().iter().map(|a| a.name.clone()).collect();
    let mut arrows: Vec<(String, String, String)> = q
        .arrows()
        .iter()
        .map(|a| (a.name.clone(), q.vertex_name(a.source).to_string(), q.vertex_name(a.target).to_string()))
        .collect();
    for (i, m) in g.maximal_paths().iter().enumerate() {
        arrows.push((
            fresh_name(format!("β{}", i + 1), &names),
            q.vertex_name(m.target()).to_string(),
            q.vertex_name(m.source()).to_string(),
        ));
    }
    Quiver::new(q.vertex_names(), &arrows).expect("fresh arrow names")
}

/// Quiver `Q ∪ {β_m}` of `TA` with the relations of the Brauer graph algebra
/// of the unmarked ribbon graph.
pub fn trivial_extension_quiver(g: &GentlePresentation) -> BrauerPresentation {
    brauer_algebra(&ribbon_graph(g).unmark())
}

/// Whether the Brauer quiver of the unmarked ribbon graph equals `Q ∪ {β_m}`
/// arrow for arrow.
pub fn round_trip_holds(g: &GentlePresentation) -> bool {
    let direct = trivial_extension_arrows(g);
    let brauer = trivial_extension_quiver(g);
    direct.vertex_names() == brauer.quiver.vertex_names() && arrow_multiset(&direct) == brauer.arrow_multiset()
}
