//! Marked ribbon graphs of gentle algebras, the Brauer graph algebra of
//! the trivial extension, and admissible cuts back to gentle algebras.

mod brauer;
mod cuts;
mod export;
mod graph;

pub use brauer::{
    brauer_algebra, round_trip_holds, trivial_extension_arrows, trivial_extension_quiver, BrauerPresentation,
    BrauerSummary,
};
pub use cuts::{admissible_cuts, find_alt_free_cut, AdmissibleCuts, Cut};
pub use export::{brauer_dot, marked_ribbon_dot, ribbon_dot, rotation_system_json};
pub use graph::{euler_report, ribbon_graph, EulerReport, MarkedRibbonGraph, RibbonError, RibbonGraph};

/// `k` parallel edges between two vertices, embedded in the plane: the
/// edges run `e1, …, ek` around one end and `ek, …, e1` around the other.
pub fn star_graph(k: usize) -> RibbonGraph {
    let labels = (1..=k).map(|i| format!("e{i}")).collect();
    let forward: Vec<usize> = (0..k).collect();
    let backward: Vec<usize> = (0..k).rev().collect();
    RibbonGraph::from_rotations(labels, &[forward, backward]).expect("two vertices, each edge twice")
}
