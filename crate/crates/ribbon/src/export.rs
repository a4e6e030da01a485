//! DOT and JSON renderings of ribbon graphs.

use crate::brauer::BrauerPresentation;
use crate::graph::{MarkedRibbonGraph, RibbonGraph};
use serde::Serialize;
use std::fmt::Write;

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Undirected DOT graph; each vertex is a record whose ports `p0, p1, …`
/// follow the rotation, and each edge joins the ports of its half-edges.
pub fn ribbon_dot(gamma: &RibbonGraph, markings: Option<&[Option<usize>]>, names: Option<&[String]>) -> String {
    let mut out = String::from("graph ribbon {\n  node [shape=record];\n");
    for v in 0..gamma.vertex_count() {
        let ports: Vec<String> = gamma
            .rotation(v)
            .iter()
            .enumerate()
            .map(|(i, &h)| format!("<p{i}> {}", escape(gamma.edge_label(gamma.edge_of(h)))))
            .collect();
        let title = names.map_or_else(|| format!("v{v}"), |n| escape(&n[v]));
        writeln!(out, "  v{v} [label=\"{{{title}|{{{}}}}}\"];", ports.join("|")).unwrap();
        if let Some(Some(i)) = markings.map(|m| m[v]) {
            let n = gamma.valency(v);
            writeln!(out, "  // × v{v}: marked angle between p{i} and p{}", (i + 1) % n).unwrap();
        }
    }
    for e in 0..gamma.edge_count() {
        let [h1, h2] = gamma.half_edges_of(e);
        let end = |h: usize| format!("v{}:p{}", gamma.vertex_of(h), gamma.position_of(h));
        writeln!(out, "  {} -- {} [label=\"{}\"];", end(h1), end(h2), escape(gamma.edge_label(e))).unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn marked_ribbon_dot(gamma: &MarkedRibbonGraph) -> String {
    ribbon_dot(gamma.graph(), Some(gamma.markings()), Some(gamma.vertex_paths()))
}

/// Directed DOT graph of a Brauer quiver.
pub fn brauer_dot(b: &BrauerPresentation) -> String {
    let q = &b.quiver;
    let mut out = String::from("digraph brauer {\n");
    for v in q.vertex_names() {
        writeln!(out, "  \"{}\";", escape(v)).unwrap();
    }
    for a in q.arrows() {
        writeln!(
            out,
            "  \"{}\" -> \"{}\" [label=\"{}\"];",
            escape(q.vertex_name(a.source)),
            escape(q.vertex_name(a.target)),
            escape(&a.name)
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct EdgeRecord<'a> {
    id: usize,
    label: &'a str,
    half_edges: [usize; 2],
}

#[derive(Serialize)]
struct VertexRecord<'a> {
    id: usize,
    path: Option<&'a str>,
    rotation: &'a [usize],
    marking: Option<usize>,
    angle_labels: Vec<Option<&'a str>>,
}

#[derive(Serialize)]
struct RotationSystem<'a> {
    schema: u32,
    vertices: Vec<VertexRecord<'a>>,
    edges: Vec<EdgeRecord<'a>>,
}

/// Rotation-system JSON: per vertex the cyclic list of half-edge ids and
/// the index of the marked angle, per edge its label and half-edges.
pub fn rotation_system_json(gamma: &RibbonGraph, marked: Option<&MarkedRibbonGraph>) -> serde_json::Value {
    let vertices = (0..gamma.vertex_count())
        .map(|v| VertexRecord {
            id: v,
            path: marked.map(|m| m.vertex_paths()[v].as_str()),
            rotation: gamma.rotation(v),
            marking: marked.and_then(|m| m.markings()[v]),
            angle_labels: gamma.rotation(v).iter().map(|&h| gamma.angle_label(h)).collect(),
        })
        .collect();
    let edges = (0..gamma.edge_count())
        .map(|e| EdgeRecord { id: e, label: gamma.edge_label(e), half_edges: gamma.half_edges_of(e) })
        .collect();
    serde_json::to_value(RotationSystem { schema: 1, vertices, edges }).expect("serializable")
}
