//! Small named algebras used throughout the tests and the command line.

use crate::gentle::{validate_named, GentlePresentation};
use crate::quiver::Quiver;

fn build(vertices: &[&str], arrows: &[(&str, &str, &str)], relations: &[(&str, &str)]) -> GentlePresentation {
    let q = Quiver::new(vertices, arrows).expect("catalog quiver");
    validate_named(q, relations).expect("catalog presentation is gentle")
}

/// The ground field: one vertex, no arrows.
pub fn ground_field() -> GentlePresentation {
    build(&["e"], &[], &[])
}

/// One loop `x` with `x² = 0`.
pub fn loop_square_zero() -> GentlePresentation {
    build(&["e"], &[("x", "e", "e")], &[("x", "x")])
}

/// Two parallel arrows `b1, b2: e1 → e2`.
pub fn kronecker() -> GentlePresentation {
    build(&["e1", "e2"], &[("b1", "e1", "e2"), ("b2", "e1", "e2")], &[])
}

/// `a1: e1 → e2`, `a2: e2 → e1` with both composites zero.
pub fn nakayama_two_cycle() -> GentlePresentation {
    build(&["e1", "e2"], &[("a1", "e1", "e2"), ("a2", "e2", "e1")], &[("a1", "a2"), ("a2", "a1")])
}

/// `a: e1 → e2`, loop `b` at `e2`, `c: e2 → e1` with `ca = ac = b² = 0`.
pub fn loop_cycle() -> GentlePresentation {
    build(
        &["e1", "e2"],
        &[("a", "e1", "e2"), ("b", "e2", "e2"), ("c", "e2", "e1")],
        &[("a", "c"), ("c", "a"), ("b", "b")],
    )
}

/// `a: e1 → e2`, `b: e2 → e3`, `d: e3 → e1`, `c: e3 → e4` with `ba = db = 0`.
pub fn triangle_with_tail() -> GentlePresentation {
    build(
        &["e1", "e2", "e3", "e4"],
        &[("a", "e1", "e2"), ("b", "e2", "e3"), ("d", "e3", "e1"), ("c", "e3", "e4")],
        &[("a", "b"), ("b", "d")],
    )
}

/// A square with a doubled side: `a: e1 → e2`, `b, c: e2 → e3`,
/// `d: e3 → e4`, `f: e4 → e1` with `ca = db = fd = af = 0`.
pub fn square_with_double_edge() -> GentlePresentation {
    build(
        &["e1", "e2", "e3", "e4"],
        &[("a", "e1", "e2"), ("b", "e2", "e3"), ("c", "e2", "e3"), ("d", "e3", "e4"), ("f", "e4", "e1")],
        &[("a", "c"), ("b", "d"), ("d", "f"), ("f", "a")],
    )
}

/// A linearly oriented `A_n` quiver without relations.
pub fn linear(n: usize) -> GentlePresentation {
    assert!(n >= 1);
    let vertices: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();
    let arrows: Vec<(String, String, String)> = (1..n)
        .map(|i| (format!("a{i}"), format!("e{i}"), format!("e{}", i + 1)))
        .collect();
    let q = Quiver::new(&vertices, &arrows).unwrap();
    validate_named::<&str>(q, &[]).unwrap()
}

/// All catalog entries with their names.
pub fn all() -> Vec<(&'static str, GentlePresentation)> {
    vec![
        ("ground-field", ground_field()),
        ("loop-square-zero", loop_square_zero()),
        ("kronecker", kronecker()),
        ("nakayama-two-cycle", nakayama_two_cycle()),
        ("loop-cycle", loop_cycle()),
        ("triangle-with-tail", triangle_with_tail()),
        ("square-with-double-edge", square_with_double_edge()),
    ]
}

pub fn by_name(name: &str) -> Option<GentlePresentation> {
    all().into_iter().find(|(n, _)| *n == name).map(|(_, g)| g)
}
