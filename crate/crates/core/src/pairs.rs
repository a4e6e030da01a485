//! Parallel and cyclic pairs of paths: the coordinates of every cochain space.

use crate::quiver::Path;

/// A pair `(x, y)` of paths; in cyclic coordinates `y` stands for `y*`.
pub type Pair = (Path, Path);

fn sorted(xs: &[Path]) -> Vec<Path> {
    let mut v = xs.to_vec();
    v.sort();
    v.dedup();
    v
}

/// All `(x, y)` with `s(x) = s(y)` and `t(x) = t(y)`, in lexicographic order.
pub fn parallel_pairs(xs: &[Path], ys: &[Path]) -> Vec<Pair> {
    let ys = sorted(ys);
    let mut out = Vec::new();
    for x in sorted(xs) {
        for y in &ys {
            if x.is_parallel_to(y) {
                out.push((x.clone(), y.clone()));
            }
        }
    }
    out
}

/// All `(x, y)` with `s(x) = t(y)` and `t(x) = s(y)`, in lexicographic order.
pub fn cyclic_pairs(xs: &[Path], ys: &[Path]) -> Vec<Pair> {
    let ys = sorted(ys);
    let mut out = Vec::new();
    for x in sorted(xs) {
        for y in &ys {
            if x.is_cyclic_with(y) {
                out.push((x.clone(), y.clone()));
            }
        }
    }
    out
}
