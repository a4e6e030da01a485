//! Exhaustive enumeration of small connected gentle presentations.
//!
//! Vertices are labeled; arrows are taken as a multiset of endpoint pairs
//! (listed in nondecreasing order), so relabeling arrows does not produce
//! duplicates. No further isomorphism reduction is done.

use crate::gentle::{validate_gentle, GentlePresentation};
use crate::quiver::Quiver;

/// Every connected gentle presentation with at most the given numbers of
/// vertices and arrows, in a fixed deterministic order.
pub fn enumerate(max_vertices: usize, max_arrows: usize) -> Vec<GentlePresentation> {
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        let slots: Vec<(usize, usize)> = (0..n).flat_map(|s| (0..n).map(move |t| (s, t))).collect();
        for m in 0..=max_arrows {
            let mut choice = Vec::new();
            multisets(&slots, m, 0, &mut choice, &mut |arrows| {
                if !degrees_ok(n, arrows) {
                    return;
                }
                let quiver = Quiver::from_indices(n, arrows);
                if !quiver.is_connected() {
                    return;
                }
                let pairs: Vec<(usize, usize)> = (0..m)
                    .flat_map(|i| (0..m).map(move |j| (i, j)))
                    .filter(|&(i, j)| arrows[i].1 == arrows[j].0)
                    .collect();
                for mask in 0u64..(1u64 << pairs.len()) {
                    let rel: Vec<(usize, usize)> =
                        pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &p)| p).collect();
                    if let Ok(g) = validate_gentle(quiver.clone(), &rel) {
                        out.push(g);
                    }
                }
            });
        }
    }
    out
}

fn degrees_ok(n: usize, arrows: &[(usize, usize)]) -> bool {
    (0..n).all(|v| {
        arrows.iter().filter(|a| a.0 == v).count() <= 2 && arrows.iter().filter(|a| a.1 == v).count() <= 2
    })
}

fn multisets(
    slots: &[(usize, usize)],
    remaining: usize,
    from: usize,
    choice: &mut Vec<(usize, usize)>,
    visit: &mut dyn FnMut(&[(usize, usize)]),
) {
    if remaining == 0 {
        visit(choice);
        return;
    }
    for i in from..slots.len() {
        choice.push(slots[i]);
        multisets(slots, remaining - 1, i, choice, visit);
        choice.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_vertex_one_arrow() {
        let c = enumerate(1, 1);
        assert_eq!(c.len(), 2);
        assert!(c[0].is_ground_field());
        assert!(c[1].is_loop_square_zero());
    }
}
