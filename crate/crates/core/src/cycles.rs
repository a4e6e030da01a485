//! Spanning trees and fundamental cycles of the underlying multigraph.

use crate::quiver::Quiver;
use serde::Serialize;
use std::collections::VecDeque;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleBasis {
    /// Tree arrows in the order they were added.
    pub spanning_tree: Vec<usize>,
    /// Arrows outside the tree, in declaration order.
    pub cotree: Vec<usize>,
    pub cycle_count: usize,
}

/// Breadth-first spanning tree from vertex 0. Arrows incident to the
/// current vertex are scanned in declaration order; loops never enter the tree.
pub fn fundamental_cycles(q: &Quiver) -> CycleBasis {
    let n = q.vertex_count();
    let mut in_tree = vec![false; q.arrow_count()];
    let mut tree = Vec::new();
    if n > 0 {
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(v) = queue.pop_front() {
            for (i, a) in q.arrows().iter().enumerate() {
                if a.is_loop() {
                    continue;
                }
                let other = if a.source == v {
                    a.target
                } else if a.target == v {
                    a.source
                } else {
                    continue;
                };
                if !seen[other] {
                    seen[other] = true;
                    in_tree[i] = true;
                    tree.push(i);
                    queue.push_back(other);
                }
            }
        }
    }
    let cotree: Vec<usize> = (0..q.arrow_count()).filter(|&a| !in_tree[a]).collect();
    CycleBasis { cycle_count: cotree.len(), spanning_tree: tree, cotree }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kronecker_cotree() {
        let q = Quiver::from_indices(2, &[(0, 1), (0, 1)]);
        let c = fundamental_cycles(&q);
        assert_eq!(c.cotree, vec![1]);
        assert_eq!(c.cycle_count, 1);
    }

    #[test]
    fn loops_always_in_cotree() {
        let q = Quiver::from_indices(2, &[(0, 0), (0, 1)]);
        let c = fundamental_cycles(&q);
        assert_eq!(c.cotree, vec![0]);
        assert_eq!(c.spanning_tree, vec![1]);
    }

    #[test]
    fn tree_has_no_cycles() {
        let q = Quiver::from_indices(4, &[(0, 1), (2, 1), (2, 3)]);
        assert_eq!(fundamental_cycles(&q).cycle_count, 0);
    }
}
