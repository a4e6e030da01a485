use crate::brauer::{brauer_algebra, BrauerPresentation};
use crate::graph::{RibbonError, RibbonGraph};
use gentle_bases::alt_basis;
use gentle_core::{validate_gentle, Field, GentlePresentation, Quiver};

/// A choice of one angle per ribbon vertex and the gentle algebra obtained
/// by deleting the corresponding Brauer-quiver arrows.
#[derive(Clone, Debug)]
pub struct Cut {
    /// Per ribbon vertex, the rotation index of the cut angle (`None` at
    /// vertices without angles).
    pub angles: Vec<Option<usize>>,
    /// Names of the deleted arrows.
    pub removed: Vec<String>,
    pub algebra: GentlePresentation,
}

/// Lexicographic enumeration of admissible cuts.
pub struct AdmissibleCuts<'a> {
    gamma: &'a RibbonGraph,
    brauer: BrauerPresentation,
    /// Arrows at each ribbon vertex, in rotation order.
    choices: Vec<Vec<usize>>,
    counter: Option<Vec<usize>>,
}

pub fn admissible_cuts(gamma: &RibbonGraph) -> AdmissibleCuts<'_> {
    let brauer = brauer_algebra(gamma);
    let mut choices = vec![Vec::new(); gamma.vertex_count()];
    for (arrow, &h) in brauer.arrow_angles.iter().enumerate() {
        choices[gamma.vertex_of(h)].push(arrow);
    }
    let counter = Some(vec![0; gamma.vertex_count()]);
    AdmissibleCuts { gamma, brauer, choices, counter }
}

impl AdmissibleCuts<'_> {
    /// Number of cuts the iterator yields in total.
    pub fn count_all(&self) -> usize {
        self.choices.iter().map(|c| c.len().max(1)).product()
    }

    pub fn brauer(&self) -> &BrauerPresentation {
        &self.brauer
    }

    fn build(&self, digits: &[usize]) -> Cut {
        let gamma = self.gamma;
        let b = &self.brauer;
        let removed: Vec<usize> =
            self.choices.iter().zip(digits).filter_map(|(c, &d)| c.get(d).copied()).collect();
        let kept: Vec<usize> = (0..b.quiver.arrow_count()).filter(|a| !removed.contains(a)).collect();
        let arrows: Vec<(String, String, String)> = kept
            .iter()
            .map(|&a| {
                let x = b.quiver.arrow(a);
                (x.name.clone(), b.quiver.vertex_name(x.source).to_string(), b.quiver.vertex_name(x.target).to_string())
            })
            .collect();
        let quiver = Quiver::new(b.quiver.vertex_names(), &arrows).expect("subquiver of the Brauer quiver");
        let mut relations = Vec::new();
        for (i, &x) in kept.iter().enumerate() {
            for (j, &y) in kept.iter().enumerate() {
                let composable = b.quiver.arrow(x).target == b.quiver.arrow(y).source;
                if composable && gamma.successor(b.arrow_angles[x]) != b.arrow_angles[y] {
                    relations.push((i, j));
                }
            }
        }
        let algebra = validate_gentle(quiver, &relations).expect("an admissible cut is gentle");
        let angles = self
            .choices
            .iter()
            .zip(digits)
            .map(|(c, &d)| c.get(d).map(|&a| gamma.position_of(b.arrow_angles[a])))
            .collect();
        Cut { angles, removed: removed.iter().map(|&a| b.quiver.arrow(a).name.clone()).collect(), algebra }
    }
}

impl Iterator for AdmissibleCuts<'_> {
    type Item = Cut;

    fn next(&mut self) -> Option<Cut> {
        let digits = self.counter.clone()?;
        let cut = self.build(&digits);
        let mut next = digits;
        let mut i = next.len();
        self.counter = loop {
            if i == 0 {
                break None;
            }
            i -= 1;
            next[i] += 1;
            if next[i] < self.choices[i].len().max(1) {
                break Some(next);
            }
            next[i] = 0;
        };
        Some(cut)
    }
}

/// The first cut, in enumeration order, whose algebra has `Alt = 0`.
pub fn find_alt_free_cut(gamma: &RibbonGraph, field: Field) -> Result<Cut, RibbonError> {
    admissible_cuts(gamma)
        .find(|c| alt_basis(&c.algebra, field).is_empty())
        .ok_or(RibbonError::NoAltFreeCut)
}
