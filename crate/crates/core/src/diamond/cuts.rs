use thiserror::Error;

use crate::graph::{Graph, TwoColoring};
use crate::partial_cube::DwClass;
use crate::vertex_set::VertexSet;

/// A relation class's cut with its sides named by color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedCut {
    pub class_id: usize,
    /// The side holding the white endpoint of every spanning edge.
    pub white_side: VertexSet,
    pub black_side: VertexSet,
}

/// Two spanning edges of one class whose white endpoints lie on opposite
/// sides of the cut.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cut of class {class_id} is incoherent: edges {first_edge:?} and {conflicting_edge:?} have white endpoints on opposite sides")]
pub struct IncoherentCut {
    pub class_id: usize,
    pub first_edge: (usize, usize),
    pub conflicting_edge: (usize, usize),
}

/// Orients every class so that its white side contains the white endpoints
/// of its spanning edges, failing on the first class where no such side
/// exists.
pub fn orient_cuts(g: &Graph, classes: &[DwClass], coloring: &TwoColoring) -> Result<Vec<OrientedCut>, IncoherentCut> {
    classes.iter().map(|class| orient_one(g, class, coloring)).collect()
}

fn orient_one(g: &Graph, class: &DwClass, coloring: &TwoColoring) -> Result<OrientedCut, IncoherentCut> {
    let white_end = |e: usize| {
        let (u, v) = g.edge(e);
        if coloring.is_white(u) {
            u
        } else {
            v
        }
    };
    let first = class.edges[0];
    let white_in_a = class.semicube_a.contains(white_end(first));
    for &e in &class.edges[1..] {
        if class.semicube_a.contains(white_end(e)) != white_in_a {
            return Err(IncoherentCut {
                class_id: class.id,
                first_edge: g.edge(first),
                conflicting_edge: g.edge(e),
            });
        }
    }
    let (white_side, black_side) = if white_in_a {
        (class.semicube_a.clone(), class.semicube_b.clone())
    } else {
        (class.semicube_b.clone(), class.semicube_a.clone())
    };
    Ok(OrientedCut {
        class_id: class.id,
        white_side,
        black_side,
    })
}

/// Strict inclusion order on the white sides of oriented cuts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutPoset {
    below: Vec<Vec<bool>>,
}

impl CutPoset {
    pub fn from_matrix(below: Vec<Vec<bool>>) -> Self {
        CutPoset { below }
    }

    pub fn len(&self) -> usize {
        self.below.len()
    }

    pub fn is_empty(&self) -> bool {
        self.below.is_empty()
    }

    /// True iff cut `i` lies strictly below cut `j`.
    pub fn below(&self, i: usize, j: usize) -> bool {
        self.below[i][j]
    }

    pub fn matrix(&self) -> &[Vec<bool>] {
        &self.below
    }

    pub fn transpose(&self) -> CutPoset {
        let k = self.len();
        CutPoset {
            below: (0..k).map(|i| (0..k).map(|j| self.below[j][i]).collect()).collect(),
        }
    }

    pub fn is_antichain(&self) -> bool {
        self.below.iter().flatten().all(|&b| !b)
    }

    /// Irreflexive, antisymmetric and transitive.
    pub fn is_strict_order(&self) -> bool {
        let k = self.len();
        (0..k).all(|i| !self.below[i][i])
            && (0..k).all(|i| (0..k).all(|j| !(self.below[i][j] && self.below[j][i])))
            && (0..k)
                .all(|i| (0..k).all(|j| !self.below[i][j] || (0..k).all(|l| !self.below[j][l] || self.below[i][l])))
    }
}

pub fn cut_poset(cuts: &[OrientedCut]) -> CutPoset {
    let below = cuts
        .iter()
        .enumerate()
        .map(|(i, a)| {
            cuts.iter()
                .enumerate()
                .map(|(j, b)| i != j && a.white_side.is_subset(&b.white_side))
                .collect()
        })
        .collect();
    CutPoset { below }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, path};
    use crate::graph::{all_pairs_distances, two_color};
    use crate::partial_cube::compute_dw_classes;

    fn oriented(g: &Graph) -> Result<Vec<OrientedCut>, IncoherentCut> {
        let classes = compute_dw_classes(g, &all_pairs_distances(g)).unwrap();
        orient_cuts(g, &classes, &two_color(g).unwrap())
    }

    #[test]
    fn hexagon_cuts_are_coherent() {
        let g = cycle(6);
        let cuts = oriented(&g).unwrap();
        // class of edges (0,1) and (3,4): white endpoints 0 and 4
        assert_eq!(cuts[0].white_side.to_vec(), vec![0, 4, 5]);
        assert_eq!(cuts[0].black_side.to_vec(), vec![1, 2, 3]);
        for cut in &cuts {
            for &(u, v) in g.edges() {
                let spans = cut.white_side.contains(u) != cut.white_side.contains(v);
                if spans {
                    let white = if u % 2 == 0 { u } else { v };
                    assert!(cut.white_side.contains(white));
                }
            }
        }
    }

    #[test]
    fn square_cut_is_incoherent() {
        let err = oriented(&cycle(4)).unwrap_err();
        assert_eq!(err.class_id, 0);
        assert_eq!(err.first_edge, (0, 1));
        assert_eq!(err.conflicting_edge, (2, 3));
    }

    #[test]
    fn single_edge_white_side() {
        let g = path(2);
        let cuts = oriented(&g).unwrap();
        assert_eq!(cuts[0].white_side.to_vec(), vec![0]);
    }

    #[test]
    fn poset_examples() {
        let hex = cut_poset(&oriented(&cycle(6)).unwrap());
        assert_eq!(hex.len(), 3);
        assert!(hex.is_antichain());

        let p3 = oriented(&path(3)).unwrap();
        assert_eq!(p3[0].white_side.to_vec(), vec![0]);
        assert_eq!(p3[1].white_side.to_vec(), vec![2]);
        assert!(cut_poset(&p3).is_antichain());

        let p5 = oriented(&path(5)).unwrap();
        let poset = cut_poset(&p5);
        assert_eq!(p5[0].white_side.to_vec(), vec![0]);
        assert_eq!(p5[2].white_side.to_vec(), vec![0, 1, 2]);
        assert!(poset.below(0, 2));
        assert!(poset.below(3, 1));
        assert!(!poset.below(0, 1));
        assert!(poset.is_strict_order());
    }
}
