use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::chains::ChainDecomposition;
use super::DiamondStructure;
use crate::graph::{all_pairs_distances, Graph};

/// Integer coordinates of every vertex in a generalized diamond graph of
/// dimension `dimension`, as vectors of length `dimension + 1` whose
/// entries sum to 0 or 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiamondEmbedding {
    pub dimension: usize,
    #[serde(rename = "vectors")]
    pub coords: Vec<Vec<i64>>,
}

impl DiamondEmbedding {
    pub fn new(dimension: usize, coords: Vec<Vec<i64>>) -> Self {
        DiamondEmbedding { dimension, coords }
    }

    pub fn vertex_count(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self, v: usize) -> &[i64] {
        &self.coords[v]
    }

    /// The same placement viewed in a higher dimension by appending zero
    /// coordinates. Never lowers the dimension.
    pub fn padded_to(&self, dimension: usize) -> DiamondEmbedding {
        let dimension = dimension.max(self.dimension);
        DiamondEmbedding {
            dimension,
            coords: self
                .coords
                .iter()
                .map(|c| {
                    let mut c = c.clone();
                    c.resize(dimension + 1, 0);
                    c
                })
                .collect(),
        }
    }

    pub fn l1_distance(&self, u: usize, v: usize) -> usize {
        l1(&self.coords[u], &self.coords[v])
    }
}

pub(crate) fn l1(a: &[i64], b: &[i64]) -> usize {
    a.iter().zip(b).map(|(x, y)| x.abs_diff(*y) as usize).sum()
}

/// One coordinate per class, plus a trailing always-zero coordinate.
///
/// Coordinate `i` of `w` is 0 when `w` is on vertex 0's side of cut `i`,
/// +1 when vertex 0 is on the white side and `w` on the black side, and -1
/// in the opposite case.
pub fn direct_embedding(g: &Graph, structure: &DiamondStructure) -> DiamondEmbedding {
    let k = structure.cuts.len();
    let coords = (0..g.vertex_count())
        .map(|w| {
            let mut c: Vec<i64> = structure
                .cuts
                .iter()
                .map(|cut| {
                    let base_white = cut.white_side.contains(0);
                    let w_white = cut.white_side.contains(w);
                    match (base_white, w_white) {
                        (true, false) => 1,
                        (false, true) => -1,
                        _ => 0,
                    }
                })
                .collect();
            c.push(0);
            c
        })
        .collect();
    DiamondEmbedding { dimension: k, coords }
}

/// Embeds with one coordinate per chain; the dimension is one less than the
/// number of chains (zero when there are no chains at all).
///
/// Vertex 0 sits at the origin and coordinates are propagated breadth-first:
/// crossing an edge of a cut in chain `c` from its white endpoint to its
/// black endpoint adds 1 to coordinate `c`, the reverse direction subtracts 1.
pub fn chain_embedding(g: &Graph, structure: &DiamondStructure, chains: &ChainDecomposition) -> DiamondEmbedding {
    let n = g.vertex_count();
    let k = structure.cuts.len();
    let len = chains.len().max(1);
    let chain_of_cut = chains.chain_index(k);

    let mut class_of_edge = vec![usize::MAX; g.edge_count()];
    for class in &structure.partial_cube.classes {
        for &e in &class.edges {
            class_of_edge[e] = class.id;
        }
    }
    // cuts are indexed by class id
    let coloring = &structure.coloring;

    let mut coords: Vec<Option<Vec<i64>>> = vec![None; n];
    if n > 0 {
        coords[0] = Some(vec![0; len]);
        let mut queue = VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            let cu = coords[u].clone().expect("queued vertices are placed");
            for &(v, e) in g.incident(u) {
                if coords[v].is_some() {
                    continue;
                }
                let axis = chain_of_cut[class_of_edge[e]];
                let mut cv = cu.clone();
                cv[axis] += if coloring.is_white(u) { 1 } else { -1 };
                coords[v] = Some(cv);
                queue.push_back(v);
            }
        }
    }

    DiamondEmbedding {
        dimension: len - 1,
        coords: coords.into_iter().map(|c| c.expect("connected graph")).collect(),
    }
}

/// The first broken embedding invariant found by [`verify_embedding`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingViolation {
    #[error("embedding has {found} vectors but the graph has {expected} vertices")]
    VertexCountMismatch { expected: usize, found: usize },
    #[error("vertex {vertex}: vector has length {found}, expected {expected}")]
    WrongLength {
        vertex: usize,
        expected: usize,
        found: usize,
    },
    #[error("vertex {vertex}: coordinate sum {sum} out of range (must be 0 or 1)")]
    SumOutOfRange { vertex: usize, sum: i64 },
    #[error("edge {u}-{v} is not a unit step along one coordinate")]
    NotUnitStep { u: usize, v: usize },
    #[error("vertices {u} and {v} are disconnected")]
    Unreachable { u: usize, v: usize },
    #[error("vertices {u} and {v}: graph distance {graph_distance} but L1 distance {l1_distance}")]
    DistanceMismatch {
        u: usize,
        v: usize,
        graph_distance: usize,
        l1_distance: usize,
    },
}

/// Checks coordinate sums, unit edge steps and all-pairs isometry, in
/// that order.
pub fn verify_embedding(g: &Graph, e: &DiamondEmbedding) -> Result<(), EmbeddingViolation> {
    let n = g.vertex_count();
    if e.coords.len() != n {
        return Err(EmbeddingViolation::VertexCountMismatch {
            expected: n,
            found: e.coords.len(),
        });
    }
    for (vertex, c) in e.coords.iter().enumerate() {
        if c.len() != e.dimension + 1 {
            return Err(EmbeddingViolation::WrongLength {
                vertex,
                expected: e.dimension + 1,
                found: c.len(),
            });
        }
        let sum: i64 = c.iter().sum();
        if sum != 0 && sum != 1 {
            return Err(EmbeddingViolation::SumOutOfRange { vertex, sum });
        }
    }
    for &(u, v) in g.edges() {
        let (a, b) = (&e.coords[u], &e.coords[v]);
        let changed = a.iter().zip(b).filter(|(x, y)| x != y).count();
        if changed != 1 || l1(a, b) != 1 {
            return Err(EmbeddingViolation::NotUnitStep { u, v });
        }
    }
    let dm = all_pairs_distances(g);
    for u in 0..n {
        for v in (u + 1)..n {
            let Some(graph_distance) = dm.get(u, v) else {
                return Err(EmbeddingViolation::Unreachable { u, v });
            };
            let l1_distance = e.l1_distance(u, v);
            if graph_distance != l1_distance {
                return Err(EmbeddingViolation::DistanceMismatch {
                    u,
                    v,
                    graph_distance,
                    l1_distance,
                });
            }
        }
    }
    Ok(())
}
