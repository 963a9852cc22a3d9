//! Djokovic–Winkler classes, semicubes and partial-cube recognition.
//!
//! Recognition compares all edge pairs against the distance form of the
//! relation, takes connected components of the resulting relation graph as
//! candidate classes, and certifies the candidate hypercube labeling by
//! checking Hamming distance against graph distance on every vertex pair.
//! The sweep accepts exactly the partial cubes: if it passes, the labeling
//! is an isometric hypercube embedding; if the graph is a partial cube, the
//! components are the true classes and the labeling is the standard one.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::{all_pairs_distances, first_unreachable, two_color, DistanceMatrix, Graph, GraphError, TwoColoring};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartialCubeError {
    #[error("graph is disconnected (vertex {unreachable} is unreachable from vertex 0)")]
    Disconnected { unreachable: usize },
    #[error("graph is not bipartite (odd cycle of length {})", cycle.len())]
    NotBipartite { cycle: Vec<usize> },
}

/// Whether edges `e = (p, q)` and `f = (r, s)` are in the Djokovic–Winkler
/// relation: `d(p,r) + d(p,s) == d(q,r) + d(q,s)`.
///
/// Both edges must lie in one connected component.
pub fn dw_related(e: (usize, usize), f: (usize, usize), dm: &DistanceMatrix) -> bool {
    let (p, q) = e;
    let (r, s) = f;
    dm.hops(p, r) + dm.hops(p, s) == dm.hops(q, r) + dm.hops(q, s)
}

/// One equivalence class of the relation together with the cut it spans.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DwClass {
    pub id: usize,
    /// Edge indices, ascending.
    pub edges: Vec<usize>,
    /// The side containing the smaller endpoint of the class's first edge.
    pub semicube_a: VertexSet,
    pub semicube_b: VertexSet,
}

impl DwClass {
    pub fn contains_edge(&self, edge: usize) -> bool {
        self.edges.binary_search(&edge).is_ok()
    }

    /// Checks that deleting the class leaves exactly the two semicubes as
    /// components and that every class edge crosses between them.
    pub fn is_valid_cut(&self, g: &Graph) -> bool {
        let crossing = self.edges.iter().all(|&e| {
            let (u, v) = g.edge(e);
            self.semicube_a.contains(u) != self.semicube_a.contains(v)
        });
        if !crossing || self.semicube_a.is_empty() || self.semicube_b.is_empty() {
            return false;
        }
        let start_b = self.semicube_b.iter().next().expect("nonempty");
        let start_a = self.semicube_a.iter().next().expect("nonempty");
        component_without(g, start_a, |e| self.contains_edge(e)) == self.semicube_a
            && component_without(g, start_b, |e| self.contains_edge(e)) == self.semicube_b
    }
}

// Vertices reachable from `start` without using edges for which `removed` holds.
fn component_without(g: &Graph, start: usize, removed: impl Fn(usize) -> bool) -> VertexSet {
    let mut seen = VertexSet::new(g.vertex_count());
    seen.insert(start);
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for &(v, e) in g.incident(u) {
            if !removed(e) && !seen.contains(v) {
                seen.insert(v);
                queue.push_back(v);
            }
        }
    }
    seen
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

fn check_preconditions(g: &Graph) -> Result<TwoColoring, PartialCubeError> {
    if let Some(unreachable) = first_unreachable(g) {
        return Err(PartialCubeError::Disconnected { unreachable });
    }
    two_color(g).map_err(|e| match e {
        GraphError::NotBipartite { cycle } => PartialCubeError::NotBipartite { cycle },
        other => unreachable!("two_color only fails on odd cycles: {other}"),
    })
}

/// Groups the edges into relation classes and computes their semicubes.
///
/// Classes are the connected components of the relation graph on edges,
/// listed by ascending minimum edge index. The graph must be connected and
/// bipartite. On a graph that is not a partial cube the result is still
/// well defined, but some class fails [`DwClass::is_valid_cut`] or the
/// labeling built from the classes fails the isometry sweep.
pub fn compute_dw_classes(g: &Graph, dm: &DistanceMatrix) -> Result<Vec<DwClass>, PartialCubeError> {
    check_preconditions(g)?;
    Ok(classes_unchecked(g, dm))
}

fn classes_unchecked(g: &Graph, dm: &DistanceMatrix) -> Vec<DwClass> {
    let m = g.edge_count();
    let edges = g.edges();
    let mut sets = DisjointSets::new(m);
    for i in 0..m {
        for j in (i + 1)..m {
            if sets.find(i) != sets.find(j) && dw_related(edges[i], edges[j], dm) {
                sets.union(i, j);
            }
        }
    }

    // Roots are minimum edge indices, so scanning edges in order yields
    // classes in ascending order of their first edge.
    let mut class_of_root = vec![usize::MAX; m];
    let mut members: Vec<Vec<usize>> = Vec::new();
    for e in 0..m {
        let root = sets.find(e);
        if class_of_root[root] == usize::MAX {
            class_of_root[root] = members.len();
            members.push(Vec::new());
        }
        members[class_of_root[root]].push(e);
    }

    members
        .into_iter()
        .enumerate()
        .map(|(id, class_edges)| {
            let (start, _) = g.edge(class_edges[0]);
            let semicube_a = component_without(g, start, |e| class_edges.binary_search(&e).is_ok());
            let semicube_b = semicube_a.complement();
            DwClass {
                id,
                edges: class_edges,
                semicube_a,
                semicube_b,
            }
        })
        .collect()
}

/// Per-vertex bit vectors, one bit per class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypercubeLabeling {
    bits: Vec<Vec<bool>>,
}

impl HypercubeLabeling {
    pub fn bits(&self, v: usize) -> &[bool] {
        &self.bits[v]
    }

    pub fn dimension(&self) -> usize {
        self.bits.first().map_or(0, Vec::len)
    }

    pub fn vertex_count(&self) -> usize {
        self.bits.len()
    }

    pub fn hamming(&self, u: usize, v: usize) -> usize {
        self.bits[u].iter().zip(&self.bits[v]).filter(|(a, b)| a != b).count()
    }
}

/// Bit `i` of vertex `w` is 0 iff `w` lies on the same side of class `i` as `base`.
pub fn hypercube_label(g: &Graph, classes: &[DwClass], base: usize) -> HypercubeLabeling {
    let bits = (0..g.vertex_count())
        .map(|w| {
            classes
                .iter()
                .map(|c| c.semicube_a.contains(w) != c.semicube_a.contains(base))
                .collect()
        })
        .collect();
    HypercubeLabeling { bits }
}

/// A recognized partial cube with everything derived along the way.
#[derive(Debug, Clone)]
pub struct PartialCube {
    pub distances: DistanceMatrix,
    pub coloring: TwoColoring,
    pub classes: Vec<DwClass>,
    /// Labeling based at vertex 0.
    pub labeling: HypercubeLabeling,
}

/// Why a connected graph is not a partial cube.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartialCubeWitness {
    OddCycle(Vec<usize>),
    /// A vertex pair whose labels are not at Hamming distance equal to
    /// their graph distance.
    DistanceMismatch {
        u: usize,
        v: usize,
        graph_distance: usize,
        hamming_distance: usize,
    },
}

#[derive(Debug, Clone)]
pub enum PartialCubeVerdict {
    Yes(PartialCube),
    No(PartialCubeWitness),
}

impl PartialCubeVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, PartialCubeVerdict::Yes(_))
    }
}

/// Decides whether a connected graph is a partial cube.
pub fn is_partial_cube(g: &Graph) -> Result<PartialCubeVerdict, PartialCubeError> {
    let coloring = match check_preconditions(g) {
        Ok(c) => c,
        Err(PartialCubeError::NotBipartite { cycle }) => {
            return Ok(PartialCubeVerdict::No(PartialCubeWitness::OddCycle(cycle)))
        }
        Err(e) => return Err(e),
    };
    let distances = all_pairs_distances(g);
    let classes = classes_unchecked(g, &distances);
    let labeling = hypercube_label(g, &classes, 0);

    let n = g.vertex_count();
    for u in 0..n {
        for v in (u + 1)..n {
            let graph_distance = distances.hops(u, v);
            let hamming_distance = labeling.hamming(u, v);
            if graph_distance != hamming_distance {
                return Ok(PartialCubeVerdict::No(PartialCubeWitness::DistanceMismatch {
                    u,
                    v,
                    graph_distance,
                    hamming_distance,
                }));
            }
        }
    }

    Ok(PartialCubeVerdict::Yes(PartialCube {
        distances,
        coloring,
        classes,
        labeling,
    }))
}
