//! Recognition of isometric subgraphs of generalized diamond graphs, the
//! inclusion order on their oriented cuts, and embeddings built from it.
//!
//! A connected partial cube embeds isometrically into some generalized
//! diamond exactly when every relation class spans a coherent cut. The
//! minimum dimension of such a diamond is one less than the width of the
//! inclusion order on the white sides of those cuts, and any chain
//! decomposition of that order yields an embedding with one coordinate per
//! chain.

mod chains;
mod cuts;
mod embedding;

pub use chains::{poset_width_and_chains, ChainDecomposition};
pub use cuts::{cut_poset, orient_cuts, CutPoset, IncoherentCut, OrientedCut};
pub use embedding::{chain_embedding, direct_embedding, verify_embedding, DiamondEmbedding, EmbeddingViolation};

use thiserror::Error;

use crate::graph::{Graph, TwoColoring};
use crate::partial_cube::{is_partial_cube, PartialCube, PartialCubeError, PartialCubeVerdict, PartialCubeWitness};

/// The first reason found why a graph has no isometric diamond embedding.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Obstruction {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph is disconnected (vertex {unreachable} is unreachable from vertex 0)")]
    Disconnected { unreachable: usize },
    #[error("graph is not bipartite (odd cycle {cycle:?})")]
    OddCycle { cycle: Vec<usize> },
    #[error("graph is not a partial cube: vertices {u} and {v} are at distance {graph_distance} but their labels differ in {hamming_distance} bits")]
    NotPartialCube {
        u: usize,
        v: usize,
        graph_distance: usize,
        hamming_distance: usize,
    },
    #[error(transparent)]
    IncoherentCut(#[from] IncoherentCut),
}

impl Obstruction {
    /// Short machine-readable tag used in certificates.
    pub fn reason(&self) -> &'static str {
        match self {
            Obstruction::EmptyGraph => "empty_graph",
            Obstruction::Disconnected { .. } => "disconnected",
            Obstruction::OddCycle { .. } => "odd_cycle",
            Obstruction::NotPartialCube { .. } => "not_partial_cube",
            Obstruction::IncoherentCut(_) => "incoherent_cut",
        }
    }
}

/// Everything derived while recognizing an isometric diamond subgraph.
#[derive(Debug, Clone)]
pub struct DiamondStructure {
    pub partial_cube: PartialCube,
    /// The coloring the cuts are oriented by.
    pub coloring: TwoColoring,
    /// One oriented cut per relation class, indexed by class id.
    pub cuts: Vec<OrientedCut>,
}

impl DiamondStructure {
    /// Re-orients the cuts under another proper coloring of the same graph.
    pub fn with_coloring(&self, g: &Graph, coloring: TwoColoring) -> Result<DiamondStructure, IncoherentCut> {
        let cuts = orient_cuts(g, &self.partial_cube.classes, &coloring)?;
        Ok(DiamondStructure {
            partial_cube: self.partial_cube.clone(),
            coloring,
            cuts,
        })
    }

    pub fn poset(&self) -> CutPoset {
        cut_poset(&self.cuts)
    }

    pub fn class_count(&self) -> usize {
        self.cuts.len()
    }

    pub fn width(&self) -> usize {
        poset_width_and_chains(&self.poset()).0
    }

    /// Minimum dimension; 0 for a single vertex.
    pub fn dimension(&self) -> usize {
        self.width().saturating_sub(1)
    }
}

/// Decides whether `g` is an isometric subgraph of a generalized diamond
/// graph, returning the oriented cut structure or the first obstruction.
pub fn is_isometric_diamond_subgraph(g: &Graph) -> Result<DiamondStructure, Obstruction> {
    if g.vertex_count() == 0 {
        return Err(Obstruction::EmptyGraph);
    }
    let partial_cube = match is_partial_cube(g) {
        Ok(PartialCubeVerdict::Yes(pc)) => pc,
        Ok(PartialCubeVerdict::No(PartialCubeWitness::OddCycle(cycle))) => return Err(Obstruction::OddCycle { cycle }),
        Ok(PartialCubeVerdict::No(PartialCubeWitness::DistanceMismatch {
            u,
            v,
            graph_distance,
            hamming_distance,
        })) => {
            return Err(Obstruction::NotPartialCube {
                u,
                v,
                graph_distance,
                hamming_distance,
            })
        }
        Err(PartialCubeError::Disconnected { unreachable }) => return Err(Obstruction::Disconnected { unreachable }),
        Err(PartialCubeError::NotBipartite { cycle }) => return Err(Obstruction::OddCycle { cycle }),
    };
    let coloring = partial_cube.coloring.clone();
    let cuts = orient_cuts(g, &partial_cube.classes, &coloring)?;
    Ok(DiamondStructure {
        partial_cube,
        coloring,
        cuts,
    })
}

/// Minimum dimension of a generalized diamond graph containing `g` isometrically.
pub fn diamond_dimension(g: &Graph) -> Result<usize, Obstruction> {
    Ok(is_isometric_diamond_subgraph(g)?.dimension())
}

/// Embedding with one coordinate per relation class (plus one zero pad).
pub fn embed_direct(g: &Graph) -> Result<DiamondEmbedding, Obstruction> {
    let structure = is_isometric_diamond_subgraph(g)?;
    Ok(direct_embedding(g, &structure))
}

/// Embedding of minimum dimension, one coordinate per chain of an optimal
/// chain decomposition of the cut order.
pub fn embed_minimum(g: &Graph) -> Result<DiamondEmbedding, Obstruction> {
    let structure = is_isometric_diamond_subgraph(g)?;
    let (_, chains) = poset_width_and_chains(&structure.poset());
    Ok(chain_embedding(g, &structure, &chains))
}
