//! Isometric embeddings of graphs into generalized diamond graphs: the
//! hexagonal tiling, the diamond crystal structure and their analogues in
//! every dimension.
//!
//! The pipeline recognizes partial cubes through the Djokovic–Winkler
//! relation, checks that every relation class spans a coherent cut, orders
//! the oriented cuts by inclusion, and turns a minimum chain decomposition
//! of that order into integer coordinates of minimum dimension.
//!
//! ```
//! use isodiamond::{diamond_dimension, embed_minimum, generators, verify_embedding};
//!
//! let hexagon = generators::cycle(6);
//! assert_eq!(diamond_dimension(&hexagon), Ok(2));
//! let embedding = embed_minimum(&hexagon).unwrap();
//! assert!(verify_embedding(&hexagon, &embedding).is_ok());
//! ```

pub mod certificate;
pub mod cli;
pub mod diamond;
pub mod draw;
pub mod generators;
pub mod graph;
pub mod oracle;
pub mod partial_cube;
pub mod vertex_set;

pub use diamond::{
    cut_poset, diamond_dimension, embed_direct, embed_minimum, is_isometric_diamond_subgraph, orient_cuts,
    poset_width_and_chains, verify_embedding, ChainDecomposition, CutPoset, DiamondEmbedding, DiamondStructure,
    EmbeddingViolation, IncoherentCut, Obstruction, OrientedCut,
};
pub use draw::{emit_svg, project_to_plane, DrawError, DrawingConfig, PlanarPoint};
pub use graph::{
    all_pairs_distances, bfs_distances, check_connected, parse_edge_list, two_color, Color, DistanceMatrix, Graph,
    GraphError, TwoColoring,
};
pub use partial_cube::{
    compute_dw_classes, dw_related, hypercube_label, is_partial_cube, DwClass, HypercubeLabeling, PartialCube,
    PartialCubeVerdict, PartialCubeWitness,
};
pub use vertex_set::VertexSet;
