//! Exact-arithmetic analysis of eccentricity matrices of bi-block graphs.
//!
//! The library builds eccentricity matrices, decomposes graphs into blocks,
//! decides membership in the bi-block class with at most two cut vertices
//! per block, constructs the associated tree of such a graph, derives
//! centers and inertia structurally, and checks everything against exact
//! linear algebra over arbitrary-precision integers.
//!
//! Subsystems:
//! - [`graph`]: edge-list parsing, BFS distances, eccentricity profiles;
//! - [`blocks`]: biconnected components, cut vertices, class membership;
//! - [`eccmatrix`]: the eccentricity matrix and its support graph;
//! - [`assoc_tree`]: the associated tree, center theorems, eccentricity
//!   lemma;
//! - [`spectral`]: division-free characteristic polynomials, exact inertia,
//!   Jacobi eigenvalues;
//! - [`theorem`]: structural partitions, predicted inertia, symmetry and
//!   irreducibility checks;
//! - [`gen`]: seeded random generators and independent brute-force oracles.

pub mod assoc_tree;
pub mod blocks;
pub mod eccmatrix;
mod error;
pub mod gen;
pub mod graph;
pub mod spectral;
pub mod theorem;

pub use error::{Error, Result};

pub use assoc_tree::{
    build_tg, center_of_g, ecc_by_lemma, verify_tg, AssocTree, CenterCase, CenterInfo,
    SelectReason, TgCheck, TgReport,
};
pub use blocks::{
    classify, classify_decomposition, decompose, recognize_bipartite_block, Block,
    BlockDecomposition, BlockKind, ClassKind, ClassWitness, GraphClass,
};
pub use eccmatrix::{
    eccentricity_matrix, eccentricity_matrix_from, is_irreducible, support_graph, EccMatrix,
};
pub use gen::{oracle_distances, oracle_minor_sums, random_class_b, GenParams, Parity, Rng};
pub use graph::{
    all_pairs_distances, ecc_profile, parse_graph, DistanceMatrix, EccProfile, Graph, Vertex,
};
pub use spectral::{
    char_poly, char_poly_ecc, eigenvalues_float, inertia_exact, is_spectrum_symmetric,
    rank_exact, IntPolynomial, Inertia, Spectrum,
};
pub use theorem::{
    build_partition, check_symmetry_theorem, diametrically_distinguished, predicted_inertia,
    predicted_inertia_from, reflection_cells, verify_block_structure, Cell, DDReport,
    InertiaPrediction, PartitionCase, StructCheck, StructWitness, StructureReport,
    SymmetryReport, UPartition,
};

/// Dense square matrix over machine integers.
pub type IntMatrix = spectral::SquareMatrix<i64>;
/// Dense square matrix over arbitrary-precision integers (the exact path).
pub type BigIntMatrix = spectral::SquareMatrix<num_bigint::BigInt>;
/// Dense square matrix over `f64` (the reporting path).
pub type FloatMatrix = spectral::SquareMatrix<f64>;
