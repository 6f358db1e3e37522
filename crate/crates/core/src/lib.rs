//! Vietoris-Rips complexes of hypercubes: bounds, homology, resolutions and
//! cohomology certificates.

pub mod bitset;
pub mod bounds;
pub mod certificates;
pub mod chain;
pub mod cli;
pub mod complex;
pub mod error;
pub mod homology;
pub mod hypercube;
pub mod koszul;
pub mod linalg;
pub mod taylor;

pub use bitset::VertexSet;
pub use chain::{Chain, Cochain, Ring};
pub use complex::{ComplexView, CrossPolytopePairs, GhostComplex, Simplex, SimplicialComplex};
pub use error::{Error, Result};
pub use hypercube::{Params, SubcubeEmbedding, Vertex};
