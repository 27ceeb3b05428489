//! Classical vector geometry for the 9j/12j semiclassics.
//!
//! Solves the Gram-matrix constraints for the two unknown dot products,
//! realizes the nine vectors, and computes per-branch dihedral angles,
//! triple products and actions.

mod branch;
mod gram;
mod lengths;

use thiserror::Error;

pub use branch::{branch_geometry, solve_branches, BranchGeometry};
pub use gram::{
    gram_det, gram_matrix, physical_roots, quartic_coeffs, realize_vectors, GramData, RootPair,
    VectorConfig,
};
pub use lengths::{quantize_lengths, xy_sum, JLengths, NineLabels};

#[derive(Debug, Error)]
pub enum GeomError {
    #[error("caustic or boundary degeneracy: {0}")]
    Caustic(String),
    #[error("degenerate geometry: {0}")]
    Degenerate(String),
}
