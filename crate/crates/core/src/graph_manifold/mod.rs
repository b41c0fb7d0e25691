//! The graph manifold `M` covering `W_K`: JSJ graph, gluing matrices,
//! horizontal surfaces and the semi-bundle condition.

pub mod jsj;
pub mod linalg;
pub mod slopes;
pub mod wang_yu;

use num_bigint::BigInt;
use thiserror::Error;

use crate::tangle::LinkClass;

pub use jsj::{build_jsj_graph, gluing_matrices, BasisChange, GluingMatrices, JsjGraph, Mat2};
pub use slopes::{
    compute_boundary_slopes, verify_semibundle, HorizontalSolution, SemibundleReport, SlopePair,
};
pub use wang_yu::{solve_general, solve_wang_yu, wang_yu_matrix, WangYuSolution};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("basis change has determinant {0}, expected 1")]
    BasisDeterminant(BigInt),
    #[error("{0} times its stated inverse is not the identity")]
    InverseMismatch(&'static str),
    #[error("Euler number is zero; there is no horizontal surface to build")]
    ZeroEuler,
    #[error("gluing identifies fibres (c = 0)")]
    FibresMatch,
    #[error("horizontal-surface system is only assembled on the single cover")]
    DoubledGraph,
    #[error("symmetric solution space has dimension {0}, expected 1")]
    KernelDimension(usize),
    #[error("solution has zero hub degree")]
    ZeroHubDegree,
    #[error("{0} sign choices balance the hub slopes, expected exactly one")]
    EpsilonChoice(usize),
    #[error("ẽ = {e_tilde} has the wrong parity for {class:?}")]
    ParityMismatch { class: LinkClass, e_tilde: BigInt },
    #[error("slope on {torus}: table gives {table}, formula gives {formula}")]
    SlopeMismatch {
        torus: &'static str,
        table: String,
        formula: String,
    },
}
