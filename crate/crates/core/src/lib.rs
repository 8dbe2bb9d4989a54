//! Mixed-graph `A_α` matrices: construction, Hermitian spectra, and
//! verification of closed-form eigenvalue, spread and trace-norm bounds.
//!
//! `A_α^β = αD + (1-α)H^β`, where `D` is the degree matrix of the underlying
//! graph and `H^β` puts `β` on each arc `v → u`, `conj(β)` on its reverse
//! and `1` on undirected edges. The default `β` is `ω = (1 + i√3)/2`.

pub mod bounds;
pub mod eig;
pub mod graph;
pub mod matrix;
pub mod verify;

pub use bounds::{BoundKind, BoundResult, BoundsError, Target, WolkowiczMoments};
pub use eig::{EigenError, Spectrum};
pub use graph::{parse_graph, random_mixed_graph, GraphError, GraphStats, MixedGraph};
pub use matrix::{
    a_alpha_matrix, degree_matrix, hermitian_adjacency, quadratic_form, Alpha, Beta, ComplexVector,
    HermitianMatrix, MatrixError,
};
pub use verify::{
    randomized_suite, sweep_alpha, verify_all, BoundOutcome, BoundReport, Status, SuiteSummary,
    SweepConfig, VerifyError,
};
