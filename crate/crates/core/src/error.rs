use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("operation `{op}` requires a 2-dimensional polytope, got dimension {dim}")]
    NotTwoDimensional { op: &'static str, dim: &'static str },

    #[error("operation `{0}` is not defined for the empty polytope")]
    EmptyPolytope(&'static str),

    #[error("matrix is not unimodular (determinant {det})")]
    NotUnimodular { det: String },

    #[error("adjunction step count {steps} does not equal floor(level) = {floor_level} (level {level})")]
    StepCountMismatch {
        steps: usize,
        floor_level: String,
        level: String,
    },

    #[error("endgame classification failed: {0}")]
    Classification(String),

    #[error("lemma step check not applicable: adjoint polytope is {dim}-dimensional")]
    NotApplicable { dim: &'static str },

    #[error("divisor classes live in different lattices (rank {0} vs {1})")]
    RankMismatch(usize, usize),

    #[error("H(H+K) = {0} is odd; genus formula does not yield an integer")]
    OddGenusProduct(String),

    #[error("cannot contract E_{index}: E·H = {pairing} is nonzero")]
    ContractNotOrthogonal { index: usize, pairing: String },

    #[error("class is not a root (need r² = -2 and r·K = 0, got r² = {self_int}, r·K = {k_pairing})")]
    NotARoot { self_int: String, k_pairing: String },

    #[error("invalid exceptional index {0} for lattice of rank {1}")]
    BadExceptionalIndex(usize, usize),

    #[error("malformed input: {0}")]
    Parse(String),

    #[error("box size {0} out of supported range 1..=6")]
    BoxSize(u32),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
