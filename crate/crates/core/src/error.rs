use num_bigint::BigInt;
use thiserror::Error;

/// Errors shared across the lattice, cone and scroll modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("gram matrix is not symmetric: entries ({0},{1}) and ({1},{0}) differ", .row + 1, .col + 1)]
    AsymmetricGram { row: usize, col: usize },
    #[error("gram matrix is not square: row {} has {found} entries, expected {expected}", .row + 1)]
    RaggedGram {
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("label count {found} does not match rank {rank}")]
    LabelMismatch { rank: usize, found: usize },
    #[error("lattice flagged even but diagonal entry ({0},{0}) = {value} is odd", .index + 1)]
    OddDiagonal { index: usize, value: BigInt },
    #[error("operation requires a nondegenerate lattice (determinant is zero)")]
    DegenerateLattice,
    #[error("operation requires an even lattice")]
    OddLattice,
    #[error("vectors live in different lattices")]
    HostMismatch,
    #[error("coordinate vector has length {found}, host rank is {rank}")]
    LengthMismatch { rank: usize, found: usize },
    #[error("the zero vector is not allowed here")]
    ZeroVector,
    #[error("vector is not primitive (content {content})")]
    NotPrimitive { content: BigInt },
    #[error("divisibility profile has length {found}, lattice rank is {rank}")]
    ProfileLength { rank: usize, found: usize },
    #[error("profile entry d_{} = {divisor} does not divide gram entry ({},{}) = {entry}", .index + 1, .index + 1, .col + 1)]
    ProfileInconsistent {
        index: usize,
        col: usize,
        divisor: BigInt,
        entry: BigInt,
    },
    #[error("divisibility {div} is outside the allowed set {{1, 2}}")]
    DivisibilityOutOfRange { div: BigInt },
    #[error("unknown standard lattice; rank1(k) requires a nonzero even k, got {0}")]
    InvalidRankOne(BigInt),
    #[error("unknown preset `{name}`; known presets: {registry}")]
    UnknownPreset { name: String, registry: String },
    #[error("rank-2 configuration must have signature (1,1), got ({0},{1})", .pos, .neg)]
    NotHyperbolic { pos: usize, neg: usize },
    #[error("polarization must have positive square, got {square}")]
    NonPositivePolarization { square: BigInt },
    #[error("vector is not in the positive halfspace: (v, g) = {pairing}")]
    OutsideHalfspace { pairing: BigInt },
    #[error("vector must have positive square, got {square}")]
    NonPositiveSquare { square: BigInt },
    #[error("result is unstable at bound {bound}: recomputing at bound {doubled} changes the answer; increase --bound")]
    Unstable { bound: u64, doubled: u64 },
    #[error("reflection word exceeded the iteration cap {cap}: {partial_len} reflections applied so far, currently at {at}")]
    IterationCap {
        cap: u64,
        partial_len: usize,
        at: String,
    },
    #[error("reflection class must have square -2, got {square}")]
    NotMinusTwo { square: BigInt },
    #[error("the pairing system has no integral solution")]
    NonIntegralSolution,
    #[error("nodal classes are linearly dependent")]
    DependentNodalPair,
    #[error("discriminant {disc} is not admissible: need d > 6 and d congruent to 0 or 2 mod 6")]
    InadmissibleDiscriminant { disc: BigInt },
    #[error("degree formula requires delta = (n^2 - 6n + 4 - 2(R,R))/4 to be a nonnegative integer, got {value}")]
    InvalidDelta { value: String },
    #[error("refusing to compute: the degree formula holds only for scrolls that are not cones and have isolated singularities; pass --assume-not-cone and --assume-isolated to assert both")]
    MissingAssumptions,
    #[error("degree formula gives a nonpositive value {value}; no such parametrization exists")]
    NonPositiveDegree { value: BigInt },
    #[error("k3 gram must be even with signature (1, rank-1)")]
    InvalidK3Gram,
    #[error("riemann-roch requires an even square, got {0}")]
    OddSquare(BigInt),
    #[error("n must be at least {min}, got {got}")]
    DegreeTooSmall { min: u64, got: u64 },
    #[error("preset `{name}` does not support cone computations: {reason}")]
    NotAConePreset { name: String, reason: String },
    #[error("could not parse lattice file: {0}")]
    LatticeFile(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
