//! Exact computation on checkerboard graphs and Aztec diamonds.
//!
//! A checkerboard graph lives on the lattice points of one color class of an
//! m×n board, with edges along the diagonals of the unit cells: `EC` takes the
//! points with x+y even, `OC` the points with x+y odd. The Aztec diamond of
//! order n is `OC_{2n+1,2n+1}`. This crate constructs these graphs (and the
//! bipartite product components they arise from), computes characteristic
//! polynomials over ℤ and ℤ[u,v] with exact arithmetic, counts and factors
//! spanning trees, evaluates the cosine closed forms in extended precision,
//! and proves the conjugate-orbit integrality of the Aztec tree-count factors
//! in cyclotomic integer rings.
//!
//! Module map:
//! - [`graph`] — paths, bipartite graphs, product components, checkerboards,
//!   interior duals.
//! - [`matrix`] — exact dense matrices over a commutative ring; Kronecker
//!   products, fraction-free and GF(2) determinants.
//! - [`bipoly`] — polynomials in u, v with big-integer coefficients.
//! - [`charpoly`] — division-free characteristic polynomials plus a
//!   trace-based oracle.
//! - [`trees`] — spanning-tree counts, generating functions, verification
//!   sweeps.
//! - [`dd`] — double-double floating point.
//! - [`spectral`] — eigenvalue formulas and cosine-product identities.
//! - [`cyclotomic`] — ℤ[ω] arithmetic and the conjugate-orbit factorization.
//! - [`factorize`] — integer factorization for the tree-count outputs.
//! - [`json`] — wire formats used by the CLI.

pub mod bipoly;
pub mod charpoly;
pub mod cyclotomic;
pub mod dd;
pub mod factorize;
pub mod graph;
pub mod json;
pub mod matrix;
pub mod spectral;
pub mod trees;

pub use bipoly::BiPoly;
pub use charpoly::CharPoly;
pub use graph::{checkerboard, path_graph, product_component, BipartiteGraph, Parity, SignedGridGraph};
pub use matrix::Matrix;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Interior duals need at least a 2×2 board.
    #[error("board {m}x{n} has no interior faces (need m, n >= 2)")]
    BoardTooSmall { m: usize, n: usize },

    /// The odd-board closed form is defined only for odd m and n.
    #[error("closed form requires odd board sides, got {m}x{n}")]
    EvenBoardRejected { m: usize, n: usize },

    /// Factor indices for the order-n Aztec product must lie in 1..=n-1.
    #[error("factor index ({j},{k}) out of range for n={n}")]
    FactorIndexOutOfRange { n: u32, j: u32, k: u32 },

    /// Brute-force enumeration refused: too many spanning trees.
    #[error("enumeration refused: ~{estimated} spanning trees exceeds cap {cap}")]
    EnumerationCap { estimated: num_bigint::BigInt, cap: u64 },

    /// Brute-force enumeration refused: edge set too large.
    #[error("enumeration refused: {edges} edges exceeds the 32-edge limit")]
    EnumerationTooManyEdges { edges: usize },

    /// A conjugate-orbit product failed to reduce to a rational integer.
    #[error("orbit product is not rational for n={n}: class {class}")]
    NonRationalOrbit { n: u32, class: String },

    /// Newton's identities produced a non-integer coefficient (internal bug).
    #[error("trace-based characteristic polynomial hit a non-integer at step {step}")]
    NonIntegerNewton { step: usize },

    /// The trace oracle is limited to small dimensions.
    #[error("trace-based characteristic polynomial limited to dim <= {cutoff}, got {dim}")]
    TraceDimTooLarge { dim: usize, cutoff: usize },

    /// Aztec factorizations are capped at desk scale.
    #[error("aztec factorization capped at n <= {cap}, got {n}")]
    AztecCapExceeded { n: u32, cap: u32 },

    /// The assembled orbit factorization disagreed with the exact tree count.
    #[error("factorization total {got} does not match exact count {expected}")]
    CountMismatch { expected: String, got: String },

    /// A reciprocal transform would create negative exponents.
    #[error("reciprocal transform needs {var}-degree >= {required}, got {requested}")]
    NegativeExponent { var: char, requested: u32, required: u32 },

    /// Malformed polynomial JSON.
    #[error("bad polynomial data: {0}")]
    BadPoly(String),

    /// Malformed or inconsistent graph JSON.
    #[error("bad graph data: {0}")]
    BadGraph(String),

    /// Underlying JSON error.
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
