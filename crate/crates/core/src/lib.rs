//! Circuits, Graver bases and universal Gröbner bases of toric ideals of
//! graphs.
//!
//! The structural side ([`walk`], [`enumerate`]) classifies and enumerates
//! binomials of closed even walks from the block structure of their
//! supports. The algebraic side ([`algebra`], [`intlinalg`]) recomputes the
//! same sets from the incidence matrix alone (saturation, Buchberger,
//! Lawrence lifting, exact linear programming) so the two can be compared.

pub mod algebra;
pub mod binomial;
pub mod blocks;
pub mod cycles;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod intlinalg;
pub mod order;
pub mod par;
pub mod walk;

pub use binomial::{binomial_of_walk, Binomial, Class};
pub use blocks::{block_decomposition, BlockDecomposition};
pub use cycles::{enumerate_cycles, Cycle};
pub use error::{Error, ErrorClass, Result};
pub use graph::{parse_graph, Graph};
pub use order::TermOrder;
pub use walk::{
    analyze, classify, classify_circuit, in_ugb_structural, is_mixed, is_primitive, pure_block_certificate,
    witness_order, CircuitKind, Classification, WalkAnalysis,
};
