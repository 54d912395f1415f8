//! Exact-arithmetic toolkit for nested-Bethe-ansatz states in gl(m|n)-invariant
//! models: scalar products via the bipartition sum formula, highest coefficients
//! by recursion, Gaudin matrices and their exact determinants, the on-shell norm
//! as an exact regulator limit, and a damped-Newton solver for Bethe equations.
//!
//! All core math is generic over a scalar field ([`scalar::Scalar`]): exact
//! rationals, univariate rational functions in a regulator `eps`, and complex
//! floats. Identities (norm = prefactor * det G, residue formulas, Korepin
//! criteria) are checked with zero tolerance on rational-backed fields.

pub mod alpha;
pub mod api;
pub mod gaudin;
pub mod hc;
pub mod kernels;
pub mod partitions;
pub mod scalar;
pub mod scalar_product;
pub mod solver;
pub mod verify;

pub use scalar::{EpsRat, Error, Rat, Scalar};
