//! Braid-group toolkit for iterated exchange moves.
//!
//! * [`braid`]: braid words, permutations, exponent sums.
//! * [`garside`]: left-greedy normal forms, word problem, super summit sets
//!   and the conjugacy decision.
//! * [`exchange`]: presentations `β = AB`, the twist `τ`, `ex^k(β)` and
//!   degeneracy.
//! * [`lamination`]: Dynnikov coordinates, the braid action on curves and
//!   entropy estimates.
//! * [`burau`]: the reduced Burau representation, trace certificates and the
//!   spectral entropy lower bound.

pub mod braid;
pub mod burau;
pub mod error;
pub mod exchange;
pub mod garside;
pub mod lamination;

pub use braid::{BraidWord, Permutation};
pub use error::{Error, Result};
