//! Exact Schur expansions of `s_τ · (s_{λ/μ} ∘ p_r)` by ribbon tableaux,
//! abacus quotients and a sign-reversing coplactic involution, together with
//! a brute-force monomial oracle and tooling for ribbon-tableau statistics.

pub mod abacus;
pub mod coplactic;
pub mod error;
pub mod frontier;
pub mod partition;
pub mod ribbon;
pub mod symfunc;
pub mod sxp;
pub mod tableaux;

pub use error::{Error, Result};
pub use partition::{Composition, Partition, SignedPermutation, SkewMultiShape, SkewShape};
