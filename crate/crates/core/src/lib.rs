//! Exact incidence algebra for finite posets.
//!
//! Builds the zeta, Möbius and order-complement matrices of a finite poset
//! over arbitrary-precision integers and checks, with zero tolerance, that
//! the determinant and characteristic polynomial of the order-complement
//! matrix `Z̄ = J − Z` are determined by the poset's chain counts:
//! `det Z̄ = (−1)^{n+1} χ̃(P)`.
//!
//! * [`poset`]: construction, validation, generators and linear extensions.
//! * [`linalg`]: exact integer matrices and polynomials.
//! * [`incidence`]: the poset matrices, Euler characteristics and
//!   [`incidence::verify_theorem`].
//! * [`oracle`]: brute-force chain enumeration used as ground truth.
//! * [`cli`]: the `order-complement` command-line front end.

pub mod cli;
pub mod error;
pub mod incidence;
pub mod linalg;
pub mod oracle;
pub mod poset;

pub use error::{LinalgError, PosetError};
pub use incidence::{ChainCensus, VerificationReport};
pub use linalg::{IntMatrix, IntPolynomial};
pub use poset::{Poset, PosetSpec};
