//! Exact integer linear algebra: dense matrices and polynomials over `BigInt`.
//!
//! Nothing here rounds or overflows. Determinants use Bareiss elimination and
//! characteristic polynomials use Berkowitz's algorithm, so the two can be
//! cross-checked through `p(0) = det M`.

mod matrix;
mod poly;

pub use matrix::{ones_vector, IntMatrix};
pub use poly::IntPolynomial;
