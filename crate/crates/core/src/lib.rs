//! Exact Schubert calculus on `P^{n-1} x Gr_d(n)` and integral certificates
//! for the decomposition `M(SB(A))` into a direct summand of `M(SB_d(B))`.
//!
//! Everything here is exact integer arithmetic. The crate is organised
//! bottom-up:
//!
//! * [`exactmath`]: big integers, Bareiss determinants, binomial and
//!   Vandermonde determinants, degree formulae.
//! * [`partitions`]: partitions, conjugates, box complements, jump sequences.
//! * [`tableaux`]: tableau counts, enumeration oracles and the
//!   Robinson-Schensted counting identity.
//! * [`chow`]: Chow rings of projective spaces and Grassmannians in the
//!   Schubert basis, Pieri products and twisted Schur classes.
//! * [`motives`]: correspondences, composition, rational generators and the
//!   construction of decomposition certificates.
//! * [`poincare`]: Gaussian binomial Poincare polynomials.

pub mod chow;
pub mod error;
pub mod exactmath;
pub mod motives;
pub mod partitions;
pub mod poincare;
pub mod serial;
pub mod tableaux;

pub use chow::{CycleClass, Factor, Monomial, Basis, Space};
pub use error::{Error, Result};
pub use exactmath::IntMatrix;
pub use motives::{Correspondence, DecompositionCertificate, SignCase, Verdict};
pub use num_bigint::BigInt;
pub use partitions::{BoxShape, Partition};
pub use poincare::IntPolynomial;
