//! Exact McKay-correspondence invariants for finite group actions on
//! cotangent bundles.
//!
//! Everything is computed over cyclotomic fields with arbitrary-precision
//! rationals; no floating point is used anywhere.
//!
//! * [`cyclotomic`] and [`matrix`]: field and matrix arithmetic.
//! * [`matgroup`]: closure, conjugacy and projective classes, eigenvalue
//!   data and weights.
//! * [`epoly`]: E-polynomials in `u`, `v`.
//! * [`mckay`]: orbifold E-functions and Hodge numbers of symplectic
//!   resolutions of `C^{2n}/G` and `T*Pⁿ/G`.
//! * [`criteria`]: necessary conditions for symplectic resolutions and the
//!   smooth-quotient test.
//! * [`series`] and [`hilbcurve`]: Poincaré series of `Hilbⁿ(T*Σ)`.

pub mod catalog;
pub mod cli;
pub mod criteria;
pub mod cyclotomic;
pub mod epoly;
pub mod group_input;
pub mod hilbcurve;
pub mod matgroup;
pub mod matrix;
pub mod mckay;
pub mod series;

pub use cyclotomic::Cyclotomic;
pub use epoly::EPoly;
pub use matgroup::MatrixGroup;
pub use matrix::CycMatrix;
pub use series::{Partition, QSeries, TPoly};
