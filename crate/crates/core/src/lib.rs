//! Exact computations with Grothendieck polynomials.
//!
//! * [`shapes`]: partitions, permutations, skew shapes, set-valued tableaux.
//! * [`polyzx`]: sparse integer polynomials in `x_1.., y_1..`, divided
//!   differences, determinants.
//! * [`grothpoly`]: double Grothendieck polynomials, stable limits and
//!   evaluations of `G_lambda` in finitely many variables.
//! * [`gamma`]: the bialgebra spanned by the stable polynomials `G_lambda`.
//! * [`quiver`]: rank conditions and quiver coefficients.
//!
//! Containers are generic over the coefficient ring ([`Coeff`]); the
//! aliases below fix it to `i64`, which is what the algorithms use.

pub mod engine;
pub mod error;
pub mod gamma;
pub mod grothpoly;
pub mod polyzx;
pub mod quiver;
pub mod scalar;
pub mod shapes;

pub use error::{Error, Result};
pub use engine::{CacheSnapshot, Engine, EngineStats, CACHE_VERSION};
pub use gamma::{GammaSeries, LinComb, Tensor2};
pub use polyzx::{Monomial, MultiPoly};
pub use scalar::Coeff;
pub use shapes::{IntSeq, Partition, Permutation, SetValuedTableau, SkewShape, StripKind};

/// Polynomials with machine-word coefficients.
pub type Poly = MultiPoly<i64>;
/// Polynomials with 128-bit coefficients.
pub type WidePoly = MultiPoly<i128>;
/// Polynomials with arbitrary precision coefficients.
pub type BigPoly = MultiPoly<num_bigint::BigInt>;

/// An element `sum a_lambda G_lambda` of the bialgebra.
pub type GammaElement = LinComb<Partition, i64>;
/// An element of the `n`-fold tensor power, keyed by sequences of partitions.
pub type QuiverElement = LinComb<Vec<Partition>, i64>;
