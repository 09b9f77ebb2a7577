//! Exact-arithmetic toolkit for degenerate special numbers.
//!
//! The crate is organized around a truncated formal power series engine
//! that is generic over its coefficient ring (see [`coeff::Coeff`]). Two
//! rings are used throughout:
//!
//! - [`Rational`]: arbitrary-precision rationals, for classical number
//!   tables and p-adic arithmetic;
//! - [`poly::LambdaPoly`]: univariate polynomials in the deformation
//!   parameter λ with rational coefficients, so that every identity can
//!   be verified symbolically in λ rather than at sampled values.
//!
//! On top of the series engine sit the number-table builders
//! ([`special`]), the degenerate hyperbolic functions ([`hyperbolic`]),
//! the finite-level Volkenborn / fermionic integral simulation
//! ([`padic`]), and the identity verification suite ([`identity`]).

pub mod coeff;
pub mod hyperbolic;
pub mod identity;
pub mod padic;
pub mod poly;
pub mod rational;
pub mod series;
pub mod special;

/// Arbitrary-precision rational number, always in canonical form
/// (reduced, positive denominator).
pub type Rational = num_rational::BigRational;

/// Truncated power series with rational coefficients.
pub type RationalSeries = series::Series<Rational>;

/// Truncated power series whose coefficients are polynomials in λ.
pub type LambdaSeries = series::Series<poly::LambdaPoly>;

pub use coeff::Coeff;
pub use poly::LambdaPoly;
pub use rational::{p_valuation, parse_rational, Valuation};
pub use series::Series;
