//! Exact Lucas polynomials, Lucas atoms, lucanomials and the super and
//! generalized FiboCatalan families, together with an executable check of
//! the identities and integrality claims that connect them.
//!
//! The algebra is generic over its scalar type: [`bigpoly::Poly`] and
//! [`lucas::LucasTable`] take any [`Coefficient`] ring, and
//! [`fib::FibTable`] any [`fib::IntScalar`]. The aliases below fix the
//! arbitrary-precision choices used by the verification layer and the CLI.
//!
//! ```
//! use lucasforge::{LucasCache, Poly2};
//!
//! let cache = LucasCache::default();
//! assert_eq!(cache.lucas_atom(6).unwrap().to_string(), "s^2 + 3*t");
//! let four: Poly2 = "s^3 + 2*s*t".parse().unwrap();
//! assert_eq!(cache.lucas_poly(4).unwrap(), four);
//! ```

pub mod bigpoly;
pub mod fib;
pub mod identities;
pub mod lucas;

pub use bigpoly::{Coefficient, Monomial, ParseError, PolyError};
pub use fib::{IntScalar, NumericError};
pub use lucas::{factorial_quotient_report, LucasError, ValuationReport, ValuationRow};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Bivariate polynomial with arbitrary-precision integer coefficients.
pub type Poly2 = bigpoly::Poly<BigInt>;
/// Bivariate polynomial over the rationals.
pub type RatPoly2 = bigpoly::Poly<BigRational>;
/// Bivariate polynomial with `i64` coefficients; overflows on large inputs.
pub type Poly2I64 = bigpoly::Poly<i64>;

/// Memoized Lucas polynomials, factorials and atoms over [`BigInt`].
pub type LucasCache = lucas::LucasTable<BigInt>;
/// Memoized Fibonacci numbers and factorials over [`BigInt`].
pub type FibCache = fib::FibTable<BigInt>;
/// Fibonacci layer over `i128`; reports overflow instead of wrapping.
pub type FibCache128 = fib::FibTable<i128>;
