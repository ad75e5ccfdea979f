//! Exact coefficients of Drinfeld associators up to y-degree two.
//!
//! Every coefficient is an exact rational combination of basis zeta
//! monomials over a formal power of `(2πi)⁻¹`.

pub mod arith;
pub mod at;
pub mod error;
pub mod grt;
pub mod half;
pub mod lie;
pub mod linalg;
pub mod mzv;
pub mod scalar;
pub mod series;
pub mod verify;
pub mod word;

pub use arith::Rational;
pub use error::{AlgebraError, AssocError, LinalgError, MzvError, ParseError};
pub use scalar::{Atom, MzvExpr, RenderStyle, Scalar, ZetaMonomial};
pub use half::{Associators, Family};
pub use series::NCSeries;
pub use word::{Composition, Letter, Word};
