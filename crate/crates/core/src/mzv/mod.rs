//! Multiple zeta values: shuffle and stuffle products, both regularizations,
//! a per-weight relation harvest that reduces every depth-≤2 value to the
//! basis monomials, and an interval-bounded numerical oracle.

mod lincomb;
pub mod numeric;
mod products;
mod regularize;
mod special;
mod table;

pub use lincomb::{CompositionPoly, LinComb, WordPoly};
pub use numeric::{double_zeta_numeric, numeric_eval, single_zeta_numeric, Interval, NUMERIC_LIMIT};
pub use products::{shuffle, stuffle};
pub use regularize::{shuffle_regularize, stuffle_regularize};
pub use special::{bernoulli, euler_a1, single_zeta, zeta_deg1_closed_form, zeta_even};
pub use table::{ReductionTable, MAX_TABLE_WEIGHT};
