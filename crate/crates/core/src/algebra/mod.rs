//! Exact sparse multivariate polynomials over the rationals and univariate
//! rational functions whose only pole is at `z = 1`.

mod poly;
mod ratfunc;

pub use poly::{binomial, coef, coef_to_i64, ratio, Coef, Monomial, Poly, Var};
pub use ratfunc::{format_series, subst_rat, RatFunc};
