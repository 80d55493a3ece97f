//! Sparse integer polynomials in two families of variables `x_1, x_2, ..`
//! and `y_1, y_2, ..`, with the operators the Grothendieck machinery needs.

mod monomial;
mod ops;
mod poly;

pub use monomial::{Monomial, MAX_X, MAX_Y};
pub use ops::{det, det_mod, divided_difference, h_complete, h_mod, try_divided_difference};
pub use poly::{MultiPoly, Var};
