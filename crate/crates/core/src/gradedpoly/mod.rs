//! Homogeneous polynomials, slice bases and the expression parser.

mod monomial;
mod parser;
mod polynomial;

pub use monomial::{basis_size, binomial, monomial_basis, Monomial};
pub use parser::parse_polynomial;
pub use polynomial::{mult_slice_matrix, Polynomial};
