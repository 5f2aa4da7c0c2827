//! Exact arithmetic: GF(2^m), linearized polynomials and their bilinear forms,
//! symmetric binary matrices, and Gaussian integers.

mod field;
mod gauss;
mod linpoly;
mod symmatrix;

pub use field::{Field, FieldElem, DEFAULT_MODULI};
pub use gauss::GaussInt;
pub(crate) use linpoly::BilinearTables;
pub use linpoly::{bilinear_matrix, LinPoly};
pub use symmatrix::{count_nonsingular_symmetric, nonsingular_symmetric_formula, SymMatrix};
