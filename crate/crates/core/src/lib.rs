pub mod catalog;
pub mod expr;
pub mod field;
pub mod hesse;
pub mod matrix;
pub mod quadratic;
pub mod regularity;
pub mod tensor;

pub use field::{FieldElement, FieldError, FieldSpec};
pub use matrix::{Matrix, Solution};
pub use tensor::{LinearMap, Tensor, Var, Word};
