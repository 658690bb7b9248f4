//! Exact linear algebra over prime fields and truncated polynomial rings.

pub mod field;
pub mod matrix;
pub mod truncpoly;

pub use field::{
    check_modulus, is_prime, mod_add, mod_inv, mod_mul, mod_pow, mod_sub, primitive_root,
    reduce_signed, FieldElem, DEFAULT_PRIME,
};
pub use matrix::{complement_rows, Matrix};
pub use truncpoly::TruncPoly;
