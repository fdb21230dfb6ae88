//! Exact analysis of linear codes over finite fields, oriented around the
//! code's diameter (its maximum codeword weight): floor-sum length bounds
//! and their consequences, classical comparisons, the code families that
//! make the bounds tight, and an executable greedy certificate that
//! re-derives the floor-sum bound for any concrete code.
//!
//! All bound arithmetic is exact — arbitrary-precision integers and
//! rationals, never floating point.

pub mod gf;
pub mod codes;
pub mod constructions;
pub mod matrix;

pub use gf::{Field, FieldElement, FieldError, FieldSpec};
pub use matrix::{inner_product, projective_point_count, projective_points, MatrixError, MatrixGF};
