//! Exact integer points and monomials, the two total orders, pi-evaluation,
//! and input validation.
//!
//! All values are immutable after construction and all operations are pure;
//! arithmetic is checked and panics on overflow rather than wrapping.

mod monomial;
mod point;
mod presentation;

pub use monomial::{grevlex_cmp, Monomial};
pub use point::{class_cmp, Point};
pub use presentation::{Presentation, RawInstance, Warning};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoreError {
    #[error("generator {generator} has a negative entry")]
    NonNegativityViolation { generator: Point },
    #[error("generator {generator} has entry sum != alpha = {alpha}")]
    WrongDegree { generator: Point, alpha: i64 },
    #[error("generator {generator} is listed more than once")]
    DuplicateGenerator { generator: Point },
    #[error("axis generator listed explicitly: {detail}")]
    AxisGenerator { detail: String },
    #[error("bad dimensions: {detail}")]
    BadDimensions { detail: String },
    #[error("point {point} is not graded: entry sum is not a nonnegative multiple of alpha = {alpha}")]
    NotGraded { point: Point, alpha: i64 },
    #[error("points {b} and {c} are not congruent mod {alpha}*Z^d")]
    NotCongruent { b: Point, c: Point, alpha: i64 },
    #[error("point {point} is not in the axis monoid {alpha}*Z+^d")]
    NotInA { point: Point, alpha: i64 },
}
