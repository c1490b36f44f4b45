//! Exact arithmetic: ℚ, real quadratic extensions ℚ(√d), 2×2 matrices with
//! their eigen data, and small exact linear-algebra kernels.

pub mod linalg;
pub mod mat2;
pub mod poly;
pub mod quad;
pub mod rat;
pub mod roots;

pub use mat2::{eigen2, mat_pow, EigenData, Mat2, Spectrum};
pub use poly::Poly;
pub use quad::QuadExt;
pub use rat::{int, parse_rat, rat, Rat};
pub use roots::{ratio_is_root_of_unity, RootOfUnity, RouCondition};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("cannot parse rational {0:?}: expected an integer or p/q")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("negative radicand {0}")]
    NegativeRadicand(Rat),
    #[error("values live in different quadratic fields (sqrt({0}) vs sqrt({1}))")]
    RadicandMismatch(String, String),
    #[error("matrix is singular")]
    Singular,
    #[error("expected rational entries")]
    NotRational,
}
