//! Exact plane-curve arithmetic over ℚ(√d): a conic, a nodal cubic, their
//! tangent lines, singular points and flexes.
//!
//! Every computation is exact. Values mixing two different square roots are
//! rejected, since each check lives in a single quadratic field.

mod config;
mod poly;
mod resultant;
mod scalar;
mod univariate;

pub use config::{
    conic_q, cubic_c, family_cubic, verify_persson_configuration, CandidateVerdict, ConfigItem,
    ConfigReport,
};
pub use poly::{
    is_flex, is_singular_at, is_tangent_at, line_contact, tangent_line, Exps, HomogPoly, ProjPoint,
};
pub use resultant::{cubic_discriminant, determinant, sylvester_matrix, sylvester_resultant};
pub use scalar::QuadScalar;
pub use univariate::UniPoly;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("{0} is not a squarefree integer")]
    NotSquarefree(i64),
    #[error("cannot combine values in Q(sqrt {0}) and Q(sqrt {1})")]
    FieldMismatch(i64, i64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("forms of degree {0} and {1} cannot be added")]
    DegreeMismatch(u32, u32),
    #[error("all coordinates are zero")]
    ZeroPoint,
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("point is not on the line")]
    NotOnLine,
    #[error("not a nonzero linear form")]
    NotALine,
    #[error("degree {0} is too low")]
    DegreeTooLow(u32),
    #[error("no variable with index {0}")]
    BadVariable(usize),
    #[error("point is singular")]
    SingularPoint,
    #[error("resultant inputs need positive degree")]
    NonPositiveDegree,
    #[error("both leading coefficients are zero")]
    ZeroLeadingCoefficients,
}

/// Commutative ring with identity. Operations on values that cannot be
/// combined (different field tags, different form degrees) panic.
pub trait Ring: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
}

pub trait Field: Ring {
    /// `None` for zero.
    fn inv(&self) -> Option<Self>;
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}
