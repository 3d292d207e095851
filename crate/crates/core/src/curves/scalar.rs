//! Exact numbers `a + b√d` with rational `a`, `b`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::CurveError;

/// `a + b√d` for a squarefree integer `d`. A value with `b = 0` is stored
/// with `d = 1` and combines with values of any field tag.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadScalar {
    d: i64,
    a: BigRational,
    b: BigRational,
}

fn is_squarefree(d: i64) -> bool {
    if d == 0 {
        return false;
    }
    let n = d.unsigned_abs();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p * p) {
            return false;
        }
        p += 1;
    }
    true
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl QuadScalar {
    pub fn new(d: i64, a: BigRational, b: BigRational) -> Result<Self, CurveError> {
        if !is_squarefree(d) {
            return Err(CurveError::NotSquarefree(d));
        }
        if d == 1 {
            return Ok(QuadScalar::rational(a + b));
        }
        Ok(QuadScalar { d, a, b }.canonical())
    }

    pub fn rational(a: BigRational) -> Self {
        QuadScalar {
            d: 1,
            a,
            b: BigRational::zero(),
        }
    }

    pub fn int(n: i64) -> Self {
        QuadScalar::rational(int(n))
    }

    /// `p/q`; panics if `q = 0`.
    pub fn frac(p: i64, q: i64) -> Self {
        QuadScalar::rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// `√d`.
    pub fn sqrt(d: i64) -> Result<Self, CurveError> {
        QuadScalar::new(d, BigRational::zero(), BigRational::one())
    }

    /// `p + q√d` with integer parts.
    pub fn from_ints(d: i64, p: i64, q: i64) -> Result<Self, CurveError> {
        QuadScalar::new(d, int(p), int(q))
    }

    fn canonical(mut self) -> Self {
        if self.b.is_zero() {
            self.d = 1;
        }
        self
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn irrational_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn common_d(&self, other: &Self) -> Result<i64, CurveError> {
        match (self.d, other.d) {
            (1, e) | (e, 1) => Ok(e),
            (e, f) if e == f => Ok(e),
            (e, f) => Err(CurveError::FieldMismatch(e, f)),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, CurveError> {
        let d = self.common_d(other)?;
        Ok(QuadScalar {
            d,
            a: &self.a + &other.a,
            b: &self.b + &other.b,
        }
        .canonical())
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, CurveError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, CurveError> {
        let d = self.common_d(other)?;
        let dd = int(d);
        Ok(QuadScalar {
            d,
            a: &self.a * &other.a + &dd * &self.b * &other.b,
            b: &self.a * &other.b + &self.b * &other.a,
        }
        .canonical())
    }

    /// `(a − b√d)/(a² − d b²)`.
    pub fn checked_inv(&self) -> Result<Self, CurveError> {
        let norm = self.norm();
        if norm.is_zero() {
            return Err(CurveError::DivisionByZero);
        }
        Ok(QuadScalar {
            d: self.d,
            a: &self.a / &norm,
            b: -&self.b / &norm,
        }
        .canonical())
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, CurveError> {
        self.checked_mul(&other.checked_inv()?)
    }

    pub fn conjugate(&self) -> Self {
        QuadScalar {
            d: self.d,
            a: self.a.clone(),
            b: -&self.b,
        }
    }

    /// `a² − d b²`; zero only for zero when `d` is squarefree and not 1.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - int(self.d) * &self.b * &self.b
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(QuadScalar::int(1), |acc, _| &acc * self)
    }

    /// Sign of a real value (`d > 0`); `None` for a non-real value.
    pub fn signum(&self) -> Option<i32> {
        if self.b.is_zero() {
            return Some(sign(&self.a));
        }
        if self.d < 0 {
            return None;
        }
        // compare a with −b√d by squares
        let (sa, sb) = (sign(&self.a), sign(&self.b));
        if sa == 0 || sa == sb {
            return Some(sb);
        }
        let lhs = &self.a * &self.a;
        let rhs = int(self.d) * &self.b * &self.b;
        Some(if lhs > rhs { sa } else { sb })
    }
}

fn sign(q: &BigRational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

macro_rules! panicking_op {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr<&QuadScalar> for &QuadScalar {
            type Output = QuadScalar;
            /// Panics if the operands have different field tags.
            fn $m(self, rhs: &QuadScalar) -> QuadScalar {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr for QuadScalar {
            type Output = QuadScalar;
            fn $m(self, rhs: QuadScalar) -> QuadScalar {
                $tr::$m(&self, &rhs)
            }
        }
    };
}

panicking_op!(Add, add, checked_add);
panicking_op!(Sub, sub, checked_sub);
panicking_op!(Mul, mul, checked_mul);
panicking_op!(Div, div, checked_div);

impl Neg for &QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        QuadScalar {
            d: self.d,
            a: -&self.a,
            b: -&self.b,
        }
    }
}

impl Neg for QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        -&self
    }
}

impl super::Ring for QuadScalar {
    fn zero() -> Self {
        QuadScalar::int(0)
    }
    fn one() -> Self {
        QuadScalar::int(1)
    }
    fn from_i64(n: i64) -> Self {
        QuadScalar::int(n)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.a) && Zero::is_zero(&self.b)
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

impl super::Field for QuadScalar {
    fn inv(&self) -> Option<Self> {
        self.checked_inv().ok()
    }
}

impl fmt::Display for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let root = format!("√{}", self.d);
        let irr = if self.b.is_one() {
            root
        } else if (-&self.b).is_one() {
            format!("-{root}")
        } else {
            format!("{}{root}", self.b)
        };
        if self.a.is_zero() {
            write!(f, "{irr}")
        } else if let Some(rest) = irr.strip_prefix('-') {
            write!(f, "{} - {rest}", self.a)
        } else {
            write!(f, "{} + {irr}", self.a)
        }
    }
}

impl fmt::Debug for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
