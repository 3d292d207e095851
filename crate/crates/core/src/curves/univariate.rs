//! Dense univariate polynomials over a [`Ring`].

use std::fmt;

use super::{CurveError, Field, Ring};

/// Coefficients in ascending order, with no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> UniPoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    /// Coefficients listed from the leading term down.
    pub fn from_descending(mut coeffs: Vec<R>) -> Self {
        coeffs.reverse();
        UniPoly::new(coeffs)
    }

    pub fn constant(c: R) -> Self {
        UniPoly::new(vec![c])
    }

    /// The indeterminate.
    pub fn var() -> Self {
        UniPoly::new(vec![R::zero(), R::one()])
    }

    /// `c·tⁿ`.
    pub fn monomial(c: R, n: usize) -> Self {
        let mut v = vec![R::zero(); n];
        v.push(c);
        UniPoly::new(v)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Coefficient of `tⁿ`.
    pub fn coeff(&self, n: usize) -> R {
        self.coeffs.get(n).cloned().unwrap_or_else(R::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Exponent of the largest power of `t` dividing `self`; `None` for zero.
    pub fn order_at_zero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Horner evaluation.
    pub fn eval(&self, t: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc.mul(t).add(c))
    }

    pub fn derivative(&self) -> Self {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul(&R::from_i64(i as i64)))
                .collect(),
        )
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(UniPoly::constant(R::one()), |acc, _| acc.mul(self))
    }

    pub fn scale(&self, c: &R) -> Self {
        UniPoly::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }
}

impl<F: Field> UniPoly<F> {
    /// Euclidean division: `self = q·d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self), CurveError> {
        let dd = d.degree().ok_or(CurveError::DivisionByZero)?;
        let lead_inv = d.leading().and_then(Field::inv).ok_or(CurveError::DivisionByZero)?;
        let mut r = self.coeffs.clone();
        let mut q = vec![F::zero(); r.len().saturating_sub(dd).max(1)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let c = r.last().expect("nonempty").mul(&lead_inv);
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[k + i] = r[k + i].sub(&c.mul(dc));
            }
            q[k] = c;
            r.pop();
            while r.last().is_some_and(Ring::is_zero) {
                r.pop();
            }
        }
        Ok((UniPoly::new(q), UniPoly::new(r)))
    }

    /// Monic greatest common divisor; zero only if both inputs are zero.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while b.degree().is_some() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        match a.leading().and_then(Field::inv) {
            Some(inv) => a.scale(&inv),
            None => a,
        }
    }
}

impl<R: Ring> Ring for UniPoly<R> {
    fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }
    fn one() -> Self {
        UniPoly::constant(R::one())
    }
    fn from_i64(n: i64) -> Self {
        UniPoly::constant(R::from_i64(n))
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i).add(&o.coeff(i))).collect())
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&Ring::neg(o))
    }
    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        UniPoly::new(out)
    }
    fn neg(&self) -> Self {
        UniPoly::new(self.coeffs.iter().map(Ring::neg).collect())
    }
}

impl<R: Ring + fmt::Display> fmt::Display for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mut coef = c.to_string();
            if coef.contains(' ') {
                coef = format!("({coef})");
            }
            let (neg, body) = match coef.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, coef),
            };
            let body = match (i, body.as_str()) {
                (0, _) => body,
                (_, "1") => String::new(),
                _ => body,
            };
            let mono = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            match (out.is_empty(), neg) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            out.push_str(&body);
            out.push_str(&mono);
        }
        write!(f, "{out}")
    }
}

impl<R: Ring + fmt::Display> fmt::Debug for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
