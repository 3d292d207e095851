//! Homogeneous polynomials in `x, y, z` and points of the projective plane.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{CurveError, QuadScalar, Ring, UniPoly};

pub type Exps = [u32; 3];

const VARS: [&str; 3] = ["x", "y", "z"];

/// Homogeneous form of a fixed degree. The zero form combines with forms of
/// any degree.
#[derive(Clone)]
pub struct HomogPoly {
    degree: u32,
    terms: BTreeMap<Exps, QuadScalar>,
}

impl PartialEq for HomogPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && (self.terms.is_empty() || self.degree == other.degree)
    }
}

impl Eq for HomogPoly {}

impl HomogPoly {
    pub fn zero(degree: u32) -> Self {
        HomogPoly {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: QuadScalar) -> Self {
        HomogPoly::monomial(c, [0, 0, 0])
    }

    pub fn monomial(c: QuadScalar, e: Exps) -> Self {
        let mut p = HomogPoly::zero(e.iter().sum());
        if !c.is_zero() {
            p.terms.insert(e, c);
        }
        p
    }

    /// Variable `i` (0 = x, 1 = y, 2 = z).
    pub fn var(i: usize) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        HomogPoly::monomial(QuadScalar::int(1), e)
    }

    pub fn x() -> Self {
        HomogPoly::var(0)
    }

    pub fn y() -> Self {
        HomogPoly::var(1)
    }

    pub fn z() -> Self {
        HomogPoly::var(2)
    }

    /// `a·x + b·y + c·z`.
    pub fn linear(a: QuadScalar, b: QuadScalar, c: QuadScalar) -> Self {
        let mut p = HomogPoly::zero(1);
        for (i, coef) in [a, b, c].into_iter().enumerate() {
            p = p + HomogPoly::var(i).scale(&coef);
        }
        p
    }

    pub fn from_terms<I>(degree: u32, terms: I) -> Result<Self, CurveError>
    where
        I: IntoIterator<Item = (Exps, QuadScalar)>,
    {
        let mut p = HomogPoly::zero(degree);
        for (e, c) in terms {
            p = p.checked_add(&HomogPoly::monomial(c, e))?;
        }
        Ok(p)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &QuadScalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &Exps) -> QuadScalar {
        self.terms.get(e).cloned().unwrap_or_else(|| QuadScalar::int(0))
    }

    /// Coefficients `[x, y, z]` of a linear form.
    pub fn linear_coefficients(&self) -> Result<[QuadScalar; 3], CurveError> {
        if self.degree != 1 || self.is_zero() {
            return Err(CurveError::NotALine);
        }
        Ok([
            self.coefficient(&[1, 0, 0]),
            self.coefficient(&[0, 1, 0]),
            self.coefficient(&[0, 0, 1]),
        ])
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, CurveError> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.degree != other.degree {
            return Err(CurveError::DegreeMismatch(self.degree, other.degree));
        }
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let sum = match terms.get(e) {
                Some(a) => a.checked_add(c)?,
                None => c.clone(),
            };
            if sum.is_zero() {
                terms.remove(e);
            } else {
                terms.insert(*e, sum);
            }
        }
        Ok(HomogPoly {
            degree: self.degree,
            terms,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, CurveError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, CurveError> {
        let mut out = HomogPoly::zero(self.degree + other.degree);
        for (e, a) in &self.terms {
            for (f, b) in &other.terms {
                let g = [e[0] + f[0], e[1] + f[1], e[2] + f[2]];
                out = out.checked_add(&HomogPoly::monomial(a.checked_mul(b)?, g))?;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &QuadScalar) -> Self {
        let mut out = HomogPoly::zero(self.degree);
        for (e, a) in &self.terms {
            let v = a * c;
            if !v.is_zero() {
                out.terms.insert(*e, v);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(HomogPoly::constant(QuadScalar::int(1)), |acc, _| &acc * self)
    }

    /// Value at a coordinate triple.
    pub fn evaluate_coords(&self, p: &[QuadScalar; 3]) -> Result<QuadScalar, CurveError> {
        let mut acc = QuadScalar::int(0);
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (v, &k) in p.iter().zip(e) {
                t = t.checked_mul(&v.pow(k))?;
            }
            acc = acc.checked_add(&t)?;
        }
        Ok(acc)
    }

    /// Value at a representative of `p`; only its vanishing is projective.
    pub fn evaluate(&self, p: &ProjPoint) -> Result<QuadScalar, CurveError> {
        self.evaluate_coords(p.coords())
    }

    /// Evaluation with coordinates in another ring.
    pub fn eval_in<R: Ring>(&self, coords: &[R; 3], lift: impl Fn(&QuadScalar) -> R) -> R {
        let mut acc = R::zero();
        for (e, c) in &self.terms {
            let mut t = lift(c);
            for (v, &k) in coords.iter().zip(e) {
                for _ in 0..k {
                    t = t.mul(v);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    pub fn partial(&self, var: usize) -> Result<Self, CurveError> {
        if var > 2 {
            return Err(CurveError::BadVariable(var));
        }
        let mut out = HomogPoly::zero(self.degree.saturating_sub(1));
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut f = *e;
            f[var] -= 1;
            out.terms.insert(f, c * &QuadScalar::int(e[var] as i64));
        }
        Ok(out)
    }

    pub fn gradient(&self) -> [HomogPoly; 3] {
        [0, 1, 2].map(|i| self.partial(i).expect("variable in range"))
    }

    /// Determinant of the matrix of second partials.
    pub fn hessian(&self) -> Result<Self, CurveError> {
        if self.degree < 2 {
            return Err(CurveError::DegreeTooLow(self.degree));
        }
        let g = self.gradient();
        let h: Vec<Vec<HomogPoly>> = g
            .iter()
            .map(|gi| (0..3).map(|j| gi.partial(j).expect("variable in range")).collect())
            .collect();
        let minor = |a: usize, b: usize, c: usize, d: usize| -> Result<HomogPoly, CurveError> {
            h[1][a].checked_mul(&h[2][b])?.checked_sub(&h[1][c].checked_mul(&h[2][d])?)
        };
        h[0][0]
            .checked_mul(&minor(1, 2, 2, 1)?)?
            .checked_sub(&h[0][1].checked_mul(&minor(0, 2, 2, 0)?)?)?
            .checked_add(&h[0][2].checked_mul(&minor(0, 1, 1, 0)?)?)
    }

    /// `f(L₀, L₁, L₂)` for linear forms `Lᵢ`.
    pub fn linear_substitute(&self, images: &[HomogPoly; 3]) -> Result<Self, CurveError> {
        for l in images {
            if l.degree != 1 && !l.is_zero() {
                return Err(CurveError::NotALine);
            }
        }
        let mut out = HomogPoly::zero(self.degree);
        for (e, c) in &self.terms {
            let mut t = HomogPoly::constant(c.clone());
            for (l, &k) in images.iter().zip(e) {
                for _ in 0..k {
                    t = t.checked_mul(l)?;
                }
            }
            if t.is_zero() {
                continue;
            }
            out = out.checked_add(&t)?;
        }
        Ok(out)
    }

    /// Coefficient of `var^k` for `k = 0..=degree`, as forms in the other
    /// two variables.
    pub fn coefficients_in(&self, var: usize) -> Result<Vec<HomogPoly>, CurveError> {
        if var > 2 {
            return Err(CurveError::BadVariable(var));
        }
        let mut out: Vec<HomogPoly> = (0..=self.degree).map(|k| HomogPoly::zero(self.degree - k)).collect();
        for (e, c) in &self.terms {
            let k = e[var] as usize;
            let mut f = *e;
            f[var] = 0;
            out[k].terms.insert(f, c.clone());
        }
        Ok(out)
    }

    /// The polynomial `f` with variable `one` set to 1, as a polynomial in
    /// `main` whose coefficients are polynomials in the remaining variable.
    /// Coefficients are listed from `main^degree` down.
    pub fn dehomogenize_in(&self, main: usize, one: usize) -> Result<Vec<UniPoly<QuadScalar>>, CurveError> {
        if main > 2 || one > 2 || main == one {
            return Err(CurveError::BadVariable(main.max(one)));
        }
        let other = 3 - main - one;
        let mut out = vec![UniPoly::zero(); self.degree as usize + 1];
        for (e, c) in &self.terms {
            let slot = self.degree as usize - e[main] as usize;
            let m = UniPoly::monomial(c.clone(), e[other] as usize);
            out[slot] = out[slot].add(&m);
        }
        Ok(out)
    }

    /// Lowest-order part of the local expansion at the coordinate vertex where
    /// only `var` is nonzero, as a form in the other two variables.
    pub fn tangent_cone_at_vertex(&self, var: usize) -> Result<Self, CurveError> {
        if var > 2 {
            return Err(CurveError::BadVariable(var));
        }
        let Some(top) = self.terms.keys().map(|e| e[var]).max() else {
            return Ok(self.clone());
        };
        let mut out = HomogPoly::zero(self.degree - top);
        for (e, c) in &self.terms {
            if e[var] == top {
                let mut f = *e;
                f[var] = 0;
                out.terms.insert(f, c.clone());
            }
        }
        Ok(out)
    }
}

impl Ring for HomogPoly {
    fn zero() -> Self {
        HomogPoly::zero(0)
    }
    fn one() -> Self {
        HomogPoly::constant(QuadScalar::int(1))
    }
    fn from_i64(n: i64) -> Self {
        HomogPoly::constant(QuadScalar::int(n))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
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

macro_rules! panicking_op {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr<&HomogPoly> for &HomogPoly {
            type Output = HomogPoly;
            /// Panics on a degree or field-tag mismatch.
            fn $m(self, rhs: &HomogPoly) -> HomogPoly {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr for HomogPoly {
            type Output = HomogPoly;
            fn $m(self, rhs: HomogPoly) -> HomogPoly {
                $tr::$m(&self, &rhs)
            }
        }
    };
}

panicking_op!(Add, add, checked_add);
panicking_op!(Sub, sub, checked_sub);
panicking_op!(Mul, mul, checked_mul);

impl Neg for &HomogPoly {
    type Output = HomogPoly;
    fn neg(self) -> HomogPoly {
        HomogPoly {
            degree: self.degree,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for HomogPoly {
    type Output = HomogPoly;
    fn neg(self) -> HomogPoly {
        -&self
    }
}

impl fmt::Display for HomogPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: String = e
                .iter()
                .zip(VARS)
                .filter(|(k, _)| **k > 0)
                .map(|(k, v)| if *k == 1 { v.to_string() } else { format!("{v}^{k}") })
                .collect();
            let (neg, abs) = match c.signum() {
                Some(-1) if c.is_rational() => (true, -c),
                _ => (false, c.clone()),
            };
            let coef = if !abs.is_rational() {
                format!("({abs})")
            } else if abs == QuadScalar::int(1) && !mono.is_empty() {
                String::new()
            } else {
                abs.to_string()
            };
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write!(f, "{coef}{mono}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for HomogPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Point of the projective plane, compared up to scalars.
#[derive(Clone)]
pub struct ProjPoint {
    coords: [QuadScalar; 3],
}

impl ProjPoint {
    pub fn new(coords: [QuadScalar; 3]) -> Result<Self, CurveError> {
        if coords.iter().all(QuadScalar::is_zero) {
            return Err(CurveError::ZeroPoint);
        }
        let mut tag = 1;
        for c in &coords {
            if c.d() != 1 {
                if tag != 1 && tag != c.d() {
                    return Err(CurveError::FieldMismatch(tag, c.d()));
                }
                tag = c.d();
            }
        }
        Ok(ProjPoint { coords })
    }

    pub fn ints(x: i64, y: i64, z: i64) -> Result<Self, CurveError> {
        ProjPoint::new([x, y, z].map(QuadScalar::int))
    }

    pub fn coords(&self) -> &[QuadScalar; 3] {
        &self.coords
    }

    /// All 2×2 minors of the two coordinate rows vanish.
    pub fn same_point(&self, other: &Self) -> Result<bool, CurveError> {
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let m = self.coords[i]
                .checked_mul(&other.coords[j])?
                .checked_sub(&self.coords[j].checked_mul(&other.coords[i])?)?;
            if !m.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl PartialEq for ProjPoint {
    /// Panics on points over different quadratic fields.
    fn eq(&self, other: &Self) -> bool {
        self.same_point(other).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.coords;
        write!(f, "({a}, {b}, {c})")
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Order of contact of `line` with `curve` at `p`: the multiplicity of the
/// root at `p` of the restriction of `curve` to `line`. `None` if the line
/// is a component of the curve.
pub fn line_contact(curve: &HomogPoly, line: &HomogPoly, p: &ProjPoint) -> Result<Option<usize>, CurveError> {
    let l = line.linear_coefficients()?;
    if !line.evaluate(p)?.is_zero() {
        return Err(CurveError::NotOnLine);
    }
    if !curve.evaluate(p)?.is_zero() {
        return Err(CurveError::NotOnCurve);
    }
    let zero = QuadScalar::int(0);
    let candidates = [
        [l[1].clone(), -&l[0], zero.clone()],
        [l[2].clone(), zero.clone(), -&l[0]],
        [zero, l[2].clone(), -&l[1]],
    ];
    let mut second = None;
    for c in candidates {
        if let Ok(q) = ProjPoint::new(c) {
            if !q.same_point(p)? {
                second = Some(q);
                break;
            }
        }
    }
    let q = second.ok_or(CurveError::NotALine)?;
    // p + t·q as coordinates in ℚ(√d)[t]
    let coords: [UniPoly<QuadScalar>; 3] = std::array::from_fn(|i| {
        UniPoly::new(vec![p.coords[i].clone(), q.coords[i].clone()])
    });
    let restricted = curve.eval_in(&coords, |c| UniPoly::constant(c.clone()));
    Ok(restricted.order_at_zero())
}

/// Whether `line` meets `curve` at `p` with multiplicity at least 2.
pub fn is_tangent_at(curve: &HomogPoly, line: &HomogPoly, p: &ProjPoint) -> Result<bool, CurveError> {
    Ok(line_contact(curve, line, p)?.is_none_or(|m| m >= 2))
}

/// Whether every partial derivative vanishes at `p` (which lies on `curve`).
pub fn is_singular_at(curve: &HomogPoly, p: &ProjPoint) -> Result<bool, CurveError> {
    if !curve.evaluate(p)?.is_zero() {
        return Err(CurveError::NotOnCurve);
    }
    for g in curve.gradient() {
        if !g.evaluate(p)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Tangent line at a smooth point.
pub fn tangent_line(curve: &HomogPoly, p: &ProjPoint) -> Result<HomogPoly, CurveError> {
    if is_singular_at(curve, p)? {
        return Err(CurveError::SingularPoint);
    }
    let [a, b, c] = curve.gradient().map(|g| g.evaluate(p));
    Ok(HomogPoly::linear(a?, b?, c?))
}

/// Smooth point where the tangent line has contact at least 3.
pub fn is_flex(curve: &HomogPoly, p: &ProjPoint) -> Result<bool, CurveError> {
    let t = tangent_line(curve, p)?;
    Ok(line_contact(curve, &t, p)?.is_none_or(|m| m >= 3))
}
