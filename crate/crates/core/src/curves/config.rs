//! The conic `Q`, the cubic `C` and the ten checks of their configuration.

use num_rational::BigRational;
use serde::Serialize;

use super::{
    cubic_discriminant, is_flex, is_singular_at, is_tangent_at, line_contact, sylvester_resultant,
    CurveError, HomogPoly, ProjPoint, QuadScalar, Ring, UniPoly,
};

fn q(n: i64) -> QuadScalar {
    QuadScalar::int(n)
}

fn lin(a: i64, b: i64, c: i64) -> HomogPoly {
    HomogPoly::linear(q(a), q(b), q(c))
}

/// `x² + 2yz + z²`.
pub fn conic_q() -> HomogPoly {
    let (x, y, z) = (HomogPoly::x(), HomogPoly::y(), HomogPoly::z());
    &(&x * &x) + &(&(&y * &z).scale(&q(2)) + &(&z * &z))
}

/// `z³ + 16·Q·(8y + 5z)`.
pub fn cubic_c() -> HomogPoly {
    let z = HomogPoly::z();
    &z.pow(3) + &(&conic_q() * &lin(0, 8, 5)).scale(&q(16))
}

/// `z³ + Q·(2λ³y + (2λ³ − 3λ²)z)`.
pub fn family_cubic(lambda: &QuadScalar) -> HomogPoly {
    let l2 = lambda.pow(2);
    let l3 = lambda.pow(3);
    let factor = HomogPoly::linear(q(0), &q(2) * &l3, &(&q(2) * &l3) - &(&q(3) * &l2));
    &HomogPoly::z().pow(3) + &(&conic_q() * &factor)
}

/// Outcome of one check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfigItem {
    pub id: u32,
    pub title: String,
    pub passed: bool,
    pub detail: String,
}

/// Verdict on a proposed tangency point of `L₊`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CandidateVerdict {
    pub point: String,
    pub on_line: bool,
    pub on_curve: bool,
    pub tangent: bool,
    pub same_as_tangency_point: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ConfigReport {
    pub items: Vec<ConfigItem>,
    pub candidates: Vec<CandidateVerdict>,
}

impl ConfigReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }
}

type Check = Result<(bool, String), CurveError>;

fn item(id: u32, title: &str, check: Check) -> ConfigItem {
    let (passed, detail) = check.unwrap_or_else(|e| (false, format!("error: {e}")));
    ConfigItem {
        id,
        title: title.to_string(),
        passed,
        detail,
    }
}

fn tangent(curve: &HomogPoly, line: &HomogPoly, p: &ProjPoint) -> Result<bool, CurveError> {
    is_tangent_at(curve, line, p)
}

fn sqrt10_point(a: i64, b: i64, c: i64) -> Result<ProjPoint, CurveError> {
    ProjPoint::new([QuadScalar::from_ints(10, 0, a)?, q(b), q(c)])
}

/// `25x ∓ 8√10·y`, the lines `x = ±(8√10/25)·y`.
fn l_pm(sign: i64) -> Result<HomogPoly, CurveError> {
    Ok(HomogPoly::linear(q(25), QuadScalar::from_ints(10, 0, -8 * sign)?, q(0)))
}

fn check_lines_tangent_to_q() -> Check {
    let (qq, c) = (conic_q(), cubic_c());
    let l1 = lin(1, -1, 0);
    let lm1 = lin(1, 1, 0);
    let q1 = ProjPoint::ints(1, 1, -1)?;
    let qm1 = ProjPoint::ints(1, -1, 1)?;
    let c1 = ProjPoint::ints(-3, -3, 4)?;
    let cm1 = ProjPoint::ints(3, -3, 4)?;
    let ok = tangent(&qq, &l1, &q1)?
        && tangent(&qq, &lm1, &qm1)?
        && tangent(&c, &l1, &c1)?
        && tangent(&c, &lm1, &cm1)?
        && !c1.same_point(&q1)?
        && !cm1.same_point(&qm1)?;
    Ok((ok, format!("Q touches x-y at {q1}, x+y at {qm1}; C touches them at {c1}, {cm1}")))
}

fn check_q_tangent_at_p() -> Check {
    let p = ProjPoint::ints(0, 1, 0)?;
    let ok = tangent(&conic_q(), &HomogPoly::z(), &p)? && cubic_c().evaluate(&p)?.is_zero();
    Ok((ok, format!("Q touches z=0 at P={p}; P lies on C")))
}

/// `Res_z(C(x,1,z), Q(x,1,z))` as a polynomial in `x`.
pub(crate) fn resultant_c_q() -> Result<UniPoly<QuadScalar>, CurveError> {
    let c = cubic_c().dehomogenize_in(2, 1)?;
    let qq = conic_q().dehomogenize_in(2, 1)?;
    sylvester_resultant(&c, &qq)
}

fn check_resultant() -> Check {
    let r = resultant_c_q()?;
    let monomial = r.degree() == Some(6) && r.order_at_zero() == Some(6);
    Ok((monomial, format!("Res_z(C, Q) = {}·x^6", r.coeff(6))))
}

fn check_node() -> Check {
    let c = cubic_c();
    let node = ProjPoint::ints(0, 9, -16)?;
    let singular = is_singular_at(&c, &node)?;
    let tangency = [
        ProjPoint::ints(-3, -3, 4)?,
        ProjPoint::ints(3, -3, 4)?,
        ProjPoint::ints(1, 1, -1)?,
        ProjPoint::ints(1, -1, 1)?,
        ProjPoint::ints(0, 1, 0)?,
        sqrt10_point(-24, -75, 80)?,
        sqrt10_point(24, -75, 80)?,
    ];
    let mut apart = true;
    for t in &tangency {
        apart &= !node.same_point(t)?;
    }
    // in the family, λ = 1 puts the singular point on the tangency point
    let c1 = family_cubic(&q(1));
    let origin = ProjPoint::ints(0, 0, 1)?;
    let degenerate = is_singular_at(&c1, &origin)? && tangent(&c1, &lin(1, 1, 0), &origin)?;
    Ok((
        singular && apart && degenerate,
        format!("gradient of C vanishes at {node}; node is off every tangency point; for lambda=1 the singular point is {origin}"),
    ))
}

/// `C` in coordinates `(x, u, z)` with `u = 16y + 9z`.
pub(crate) fn cubic_in_u() -> Result<HomogPoly, CurveError> {
    let y_of_u = HomogPoly::linear(q(0), QuadScalar::frac(1, 16), QuadScalar::frac(-9, 16));
    cubic_c().linear_substitute(&[HomogPoly::x(), y_of_u, HomogPoly::z()])
}

fn check_tangent_cone() -> Check {
    let cu = cubic_in_u()?;
    let (x, u, z) = (HomogPoly::x(), HomogPoly::y(), HomogPoly::z());
    let expect = &(&z * &(&u * &u)) + &(&(&x * &x) * &(&u + &z)).scale(&q(8));
    let cone = cu.tangent_cone_at_vertex(2)?;
    let (a, b, c) = (
        cone.coefficient(&[2, 0, 0]),
        cone.coefficient(&[1, 1, 0]),
        cone.coefficient(&[0, 2, 0]),
    );
    let disc = &(&b * &b) - &(&q(4) * &(&a * &c));
    let ok = cu == expect
        && cone.degree() == 2
        && a == q(8)
        && c == q(1)
        && disc.signum() == Some(-1);
    Ok((ok, format!("C = {cu}; tangent cone {cone} (x,u), discriminant {disc}")))
}

/// Discriminant of `C` as a cubic in `z`, a binary sextic in `(x, y)`.
pub(crate) fn discriminant_in_z(c: &HomogPoly) -> Result<HomogPoly, CurveError> {
    let k = c.coefficients_in(2)?;
    if k.len() != 4 {
        return Err(CurveError::DegreeTooLow(c.degree()));
    }
    Ok(cubic_discriminant(&k[3], &k[2], &k[1], &k[0]))
}

/// `x²(x² − y²)(2⁷y² − 5³x²)`.
pub(crate) fn expected_discriminant_shape() -> HomogPoly {
    let (x, y) = (HomogPoly::x(), HomogPoly::y());
    let x2 = &x * &x;
    let y2 = &y * &y;
    &(&x2 * &(&x2 - &y2)) * &(&y2.scale(&q(128)) - &x2.scale(&q(125)))
}

/// `a` with `a·g = f`, if `f` is a scalar multiple of the nonzero `g`.
fn proportionality(f: &HomogPoly, g: &HomogPoly) -> Option<QuadScalar> {
    let (e, lead) = g.terms().next()?;
    let ratio = f.coefficient(e).checked_div(lead).ok()?;
    (g.scale(&ratio) == *f).then_some(ratio)
}

fn check_discriminant() -> Check {
    let c = cubic_c();
    let same_family = family_cubic(&q(4)) == c;
    let delta = discriminant_in_z(&c)?;
    let ratio = proportionality(&delta, &expected_discriminant_shape());
    let ok = same_family && ratio.as_ref().is_some_and(|r| !r.is_zero());
    let detail = match ratio {
        Some(r) => format!("Delta = {r}·x^2(x^2-y^2)(2^7y^2-5^3x^2); lines x=±y, x=±(8√10/25)y"),
        None => format!("Delta = {delta}"),
    };
    Ok((ok, detail))
}

fn candidate(c: &HomogPoly, line: &HomogPoly, p: ProjPoint, chosen: &ProjPoint) -> Result<CandidateVerdict, CurveError> {
    let on_line = line.evaluate(&p)?.is_zero();
    let on_curve = c.evaluate(&p)?.is_zero();
    let tangent = on_line && on_curve && is_tangent_at(c, line, &p)?;
    Ok(CandidateVerdict {
        point: p.to_string(),
        on_line,
        on_curve,
        tangent,
        same_as_tangency_point: p.same_point(chosen)?,
    })
}

pub(crate) fn l_plus_candidates() -> Result<Vec<CandidateVerdict>, CurveError> {
    let c = cubic_c();
    let lp = l_pm(1)?;
    let chosen = sqrt10_point(-24, -75, 80)?;
    Ok(vec![
        candidate(&c, &lp, sqrt10_point(-33 * 8, -25 * 33, 880)?, &chosen)?,
        candidate(&c, &lp, sqrt10_point(-27 * 8, -25 * 27, 880)?, &chosen)?,
    ])
}

fn check_l_pm() -> Check {
    let c = cubic_c();
    let (lp, lm) = (l_pm(1)?, l_pm(-1)?);
    let pp = sqrt10_point(-24, -75, 80)?;
    let pm = sqrt10_point(24, -75, 80)?;
    let ok = tangent(&c, &lp, &pp)?
        && tangent(&c, &lm, &pm)?
        && line_contact(&c, &lp, &pp)? == Some(2)
        && line_contact(&c, &lm, &pm)? == Some(2);
    Ok((ok, format!("L+ = {lp} touches C at {pp}; L- = {lm} touches C at {pm}")))
}

/// Lagrange interpolation through `(xᵢ, yᵢ)` with distinct `xᵢ`.
fn interpolate(points: &[(BigRational, BigRational)]) -> UniPoly<BigRational> {
    let mut acc = UniPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = UniPoly::constant(yi.clone());
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                let factor = UniPoly::new(vec![-xj.clone(), BigRational::one()]);
                basis = basis.mul(&factor).scale(&(xi - xj).recip());
            }
        }
        acc = acc.add(&basis);
    }
    acc
}

fn ratq(n: i64) -> BigRational {
    <BigRational as Ring>::from_i64(n)
}

/// Discriminant in `λ` of the quadratic `C_λ(0, y, z)/z` in `z/y`, recovered
/// by interpolating the family at `λ = 0..=6`.
pub(crate) fn a_constraint() -> Result<UniPoly<BigRational>, CurveError> {
    let mut points = Vec::new();
    for l in 0..=6 {
        let k = family_cubic(&q(l)).coefficients_in(0)?;
        // x = 0 restriction: z·(c2 z² + c1 yz + c0 y²)
        let rest = &k[0];
        let c2 = rest.coefficient(&[0, 0, 3]);
        let c1 = rest.coefficient(&[0, 1, 2]);
        let c0 = rest.coefficient(&[0, 2, 1]);
        if !rest.coefficient(&[0, 3, 0]).is_zero() {
            return Err(CurveError::NotOnCurve);
        }
        let disc = &(&c1 * &c1) - &(&q(4) * &(&c2 * &c0));
        points.push((ratq(l), disc.rational_part().clone()));
    }
    Ok(interpolate(&points))
}

fn check_a_constraint() -> Check {
    let disc = a_constraint()?;
    let a = UniPoly::<BigRational>::var();
    let cubic = UniPoly::new(vec![ratq(-4), ratq(9), ratq(-6), ratq(1)]);
    let four_a3 = a.pow(3).scale(&ratq(4));
    let factored = disc == four_a3.mul(&cubic);
    let square = UniPoly::new(vec![ratq(-1), ratq(1)]).pow(2);
    let (quot, rem) = cubic.div_rem(&square)?;
    let ok = factored && rem.is_zero() && quot == UniPoly::new(vec![ratq(-4), ratq(1)]);
    Ok((ok, format!("discriminant 4A^3({cubic}) with t = A; quotient by (A-1)^2 is {quot}, remainder {rem}")))
}

fn check_flexes() -> Check {
    let c = cubic_c();
    let h = c.hessian()?;
    let s6_3 = &QuadScalar::sqrt(6)? * &QuadScalar::frac(1, 3);
    let y = QuadScalar::frac(13, 16);
    let mut ok = true;
    let mut found = Vec::new();
    for sign in [1, -1] {
        let x = &s6_3 * &q(sign);
        let ratio = &x / &y;
        let expect = &(&s6_3 * &QuadScalar::frac(16, 13)) * &q(sign);
        let p = ProjPoint::new([x, y.clone(), q(-1)])?;
        ok &= ratio == expect && h.evaluate(&p)?.is_zero() && is_flex(&c, &p)?;
        found.push(p.to_string());
    }
    let e = ProjPoint::ints(1, 0, 0)?;
    ok &= h.evaluate(&e)?.is_zero() && is_flex(&c, &e)?;
    found.push(e.to_string());
    Ok((ok, format!("flexes {}", found.join(", "))))
}

fn check_z_not_component() -> Check {
    let c = cubic_c();
    let at_z0 = c.coefficients_in(2)?.remove(0);
    let expect = &(&HomogPoly::x() * &HomogPoly::x()) * &HomogPoly::y().scale(&q(128));
    Ok((!at_z0.is_zero() && at_z0 == expect, format!("C(x,y,0) = {at_z0}")))
}

/// Runs the ten exact checks of the configuration.
pub fn verify_persson_configuration() -> ConfigReport {
    let items = vec![
        item(1, "lines x=±y tangent to Q", check_lines_tangent_to_q()),
        item(2, "Q tangent to z=0 at P", check_q_tangent_at_p()),
        item(3, "C meets Q only at P, with multiplicity 6", check_resultant()),
        item(4, "node of C", check_node()),
        item(5, "tangent cone at the node", check_tangent_cone()),
        item(6, "tangent lines through (0,0,1)", check_discriminant()),
        item(7, "tangency points on L+ and L-", check_l_pm()),
        item(8, "constraint on A", check_a_constraint()),
        item(9, "flexes of C", check_flexes()),
        item(10, "z=0 is not a component of C", check_z_not_component()),
    ];
    ConfigReport {
        items,
        candidates: l_plus_candidates().unwrap_or_default(),
    }
}
