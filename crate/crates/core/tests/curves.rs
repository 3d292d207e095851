mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use pnh_core::curves::{
    conic_q, cubic_c, cubic_discriminant, family_cubic, is_flex, is_singular_at, is_tangent_at,
    line_contact, sylvester_resultant, verify_persson_configuration, CurveError, HomogPoly,
    ProjPoint, QuadScalar, Ring, UniPoly,
};

fn rq(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

fn qs(n: i64) -> QuadScalar {
    QuadScalar::int(n)
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    rq(rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

fn random_scalar(rng: &mut ChaCha8Rng, d: i64) -> QuadScalar {
    QuadScalar::new(d, random_rational(rng), random_rational(rng)).unwrap()
}

#[test]
fn quadratic_field_axioms() {
    let mut rng = common::rng(21);
    for d in [1, 2, 5, 6, 10] {
        for _ in 0..200 {
            let (a, b, c) = (random_scalar(&mut rng, d), random_scalar(&mut rng, d), random_scalar(&mut rng, d));
            assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            assert_eq!(&a + &b, &b + &a);
            assert_eq!(&a * &b, &b * &a);
            assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            assert_eq!(&a + &qs(0), a);
            assert_eq!(&a * &qs(1), a);
            assert!((&a - &a).is_zero());
            assert_eq!((&a * &b).norm(), a.norm() * b.norm());
            if !a.is_zero() {
                assert_eq!(&a * &a.checked_inv().unwrap(), qs(1));
            } else {
                assert_eq!(a.checked_inv(), Err(CurveError::DivisionByZero));
            }
        }
    }
}

fn euler_holds(f: &HomogPoly) -> bool {
    let [fx, fy, fz] = f.gradient();
    let lhs = &(&(&HomogPoly::x() * &fx) + &(&HomogPoly::y() * &fy)) + &(&HomogPoly::z() * &fz);
    lhs == f.scale(&qs(f.degree() as i64))
}

fn random_form(rng: &mut ChaCha8Rng, degree: u32, d: i64) -> HomogPoly {
    let mut terms = Vec::new();
    for i in 0..=degree {
        for j in 0..=degree - i {
            if rng.gen_bool(0.6) {
                terms.push(([i, j, degree - i - j], random_scalar(rng, d)));
            }
        }
    }
    HomogPoly::from_terms(degree, terms).unwrap()
}

#[test]
fn euler_relation() {
    let mut polys = vec![conic_q(), cubic_c(), cubic_c().hessian().unwrap()];
    for l in [qs(-2), QuadScalar::frac(1, 3), qs(4), QuadScalar::sqrt(10).unwrap()] {
        polys.push(family_cubic(&l));
    }
    let mut rng = common::rng(22);
    for degree in 1..=4 {
        for d in [1, 5] {
            polys.push(random_form(&mut rng, degree, d));
        }
    }
    for f in &polys {
        assert!(euler_holds(f), "{f}");
    }
}

#[test]
fn hessian_degree() {
    let mut rng = common::rng(23);
    for degree in 2..=4 {
        let f = random_form(&mut rng, degree, 1);
        let h = f.hessian().unwrap();
        assert!(h.is_zero() || h.degree() == 3 * (degree - 2));
    }
    let sphere = &(&(&HomogPoly::x() * &HomogPoly::x()) + &(&HomogPoly::y() * &HomogPoly::y()))
        + &(&HomogPoly::z() * &HomogPoly::z());
    assert_eq!(sphere.hessian().unwrap(), HomogPoly::constant(qs(8)));
}

/// Resultant through the Euclidean remainder sequence; same convention as
/// the Sylvester determinant with `f` in the top rows.
fn euclid_resultant(f: &UniPoly<BigRational>, g: &UniPoly<BigRational>) -> BigRational {
    let (n, m) = (f.degree().unwrap(), g.degree().unwrap());
    if m == 0 {
        return pow(g.leading().unwrap(), n);
    }
    if n == 0 {
        return pow(f.leading().unwrap(), m);
    }
    let (_, r) = f.div_rem(g).unwrap();
    let Some(k) = r.degree() else { return BigRational::from_i64(0) };
    let sign = if (n * m) % 2 == 1 { -1 } else { 1 };
    BigRational::from_i64(sign) * pow(g.leading().unwrap(), n - k) * euclid_resultant(g, &r)
}

fn pow(x: &BigRational, n: usize) -> BigRational {
    (0..n).fold(BigRational::from_i64(1), |acc, _| acc * x)
}

fn desc(p: &UniPoly<BigRational>) -> Vec<BigRational> {
    p.coeffs().iter().rev().cloned().collect()
}

fn random_poly(rng: &mut ChaCha8Rng, degree: usize) -> UniPoly<BigRational> {
    let mut c: Vec<BigRational> = (0..degree).map(|_| random_rational(rng)).collect();
    let mut lead = random_rational(rng);
    while Ring::is_zero(&lead) {
        lead = random_rational(rng);
    }
    c.push(lead);
    UniPoly::new(c)
}

#[test]
fn resultant_properties() {
    let mut rng = common::rng(24);
    for _ in 0..60 {
        let (a, b, c) = (rng.gen_range(1..=3), rng.gen_range(1..=3), rng.gen_range(1..=2));
        let f = random_poly(&mut rng, a);
        let g = random_poly(&mut rng, b);
        let h = random_poly(&mut rng, c);
        let fg = sylvester_resultant(&desc(&f), &desc(&g)).unwrap();
        let gf = sylvester_resultant(&desc(&g), &desc(&f)).unwrap();
        let sign = if (a * b) % 2 == 1 { -1 } else { 1 };
        assert_eq!(fg, BigRational::from_i64(sign) * &gf);
        let fh = sylvester_resultant(&desc(&f), &desc(&h)).unwrap();
        let f_gh = sylvester_resultant(&desc(&f), &desc(&g.mul(&h))).unwrap();
        assert_eq!(f_gh, &fg * &fh);
        assert_eq!(fg, euclid_resultant(&f, &g));
    }
    let lin = |c: i64| vec![BigRational::from_i64(1), BigRational::from_i64(c)];
    assert_eq!(sylvester_resultant(&lin(-1), &lin(1)).unwrap(), BigRational::from_i64(2));
}

#[test]
fn discriminant_detects_repeated_roots() {
    let mut rng = common::rng(25);
    let mut repeated = 0;
    for i in 0..60 {
        let f = if i % 2 == 0 {
            random_poly(&mut rng, 3)
        } else {
            // c (x − r)² (x − s)
            let r = UniPoly::new(vec![-random_rational(&mut rng), BigRational::from_i64(1)]);
            let s = UniPoly::new(vec![-random_rational(&mut rng), BigRational::from_i64(1)]);
            r.mul(&r).mul(&s).scale(&rq(rng.gen_range(1..=5), rng.gen_range(1..=3)))
        };
        let c = desc(&f);
        let disc = cubic_discriminant(&c[0], &c[1], &c[2], &c[3]);
        let shared = !f.gcd(&f.derivative()).is_constant();
        assert_eq!(Ring::is_zero(&disc), shared, "{f}");
        repeated += usize::from(shared);
        // Res(f, f') = −a0 · disc for a cubic
        let res = sylvester_resultant(&c, &desc(&f.derivative())).unwrap();
        assert_eq!(res, -(&c[0] * &disc));
    }
    assert!(repeated >= 30);
}

/// `C(x0, y0, z)` and `Q(x0, y0, z)` expanded by hand.
fn c_in_z(x: &BigRational, y: &BigRational) -> UniPoly<BigRational> {
    let k = |n: i64| BigRational::from_i64(n);
    UniPoly::new(vec![
        k(128) * x * x * y,
        k(80) * x * x + k(256) * y * y,
        k(288) * y,
        k(81),
    ])
}

fn q_in_z(x: &BigRational, y: &BigRational) -> UniPoly<BigRational> {
    UniPoly::new(vec![x * x, BigRational::from_i64(2) * y, BigRational::from_i64(1)])
}

#[test]
fn c_meets_q_only_over_x_zero() {
    let c = cubic_c().dehomogenize_in(2, 1).unwrap();
    let q = conic_q().dehomogenize_in(2, 1).unwrap();
    let r = sylvester_resultant(&c, &q).unwrap();
    assert_eq!(r.degree(), Some(6));
    assert_eq!(r.order_at_zero(), Some(6));
    let lead = r.coeff(6);
    assert_eq!(lead, qs(1));
    let one = BigRational::from_i64(1);
    for x0 in [rq(-3, 1), rq(-1, 2), rq(1, 1), rq(2, 1), rq(5, 3)] {
        let oracle = euclid_resultant(&c_in_z(&x0, &one), &q_in_z(&x0, &one));
        assert_eq!(oracle, pow(&x0, 6), "x = {x0}");
    }
}

#[test]
fn discriminant_shape_by_sampling() {
    // Δ_z(C) = −Res_z(C, ∂C/∂z)/81 should be a fixed multiple of
    // x²(x² − y²)(2⁷y² − 5³x²)
    let shape = |x: &BigRational, y: &BigRational| {
        x * x * (x * x - y * y) * (BigRational::from_i64(128) * y * y - BigRational::from_i64(125) * x * x)
    };
    let mut ratio: Option<BigRational> = None;
    let mut rng = common::rng(26);
    let mut samples = vec![(rq(0, 1), rq(1, 1)), (rq(1, 1), rq(1, 1)), (rq(-2, 1), rq(2, 1))];
    for _ in 0..20 {
        samples.push((random_rational(&mut rng), random_rational(&mut rng)));
    }
    for (x, y) in samples {
        let c = c_in_z(&x, &y);
        let res = euclid_resultant(&c, &c.derivative());
        let delta = -res / BigRational::from_i64(81);
        let s = shape(&x, &y);
        if Ring::is_zero(&s) {
            assert!(Ring::is_zero(&delta), "({x}, {y})");
            continue;
        }
        let r = delta / s;
        match &ratio {
            Some(prev) => assert_eq!(&r, prev),
            None => ratio = Some(r),
        }
    }
    assert_eq!(ratio, Some(BigRational::from_i64(1_327_104)));
}

#[test]
fn evaluation_examples() {
    let p = ProjPoint::ints(0, 1, 0).unwrap();
    assert!(conic_q().evaluate(&p).unwrap().is_zero());
    let node = ProjPoint::ints(0, 9, -16).unwrap();
    let c = cubic_c();
    assert!(c.evaluate(&node).unwrap().is_zero());
    for g in c.gradient() {
        assert!(g.evaluate(&node).unwrap().is_zero());
    }
    assert!(is_singular_at(&c, &node).unwrap());
    let x = HomogPoly::x();
    assert_eq!((&x * &x).partial(0).unwrap(), x.scale(&qs(2)));
}

#[test]
fn family_cubic_examples() {
    assert_eq!(family_cubic(&qs(4)), cubic_c());
    let c1 = family_cubic(&qs(1));
    assert!(is_singular_at(&c1, &ProjPoint::ints(0, 0, 1).unwrap()).unwrap());
    let l1 = HomogPoly::linear(qs(1), qs(-1), qs(0));
    let lm1 = HomogPoly::linear(qs(1), qs(1), qs(0));
    for l in [-3i64, -1, 2, 3, 4, 5, 7] {
        let f = family_cubic(&qs(l));
        let on_l1 = ProjPoint::ints(1 - l, 1 - l, l).unwrap();
        let on_lm1 = ProjPoint::ints(l - 1, 1 - l, l).unwrap();
        assert!(is_tangent_at(&f, &l1, &on_l1).unwrap(), "lambda = {l}");
        assert!(is_tangent_at(&f, &lm1, &on_lm1).unwrap(), "lambda = {l}");
    }
}

#[test]
fn tangency_examples() {
    let l1 = HomogPoly::linear(qs(1), qs(-1), qs(0));
    let lm1 = HomogPoly::linear(qs(1), qs(1), qs(0));
    let c = cubic_c();
    assert!(is_tangent_at(&conic_q(), &l1, &ProjPoint::ints(1, 1, -1).unwrap()).unwrap());
    assert!(is_tangent_at(&c, &l1, &ProjPoint::ints(-3, -3, 4).unwrap()).unwrap());
    assert!(is_tangent_at(&c, &lm1, &ProjPoint::ints(3, -3, 4).unwrap()).unwrap());
    let s10 = QuadScalar::sqrt(10).unwrap();
    let l_minus = HomogPoly::linear(qs(25), &s10 * &qs(8), qs(0));
    let p = ProjPoint::new([&s10 * &qs(24), qs(-75), qs(80)]).unwrap();
    assert!(is_tangent_at(&c, &l_minus, &p).unwrap());
    assert_eq!(line_contact(&c, &l_minus, &p).unwrap(), Some(2));
    // a transversal line through a smooth point
    assert_eq!(line_contact(&c, &lm1, &ProjPoint::ints(-3, -3, 4).unwrap()), Err(CurveError::NotOnLine));
    let off = ProjPoint::ints(1, -1, 5).unwrap();
    assert_eq!(is_tangent_at(&c, &lm1, &off), Err(CurveError::NotOnCurve));
}

#[test]
fn flexes() {
    let c = cubic_c();
    let h = c.hessian().unwrap();
    let x = &QuadScalar::sqrt(6).unwrap() * &QuadScalar::frac(1, 3);
    for sign in [1, -1] {
        let p = ProjPoint::new([&x * &qs(sign), QuadScalar::frac(13, 16), qs(-1)]).unwrap();
        assert!(c.evaluate(&p).unwrap().is_zero());
        assert!(h.evaluate(&p).unwrap().is_zero());
        assert!(is_flex(&c, &p).unwrap());
    }
    let e = ProjPoint::ints(1, 0, 0).unwrap();
    assert!(is_flex(&c, &e).unwrap());
    // smooth points off the Hessian are not flexes
    let t = ProjPoint::ints(-3, -3, 4).unwrap();
    assert!(!h.evaluate(&t).unwrap().is_zero());
    assert!(!is_flex(&c, &t).unwrap());
}

#[test]
fn coordinate_change_is_invertible() {
    // u = 16y + 9z and back
    let to_u = [
        HomogPoly::x(),
        HomogPoly::linear(qs(0), QuadScalar::frac(1, 16), QuadScalar::frac(-9, 16)),
        HomogPoly::z(),
    ];
    let back = [HomogPoly::x(), HomogPoly::linear(qs(0), qs(16), qs(9)), HomogPoly::z()];
    let c = cubic_c();
    assert_eq!(c.linear_substitute(&to_u).unwrap().linear_substitute(&back).unwrap(), c);
}

#[test]
fn configuration_report() {
    let r = verify_persson_configuration();
    assert_eq!(r.items.len(), 10);
    assert!(r.passed(), "{:#?}", r.items);
    let ids: Vec<u32> = r.items.iter().map(|i| i.id).collect();
    assert_eq!(ids, (1..=10).collect::<Vec<_>>());
    assert_eq!(r.candidates.len(), 2);
    assert!(r.candidates[0].same_as_tangency_point && r.candidates[0].tangent);
    assert!(r.candidates[1].on_line && !r.candidates[1].on_curve);
}
