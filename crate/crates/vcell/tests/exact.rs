use num_traits::Zero;
use proptest::prelude::*;
use vcell::exact::json::{poly_from_json, poly_to_json};
use vcell::exact::{rational_roots, PolyMatrix, RatFn, UniPoly};
use vcell::planar::{b2_line, boundary_poly};
use vcell::{int, rat, Poly, Rational};

const XY: [&str; 2] = ["x", "y"];

fn p(s: &str) -> Poly {
    Poly::parse(&XY, s).unwrap()
}

fn u(c: &[i64]) -> UniPoly<Rational> {
    UniPoly::new(c.iter().map(|&v| int(v)).collect())
}

fn rf(n: &[i64], d: &[i64]) -> RatFn {
    RatFn::new(u(n), u(d)).unwrap()
}

fn constant_matrix(v: &[[i64; 3]; 3]) -> PolyMatrix<Rational> {
    let vars: std::sync::Arc<[String]> = XY.iter().map(|s| s.to_string()).collect();
    PolyMatrix::new(
        v.iter()
            .map(|r| {
                r.iter()
                    .map(|&c| Poly::constant_in(vars.clone(), int(c)))
                    .collect()
            })
            .collect(),
    )
    .unwrap()
}

#[test]
fn rationals_are_reduced() {
    let r = rat(6, -4);
    assert_eq!(r.numer().to_string(), "-3");
    assert_eq!(r.denom().to_string(), "2");
    assert_eq!(rat(0, 5), int(0));
    assert!(vcell::parse_rational("1/0").is_err());
    assert_eq!(vcell::parse_rational(" -12/8 ").unwrap(), rat(-3, 2));
}

#[test]
fn evaluation_examples() {
    assert_eq!(Poly::zero(&XY).eval(&[rat(3, 7), int(2)]).unwrap(), int(0));
    let b3 = boundary_poly(3).unwrap();
    assert_eq!(b3.eval(&[int(1), int(1)]).unwrap(), int(0));
    assert_eq!(b3.eval(&[rat(1, 3), rat(1, 9)]).unwrap(), int(0));
    assert!(b3.eval(&[int(1)]).is_err());
}

#[test]
fn arithmetic_examples() {
    assert_eq!(&p("x + y") * &p("x - y"), p("x^2 - y^2"));
    let q = boundary_poly(2)
        .unwrap()
        .exact_div(&b2_line())
        .unwrap()
        .exact_div(&b2_line())
        .unwrap();
    assert_eq!(q, p("-1"));
    assert!(p("x^2 + 1").exact_div(&p("x")).is_none());
    assert_eq!(p("3*x^2*y - 1/2*y + 1").to_string(), "3*x^2*y - 1/2*y + 1");
    assert_eq!(p("x*y + x^2").leading_term().unwrap().0 .0, vec![2, 0]);
}

#[test]
fn determinant_examples() {
    let vars: std::sync::Arc<[String]> = XY.iter().map(|s| s.to_string()).collect();
    let one = Poly::constant_in(vars.clone(), int(1));
    let zero = Poly::zero_in(vars);
    let id = PolyMatrix::new(vec![
        vec![one.clone(), zero.clone()],
        vec![zero, one.clone()],
    ])
    .unwrap();
    assert_eq!(id.det().unwrap(), one.clone());
    let m = PolyMatrix::new(vec![vec![p("x"), one.clone()], vec![one.clone(), p("x")]]).unwrap();
    assert_eq!(m.det().unwrap(), p("x^2 - 1"));
    assert_eq!(m.det_cofactor(), p("x^2 - 1"));
    assert!(PolyMatrix::new(vec![vec![one.clone(), one.clone()]]).is_err());
    // pivot column starting with zero forces a row swap
    let swap = PolyMatrix::new(vec![vec![p("0"), p("y")], vec![p("x"), p("1")]]).unwrap();
    assert_eq!(swap.det().unwrap(), p("-x*y"));
}

#[test]
fn presenting_matrix_gives_b3() {
    let t = vcell::fixtures::resultant_template();
    let at3 = t.map(|e| e.compose(&[p("x"), p("y"), p("3")])).unwrap();
    let det = at3.det().unwrap();
    let b3 = boundary_poly(3).unwrap();
    let (c, prim) = det.primitive();
    assert!(!c.is_zero());
    assert_eq!(prim, b3.primitive().1);
}

#[test]
fn unirat_normalization() {
    assert_eq!(rf(&[-1, 0, 1], &[-1, 1]), rf(&[1, 1], &[1]));
    assert_eq!(rf(&[0, 0, 0, 3], &[0, 3]), rf(&[0, 0, 1], &[1]));
    let lhs =
        rf(&[0, 0, 0, 0, 6], &[0, 0, 0, 0, 0, 0, 0, -3, 0, 3]) * RatFn::from_poly(u(&[0, 0, 0, 1]));
    assert_eq!(lhs, rf(&[2], &[-1, 0, 1]));
    assert_eq!(lhs.den().lc(), int(1));
    assert!(RatFn::new(u(&[1]), u(&[0])).is_err());
}

#[test]
fn pole_order_examples() {
    assert_eq!(
        rf(&[1], &[0, 0, 1]).pole_orders().rational,
        vec![(int(0), 2)]
    );
    assert_eq!(
        rf(&[2], &[-1, 0, 1]).pole_orders().rational,
        vec![(int(-1), 1), (int(1), 1)]
    );
    let poly = RatFn::from_poly(u(&[1, 2, 3]));
    assert!(poly.pole_orders().rational.is_empty());
    assert!(poly.pole_orders().other.is_empty());
    let irreducible = rf(&[1], &[1, 0, 1]).pole_orders();
    assert!(irreducible.rational.is_empty());
    assert_eq!(irreducible.other, vec![(2, 1)]);
    assert_eq!(rf(&[1], &[1, 0, 2, 0, 1]).pole_orders().other, vec![(2, 2)]);
}

#[test]
fn univariate_helpers() {
    let f = u(&[-6, 11, -6, 1]);
    assert_eq!(rational_roots(&f), vec![int(1), int(2), int(3)]);
    assert_eq!(rational_roots(&u(&[-1, 0, 4])), vec![rat(-1, 2), rat(1, 2)]);
    let sq = &u(&[1, -2, 1]) * &u(&[3, 1]);
    assert_eq!(sq.root_multiplicity(&int(1)), 2);
    let parts = sq.squarefree();
    assert_eq!(parts.iter().map(|(_, m)| *m).sum::<u32>(), 3);
    assert_eq!(u(&[-1, 0, 1]).gcd(&u(&[1, 1])), u(&[1, 1]));
}

#[test]
fn json_round_trip_and_format() {
    let b4 = boundary_poly(4).unwrap().scale(&rat(-7, 3));
    let s = poly_to_json(&b4);
    assert_eq!(poly_from_json(&s).unwrap(), b4);
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    assert_eq!(v["vars"], serde_json::json!(["x", "y"]));
    assert_eq!(v["terms"][0]["exp"], serde_json::json!([3, 0]));
    assert_eq!(v["terms"][0]["num"], "-112");
    assert_eq!(v["terms"][0]["den"], "3");
    let huge = p("123456789012345678901234567890/7*x*y");
    assert_eq!(poly_from_json(&poly_to_json(&huge)).unwrap(), huge);
    assert!(
        poly_from_json(r#"{"vars":["x"],"terms":[{"exp":[1,2],"num":"1","den":"1"}]}"#).is_err()
    );
    assert!(poly_from_json(r#"{"vars":["x"],"terms":[{"exp":[1],"num":"1","den":"0"}]}"#).is_err());
}

fn small_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(((0u32..3, 0u32..3), -5i64..6, 1i64..4), 0..5).prop_map(|ts| {
        Poly::from_terms(
            &XY,
            ts.into_iter().map(|((a, b), n, d)| (vec![a, b], rat(n, d))),
        )
    })
}

fn point() -> impl Strategy<Value = [Rational; 2]> {
    ((-9i64..10, 1i64..5), (-9i64..10, 1i64..5)).prop_map(|((a, b), (c, d))| [rat(a, b), rat(c, d)])
}

proptest! {
    #[test]
    fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division_recovers_factor(a in small_poly(), b in small_poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in small_poly(), b in small_poly(), x in point()) {
        prop_assert_eq!((&a * &b).eval(&x).unwrap(), a.eval(&x).unwrap() * b.eval(&x).unwrap());
        prop_assert_eq!((&a + &b).eval(&x).unwrap(), a.eval(&x).unwrap() + b.eval(&x).unwrap());
    }

    #[test]
    fn json_round_trip(a in small_poly()) {
        prop_assert_eq!(poly_from_json(&poly_to_json(&a)).unwrap(), a);
    }

    #[test]
    fn det_is_multiplicative(a in prop::array::uniform3(prop::array::uniform3(-4i64..5)), b in prop::array::uniform3(prop::array::uniform3(-4i64..5))) {
        let mut ab = [[0i64; 3]; 3];
        for i in 0..3 { for j in 0..3 { ab[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum(); } }
        let da = constant_matrix(&a).det().unwrap();
        let db = constant_matrix(&b).det().unwrap();
        prop_assert_eq!(constant_matrix(&ab).det().unwrap(), &da * &db);
    }

    #[test]
    fn bareiss_matches_cofactor(entries in prop::collection::vec(small_poly(), 9)) {
        let rows: Vec<Vec<Poly>> = entries.chunks(3).map(|r| r.to_vec()).collect();
        let m = PolyMatrix::new(rows).unwrap();
        prop_assert_eq!(m.det().unwrap(), m.det_cofactor());
    }

    #[test]
    fn distinct_linear_factors_are_simple_poles(roots in prop::collection::btree_set(-20i64..20, 1..5)) {
        let den = roots.iter().fold(u(&[1]), |acc, r| &acc * &u(&[-r, 1]));
        let report = RatFn::new(u(&[1]), den).unwrap().pole_orders();
        let want: Vec<(Rational, u32)> = roots.iter().map(|&r| (int(r), 1)).collect();
        prop_assert_eq!(report.rational, want);
    }
}
