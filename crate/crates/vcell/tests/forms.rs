use vcell::exact::{segment_form, RatFn, UniPoly};
use vcell::forms::catalog::{self, p};
use vcell::forms::{sign_relation, ParamCurve, RationalTwoForm};
use vcell::{int, rat, Rational};

fn assert_segment(form: &RationalTwoForm, boundary: Vec<(ParamCurve, (Rational, Rational))>) {
    for (curve, (a, b)) in boundary {
        let r = form.residue(&curve).unwrap();
        let s = sign_relation(&r, &segment_form(&a, &b));
        assert!(
            s.is_some(),
            "residue {r} along {} is not the segment form on [{a}, {b}]",
            curve.implicit
        );
    }
}

#[test]
fn reference_regions_have_segment_residues() {
    assert_segment(&catalog::omega_a1(), catalog::a1_boundary());
    assert_segment(&catalog::omega_a2(), catalog::a2_boundary());
    assert_segment(&catalog::omega_a3(), catalog::a3_boundary());
}

#[test]
fn reference_forms_are_logarithmic() {
    let curves = [catalog::cusp_curve()];
    for f in [
        catalog::omega_a1(),
        catalog::omega_a2(),
        catalog::omega_a3(),
        catalog::omega_s1(),
        catalog::omega_triangle(),
        catalog::omega_simplex(),
    ] {
        assert!(f.log_check(&curves).unwrap().is_logarithmic(), "{f:?}");
    }
}

#[test]
fn bare_cubic_residue_is_double_pole() {
    let f = RationalTwoForm::new(p("1"), vec![(catalog::cusp_cubic(), 1)]).unwrap();
    let r = f.residue(&catalog::cusp_curve()).unwrap();
    // dy / (-3 x^2) with x = t^2, y = t^3
    let expected = RatFn::new(
        UniPoly::constant(int(-1)),
        UniPoly::new(vec![int(0), int(0), int(1)]),
    )
    .unwrap();
    assert_eq!(r, expected);
    let poles = r.pole_orders();
    assert_eq!(poles.rational, vec![(int(0), 2)]);
    assert!(!f
        .log_check(&[catalog::cusp_curve()])
        .unwrap()
        .is_logarithmic());
}

#[test]
fn simplex_residue_on_the_axis() {
    let f = catalog::omega_simplex();
    let axis = ParamCurve::line(&p("x")).unwrap();
    // dx/x ^ dy/(y(1 - x - y)) restricted to x = 0
    let eta = RatFn::new(
        UniPoly::constant(int(1)),
        UniPoly::new(vec![int(0), int(1), int(-1)]),
    )
    .unwrap();
    assert_eq!(f.residue(&axis).unwrap(), eta);
    assert_eq!(eta, -segment_form(&int(0), &int(1)));
}

#[test]
fn triangle_splits_into_two_cubic_regions() {
    // the listed A_III form is negative on its region
    let sum = catalog::omega_s1().add(&catalog::omega_a3().neg()).unwrap();
    assert_eq!(sum, catalog::omega_triangle());
}

#[test]
fn addition_cancels_shared_factor() {
    // simplex split along y = x
    let lower = RationalTwoForm::new(
        p("1"),
        vec![(p("y"), 1), (p("x - y"), 1), (p("1 - x - y"), 1)],
    )
    .unwrap();
    let upper = RationalTwoForm::new(
        p("-1"),
        vec![(p("x"), 1), (p("x - y"), 1), (p("1 - x - y"), 1)],
    )
    .unwrap();
    let s = lower.add(&upper).unwrap();
    assert_eq!(s, catalog::omega_simplex());
    assert!(s.factor_of(&p("x - y")).is_none());
}

#[test]
fn orientation_mismatch_is_rejected() {
    let a = catalog::omega_simplex();
    assert!(a.add(&a.flipped()).is_err());
    assert_eq!(
        a.flipped().eval(&[rat(1, 4), rat(1, 4)]),
        a.eval(&[rat(1, 4), rat(1, 4)])
    );
}

#[test]
fn factor_normalization_absorbs_scalars() {
    let a = RationalTwoForm::new(p("2"), vec![(p("2*x - 2"), 1), (p("-y"), 1)]).unwrap();
    let b = RationalTwoForm::new(p("-1"), vec![(p("x - 1"), 1), (p("y"), 1)]).unwrap();
    assert_eq!(a, b);
}

#[test]
fn residue_rejects_foreign_curve() {
    let f = catalog::omega_simplex();
    let c = catalog::cusp_curve();
    assert!(f.residue(&c).is_err());
    let sq = RationalTwoForm::new(p("1"), vec![(p("x"), 2), (p("y"), 1)]).unwrap();
    assert!(sq.residue(&ParamCurve::line(&p("x")).unwrap()).is_err());
}

fn m(rows: [[i64; 3]; 3]) -> [[Rational; 3]; 3] {
    rows.map(|r| r.map(int))
}

fn inverse(a: &[[Rational; 3]; 3]) -> [[Rational; 3]; 3] {
    let c = |i: usize, j: usize| {
        let r: Vec<usize> = (0..3).filter(|&k| k != i).collect();
        let s: Vec<usize> = (0..3).filter(|&k| k != j).collect();
        a[r[0]][s[0]].clone() * a[r[1]][s[1]].clone()
            - a[r[0]][s[1]].clone() * a[r[1]][s[0]].clone()
    };
    let det = (0..3)
        .map(|j| {
            let t = a[0][j].clone() * c(0, j);
            if j % 2 == 0 {
                t
            } else {
                -t
            }
        })
        .fold(int(0), |x, y| x + y);
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let t = c(j, i) / det.clone();
            if (i + j) % 2 == 0 {
                t
            } else {
                -t
            }
        })
    })
}

fn matmul(a: &[[Rational; 3]; 3], b: &[[Rational; 3]; 3]) -> [[Rational; 3]; 3] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| (0..3).map(|k| a[i][k].clone() * b[k][j].clone()).sum())
    })
}

#[test]
fn pullback_round_trip() {
    let a = m([[2, 1, 0], [0, 1, 1], [1, 0, 3]]);
    for f in [
        catalog::omega_a1(),
        catalog::omega_a2(),
        catalog::omega_a3(),
    ] {
        let back = f
            .pullback_linear(&a)
            .unwrap()
            .pullback_linear(&inverse(&a))
            .unwrap();
        assert_eq!(back, f);
    }
}

#[test]
fn pullback_composes() {
    let a = m([[2, 1, 0], [0, 1, 1], [1, 0, 3]]);
    let b = m([[1, 0, 1], [1, 1, 0], [0, 2, 1]]);
    let f = catalog::omega_a2();
    let lhs = f.pullback_linear(&a).unwrap().pullback_linear(&b).unwrap();
    let rhs = f.pullback_linear(&matmul(&a, &b)).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn pullback_denominator_vanishes_on_preimage() {
    let a = m([[1, 2, 0], [0, 1, 0], [1, 1, 4]]);
    let inv = inverse(&a);
    let g = catalog::omega_a1().pullback_linear(&a).unwrap();
    let den = g.denominator();
    for k in [-3i64, -1, 2, 5] {
        let t = rat(k, 3);
        let (x, y) = (t.clone() * t.clone(), t.clone() * t.clone() * t.clone());
        let v = [x, y, int(1)];
        let q: Vec<Rational> = (0..3)
            .map(|i| (0..3).map(|j| inv[i][j].clone() * v[j].clone()).sum())
            .collect();
        let pt = [q[0].clone() / q[2].clone(), q[1].clone() / q[2].clone()];
        assert_eq!(den.eval(&pt).unwrap(), int(0));
    }
}

#[test]
fn pullback_of_affine_translation_keeps_residues() {
    let shift = m([[1, 0, 1], [0, 1, 0], [0, 0, 1]]);
    let g = catalog::omega_a3().pullback_linear(&shift).unwrap();
    assert_eq!(g.factors().len(), 2);
    let x = [rat(1, 3), rat(1, 7)];
    let moved = [rat(4, 3), rat(1, 7)];
    assert_eq!(g.eval(&x), catalog::omega_a3().eval(&moved));
}

#[test]
fn reference_form_signs_inside_regions() {
    let a2 = catalog::omega_a2().eval(&[rat(1, 2), rat(3, 10)]).unwrap();
    assert!(a2 > int(0));
    assert!(catalog::omega_a2().eval(&[rat(1, 2), rat(1, 4)]).is_none());
    assert!(catalog::omega_a1().eval(&[rat(1, 2), rat(1, 10)]).unwrap() < int(0));
    assert!(catalog::omega_a3().eval(&[rat(1, 2), rat(2, 5)]).unwrap() < int(0));
    assert!(catalog::omega_s1().eval(&[rat(1, 2), rat(1, 5)]).unwrap() > int(0));
    assert!(
        catalog::omega_triangle()
            .eval(&[rat(1, 2), rat(1, 5)])
            .unwrap()
            > int(0)
    );
}

#[test]
fn tangent_line_residue_matches_interval() {
    let (line, (a, b)) = catalog::a2_boundary().remove(1);
    let r = catalog::omega_a2().residue(&line).unwrap();
    assert_eq!(r, segment_form(&a, &b));
    assert_eq!(
        segment_form(&a, &b),
        RatFn::new(
            UniPoly::constant(rat(3, 4)),
            UniPoly::new(vec![rat(1, 4), rat(-5, 4), int(1)])
        )
        .unwrap()
    );
}

#[test]
fn form_and_curve_json_round_trip() {
    use vcell::forms::{CurveDoc, FormDoc};
    for form in [
        catalog::omega_a1(),
        catalog::omega_a2(),
        catalog::omega_a3().flipped(),
        catalog::omega_simplex(),
    ] {
        let text = serde_json::to_string(&FormDoc::from(&form)).unwrap();
        let doc: FormDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(RationalTwoForm::try_from(&doc).unwrap(), form);
    }
    for (curve, _) in catalog::a1_boundary()
        .into_iter()
        .chain(catalog::a2_boundary())
    {
        let text = serde_json::to_string(&CurveDoc::from(&curve)).unwrap();
        let doc: CurveDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(ParamCurve::try_from(&doc).unwrap(), curve);
    }
    let off_curve = r#"{"implicit":{"vars":["x","y"],"terms":[{"exp":[0,1],"num":"1","den":"1"}]},"x":{"num":["0","1"],"den":["1"]},"y":{"num":["1"],"den":["1"]}}"#;
    let doc: CurveDoc = serde_json::from_str(off_curve).unwrap();
    assert!(ParamCurve::try_from(&doc).is_err());
}
