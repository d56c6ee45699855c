//! Reference regions bounded by the cuspidal cubic `y^2 = x^3` and lines.

use crate::exact::{RatFn, UniPoly};
use crate::forms::curve::ParamCurve;
use crate::forms::twoform::RationalTwoForm;
use crate::scalar::{int, rat};
use crate::Poly;

pub const XY: [&str; 2] = ["x", "y"];

pub fn p(s: &str) -> Poly {
    Poly::parse(&XY, s).expect("valid literal")
}

pub fn cusp_cubic() -> Poly {
    p("y^2 - x^3")
}

/// `(t^2, t^3)`.
pub fn cusp_curve() -> ParamCurve {
    let t2 = UniPoly::new(vec![int(0), int(0), int(1)]);
    let t3 = UniPoly::new(vec![int(0), int(0), int(0), int(1)]);
    ParamCurve::new(cusp_cubic(), RatFn::from_poly(t2), RatFn::from_poly(t3)).expect("on curve")
}

fn form(num: &str, dens: &[&str]) -> RationalTwoForm {
    RationalTwoForm::new(p(num), dens.iter().map(|d| (p(d), 1)).collect()).expect("valid form")
}

/// Cubic cut by the line `x = 1`.
pub fn omega_a1() -> RationalTwoForm {
    form("-2*x", &["x - 1", "y^2 - x^3"])
}

/// Cubic cut by its tangent line at `(1, 1)`.
pub fn omega_a2() -> RationalTwoForm {
    RationalTwoForm::new(
        p("y - x").scale(&rat(3, 2)),
        vec![(p("y - 3/2*x + 1/2"), 1), (cusp_cubic(), 1)],
    )
    .expect("valid form")
}

/// Cubic cut by the line `y = x` through the cusp.
pub fn omega_a3() -> RationalTwoForm {
    form("y", &["y - x", "y^2 - x^3"])
}

pub fn omega_s1() -> RationalTwoForm {
    form("x^2 + x*y", &["y", "x - 1", "y^2 - x^3"])
}

pub fn omega_triangle() -> RationalTwoForm {
    form("1", &["y", "x - 1", "y - x"])
}

pub fn omega_simplex() -> RationalTwoForm {
    form("1", &["x", "y", "1 - x - y"])
}

/// Boundary pieces `(curve, parameter interval)` of each reference region.
pub fn a1_boundary() -> Vec<(ParamCurve, (crate::Rational, crate::Rational))> {
    vec![
        (cusp_curve(), (int(-1), int(1))),
        (
            ParamCurve::line(&p("x - 1")).expect("line"),
            (int(-1), int(1)),
        ),
    ]
}

pub fn a2_boundary() -> Vec<(ParamCurve, (crate::Rational, crate::Rational))> {
    vec![
        (cusp_curve(), (rat(-1, 2), int(1))),
        (
            ParamCurve::line(&p("2*y - 3*x + 1")).expect("line"),
            (rat(1, 4), int(1)),
        ),
    ]
}

pub fn a3_boundary() -> Vec<(ParamCurve, (crate::Rational, crate::Rational))> {
    vec![
        (cusp_curve(), (int(0), int(1))),
        (
            ParamCurve::line(&p("y - x")).expect("line"),
            (int(0), int(1)),
        ),
    ]
}
