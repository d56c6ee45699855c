use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{rational_roots, MultiPoly, RatFn, UniPoly};
use crate::forms::ParamCurve;
use crate::scalar::{int, rat, Rational};
use crate::Poly;

pub const XY: [&str; 2] = ["x", "y"];

fn check_k(k: u32) -> Result<()> {
    if k < 2 {
        return Err(Error::OutOfRange(format!("k = {k} must be at least 2")));
    }
    Ok(())
}

fn coeffs(k: u32) -> [(Vec<u32>, Rational); 7] {
    let k = int(k as i64);
    let k2 = k.clone() * k.clone();
    let k3 = k2.clone() * k.clone();
    [
        (
            vec![3, 0],
            k3.clone() - int(4) * k2.clone() + int(4) * k.clone(),
        ),
        (vec![0, 2], -k3 + k2.clone()),
        (vec![1, 1], int(6) * k2.clone() - int(6) * k.clone()),
        (vec![2, 0], int(-3) * k2 + int(3) * k.clone() - int(3)),
        (vec![1, 0], int(3) * k.clone()),
        (vec![0, 1], int(4) - int(4) * k),
        (vec![0, 0], int(-1)),
    ]
}

/// Boundary curve `b_k` of the planar cells, normalized to constant term `-1`.
/// For `k = 2` it is the square of a line.
pub fn boundary_poly(k: u32) -> Result<Poly> {
    check_k(k)?;
    Ok(Poly::from_terms(&XY, coeffs(k)))
}

/// `b_k` with `k` replaced by a third variable `n`.
pub fn boundary_poly_symbolic() -> Poly {
    let v = ["x", "y", "n"];
    let p = |s: &str| Poly::parse(&v, s).expect("literal");
    let terms = [
        ("x^3", "n^3 - 4*n^2 + 4*n"),
        ("y^2", "-n^3 + n^2"),
        ("x*y", "6*n^2 - 6*n"),
        ("x^2", "-3*n^2 + 3*n - 3"),
        ("x", "3*n"),
        ("y", "4 - 4*n"),
        ("1", "-1"),
    ];
    terms
        .iter()
        .fold(MultiPoly::zero(&v), |acc, (m, c)| &acc + &(&p(m) * &p(c)))
}

/// The line `2y - 3x + 1` whose square is `-b_2`.
pub fn b2_line() -> Poly {
    Poly::parse(&XY, "2*y - 3*x + 1").expect("literal")
}

/// Cusp `(1/k, 1/k^2)` of `b_k`.
pub fn cusp(k: u32) -> Result<(Rational, Rational)> {
    check_k(k)?;
    Ok((rat(1, k as i64), rat(1, (k * k) as i64)))
}

/// Boundary arc family of `b_k` from the block structure `(k - 1, 1)`; `t` is the
/// singleton coordinate. `t = 0` gives `c_{k-1}`, `t = 1/k` the cusp, `t = 1` the point `(1, 1)`.
pub fn vandermonde_curve(k: u32) -> Result<ParamCurve> {
    if k < 3 {
        return Err(Error::OutOfRange(format!("k = {k} must be at least 3")));
    }
    let m = int(k as i64 - 1);
    let s = UniPoly::new(vec![int(1), int(-1)]);
    let t = UniPoly::<Rational>::t();
    let x = &s.pow(2).scale(&m.recip()) + &t.pow(2);
    let y = &s.pow(3).scale(&(m.clone() * m).recip()) + &t.pow(3);
    ParamCurve::new(boundary_poly(k)?, RatFn::from_poly(x), RatFn::from_poly(y))
}

/// Boundary curve of index `k`: the line for `k = 2`, the cubic otherwise.
pub fn boundary_curve(k: u32) -> Result<ParamCurve> {
    if k == 2 {
        ParamCurve::line(&b2_line())
    } else {
        vandermonde_curve(k)
    }
}

/// Boundary polynomial of index `k` as it appears in canonical forms.
pub fn boundary_factor(k: u32) -> Result<Poly> {
    if k == 2 {
        Ok(b2_line())
    } else {
        boundary_poly(k)
    }
}

/// Primitive integer line with positive `y` coefficient, or positive `x` coefficient
/// when vertical.
pub fn normalize_line(l: &Poly) -> Poly {
    let (_, p) = l.primitive();
    let lead = if !p.coeff(&[0, 1]).is_zero() {
        p.coeff(&[0, 1])
    } else {
        p.coeff(&[1, 0])
    };
    if lead.is_negative() {
        -p
    } else {
        p
    }
}

pub fn line_through(a: &(Rational, Rational), b: &(Rational, Rational)) -> Result<Poly> {
    if a == b {
        return Err(Error::Construction("line through coincident points".into()));
    }
    let dx = b.0.clone() - a.0.clone();
    let dy = b.1.clone() - a.1.clone();
    let c = a.0.clone() * dy.clone() - a.1.clone() * dx.clone();
    let l = Poly::from_terms(&XY, [(vec![0, 1], dx), (vec![1, 0], -dy), (vec![0, 0], c)]);
    Ok(normalize_line(&l))
}

/// Line meeting a polynomially parametrized curve with multiplicity 3 at the cusp
/// parameter `t0`.
pub fn tangent_at_cusp(curve: &ParamCurve, t0: &Rational) -> Result<Poly> {
    if !curve.x.is_polynomial() || !curve.y.is_polynomial() {
        return Err(Error::Construction(
            "polynomial parametrization required".into(),
        ));
    }
    let xp = curve.x.num().scale(&curve.x.den().lc().recip());
    let yp = curve.y.num().scale(&curve.y.den().lc().recip());
    if !xp.derivative().eval(t0).is_zero() || !yp.derivative().eval(t0).is_zero() {
        return Err(Error::Construction("parameter is not a cusp".into()));
    }
    let a = yp.derivative().derivative().eval(t0);
    let b = -xp.derivative().derivative().eval(t0);
    if a.is_zero() && b.is_zero() {
        return Err(Error::Construction("degenerate cusp".into()));
    }
    let c = -(a.clone() * xp.eval(t0) + b.clone() * yp.eval(t0));
    let l = normalize_line(&Poly::from_terms(
        &XY,
        [(vec![1, 0], a), (vec![0, 1], b), (vec![0, 0], c)],
    ));
    let mult = curve.pullback(&l).num().root_multiplicity(t0);
    if mult != 3 {
        return Err(Error::Construction(format!(
            "tangent meets the cusp with multiplicity {mult}"
        )));
    }
    Ok(l)
}

/// Parameter of the cusp `c_k` on `vandermonde_curve(k)`; checks it is unique.
pub fn cusp_parameter(k: u32) -> Result<Rational> {
    let curve = vandermonde_curve(k)?;
    let ts = curve.parameters_of(&cusp(k)?);
    match ts.as_slice() {
        [t] => Ok(t.clone()),
        _ => Err(Error::Construction(format!(
            "cusp has {} preimages",
            ts.len()
        ))),
    }
}

/// `c~_k = k^2 y - 3k x + 2`, computed from the parametrization.
pub fn cuspidal_tangent(k: u32) -> Result<Poly> {
    let curve = vandermonde_curve(k)?;
    tangent_at_cusp(&curve, &cusp_parameter(k)?)
}

/// Parameters where a line meets a curve, with multiplicities.
pub fn line_incidence(line: &Poly, curve: &ParamCurve) -> Vec<(Rational, u32)> {
    let f = curve.pullback(line);
    let num = f.num();
    rational_roots(num)
        .into_iter()
        .map(|r| {
            let m = num.root_multiplicity(&r);
            (r, m)
        })
        .collect()
}

pub fn is_singular_at(k: u32, p: &(Rational, Rational)) -> Result<bool> {
    let b = boundary_poly(k)?;
    let pt = [p.0.clone(), p.1.clone()];
    Ok(b.eval(&pt)?.is_zero()
        && b.derivative(0).eval(&pt)?.is_zero()
        && b.derivative(1).eval(&pt)?.is_zero())
}

/// Corner `(1, 1)` shared by all boundary curves.
pub fn top_corner() -> (Rational, Rational) {
    (Rational::one(), Rational::one())
}

/// `det` of the cleared resultant matrix at `n` and the scalar `lambda` with
/// `det = lambda * b_n`.
pub fn resultant_boundary(n: u32) -> Result<(Poly, Rational)> {
    if n < 3 {
        return Err(Error::OutOfRange(format!("n = {n} must be at least 3")));
    }
    let template = crate::fixtures::resultant_template();
    let vars: std::sync::Arc<[String]> = XY.iter().map(|s| s.to_string()).collect();
    let sub = [
        MultiPoly::var_in(vars.clone(), 0),
        MultiPoly::var_in(vars.clone(), 1),
        MultiPoly::constant_in(vars, int(n as i64)),
    ];
    let m = template.map(|e| e.compose(&sub))?;
    let scale = num_traits::pow(int(n as i64 - 1), 10);
    let det = m.det()?.scale(&scale.recip());
    let b = boundary_poly(n)?;
    let lambda = det.constant_term() / b.constant_term();
    if det != b.scale(&lambda) {
        return Err(Error::Construction(format!(
            "determinant is not a multiple of b_{n}"
        )));
    }
    Ok((det, lambda))
}
