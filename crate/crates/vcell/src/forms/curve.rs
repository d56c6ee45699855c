use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{rational_roots, RatFn, UniPoly};
use crate::scalar::Rational;
use crate::Poly;

/// Plane curve `implicit(x, y) = 0` with a rational parametrization `t -> (x(t), y(t))`.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamCurve {
    pub implicit: Poly,
    pub x: RatFn,
    pub y: RatFn,
}

impl ParamCurve {
    pub fn new(implicit: Poly, x: RatFn, y: RatFn) -> Result<Self> {
        if implicit.nvars() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                got: implicit.nvars(),
            });
        }
        let c = ParamCurve { implicit, x, y };
        if !c.pullback(&c.implicit).is_zero() {
            return Err(Error::Construction(
                "parametrization does not lie on the curve".into(),
            ));
        }
        Ok(c)
    }

    /// Line `a x + b y + c = 0`, parametrized by `x = t` unless it is vertical.
    pub fn line(l: &Poly) -> Result<Self> {
        if l.total_degree() != 1 || l.nvars() != 2 {
            return Err(Error::Construction(format!("not a line: {l}")));
        }
        let a = l.coeff(&[1, 0]);
        let b = l.coeff(&[0, 1]);
        let c = l.constant_term();
        let (x, y) = if !b.is_zero() {
            (
                RatFn::t(),
                RatFn::from_poly(UniPoly::new(vec![-c / b.clone(), -a / b])),
            )
        } else {
            (RatFn::constant(-c / a), RatFn::t())
        };
        ParamCurve::new(l.clone(), x, y)
    }

    pub fn point(&self, t: &Rational) -> Option<(Rational, Rational)> {
        Some((self.x.eval(t)?, self.y.eval(t)?))
    }

    /// `f(x(t), y(t))` as a rational function of `t`.
    pub fn pullback(&self, f: &Poly) -> RatFn {
        let (xn, xd) = (self.x.num(), self.x.den());
        let (yn, yd) = (self.y.num(), self.y.den());
        let dx = f.degree_in(0) as usize;
        let dy = f.degree_in(1) as usize;
        let pw = |p: &UniPoly<Rational>, k: usize| {
            let mut v = vec![UniPoly::constant(Rational::one())];
            for i in 0..k {
                v.push(&v[i] * p);
            }
            v
        };
        let (pxn, pxd, pyn, pyd) = (pw(xn, dx), pw(xd, dx), pw(yn, dy), pw(yd, dy));
        let mut num = UniPoly::zero();
        for (m, c) in f.terms() {
            let (i, j) = (m.0[0] as usize, m.0[1] as usize);
            let t = &(&pxn[i] * &pxd[dx - i]) * &(&pyn[j] * &pyd[dy - j]);
            num = &num + &t.scale(c);
        }
        RatFn::new(num, &pxd[dx] * &pyd[dy]).expect("nonzero denominator")
    }

    /// Parameter values mapping to `p`.
    pub fn parameters_of(&self, p: &(Rational, Rational)) -> Vec<Rational> {
        let ex = &self.x.num().clone() - &self.x.den().scale(&p.0);
        let ey = &self.y.num().clone() - &self.y.den().scale(&p.1);
        let g = match (ex.is_zero(), ey.is_zero()) {
            (true, true) => return vec![],
            (true, false) => ey,
            (false, true) => ex,
            (false, false) => ex.gcd(&ey),
        };
        rational_roots(&g)
            .into_iter()
            .filter(|t| self.point(t).as_ref() == Some(p))
            .collect()
    }

    /// Tangent vector `(x'(t), y'(t))`.
    pub fn velocity(&self) -> (RatFn, RatFn) {
        (self.x.derivative(), self.y.derivative())
    }
}
