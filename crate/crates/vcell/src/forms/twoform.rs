use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{MultiPoly, PoleReport, RatFn};
use crate::forms::curve::ParamCurve;
use crate::scalar::{Rational, Scalar};
use crate::Poly;

/// Factor of the denominator with its multiplicity.
#[derive(Clone, Debug, PartialEq)]
pub struct Factor {
    pub poly: Poly,
    pub mult: u32,
}

/// `orientation * numerator / prod(factor^mult) dx ^ dy` on the plane.
///
/// Factors are kept primitive with positive leading coefficient, sorted, and
/// coprime to the numerator as far as exact division detects.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalTwoForm {
    numerator: Poly,
    factors: Vec<Factor>,
    orientation: i8,
}

/// Primitive representative with positive leading coefficient.
pub fn normalize_factor(p: &Poly) -> Poly {
    p.primitive().1
}

fn factor_key(p: &Poly) -> (u32, String) {
    (p.total_degree(), p.to_string())
}

impl RationalTwoForm {
    pub fn new(numerator: Poly, factors: Vec<(Poly, u32)>) -> Result<Self> {
        Self::with_orientation(numerator, factors, 1)
    }

    pub fn with_orientation(
        numerator: Poly,
        factors: Vec<(Poly, u32)>,
        orientation: i8,
    ) -> Result<Self> {
        if numerator.nvars() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                got: numerator.nvars(),
            });
        }
        if orientation != 1 && orientation != -1 {
            return Err(Error::OutOfRange(format!("orientation {orientation}")));
        }
        let mut num = numerator;
        let mut out: Vec<Factor> = Vec::new();
        for (p, m) in factors {
            num.same_vars(&p)?;
            if p.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            if m == 0 {
                continue;
            }
            let (c, q) = p.primitive();
            num = num.scale(&num_traits::pow(c.recip(), m as usize));
            if q.total_degree() == 0 {
                continue;
            }
            match out.iter_mut().find(|f| f.poly == q) {
                Some(f) => f.mult += m,
                None => out.push(Factor { poly: q, mult: m }),
            }
        }
        out.sort_by_key(|f| factor_key(&f.poly));
        let mut form = RationalTwoForm {
            numerator: num,
            factors: out,
            orientation,
        };
        form.cancel();
        Ok(form)
    }

    fn cancel(&mut self) {
        if self.numerator.is_zero() {
            self.factors.clear();
            return;
        }
        for f in self.factors.iter_mut() {
            while f.mult > 0 {
                match self.numerator.exact_div(&f.poly) {
                    Some(q) => {
                        self.numerator = q;
                        f.mult -= 1;
                    }
                    None => break,
                }
            }
        }
        self.factors.retain(|f| f.mult > 0);
    }

    pub fn numerator(&self) -> &Poly {
        &self.numerator
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn orientation(&self) -> i8 {
        self.orientation
    }

    pub fn vars(&self) -> &Arc<[String]> {
        self.numerator.vars()
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn denominator(&self) -> Poly {
        let mut d = MultiPoly::constant_in(self.vars().clone(), Rational::one());
        for f in &self.factors {
            d = &d * &f.poly.pow(f.mult);
        }
        d
    }

    /// Same form written with the opposite orientation flag.
    pub fn flipped(&self) -> Self {
        RationalTwoForm {
            numerator: -&self.numerator,
            factors: self.factors.clone(),
            orientation: -self.orientation,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut f = self.clone();
        f.numerator = f.numerator.scale(c);
        if c.is_zero() {
            f.factors.clear();
        }
        f
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    /// Coefficient of `dx ^ dy` at a point, `None` on the polar locus.
    pub fn eval(&self, p: &[Rational; 2]) -> Option<Rational> {
        let d = self.denominator().eval(p).ok()?;
        if d.is_zero() {
            return None;
        }
        let v = self.numerator.eval(p).ok()? / d;
        Some(if self.orientation < 0 { -v } else { v })
    }

    pub fn eval_f64(&self, p: [f64; 2]) -> f64 {
        let num = self
            .numerator
            .eval_in(&p, |c| c.to_f64())
            .unwrap_or(f64::NAN);
        let den = self
            .denominator()
            .eval_in(&p, |c| c.to_f64())
            .unwrap_or(f64::NAN);
        self.orientation as f64 * num / den
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.numerator.same_vars(&other.numerator)?;
        if self.orientation != other.orientation {
            return Err(Error::OrientationMismatch);
        }
        let mut lcd: Vec<Factor> = self.factors.clone();
        for f in &other.factors {
            match lcd.iter_mut().find(|g| g.poly == f.poly) {
                Some(g) => g.mult = g.mult.max(f.mult),
                None => lcd.push(f.clone()),
            }
        }
        let lift = |form: &Self| {
            let mut n = form.numerator.clone();
            for g in &lcd {
                let have = form
                    .factors
                    .iter()
                    .find(|f| f.poly == g.poly)
                    .map(|f| f.mult)
                    .unwrap_or(0);
                if g.mult > have {
                    n = &n * &g.poly.pow(g.mult - have);
                }
            }
            n
        };
        let num = &lift(self) + &lift(other);
        Self::with_orientation(
            num,
            lcd.into_iter().map(|f| (f.poly, f.mult)).collect(),
            self.orientation,
        )
    }

    pub fn factor_of(&self, p: &Poly) -> Option<&Factor> {
        let q = normalize_factor(p);
        self.factors.iter().find(|f| f.poly == q)
    }

    /// Residue along a curve whose implicit equation is a simple denominator factor, the
    /// `eta` in `omega = dF/F ^ eta`: for `omega = f / (F G) dx ^ dy` this is
    /// `orientation * f / (G * dF/dx) dy` on the curve, or `-f / (G * dF/dy) dx` where
    /// `dF/dx` vanishes identically there.
    pub fn residue(&self, curve: &ParamCurve) -> Result<RatFn> {
        let fac = self.factor_of(&curve.implicit).ok_or(Error::FactorAbsent)?;
        if fac.mult != 1 {
            return Err(Error::NotSimplePole(fac.mult));
        }
        let mut g = MultiPoly::constant_in(self.vars().clone(), Rational::one());
        for f in &self.factors {
            if f.poly != fac.poly {
                g = &g * &f.poly.pow(f.mult);
            }
        }
        let f = curve.pullback(&self.numerator);
        let g = curve.pullback(&g);
        let fx = curve.pullback(&fac.poly.derivative(0));
        let (vx, vy) = curve.velocity();
        let r = if !fx.is_zero() {
            f / (g * fx) * vy
        } else {
            let fy = curve.pullback(&fac.poly.derivative(1));
            -(f / (g * fy) * vx)
        };
        Ok(if self.orientation < 0 { -r } else { r })
    }

    /// Pullback along the projective map `v -> M v` written in the affine chart `z = 1`.
    pub fn pullback_linear(&self, m: &[[Rational; 3]; 3]) -> Result<Self> {
        let det = det3(m);
        if det.is_zero() {
            return Err(Error::Construction("singular matrix".into()));
        }
        let vars = self.vars().clone();
        let lin = |r: &[Rational; 3]| {
            MultiPoly::from_terms_in(
                vars.clone(),
                [
                    (vec![1, 0], r[0].clone()),
                    (vec![0, 1], r[1].clone()),
                    (vec![0, 0], r[2].clone()),
                ],
            )
        };
        let (x, y, w) = (lin(&m[0]), lin(&m[1]), lin(&m[2]));
        let e = self.numerator.total_degree();
        let mut num = self
            .numerator
            .homogeneous_compose(e, &x, &y, &w)?
            .scale(&det);
        let mut factors = Vec::new();
        let mut weight: i64 = -(e as i64) - 3;
        for f in &self.factors {
            let d = f.poly.total_degree();
            weight += d as i64 * f.mult as i64;
            factors.push((f.poly.homogeneous_compose(d, &x, &y, &w)?, f.mult));
        }
        if weight > 0 {
            num = &num * &w.pow(weight as u32);
        } else if weight < 0 {
            factors.push((w, (-weight) as u32));
        }
        Self::with_orientation(num, factors, self.orientation)
    }

    /// Residues along every denominator factor. Lines without a supplied curve get
    /// their standard parametrization.
    pub fn log_check(&self, curves: &[ParamCurve]) -> Result<LogReport> {
        let mut entries = Vec::new();
        for f in &self.factors {
            let curve = match curves
                .iter()
                .find(|c| normalize_factor(&c.implicit) == f.poly)
            {
                Some(c) => c.clone(),
                None if f.poly.total_degree() == 1 => ParamCurve::line(&f.poly)?,
                None => {
                    return Err(Error::Construction(format!(
                        "no parametrization supplied for {}",
                        f.poly
                    )))
                }
            };
            let (residue, poles) = if f.mult == 1 {
                let r = self.residue(&curve)?;
                let p = r.pole_orders();
                (Some(r), Some(p))
            } else {
                (None, None)
            };
            entries.push(LogEntry {
                factor: f.poly.clone(),
                mult: f.mult,
                residue,
                poles,
            });
        }
        Ok(LogReport { entries })
    }
}

fn det3(m: &[[Rational; 3]; 3]) -> Rational {
    m[0][0].clone() * (m[1][1].clone() * m[2][2].clone() - m[1][2].clone() * m[2][1].clone())
        - m[0][1].clone() * (m[1][0].clone() * m[2][2].clone() - m[1][2].clone() * m[2][0].clone())
        + m[0][2].clone() * (m[1][0].clone() * m[2][1].clone() - m[1][1].clone() * m[2][0].clone())
}

#[derive(Clone, Debug)]
pub struct LogEntry {
    pub factor: Poly,
    pub mult: u32,
    pub residue: Option<RatFn>,
    pub poles: Option<PoleReport>,
}

impl LogEntry {
    pub fn ok(&self) -> bool {
        self.mult == 1 && self.poles.as_ref().is_some_and(|p| p.all_simple())
    }
}

#[derive(Clone, Debug)]
pub struct LogReport {
    pub entries: Vec<LogEntry>,
}

impl LogReport {
    pub fn is_logarithmic(&self) -> bool {
        self.entries.iter().all(|e| e.ok())
    }
}

/// `Some(+1)` or `Some(-1)` when `a = s * b`, otherwise `None`.
pub fn sign_relation(a: &RatFn, b: &RatFn) -> Option<i8> {
    let c = a.constant_ratio(b)?;
    if c.is_one() {
        Some(1)
    } else if (-c).is_one() {
        Some(-1)
    } else {
        None
    }
}

/// Sign of a rational number as `-1, 0, 1`.
pub fn sign(r: &Rational) -> i8 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}
