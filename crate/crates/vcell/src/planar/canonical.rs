use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{segment_form, RatFn};
use crate::forms::{sign_relation, ParamCurve, RationalTwoForm};
use crate::planar::curves::{
    b2_line, boundary_curve, boundary_factor, boundary_poly, cusp, cuspidal_tangent, line_through,
    top_corner, vandermonde_curve,
};
use crate::scalar::{int, rat, Rational};
use crate::Poly;

/// One term of the recursive decomposition.
#[derive(Clone, Debug, PartialEq)]
pub struct Summand {
    pub label: String,
    pub form: RationalTwoForm,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CanonicalForm {
    pub n: u32,
    pub summands: Vec<Summand>,
    pub combined: RationalTwoForm,
    /// Subdivision lines whose poles cancel in the sum.
    pub cancelled: Vec<Poly>,
}

/// Interior point used to fix the global sign.
pub fn orientation_witness() -> [Rational; 2] {
    [rat(7, 18), rat(1, 6)]
}

fn form(num: Poly, dens: Vec<Poly>) -> Result<RationalTwoForm> {
    RationalTwoForm::new(num, dens.into_iter().map(|d| (d, 1)).collect())
}

fn ratio(a: &RatFn, b: &RatFn, what: &str) -> Result<Rational> {
    a.constant_ratio(b)
        .ok_or_else(|| Error::Construction(format!("{what}: residues are not proportional")))
}

/// Point where the chord `l(c_{m-1}, (1,1))` meets `b_m` a third time.
pub fn chord_third_point(m: u32) -> Result<(Rational, Rational)> {
    let chord = line_through(&cusp(m - 1)?, &top_corner())?;
    let curve = vandermonde_curve(m)?;
    let pulled = curve.pullback(&chord);
    let roots = crate::exact::rational_roots(pulled.num());
    let extra: Vec<Rational> = roots
        .into_iter()
        .filter(|t| !t.is_zero() && *t != int(1))
        .collect();
    match extra.as_slice() {
        [t] => curve
            .point(t)
            .ok_or_else(|| Error::Construction("pole on curve".into())),
        _ => Err(Error::Construction(format!(
            "expected one extra intersection, found {}",
            extra.len()
        ))),
    }
}

/// Summands of the recursive canonical form of the `n`-th planar cell, scaled by residues.
pub fn canonical_summands(n: u32) -> Result<Vec<Summand>> {
    if n < 3 {
        return Err(Error::OutOfRange(format!("n = {n} must be at least 3")));
    }
    let unit = segment_form(&int(0), &int(1));
    let b3 = vandermonde_curve(3)?;
    let base = form(
        line_through(&cusp(3)?, &top_corner())?,
        vec![b2_line(), boundary_poly(3)?],
    )?;
    let lambda = ratio(&unit, &base.residue(&b3)?, "base")?;
    let mut out = vec![Summand {
        label: "base_3".into(),
        form: base.scale(&lambda),
    }];
    for m in 4..=n {
        let chord = line_through(&cusp(m - 1)?, &top_corner())?;
        let chord_curve = ParamCurve::line(&chord)?;
        let adj = line_through(&cusp(m)?, &chord_third_point(m)?)?;
        let up = form(adj, vec![chord.clone(), boundary_poly(m)?])?;
        let alpha = ratio(&unit, &up.residue(&vandermonde_curve(m)?)?, "upper")?;
        let up = up.scale(&alpha);
        let low = form(
            cuspidal_tangent(m - 1)?,
            vec![chord.clone(), boundary_poly(m - 1)?],
        )?;
        let beta = -ratio(
            &up.residue(&chord_curve)?,
            &low.residue(&chord_curve)?,
            "chord",
        )?;
        let low = low.scale(&beta);
        out.push(Summand {
            label: format!("upper_{m}"),
            form: up,
        });
        out.push(Summand {
            label: format!("lower_{m}"),
            form: low,
        });
    }
    let w = orientation_witness();
    let total: Rational = out
        .iter()
        .map(|s| {
            s.form
                .eval(&w)
                .ok_or_else(|| Error::Construction("witness on a pole".into()))
        })
        .sum::<Result<Rational>>()?;
    if total < Rational::zero() {
        for s in out.iter_mut() {
            s.form = s.form.neg();
        }
    }
    Ok(out)
}

pub fn canonical_form(n: u32) -> Result<CanonicalForm> {
    let summands = canonical_summands(n)?;
    let mut combined = summands[0].form.clone();
    for s in &summands[1..] {
        combined = combined.add(&s.form)?;
    }
    let mut cancelled = Vec::new();
    for m in 4..=n {
        let chord = line_through(&cusp(m - 1)?, &top_corner())?;
        if combined.factor_of(&chord).is_some() {
            return Err(Error::Construction(format!(
                "pole along the chord for m = {m} does not cancel"
            )));
        }
        cancelled.push(chord);
    }
    Ok(CanonicalForm {
        n,
        summands,
        combined,
        cancelled,
    })
}

impl CanonicalForm {
    pub fn eval(&self, p: &[Rational; 2]) -> Option<Rational> {
        self.combined.eval(p)
    }
}

/// Sum of summand values; agrees with the combined form off the cancelled lines.
pub fn eval_summands(summands: &[Summand], p: &[Rational; 2]) -> Option<Rational> {
    summands.iter().map(|s| s.form.eval(p)).sum()
}

/// Residue of the canonical form along one boundary curve.
#[derive(Clone, Debug)]
pub struct BoundaryResidue {
    pub k: u32,
    pub curve: ParamCurve,
    pub residue: RatFn,
    /// Parameter interval of the boundary arc.
    pub interval: (Rational, Rational),
    /// `+1` or `-1` when the residue is that multiple of the segment form, else `None`.
    pub sign: Option<i8>,
}

/// Residues along `b_2', b_3, ..., b_n`. In the parametrizations used here the arcs are
/// `[1/2, 1]` in `x` on the line, `[0, 1/k]` on `b_k` for `k < n`, `[0, 1]` on `b_n`.
pub fn boundary_residues(cf: &CanonicalForm) -> Result<Vec<BoundaryResidue>> {
    let n = cf.n;
    let mut out = Vec::new();
    for k in 2..=n {
        let curve = boundary_curve(k)?;
        let interval = match k {
            2 => (rat(1, 2), int(1)),
            _ if k == n => (int(0), int(1)),
            _ => (int(0), rat(1, k as i64)),
        };
        let residue = cf.combined.residue(&curve)?;
        let sign = sign_relation(&residue, &segment_form(&interval.0, &interval.1));
        out.push(BoundaryResidue {
            k,
            curve,
            residue,
            interval,
            sign,
        });
    }
    Ok(out)
}

/// Boundary polynomials of the `n`-th cell in the normalization used by the factors.
pub fn boundary_factors(n: u32) -> Result<Vec<Poly>> {
    (2..=n).map(boundary_factor).collect()
}
