use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::forms::{sign, ParamCurve, RationalTwoForm};
use crate::planar::canonical::canonical_summands;
use crate::planar::curves::{
    b2_line, boundary_poly, cusp, cusp_parameter, cuspidal_tangent, line_incidence, line_through,
    top_corner, vandermonde_curve, XY,
};
use crate::scalar::{int, rat, Rational, Scalar};
use crate::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Membership {
    Inside,
    OnBoundary,
    Outside,
}

fn at(p: &Poly, pt: &(Rational, Rational)) -> Rational {
    p.eval(&[pt.0.clone(), pt.1.clone()])
        .expect("two variables")
}

fn check_n(n: u32) -> Result<()> {
    if n < 3 {
        return Err(Error::OutOfRange(format!("n = {n} must be at least 3")));
    }
    Ok(())
}

/// Exact position of a point relative to the `n`-th planar cell.
pub fn membership(n: u32, pt: &(Rational, Rational)) -> Result<Membership> {
    check_n(n)?;
    let (x, y) = pt;
    let (zero, one) = (Rational::zero(), Rational::one());
    if x < &zero || x > &one || y < &zero || y > &one {
        return Ok(Membership::Outside);
    }
    let b: Vec<Rational> = (0..=n)
        .map(|k| {
            if k < 3 {
                Ok(zero.clone())
            } else {
                Ok(at(&boundary_poly(k)?, pt))
            }
        })
        .collect::<Result<_>>()?;
    let l2 = at(&b2_line(), pt);
    let mut inside = !l2.is_negative() && !b[3].is_negative();
    for k in 3..n {
        if inside {
            break;
        }
        let ct = at(&cuspidal_tangent(k)?, pt);
        inside =
            !b[k as usize + 1].is_negative() && !b[k as usize].is_positive() && !ct.is_negative();
    }
    if !inside {
        return Ok(Membership::Outside);
    }
    if l2.is_zero() || b[n as usize].is_zero() {
        return Ok(Membership::OnBoundary);
    }
    for k in 3..n {
        if b[k as usize].is_zero() && on_lower_arc(k, pt) {
            return Ok(Membership::OnBoundary);
        }
    }
    Ok(Membership::Inside)
}

// Points of b_k = 0 over [1/k, 1/(k-1)] on the lower of the two y-branches.
fn on_lower_arc(k: u32, (x, y): &(Rational, Rational)) -> bool {
    let kk = int(k as i64);
    if x < &rat(1, k as i64) || x > &rat(1, k as i64 - 1) {
        return false;
    }
    let a = kk.clone() * kk.clone() * kk.clone() - kk.clone() * kk.clone();
    let beta = x * (int(6) * kk.clone() * kk.clone() - int(6) * kk.clone()) + int(4) - int(4) * kk;
    int(2) * a * y.clone() <= beta
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RegionKind {
    AI,
    AII,
    AIII,
    CellPiece,
}

/// Configuration type of a line against a cuspidal cubic: a double point at the cusp
/// gives `AIII`, a tangency elsewhere `AII`, three simple points `AI`.
pub fn classify_incidence(line: &Poly, curve: &ParamCurve, cusp_t: &Rational) -> RegionKind {
    let inc = line_incidence(line, curve);
    if inc.iter().any(|(t, m)| t == cusp_t && *m >= 2) {
        RegionKind::AIII
    } else if inc.iter().any(|(_, m)| *m >= 2) {
        RegionKind::AII
    } else if inc.iter().map(|(_, m)| m).sum::<u32>() == 3 {
        RegionKind::AI
    } else {
        RegionKind::CellPiece
    }
}

#[derive(Clone, Debug)]
pub struct Region {
    pub name: String,
    pub kind: RegionKind,
    /// `(p, s)` requires `sign(p) = s` strictly.
    pub conditions: Vec<(Poly, i8)>,
    pub witness: (Rational, Rational),
    pub form: RationalTwoForm,
}

impl Region {
    pub fn contains_strictly(&self, pt: &(Rational, Rational)) -> bool {
        self.conditions.iter().all(|(p, s)| sign(&at(p, pt)) == *s)
    }

    /// No condition has the wrong strict sign.
    pub fn contains_closed(&self, pt: &(Rational, Rational)) -> bool {
        self.conditions.iter().all(|(p, s)| sign(&at(p, pt)) != -*s)
    }
}

fn box_conditions() -> Vec<(Poly, i8)> {
    let p = |s: &str| Poly::parse(&XY, s).expect("literal");
    vec![(p("x"), 1), (p("1 - x"), 1), (p("y"), 1), (p("1 - y"), 1)]
}

fn lerp(a: &(Rational, Rational), b: &(Rational, Rational), w: &Rational) -> (Rational, Rational) {
    let v = Rational::one() - w.clone();
    (
        a.0.clone() * w.clone() + b.0.clone() * v.clone(),
        a.1.clone() * w.clone() + b.1.clone() * v,
    )
}

type Pt = (Rational, Rational);

fn find_witness(conds: &[(Poly, i8)], seeds: &[(Pt, Pt)]) -> Result<(Rational, Rational)> {
    let ok = |p: &(Rational, Rational)| conds.iter().all(|(q, s)| sign(&at(q, p)) == *s);
    for (a, b) in seeds {
        for (i, j) in [
            (1, 2),
            (1, 4),
            (3, 4),
            (1, 8),
            (7, 8),
            (1, 16),
            (15, 16),
            (1, 64),
            (63, 64),
        ] {
            let p = lerp(a, b, &rat(i, j));
            if ok(&p) {
                return Ok(p);
            }
        }
    }
    // float grid search, confirmed exactly
    let fc: Vec<(crate::PolyF64, i8)> = conds
        .iter()
        .map(|(p, s)| (p.map_coeffs(|c| c.to_f64()), *s))
        .collect();
    for level in 4..=11 {
        let m = 1i64 << level;
        for i in 1..m {
            for j in 1..m {
                let pf = [i as f64 / m as f64, j as f64 / m as f64];
                if fc
                    .iter()
                    .all(|(p, s)| p.eval(&pf).map(|v| v * *s as f64 > 0.0).unwrap_or(false))
                {
                    let p = (rat(i, m), rat(j, m));
                    if ok(&p) {
                        return Ok(p);
                    }
                }
            }
        }
    }
    Err(Error::Construction("no witness point found".into()))
}

/// Subdivision of the `n`-th cell into `1 + 2(n - 3)` pieces, each with the matching
/// summand of the canonical form.
pub fn subdivision(n: u32) -> Result<Vec<Region>> {
    check_n(n)?;
    let summands = canonical_summands(n)?;
    let form_of = |label: &str| {
        summands
            .iter()
            .find(|s| s.label == label)
            .map(|s| s.form.clone())
            .ok_or_else(|| Error::Construction(format!("missing summand {label}")))
    };
    let corner = top_corner();
    let mut out = Vec::new();
    let mut conds = box_conditions();
    conds.push((b2_line(), 1));
    conds.push((boundary_poly(3)?, 1));
    let b3 = vandermonde_curve(3)?;
    let base_kind = classify_incidence(&b2_line(), &b3, &cusp_parameter(3)?);
    let witness = find_witness(
        &conds,
        &[(cusp(3)?, corner.clone()), (cusp(2)?, corner.clone())],
    )?;
    out.push(Region {
        name: "base_3".into(),
        kind: base_kind,
        conditions: conds,
        witness,
        form: form_of("base_3")?,
    });
    for k in 3..n {
        let m = k + 1;
        let chord = line_through(&cusp(k)?, &corner)?;
        let mut shell = box_conditions();
        shell.push((boundary_poly(m)?, 1));
        shell.push((boundary_poly(k)?, -1));
        shell.push((cuspidal_tangent(k)?, 1));
        let s_up = sign(&at(&chord, &cusp(m)?));
        let mid = lerp(&cusp(k)?, &corner, &rat(1, 2));
        let curve_k = vandermonde_curve(k)?;
        let arc_k = curve_k
            .point(&((rat(1, k as i64) + int(1)) / int(2)))
            .expect("polynomial");
        let curve_m = vandermonde_curve(m)?;
        let arc_m = curve_m
            .point(&((rat(1, m as i64) + int(1)) / int(2)))
            .expect("polynomial");
        for (name, s, seeds, curve, cusp_k) in [
            (
                format!("upper_{m}"),
                s_up,
                vec![(cusp(m)?, mid.clone()), (arc_m, mid.clone())],
                &curve_m,
                m,
            ),
            (
                format!("lower_{m}"),
                -s_up,
                vec![(arc_k, mid.clone())],
                &curve_k,
                k,
            ),
        ] {
            let mut c = shell.clone();
            c.push((chord.clone(), s));
            let witness = find_witness(&c, &seeds)?;
            let kind = classify_incidence(&chord, curve, &cusp_parameter(cusp_k)?);
            out.push(Region {
                name: name.clone(),
                kind,
                conditions: c,
                witness,
                form: form_of(&name)?,
            });
        }
    }
    Ok(out)
}
