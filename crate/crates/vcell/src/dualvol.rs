//! Canonical functions of planar polygons as polar-dual volumes, analytic continuation by
//! subdivision chains, polygon approximation of convex regions and the limiting cell.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::segment_form;
use crate::forms::{ParamCurve, RationalTwoForm};
use crate::planar::canonical::{canonical_form, canonical_summands, eval_summands};
use crate::planar::curves::{
    boundary_poly, cusp, cuspidal_tangent, line_through, vandermonde_curve,
};
use crate::planar::{membership, Membership};
use crate::scalar::{int, parse_rational, rat, OrderedScalar, Rational, Scalar};

pub type Point<S> = (S, S);

fn cross<S: OrderedScalar>(o: &Point<S>, a: &Point<S>, b: &Point<S>) -> S {
    (a.0.clone() - o.0.clone()) * (b.1.clone() - o.1.clone())
        - (a.1.clone() - o.1.clone()) * (b.0.clone() - o.0.clone())
}

/// Strictly convex polygon with counterclockwise vertices.
#[derive(Clone, Debug, PartialEq)]
pub struct Polygon<S> {
    vertices: Vec<Point<S>>,
}

impl<S: OrderedScalar> Polygon<S> {
    /// Accepts either orientation; clockwise input is reversed.
    pub fn new(mut vertices: Vec<Point<S>>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::InvalidPolygon(format!(
                "{n} vertices, need at least 3"
            )));
        }
        if signed_area2(&vertices).is_negative() {
            vertices.reverse();
        }
        let mut dy_signs = Vec::new();
        for i in 0..n {
            let (a, b, c) = (&vertices[i], &vertices[(i + 1) % n], &vertices[(i + 2) % n]);
            if !cross(a, b, c).is_positive() {
                return Err(Error::InvalidPolygon(format!(
                    "not strictly convex at vertex {}",
                    (i + 1) % n
                )));
            }
            let dy = b.1.clone() - a.1.clone();
            if !dy.is_zero() {
                dy_signs.push(dy.is_positive());
            }
        }
        // Left turns everywhere and edge directions winding once around: convex and simple.
        let changes = (0..dy_signs.len())
            .filter(|&i| dy_signs[i] != dy_signs[(i + 1) % dy_signs.len()])
            .count();
        if changes != 2 {
            return Err(Error::InvalidPolygon("self-intersecting".into()));
        }
        Ok(Polygon { vertices })
    }

    pub fn vertices(&self) -> &[Point<S>] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Twice the Euclidean area.
    pub fn area2(&self) -> S {
        signed_area2(&self.vertices)
    }

    fn edges(&self) -> impl Iterator<Item = (&Point<S>, &Point<S>)> {
        let n = self.vertices.len();
        (0..n).map(move |i| (&self.vertices[i], &self.vertices[(i + 1) % n]))
    }

    pub fn contains_strictly(&self, p: &Point<S>) -> bool {
        self.edges().all(|(a, b)| cross(a, b, p).is_positive())
    }

    pub fn contains_closed(&self, p: &Point<S>) -> bool {
        self.edges().all(|(a, b)| !cross(a, b, p).is_negative())
    }

    pub fn translate(&self, v: &Point<S>) -> Self {
        let vertices = self
            .vertices
            .iter()
            .map(|(x, y)| (x.clone() + v.0.clone(), y.clone() + v.1.clone()))
            .collect();
        Polygon { vertices }
    }

    pub fn scale(&self, c: &S) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::InvalidPolygon("zero scale".into()));
        }
        Polygon::new(
            self.vertices
                .iter()
                .map(|(x, y)| (x.clone() * c.clone(), y.clone() * c.clone()))
                .collect(),
        )
    }

    /// `{y : <y, v> >= -1}` over the vertices; needs the origin strictly inside.
    pub fn polar_dual(&self) -> Result<Self> {
        let origin = (S::zero(), S::zero());
        if !self.contains_strictly(&origin) {
            return Err(Error::InvalidPolygon("origin not interior".into()));
        }
        // Dual vertex of the edge (u, w) solves <y, u> = <y, w> = -1.
        let dual = self
            .edges()
            .map(|(u, w)| {
                let d = u.0.clone() * w.1.clone() - u.1.clone() * w.0.clone();
                (
                    (u.1.clone() - w.1.clone()) / d.clone(),
                    (w.0.clone() - u.0.clone()) / d,
                )
            })
            .collect();
        Polygon::new(dual)
    }

    pub fn map<T: OrderedScalar>(&self, f: impl Fn(&S) -> T) -> Polygon<T> {
        Polygon {
            vertices: self.vertices.iter().map(|(x, y)| (f(x), f(y))).collect(),
        }
    }
}

fn signed_area2<S: OrderedScalar>(v: &[Point<S>]) -> S {
    let n = v.len();
    (0..n).fold(S::zero(), |acc, i| {
        let (a, b) = (&v[i], &v[(i + 1) % n]);
        acc + a.0.clone() * b.1.clone() - a.1.clone() * b.0.clone()
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DualVolumeValue<S> {
    /// Present exactly when the query point is interior.
    pub value: Option<S>,
    pub bounded: bool,
}

/// Normalized area (twice the Euclidean area) of `(P - x)^dual`, the canonical function of
/// `P` at an interior point.
pub fn dual_volume<S: OrderedScalar>(p: &Polygon<S>, x: &Point<S>) -> DualVolumeValue<S> {
    if !p.contains_strictly(x) {
        return DualVolumeValue {
            value: None,
            bounded: false,
        };
    }
    let shifted = p.translate(&(-x.0.clone(), -x.1.clone()));
    let value = shifted.polar_dual().map(|d| d.area2()).ok();
    DualVolumeValue {
        bounded: value.is_some(),
        value,
    }
}

/// Canonical function of a triangle from its edge lines: `(2A)^2 / (l_1 l_2 l_3)`.
/// Defined off the edge lines, so it continues the dual volume outside.
pub fn triangle_canonical<S: OrderedScalar>(t: &Polygon<S>, x: &Point<S>) -> Result<S> {
    if t.len() != 3 {
        return Err(Error::InvalidPolygon("not a triangle".into()));
    }
    let den = t.edges().fold(S::one(), |acc, (a, b)| acc * cross(a, b, x));
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    let a2 = t.area2();
    Ok(a2.clone() * a2 / den)
}

/// Andrew's monotone chain; collinear points are dropped.
pub fn convex_hull<S: OrderedScalar>(points: &[Point<S>]) -> Result<Polygon<S>> {
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| a.partial_cmp(b).expect("comparable coordinates"));
    pts.dedup();
    if pts.len() < 3 {
        return Err(Error::InvalidPolygon("fewer than 3 distinct points".into()));
    }
    let chain = |pts: &mut dyn Iterator<Item = &Point<S>>| {
        let mut c: Vec<Point<S>> = Vec::new();
        for p in pts {
            while c.len() >= 2 && !cross(&c[c.len() - 2], &c[c.len() - 1], p).is_positive() {
                c.pop();
            }
            c.push(p.clone());
        }
        c.pop();
        c
    };
    let mut hull = chain(&mut pts.iter());
    hull.extend(chain(&mut pts.iter().rev()));
    Polygon::new(hull)
}

/// Analytic continuation of the canonical function of `target` to `x`, using only dual
/// volumes of convex unions of scaffold pieces that contain `x` in their interior.
///
/// `target` must be a union of scaffold pieces. Every subset of pieces with a convex
/// union around `x` gives one linear relation; the target value is read off once it lies
/// in the span of those relations.
pub fn canonical_value_exterior(
    target: &Polygon<Rational>,
    x: &Point<Rational>,
    scaffold: &[Polygon<Rational>],
) -> Result<Rational> {
    if let Some(v) = dual_volume(target, x).value {
        return Ok(v);
    }
    let k = scaffold.len();
    if k == 0 || k > 16 {
        return Err(Error::InvalidScaffold(format!("{k} pieces, need 1..=16")));
    }
    for (i, a) in scaffold.iter().enumerate() {
        for b in &scaffold[i + 1..] {
            if overlaps(a, b) {
                return Err(Error::InvalidScaffold("pieces overlap".into()));
            }
        }
    }
    let coeffs: Vec<Rational> = scaffold
        .iter()
        .map(|p| {
            if p.vertices().iter().all(|v| target.contains_closed(v)) {
                int(1)
            } else {
                int(0)
            }
        })
        .collect();
    let covered: Rational = scaffold
        .iter()
        .zip(&coeffs)
        .map(|(p, c)| p.area2() * c)
        .sum();
    if covered != target.area2() {
        return Err(Error::InvalidScaffold(
            "target is not a union of scaffold pieces".into(),
        ));
    }
    if !scaffold.iter().any(|p| p.contains_strictly(x)) {
        return Err(Error::InvalidScaffold(
            "query point interior to no piece".into(),
        ));
    }
    let mut rows: Vec<(Vec<Rational>, Rational)> = Vec::new();
    for mask in 1u32..(1 << k) {
        let members: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).collect();
        let pts: Vec<Point<Rational>> = members
            .iter()
            .flat_map(|&i| scaffold[i].vertices().to_vec())
            .collect();
        let Ok(hull) = convex_hull(&pts) else {
            continue;
        };
        let area: Rational = members.iter().map(|&i| scaffold[i].area2()).sum();
        if hull.area2() != area {
            continue;
        }
        if let Some(v) = dual_volume(&hull, x).value {
            let row = (0..k)
                .map(|i| if mask >> i & 1 == 1 { int(1) } else { int(0) })
                .collect();
            rows.push((row, v));
        }
    }
    solve_in_span(rows, coeffs).ok_or_else(|| {
        Error::InvalidScaffold("chain does not determine the target from convex unions".into())
    })
}

fn overlaps(a: &Polygon<Rational>, b: &Polygon<Rational>) -> bool {
    // Separating axis over the edge normals of both convex polygons.
    let separated_by = |p: &Polygon<Rational>, q: &Polygon<Rational>| {
        p.edges()
            .any(|(u, w)| q.vertices().iter().all(|v| !cross(u, w, v).is_positive()))
    };
    !(separated_by(a, b) || separated_by(b, a))
}

// Gauss-Jordan on the relations, then reduce `target` against the pivots.
fn solve_in_span(
    mut rows: Vec<(Vec<Rational>, Rational)>,
    mut target: Vec<Rational>,
) -> Option<Rational> {
    let k = target.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..k {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i].0[col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rational::one() / rows[r].0[col].clone();
        rows[r].0.iter_mut().for_each(|c| *c *= inv.clone());
        rows[r].1 *= inv;
        for i in 0..rows.len() {
            if i != r && !rows[i].0[col].is_zero() {
                let f = rows[i].0[col].clone();
                let (src, rhs) = (rows[r].0.clone(), rows[r].1.clone());
                rows[i]
                    .0
                    .iter_mut()
                    .zip(&src)
                    .for_each(|(c, s)| *c -= f.clone() * s);
                rows[i].1 -= f * rhs;
            }
        }
        pivots.push((r, col));
        r += 1;
    }
    let mut value = Rational::zero();
    for (row, col) in pivots {
        let f = target[col].clone();
        if f.is_zero() {
            continue;
        }
        target
            .iter_mut()
            .zip(&rows[row].0)
            .for_each(|(t, s)| *t -= f.clone() * s);
        value += f * rows[row].1.clone();
    }
    target.iter().all(Zero::is_zero).then_some(value)
}

/// Running union `U_j = conv(first j + 2 stream points)` and the piece `P_j` it adds.
/// Each new point must see exactly one edge of the previous union, so every piece is a
/// triangle glued along a common edge.
pub fn approximate_region<S: OrderedScalar>(
    stream: &[Point<S>],
    j: usize,
) -> Result<(Polygon<S>, Polygon<S>)> {
    if j == 0 || stream.len() < j + 2 {
        return Err(Error::OutOfRange(format!(
            "need j >= 1 and at least j + 2 points, got j = {j}, {}",
            stream.len()
        )));
    }
    let first = Polygon::new(stream[..3].to_vec())?;
    let mut hull = first.vertices.clone();
    let mut piece = first.clone();
    for p in &stream[3..j + 2] {
        let n = hull.len();
        let visible: Vec<usize> = (0..n)
            .filter(|&i| cross(&hull[i], &hull[(i + 1) % n], p).is_negative())
            .collect();
        let touching = (0..n).any(|i| cross(&hull[i], &hull[(i + 1) % n], p).is_zero());
        match visible.as_slice() {
            [] => {
                return Err(Error::InvalidPolygon(
                    "stream point inside the current union".into(),
                ))
            }
            [i] if !touching => {
                piece = Polygon::new(vec![hull[*i].clone(), p.clone(), hull[(i + 1) % n].clone()])?;
                hull.insert(i + 1, p.clone());
            }
            _ => return Err(Error::InvalidPolygon("new piece is not convex".into())),
        }
    }
    // A single visible edge keeps the union strictly convex.
    Ok((Polygon { vertices: hull }, piece))
}

/// Vertices of the regular `m`-gon inscribed in the unit circle.
pub fn regular_polygon(m: usize) -> Result<Polygon<f64>> {
    let step = std::f64::consts::TAU / m as f64;
    Polygon::new(
        (0..m)
            .map(|i| ((i as f64 * step).cos(), (i as f64 * step).sin()))
            .collect(),
    )
}

/// Unit-circle points in dyadic refinement order: the square, then level by level midpoints.
pub fn dyadic_circle_stream(levels: u32) -> Vec<Point<f64>> {
    let m = 4usize << levels;
    let at = |i: usize| {
        let a = std::f64::consts::TAU * i as f64 / m as f64;
        (a.cos(), a.sin())
    };
    let mut out: Vec<Point<f64>> = (0..4).map(|q| at(q * m / 4)).collect();
    let mut stride = m / 4;
    while stride > 1 {
        out.extend((0..m / stride).map(|i| at(i * stride + stride / 2)));
        stride /= 2;
    }
    out
}

/// Lower-convex-hull pieces of `conv(cell_n) minus cell_n`: the region between the chord
/// `c_{k-1} c_k` and `b_k` for `k = 3..n`, and between `c_n (1,1)` and `b_n`. Each carries
/// its canonical form, cuspidal tangent over chord times cubic, normalized by the chord
/// residue and positive inside.
#[derive(Clone, Debug)]
pub struct ComplementPiece {
    pub label: String,
    pub chord: (Point<Rational>, Point<Rational>),
    pub witness: Point<Rational>,
    pub form: RationalTwoForm,
}

pub fn complement_pieces(n: u32) -> Result<Vec<ComplementPiece>> {
    if n < 3 {
        return Err(Error::OutOfRange(format!("n = {n} must be at least 3")));
    }
    let mut specs: Vec<(u32, Point<Rational>, Point<Rational>, Rational)> = (3..=n)
        .map(|k| Ok((k, cusp(k - 1)?, cusp(k)?, rat(1, 2 * k as i64))))
        .collect::<Result<_>>()?;
    specs.push((
        n,
        cusp(n)?,
        (int(1), int(1)),
        (rat(1, n as i64) + int(1)) / int(2),
    ));
    let mut out = Vec::new();
    for (k, a, b, t_mid) in specs {
        let chord = line_through(&a, &b)?;
        let raw = RationalTwoForm::new(
            cuspidal_tangent(k)?,
            vec![(chord.clone(), 1), (boundary_poly(k)?, 1)],
        )?;
        let res = raw.residue(&ParamCurve::line(&chord)?)?;
        let (lo, hi) = if a.0 < b.0 {
            (a.0.clone(), b.0.clone())
        } else {
            (b.0.clone(), a.0.clone())
        };
        let scale = segment_form(&lo, &hi).constant_ratio(&res).ok_or_else(|| {
            Error::Construction(format!(
                "chord residue of piece k = {k} is not a segment form"
            ))
        })?;
        let arc = vandermonde_curve(k)?
            .point(&t_mid)
            .ok_or_else(|| Error::Construction("pole on curve".into()))?;
        let mid = (
            (a.0.clone() + b.0.clone()) / int(2),
            (a.1.clone() + b.1.clone()) / int(2),
        );
        let witness = ((mid.0 + arc.0) / int(2), (mid.1 + arc.1) / int(2));
        let mut form = raw.scale(&scale);
        let v = form
            .eval(&[witness.0.clone(), witness.1.clone()])
            .ok_or(Error::ZeroDenominator)?;
        if v.is_negative() {
            form = form.neg();
        }
        let label = if b.0 == int(1) {
            format!("top_{k}")
        } else {
            format!("chord_{k}")
        };
        out.push(ComplementPiece {
            label,
            chord: (a, b),
            witness,
            form,
        });
    }
    Ok(out)
}

/// Exact canonical function of the `n`-th cell at `x`, from the summands when `x` is off
/// the subdivision chords, otherwise from the combined form.
pub fn cell_value(n: u32, x: &Point<Rational>) -> Result<Rational> {
    let p = [x.0.clone(), x.1.clone()];
    if let Some(v) = eval_summands(&canonical_summands(n)?, &p) {
        return Ok(v);
    }
    canonical_form(n)?.eval(&p).ok_or(Error::ZeroDenominator)
}

/// Hull of the cell vertices `(1/k, 1/k^2)`, `k = 1..n`.
pub fn cell_hull(n: u32) -> Result<Polygon<Rational>> {
    convex_hull(
        &(1..=n as i64)
            .map(|k| (rat(1, k), rat(1, k * k)))
            .collect::<Vec<_>>(),
    )
}

#[derive(Clone, Debug)]
pub struct LimitRow {
    pub n: u32,
    pub value: Rational,
    pub float_approx: f64,
    /// Float difference to the previous row.
    pub delta_float: Option<f64>,
    pub hull_value: Rational,
    pub pieces_value: Rational,
    /// `hull_value == value + pieces_value` exactly.
    pub hull_identity: bool,
}

#[derive(Clone, Debug)]
pub struct LimitReport {
    pub x: (Rational, Rational),
    pub rows: Vec<LimitRow>,
    /// Successive differences strictly decrease in magnitude.
    pub monotone_deltas: bool,
    /// Last difference below the tolerance.
    pub converged: bool,
    pub tolerance: f64,
}

pub const LIMIT_TOLERANCE: f64 = 1e-9;

/// Partial values of the limiting cell's canonical function at `x` for `n = 3..=n_max`,
/// each cross-checked against hull dual volume minus the complement pieces.
pub fn limiting_canonical(x: &Point<Rational>, n_max: u32) -> Result<LimitReport> {
    if n_max < 3 {
        return Err(Error::OutOfRange(format!(
            "n_max = {n_max} must be at least 3"
        )));
    }
    if membership(3, x)? != Membership::Inside {
        return Err(Error::OutOfRange(format!(
            "({}, {}) is not interior to the first cell",
            x.0, x.1
        )));
    }
    let mut rows: Vec<LimitRow> = Vec::new();
    for n in 3..=n_max {
        let value = cell_value(n, x)?;
        let hull_value = dual_volume(&cell_hull(n)?, x)
            .value
            .ok_or_else(|| Error::Construction("point not interior to the hull".into()))?;
        let p = [x.0.clone(), x.1.clone()];
        let pieces_value = complement_pieces(n)?
            .iter()
            .map(|c| c.form.eval(&p).ok_or(Error::ZeroDenominator))
            .sum::<Result<Rational>>()?;
        let float_approx = value.to_f64();
        let delta_float = rows.last().map(|r| float_approx - r.float_approx);
        let hull_identity = hull_value == value.clone() + pieces_value.clone();
        rows.push(LimitRow {
            n,
            value,
            float_approx,
            delta_float,
            hull_value,
            pieces_value,
            hull_identity,
        });
    }
    let deltas: Vec<f64> = rows
        .iter()
        .filter_map(|r| r.delta_float.map(f64::abs))
        .collect();
    let monotone_deltas = deltas.windows(2).all(|w| w[1] < w[0]);
    let converged = deltas.last().is_some_and(|d| *d < LIMIT_TOLERANCE);
    Ok(LimitReport {
        x: x.clone(),
        rows,
        monotone_deltas,
        converged,
        tolerance: LIMIT_TOLERANCE,
    })
}

/// `{"vertices": [["a/b", "c/d"], ...]}`
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolygonDoc {
    pub vertices: Vec<[String; 2]>,
}

impl TryFrom<&PolygonDoc> for Polygon<Rational> {
    type Error = Error;
    fn try_from(doc: &PolygonDoc) -> Result<Self> {
        let v = doc
            .vertices
            .iter()
            .map(|[a, b]| Ok((parse_rational(a)?, parse_rational(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Polygon::new(v)
    }
}

impl From<&Polygon<Rational>> for PolygonDoc {
    fn from(p: &Polygon<Rational>) -> Self {
        PolygonDoc {
            vertices: p
                .vertices()
                .iter()
                .map(|(x, y)| [x.to_string(), y.to_string()])
                .collect(),
        }
    }
}
