use std::fmt::Write;

use crate::error::Result;
use crate::planar::canonical::canonical_form;
use crate::planar::curves::{boundary_curve, cusp, cuspidal_tangent, top_corner};
use crate::scalar::{int, rat, Rational, Scalar};
use crate::PolyF64;

const SIZE: f64 = 600.0;
const MARGIN: f64 = 20.0;
const EXTENT: f64 = 1.05;
const SAMPLES: usize = 256;
const GRID: usize = 160;

fn px(x: f64) -> f64 {
    MARGIN + x / EXTENT * (SIZE - 2.0 * MARGIN)
}

fn py(y: f64) -> f64 {
    SIZE - MARGIN - y / EXTENT * (SIZE - 2.0 * MARGIN)
}

fn path(points: &[(f64, f64)]) -> String {
    let mut d = String::new();
    for (i, (x, y)) in points.iter().enumerate() {
        let _ = write!(
            d,
            "{}{:.3},{:.3}",
            if i == 0 { "M" } else { " L" },
            px(*x),
            py(*y)
        );
    }
    d
}

fn arc_interval(k: u32, n: u32) -> (Rational, Rational) {
    match k {
        2 => (rat(1, 2), int(1)),
        _ if k == n => (int(0), int(1)),
        _ => (int(0), rat(1, k as i64)),
    }
}

/// SVG drawing of the `n`-th cell: boundary arcs, cusps, subdivision chords, cuspidal
/// tangents and the zero set of the adjoint.
pub fn plot_svg(n: u32) -> Result<String> {
    let cf = canonical_form(n)?;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(
        s,
        r#"<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white"/>"#
    );
    let _ = writeln!(
        s,
        r##"<path class="frame" d="{}" fill="none" stroke="#bbbbbb" stroke-width="0.5"/>"##,
        path(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0), (0.0, 0.0)])
    );
    for k in 2..=n {
        let curve = boundary_curve(k)?;
        let (a, b) = arc_interval(k, n);
        let (a, b) = (a.to_f64(), b.to_f64());
        let xf = |t: f64| {
            curve
                .x
                .num()
                .coeffs()
                .iter()
                .rev()
                .fold(0.0, |acc, c| acc * t + c.to_f64())
                / curve.x.den().lc().to_f64()
        };
        let yf = |t: f64| {
            curve
                .y
                .num()
                .coeffs()
                .iter()
                .rev()
                .fold(0.0, |acc, c| acc * t + c.to_f64())
                / curve.y.den().lc().to_f64()
        };
        let pts: Vec<(f64, f64)> = (0..=SAMPLES)
            .map(|i| {
                let t = a + (b - a) * i as f64 / SAMPLES as f64;
                (xf(t), yf(t))
            })
            .collect();
        let _ = writeln!(
            s,
            r#"<path class="boundary" data-k="{k}" d="{}" fill="none" stroke="black" stroke-width="1.5"/>"#,
            path(&pts)
        );
    }
    let corner = top_corner();
    for k in 3..n {
        let c = cusp(k)?;
        let _ = writeln!(
            s,
            r##"<path class="chord" data-k="{k}" d="{}" fill="none" stroke="#1f5fbf" stroke-width="1" stroke-dasharray="6,4"/>"##,
            path(&[
                (c.0.to_f64(), c.1.to_f64()),
                (corner.0.to_f64(), corner.1.to_f64())
            ])
        );
    }
    for k in 3..n {
        let l = cuspidal_tangent(k)?;
        let (a, b, c0) = (
            l.coeff(&[1, 0]).to_f64(),
            l.coeff(&[0, 1]).to_f64(),
            l.constant_term().to_f64(),
        );
        let cx = cusp(k)?.0.to_f64();
        let span = 0.6 / k as f64;
        let y_at = |x: f64| -(a * x + c0) / b;
        let _ = writeln!(
            s,
            r##"<path class="tangent" data-k="{k}" d="{}" fill="none" stroke="#bf5f1f" stroke-width="1" stroke-dasharray="2,3"/>"##,
            path(&[(cx - span, y_at(cx - span)), (cx + span, y_at(cx + span))])
        );
    }
    for k in 3..=n {
        let c = cusp(k)?;
        let _ = writeln!(
            s,
            r#"<circle class="cusp" data-k="{k}" cx="{:.3}" cy="{:.3}" r="2.5" fill="red"/>"#,
            px(c.0.to_f64()),
            py(c.1.to_f64())
        );
    }
    let adj: PolyF64 = cf.combined.numerator().map_coeffs(|c| c.to_f64());
    let _ = writeln!(
        s,
        r##"<path class="adjoint" d="{}" fill="none" stroke="#2f9f4f" stroke-width="1"/>"##,
        contour(&adj)
    );
    s.push_str("</svg>\n");
    Ok(s)
}

// Marching squares on the zero set of `f`, one move-line pair per cell crossing.
fn contour(f: &PolyF64) -> String {
    let h = EXTENT / GRID as f64;
    let val = |i: usize, j: usize| f.eval(&[i as f64 * h, j as f64 * h]).unwrap_or(f64::NAN);
    let grid: Vec<Vec<f64>> = (0..=GRID)
        .map(|i| (0..=GRID).map(|j| val(i, j)).collect())
        .collect();
    let mut d = String::new();
    for i in 0..GRID {
        for j in 0..GRID {
            let corners = [
                (i as f64 * h, j as f64 * h, grid[i][j]),
                ((i + 1) as f64 * h, j as f64 * h, grid[i + 1][j]),
                ((i + 1) as f64 * h, (j + 1) as f64 * h, grid[i + 1][j + 1]),
                (i as f64 * h, (j + 1) as f64 * h, grid[i][j + 1]),
            ];
            let mut hits = Vec::new();
            for e in 0..4 {
                let (x0, y0, v0) = corners[e];
                let (x1, y1, v1) = corners[(e + 1) % 4];
                if (v0 < 0.0) != (v1 < 0.0) {
                    let w = v0 / (v0 - v1);
                    hits.push((x0 + w * (x1 - x0), y0 + w * (y1 - y0)));
                }
            }
            for pair in hits.chunks(2) {
                if let [a, b] = pair {
                    let _ = write!(
                        d,
                        "M{:.3},{:.3} L{:.3},{:.3} ",
                        px(a.0),
                        py(a.1),
                        px(b.0),
                        py(b.1)
                    );
                }
            }
        }
    }
    d.trim_end().to_string()
}
