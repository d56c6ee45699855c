//! Reference polynomials for the quartic cells and their verification.

use num_traits::Zero;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::exact::PolyMatrix;
use crate::scalar::Rational;
use crate::vandermonde::{
    sample_simplex, vandermonde_map, BoundaryPatch, MultiplicityVector, UrsellType,
};
use crate::Poly;

pub const Y: [&str; 3] = ["y1", "y2", "y3"];

/// Boundary hypersurface of the `(4, 4)` cell through the patches `(2,1,1)` and `(1,1,2)`.
pub const P_TEXT: &str = "72*y1^6 - 684*y1^5 + 1536*y1^4*y2 - 720*y1^4*y3 + 1209*y1^4 \
- 544*y1^3*y2^2 - 4168*y1^3*y2 + 3096*y1^3*y3 - 796*y1^3 + 4224*y1^2*y2^2 - 6336*y1^2*y2*y3 \
+ 3144*y1^2*y2 + 2304*y1^2*y3^2 - 2700*y1^2*y3 + 210*y1^2 - 576*y1*y2^3 + 1152*y1*y2^2*y3 \
- 4512*y1*y2^2 + 8208*y1*y2*y3 - 648*y1*y2 - 3744*y1*y3^2 + 576*y1*y3 - 24*y1 - 192*y2^4 \
+ 2496*y2^3 - 7200*y2^2*y3 + 544*y2^2 + 6912*y2*y3^2 - 1008*y2*y3 + 40*y2 - 2304*y3^3 \
+ 468*y3^2 - 36*y3 + 1";

/// The same relation as commonly printed, with leading coefficient 1.
pub const P_PRINTED_TEXT: &str = "y1^6 - 684*y1^5 + 1536*y1^4*y2 - 720*y1^4*y3 + 1209*y1^4 \
- 544*y1^3*y2^2 - 4168*y1^3*y2 + 3096*y1^3*y3 - 796*y1^3 + 4224*y1^2*y2^2 - 6336*y1^2*y2*y3 \
+ 3144*y1^2*y2 + 2304*y1^2*y3^2 - 2700*y1^2*y3 + 210*y1^2 - 576*y1*y2^3 + 1152*y1*y2^2*y3 \
- 4512*y1*y2^2 + 8208*y1*y2*y3 - 648*y1*y2 - 3744*y1*y3^2 + 576*y1*y3 - 24*y1 - 192*y2^4 \
+ 2496*y2^3 - 7200*y2^2*y3 + 544*y2^2 + 6912*y2*y3^2 - 1008*y2*y3 + 40*y2 - 2304*y3^3 \
+ 468*y3^2 - 36*y3 + 1";

/// Image surface of the `(3, 4)` map.
pub const Q_TEXT: &str = "3*y1^2 - 6*y1 + 8*y2 - 6*y3 + 1";

/// SHA-256 of the canonical text of `P` and `Q`.
pub const FIXTURE_DIGEST: &str = "86f360ec7f7ad468a5db3be29fc3599de21078fa163052f4fc16b15b747c2c3c";

pub fn quartic_p() -> Poly {
    Poly::parse(&Y, P_TEXT).expect("fixture parses")
}

pub fn quartic_p_printed() -> Poly {
    Poly::parse(&Y, P_PRINTED_TEXT).expect("fixture parses")
}

pub fn quartic_q() -> Poly {
    Poly::parse(&Y, Q_TEXT).expect("fixture parses")
}

pub fn digest() -> String {
    let text = format!("{}\n{}\n", quartic_p(), quartic_q());
    Sha256::digest(text.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Sylvester-type matrix of the `(n - 1, 1)` parametrization in variables `(x, y, n)`,
/// every entry multiplied by `(n - 1)^2`.
pub fn resultant_template() -> PolyMatrix<Rational> {
    let v = ["x", "y", "n"];
    let p = |s: &str| Poly::parse(&v, s).expect("literal");
    let a = "n^2 - 2*n";
    let b = "n^2 - n";
    let c = "2 - 2*n";
    let d = "n - 1 - x*n^2 + 2*x*n - x";
    let e = "1 - y*n^2 + 2*y*n - y";
    let rows = [
        [a, "0", b, "0", "0"],
        ["3", a, c, b, "0"],
        ["-3", "3", d, c, b],
        [e, "-3", "0", d, c],
        ["0", e, "0", "0", d],
    ];
    PolyMatrix::new(
        rows.iter()
            .map(|r| r.iter().map(|s| p(s)).collect())
            .collect(),
    )
    .expect("square")
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }
}

fn patch(blocks: [u32; 3]) -> BoundaryPatch {
    BoundaryPatch::new(
        MultiplicityVector::new(UrsellType::Type2, 0, blocks.to_vec()).expect("valid"),
    )
    .expect("valid")
}

fn vanishes_on_patch(p: &Poly, blocks: [u32; 3], samples: usize, seed: u64) -> (usize, usize) {
    let pt = patch(blocks);
    let mut bad = 0;
    for params in pt.sample_params(samples, seed) {
        let y = pt.eval(&params).expect("admissible");
        if !p.eval(&y).expect("three variables").is_zero() {
            bad += 1;
        }
    }
    (samples - bad, samples)
}

/// Point-sampling checks of `P` and `Q`.
pub fn verify_quartic_boundaries(samples: usize, seed: u64) -> Report {
    let mut r = Report::default();
    let q = quartic_q();
    let mut bad = 0;
    for x in sample_simplex(3, samples, seed) {
        let y = vandermonde_map(&x, 4).expect("d = 4");
        if !q.eval(&y).expect("three variables").is_zero() {
            bad += 1;
        }
    }
    r.push(
        "Q vanishes on the (3,4) image",
        bad == 0,
        format!("{}/{samples} samples", samples - bad),
    );
    let p = quartic_p();
    for blocks in [[2, 1, 1], [1, 1, 2]] {
        let (ok, total) = vanishes_on_patch(&p, blocks, samples, seed ^ 0x5eed);
        r.push(
            format!("P vanishes on patch {blocks:?}"),
            ok == total,
            format!("{ok}/{total} samples"),
        );
    }
    r.push(
        "P has 34 terms",
        p.len() == 34,
        format!("{} terms", p.len()),
    );
    r.push("fixture digest", digest() == FIXTURE_DIGEST, digest());
    r
}

/// Symbolic check: `P` composed with both patches is the zero polynomial.
pub fn verify_quartic_symbolic() -> Report {
    let mut r = Report::default();
    let p = quartic_p();
    for blocks in [[2, 1, 1], [1, 1, 2]] {
        let map = patch(blocks)
            .polynomial_map(&["a", "b"])
            .expect("two parameters");
        let comp = p.compose(&map).expect("three substitutions");
        r.push(
            format!("P o patch {blocks:?} == 0"),
            comp.is_zero(),
            format!("{} terms remain", comp.len()),
        );
    }
    r
}

/// Checks that the patches with first multiplicities `m1` and `n - m1 - 1` lie on the
/// same boundary hypersurface, using the fixture relation.
pub fn verify_same_hypersurface(n: usize, m1: usize, samples: usize, seed: u64) -> Result<Report> {
    if n < 3 || m1 < 1 || m1 + 2 > n {
        return Err(Error::OutOfRange(format!(
            "need 1 <= m1 <= n - 2, got n = {n}, m1 = {m1}"
        )));
    }
    if n != 4 {
        return Err(Error::OutOfRange(format!(
            "no fixture relation for n = {n}"
        )));
    }
    let p = quartic_p();
    let mut r = Report::default();
    for a in [m1, n - m1 - 1] {
        let blocks = [a as u32, 1, (n - a - 1) as u32];
        let (ok, total) = vanishes_on_patch(&p, blocks, samples, seed);
        r.push(
            format!("P vanishes on patch {blocks:?}"),
            ok == total,
            format!("{ok}/{total} samples"),
        );
    }
    Ok(r)
}
