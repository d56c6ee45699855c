//! Exact tools for the positive geometry of Vandermonde cells: the images of the
//! probability simplex under the power-sum map.

pub mod dualvol;
pub mod error;
pub mod exact;
pub mod fixtures;
pub mod forms;
pub mod planar;
pub mod scalar;
pub mod vandermonde;

pub use error::{Error, Result};
pub use scalar::{int, parse_rational, rat, OrderedScalar, Rational, Scalar};

pub type Poly = exact::MultiPoly<Rational>;
pub type PolyF64 = exact::MultiPoly<f64>;
pub type UniPolyQ = exact::UniPoly<Rational>;
pub type PolygonQ = dualvol::Polygon<Rational>;
pub type PolygonF64 = dualvol::Polygon<f64>;
