//! Rational differential forms, residues and the logarithmic check.

pub mod catalog;
pub mod curve;
pub mod json;
pub mod twoform;

pub use curve::ParamCurve;
pub use json::{CurveDoc, FactorDoc, FormDoc};
pub use twoform::{
    normalize_factor, sign, sign_relation, Factor, LogEntry, LogReport, RationalTwoForm,
};
