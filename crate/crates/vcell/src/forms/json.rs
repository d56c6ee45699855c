use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::json::{PolyDoc, RatFnDoc};
use crate::exact::RatFn;
use crate::forms::{ParamCurve, RationalTwoForm};
use crate::Poly;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FactorDoc {
    pub poly: PolyDoc,
    pub mult: u32,
}

/// `{"numerator": poly, "denominator_factors": [{"poly": poly, "mult": m}], "orientation": 1 | -1}`
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FormDoc {
    pub numerator: PolyDoc,
    pub denominator_factors: Vec<FactorDoc>,
    pub orientation: i8,
}

/// `{"implicit": poly, "x": ratfn, "y": ratfn}`
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CurveDoc {
    pub implicit: PolyDoc,
    pub x: RatFnDoc,
    pub y: RatFnDoc,
}

impl From<&RationalTwoForm> for FormDoc {
    fn from(f: &RationalTwoForm) -> Self {
        FormDoc {
            numerator: PolyDoc::from(f.numerator()),
            denominator_factors: f
                .factors()
                .iter()
                .map(|g| FactorDoc {
                    poly: PolyDoc::from(&g.poly),
                    mult: g.mult,
                })
                .collect(),
            orientation: f.orientation(),
        }
    }
}

impl TryFrom<&FormDoc> for RationalTwoForm {
    type Error = Error;
    fn try_from(d: &FormDoc) -> Result<Self> {
        let factors = d
            .denominator_factors
            .iter()
            .map(|g| Ok((Poly::try_from(&g.poly)?, g.mult)))
            .collect::<Result<Vec<_>>>()?;
        RationalTwoForm::with_orientation(Poly::try_from(&d.numerator)?, factors, d.orientation)
    }
}

impl From<&ParamCurve> for CurveDoc {
    fn from(c: &ParamCurve) -> Self {
        CurveDoc {
            implicit: PolyDoc::from(&c.implicit),
            x: RatFnDoc::from(&c.x),
            y: RatFnDoc::from(&c.y),
        }
    }
}

impl TryFrom<&CurveDoc> for ParamCurve {
    type Error = Error;
    fn try_from(d: &CurveDoc) -> Result<Self> {
        ParamCurve::new(
            Poly::try_from(&d.implicit)?,
            RatFn::try_from(&d.x)?,
            RatFn::try_from(&d.y)?,
        )
    }
}
