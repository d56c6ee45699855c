use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::poly::MultiPoly;
use crate::exact::uni::{RatFn, UniPoly};
use crate::scalar::{parse_rational, Rational};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolyDoc {
    pub vars: Vec<String>,
    pub terms: Vec<TermDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermDoc {
    pub exp: Vec<u32>,
    /// Decimal integers; the denominator is positive.
    pub num: String,
    pub den: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RatFnDoc {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

impl From<&MultiPoly<Rational>> for PolyDoc {
    fn from(p: &MultiPoly<Rational>) -> Self {
        PolyDoc {
            vars: p.vars().to_vec(),
            terms: p
                .terms()
                .rev()
                .map(|(m, c)| TermDoc {
                    exp: m.0.clone(),
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<&PolyDoc> for MultiPoly<Rational> {
    type Error = Error;
    fn try_from(d: &PolyDoc) -> Result<Self> {
        let terms = d
            .terms
            .iter()
            .map(|t| {
                if t.exp.len() != d.vars.len() {
                    return Err(Error::DimensionMismatch {
                        expected: d.vars.len(),
                        got: t.exp.len(),
                    });
                }
                Ok((
                    t.exp.clone(),
                    parse_rational(&format!("{}/{}", t.num, t.den))?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MultiPoly::from_terms_in(
            d.vars.iter().cloned().collect(),
            terms,
        ))
    }
}

fn coeff_strings(p: &UniPoly<Rational>) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

fn parse_coeffs(v: &[String]) -> Result<UniPoly<Rational>> {
    Ok(UniPoly::new(
        v.iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()?,
    ))
}

impl From<&RatFn> for RatFnDoc {
    fn from(f: &RatFn) -> Self {
        RatFnDoc {
            num: coeff_strings(f.num()),
            den: coeff_strings(f.den()),
        }
    }
}

impl TryFrom<&RatFnDoc> for RatFn {
    type Error = Error;
    fn try_from(d: &RatFnDoc) -> Result<Self> {
        RatFn::new(parse_coeffs(&d.num)?, parse_coeffs(&d.den)?)
    }
}

pub fn poly_to_json(p: &MultiPoly<Rational>) -> String {
    serde_json::to_string(&PolyDoc::from(p)).expect("serializable")
}

pub fn poly_from_json(s: &str) -> Result<MultiPoly<Rational>> {
    let d: PolyDoc = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    MultiPoly::try_from(&d)
}
