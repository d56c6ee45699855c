use crate::error::{Error, Result};
use crate::exact::poly::MultiPoly;
use crate::scalar::Scalar;

/// Square matrix with polynomial entries over a common variable list.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix<S> {
    rows: Vec<Vec<MultiPoly<S>>>,
}

impl<S: Scalar> PolyMatrix<S> {
    pub fn new(rows: Vec<Vec<MultiPoly<S>>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                got: 0,
            });
        }
        for r in &rows {
            if r.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: r.len(),
                });
            }
            for e in r {
                e.same_vars(&rows[0][0])?;
            }
        }
        Ok(PolyMatrix { rows })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<MultiPoly<S>>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> &MultiPoly<S> {
        &self.rows[i][j]
    }

    pub fn map<F: Fn(&MultiPoly<S>) -> Result<MultiPoly<S>>>(&self, f: F) -> Result<Self> {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(&f).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        PolyMatrix::new(rows)
    }

    /// Fraction-free elimination; each division is exact over the polynomial ring.
    pub fn det(&self) -> Result<MultiPoly<S>> {
        let n = self.size();
        let vars = self.rows[0][0].vars().clone();
        let mut m = self.rows.clone();
        let mut sign = false;
        let mut prev = MultiPoly::constant_in(vars.clone(), S::one());
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(i, k);
                        sign = !sign;
                    }
                    None => return Ok(MultiPoly::zero_in(vars)),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = t.exact_div(&prev).ok_or(Error::NotDivisible)?;
                }
                m[i][k] = MultiPoly::zero_in(vars.clone());
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        Ok(if sign { -d } else { d })
    }

    /// Laplace expansion along the first row.
    pub fn det_cofactor(&self) -> MultiPoly<S> {
        cofactor(&self.rows)
    }
}

fn cofactor<S: Scalar>(m: &[Vec<MultiPoly<S>>]) -> MultiPoly<S> {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = MultiPoly::zero_in(m[0][0].vars().clone());
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<MultiPoly<S>>> = m[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let t = &m[0][j] * &cofactor(&minor);
        acc = if j % 2 == 0 { &acc + &t } else { &acc - &t };
    }
    acc
}
