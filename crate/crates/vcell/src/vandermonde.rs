//! Power-sum maps, Ursell multiplicity vectors and boundary patches.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::{One, Zero};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::MultiPoly;
use crate::scalar::{Rational, Scalar};
use crate::Poly;

/// Power sums `p_1, ..., p_d`.
pub fn power_sums<S: Scalar>(x: &[S], d: usize) -> Vec<S> {
    let mut pw: Vec<S> = x.to_vec();
    let mut out = Vec::with_capacity(d);
    for k in 1..=d {
        if k > 1 {
            for (p, xi) in pw.iter_mut().zip(x) {
                *p = p.clone() * xi.clone();
            }
        }
        out.push(pw.iter().cloned().fold(S::zero(), |a, b| a + b));
    }
    out
}

/// Image coordinates `(p_2, ..., p_d)` of a point of the probability simplex.
pub fn vandermonde_map<S: Scalar>(x: &[S], d: usize) -> Result<Vec<S>> {
    if d < 2 {
        return Err(Error::OutOfRange(format!("d = {d} must be at least 2")));
    }
    if x.is_empty() {
        return Err(Error::DimensionMismatch {
            expected: 1,
            got: 0,
        });
    }
    Ok(power_sums(x, d).split_off(1))
}

/// Exact version that also checks the point lies in the simplex.
pub fn vandermonde_map_exact(x: &[Rational], d: usize) -> Result<Vec<Rational>> {
    if x.iter().any(|v| v < &Rational::zero()) {
        return Err(Error::NotAdmissible("negative coordinate".into()));
    }
    if x.iter().cloned().sum::<Rational>() != Rational::one() {
        return Err(Error::NotAdmissible("coordinates do not sum to 1".into()));
    }
    vandermonde_map(x, d)
}

pub fn check_range(n: usize, d: usize) -> Result<()> {
    if d < 2 || n < d {
        return Err(Error::OutOfRange(format!(
            "need 2 <= d <= n, got n = {n}, d = {d}"
        )));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum UrsellType {
    Type1,
    Type2,
}

/// Block structure of a sorted boundary point: `zeros` copies of 0, then
/// `blocks[i]` copies of a common value `x_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultiplicityVector {
    pub kind: UrsellType,
    pub zeros: u32,
    pub blocks: Vec<u32>,
}

impl MultiplicityVector {
    pub fn new(kind: UrsellType, zeros: u32, blocks: Vec<u32>) -> Result<Self> {
        let m = MultiplicityVector {
            kind,
            zeros,
            blocks,
        };
        m.validate()?;
        Ok(m)
    }

    pub fn n(&self) -> usize {
        (self.zeros + self.blocks.iter().sum::<u32>()) as usize
    }

    pub fn d(&self) -> usize {
        self.blocks.len() + 1
    }

    pub fn validate(&self) -> Result<()> {
        if self.blocks.is_empty() || self.blocks.contains(&0) {
            return Err(Error::NotAdmissible(
                "blocks must be nonempty and positive".into(),
            ));
        }
        // blocks[i] carries index i + 1
        let fixed_parity = match self.kind {
            UrsellType::Type1 => 1,
            UrsellType::Type2 => 0,
        };
        for (i, &m) in self.blocks.iter().enumerate() {
            if (i + 1) % 2 == fixed_parity && m != 1 {
                return Err(Error::NotAdmissible(format!(
                    "block {} must have multiplicity 1",
                    i + 1
                )));
            }
        }
        if self.kind == UrsellType::Type2 && self.zeros != 0 {
            return Err(Error::NotAdmissible("no zero block in type 2".into()));
        }
        Ok(())
    }

    /// All multiplicities in order, zero block first when present.
    pub fn entries(&self) -> Vec<u32> {
        let mut v = Vec::new();
        if self.kind == UrsellType::Type1 {
            v.push(self.zeros);
        }
        v.extend(&self.blocks);
        v
    }
}

/// Multiplicity vectors of both types for the boundary of the `(n, d)` cell.
pub fn enumerate_multiplicity_vectors(n: usize, d: usize) -> Result<Vec<MultiplicityVector>> {
    check_range(n, d)?;
    let mut out = Vec::new();
    for kind in [UrsellType::Type1, UrsellType::Type2] {
        let fixed_parity = if kind == UrsellType::Type1 { 1 } else { 0 };
        let free: Vec<bool> = (1..d).map(|i| i % 2 != fixed_parity).collect();
        let nfixed = free.iter().filter(|f| !**f).count();
        if n < d - 1 {
            continue;
        }
        let rest = n - nfixed;
        let nfree = free.len() - nfixed;
        let with_zero = kind == UrsellType::Type1;
        for zeros in 0..=(if with_zero { rest } else { 0 }) {
            let budget = rest - zeros;
            for comp in compositions(budget, nfree) {
                let mut it = comp.into_iter();
                let blocks = free
                    .iter()
                    .map(|&f| if f { it.next().unwrap() } else { 1 })
                    .collect();
                out.push(MultiplicityVector {
                    kind,
                    zeros: zeros as u32,
                    blocks,
                });
            }
        }
    }
    Ok(out)
}

// Ordered compositions of `total` into `parts` positive parts.
fn compositions(total: usize, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 1..=total.saturating_sub(parts - 1) {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first as u32);
            out.push(rest);
        }
    }
    out
}

/// Number of partitions of `a` into exactly `b` positive parts.
pub fn partition_count(a: usize, b: usize) -> u128 {
    let mut table = vec![vec![0u128; b + 1]; a + 1];
    table[0][0] = 1;
    for i in 1..=a {
        for j in 1..=b.min(i) {
            table[i][j] = table[i - 1][j - 1] + table[i - j][j];
        }
    }
    table[a][b]
}

/// Number of boundary hypersurfaces of the `(n, d)` cell not already present for `n - 1`.
pub fn new_hypersurface_count(n: usize, d: usize) -> Result<u128> {
    check_range(n, d)?;
    let fixed = (d - 1) / 2;
    let free = d / 2;
    if n < fixed {
        return Ok(0);
    }
    Ok(partition_count(n - fixed, free))
}

/// Parametrized boundary patch attached to a multiplicity vector. The free parameters
/// are the block values `x_1, ..., x_{d-2}`; the last block value is fixed by the
/// simplex constraint.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryPatch {
    mult: MultiplicityVector,
}

impl BoundaryPatch {
    pub fn new(mult: MultiplicityVector) -> Result<Self> {
        mult.validate()?;
        Ok(BoundaryPatch { mult })
    }

    pub fn multiplicities(&self) -> &MultiplicityVector {
        &self.mult
    }

    pub fn num_params(&self) -> usize {
        self.mult.blocks.len() - 1
    }

    /// Block values `x_1, ..., x_{d-1}`.
    pub fn block_values(&self, params: &[Rational]) -> Result<Vec<Rational>> {
        if params.len() != self.num_params() {
            return Err(Error::DimensionMismatch {
                expected: self.num_params(),
                got: params.len(),
            });
        }
        let m = &self.mult.blocks;
        let k = m.len();
        let used: Rational = params
            .iter()
            .zip(m)
            .map(|(x, &mi)| x * Rational::from_integer(mi.into()))
            .sum();
        let last = (Rational::one() - used) / Rational::from_integer(m[k - 1].into());
        let mut v = params.to_vec();
        v.push(last);
        let mut prev = Rational::zero();
        for (i, x) in v.iter().enumerate() {
            if x < &prev {
                return Err(Error::NotAdmissible(format!(
                    "block values must increase from 0, failed at x_{}",
                    i + 1
                )));
            }
            prev = x.clone();
        }
        Ok(v)
    }

    /// Sorted point of the simplex with this block structure.
    pub fn preimage(&self, params: &[Rational]) -> Result<Vec<Rational>> {
        let v = self.block_values(params)?;
        let mut x = vec![Rational::zero(); self.mult.zeros as usize];
        for (val, &m) in v.iter().zip(&self.mult.blocks) {
            x.extend(std::iter::repeat_n(val.clone(), m as usize));
        }
        Ok(x)
    }

    /// Reproducible admissible parameters: sorted simplex samples `u` rescaled so that
    /// `sum m_i x_i = 1` with `x_i = u_i / sum_j m_j u_j`.
    pub fn sample_params(&self, count: usize, seed: u64) -> Vec<Vec<Rational>> {
        let m = &self.mult.blocks;
        sample_simplex(m.len(), count, seed)
            .into_iter()
            .map(|mut u| {
                u.sort();
                let w: Rational = u
                    .iter()
                    .zip(m)
                    .map(|(x, &mi)| x * Rational::from_integer(mi.into()))
                    .sum();
                u.truncate(m.len() - 1);
                u.into_iter().map(|x| x / w.clone()).collect()
            })
            .collect()
    }

    /// Image coordinates `(y_2, ..., y_d)`.
    pub fn eval(&self, params: &[Rational]) -> Result<Vec<Rational>> {
        let v = self.block_values(params)?;
        let d = self.mult.d();
        let mut out = Vec::with_capacity(d - 1);
        for j in 2..=d {
            let mut s = Rational::zero();
            for (val, &m) in v.iter().zip(&self.mult.blocks) {
                s += num_traits::pow(val.clone(), j) * Rational::from_integer(m.into());
            }
            out.push(s);
        }
        Ok(out)
    }

    /// The patch as polynomials in the parameter variables.
    pub fn polynomial_map(&self, vars: &[&str]) -> Result<Vec<Poly>> {
        if vars.len() != self.num_params() {
            return Err(Error::DimensionMismatch {
                expected: self.num_params(),
                got: vars.len(),
            });
        }
        let vars: Arc<[String]> = vars.iter().map(|s| s.to_string()).collect();
        let m = &self.mult.blocks;
        let k = m.len();
        let mut blocks: Vec<Poly> = (0..k - 1)
            .map(|i| MultiPoly::var_in(vars.clone(), i))
            .collect();
        let mut last = MultiPoly::constant_in(vars.clone(), Rational::one());
        for (b, &mi) in blocks.iter().zip(m) {
            last = &last - &b.scale(&Rational::from_integer(mi.into()));
        }
        blocks.push(last.scale(&Rational::new(1.into(), m[k - 1].into())));
        let d = self.mult.d();
        Ok((2..=d)
            .map(|j| {
                let mut s = MultiPoly::zero_in(vars.clone());
                for (b, &mi) in blocks.iter().zip(m) {
                    s = &s + &b.pow(j as u32).scale(&Rational::from_integer(mi.into()));
                }
                s
            })
            .collect())
    }
}

pub const DEFAULT_DENOMINATOR: u64 = 1_000_000;

/// Reproducible points of the probability simplex on the lattice with the given denominator.
pub fn sample_simplex_with(
    n: usize,
    count: usize,
    seed: u64,
    denominator: u64,
) -> Vec<Vec<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let den = Rational::from_integer(denominator.into());
    (0..count)
        .map(|_| {
            let mut cuts: Vec<u64> = (0..n.saturating_sub(1))
                .map(|_| rng.random_range(0..=denominator))
                .collect();
            cuts.push(0);
            cuts.push(denominator);
            cuts.sort_unstable();
            cuts.windows(2)
                .map(|w| Rational::from_integer((w[1] - w[0]).into()) / den.clone())
                .collect()
        })
        .collect()
}

pub fn sample_simplex(n: usize, count: usize, seed: u64) -> Vec<Vec<Rational>> {
    sample_simplex_with(n, count, seed, DEFAULT_DENOMINATOR)
}

/// Groups multiplicity vectors by the partition of `n` their entries form.
pub fn group_by_partition(vs: &[MultiplicityVector]) -> HashMap<Vec<u32>, Vec<MultiplicityVector>> {
    let mut out: HashMap<Vec<u32>, Vec<MultiplicityVector>> = HashMap::new();
    for v in vs {
        let mut key: Vec<u32> = v.entries().into_iter().filter(|&m| m > 0).collect();
        key.sort_unstable();
        out.entry(key).or_default().push(v.clone());
    }
    out
}
