use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

/// Dense univariate polynomial, coefficients from low to high degree.
#[derive(Clone, Debug, PartialEq)]
pub struct UniPoly<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> UniPoly<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn constant(c: S) -> Self {
        Self::new(vec![c])
    }

    /// The identity `t`.
    pub fn t() -> Self {
        Self::new(vec![S::zero(), S::one()])
    }

    /// `t - r`.
    pub fn linear_root(r: S) -> Self {
        Self::new(vec![-r, S::one()])
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> S {
        self.coeffs.last().cloned().unwrap_or_else(S::zero)
    }

    pub fn eval(&self, t: &S) -> S {
        let mut acc = S::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t.clone() + c.clone();
        }
        acc
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * S::from_int(i as i64))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(S::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.coeffs.len() - 1;
        let lc = d.lc();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![S::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = r[i + dd].clone() / lc.clone();
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[i + j] = r[i + j].clone() - c.clone() * dc.clone();
                }
            }
            q[i] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.lc();
        self.scale(&(S::one() / lc))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Self::constant(c.clone());
        }
        acc
    }

    /// Multiplicity of `r` as a root.
    pub fn root_multiplicity(&self, r: &S) -> u32 {
        if self.is_zero() {
            return u32::MAX;
        }
        let lin = Self::linear_root(r.clone());
        let mut p = self.clone();
        let mut k = 0;
        while let Some(q) = p.exact_div(&lin) {
            p = q;
            k += 1;
        }
        k
    }

    /// Square-free decomposition: `(s_i, i)` with `self = c * prod s_i^i`, each `s_i` monic.
    pub fn squarefree(&self) -> Vec<(Self, u32)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.exact_div(&a0).expect("gcd divides");
        let c = fp.exact_div(&a0).expect("gcd divides");
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            b = b.exact_div(&a).expect("gcd divides");
            let c = d.exact_div(&a).expect("gcd divides");
            d = &c - &b.derivative();
            if a.degree().unwrap_or(0) > 0 {
                out.push((a, i));
            }
            i += 1;
        }
        out
    }
}

impl<S: Scalar> Add for &UniPoly<S> {
    type Output = UniPoly<S>;
    fn add(self, o: &UniPoly<S>) -> UniPoly<S> {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).cloned().unwrap_or_else(S::zero);
                    let b = o.coeffs.get(i).cloned().unwrap_or_else(S::zero);
                    a + b
                })
                .collect(),
        )
    }
}

impl<S: Scalar> Sub for &UniPoly<S> {
    type Output = UniPoly<S>;
    fn sub(self, o: &UniPoly<S>) -> UniPoly<S> {
        self + &(-o)
    }
}

impl<S: Scalar> Mul for &UniPoly<S> {
    type Output = UniPoly<S>;
    fn mul(self, o: &UniPoly<S>) -> UniPoly<S> {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut c = vec![S::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] = c[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniPoly::new(c)
    }
}

impl<S: Scalar> Neg for &UniPoly<S> {
    type Output = UniPoly<S>;
    fn neg(self) -> UniPoly<S> {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl fmt::Display for UniPoly<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{a}*t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{a}*t^{i}")?,
            }
        }
        Ok(())
    }
}

/// Univariate rational function in lowest terms with monic denominator.
#[derive(Clone, Debug, PartialEq)]
pub struct RatFn {
    num: UniPoly<Rational>,
    den: UniPoly<Rational>,
}

impl RatFn {
    pub fn new(num: UniPoly<Rational>, den: UniPoly<Rational>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let mut num = num.exact_div(&g).expect("gcd divides");
        let mut den = den.exact_div(&g).expect("gcd divides");
        let lc = den.lc();
        num = num.scale(&lc.recip());
        den = den.monic();
        Ok(RatFn { num, den })
    }

    pub fn from_poly(p: UniPoly<Rational>) -> Self {
        RatFn {
            num: p,
            den: UniPoly::constant(Rational::one()),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    pub fn t() -> Self {
        Self::from_poly(UniPoly::t())
    }

    pub fn num(&self) -> &UniPoly<Rational> {
        &self.num
    }

    pub fn den(&self) -> &UniPoly<Rational> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    pub fn eval(&self, t: &Rational) -> Option<Rational> {
        let d = self.den.eval(t);
        (!d.is_zero()).then(|| self.num.eval(t) / d)
    }

    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        RatFn::new(n, &self.den * &self.den).expect("nonzero denominator")
    }

    pub fn recip(&self) -> Result<Self> {
        RatFn::new(self.den.clone(), self.num.clone())
    }

    /// `Some(c)` when `self = c * other` for a constant `c`.
    pub fn constant_ratio(&self, other: &RatFn) -> Option<Rational> {
        if other.is_zero() {
            return None;
        }
        let q = self.clone() / other.clone();
        (q.num.degree().unwrap_or(0) == 0 && q.is_polynomial()).then(|| q.num.lc() / q.den.lc())
    }

    pub fn pole_orders(&self) -> PoleReport {
        let mut rational = Vec::new();
        let mut other = Vec::new();
        for (s, mult) in self.den.squarefree() {
            let roots = rational_roots(&s);
            let mut rest = s.clone();
            for r in &roots {
                rest = rest
                    .exact_div(&UniPoly::linear_root(r.clone()))
                    .expect("root divides");
                rational.push((r.clone(), mult));
            }
            if let Some(d) = rest.degree().filter(|&d| d > 0) {
                other.push((d, mult));
            }
        }
        rational.sort_by(|a, b| a.0.cmp(&b.0));
        let dn = self.num.degree().map(|d| d as i64).unwrap_or(i64::MIN / 2);
        let dd = self.den.degree().unwrap_or(0) as i64;
        PoleReport {
            rational,
            other,
            infinity: (dn - dd + 2).max(0) as u32,
        }
    }
}

/// Poles of `f(t) dt`: rational poles with orders, the remaining denominator factors
/// as `(degree, multiplicity)`, and the pole order at infinity.
#[derive(Clone, Debug, PartialEq)]
pub struct PoleReport {
    pub rational: Vec<(Rational, u32)>,
    pub other: Vec<(usize, u32)>,
    pub infinity: u32,
}

impl PoleReport {
    pub fn all_simple(&self) -> bool {
        self.rational.iter().all(|(_, m)| *m == 1)
            && self.other.iter().all(|(_, m)| *m == 1)
            && self.infinity <= 1
    }

    pub fn rational_poles(&self) -> Vec<Rational> {
        self.rational.iter().map(|(r, _)| r.clone()).collect()
    }
}

/// Distinct rational roots of a nonzero polynomial.
pub fn rational_roots(p: &UniPoly<Rational>) -> Vec<Rational> {
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    let ints = integer_coeffs(p);
    let lo = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if lo > 0 {
        out.push(Rational::zero());
    }
    let ints = &ints[lo..];
    if ints.len() < 2 {
        return out;
    }
    let reduced = UniPoly::new(
        ints.iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect(),
    );
    let ps = divisors(&ints[0].abs());
    let qs = divisors(&ints[ints.len() - 1].abs());
    for q in &qs {
        for p in &ps {
            if p.gcd(q) != BigInt::one() {
                continue;
            }
            for s in [p.clone(), -p.clone()] {
                let r = Rational::new(s, q.clone());
                if reduced.eval(&r).is_zero() && !out.contains(&r) {
                    out.push(r);
                }
            }
        }
    }
    out.sort();
    out
}

fn integer_coeffs(p: &UniPoly<Rational>) -> Vec<BigInt> {
    let l = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    p.coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
        .collect()
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut m = n.clone();
    let mut d = BigInt::from(2);
    let limit = BigInt::from(1_000_000u32);
    while &d * &d <= m && d <= limit {
        let mut k = 0;
        while (&m % &d).is_zero() {
            m /= &d;
            k += 1;
        }
        if k > 0 {
            primes.push((d.clone(), k));
        }
        d += 1;
    }
    if m > BigInt::one() {
        // Remaining cofactor treated as prime.
        primes.push((m, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, k) in primes {
        let mut next = Vec::new();
        for dv in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=k {
                next.push(dv * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs
}

impl RatFn {
    pub fn zero() -> Self {
        Self::from_poly(UniPoly::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl Add for RatFn {
    type Output = RatFn;
    fn add(self, o: RatFn) -> RatFn {
        if self.den == o.den {
            return RatFn::new(&self.num + &o.num, self.den).expect("nonzero");
        }
        let g = self.den.gcd(&o.den);
        let a = o.den.exact_div(&g).expect("gcd divides");
        let b = self.den.exact_div(&g).expect("gcd divides");
        let n = &(&self.num * &a) + &(&o.num * &b);
        RatFn::new(n, &self.den * &a).expect("nonzero")
    }
}

impl Sub for RatFn {
    type Output = RatFn;
    fn sub(self, o: RatFn) -> RatFn {
        self + (-o)
    }
}

impl Mul for RatFn {
    type Output = RatFn;
    fn mul(self, o: RatFn) -> RatFn {
        RatFn::new(&self.num * &o.num, &self.den * &o.den).expect("nonzero")
    }
}

impl Div for RatFn {
    type Output = RatFn;
    fn div(self, o: RatFn) -> RatFn {
        assert!(!o.is_zero(), "division by zero rational function");
        RatFn::new(&self.num * &o.den, &self.den * &o.num).expect("nonzero")
    }
}

impl Neg for RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        RatFn {
            num: -&self.num,
            den: self.den,
        }
    }
}

impl Zero for RatFn {
    fn zero() -> Self {
        RatFn::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFn {
    fn one() -> Self {
        RatFn::constant(Rational::one())
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// The one-form `(b - a) / ((t - a)(t - b)) dt`.
pub fn segment_form(a: &Rational, b: &Rational) -> RatFn {
    let den = &UniPoly::linear_root(a.clone()) * &UniPoly::linear_root(b.clone());
    RatFn::new(UniPoly::constant(b - a), den).expect("nonzero")
}
