use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

/// Exponent vector ordered by total degree, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial over `S` in named variables.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiPoly<S> {
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> MultiPoly<S> {
    pub fn zero(vars: &[&str]) -> Self {
        Self::zero_in(vars.iter().map(|s| s.to_string()).collect())
    }

    pub fn zero_in(vars: Arc<[String]>) -> Self {
        MultiPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant_in(vars: Arc<[String]>, c: S) -> Self {
        let n = vars.len();
        Self::from_terms_in(vars, [(vec![0; n], c)])
    }

    pub fn var_in(vars: Arc<[String]>, i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Self::from_terms_in(vars, [(e, S::one())])
    }

    /// The `i`-th coordinate function in `vars`.
    pub fn var(vars: &[&str], i: usize) -> Self {
        Self::var_in(vars.iter().map(|s| s.to_string()).collect(), i)
    }

    pub fn from_terms_in<I>(vars: Arc<[String]>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, S)>,
    {
        let mut p = MultiPoly::zero_in(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), p.vars.len(), "exponent length");
            p.add_term(Monomial(e), c);
        }
        p
    }

    pub fn from_terms<I>(vars: &[&str], terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, S)>,
    {
        Self::from_terms_in(vars.iter().map(|s| s.to_string()).collect(), terms)
    }

    fn add_term(&mut self, m: Monomial, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v = v.clone() + c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending term order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> S {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(S::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &S)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0)
    }

    pub fn constant_term(&self) -> S {
        self.coeff(&vec![0; self.nvars()])
    }

    fn check_vars(&self, other: &Self) {
        assert!(
            self.vars == other.vars,
            "variable mismatch: {:?} vs {:?}",
            self.vars,
            other.vars
        );
    }

    pub fn same_vars(&self, other: &Self) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::VariableMismatch(format!(
                "{:?} vs {:?}",
                self.vars, other.vars
            )))
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return MultiPoly::zero_in(self.vars.clone());
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = MultiPoly::constant_in(self.vars.clone(), S::one());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self, i: usize) -> Self {
        let mut out = MultiPoly::zero_in(self.vars.clone());
        for (m, c) in &self.terms {
            let k = m.0[i];
            if k == 0 {
                continue;
            }
            let mut e = m.0.clone();
            e[i] -= 1;
            out.add_term(Monomial(e), c.clone() * S::from_int(k as i64));
        }
        out
    }

    pub fn eval(&self, point: &[S]) -> Result<S> {
        self.eval_in(point, |c| c.clone())
    }

    /// Evaluates in any commutative ring `T`, mapping coefficients with `coeff`.
    pub fn eval_in<T, F>(&self, point: &[T], coeff: F) -> Result<T>
    where
        T: Clone + Zero + One + Add<Output = T> + Mul<Output = T>,
        F: Fn(&S) -> T,
    {
        if point.len() != self.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                got: point.len(),
            });
        }
        let powers: Vec<Vec<T>> = (0..self.nvars())
            .map(|i| powers_of(&point[i], self.degree_in(i)))
            .collect();
        let mut acc = T::zero();
        for (m, c) in &self.terms {
            let mut t = coeff(c);
            for (i, &k) in m.0.iter().enumerate() {
                if k > 0 {
                    t = t * powers[i][k as usize].clone();
                }
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Substitutes `args[i]` for the `i`-th variable.
    pub fn compose(&self, args: &[MultiPoly<S>]) -> Result<MultiPoly<S>> {
        if args.len() != self.nvars() || args.is_empty() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                got: args.len(),
            });
        }
        for a in args {
            a.same_vars(&args[0])?;
        }
        let vars = args[0].vars.clone();
        let pw: Vec<Vec<MultiPoly<S>>> = args
            .iter()
            .enumerate()
            .map(|(i, a)| powers_poly(a, self.degree_in(i)))
            .collect();
        let mut out = MultiPoly::zero_in(vars.clone());
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant_in(vars.clone(), c.clone());
            for (i, &k) in m.0.iter().enumerate() {
                if k > 0 {
                    t = &t * &pw[i][k as usize];
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Degree `d` homogenization evaluated at three polynomials: `sum c X^i Y^j W^(d-i-j)`.
    pub fn homogeneous_compose(&self, d: u32, x: &Self, y: &Self, w: &Self) -> Result<Self> {
        if self.nvars() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                got: self.nvars(),
            });
        }
        if self.total_degree() > d {
            return Err(Error::OutOfRange(format!(
                "degree {} above {d}",
                self.total_degree()
            )));
        }
        let px = powers_poly(x, d);
        let py = powers_poly(y, d);
        let pw = powers_poly(w, d);
        let mut out = MultiPoly::zero_in(x.vars.clone());
        for (m, c) in &self.terms {
            let (i, j) = (m.0[0] as usize, m.0[1] as usize);
            let t = &(&px[i] * &py[j]) * &pw[d as usize - i - j];
            out = &out + &t.scale(c);
        }
        Ok(out)
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        self.check_vars(d);
        let (dm, dc) = d.leading_term()?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut r = self.clone();
        let mut q = MultiPoly::zero_in(self.vars.clone());
        while let Some((rm, rc)) = r.leading_term() {
            if !dm.divides(rm) {
                return None;
            }
            let m = rm.div(&dm);
            let c = rc.clone() / dc.clone();
            let t = MultiPoly {
                vars: self.vars.clone(),
                terms: BTreeMap::from([(m, c)]),
            };
            r = &r - &(&t * d);
            q = &q + &t;
        }
        Some(q)
    }

    pub fn map_coeffs<T: Scalar, F: Fn(&S) -> T>(&self, f: F) -> MultiPoly<T> {
        let mut out = MultiPoly::zero_in(self.vars.clone());
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Same polynomial viewed in a new variable list; `map[i]` is the new index of variable `i`.
    pub fn relabel(&self, vars: Arc<[String]>, map: &[usize]) -> Self {
        let mut out = MultiPoly::zero_in(vars.clone());
        for (m, c) in &self.terms {
            let mut e = vec![0; vars.len()];
            for (i, &k) in m.0.iter().enumerate() {
                e[map[i]] += k;
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }
}

fn powers_of<T: Clone + One + Mul<Output = T>>(x: &T, k: u32) -> Vec<T> {
    let mut v = Vec::with_capacity(k as usize + 1);
    v.push(T::one());
    for i in 0..k as usize {
        v.push(v[i].clone() * x.clone());
    }
    v
}

fn powers_poly<S: Scalar>(p: &MultiPoly<S>, k: u32) -> Vec<MultiPoly<S>> {
    let mut v = vec![MultiPoly::constant_in(p.vars.clone(), S::one())];
    for i in 0..k as usize {
        v.push(&v[i] * p);
    }
    v
}

impl<'a, S: Scalar> Add<&'a MultiPoly<S>> for &'a MultiPoly<S> {
    type Output = MultiPoly<S>;
    fn add(self, o: &'a MultiPoly<S>) -> MultiPoly<S> {
        self.check_vars(o);
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a, S: Scalar> Sub<&'a MultiPoly<S>> for &'a MultiPoly<S> {
    type Output = MultiPoly<S>;
    fn sub(self, o: &'a MultiPoly<S>) -> MultiPoly<S> {
        self.check_vars(o);
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a, S: Scalar> Mul<&'a MultiPoly<S>> for &'a MultiPoly<S> {
    type Output = MultiPoly<S>;
    fn mul(self, o: &'a MultiPoly<S>) -> MultiPoly<S> {
        self.check_vars(o);
        let mut out = MultiPoly::zero_in(self.vars.clone());
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                out.add_term(a.mul(b), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<S: Scalar> Neg for &MultiPoly<S> {
    type Output = MultiPoly<S>;
    fn neg(self) -> MultiPoly<S> {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl<S: Scalar> Add for MultiPoly<S> {
    type Output = MultiPoly<S>;
    fn add(self, o: Self) -> Self {
        &self + &o
    }
}

impl<S: Scalar> Sub for MultiPoly<S> {
    type Output = MultiPoly<S>;
    fn sub(self, o: Self) -> Self {
        &self - &o
    }
}

impl<S: Scalar> Mul for MultiPoly<S> {
    type Output = MultiPoly<S>;
    fn mul(self, o: Self) -> Self {
        &self * &o
    }
}

impl<S: Scalar> Neg for MultiPoly<S> {
    type Output = MultiPoly<S>;
    fn neg(self) -> Self {
        -&self
    }
}

impl MultiPoly<Rational> {
    /// Scalar multiple with integer coprime coefficients and positive leading coefficient,
    /// together with the factor `c` such that `self = c * result`.
    pub fn primitive(&self) -> (Rational, Self) {
        use num_integer::Integer;
        if self.is_zero() {
            return (Rational::one(), self.clone());
        }
        let mut l = num_bigint::BigInt::one();
        let mut g = num_bigint::BigInt::zero();
        for c in self.terms.values() {
            l = l.lcm(c.denom());
            g = g.gcd(c.numer());
        }
        let mut c = Rational::new(g, l);
        if self
            .leading_term()
            .map(|(_, v)| v < &Rational::zero())
            .unwrap_or(false)
        {
            c = -c;
        }
        let inv = c.recip();
        (c, self.scale(&inv))
    }

    /// Parses expressions like `3*x^2*y - 1/2*y + 1` in the given variables.
    pub fn parse(vars: &[&str], s: &str) -> Result<Self> {
        let vars_arc: Arc<[String]> = vars.iter().map(|s| s.to_string()).collect();
        let mut out = MultiPoly::zero_in(vars_arc.clone());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut pieces = Vec::new();
        let mut cur = String::new();
        for (i, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 && !cur.ends_with('^') {
                pieces.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        pieces.push(cur);
        for piece in pieces {
            let (neg, body) = match piece.strip_prefix('-') {
                Some(b) => (true, b),
                None => (false, piece.strip_prefix('+').unwrap_or(&piece)),
            };
            let mut coeff = Rational::one();
            let mut exps = vec![0u32; vars.len()];
            for factor in body.split('*') {
                if factor.is_empty() {
                    return Err(Error::Parse(format!("empty factor in {piece:?}")));
                }
                if factor.chars().next().is_some_and(|c| c.is_ascii_digit()) {
                    coeff *= crate::scalar::parse_rational(factor)?;
                    continue;
                }
                let (name, e) = match factor.split_once('^') {
                    Some((n, e)) => (
                        n,
                        e.parse::<u32>()
                            .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?,
                    ),
                    None => (factor, 1),
                };
                let i = vars
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))?;
                exps[i] += e;
            }
            if neg {
                coeff = -coeff;
            }
            out.add_term(Monomial(exps), coeff);
        }
        Ok(out)
    }
}

impl fmt::Display for MultiPoly<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c < &Rational::zero();
            let a = if neg { -c.clone() } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| {
                        if e == 1 {
                            self.vars[i].clone()
                        } else {
                            format!("{}^{}", self.vars[i], e)
                        }
                    })
                    .collect();
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{a}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}
