use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational coefficient.
pub type Coef = BigRational;

pub fn coef(n: i64) -> Coef {
    Coef::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Coef {
    Coef::new(BigInt::from(n), BigInt::from(d))
}

/// Polynomial variables. The derived order is the canonical variable order:
/// `N < C1 < C2 < … < eps < z < u < v < w < x < y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    N,
    Casimir(u32),
    Eps,
    Z,
    U,
    V,
    W,
    X,
    Y,
}

impl Var {
    /// Grading used to order monomials for printing. Casimir `C_k` has weight
    /// `k`, `N = C_0` and the deformation parameter `eps` weight 0, every
    /// other variable weight 1.
    fn weight(self) -> u64 {
        match self {
            Var::Casimir(k) => k as u64,
            Var::N | Var::Eps => 0,
            _ => 1,
        }
    }

    pub fn name(self) -> String {
        match self {
            Var::N => "N".into(),
            Var::Casimir(k) => format!("C{k}"),
            Var::Eps => "eps".into(),
            Var::Z => "z".into(),
            Var::U => "u".into(),
            Var::V => "v".into(),
            Var::W => "w".into(),
            Var::X => "x".into(),
            Var::Y => "y".into(),
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "N" => Var::N,
            "eps" => Var::Eps,
            "z" => Var::Z,
            "u" => Var::U,
            "v" => Var::V,
            "w" => Var::W,
            "x" => Var::X,
            "y" => Var::Y,
            _ => {
                let k = s
                    .strip_prefix('C')
                    .and_then(|k| k.parse::<u32>().ok())
                    .filter(|&k| k >= 1)
                    .ok_or_else(|| Error::Parse(format!("unknown variable `{s}`")))?;
                Var::Casimir(k)
            }
        })
    }
}

/// A monomial: strictly increasing variables with positive exponents.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var, e: u32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, e)])
        }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut acc: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *acc.entry(v).or_default() += e;
        }
        Monomial(acc.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    fn weight(&self) -> u64 {
        self.0.iter().map(|&(v, e)| v.weight() * e as u64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Printing order: descending weight, then ascending exponents read from
    /// the largest variable down.
    pub fn display_cmp(&self, other: &Monomial) -> Ordering {
        other.weight().cmp(&self.weight()).then_with(|| {
            let (a, b) = (&self.0, &other.0);
            let (mut i, mut j) = (a.len(), b.len());
            while i > 0 || j > 0 {
                let va = (i > 0).then(|| a[i - 1]);
                let vb = (j > 0).then(|| b[j - 1]);
                let (ea, eb) = match (va, vb) {
                    (Some((x, ex)), Some((y, ey))) => match x.cmp(&y) {
                        Ordering::Equal => {
                            i -= 1;
                            j -= 1;
                            (ex, ey)
                        }
                        Ordering::Greater => {
                            i -= 1;
                            (ex, 0)
                        }
                        Ordering::Less => {
                            j -= 1;
                            (0, ey)
                        }
                    },
                    (Some((_, ex)), None) => {
                        i -= 1;
                        (ex, 0)
                    }
                    (None, Some((_, ey))) => {
                        j -= 1;
                        (0, ey)
                    }
                    (None, None) => unreachable!(),
                };
                if ea != eb {
                    return ea.cmp(&eb);
                }
            }
            Ordering::Equal
        })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// polynomials.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<Monomial, Coef>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Coef::one())
    }

    pub fn constant(c: Coef) -> Self {
        Poly::term(c, Monomial::one())
    }

    pub fn int(n: i64) -> Self {
        Poly::constant(coef(n))
    }

    pub fn var(v: Var) -> Self {
        Poly::term(Coef::one(), Monomial::var(v, 1))
    }

    pub fn var_pow(v: Var, e: u32) -> Self {
        Poly::term(Coef::one(), Monomial::var(v, e))
    }

    pub fn casimir(k: u32) -> Self {
        Poly::var(Var::Casimir(k))
    }

    pub fn term(c: Coef, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Coef)>) -> Self {
        let mut p = Poly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
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

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coef)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Coef {
        self.terms.get(m).cloned().unwrap_or_else(Coef::zero)
    }

    pub fn constant_term(&self) -> Coef {
        self.coeff(&Monomial::one())
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|&(v, _)| v))
            .collect()
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exponent(v) > 0)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: Coef) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Coef) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(n, c)| (n.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
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

    /// Simultaneous substitution: every binding is applied to the original
    /// polynomial; unbound variables pass through unchanged.
    pub fn subst(&self, bindings: &HashMap<Var, Poly>) -> Poly {
        let mut powers: HashMap<(Var, u32), Poly> = HashMap::new();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut val = Poly::constant(c.clone());
            for &(v, e) in m.factors() {
                match bindings.get(&v) {
                    Some(b) => {
                        let pw = powers.entry((v, e)).or_insert_with(|| b.pow(e));
                        val = &val * &*pw;
                    }
                    None => kept.push((v, e)),
                }
            }
            if !kept.is_empty() {
                val = val.mul_monomial(&Monomial(kept));
            }
            out += val;
        }
        out
    }

    /// Coefficients `[c_0, c_1, …]` if the polynomial involves no variable
    /// other than `v`.
    pub fn univariate_coeffs(&self, v: Var) -> Option<Vec<Coef>> {
        let deg = self.degree_in(v) as usize;
        let mut out = vec![Coef::zero(); if self.is_zero() { 0 } else { deg + 1 }];
        for (m, c) in &self.terms {
            match m.factors() {
                [] => out[0] = c.clone(),
                [(w, e)] if *w == v => out[*e as usize] = c.clone(),
                _ => return None,
            }
        }
        Some(out)
    }

    pub fn from_univariate(v: Var, coeffs: &[Coef]) -> Poly {
        Poly::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(v, i as u32), c.clone())),
        )
    }

    /// Evaluates at rational values for every variable that occurs.
    pub fn eval(&self, values: &HashMap<Var, Coef>) -> Result<Coef> {
        let mut acc = Coef::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.factors() {
                let x = values.get(&v).ok_or(Error::UnboundVariable(v))?;
                t *= num_traits::pow(x.clone(), e as usize);
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Terms in printing order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Coef)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.display_cmp(b.0));
        v
    }
}

impl From<Var> for Poly {
    fn from(v: Var) -> Self {
        Poly::var(v)
    }
}

impl From<i64> for Poly {
    fn from(n: i64) -> Self {
        Poly::int(n)
    }
}

impl From<Coef> for Poly {
    fn from(c: Coef) -> Self {
        Poly::constant(c)
    }
}

impl AddAssign<Poly> for Poly {
    fn add_assign(&mut self, rhs: Poly) {
        if self.terms.len() < rhs.terms.len() {
            let lhs = std::mem::replace(self, rhs);
            for (m, c) in lhs.terms {
                self.add_term(m, c);
            }
        } else {
            for (m, c) in rhs.terms {
                self.add_term(m, c);
            }
        }
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl SubAssign<Poly> for Poly {
    fn sub_assign(&mut self, rhs: Poly) {
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        self += rhs;
        self
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(mut self, rhs: Poly) -> Poly {
        self -= rhs;
        self
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -(self.clone())
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Poly {
    type Err = Error;

    /// Parses sums and products of rational numbers, variables and
    /// parenthesized groups, with `^` for nonnegative integer powers:
    /// the canonical text form as well as factored forms such as
    /// `z^2*(z - 2)*(z^3 - z - 1)`.
    fn from_str(s: &str) -> Result<Self> {
        let text: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut p = Parser { text: &text, pos: 0 };
        let out = p.sum()?;
        if p.pos != text.len() {
            return Err(p.error("unexpected input"));
        }
        Ok(out)
    }
}

struct Parser<'a> {
    text: &'a [char],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.text.get(self.pos).copied()
    }

    fn error(&self, what: &str) -> Error {
        let rest: String = self.text[self.pos.min(self.text.len())..].iter().collect();
        Error::Parse(format!("{what} at `{rest}`"))
    }

    fn sum(&mut self) -> Result<Poly> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -self.product()?
            }
            _ => self.product()?,
        };
        while let Some(op @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let t = self.product()?;
            if op == '+' {
                acc += t;
            } else {
                acc -= t;
            }
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<Poly> {
        let mut acc = self.power()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = &acc * &self.power()?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let digits = self.take(|c| c.is_ascii_digit());
        let e: u32 = digits.parse().map_err(|_| self.error("bad exponent"))?;
        Ok(base.pow(e))
    }

    fn take(&mut self, f: impl Fn(char) -> bool) -> String {
        let start = self.pos;
        while self.peek().is_some_and(&f) {
            self.pos += 1;
        }
        self.text[start..self.pos].iter().collect()
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.sum()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.take(|c| c.is_ascii_digit());
                let text = if self.peek() == Some('/') {
                    self.pos += 1;
                    let d = self.take(|c| c.is_ascii_digit());
                    format!("{n}/{d}")
                } else {
                    n
                };
                Ok(Poly::constant(parse_rational(&text)?))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let name = self.take(|c| c.is_ascii_alphanumeric());
                Ok(Poly::var(name.parse::<Var>()?))
            }
            _ => Err(self.error("expected a number, variable or `(`")),
        }
    }
}

fn parse_rational(s: &str) -> Result<Coef> {
    let bad = || Error::Parse(format!("bad coefficient `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| bad())?;
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Coef::new(n, d))
        }
        None => Ok(Coef::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Binomial coefficient as a big integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Integer value of a coefficient, if it is one and fits.
pub fn coef_to_i64(c: &Coef) -> Option<i64> {
    if c.is_integer() {
        c.to_integer().to_i64()
    } else {
        None
    }
}
