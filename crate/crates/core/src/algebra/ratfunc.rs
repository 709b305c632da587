use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::{binomial, Coef, Poly, Var};
use crate::error::{Error, Result};

/// Univariate rational function `num(z) / (1 - z)^dpow`.
///
/// Normalized: when `dpow > 0`, `num(1) != 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Vec<Coef>,
    dpow: u32,
}

fn trim(v: &mut Vec<Coef>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn dense_mul(a: &[Coef], b: &[Coef]) -> Vec<Coef> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Coef::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn dense_add(a: &[Coef], b: &[Coef]) -> Vec<Coef> {
    let mut out = vec![Coef::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] += y;
    }
    trim(&mut out);
    out
}

/// Multiplies by `(1 - z)^k`.
fn times_one_minus_z(a: &[Coef], k: u32) -> Vec<Coef> {
    let mut out = a.to_vec();
    for _ in 0..k {
        let mut next = vec![Coef::zero(); out.len() + 1];
        for (i, c) in out.iter().enumerate() {
            next[i] += c;
            next[i + 1] -= c;
        }
        out = next;
    }
    trim(&mut out);
    out
}

/// Divides by `(1 - z)` if the division is exact.
fn div_one_minus_z(a: &[Coef]) -> Option<Vec<Coef>> {
    if a.is_empty() {
        return Some(Vec::new());
    }
    // a = (1 - z) q  <=>  q_i = a_i + q_{i-1}
    let mut q = Vec::with_capacity(a.len() - 1);
    let mut carry = Coef::zero();
    for c in &a[..a.len() - 1] {
        carry += c;
        q.push(carry.clone());
    }
    (carry + &a[a.len() - 1]).is_zero().then_some(q)
}

impl RatFunc {
    pub fn new(num: &Poly, dpow: u32) -> Result<Self> {
        let num = num.univariate_coeffs(Var::Z).ok_or(Error::NotUnivariate)?;
        Ok(Self::from_dense(num, dpow))
    }

    pub fn from_dense(mut num: Vec<Coef>, dpow: u32) -> Self {
        trim(&mut num);
        let mut r = RatFunc { num, dpow };
        r.normalize();
        r
    }

    pub fn polynomial(p: &Poly) -> Result<Self> {
        Self::new(p, 0)
    }

    pub fn constant(c: Coef) -> Self {
        Self::from_dense(vec![c], 0)
    }

    /// `1 / (1 - z)^d`
    pub fn pole(d: u32) -> Self {
        Self::from_dense(vec![Coef::one()], d)
    }

    fn normalize(&mut self) {
        if self.num.is_empty() {
            self.dpow = 0;
            return;
        }
        while self.dpow > 0 {
            match div_one_minus_z(&self.num) {
                Some(q) => {
                    self.num = q;
                    self.dpow -= 1;
                }
                None => break,
            }
        }
    }

    pub fn numerator(&self) -> Poly {
        Poly::from_univariate(Var::Z, &self.num)
    }

    pub fn numerator_coeffs(&self) -> &[Coef] {
        &self.num
    }

    pub fn dpow(&self) -> u32 {
        self.dpow
    }

    pub fn is_polynomial(&self) -> bool {
        self.dpow == 0
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        let d = self.dpow.max(other.dpow);
        let a = times_one_minus_z(&self.num, d - self.dpow);
        let b = times_one_minus_z(&other.num, d - other.dpow);
        RatFunc::from_dense(dense_add(&a, &b), d)
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        RatFunc::from_dense(dense_mul(&self.num, &other.num), self.dpow + other.dpow)
    }

    pub fn pow(&self, e: u32) -> RatFunc {
        let mut acc = RatFunc::constant(Coef::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Taylor coefficients of `z^0..=z^order` at `z = 0`.
    pub fn series(&self, order: usize) -> Vec<Coef> {
        let mut out = vec![Coef::zero(); order + 1];
        if self.dpow == 0 {
            for (i, c) in self.num.iter().enumerate().take(order + 1) {
                out[i] = c.clone();
            }
            return out;
        }
        // 1/(1-z)^d = sum_n binom(n+d-1, d-1) z^n
        let d = self.dpow as u64;
        let kernel: Vec<BigInt> = (0..=order as u64).map(|n| binomial(n + d - 1, d - 1)).collect();
        for (n, slot) in out.iter_mut().enumerate() {
            for (j, c) in self.num.iter().enumerate().take(n + 1) {
                *slot += c * Coef::from_integer(kernel[n - j].clone());
            }
        }
        out
    }

    pub fn eval(&self, z: &Coef) -> Option<Coef> {
        let mut acc = Coef::zero();
        for c in self.num.iter().rev() {
            acc = acc * z + c;
        }
        let den = num_traits::pow(Coef::one() - z, self.dpow as usize);
        (!den.is_zero()).then(|| acc / den)
    }
}

/// Substitutes rational functions in `z` for the variables of `p`. Every
/// variable other than `z` itself must be bound.
pub fn subst_rat(p: &Poly, bindings: &HashMap<Var, RatFunc>) -> Result<RatFunc> {
    let z = RatFunc::from_dense(vec![Coef::zero(), Coef::one()], 0);
    let mut powers: HashMap<(Var, u32), RatFunc> = HashMap::new();
    let mut acc = RatFunc::constant(Coef::zero());
    for (m, c) in p.terms() {
        let mut t = RatFunc::constant(c.clone());
        for &(v, e) in m.factors() {
            let base = match bindings.get(&v) {
                Some(b) => b,
                None if v == Var::Z => &z,
                None => return Err(Error::UnboundVariable(v)),
            };
            let pw = powers.entry((v, e)).or_insert_with(|| base.pow(e));
            t = t.mul(pw);
        }
        acc = acc.add(&t);
    }
    Ok(acc)
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.numerator();
        match self.dpow {
            0 => write!(f, "{num}"),
            1 => write!(f, "({num})/(1 - z)"),
            d => write!(f, "({num})/(1 - z)^{d}"),
        }
    }
}

/// Renders a coefficient list as `2z^2+5z^3+…`; zero terms are skipped.
pub fn format_series(coeffs: &[Coef]) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c < &Coef::zero();
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let a = if neg { -c.clone() } else { c.clone() };
        let mono = match i {
            0 => String::new(),
            1 => "z".to_string(),
            _ => format!("z^{i}"),
        };
        if mono.is_empty() || !a.is_one() {
            out.push_str(&a.to_string());
        }
        out.push_str(&mono);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
