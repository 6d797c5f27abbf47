//! Commutative polynomials: dense integer helpers, `UniPoly` over the Laurent ring,
//! `BiPoly` over the integers, and the Chebyshev families.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::HalfLaurent;

pub(crate) fn trim(p: &mut Vec<BigInt>) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn dense_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Division over `Z` that fails as soon as a leading coefficient does not divide.
pub(crate) fn dense_divrem_exact(a: &[BigInt], b: &[BigInt]) -> Option<(Vec<BigInt>, Vec<BigInt>)> {
    let mut r = a.to_vec();
    trim(&mut r);
    let mut b = b.to_vec();
    trim(&mut b);
    let lb = b.last()?.clone();
    if r.len() < b.len() {
        return Some((Vec::new(), r));
    }
    let mut q = vec![BigInt::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let lr = r.last().unwrap().clone();
        let (c, rem) = lr.div_rem(&lb);
        if !rem.is_zero() {
            return None;
        }
        let d = r.len() - b.len();
        for (i, y) in b.iter().enumerate() {
            r[i + d] -= &c * y;
        }
        q[d] = c;
        trim(&mut r);
    }
    Some((q, r))
}

pub(crate) fn dense_content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

pub(crate) fn dense_primitive(p: &[BigInt]) -> Vec<BigInt> {
    let c = dense_content(p);
    if c.is_zero() {
        return Vec::new();
    }
    let sign = if p.last().map_or(false, |x| x.is_negative()) { -BigInt::one() } else { BigInt::one() };
    let c = c * sign;
    p.iter().map(|x| x / &c).collect()
}

fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    trim(&mut r);
    let lb = b.last().unwrap().clone();
    while r.len() >= b.len() && !r.is_empty() {
        let lr = r.last().unwrap().clone();
        let d = r.len() - b.len();
        for x in r.iter_mut() {
            *x *= &lb;
        }
        for (i, y) in b.iter().enumerate() {
            r[i + d] -= &lr * y;
        }
        trim(&mut r);
        let c = dense_content(&r);
        if !c.is_zero() && !c.is_one() {
            for x in r.iter_mut() {
                *x /= &c;
            }
        }
    }
    r
}

/// Greatest common divisor in `Z[t]`, with positive leading coefficient.
pub(crate) fn dense_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    if a.is_empty() {
        return dense_primitive(&b).into_iter().map(|x| x * dense_content(&b)).collect();
    }
    if b.is_empty() {
        return dense_primitive(&a).into_iter().map(|x| x * dense_content(&a)).collect();
    }
    let c = dense_content(&a).gcd(&dense_content(&b));
    let mut x = dense_primitive(&a);
    let mut y = dense_primitive(&b);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = pseudo_rem(&x, &y);
        x = y;
        y = dense_primitive(&r);
    }
    x.into_iter().map(|v| v * &c).collect()
}

/// Polynomial in one variable with Laurent coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UniPoly {
    coeffs: BTreeMap<u32, HalfLaurent>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(HalfLaurent::one())
    }

    pub fn constant(c: HalfLaurent) -> Self {
        Self::monomial(c, 0)
    }

    pub fn x() -> Self {
        Self::monomial(HalfLaurent::one(), 1)
    }

    pub fn monomial(c: HalfLaurent, deg: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(deg, c);
        }
        Self { coeffs }
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        let mut out = Self::zero();
        for (d, c) in cs.iter().enumerate() {
            out.add_term(d as u32, &HalfLaurent::constant(*c));
        }
        out
    }

    pub fn add_term(&mut self, deg: u32, c: &HalfLaurent) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(deg).or_default();
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&deg);
        }
    }

    pub fn coeff(&self, deg: u32) -> HalfLaurent {
        self.coeffs.get(&deg).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &HalfLaurent)> + '_ {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &HalfLaurent) -> Self {
        let mut out = Self::zero();
        for (d, v) in &self.coeffs {
            out.add_term(*d, &(v * c));
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Substitute a Laurent polynomial for the variable.
    pub fn eval_laurent(&self, x: &HalfLaurent) -> HalfLaurent {
        let mut out = HalfLaurent::zero();
        let mut pw = HalfLaurent::one();
        let mut cur = 0u32;
        for (d, c) in &self.coeffs {
            while cur < *d {
                pw = &pw * x;
                cur += 1;
            }
            out += &(c * &pw);
        }
        out
    }

    /// Integer coefficients, if every coefficient is a constant.
    pub fn integer_coeffs(&self) -> Option<BTreeMap<u32, BigInt>> {
        self.coeffs
            .iter()
            .map(|(d, c)| {
                if c.terms().all(|(e, _)| e == 0) {
                    Some((*d, c.coeff(0)))
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn display_in(&self, var: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (d, c) in self.coeffs.iter().rev() {
            let mono = match d {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{d}"),
            };
            let cs = c.to_string();
            let part = if mono.is_empty() {
                cs
            } else if c.is_one() {
                mono
            } else if cs == "-1" {
                format!("-{mono}")
            } else if c.len() == 1 {
                format!("{cs}*{mono}")
            } else {
                format!("({cs})*{mono}")
            };
            parts.push(part);
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_in("x"))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

impl<'a> Add<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        for (d, c) in &rhs.coeffs {
            out.add_term(*d, c);
        }
        out
    }
}

impl<'a> Sub<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|(d, c)| (*d, -c)).collect(),
        }
    }
}

impl<'a> Mul<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        let mut out = UniPoly::zero();
        for (da, ca) in &self.coeffs {
            for (db, cb) in &rhs.coeffs {
                out.add_term(da + db, &(ca * cb));
            }
        }
        out
    }
}

/// `S_0 = 1, S_1 = x, S_n = x S_{n-1} - S_{n-2}`.
pub fn cheb_s(n: u32) -> UniPoly {
    chebyshev(n, UniPoly::one())
}

/// `T_0 = 2, T_1 = x, T_n = x T_{n-1} - T_{n-2}`.
pub fn cheb_t(n: u32) -> UniPoly {
    chebyshev(n, UniPoly::from_ints(&[2]))
}

fn chebyshev(n: u32, base: UniPoly) -> UniPoly {
    let x = UniPoly::x();
    if n == 0 {
        return base;
    }
    let mut prev = base;
    let mut cur = x.clone();
    for _ in 1..n {
        let next = &(&x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Polynomial in `u1, u2` with integer coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BiPoly {
    coeffs: BTreeMap<(u32, u32), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i64) -> Self {
        let mut out = Self::zero();
        out.add_term((0, 0), &BigInt::from(c));
        out
    }

    /// Lift an integer univariate polynomial into the variable `u1` (`var == 0`) or `u2`.
    pub fn from_uni(p: &UniPoly, var: usize) -> Option<Self> {
        let ints = p.integer_coeffs()?;
        let mut out = Self::zero();
        for (d, c) in ints {
            let key = if var == 0 { (d, 0) } else { (0, d) };
            out.add_term(key, &c);
        }
        Some(out)
    }

    pub fn add_term(&mut self, key: (u32, u32), c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(key).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &BigInt)> + '_ {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }
}

impl<'a> Mul<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for ((a1, a2), ca) in &self.coeffs {
            for ((b1, b2), cb) in &rhs.coeffs {
                out.add_term((a1 + b1, a2 + b2), &(ca * cb));
            }
        }
        out
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let var = |name: &str, e: u32| match e {
            0 => None,
            1 => Some(name.to_string()),
            _ => Some(format!("{name}^{e}")),
        };
        for (idx, ((a, b), c)) in self.coeffs.iter().rev().enumerate() {
            let vars: Vec<String> = [var("u1", *a), var("u2", *b)].into_iter().flatten().collect();
            let mag = c.magnitude();
            let neg = c.sign() == num_bigint::Sign::Minus;
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}
