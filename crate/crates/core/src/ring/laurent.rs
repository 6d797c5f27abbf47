//! Laurent polynomials in `q^{1/2}` with integer coefficients.
//!
//! Exponents are stored doubled, so `q^{k/2}` is the key `k`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfLaurent {
    terms: BTreeMap<i64, BigInt>,
}

impl HalfLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(BigInt::from(c), 0)
    }

    /// `c * q^{twice/2}`
    pub fn monomial(c: BigInt, twice: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(twice, c);
        }
        Self { terms }
    }

    /// `q^{twice/2}`
    pub fn q_half(twice: i64) -> Self {
        Self::monomial(BigInt::one(), twice)
    }

    /// `q^k`
    pub fn q_pow(k: i64) -> Self {
        Self::q_half(2 * k)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in it {
            out.add_term(e, &c);
        }
        out
    }

    pub fn add_term(&mut self, twice: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(twice).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&twice);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).map_or(false, |c| c.is_one())
    }

    pub fn coeff(&self, twice: i64) -> BigInt {
        self.terms.get(&twice).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Multiply by `q^{twice/2}`.
    pub fn shift(&self, twice: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, v)| (e + twice, v.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Value at `q^{1/2} = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Substitute `q^{1/2} -> q^{-1/2}`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, v)| (-e, v.clone())).collect(),
        }
    }

    /// Units of `Z[q^{±1/2}]` are `±q^{k/2}`.
    pub fn unit_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        if c.abs().is_one() {
            Some(Self::monomial(c.clone(), -e))
        } else {
            None
        }
    }

    /// Dense form in `t = q^{1/2}`: `self = t^shift * sum poly[i] t^i` with `poly[0] != 0`.
    pub fn to_dense(&self) -> (i64, Vec<BigInt>) {
        let Some(lo) = self.min_exp() else {
            return (0, Vec::new());
        };
        let hi = self.max_exp().unwrap();
        let mut poly = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            poly[(e - lo) as usize] = c.clone();
        }
        (lo, poly)
    }

    pub fn from_dense(shift: i64, poly: &[BigInt]) -> Self {
        Self::from_terms(poly.iter().enumerate().map(|(i, c)| (shift + i as i64, c.clone())))
    }

    /// Exact quotient `self / other`, or `None` if `other` does not divide `self`.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (sa, a) = self.to_dense();
        let (sb, b) = other.to_dense();
        let (q, r) = super::poly::dense_divrem_exact(&a, &b)?;
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_dense(sa - sb, &q))
    }

    /// Content and sign normalisation: returns `(unit, rest)` with `self = unit * rest` where
    /// `rest` has lowest exponent 0 and positive lowest coefficient.
    pub fn split_unit(&self) -> (Self, Self) {
        match self.terms.iter().next() {
            None => (Self::one(), Self::zero()),
            Some((e, c)) => {
                let sign = if c.is_negative() { -1 } else { 1 };
                let unit = Self::monomial(BigInt::from(sign), *e);
                (unit.clone(), self.shift(-e).scale(&BigInt::from(sign)))
            }
        }
    }

    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }
}

impl fmt::Display for HalfLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if *e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "q")?;
            if *e != 2 {
                if e % 2 == 0 {
                    if *e > 0 {
                        write!(f, "^{}", e / 2)?;
                    } else {
                        write!(f, "^({})", e / 2)?;
                    }
                } else {
                    write!(f, "^({}/2)", e)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HalfLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HalfLaurent({self})")
    }
}

impl From<i64> for HalfLaurent {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for HalfLaurent {
    fn from(c: BigInt) -> Self {
        Self::monomial(c, 0)
    }
}

impl<'a> Add<&'a HalfLaurent> for &'a HalfLaurent {
    type Output = HalfLaurent;
    fn add(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for HalfLaurent {
    type Output = HalfLaurent;
    fn add(mut self, rhs: HalfLaurent) -> HalfLaurent {
        self += &rhs;
        self
    }
}

impl AddAssign<&HalfLaurent> for HalfLaurent {
    fn add_assign(&mut self, rhs: &HalfLaurent) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c);
        }
    }
}

impl SubAssign<&HalfLaurent> for HalfLaurent {
    fn sub_assign(&mut self, rhs: &HalfLaurent) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, &-c);
        }
    }
}

impl<'a> Sub<&'a HalfLaurent> for &'a HalfLaurent {
    type Output = HalfLaurent;
    fn sub(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for HalfLaurent {
    type Output = HalfLaurent;
    fn sub(mut self, rhs: HalfLaurent) -> HalfLaurent {
        self -= &rhs;
        self
    }
}

impl Neg for &HalfLaurent {
    type Output = HalfLaurent;
    fn neg(self) -> HalfLaurent {
        HalfLaurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for HalfLaurent {
    type Output = HalfLaurent;
    fn neg(self) -> HalfLaurent {
        -&self
    }
}

impl<'a> Mul<&'a HalfLaurent> for &'a HalfLaurent {
    type Output = HalfLaurent;
    fn mul(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = HalfLaurent::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, &(ca * cb));
            }
        }
        out
    }
}

impl Mul for HalfLaurent {
    type Output = HalfLaurent;
    fn mul(self, rhs: HalfLaurent) -> HalfLaurent {
        &self * &rhs
    }
}

impl Serialize for HalfLaurent {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let list: Vec<(i64, String)> = self.terms.iter().map(|(e, c)| (*e, c.to_string())).collect();
        list.serialize(s)
    }
}

impl<'de> Deserialize<'de> for HalfLaurent {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let list: Vec<(i64, String)> = Vec::deserialize(d)?;
        let mut out = HalfLaurent::zero();
        for (e, c) in list {
            let c: BigInt = c.parse().map_err(|_| D::Error::custom(format!("bad coefficient {c:?}")))?;
            out.add_term(e, &c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(k: i64) -> HalfLaurent {
        HalfLaurent::q_pow(k)
    }

    #[test]
    fn half_powers_multiply() {
        let h = HalfLaurent::q_half(1);
        assert_eq!(&h * &h, q(1));
    }

    #[test]
    fn additive_inverse_is_empty() {
        let x = &q(3) - &HalfLaurent::constant(7);
        assert!((&x + &(-&x)).is_zero());
        assert_eq!((&x + &(-&x)).len(), 0);
    }

    #[test]
    fn difference_of_squares() {
        let a = &q(1) - &q(-1);
        let b = &q(1) + &q(-1);
        assert_eq!(&a * &b, &q(2) - &q(-2));
    }

    #[test]
    fn exact_division() {
        let a = &q(1) - &q(-1);
        let b = &q(1) + &q(-1);
        let p = &a * &b;
        assert_eq!(p.div_exact(&a), Some(b.clone()));
        assert_eq!(q(1).div_exact(&(&q(1) + &HalfLaurent::one())), None);
    }

    #[test]
    fn display_and_json() {
        let x = &(&HalfLaurent::q_half(-5) * &HalfLaurent::constant(-1)) + &q(2);
        assert_eq!(x.to_string(), "-q^(-5/2) + q^2");
        let js = serde_json::to_string(&x).unwrap();
        assert_eq!(js, r#"[[-5,"-1"],[4,"1"]]"#);
        let back: HalfLaurent = serde_json::from_str(&js).unwrap();
        assert_eq!(back, x);
    }
}
