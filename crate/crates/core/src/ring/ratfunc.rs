//! The fraction field `Q(q^{1/2})` of the Laurent ring.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::{dense_divrem_exact, dense_gcd, dense_mul, trim};
use super::HalfLaurent;

/// `t^shift * num(t) / den(t)` with `t = q^{1/2}`, `num(0), den(0) != 0`,
/// `gcd(num, den) = 1` in `Z[t]` and positive leading coefficient of `den`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    shift: i64,
    num: Vec<BigInt>,
    den: Vec<BigInt>,
}

fn strip_low(p: &mut Vec<BigInt>) -> i64 {
    let k = p.iter().take_while(|c| c.is_zero()).count();
    p.drain(..k);
    k as i64
}

fn shifted(p: &[BigInt], k: i64) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); k as usize];
    out.extend_from_slice(p);
    out
}

fn dense_add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(&mut out);
    out
}

impl RatFunc {
    pub fn zero() -> Self {
        Self {
            shift: 0,
            num: Vec::new(),
            den: vec![BigInt::one()],
        }
    }

    pub fn one() -> Self {
        Self::from_laurent(&HalfLaurent::one())
    }

    pub fn from_laurent(x: &HalfLaurent) -> Self {
        let (shift, num) = x.to_dense();
        Self::normalize(shift, num, vec![BigInt::one()])
    }

    pub fn ratio(num: &HalfLaurent, den: &HalfLaurent) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        let (sn, n) = num.to_dense();
        let (sd, d) = den.to_dense();
        Some(Self::normalize(sn - sd, n, d))
    }

    fn normalize(mut shift: i64, mut num: Vec<BigInt>, mut den: Vec<BigInt>) -> Self {
        trim(&mut num);
        trim(&mut den);
        assert!(!den.is_empty(), "zero denominator");
        if num.is_empty() {
            return Self::zero();
        }
        shift += strip_low(&mut num);
        shift -= strip_low(&mut den);
        if den.len() > 1 || !den[0].is_one() {
            let g = dense_gcd(&num, &den);
            if g.len() > 1 || !g[0].is_one() {
                num = dense_divrem_exact(&num, &g).expect("gcd divides").0;
                den = dense_divrem_exact(&den, &g).expect("gcd divides").0;
            }
            if den.last().unwrap().is_negative() {
                num.iter_mut().for_each(|c| *c = -c.clone());
                den.iter_mut().for_each(|c| *c = -c.clone());
            }
        }
        Self { shift, num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let s = self.shift.min(other.shift);
        let a = shifted(&self.num, self.shift - s);
        let c = shifted(&other.num, other.shift - s);
        if self.den == other.den {
            return Self::normalize(s, dense_add(&a, &c), self.den.clone());
        }
        let num = dense_add(&dense_mul(&a, &other.den), &dense_mul(&c, &self.den));
        Self::normalize(s, num, dense_mul(&self.den, &other.den))
    }

    pub fn neg(&self) -> Self {
        Self {
            shift: self.shift,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        Self::normalize(
            self.shift + other.shift,
            dense_mul(&self.num, &other.num),
            dense_mul(&self.den, &other.den),
        )
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::normalize(-self.shift, self.den.clone(), self.num.clone()))
    }

    pub fn numerator(&self) -> HalfLaurent {
        HalfLaurent::from_dense(self.shift, &self.num)
    }

    pub fn denominator(&self) -> HalfLaurent {
        HalfLaurent::from_dense(0, &self.den)
    }

    /// The value as a Laurent polynomial when the denominator is a unit.
    pub fn to_laurent(&self) -> Option<HalfLaurent> {
        if self.den.len() == 1 && self.den[0].is_one() {
            Some(self.numerator())
        } else {
            None
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_laurent() {
            Some(l) => write!(f, "{l}"),
            None => write!(f, "({})/({})", self.numerator(), self.denominator()),
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct RatRepr {
    num: HalfLaurent,
    den: HalfLaurent,
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RatRepr { num: self.numerator(), den: self.denominator() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = RatRepr::deserialize(d)?;
        RatFunc::ratio(&r.num, &r.den).ok_or_else(|| D::Error::custom("zero denominator"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::quantum_int;

    #[test]
    fn cancellation_is_canonical() {
        let a = quantum_int(2);
        let b = quantum_int(3);
        let x = RatFunc::ratio(&(&a * &b), &a).unwrap();
        assert_eq!(x, RatFunc::from_laurent(&b));
        assert_eq!(x.to_laurent(), Some(b));
    }

    #[test]
    fn inverse_and_sum() {
        let a = RatFunc::from_laurent(&quantum_int(2));
        let ai = a.inv().unwrap();
        assert_eq!(a.mul(&ai), RatFunc::one());
        let half = ai.add(&ai);
        let two_over = RatFunc::ratio(&HalfLaurent::constant(2), &quantum_int(2)).unwrap();
        assert_eq!(half, two_over);
        assert!(ai.add(&ai.neg()).is_zero());
    }
}
