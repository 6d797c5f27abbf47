//! Exact arithmetic in `Q(ζ_m) = Q[t]/Φ_m(t)`, where `t` is the image of `q^{1/2}`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{dense_divrem_exact, dense_mul};
use super::HalfLaurent;

/// The `m`-th cyclotomic polynomial, low degree first.
pub fn cyclotomic_poly(m: u64) -> Vec<BigInt> {
    assert!(m >= 1);
    let mut num = vec![BigInt::zero(); m as usize + 1];
    num[0] = -BigInt::one();
    num[m as usize] = BigInt::one();
    let mut den = vec![BigInt::one()];
    for d in 1..m {
        if m % d == 0 {
            den = dense_mul(&den, &cyclotomic_poly(d));
        }
    }
    let (q, r) = dense_divrem_exact(&num, &den).expect("cyclotomic division");
    debug_assert!(r.is_empty());
    q
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicSpec {
    m: u64,
    n: u64,
    modulus: Vec<BigInt>,
}

impl CyclotomicSpec {
    pub fn new(m: u64) -> Self {
        assert!(m >= 1, "order of q^(1/2) must be positive");
        Self {
            m,
            n: m / m.gcd(&8),
            modulus: cyclotomic_poly(m),
        }
    }

    /// Multiplicative order of the image of `q^{1/2}`.
    pub fn m(&self) -> u64 {
        self.m
    }

    /// Multiplicative order of `q^4`.
    pub fn ord_q4(&self) -> u64 {
        self.n
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn zero(&self) -> CycloElem {
        CycloElem { coeffs: Vec::new() }
    }

    pub fn one(&self) -> CycloElem {
        self.specialize(&HalfLaurent::one())
    }

    /// Image of `x` under `q^{1/2} -> ζ_m`.
    pub fn specialize(&self, x: &HalfLaurent) -> CycloElem {
        let m = self.m as i64;
        let mut dense = vec![BigRational::zero(); self.m as usize];
        for (e, c) in x.terms() {
            dense[e.rem_euclid(m) as usize] += BigRational::from_integer(c.clone());
        }
        self.reduce(dense)
    }

    fn reduce(&self, mut p: Vec<BigRational>) -> CycloElem {
        let d = self.degree();
        while p.len() > d {
            let top = p.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = p.len() - d;
            for (i, c) in self.modulus[..d].iter().enumerate() {
                p[i + shift] -= &top * BigRational::from_integer(c.clone());
            }
        }
        qtrim(&mut p);
        CycloElem { coeffs: p }
    }

    pub fn add(&self, x: &CycloElem, y: &CycloElem) -> CycloElem {
        let n = x.coeffs.len().max(y.coeffs.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, c) in x.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in y.coeffs.iter().enumerate() {
            out[i] += c;
        }
        qtrim(&mut out);
        CycloElem { coeffs: out }
    }

    pub fn neg(&self, x: &CycloElem) -> CycloElem {
        CycloElem {
            coeffs: x.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, x: &CycloElem, y: &CycloElem) -> CycloElem {
        if x.is_zero() || y.is_zero() {
            return self.zero();
        }
        let mut out = vec![BigRational::zero(); x.coeffs.len() + y.coeffs.len() - 1];
        for (i, a) in x.coeffs.iter().enumerate() {
            for (j, b) in y.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        self.reduce(out)
    }

    /// Inverse in the field, or `None` for zero.
    pub fn inv(&self, x: &CycloElem) -> Option<CycloElem> {
        if x.is_zero() {
            return None;
        }
        let modulus: Vec<BigRational> = self.modulus.iter().map(|c| BigRational::from_integer(c.clone())).collect();
        // Extended Euclid: track s with s*x ≡ r (mod Φ).
        let (mut r0, mut r1) = (modulus, x.coeffs.clone());
        let (mut s0, mut s1) = (Vec::<BigRational>::new(), vec![BigRational::one()]);
        while !r1.is_empty() {
            let (q, r) = qdivrem(&r0, &r1);
            let s2 = qsub(&s0, &qmul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r0 is a nonzero constant since Φ is irreducible.
        if r0.len() != 1 {
            return None;
        }
        let c = r0[0].clone();
        let s: Vec<BigRational> = s0.iter().map(|v| v / &c).collect();
        Some(self.reduce(s))
    }

    /// `ζ^k` for an integer power of `q^{1/2}`.
    pub fn zeta_pow(&self, k: i64) -> CycloElem {
        self.specialize(&HalfLaurent::q_half(k))
    }
}

impl fmt::Debug for CyclotomicSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclotomicSpec(m={}, N={})", self.m, self.n)
    }
}

fn qtrim(p: &mut Vec<BigRational>) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

fn qmul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    qtrim(&mut out);
    out
}

fn qsub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    qtrim(&mut out);
    out
}

fn qdivrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    qtrim(&mut r);
    let lb = b.last().unwrap().clone();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![BigRational::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let c = r.last().unwrap() / &lb;
        let d = r.len() - b.len();
        for (i, y) in b.iter().enumerate() {
            r[i + d] -= &c * y;
        }
        q[d] = c;
        r.pop();
        qtrim(&mut r);
    }
    qtrim(&mut q);
    (q, r)
}

/// Element of `Q(ζ_m)` in the power basis `1, ζ, …, ζ^{φ(m)-1}`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CycloElem {
    coeffs: Vec<BigRational>,
}

impl CycloElem {
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }
}

impl serde::Serialize for CycloElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        v.serialize(s)
    }
}

impl fmt::Display for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{mag}*z")?,
                (_, true) => write!(f, "z^{i}")?,
                (_, false) => write!(f, "{mag}*z^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloElem({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::quantum_int;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_poly(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(16), ints(&[1, 0, 0, 0, 0, 0, 0, 0, 1]));
    }

    #[test]
    fn orders_of_q4() {
        assert_eq!(CyclotomicSpec::new(16).ord_q4(), 2);
        assert_eq!(CyclotomicSpec::new(8).ord_q4(), 1);
        assert_eq!(CyclotomicSpec::new(40).ord_q4(), 5);
        assert_eq!(CyclotomicSpec::new(24).ord_q4(), 3);
    }

    #[test]
    fn quantum_n_vanishes() {
        for m in [12u64, 16, 20, 24, 40, 7, 9] {
            let spec = CyclotomicSpec::new(m);
            let n = spec.ord_q4();
            if n > 1 {
                assert!(spec.specialize(&quantum_int(n as u32)).is_zero(), "m={m}");
                for k in 1..n {
                    assert!(!spec.specialize(&quantum_int(k as u32)).is_zero(), "m={m} k={k}");
                }
            }
        }
    }

    #[test]
    fn one_plus_q2_at_16() {
        let spec = CyclotomicSpec::new(16);
        let x = &HalfLaurent::one() + &HalfLaurent::q_pow(2);
        let img = spec.specialize(&x);
        assert!(!img.is_zero());
        assert_eq!(img, spec.add(&spec.one(), &spec.zeta_pow(4)));
    }

    #[test]
    fn q_half_at_m1_is_one() {
        let spec = CyclotomicSpec::new(1);
        assert_eq!(spec.specialize(&HalfLaurent::q_half(1)), spec.one());
    }

    #[test]
    fn inverse_roundtrip() {
        let spec = CyclotomicSpec::new(40);
        let x = spec.specialize(&(&HalfLaurent::q_pow(3) - &HalfLaurent::constant(2)));
        let y = spec.inv(&x).unwrap();
        assert_eq!(spec.mul(&x, &y), spec.one());
        assert!(spec.inv(&spec.zero()).is_none());
    }
}
