//! Exact coefficient arithmetic.

mod coeff;
mod cyclotomic;
mod laurent;
mod poly;
mod ratfunc;

use std::fmt;
use std::str::FromStr;

pub use coeff::{CoeffRing, CyclotomicField, FractionField, LaurentRing};
pub use cyclotomic::{cyclotomic_poly, CycloElem, CyclotomicSpec};
pub use laurent::HalfLaurent;
pub use poly::{cheb_s, cheb_t, BiPoly, UniPoly};
pub use ratfunc::RatFunc;

/// `[n]_q = q^{-2(n-1)} + q^{-2(n-3)} + ... + q^{2(n-1)}`; `[0]_q = 0`.
pub fn quantum_int(n: u32) -> HalfLaurent {
    let n = n as i64;
    let mut out = HalfLaurent::zero();
    let mut i = -n + 1;
    while i <= n - 1 {
        out += &HalfLaurent::q_pow(2 * i);
        i += 2;
    }
    out
}

/// `[1]_q [2]_q ... [n]_q`.
pub fn quantum_factorial(n: u32) -> HalfLaurent {
    (1..=n).fold(HalfLaurent::one(), |acc, k| &acc * &quantum_int(k))
}

/// Value of a trivial loop, `-q^2 - q^{-2}`.
pub fn delta() -> HalfLaurent {
    -(&HalfLaurent::q_pow(2) + &HalfLaurent::q_pow(-2))
}

/// `q^{N^2}`, one of the two Frobenius parameters in use.
pub fn frobenius_epsilon_full(n: u64) -> HalfLaurent {
    HalfLaurent::q_pow((n * n) as i64)
}

/// `q^{N^2/2}`, the other Frobenius parameter in use.
pub fn frobenius_epsilon_half(n: u64) -> HalfLaurent {
    HalfLaurent::q_half((n * n) as i64)
}

/// Which coefficient field a computation runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingMode {
    Generic,
    Cyclotomic(u64),
}

impl fmt::Display for RingMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingMode::Generic => write!(f, "generic"),
            RingMode::Cyclotomic(m) => write!(f, "cyclo:{m}"),
        }
    }
}

impl FromStr for RingMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "generic" {
            return Ok(RingMode::Generic);
        }
        if let Some(rest) = s.strip_prefix("cyclo:") {
            return match rest.parse::<u64>() {
                Ok(m) if m >= 1 => Ok(RingMode::Cyclotomic(m)),
                _ => Err(format!("bad cyclotomic order {rest:?} at column 7; expected a positive integer")),
            };
        }
        Err(format!("unknown ring {s:?}; expected `generic` or `cyclo:<m>`"))
    }
}

impl serde::Serialize for RingMode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for RingMode {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantum_integers() {
        assert!(quantum_int(1).is_one());
        assert_eq!(quantum_int(2), &HalfLaurent::q_pow(-2) + &HalfLaurent::q_pow(2));
        assert_eq!(
            quantum_int(3),
            &(&HalfLaurent::q_pow(-4) + &HalfLaurent::one()) + &HalfLaurent::q_pow(4)
        );
        assert!(quantum_factorial(0).is_one());
        assert_eq!(quantum_factorial(2), quantum_int(2));
        assert_eq!(quantum_factorial(3), &quantum_int(2) * &quantum_int(3));
    }

    #[test]
    fn delta_is_minus_quantum_two() {
        assert_eq!(delta(), -quantum_int(2));
    }

    #[test]
    fn ring_mode_parse() {
        assert_eq!("generic".parse::<RingMode>(), Ok(RingMode::Generic));
        assert_eq!("cyclo:16".parse::<RingMode>(), Ok(RingMode::Cyclotomic(16)));
        assert!("cyclo:0".parse::<RingMode>().is_err());
        assert!("real".parse::<RingMode>().is_err());
    }
}
