use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Mono, OqElement};
use crate::ring::HalfLaurent;

/// An element of a tensor power of `O_{q^2}(SL_2)` in the product PBW basis.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tensor {
    arity: usize,
    #[serde(with = "term_list")]
    terms: BTreeMap<Vec<Mono>, HalfLaurent>,
}

/// Tensors with two factors; coproducts and single cuts land here.
pub type Tensor2 = Tensor;

mod term_list {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(t: &BTreeMap<Vec<Mono>, HalfLaurent>, s: S) -> Result<S::Ok, S::Error> {
        t.iter().collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<Vec<Mono>, HalfLaurent>, D::Error> {
        let list: Vec<(Vec<Mono>, HalfLaurent)> = Vec::deserialize(d)?;
        Ok(list.into_iter().filter(|(_, c)| !c.is_zero()).collect())
    }
}

impl Tensor {
    pub fn zero(arity: usize) -> Self {
        Self { arity, terms: BTreeMap::new() }
    }

    /// `1 ⊗ ... ⊗ 1`
    pub fn unit(arity: usize) -> Self {
        let mut out = Self::zero(arity);
        out.add_term(vec![Mono::ONE; arity], &HalfLaurent::one());
        out
    }

    /// `x_1 ⊗ x_2 ⊗ ...` expanded.
    pub fn pure(factors: &[OqElement]) -> Self {
        let mut out = Self::unit(0);
        for x in factors {
            out = out.outer(&Self::from_element(x));
        }
        out
    }

    pub fn from_element(x: &OqElement) -> Self {
        let mut out = Self::zero(1);
        for (m, c) in x.terms() {
            out.add_term(vec![*m], c);
        }
        out
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn add_term(&mut self, key: Vec<Mono>, c: &HalfLaurent) {
        assert_eq!(key.len(), self.arity, "tensor arity");
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Mono>, &HalfLaurent)> + '_ {
        self.terms.iter()
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

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&HalfLaurent::constant(-1)))
    }

    pub fn scale(&self, c: &HalfLaurent) -> Self {
        let mut out = Self::zero(self.arity);
        for (k, x) in &self.terms {
            out.add_term(k.clone(), &(x * c));
        }
        out
    }

    /// `self ⊗ other`
    pub fn outer(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.arity + other.arity);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let mut k = k1.clone();
                k.extend_from_slice(k2);
                out.add_term(k, &(c1 * c2));
            }
        }
        out
    }

    /// Factorwise product `(x_1 ⊗ x_2)(y_1 ⊗ y_2) = x_1 y_1 ⊗ x_2 y_2`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity, "tensor arity");
        let mut out = Self::zero(self.arity);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let factors: Vec<OqElement> = k1
                    .iter()
                    .zip(k2)
                    .map(|(a, b)| OqElement::from_mono(*a).mul(&OqElement::from_mono(*b)))
                    .collect();
                out = out.add(&Self::pure(&factors).scale(&(c1 * c2)));
            }
        }
        out
    }

    /// Replace factor `slot` by its image under `f`, which may itself be a tensor.
    pub fn apply_at(&self, slot: usize, f: &dyn Fn(&Mono) -> Tensor) -> Self {
        let mut out: Option<Self> = None;
        for (k, c) in &self.terms {
            let left = Self::unit_key(&k[..slot]);
            let right = Self::unit_key(&k[slot + 1..]);
            let piece = left.outer(&f(&k[slot])).outer(&right).scale(c);
            out = Some(match out {
                Some(acc) => acc.add(&piece),
                None => piece,
            });
        }
        out.unwrap_or_else(|| {
            let width = f(&Mono::ONE).arity;
            Self::zero(self.arity - 1 + width)
        })
    }

    fn unit_key(k: &[Mono]) -> Self {
        let mut out = Self::zero(k.len());
        out.add_term(k.to_vec(), &HalfLaurent::one());
        out
    }

    /// Multiply all factors together in order.
    pub fn contract(&self) -> OqElement {
        let mut out = OqElement::zero();
        for (k, c) in &self.terms {
            let prod = k.iter().fold(OqElement::one(), |acc, m| acc.mul(&OqElement::from_mono(*m)));
            out = out.add(&prod.scale(c));
        }
        out
    }
}

impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (k, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            if !c.is_one() {
                write!(f, "({c})*")?;
            }
            let parts: Vec<String> = k.iter().map(|m| m.to_string()).collect();
            write!(f, "{}", parts.join("⊗"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor({self})")
    }
}
