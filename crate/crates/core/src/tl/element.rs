//! Linear combinations of planar tangles.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Matching, TlError};
use crate::ring::{delta, CoeffRing, HalfLaurent};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "E: Serialize", deserialize = "E: Deserialize<'de>"))]
pub struct TLElement<E> {
    n_in: usize,
    n_out: usize,
    #[serde(with = "term_list")]
    terms: BTreeMap<Matching, E>,
}

mod term_list {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<E: Serialize, S: Serializer>(t: &BTreeMap<Matching, E>, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<(&Matching, &E)> = t.iter().collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, E: Deserialize<'de>, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<Matching, E>, D::Error> {
        let v: Vec<(Matching, E)> = Vec::deserialize(d)?;
        Ok(v.into_iter().collect())
    }
}

impl<E: Clone + PartialEq> TLElement<E> {
    pub fn zero(n_in: usize, n_out: usize) -> Self {
        Self { n_in, n_out, terms: BTreeMap::new() }
    }

    pub fn from_matching<R: CoeffRing<Elem = E>>(ring: &R, m: Matching) -> Self {
        let mut out = Self::zero(m.n_in(), m.n_out());
        out.terms.insert(m, ring.one());
        out
    }

    pub fn identity<R: CoeffRing<Elem = E>>(ring: &R, n: usize) -> Self {
        Self::from_matching(ring, Matching::identity(n))
    }

    pub fn n_in(&self) -> usize {
        self.n_in
    }

    pub fn n_out(&self) -> usize {
        self.n_out
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Matching, &E)> + '_ {
        self.terms.iter()
    }

    pub fn coeff<R: CoeffRing<Elem = E>>(&self, ring: &R, m: &Matching) -> E {
        self.terms.get(m).cloned().unwrap_or_else(|| ring.zero())
    }

    pub fn add_term<R: CoeffRing<Elem = E>>(&mut self, ring: &R, m: Matching, c: &E) {
        debug_assert_eq!((m.n_in(), m.n_out()), (self.n_in, self.n_out));
        if ring.is_zero(c) {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v = ring.add(v, c);
                if ring.is_zero(v) {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn add<R: CoeffRing<Elem = E>>(&self, ring: &R, other: &Self) -> Result<Self, TlError> {
        if (self.n_in, self.n_out) != (other.n_in, other.n_out) {
            return Err(TlError::WidthMismatch { expected: self.n_in, found: other.n_in });
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(ring, m.clone(), c);
        }
        Ok(out)
    }

    pub fn scale<R: CoeffRing<Elem = E>>(&self, ring: &R, c: &E) -> Self {
        let mut out = Self::zero(self.n_in, self.n_out);
        for (m, v) in &self.terms {
            out.add_term(ring, m.clone(), &ring.mul(v, c));
        }
        out
    }

    pub fn sub<R: CoeffRing<Elem = E>>(&self, ring: &R, other: &Self) -> Result<Self, TlError> {
        self.add(ring, &other.scale(ring, &ring.neg(&ring.one())))
    }

    /// `upper` stacked on `lower`, each closed loop replaced by `δ`.
    pub fn compose<R: CoeffRing<Elem = E>>(ring: &R, lower: &Self, upper: &Self) -> Result<Self, TlError> {
        if lower.n_out != upper.n_in {
            return Err(TlError::WidthMismatch { expected: lower.n_out, found: upper.n_in });
        }
        let mut out = Self::zero(lower.n_in, upper.n_out);
        let mut powers: Vec<E> = vec![ring.one()];
        let d = ring.from_laurent(&delta());
        for (ml, cl) in &lower.terms {
            for (mu, cu) in &upper.terms {
                let (m, loops) = Matching::compose(ml, mu)?;
                while powers.len() <= loops {
                    let next = ring.mul(powers.last().unwrap(), &d);
                    powers.push(next);
                }
                let c = ring.mul(&ring.mul(cl, cu), &powers[loops]);
                out.add_term(ring, m, &c);
            }
        }
        Ok(out)
    }

    /// Algebra product `x · y`: `x` stacked above `y`.
    pub fn mul<R: CoeffRing<Elem = E>>(ring: &R, x: &Self, y: &Self) -> Result<Self, TlError> {
        Self::compose(ring, y, x)
    }

    /// Side-by-side product, `right` to the right of `left`.
    pub fn tensor<R: CoeffRing<Elem = E>>(ring: &R, left: &Self, right: &Self) -> Self {
        let mut out = Self::zero(left.n_in + right.n_in, left.n_out + right.n_out);
        for (ml, cl) in &left.terms {
            for (mr, cr) in &right.terms {
                out.add_term(ring, ml.tensor(mr), &ring.mul(cl, cr));
            }
        }
        out
    }

    pub fn map_coeffs<R2: CoeffRing>(&self, ring: &R2, f: impl Fn(&E) -> R2::Elem) -> TLElement<R2::Elem> {
        let mut out = TLElement::zero(self.n_in, self.n_out);
        for (m, c) in &self.terms {
            out.add_term(ring, m.clone(), &f(c));
        }
        out
    }

    pub fn to_json<R: CoeffRing<Elem = E>>(&self, ring: &R) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| serde_json::json!([m, ring.elem_json(c)]))
                .collect(),
        )
    }
}

impl TLElement<HalfLaurent> {
    /// Image in another coefficient ring.
    pub fn specialize<R: CoeffRing>(&self, ring: &R) -> TLElement<R::Elem> {
        self.map_coeffs(ring, |c| ring.from_laurent(c))
    }
}
