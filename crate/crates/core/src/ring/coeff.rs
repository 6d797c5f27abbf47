//! Coefficient rings for diagram algebras.
//!
//! A ring value carries whatever context its elements need (the cyclotomic modulus), and
//! elements are plain data manipulated through it.

use std::fmt::Debug;
use std::sync::Arc;

use super::{CycloElem, CyclotomicSpec, HalfLaurent, RatFunc};

pub trait CoeffRing: Clone + Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Debug + Send + Sync + 'static;

    /// Identifies the ring for memoisation.
    fn key(&self) -> String;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn neg(&self, x: &Self::Elem) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn from_laurent(&self, x: &HalfLaurent) -> Self::Elem;
    /// Multiplicative inverse, `None` when `x` is not a unit.
    fn inv(&self, x: &Self::Elem) -> Option<Self::Elem>;
    fn render(&self, x: &Self::Elem) -> String;
    fn elem_json(&self, x: &Self::Elem) -> serde_json::Value;

    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        self.add(x, &self.neg(y))
    }
}

/// `Z[q^{±1/2}]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LaurentRing;

impl CoeffRing for LaurentRing {
    type Elem = HalfLaurent;

    fn key(&self) -> String {
        "laurent".into()
    }
    fn zero(&self) -> HalfLaurent {
        HalfLaurent::zero()
    }
    fn one(&self) -> HalfLaurent {
        HalfLaurent::one()
    }
    fn is_zero(&self, x: &HalfLaurent) -> bool {
        x.is_zero()
    }
    fn add(&self, x: &HalfLaurent, y: &HalfLaurent) -> HalfLaurent {
        x + y
    }
    fn neg(&self, x: &HalfLaurent) -> HalfLaurent {
        -x
    }
    fn mul(&self, x: &HalfLaurent, y: &HalfLaurent) -> HalfLaurent {
        x * y
    }
    fn from_laurent(&self, x: &HalfLaurent) -> HalfLaurent {
        x.clone()
    }
    fn inv(&self, x: &HalfLaurent) -> Option<HalfLaurent> {
        x.unit_inverse()
    }
    fn render(&self, x: &HalfLaurent) -> String {
        x.to_string()
    }
    fn elem_json(&self, x: &HalfLaurent) -> serde_json::Value {
        serde_json::to_value(x).expect("coefficient serialises")
    }
}

/// `Q(q^{1/2})`, the generic-parameter field.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FractionField;

impl CoeffRing for FractionField {
    type Elem = RatFunc;

    fn key(&self) -> String {
        "generic".into()
    }
    fn zero(&self) -> RatFunc {
        RatFunc::zero()
    }
    fn one(&self) -> RatFunc {
        RatFunc::one()
    }
    fn is_zero(&self, x: &RatFunc) -> bool {
        x.is_zero()
    }
    fn add(&self, x: &RatFunc, y: &RatFunc) -> RatFunc {
        x.add(y)
    }
    fn neg(&self, x: &RatFunc) -> RatFunc {
        x.neg()
    }
    fn mul(&self, x: &RatFunc, y: &RatFunc) -> RatFunc {
        x.mul(y)
    }
    fn from_laurent(&self, x: &HalfLaurent) -> RatFunc {
        RatFunc::from_laurent(x)
    }
    fn inv(&self, x: &RatFunc) -> Option<RatFunc> {
        x.inv()
    }
    fn render(&self, x: &RatFunc) -> String {
        x.to_string()
    }
    fn elem_json(&self, x: &RatFunc) -> serde_json::Value {
        serde_json::to_value(x).expect("coefficient serialises")
    }
}

/// `Q(ζ_m)` with `q^{1/2} -> ζ_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    spec: Arc<CyclotomicSpec>,
}

impl CyclotomicField {
    pub fn new(m: u64) -> Self {
        Self {
            spec: Arc::new(CyclotomicSpec::new(m)),
        }
    }

    pub fn spec(&self) -> &CyclotomicSpec {
        &self.spec
    }
}

impl CoeffRing for CyclotomicField {
    type Elem = CycloElem;

    fn key(&self) -> String {
        format!("cyclo:{}", self.spec.m())
    }
    fn zero(&self) -> CycloElem {
        self.spec.zero()
    }
    fn one(&self) -> CycloElem {
        self.spec.one()
    }
    fn is_zero(&self, x: &CycloElem) -> bool {
        x.is_zero()
    }
    fn add(&self, x: &CycloElem, y: &CycloElem) -> CycloElem {
        self.spec.add(x, y)
    }
    fn neg(&self, x: &CycloElem) -> CycloElem {
        self.spec.neg(x)
    }
    fn mul(&self, x: &CycloElem, y: &CycloElem) -> CycloElem {
        self.spec.mul(x, y)
    }
    fn from_laurent(&self, x: &HalfLaurent) -> CycloElem {
        self.spec.specialize(x)
    }
    fn inv(&self, x: &CycloElem) -> Option<CycloElem> {
        self.spec.inv(x)
    }
    fn render(&self, x: &CycloElem) -> String {
        x.to_string()
    }
    fn elem_json(&self, x: &CycloElem) -> serde_json::Value {
        serde_json::to_value(x).expect("coefficient serialises")
    }
}
