use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Gen, Mono};
use crate::parse::ParseError;
use crate::ring::HalfLaurent;

/// A linear combination of PBW monomials with coefficients in `Z[q^{±1/2}]`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct OqElement {
    terms: BTreeMap<Mono, HalfLaurent>,
}

impl OqElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_mono(Mono::ONE)
    }

    pub fn scalar(c: HalfLaurent) -> Self {
        let mut out = Self::zero();
        out.add_term(Mono::ONE, &c);
        out
    }

    pub fn gen(g: Gen) -> Self {
        nf(&[g])
    }

    pub fn from_mono(m: Mono) -> Self {
        let mut out = Self::zero();
        out.add_term(m, &HalfLaurent::one());
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (Mono, HalfLaurent)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (m, c) in it {
            out.add_term(m, &c);
        }
        out
    }

    pub fn add_term(&mut self, m: Mono, c: &HalfLaurent) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &HalfLaurent)> + '_ {
        self.terms.iter()
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

    pub fn coeff(&self, m: &Mono) -> HalfLaurent {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Largest monomial degree present; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, &-c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn scale(&self, c: &HalfLaurent) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    pub fn right_mul_gen(&self, g: Gen) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            for (m2, c2) in m.right_mul(g) {
                out.add_term(m2, &(c * &c2));
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &other.terms {
            let mut acc = self.clone();
            for g in m.word() {
                acc = acc.right_mul_gen(g);
            }
            out = out.add(&acc.scale(c));
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Coefficients at `q^{1/2} = 1`: the image in the commutative coordinate ring, whose
    /// basis is the same set of monomials.
    pub fn eval_at_one(&self) -> BTreeMap<Mono, num_bigint::BigInt> {
        self.terms
            .iter()
            .map(|(m, c)| (*m, c.eval_at_one()))
            .filter(|(_, c)| *c != num_bigint::BigInt::from(0))
            .collect()
    }

    /// The scalar part if the element is a multiple of 1.
    pub fn as_scalar(&self) -> Option<HalfLaurent> {
        match self.terms.len() {
            0 => Some(HalfLaurent::zero()),
            1 => self.terms.get(&Mono::ONE).cloned(),
            _ => None,
        }
    }
}

/// Normal form of a word in the generators.
pub fn nf(word: &[Gen]) -> OqElement {
    word.iter().fold(OqElement::one(), |acc, &g| acc.right_mul_gen(g))
}

/// A word such as `"dab"`; whitespace is ignored.
pub fn parse_word(s: &str) -> Result<Vec<Gen>, ParseError> {
    let mut out = Vec::new();
    for (pos, ch) in s.char_indices() {
        if ch.is_whitespace() {
            continue;
        }
        match Gen::from_letter(ch) {
            Some(g) => out.push(g),
            None => return Err(ParseError::new(pos, format!("expected one of a,b,c,d, found {ch:?}"))),
        }
    }
    Ok(out)
}

fn coeff_text(c: &HalfLaurent) -> String {
    let t = c.to_string();
    if !t.contains(' ') && !t.starts_with('-') {
        t
    } else {
        format!("({c})")
    }
}

impl fmt::Display for OqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            if *m == Mono::ONE {
                write!(f, "{}", coeff_text(c))?;
            } else if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", coeff_text(c))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for OqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OqElement({self})")
    }
}

impl Serialize for OqElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let list: Vec<(&Mono, &HalfLaurent)> = self.terms.iter().collect();
        list.serialize(s)
    }
}

impl<'de> Deserialize<'de> for OqElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let list: Vec<(Mono, HalfLaurent)> = Vec::deserialize(d)?;
        Ok(Self::from_terms(list))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> OqElement {
        nf(&parse_word(s).unwrap())
    }

    fn q(k: i64) -> HalfLaurent {
        HalfLaurent::q_pow(k)
    }

    #[test]
    fn defining_relations() {
        assert_eq!(w("ba"), w("ab").scale(&q(2)));
        assert_eq!(w("ca"), w("ac").scale(&q(2)));
        assert_eq!(w("db"), w("bd").scale(&q(2)));
        assert_eq!(w("dc"), w("cd").scale(&q(2)));
        assert_eq!(w("bc"), w("cb"));
        assert_eq!(w("ad").sub(&w("bc").scale(&q(-2))), OqElement::one());
        assert_eq!(w("da").sub(&w("bc").scale(&q(2))), OqElement::one());
    }

    #[test]
    fn dab() {
        // d a b = (1 + q² bc) b
        let expect = w("b").add(&OqElement::from_mono(Mono::a_family(0, 2, 1)).scale(&q(2)));
        assert_eq!(w("dab"), expect);
    }

    #[test]
    fn mul_is_word_concatenation() {
        assert_eq!(w("ad").mul(&w("da")), w("adda"));
        assert_eq!(OqElement::one().mul(&w("cab")), w("cab"));
    }

    #[test]
    fn parse_error_position() {
        let e = parse_word("ab x").unwrap_err();
        assert_eq!(e.pos, 3);
    }

    #[test]
    fn json_round_trip() {
        let x = w("dab").add(&w("c").scale(&q(-1)));
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(serde_json::from_str::<OqElement>(&s).unwrap(), x);
    }
}
