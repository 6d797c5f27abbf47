//! `O_{q^2}(SL_2)`: generators `a, b, c, d`, PBW normal forms and the Hopf maps.
//!
//! Relations: `ba = q²ab, ca = q²ac, db = q²bd, dc = q²cd, bc = cb, ad - q⁻²bc = da - q²bc = 1`.
//! The basis is `a^i b^j c^k` together with `b^j c^k d^i`, `i ≥ 1`.

mod element;
mod hopf;
mod rewrite;
mod tensor;

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bigon::State;
use crate::ring::HalfLaurent;

pub use element::{nf, parse_word, OqElement};
pub use hopf::{antipode, commutator, coproduct, counit, generator_coproduct};
pub use rewrite::{rewrite_nf, RewriteRule, RULES};
pub use tensor::{Tensor, Tensor2};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    A,
    B,
    C,
    D,
}

impl Gen {
    pub const ALL: [Gen; 4] = [Gen::A, Gen::B, Gen::C, Gen::D];

    pub fn letter(self) -> char {
        match self {
            Gen::A => 'a',
            Gen::B => 'b',
            Gen::C => 'c',
            Gen::D => 'd',
        }
    }

    pub fn from_letter(c: char) -> Option<Gen> {
        match c {
            'a' => Some(Gen::A),
            'b' => Some(Gen::B),
            'c' => Some(Gen::C),
            'd' => Some(Gen::D),
            _ => None,
        }
    }

    /// The arc with left state `nu` and right state `mu`: `++ -> a, +- -> b, -+ -> c, -- -> d`.
    pub fn from_states(nu: State, mu: State) -> Gen {
        match (nu, mu) {
            (State::Plus, State::Plus) => Gen::A,
            (State::Plus, State::Minus) => Gen::B,
            (State::Minus, State::Plus) => Gen::C,
            (State::Minus, State::Minus) => Gen::D,
        }
    }

    pub fn states(self) -> (State, State) {
        match self {
            Gen::A => (State::Plus, State::Plus),
            Gen::B => (State::Plus, State::Minus),
            Gen::C => (State::Minus, State::Plus),
            Gen::D => (State::Minus, State::Minus),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `a^i b^j c^k`
    A,
    /// `b^j c^k d^i`, `i ≥ 1`
    D,
}

/// A PBW monomial. `i` is the exponent of `a` (family A) or `d` (family D).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mono {
    family: Family,
    i: u32,
    j: u32,
    k: u32,
}

impl Mono {
    pub const ONE: Mono = Mono { family: Family::A, i: 0, j: 0, k: 0 };

    pub fn a_family(i: u32, j: u32, k: u32) -> Mono {
        Mono { family: Family::A, i, j, k }
    }

    /// `b^j c^k d^i`; with `i = 0` this is the A-family monomial `b^j c^k`.
    pub fn d_family(i: u32, j: u32, k: u32) -> Mono {
        if i == 0 {
            Mono::a_family(0, j, k)
        } else {
            Mono { family: Family::D, i, j, k }
        }
    }

    pub fn new(family: Family, i: u32, j: u32, k: u32) -> Mono {
        match family {
            Family::A => Mono::a_family(i, j, k),
            Family::D => Mono::d_family(i, j, k),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn exponents(&self) -> (u32, u32, u32) {
        (self.i, self.j, self.k)
    }

    pub fn degree(&self) -> u32 {
        self.i + self.j + self.k
    }

    pub fn word(&self) -> Vec<Gen> {
        let rep = |g: Gen, n: u32| std::iter::repeat(g).take(n as usize);
        match self.family {
            Family::A => rep(Gen::A, self.i).chain(rep(Gen::B, self.j)).chain(rep(Gen::C, self.k)).collect(),
            Family::D => rep(Gen::B, self.j).chain(rep(Gen::C, self.k)).chain(rep(Gen::D, self.i)).collect(),
        }
    }

    /// All monomials of degree at most `d`.
    pub fn up_to_degree(d: u32) -> Vec<Mono> {
        let mut out = Vec::new();
        for total in 0..=d {
            for i in 0..=total {
                for j in 0..=total - i {
                    let k = total - i - j;
                    out.push(Mono::a_family(i, j, k));
                    if i > 0 {
                        out.push(Mono::d_family(i, j, k));
                    }
                }
            }
        }
        out
    }

    /// `self · g` rewritten into the basis.
    pub(crate) fn right_mul(&self, g: Gen) -> Vec<(Mono, HalfLaurent)> {
        let (i, j, k) = (self.i, self.j, self.k);
        let one = HalfLaurent::one;
        let qp = |e: i64| HalfLaurent::q_pow(e);
        match self.family {
            Family::A => match g {
                // b^j c^k a = q^{2(j+k)} a b^j c^k
                Gen::A => vec![(Mono::a_family(i + 1, j, k), qp(2 * (j + k) as i64))],
                Gen::B => vec![(Mono::a_family(i, j + 1, k), one())],
                Gen::C => vec![(Mono::a_family(i, j, k + 1), one())],
                Gen::D if i == 0 => vec![(Mono::d_family(1, j, k), one())],
                // a b^j c^k d = q^{-2(j+k)} b^j c^k (1 + q^{-2} bc)
                Gen::D => {
                    let s = -2 * (j + k) as i64;
                    vec![(Mono::a_family(i - 1, j, k), qp(s)), (Mono::a_family(i - 1, j + 1, k + 1), qp(s - 2))]
                }
            },
            Family::D => match g {
                Gen::D => vec![(Mono::d_family(i + 1, j, k), one())],
                Gen::B => vec![(Mono::d_family(i, j + 1, k), qp(2 * i as i64))],
                Gen::C => vec![(Mono::d_family(i, j, k + 1), qp(2 * i as i64))],
                // d^{i-1} (1 + q² bc), then move bc left past d^{i-1}
                Gen::A => vec![
                    (Mono::d_family(i - 1, j, k), one()),
                    (Mono::d_family(i - 1, j + 1, k + 1), qp(2 + 4 * (i as i64 - 1))),
                ],
            },
        }
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Mono::ONE {
            return write!(f, "1");
        }
        let mut put = |g: Gen, n: u32| -> fmt::Result {
            match n {
                0 => Ok(()),
                1 => write!(f, "{}", g.letter()),
                _ => write!(f, "{}^{}", g.letter(), n),
            }
        };
        match self.family {
            Family::A => {
                put(Gen::A, self.i)?;
                put(Gen::B, self.j)?;
                put(Gen::C, self.k)
            }
            Family::D => {
                put(Gen::B, self.j)?;
                put(Gen::C, self.k)?;
                put(Gen::D, self.i)
            }
        }
    }
}

impl Serialize for Mono {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let fam = match self.family {
            Family::A => "A",
            Family::D => "D",
        };
        (fam, self.i, self.j, self.k).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Mono {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let (fam, i, j, k): (String, u32, u32, u32) = Deserialize::deserialize(d)?;
        match fam.as_str() {
            "A" => Ok(Mono::a_family(i, j, k)),
            "D" if i >= 1 => Ok(Mono::d_family(i, j, k)),
            "D" => Err(D::Error::custom("D-family monomial needs a positive d exponent")),
            other => Err(D::Error::custom(format!("unknown family {other:?}"))),
        }
    }
}
