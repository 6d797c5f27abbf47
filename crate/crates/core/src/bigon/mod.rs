//! Stated tangles in the bigon and monogon.
//!
//! A tangle is a slice word read from the left edge to the right edge, positions counted
//! bottom to top. Endpoints on the left edge are the word's input, endpoints on the right
//! edge its output. Both edges are drawn pointing up; the right edge is the positive one
//! (arcs returning to it lie on the left of its direction), the left edge the negative one.
//! Reversing an edge flips its direction and gives every strand there a positive half twist.

mod engine;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::parse::ParseError;
use crate::ring::HalfLaurent;
use crate::tl::{Slice, SliceWord, TlError};

pub use engine::{basis_to_oq, evaluate, evaluate_basis, monogon_eval, BasisCombo, BasisDiagram, ExchangeOrder};

/// Boundary state; `-` is smaller than `+`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum State {
    #[serde(rename = "-")]
    Minus,
    #[serde(rename = "+")]
    Plus,
}

impl State {
    pub const BOTH: [State; 2] = [State::Minus, State::Plus];

    pub fn bar(self) -> State {
        match self {
            State::Minus => State::Plus,
            State::Plus => State::Minus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            State::Minus => '-',
            State::Plus => '+',
        }
    }

    pub fn from_symbol(c: char) -> Option<State> {
        match c {
            '-' => Some(State::Minus),
            '+' => Some(State::Plus),
            _ => None,
        }
    }

    /// Every assignment of states to `n` points, in lexicographic order.
    pub fn all_assignments(n: usize) -> Vec<Vec<State>> {
        (0..1usize << n)
            .map(|bits| (0..n).map(|i| if bits >> i & 1 == 1 { State::Plus } else { State::Minus }).collect())
            .collect()
    }
}

/// `C(+) = -q^{-5/2}`, `C(-) = q^{-1/2}`.
pub fn cap_constant(s: State) -> HalfLaurent {
    match s {
        State::Plus => -HalfLaurent::q_half(-5),
        State::Minus => HalfLaurent::q_half(-1),
    }
}

pub fn parse_states(s: &str) -> Result<Vec<State>, ParseError> {
    s.char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .map(|(i, c)| State::from_symbol(c).ok_or_else(|| ParseError::new(i, format!("expected + or -, found {c:?}"))))
        .collect()
}

pub fn states_string(s: &[State]) -> String {
    s.iter().map(|x| x.symbol()).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Edge {
    Left,
    Right,
}

impl Edge {
    pub fn opposite(self) -> Edge {
        match self {
            Edge::Left => Edge::Right,
            Edge::Right => Edge::Left,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Up,
    Down,
}

/// Directions of the two edges. The standard bigon has both pointing up.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeOrientation {
    pub left: Direction,
    pub right: Direction,
}

impl Default for EdgeOrientation {
    fn default() -> Self {
        Self { left: Direction::Up, right: Direction::Up }
    }
}

impl EdgeOrientation {
    pub fn get(&self, e: Edge) -> Direction {
        match e {
            Edge::Left => self.left,
            Edge::Right => self.right,
        }
    }

    fn flip(&mut self, e: Edge) {
        let d = match e {
            Edge::Left => &mut self.left,
            Edge::Right => &mut self.right,
        };
        *d = match d {
            Direction::Up => Direction::Down,
            Direction::Down => Direction::Up,
        };
    }

    pub fn is_standard(&self) -> bool {
        *self == Self::default()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BigonError {
    #[error("{edge:?} edge has {found} states but the word has {expected} endpoints there")]
    StateCount { edge: Edge, expected: usize, found: usize },
    #[error("monogon diagrams must keep the left edge empty, found {0} endpoints")]
    NotMonogon(usize),
    #[error(transparent)]
    Tl(#[from] TlError),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StatedTangle {
    word: SliceWord,
    left: Vec<State>,
    right: Vec<State>,
    orientation: EdgeOrientation,
}

impl StatedTangle {
    pub fn new(word: SliceWord, left: Vec<State>, right: Vec<State>) -> Result<Self, BigonError> {
        Self::with_orientation(word, left, right, EdgeOrientation::default())
    }

    pub fn with_orientation(
        word: SliceWord,
        left: Vec<State>,
        right: Vec<State>,
        orientation: EdgeOrientation,
    ) -> Result<Self, BigonError> {
        if left.len() != word.input() {
            return Err(BigonError::StateCount { edge: Edge::Left, expected: word.input(), found: left.len() });
        }
        if right.len() != word.output() {
            return Err(BigonError::StateCount { edge: Edge::Right, expected: word.output(), found: right.len() });
        }
        Ok(Self { word, left, right, orientation })
    }

    pub fn empty() -> Self {
        Self::new(SliceWord::empty(0), vec![], vec![]).expect("empty tangle")
    }

    /// The single horizontal arc with left state `nu` and right state `mu`.
    pub fn arc(nu: State, mu: State) -> Self {
        Self::new(SliceWord::empty(1), vec![nu], vec![mu]).expect("arc")
    }

    /// A cup on the right edge with states `lo` (lower end) and `hi`.
    pub fn right_cap(lo: State, hi: State) -> Self {
        Self::new(SliceWord::new(0, vec![Slice::Cup(0)]).expect("cup"), vec![], vec![lo, hi]).expect("cap")
    }

    /// A cap on the left edge with states `lo` and `hi`.
    pub fn left_cap(lo: State, hi: State) -> Self {
        Self::new(SliceWord::new(2, vec![Slice::Cap(0)]).expect("cap"), vec![lo, hi], vec![]).expect("cap")
    }

    pub fn word(&self) -> &SliceWord {
        &self.word
    }

    pub fn left(&self) -> &[State] {
        &self.left
    }

    pub fn right(&self) -> &[State] {
        &self.right
    }

    pub fn states(&self, e: Edge) -> &[State] {
        match e {
            Edge::Left => &self.left,
            Edge::Right => &self.right,
        }
    }

    pub fn orientation(&self) -> EdgeOrientation {
        self.orientation
    }
}

/// `x` placed above `y`; evaluates to the product `xy`.
pub fn stack(x: &StatedTangle, y: &StatedTangle) -> StatedTangle {
    assert_eq!(x.orientation, y.orientation, "stacking needs matching edge data");
    let shift = y.word.input();
    let mut slices: Vec<Slice> = x.word.slices().iter().map(|s| s.offset(shift)).collect();
    slices.extend_from_slice(y.word.slices());
    let word = SliceWord::new(x.word.input() + y.word.input(), slices).expect("stacked widths agree");
    let left = y.left.iter().chain(&x.left).copied().collect();
    let right = y.right.iter().chain(&x.right).copied().collect();
    StatedTangle::with_orientation(word, left, right, x.orientation).expect("stacked states agree")
}

/// Reverse the orientation of edge `e`: switch its states, multiply by `∏ C(u)` over the
/// original states and add a positive half twist to every strand there.
///
/// A strand that already carries a half twist from an earlier reversal now carries a full
/// one, which is the scalar `-q³`; that factor is folded into the returned coefficient.
pub fn inv_edge(t: &StatedTangle, e: Edge) -> (HalfLaurent, StatedTangle) {
    let mut coeff = HalfLaurent::one();
    for s in t.states(e) {
        coeff = &coeff * &cap_constant(*s);
    }
    let n = t.states(e).len() as u32;
    if t.orientation.get(e) == Direction::Down {
        coeff = &coeff * &(-HalfLaurent::q_pow(3)).pow(n);
    }
    let mut out = t.clone();
    let flipped: Vec<State> = t.states(e).iter().map(|s| s.bar()).collect();
    match e {
        Edge::Left => out.left = flipped,
        Edge::Right => out.right = flipped,
    }
    out.orientation.flip(e);
    (coeff, out)
}

#[derive(Serialize, Deserialize)]
struct Repr {
    word: Vec<Slice>,
    left: String,
    right: String,
    #[serde(default, skip_serializing_if = "EdgeOrientation::is_standard")]
    orientation: EdgeOrientation,
}

impl Serialize for StatedTangle {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Repr {
            word: self.word.slices().to_vec(),
            left: states_string(&self.left),
            right: states_string(&self.right),
            orientation: self.orientation,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for StatedTangle {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = Repr::deserialize(d)?;
        let left = parse_states(&r.left).map_err(D::Error::custom)?;
        let right = parse_states(&r.right).map_err(D::Error::custom)?;
        let word = SliceWord::new(left.len(), r.word).map_err(D::Error::custom)?;
        StatedTangle::with_orientation(word, left, right, r.orientation).map_err(D::Error::custom)
    }
}

impl fmt::Debug for StatedTangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", serde_json::to_string(self).map_err(|_| fmt::Error)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oq::{Gen, OqElement};

    #[test]
    fn json_shape() {
        let t = StatedTangle::right_cap(State::Plus, State::Minus);
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"word":[["cup",0]],"left":"","right":"+-"}"#);
        assert_eq!(serde_json::from_str::<StatedTangle>(&s).unwrap(), t);
        assert!(serde_json::from_str::<StatedTangle>(r#"{"word":[],"left":"+","right":"+-"}"#).is_err());
    }

    #[test]
    fn stack_unit() {
        let a = StatedTangle::arc(State::Plus, State::Plus);
        assert_eq!(stack(&a, &StatedTangle::empty()), a);
        assert_eq!(stack(&StatedTangle::empty(), &a), a);
    }

    #[test]
    fn inv_is_an_involution_on_arcs() {
        for g in Gen::ALL {
            let (nu, mu) = g.states();
            let t = StatedTangle::arc(nu, mu);
            for e in [Edge::Left, Edge::Right] {
                let (c1, t1) = inv_edge(&t, e);
                let (c2, t2) = inv_edge(&t1, e);
                assert_eq!(t2, t);
                assert!((&c1 * &c2).is_one());
            }
        }
        let (c, t) = inv_edge(&StatedTangle::empty(), Edge::Right);
        assert!(c.is_one());
        assert_eq!(t.word(), StatedTangle::empty().word());
    }

    #[test]
    fn generator_arcs() {
        for g in Gen::ALL {
            let (nu, mu) = g.states();
            assert_eq!(evaluate(&StatedTangle::arc(nu, mu)).unwrap(), OqElement::gen(g));
        }
    }
}
