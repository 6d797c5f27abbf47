//! Tangle diagrams as sequences of elementary slices.
//!
//! A word is read from its input side to its output side; strand positions count from
//! the first boundary point. `Cup(i)` creates two new strands at positions `i, i+1`,
//! `Cap(i)` joins strands `i, i+1`, the crossings act on strands `i, i+1`, and
//! `Jw { at, size }` places a Jones-Wenzl box on strands `at..at+size`.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::TlError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slice {
    Identity,
    Cup(usize),
    Cap(usize),
    CrossPos(usize),
    CrossNeg(usize),
    Jw { at: usize, size: usize },
}

impl Slice {
    pub fn kind(&self) -> String {
        match self {
            Slice::Identity => "id".into(),
            Slice::Cup(_) => "cup".into(),
            Slice::Cap(_) => "cap".into(),
            Slice::CrossPos(_) => "pos".into(),
            Slice::CrossNeg(_) => "neg".into(),
            Slice::Jw { size, .. } => format!("jw{size}"),
        }
    }

    pub fn position(&self) -> usize {
        match *self {
            Slice::Identity => 0,
            Slice::Cup(i) | Slice::Cap(i) | Slice::CrossPos(i) | Slice::CrossNeg(i) => i,
            Slice::Jw { at, .. } => at,
        }
    }

    pub fn from_parts(kind: &str, pos: usize) -> Result<Self, TlError> {
        Ok(match kind {
            "id" => Slice::Identity,
            "cup" => Slice::Cup(pos),
            "cap" => Slice::Cap(pos),
            "pos" => Slice::CrossPos(pos),
            "neg" => Slice::CrossNeg(pos),
            k => match k.strip_prefix("jw").map(usize::from_str) {
                Some(Ok(size)) => Slice::Jw { at: pos, size },
                _ => return Err(TlError::Parse(format!("unknown slice kind {k:?}"))),
            },
        })
    }

    /// Width after this slice, or an error if the slice does not fit `width`.
    pub fn apply_width(&self, width: usize) -> Result<usize, TlError> {
        let bad = || TlError::SliceOutOfRange { slice: self.to_string(), width };
        match *self {
            Slice::Identity => Ok(width),
            Slice::Cup(i) => (i <= width).then_some(width + 2).ok_or_else(bad),
            Slice::Cap(i) => (i + 1 < width).then(|| width - 2).ok_or_else(bad),
            Slice::CrossPos(i) | Slice::CrossNeg(i) => (i + 1 < width).then_some(width).ok_or_else(bad),
            Slice::Jw { at, size } => (at + size <= width).then_some(width).ok_or_else(bad),
        }
    }

    /// The same slice acting `k` strands further along.
    pub fn offset(&self, k: usize) -> Slice {
        match *self {
            Slice::Identity => Slice::Identity,
            Slice::Cup(i) => Slice::Cup(i + k),
            Slice::Cap(i) => Slice::Cap(i + k),
            Slice::CrossPos(i) => Slice::CrossPos(i + k),
            Slice::CrossNeg(i) => Slice::CrossNeg(i + k),
            Slice::Jw { at, size } => Slice::Jw { at: at + k, size },
        }
    }
}

impl fmt::Display for Slice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.kind(), self.position())
    }
}

impl Serialize for Slice {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        (self.kind(), self.position()).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Slice {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let (kind, pos): (String, usize) = Deserialize::deserialize(d)?;
        Slice::from_parts(&kind, pos).map_err(D::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SliceWord {
    input: usize,
    slices: Vec<Slice>,
}

impl SliceWord {
    pub fn new(input: usize, slices: Vec<Slice>) -> Result<Self, TlError> {
        let w = Self { input, slices };
        w.widths()?;
        Ok(w)
    }

    pub fn empty(width: usize) -> Self {
        Self { input: width, slices: Vec::new() }
    }

    pub fn input(&self) -> usize {
        self.input
    }

    pub fn slices(&self) -> &[Slice] {
        &self.slices
    }

    /// Widths before the first slice and after each slice.
    pub fn widths(&self) -> Result<Vec<usize>, TlError> {
        let mut out = vec![self.input];
        let mut w = self.input;
        for s in &self.slices {
            w = s.apply_width(w)?;
            out.push(w);
        }
        Ok(out)
    }

    pub fn output(&self) -> usize {
        *self.widths().expect("validated word").last().unwrap()
    }

    pub fn push(&mut self, s: Slice) -> Result<(), TlError> {
        s.apply_width(self.output())?;
        self.slices.push(s);
        Ok(())
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &SliceWord) -> Result<SliceWord, TlError> {
        if self.output() != next.input {
            return Err(TlError::WidthMismatch { expected: self.output(), found: next.input });
        }
        let mut slices = self.slices.clone();
        slices.extend_from_slice(&next.slices);
        Ok(SliceWord { input: self.input, slices })
    }

    /// Split before slice `pos`.
    pub fn split_at(&self, pos: usize) -> (SliceWord, SliceWord) {
        let (a, b) = self.slices.split_at(pos.min(self.slices.len()));
        let a = SliceWord { input: self.input, slices: a.to_vec() };
        let mid = a.output();
        (a, SliceWord { input: mid, slices: b.to_vec() })
    }

    /// Number of strands crossing the vertical line before slice `pos`.
    pub fn width_at(&self, pos: usize) -> usize {
        self.widths().expect("validated word")[pos.min(self.slices.len())]
    }

    pub fn has_jw(&self) -> bool {
        self.slices.iter().any(|s| matches!(s, Slice::Jw { size, .. } if *size > 1))
    }
}

impl Serialize for SliceWord {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            width: usize,
            slices: &'a [Slice],
        }
        Repr { width: self.input, slices: &self.slices }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SliceWord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            width: usize,
            slices: Vec<Slice>,
        }
        let r = Repr::deserialize(d)?;
        SliceWord::new(r.width, r.slices).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn widths_follow_cups_and_caps() {
        let w = SliceWord::new(1, vec![Slice::Cup(1), Slice::CrossPos(0), Slice::Cap(1)]).unwrap();
        assert_eq!(w.widths().unwrap(), vec![1, 3, 3, 1]);
        assert!(SliceWord::new(1, vec![Slice::Cap(0)]).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let w = SliceWord::new(3, vec![Slice::Jw { at: 0, size: 2 }, Slice::CrossNeg(1), Slice::Cap(0)]).unwrap();
        let js = serde_json::to_string(&w).unwrap();
        assert_eq!(js, r#"{"width":3,"slices":[["jw2",0],["neg",1],["cap",0]]}"#);
        let back: SliceWord = serde_json::from_str(&js).unwrap();
        assert_eq!(back, w);
    }
}
