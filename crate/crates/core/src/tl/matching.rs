//! Planar pairings of the boundary points of a rectangle.
//!
//! A tangle with `n_in` bottom points and `n_out` top points numbers its boundary
//! cyclically: bottom points `0..n_in` left to right, then top points right to left.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::TlError;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    n_in: usize,
    n_out: usize,
    pair: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum End {
    Bottom(usize),
    Top(usize),
}

impl Matching {
    pub fn new(n_in: usize, n_out: usize, pair: Vec<usize>) -> Result<Self, TlError> {
        let total = n_in + n_out;
        if pair.len() != total {
            return Err(TlError::WidthMismatch { expected: total, found: pair.len() });
        }
        for (i, &j) in pair.iter().enumerate() {
            if j >= total || j == i || pair[j] != i {
                return Err(TlError::NotInvolution(i));
            }
        }
        let m = Self { n_in, n_out, pair };
        if !m.is_planar() {
            return Err(TlError::NotPlanar);
        }
        Ok(m)
    }

    /// Square matching on `2n` points from its involution array.
    pub fn square(pair: Vec<usize>) -> Result<Self, TlError> {
        if pair.len() % 2 != 0 {
            return Err(TlError::WidthMismatch { expected: pair.len() + 1, found: pair.len() });
        }
        let n = pair.len() / 2;
        Self::new(n, n, pair)
    }

    pub(crate) fn from_ends(n_in: usize, n_out: usize, pairs: &[(End, End)]) -> Self {
        let mut m = Self { n_in, n_out, pair: vec![usize::MAX; n_in + n_out] };
        for &(a, b) in pairs {
            let (i, j) = (m.index(a), m.index(b));
            m.pair[i] = j;
            m.pair[j] = i;
        }
        debug_assert!(m.pair.iter().all(|&p| p != usize::MAX));
        debug_assert!(m.is_planar());
        m
    }

    pub fn identity(n: usize) -> Self {
        let pairs: Vec<(End, End)> = (0..n).map(|p| (End::Bottom(p), End::Top(p))).collect();
        Self::from_ends(n, n, &pairs)
    }

    /// `e_i` in `TL_n`: cap on bottom strands `i, i+1`, cup on the top ones.
    pub fn e(n: usize, i: usize) -> Self {
        assert!(i + 1 < n);
        let mut pairs = vec![(End::Bottom(i), End::Bottom(i + 1)), (End::Top(i), End::Top(i + 1))];
        for p in (0..n).filter(|&p| p != i && p != i + 1) {
            pairs.push((End::Bottom(p), End::Top(p)));
        }
        Self::from_ends(n, n, &pairs)
    }

    pub fn n_in(&self) -> usize {
        self.n_in
    }

    pub fn n_out(&self) -> usize {
        self.n_out
    }

    pub fn is_square(&self) -> bool {
        self.n_in == self.n_out
    }

    pub fn pairing(&self) -> &[usize] {
        &self.pair
    }

    pub fn index(&self, end: End) -> usize {
        match end {
            End::Bottom(p) => p,
            End::Top(p) => self.n_in + self.n_out - 1 - p,
        }
    }

    pub fn end(&self, idx: usize) -> End {
        if idx < self.n_in {
            End::Bottom(idx)
        } else {
            End::Top(self.n_in + self.n_out - 1 - idx)
        }
    }

    pub fn partner(&self, end: End) -> End {
        self.end(self.pair[self.index(end)])
    }

    pub fn is_planar(&self) -> bool {
        let mut stack: Vec<usize> = Vec::new();
        for i in 0..self.pair.len() {
            let j = self.pair[i];
            if j > i {
                stack.push(i);
            } else if stack.pop() != Some(j) {
                return false;
            }
        }
        stack.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && (0..self.n_in).all(|p| self.partner(End::Bottom(p)) == End::Top(p))
    }

    /// Number of strands joining bottom to top.
    pub fn through_degree(&self) -> usize {
        (0..self.n_in).filter(|&p| matches!(self.partner(End::Bottom(p)), End::Top(_))).count()
    }

    /// Stack `upper` on top of `lower`; returns the result and the number of closed loops.
    pub fn compose(lower: &Matching, upper: &Matching) -> Result<(Matching, usize), TlError> {
        if lower.n_out != upper.n_in {
            return Err(TlError::WidthMismatch { expected: lower.n_out, found: upper.n_in });
        }
        let w = lower.n_out;
        let (a, c) = (lower.n_in, upper.n_out);
        let mut visited = vec![false; w];
        let mut out = vec![usize::MAX; a + c];
        let res_index = |e: End| match e {
            End::Bottom(p) => p,
            End::Top(p) => a + c - 1 - p,
        };
        // Walk from an outer end of one piece until reaching an outer end.
        let walk = |start_lower: bool, start: End, visited: &mut Vec<bool>| -> End {
            let mut in_lower = start_lower;
            let mut e = start;
            loop {
                let next = if in_lower { lower.partner(e) } else { upper.partner(e) };
                match (in_lower, next) {
                    (true, End::Top(p)) => {
                        visited[p] = true;
                        in_lower = false;
                        e = End::Bottom(p);
                    }
                    (false, End::Bottom(p)) => {
                        visited[p] = true;
                        in_lower = true;
                        e = End::Top(p);
                    }
                    (true, End::Bottom(p)) => return End::Bottom(p),
                    (false, End::Top(p)) => return End::Top(p),
                }
            }
        };
        for p in 0..a {
            let i = res_index(End::Bottom(p));
            if out[i] != usize::MAX {
                continue;
            }
            let j = res_index(walk(true, End::Bottom(p), &mut visited));
            out[i] = j;
            out[j] = i;
        }
        for p in 0..c {
            let i = res_index(End::Top(p));
            if out[i] != usize::MAX {
                continue;
            }
            let j = res_index(walk(false, End::Top(p), &mut visited));
            out[i] = j;
            out[j] = i;
        }
        let mut loops = 0;
        for s in 0..w {
            if visited[s] {
                continue;
            }
            loops += 1;
            let mut p = s;
            loop {
                visited[p] = true;
                let End::Top(q) = lower.partner(End::Top(p)) else { unreachable!() };
                visited[q] = true;
                let End::Bottom(r) = upper.partner(End::Bottom(q)) else { unreachable!() };
                if r == s {
                    break;
                }
                p = r;
            }
        }
        Ok((Matching { n_in: a, n_out: c, pair: out }, loops))
    }

    /// Side-by-side juxtaposition with `right` placed to the right of `self`.
    pub fn tensor(&self, right: &Matching) -> Matching {
        let (n_in, n_out) = (self.n_in + right.n_in, self.n_out + right.n_out);
        let shift = |e: End, dx_in: usize, dx_out: usize| match e {
            End::Bottom(p) => End::Bottom(p + dx_in),
            End::Top(p) => End::Top(p + dx_out),
        };
        let mut pairs = Vec::new();
        for i in 0..self.pair.len() {
            if self.pair[i] > i {
                pairs.push((self.end(i), self.end(self.pair[i])));
            }
        }
        for i in 0..right.pair.len() {
            if right.pair[i] > i {
                pairs.push((
                    shift(right.end(i), self.n_in, self.n_out),
                    shift(right.end(right.pair[i]), self.n_in, self.n_out),
                ));
            }
        }
        Matching::from_ends(n_in, n_out, &pairs)
    }

    /// Top-bottom mirror image.
    pub fn flip(&self) -> Matching {
        let swap = |e: End| match e {
            End::Bottom(p) => End::Top(p),
            End::Top(p) => End::Bottom(p),
        };
        let mut pairs = Vec::new();
        for i in 0..self.pair.len() {
            if self.pair[i] > i {
                pairs.push((swap(self.end(i)), swap(self.end(self.pair[i]))));
            }
        }
        Matching::from_ends(self.n_out, self.n_in, &pairs)
    }
}

/// All planar square matchings on `2n` points.
pub fn enumerate_matchings(n: usize) -> Vec<Matching> {
    let mut out: Vec<Matching> = noncrossing(0, 2 * n)
        .into_iter()
        .map(|pairs| {
            let mut pair = vec![0; 2 * n];
            for (i, j) in pairs {
                pair[i] = j;
                pair[j] = i;
            }
            Matching { n_in: n, n_out: n, pair }
        })
        .collect();
    out.sort();
    out
}

fn noncrossing(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
    if lo == hi {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for j in (lo + 1..hi).step_by(2) {
        let inner = noncrossing(lo + 1, j);
        let outer = noncrossing(j + 1, hi);
        for a in &inner {
            for b in &outer {
                let mut v = Vec::with_capacity(a.len() + b.len() + 1);
                v.push((lo, j));
                v.extend_from_slice(a);
                v.extend_from_slice(b);
                out.push(v);
            }
        }
    }
    out
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matching({}->{}: {:?})", self.n_in, self.n_out, self.pair)
    }
}

impl Serialize for Matching {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.is_square() {
            self.pair.serialize(s)
        } else {
            #[derive(Serialize)]
            struct Rect<'a> {
                bottom: usize,
                pairing: &'a [usize],
            }
            Rect { bottom: self.n_in, pairing: &self.pair }.serialize(s)
        }
    }
}

impl<'de> Deserialize<'de> for Matching {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Square(Vec<usize>),
            Rect { bottom: usize, pairing: Vec<usize> },
        }
        match Repr::deserialize(d)? {
            Repr::Square(p) => Matching::square(p).map_err(D::Error::custom),
            Repr::Rect { bottom, pairing } => {
                let top = pairing.len().checked_sub(bottom).ok_or_else(|| D::Error::custom("bottom exceeds pairing"))?;
                Matching::new(bottom, top, pairing).map_err(D::Error::custom)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| enumerate_matchings(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 14, 42, 132, 429, 1430]);
    }

    #[test]
    fn identity_composition() {
        let id = Matching::identity(3);
        assert_eq!(Matching::compose(&id, &id).unwrap(), (id.clone(), 0));
    }

    #[test]
    fn e_squared_makes_a_loop() {
        let e = Matching::e(2, 0);
        assert_eq!(Matching::compose(&e, &e).unwrap(), (e.clone(), 1));
    }

    #[test]
    fn e1_e2_e1() {
        let e1 = Matching::e(3, 0);
        let e2 = Matching::e(3, 1);
        let (x, l1) = Matching::compose(&e1, &e2).unwrap();
        let (y, l2) = Matching::compose(&x, &e1).unwrap();
        assert_eq!((y, l1 + l2), (e1, 0));
    }

    #[test]
    fn rejects_crossing_pairs() {
        assert!(matches!(Matching::square(vec![2, 3, 0, 1]), Err(TlError::NotPlanar)));
        assert!(Matching::square(vec![1, 0, 3, 2]).is_ok());
    }

    #[test]
    fn json_roundtrip() {
        let e = Matching::e(3, 1);
        let js = serde_json::to_string(&e).unwrap();
        let back: Matching = serde_json::from_str(&js).unwrap();
        assert_eq!(back, e);
    }
}
