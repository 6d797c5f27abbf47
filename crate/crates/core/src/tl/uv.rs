//! The patterns `u_{k,m}` and `v_{k,m}`.
//!
//! Both live on `2(k+m)` strands. Each side carries two boxes `f_{k+m}`. On each side the
//! `m` innermost strands of the lower box return to the upper box; the remaining `k`
//! strands of each box run across. `u` is `v` with the topmost crossing strand pushed
//! down past the other `2k-1` crossing strands and back up on the far side.

use serde::{Deserialize, Serialize};

use super::{resolve, Slice, SliceWord, TLElement, TlError};
use crate::ring::CoeffRing;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CrossKind {
    Pos,
    Neg,
}

impl CrossKind {
    fn at(self, i: usize) -> Slice {
        match self {
            CrossKind::Pos => Slice::CrossPos(i),
            CrossKind::Neg => Slice::CrossNeg(i),
        }
    }
}

/// Which crossings the slid strand makes on its way down and back up.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UvConfig {
    pub down: CrossKind,
    pub up: CrossKind,
    /// Place the `f_{k+m}` boxes; without them the words describe the stated variant.
    pub boxes: bool,
}

impl Default for UvConfig {
    fn default() -> Self {
        Self { down: CrossKind::Pos, up: CrossKind::Pos, boxes: true }
    }
}

fn boxes(n: usize, s: usize) -> Vec<Slice> {
    if s < 2 {
        return Vec::new();
    }
    vec![Slice::Jw { at: 0, size: s }, Slice::Jw { at: s, size: s }]
        .into_iter()
        .filter(|b| b.apply_width(n).is_ok())
        .collect()
}

/// Slice words for `(u_{k,m}, v_{k,m})`.
pub fn build_uv_words(k: usize, m: usize, cfg: &UvConfig) -> Result<(SliceWord, SliceWord), TlError> {
    let s = k + m;
    let n = 2 * s;
    let mut head = Vec::new();
    if cfg.boxes {
        head.extend(boxes(n, s));
    }
    for j in 0..m {
        head.push(Slice::Cap(s - 1 - j));
    }
    let mut slide = Vec::new();
    if k > 0 {
        for i in (0..2 * k - 1).rev() {
            slide.push(cfg.down.at(i));
        }
        for i in 0..2 * k - 1 {
            slide.push(cfg.up.at(i));
        }
    }
    let mut tail: Vec<Slice> = (0..m).map(|j| Slice::Cup(k + j)).collect();
    if cfg.boxes {
        tail.extend(boxes(n, s));
    }
    let v: Vec<Slice> = head.iter().chain(tail.iter()).copied().collect();
    let u: Vec<Slice> = head.iter().chain(slide.iter()).chain(tail.iter()).copied().collect();
    Ok((SliceWord::new(n, u)?, SliceWord::new(n, v)?))
}

/// Resolved `(u_{k,m}, v_{k,m})`.
pub fn build_uv<R: CoeffRing>(
    ring: &R,
    k: usize,
    m: usize,
    cfg: &UvConfig,
) -> Result<(TLElement<R::Elem>, TLElement<R::Elem>), TlError> {
    let (u, v) = build_uv_words(k, m, cfg)?;
    Ok((resolve(ring, &u)?, resolve(ring, &v)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::LaurentRing;

    #[test]
    fn empty_case() {
        let (u, v) = build_uv(&LaurentRing, 0, 0, &UvConfig::default()).unwrap();
        assert_eq!(u, v);
        assert_eq!((u.n_in(), u.n_out()), (0, 0));
    }

    #[test]
    fn word_widths() {
        let (u, v) = build_uv_words(2, 1, &UvConfig::default()).unwrap();
        assert_eq!(u.input(), 6);
        assert_eq!(u.output(), 6);
        assert_eq!(v.output(), 6);
        assert_eq!(u.slices().len(), v.slices().len() + 6);
    }
}
