//! Cutting a bigon along a vertical ideal arc, and slitting an annulus or disk open.

use serde::Serialize;
use thiserror::Error;

use crate::bigon::{cap_constant, evaluate, monogon_eval, BigonError, State, StatedTangle};
use crate::oq::{Gen, OqElement, Tensor, Tensor2};
use crate::ring::HalfLaurent;
use crate::tl::{Slice, SliceWord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CutError {
    #[error("cut position {pos} is outside a word of {len} slices")]
    NotTransversal { pos: usize, len: usize },
    #[error("cut tangles must have the standard edge orientation")]
    Orientation,
    #[error("slit diagram has {found} right endpoints, fewer than the {needed} the crossings need")]
    SlitShape { needed: usize, found: usize },
    #[error(transparent)]
    Bigon(#[from] BigonError),
}

/// The two pieces on either side of the line before slice `pos`, with states `eps` on the
/// new edges.
fn pieces(t: &StatedTangle, pos: usize, eps: &[State]) -> Result<(StatedTangle, StatedTangle), CutError> {
    let (pre, suf) = t.word().split_at(pos);
    let l = StatedTangle::new(pre, t.left().to_vec(), eps.to_vec())?;
    let r = StatedTangle::new(suf, eps.to_vec(), t.right().to_vec())?;
    Ok((l, r))
}

fn check(t: &StatedTangle, pos: usize) -> Result<(), CutError> {
    if pos > t.word().slices().len() {
        return Err(CutError::NotTransversal { pos, len: t.word().slices().len() });
    }
    if !t.orientation().is_standard() {
        return Err(CutError::Orientation);
    }
    Ok(())
}

/// `Σ_ε left_piece(ε) ⊗ right_piece(ε)` over all states on the cut.
pub fn cut_state_sum(t: &StatedTangle, pos: usize) -> Result<Tensor2, CutError> {
    check(t, pos)?;
    let mut out = Tensor::zero(2);
    for eps in State::all_assignments(t.word().width_at(pos)) {
        let (l, r) = pieces(t, pos, &eps)?;
        out = out.add(&Tensor::pure(&[evaluate(&l)?, evaluate(&r)?]));
    }
    Ok(out)
}

/// Cut the arc of generator `g` down the middle.
pub fn cut_generator(g: Gen) -> Tensor2 {
    let (nu, mu) = g.states();
    let arc = StatedTangle::new(SliceWord::new(1, vec![Slice::Identity]).expect("arc"), vec![nu], vec![mu])
        .expect("arc");
    cut_state_sum(&arc, 1).expect("the middle of an arc is transversal")
}

/// Cut at two positions `p1 < p2`, performing the cut at `p1` first when `left_first` holds.
/// The three pieces land in the factors left to right.
pub fn cut_twice(t: &StatedTangle, p1: usize, p2: usize, left_first: bool) -> Result<Tensor, CutError> {
    assert!(p1 <= p2);
    check(t, p2)?;
    let mut out = Tensor::zero(3);
    if left_first {
        for eps in State::all_assignments(t.word().width_at(p1)) {
            let (l, r) = pieces(t, p1, &eps)?;
            let rest = cut_state_sum(&r, p2 - p1)?;
            out = out.add(&Tensor::from_element(&evaluate(&l)?).outer(&rest));
        }
    } else {
        for eps in State::all_assignments(t.word().width_at(p2)) {
            let (l, r) = pieces(t, p2, &eps)?;
            let first = cut_state_sum(&l, p1)?;
            out = out.add(&first.outer(&Tensor::from_element(&evaluate(&r)?)));
        }
    }
    Ok(out)
}

/// A diagram on an annulus slit along an ideal arc from the inner boundary to a right edge.
///
/// After slitting it is a bigon diagram whose right edge reads, bottom to top: the `crossings`
/// lower copies of the slit points, the `inner` endpoints, the upper copies. The crossing
/// nearest the inner boundary sits lowest among the lower copies and highest among the upper.
#[derive(Clone, Debug)]
pub struct SlitDiagram {
    pub word: SliceWord,
    pub left: Vec<State>,
    pub inner: Vec<State>,
    pub crossings: usize,
}

/// The map to the bigon: each slit point carries `ε` below and `ε̄` above, weighted by
/// `C(ε)^{-1}`; summing over `ε` undoes a height exchange on the right edge.
pub fn half_ideal_slit(d: &SlitDiagram) -> Result<Vec<(HalfLaurent, StatedTangle)>, CutError> {
    let k = d.crossings;
    let n_out = d.word.output();
    if n_out != 2 * k + d.inner.len() {
        return Err(CutError::SlitShape { needed: 2 * k + d.inner.len(), found: n_out });
    }
    let mut out = Vec::new();
    for eps in State::all_assignments(k) {
        let mut right = Vec::with_capacity(n_out);
        right.extend_from_slice(&eps);
        right.extend_from_slice(&d.inner);
        right.extend(eps.iter().rev().map(|s| s.bar()));
        let mut c = HalfLaurent::one();
        for s in &eps {
            c = &c * &cap_constant(*s).unit_inverse().expect("cup values are units");
        }
        out.push((c, StatedTangle::new(d.word.clone(), d.left.clone(), right)?));
    }
    Ok(out)
}

pub fn slit_value(d: &SlitDiagram) -> Result<OqElement, CutError> {
    let mut out = OqElement::zero();
    for (c, t) in half_ideal_slit(d)? {
        out = out.add(&evaluate(&t)?.scale(&c));
    }
    Ok(out)
}

/// Value of a red arc in a half of the slit disk. Along the upper half the boundary runs right
/// to left, so its first endpoint is the right one; along the lower half it is the left one.
pub fn half_disk_arc(upper: bool, left: State, right: State) -> Result<HalfLaurent, BigonError> {
    let (first, second) = if upper { (right, left) } else { (left, right) };
    monogon_eval(&StatedTangle::right_cap(first, second))
}

/// Relations `upper(ε) - lower(ε)` imposed on the empty diagram of the disk.
pub fn compact_slit_relations() -> Vec<HalfLaurent> {
    let mut out = Vec::new();
    for l in State::BOTH {
        for r in State::BOTH {
            let top = half_disk_arc(true, l, r).expect("monogon");
            let bot = half_disk_arc(false, l, r).expect("monogon");
            let rel = &top - &bot;
            if !rel.is_zero() {
                out.push(rel);
            }
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct DiskModule {
    pub relations: Vec<HalfLaurent>,
    /// Normalised generator of the annihilator ideal: lowest exponent 0, positive leading term.
    pub generator: HalfLaurent,
}

/// The skein module of the disk as `Z[q^{±1/2}]/(g)`.
///
/// The generator is the relation of smallest span; it is accepted only after checking that it
/// divides every other relation, so the ideal really is principal.
pub fn disk_module() -> Option<DiskModule> {
    let relations = compact_slit_relations();
    let span = |x: &HalfLaurent| x.max_exp().unwrap_or(0) - x.min_exp().unwrap_or(0);
    let candidate = relations.iter().min_by_key(|x| span(x))?.split_unit().1;
    if relations.iter().all(|r| r.div_exact(&candidate).is_some()) {
        Some(DiskModule { relations, generator: candidate })
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use State::{Minus as M, Plus as P};

    #[test]
    fn cut_of_an_empty_word_is_the_unit() {
        assert_eq!(cut_state_sum(&StatedTangle::empty(), 0).unwrap(), Tensor::unit(2));
    }

    #[test]
    fn not_transversal() {
        let t = StatedTangle::arc(P, M);
        assert!(matches!(cut_state_sum(&t, 3), Err(CutError::NotTransversal { pos: 3, len: 0 })));
    }

    #[test]
    fn cuts_commute() {
        let w = SliceWord::new(
            2,
            vec![Slice::CrossPos(0), Slice::Cup(2), Slice::CrossNeg(1), Slice::Cap(0), Slice::Identity],
        )
        .unwrap();
        for l in State::all_assignments(2) {
            for r in State::all_assignments(2) {
                let t = StatedTangle::new(w.clone(), l.clone(), r).unwrap();
                for (p1, p2) in [(0, 2), (1, 3), (2, 5)] {
                    assert_eq!(cut_twice(&t, p1, p2, true).unwrap(), cut_twice(&t, p1, p2, false).unwrap());
                }
            }
        }
    }

    #[test]
    fn core_loop_is_two() {
        let d = SlitDiagram {
            word: SliceWord::new(0, vec![Slice::Cup(0)]).unwrap(),
            left: vec![],
            inner: vec![],
            crossings: 1,
        };
        assert_eq!(slit_value(&d).unwrap(), OqElement::scalar(HalfLaurent::constant(2)));
    }

    // A strand that dips across the slit and comes back equals the strand that stays put.
    #[test]
    fn crossing_twice_is_not_crossing() {
        for l in State::all_assignments(2) {
            let d = SlitDiagram {
                word: SliceWord::new(2, vec![Slice::Cup(0)]).unwrap(),
                left: l.clone(),
                inner: vec![],
                crossings: 2,
            };
            let plain = evaluate(&StatedTangle::left_cap(l[0], l[1])).unwrap();
            assert_eq!(slit_value(&d).unwrap(), plain, "{l:?}");
        }
    }

    // The same move with a strand nearer the inner boundary that crosses the slit once and
    // runs from the bottom left endpoint to the top one.
    #[test]
    fn crossing_twice_with_a_strand_nearer_the_core() {
        for l in State::all_assignments(4) {
            let d = SlitDiagram {
                word: SliceWord::new(4, vec![Slice::Cup(1)]).unwrap(),
                left: l.clone(),
                inner: vec![],
                crossings: 3,
            };
            let moved = SlitDiagram {
                word: SliceWord::new(4, vec![Slice::Cap(1)]).unwrap(),
                left: l.clone(),
                inner: vec![],
                crossings: 1,
            };
            assert_eq!(slit_value(&d).unwrap(), slit_value(&moved).unwrap(), "{l:?}");
        }
    }

    #[test]
    fn disk_is_killed_by_one_plus_q2() {
        let m = disk_module().unwrap();
        let one_plus_q2 = &HalfLaurent::one() + &HalfLaurent::q_pow(2);
        assert_eq!(m.generator, one_plus_q2);
        assert_eq!(half_disk_arc(true, P, M).unwrap(), HalfLaurent::q_half(-1));
        assert_eq!(half_disk_arc(false, P, M).unwrap(), -HalfLaurent::q_half(-5));
    }
}
