//! Kauffman expansion of slice words into the Temperley-Lieb basis.

use super::matching::End;
use super::{jones_wenzl, jones_wenzl_scaled, Matching, Slice, SliceWord, TLElement, TlError};
use crate::ring::{quantum_factorial, CoeffRing, HalfLaurent, LaurentRing};

pub(crate) fn cup_matching(width: usize, i: usize) -> Matching {
    let mut pairs = vec![(End::Top(i), End::Top(i + 1))];
    for p in 0..width {
        pairs.push((End::Bottom(p), End::Top(if p < i { p } else { p + 2 })));
    }
    Matching::from_ends(width, width + 2, &pairs)
}

pub(crate) fn cap_matching(width: usize, i: usize) -> Matching {
    let mut pairs = vec![(End::Bottom(i), End::Bottom(i + 1))];
    for p in (0..width).filter(|&p| p != i && p != i + 1) {
        pairs.push((End::Bottom(p), End::Top(if p < i { p } else { p - 2 })));
    }
    Matching::from_ends(width, width - 2, &pairs)
}

/// `q^a id + q^b e_i`, the two smoothings of a crossing.
fn crossing<R: CoeffRing>(ring: &R, width: usize, i: usize, a: i64, b: i64) -> TLElement<R::Elem> {
    let mut out = TLElement::zero(width, width);
    out.add_term(ring, Matching::identity(width), &ring.from_laurent(&HalfLaurent::q_pow(a)));
    out.add_term(ring, Matching::e(width, i), &ring.from_laurent(&HalfLaurent::q_pow(b)));
    out
}

/// The element of one slice at the given incoming width.
pub fn slice_element<R: CoeffRing>(
    ring: &R,
    slice: &Slice,
    width: usize,
    jw: &mut dyn FnMut(usize) -> Result<TLElement<R::Elem>, TlError>,
) -> Result<TLElement<R::Elem>, TlError> {
    slice.apply_width(width)?;
    Ok(match *slice {
        Slice::Identity => TLElement::identity(ring, width),
        Slice::Cup(i) => TLElement::from_matching(ring, cup_matching(width, i)),
        Slice::Cap(i) => TLElement::from_matching(ring, cap_matching(width, i)),
        // A positive crossing is q·(strands continue) + q^{-1}·(cap-cup); the positive kink
        // then evaluates to -q^3.
        Slice::CrossPos(i) => crossing(ring, width, i, 1, -1),
        Slice::CrossNeg(i) => crossing(ring, width, i, -1, 1),
        Slice::Jw { at, size } => {
            let f = jw(size)?;
            let left = TLElement::identity(ring, at);
            let right = TLElement::identity(ring, width - at - size);
            TLElement::tensor(ring, &TLElement::tensor(ring, &left, &f), &right)
        }
    })
}

/// Expand a word with a caller-supplied box expansion.
pub fn resolve_with<R: CoeffRing>(
    ring: &R,
    word: &SliceWord,
    jw: &mut dyn FnMut(usize) -> Result<TLElement<R::Elem>, TlError>,
) -> Result<TLElement<R::Elem>, TlError> {
    let mut state = TLElement::identity(ring, word.input());
    let mut width = word.input();
    for s in word.slices() {
        let e = slice_element(ring, s, width, jw)?;
        width = e.n_out();
        state = TLElement::compose(ring, &state, &e)?;
    }
    Ok(state)
}

/// Expand crossings by the Kauffman relation, boxes by `f_k`, loops by `δ`.
pub fn resolve<R: CoeffRing>(ring: &R, word: &SliceWord) -> Result<TLElement<R::Elem>, TlError> {
    resolve_with(ring, word, &mut |k| jones_wenzl(ring, k).map(|f| (*f).clone()))
}

/// Integral expansion where each box of size `k` is replaced by `[k]! f_k`.
///
/// Returns `(s, x)` with `x = s · resolve(word)` and `s` the product of the box factorials.
pub fn resolve_scaled(word: &SliceWord) -> Result<(HalfLaurent, TLElement<HalfLaurent>), TlError> {
    let mut scale = HalfLaurent::one();
    for s in word.slices() {
        if let Slice::Jw { size, .. } = s {
            scale = &scale * &quantum_factorial(*size as u32);
        }
    }
    let x = resolve_with(&LaurentRing, word, &mut |k| jones_wenzl_scaled(k).map(|f| (*f).clone()))?;
    Ok((scale, x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{delta, LaurentRing};

    fn w(input: usize, s: Vec<Slice>) -> SliceWord {
        SliceWord::new(input, s).unwrap()
    }

    #[test]
    fn single_crossing() {
        let r = LaurentRing;
        let x = resolve(&r, &w(2, vec![Slice::CrossPos(0)])).unwrap();
        let mut expect = TLElement::zero(2, 2);
        expect.add_term(&r, Matching::identity(2), &HalfLaurent::q_pow(1));
        expect.add_term(&r, Matching::e(2, 0), &HalfLaurent::q_pow(-1));
        assert_eq!(x, expect);
    }

    #[test]
    fn reidemeister_two() {
        let r = LaurentRing;
        let x = resolve(&r, &w(2, vec![Slice::CrossPos(0), Slice::CrossNeg(0)])).unwrap();
        assert_eq!(x, TLElement::identity(&r, 2));
    }

    #[test]
    fn positive_kink() {
        let r = LaurentRing;
        let x = resolve(&r, &w(1, vec![Slice::Cup(1), Slice::CrossPos(0), Slice::Cap(1)])).unwrap();
        assert_eq!(x, TLElement::identity(&r, 1).scale(&r, &-HalfLaurent::q_pow(3)));
    }

    #[test]
    fn circle_is_delta() {
        let r = LaurentRing;
        let x = resolve(&r, &w(0, vec![Slice::Cup(0), Slice::Cap(0)])).unwrap();
        assert_eq!(x, TLElement::identity(&r, 0).scale(&r, &delta()));
    }
}
