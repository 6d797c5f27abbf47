//! Closing a square tangle around the annulus.

use std::collections::BTreeMap;

use super::matching::End;
use super::{Matching, TLElement, TlError};
use crate::ring::{delta, CoeffRing, UniPoly};

/// Polynomial in the core curve `a` with coefficients in some ring.
pub type AnnulusPoly<E> = BTreeMap<u32, E>;

/// `(essential loops, contractible loops)` after joining top point `i` to bottom point `i`.
pub fn closure_loops(m: &Matching) -> Result<(u32, u32), TlError> {
    if !m.is_square() {
        return Err(TlError::WidthMismatch { expected: m.n_in(), found: m.n_out() });
    }
    let n = m.n_in();
    let mut seen = vec![false; 2 * n];
    let (mut essential, mut trivial) = (0, 0);
    for start in 0..2 * n {
        if seen[start] {
            continue;
        }
        let mut winding = 0i32;
        let mut e = m.end(start);
        loop {
            seen[m.index(e)] = true;
            let f = m.partner(e);
            seen[m.index(f)] = true;
            e = match f {
                End::Top(p) => {
                    winding += 1;
                    End::Bottom(p)
                }
                End::Bottom(p) => {
                    winding -= 1;
                    End::Top(p)
                }
            };
            if m.index(e) == start {
                break;
            }
        }
        if winding == 0 {
            trivial += 1;
        } else {
            debug_assert_eq!(winding.abs(), 1);
            essential += 1;
        }
    }
    Ok((essential, trivial))
}

/// Each matching contributes `a^w δ^t`.
pub fn annulus_closure<R: CoeffRing>(ring: &R, x: &TLElement<R::Elem>) -> Result<AnnulusPoly<R::Elem>, TlError> {
    let d = ring.from_laurent(&delta());
    let mut out: AnnulusPoly<R::Elem> = BTreeMap::new();
    for (m, c) in x.terms() {
        let (w, t) = closure_loops(m)?;
        let mut v = c.clone();
        for _ in 0..t {
            v = ring.mul(&v, &d);
        }
        let slot = out.entry(w).or_insert_with(|| ring.zero());
        *slot = ring.add(slot, &v);
    }
    out.retain(|_, v| !ring.is_zero(v));
    Ok(out)
}

/// Image of a Laurent-coefficient polynomial in `ring`.
pub fn poly_in<R: CoeffRing>(ring: &R, p: &UniPoly) -> AnnulusPoly<R::Elem> {
    p.terms()
        .map(|(d, c)| (d, ring.from_laurent(c)))
        .filter(|(_, c)| !ring.is_zero(c))
        .collect()
}
