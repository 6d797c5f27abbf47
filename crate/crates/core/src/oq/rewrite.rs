//! The defining relations as a literal word-rewriting system.
//!
//! Used as an independent oracle for [`super::nf`]: reducing the same word with different
//! choices of redex must always land on the same normal form.

use std::collections::BTreeMap;

use super::{Gen, Mono, OqElement};
use crate::ring::HalfLaurent;

pub struct RewriteRule {
    pub lhs: [Gen; 2],
    /// `(coefficient as q-power, replacement word)`
    pub rhs: &'static [(i64, &'static [Gen])],
}

use Gen::{A, B, C, D};

pub const RULES: [RewriteRule; 7] = [
    RewriteRule { lhs: [B, A], rhs: &[(2, &[A, B])] },
    RewriteRule { lhs: [C, A], rhs: &[(2, &[A, C])] },
    RewriteRule { lhs: [D, B], rhs: &[(2, &[B, D])] },
    RewriteRule { lhs: [D, C], rhs: &[(2, &[C, D])] },
    RewriteRule { lhs: [C, B], rhs: &[(0, &[B, C])] },
    RewriteRule { lhs: [A, D], rhs: &[(0, &[]), (-2, &[B, C])] },
    RewriteRule { lhs: [D, A], rhs: &[(0, &[]), (2, &[B, C])] },
];

type Redex = (usize, usize, Vec<(i64, Vec<Gen>)>);

// The seven rules leave words like a b d irreducible. For those the d is first walked left
// past the b's and c's (bd = q^{-2} db, cd = q^{-2} dc), then ad is replaced, all in one step.
fn redexes(word: &[Gen]) -> Vec<Redex> {
    let mut out = Vec::new();
    for p in 0..word.len().saturating_sub(1) {
        for r in &RULES {
            if word[p] == r.lhs[0] && word[p + 1] == r.lhs[1] {
                let rhs = r.rhs.iter().map(|(e, w)| (*e, w.to_vec())).collect();
                out.push((p, p + 2, rhs));
            }
        }
        if word[p] == A {
            let mid = word[p + 1..].iter().take_while(|g| matches!(g, B | C)).count();
            if mid > 0 && word.get(p + 1 + mid) == Some(&D) {
                let w = word[p + 1..p + 1 + mid].to_vec();
                let shift = -2 * mid as i64;
                let mut bcw = vec![B, C];
                bcw.extend_from_slice(&w);
                out.push((p, p + mid + 2, vec![(shift, w), (shift - 2, bcw)]));
            }
        }
    }
    out
}

fn irreducible_to_mono(word: &[Gen]) -> Mono {
    let count = |g: Gen| word.iter().filter(|&&x| x == g).count() as u32;
    let (a, b, c, d) = (count(A), count(B), count(C), count(D));
    debug_assert!(a == 0 || d == 0);
    if d > 0 {
        Mono::d_family(d, b, c)
    } else {
        Mono::a_family(a, b, c)
    }
}

/// Reduce `word` to normal form; `choose(n)` picks which of `n` candidates to rewrite next.
pub fn rewrite_nf(word: &[Gen], choose: &mut dyn FnMut(usize) -> usize) -> OqElement {
    let mut live: BTreeMap<Vec<Gen>, HalfLaurent> = BTreeMap::new();
    live.insert(word.to_vec(), HalfLaurent::one());
    let mut done = OqElement::zero();
    loop {
        let reducible: Vec<Vec<Gen>> = live.keys().filter(|w| !redexes(w).is_empty()).cloned().collect();
        for w in live.keys().filter(|w| redexes(w).is_empty()).cloned().collect::<Vec<_>>() {
            let c = live.remove(&w).unwrap();
            done.add_term(irreducible_to_mono(&w), &c);
        }
        if reducible.is_empty() {
            return done;
        }
        let w = reducible[choose(reducible.len()) % reducible.len()].clone();
        let c = live.remove(&w).unwrap();
        let rx = redexes(&w);
        let (start, end, rhs) = &rx[choose(rx.len()) % rx.len()];
        for (e, rep) in rhs {
            let mut nw = w[..*start].to_vec();
            nw.extend_from_slice(rep);
            nw.extend_from_slice(&w[*end..]);
            let slot = live.entry(nw.clone()).or_default();
            *slot += &(&c * &HalfLaurent::q_pow(*e));
            if slot.is_zero() {
                live.remove(&nw);
            }
        }
    }
}
