//! Seeded random inputs for the property checks.

pub use rand::Rng;
use rand_chacha::ChaCha8Rng;
use stated_skein::bigon::{State, StatedTangle};
use stated_skein::oq::{Gen, Mono, OqElement};
use stated_skein::ring::HalfLaurent;
use stated_skein::tl::{Slice, SliceWord};

pub use rand::SeedableRng;
pub type Rand = ChaCha8Rng;

pub fn rng(seed: u64) -> Rand {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn word(r: &mut Rand, max_len: usize) -> Vec<Gen> {
    let n = r.gen_range(1..=max_len);
    (0..n).map(|_| Gen::ALL[r.gen_range(0..4)]).collect()
}

/// Small coefficient: one or two terms with exponents in `[-3, 3]`, integer powers of `q`.
pub fn coeff(r: &mut Rand) -> HalfLaurent {
    let mut c = HalfLaurent::zero();
    for _ in 0..r.gen_range(1..=2) {
        c += &HalfLaurent::q_pow(r.gen_range(-3..=3)).scale(&r.gen_range(-2i64..=2).into());
    }
    if c.is_zero() {
        HalfLaurent::one()
    } else {
        c
    }
}

pub fn element(r: &mut Rand, max_degree: u32) -> OqElement {
    let monos = Mono::up_to_degree(max_degree);
    let mut out = OqElement::zero();
    for _ in 0..r.gen_range(1..=3) {
        out.add_term(monos[r.gen_range(0..monos.len())], &coeff(r));
    }
    out
}

fn slice(r: &mut Rand, width: usize) -> Slice {
    loop {
        let s = match r.gen_range(0..5) {
            0 => Slice::Identity,
            1 => Slice::Cup(r.gen_range(0..=width)),
            2 if width >= 2 => Slice::Cap(r.gen_range(0..width - 1)),
            3 if width >= 2 => Slice::CrossPos(r.gen_range(0..width - 1)),
            4 if width >= 2 => Slice::CrossNeg(r.gen_range(0..width - 1)),
            _ => continue,
        };
        // keep diagrams small: no more than 5 strands at any height
        if matches!(s, Slice::Cup(_)) && width >= 4 {
            continue;
        }
        return s;
    }
}

pub fn states(r: &mut Rand, n: usize) -> Vec<State> {
    (0..n).map(|_| State::BOTH[r.gen_range(0..2)]).collect()
}

/// A stated tangle in the bigon with standard edges, up to `max_slices` slices.
pub fn tangle(r: &mut Rand, max_slices: usize) -> StatedTangle {
    let input = r.gen_range(0..=3);
    let mut w = SliceWord::empty(input);
    for _ in 0..r.gen_range(0..=max_slices) {
        let s = slice(r, w.output());
        w.push(s).expect("slice chosen to fit");
    }
    let left = states(r, input);
    let right = states(r, w.output());
    StatedTangle::new(w, left, right).expect("sizes match")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let a: Vec<_> = (0..5).map({
            let mut r = rng(7);
            move |_| tangle(&mut r, 4)
        }).collect();
        let mut r = rng(7);
        let b: Vec<_> = (0..5).map(|_| tangle(&mut r, 4)).collect();
        assert_eq!(a, b);
    }
}
