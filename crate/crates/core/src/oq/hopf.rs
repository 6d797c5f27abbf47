use once_cell::sync::Lazy;

use super::{Gen, Mono, OqElement, Tensor, Tensor2};
use crate::ring::HalfLaurent;

// Δ on generators comes from cutting the corresponding bigon arc down the middle.
static GEN_DELTA: Lazy<Vec<Tensor2>> =
    Lazy::new(|| Gen::ALL.iter().map(|&g| crate::cutting::cut_generator(g)).collect());

pub fn generator_coproduct(g: Gen) -> Tensor2 {
    GEN_DELTA[g as usize].clone()
}

fn mono_coproduct(m: &Mono) -> Tensor2 {
    m.word().into_iter().fold(Tensor::unit(2), |acc, g| acc.mul(&generator_coproduct(g)))
}

/// The algebra map determined by cutting on generators.
pub fn coproduct(x: &OqElement) -> Tensor2 {
    let mut out = Tensor::zero(2);
    for (m, c) in x.terms() {
        out = out.add(&mono_coproduct(m).scale(c));
    }
    out
}

/// `ε(a) = ε(d) = 1`, `ε(b) = ε(c) = 0`, extended multiplicatively.
pub fn counit(x: &OqElement) -> HalfLaurent {
    let mut out = HalfLaurent::zero();
    for (m, c) in x.terms() {
        let (_, j, k) = m.exponents();
        if j == 0 && k == 0 {
            out += c;
        }
    }
    out
}

fn gen_antipode(g: Gen) -> OqElement {
    match g {
        Gen::A => OqElement::gen(Gen::D),
        Gen::D => OqElement::gen(Gen::A),
        Gen::B => OqElement::gen(Gen::B).scale(&-HalfLaurent::q_pow(2)),
        Gen::C => OqElement::gen(Gen::C).scale(&-HalfLaurent::q_pow(-2)),
    }
}

/// Anti-algebra map with `S(a) = d, S(d) = a, S(b) = -q²b, S(c) = -q⁻²c`.
pub fn antipode(x: &OqElement) -> OqElement {
    let mut out = OqElement::zero();
    for (m, c) in x.terms() {
        let img = m.word().iter().rev().fold(OqElement::one(), |acc, &g| acc.mul(&gen_antipode(g)));
        out = out.add(&img.scale(c));
    }
    out
}

/// `xy - yx`
pub fn commutator(x: &OqElement, y: &OqElement) -> OqElement {
    x.mul(y).sub(&y.mul(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oq::{nf, parse_word};

    fn g(c: Gen) -> OqElement {
        OqElement::gen(c)
    }

    // Σ_ε x_{νε} ⊗ x_{εμ}, written out by hand
    fn matrix_coproduct(x: Gen) -> Tensor2 {
        let (nu, mu) = x.states();
        let mut out = Tensor::zero(2);
        for eps in [crate::bigon::State::Plus, crate::bigon::State::Minus] {
            out = out.add(&Tensor::pure(&[g(Gen::from_states(nu, eps)), g(Gen::from_states(eps, mu))]));
        }
        out
    }

    #[test]
    fn cut_coproduct_is_the_matrix_coproduct() {
        for x in Gen::ALL {
            assert_eq!(generator_coproduct(x), matrix_coproduct(x), "{x:?}");
        }
        let a = Tensor::pure(&[g(Gen::A), g(Gen::A)]).add(&Tensor::pure(&[g(Gen::B), g(Gen::C)]));
        assert_eq!(coproduct(&g(Gen::A)), a);
    }

    #[test]
    fn counit_values() {
        assert!(counit(&g(Gen::A)).is_one());
        assert!(counit(&g(Gen::B)).is_zero());
        assert!(counit(&nf(&parse_word("ad").unwrap())).is_one());
    }

    #[test]
    fn antipode_convolution_on_generators() {
        for x in Gen::ALL {
            let d = coproduct(&g(x));
            let left = d.apply_at(0, &|m| Tensor::from_element(&antipode(&OqElement::from_mono(*m)))).contract();
            let right = d.apply_at(1, &|m| Tensor::from_element(&antipode(&OqElement::from_mono(*m)))).contract();
            let e = OqElement::scalar(counit(&g(x)));
            assert_eq!(left, e, "{x:?}");
            assert_eq!(right, e, "{x:?}");
        }
    }

    #[test]
    fn antipode_squared_on_b() {
        assert_eq!(antipode(&antipode(&g(Gen::B))), g(Gen::B).scale(&HalfLaurent::q_pow(4)));
    }

    #[test]
    fn commutator_examples() {
        assert!(commutator(&g(Gen::B), &g(Gen::C)).is_zero());
        let ab = nf(&[Gen::A, Gen::B]);
        assert_eq!(commutator(&g(Gen::B), &g(Gen::A)), ab.scale(&(&HalfLaurent::q_pow(2) - &HalfLaurent::one())));
    }
}
