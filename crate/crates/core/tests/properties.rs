use proptest::prelude::*;
use stated_skein::bigon::{evaluate, evaluate_basis, ExchangeOrder, State, StatedTangle};
use stated_skein::cutting::{cut_state_sum, cut_twice};
use stated_skein::oq::{antipode, coproduct, counit, nf, rewrite_nf, Gen, Mono, OqElement};
use stated_skein::ring::{cheb_s, cheb_t, CyclotomicSpec, HalfLaurent, LaurentRing, RatFunc, UniPoly};
use stated_skein::tl::{resolve, Slice, SliceWord};

fn laurent() -> impl Strategy<Value = HalfLaurent> {
    prop::collection::vec((-8i64..=8, -4i64..=4), 0..4)
        .prop_map(|ts| HalfLaurent::from_terms(ts.into_iter().map(|(e, c)| (e, c.into()))))
}

fn nonzero_laurent() -> impl Strategy<Value = HalfLaurent> {
    laurent().prop_filter("nonzero", |x| !x.is_zero())
}

fn gen() -> impl Strategy<Value = Gen> {
    (0usize..4).prop_map(|i| Gen::ALL[i])
}

fn word(max: usize) -> impl Strategy<Value = Vec<Gen>> {
    prop::collection::vec(gen(), 0..=max)
}

fn element() -> impl Strategy<Value = OqElement> {
    let monos = Mono::up_to_degree(2);
    prop::collection::vec((0..monos.len(), nonzero_laurent()), 1..3)
        .prop_map(move |ts| OqElement::from_terms(ts.into_iter().map(|(i, c)| (monos[i], c))))
}

/// Raw choices turned into a word that fits: each `(kind, pos)` is adapted to the current width.
fn slices(input: usize, raw: &[(u8, usize)]) -> SliceWord {
    let mut w = SliceWord::empty(input);
    for &(k, p) in raw {
        let width = w.output();
        let s = match k % 5 {
            1 if width < 5 => Slice::Cup(p % (width + 1)),
            2 if width >= 2 => Slice::Cap(p % (width - 1)),
            3 if width >= 2 => Slice::CrossPos(p % (width - 1)),
            4 if width >= 2 => Slice::CrossNeg(p % (width - 1)),
            _ => Slice::Identity,
        };
        w.push(s).unwrap();
    }
    w
}

fn tangle() -> impl Strategy<Value = StatedTangle> {
    (0usize..=3, prop::collection::vec((any::<u8>(), any::<usize>()), 0..6), any::<u64>()).prop_map(
        |(input, raw, bits)| {
            let w = slices(input, &raw);
            let st = |n: usize, off: usize| -> Vec<State> {
                (0..n).map(|i| State::BOTH[((bits >> ((i + off) % 64)) & 1) as usize]).collect()
            };
            let (l, r) = (st(w.input(), 0), st(w.output(), 8));
            StatedTangle::new(w, l, r).unwrap()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laurent_ring_axioms(x in laurent(), y in laurent(), z in laurent()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x - &x, HalfLaurent::zero());
        prop_assert_eq!((&x * &y).bar(), &x.bar() * &y.bar());
    }

    #[test]
    fn exact_division_undoes_multiplication(x in laurent(), y in nonzero_laurent()) {
        prop_assert_eq!((&x * &y).div_exact(&y), Some(x.clone()));
        prop_assert_eq!(RatFunc::ratio(&(&x * &y), &y).unwrap().to_laurent(), Some(x));
    }

    #[test]
    fn specialisation_is_a_ring_map(x in laurent(), y in laurent(), m in prop::sample::select(vec![1u64, 5, 6, 12, 16, 24, 40])) {
        let s = CyclotomicSpec::new(m);
        prop_assert_eq!(s.specialize(&(&x + &y)), s.add(&s.specialize(&x), &s.specialize(&y)));
        prop_assert_eq!(s.specialize(&(&x * &y)), s.mul(&s.specialize(&x), &s.specialize(&y)));
        prop_assert!(s.specialize(&HalfLaurent::q_half(m as i64)) == s.one());
    }

    #[test]
    fn chebyshev_identities(m in 0u32..12, n in 0u32..12) {
        // T_m T_n = T_{m+n} + T_{|m-n|}
        prop_assert_eq!(&cheb_t(m) * &cheb_t(n), &cheb_t(m + n) + &cheb_t(m.abs_diff(n)));
        if n >= 2 {
            prop_assert_eq!(cheb_t(n), &cheb_s(n) - &cheb_s(n - 2));
        }
        // S_n(T_1) composed with the Frobenius shape: T_n^2 - 4 = (x^2 - 4) S_{n-1}^2
        if n >= 1 {
            let t = cheb_t(n);
            let s = cheb_s(n - 1);
            prop_assert_eq!(&(&t * &t) - &UniPoly::from_ints(&[4]), &UniPoly::from_ints(&[-4, 0, 1]) * &(&s * &s));
        }
    }

    #[test]
    fn reidemeister_two_and_kink(input in 2usize..=4, raw in prop::collection::vec((any::<u8>(), any::<usize>()), 0..4), at in any::<usize>(), i in any::<usize>()) {
        let w = slices(input, &raw);
        let at = at % (w.slices().len() + 1);
        let width = w.width_at(at);
        prop_assume!(width >= 2);
        let i = i % (width - 1);
        let mut with = w.slices().to_vec();
        with.splice(at..at, [Slice::CrossPos(i), Slice::CrossNeg(i)]);
        let with = SliceWord::new(w.input(), with).unwrap();
        prop_assert_eq!(resolve(&LaurentRing, &with).unwrap(), resolve(&LaurentRing, &w).unwrap());
        // a positive kink on strand i is -q^3
        let mut kink = w.slices().to_vec();
        kink.splice(at..at, [Slice::Cup(i + 1), Slice::CrossPos(i), Slice::Cap(i + 1)]);
        let kink = SliceWord::new(w.input(), kink).unwrap();
        let r = LaurentRing;
        prop_assert_eq!(resolve(&r, &kink).unwrap(), resolve(&r, &w).unwrap().scale(&r, &-HalfLaurent::q_pow(3)));
    }

    #[test]
    fn rewriting_is_confluent(w in word(7), choices in prop::collection::vec(any::<usize>(), 64)) {
        let mut it = choices.into_iter().cycle();
        let got = rewrite_nf(&w, &mut |n| it.next().unwrap() % n);
        prop_assert_eq!(got, nf(&w));
    }

    #[test]
    fn product_is_concatenation(u in word(4), v in word(4)) {
        let mut uv = u.clone();
        uv.extend_from_slice(&v);
        prop_assert_eq!(nf(&u).mul(&nf(&v)), nf(&uv));
    }

    #[test]
    fn hopf_maps(x in element(), y in element()) {
        prop_assert_eq!(coproduct(&x.mul(&y)), coproduct(&x).mul(&coproduct(&y)));
        prop_assert_eq!(counit(&x.mul(&y)), &counit(&x) * &counit(&y));
        prop_assert_eq!(antipode(&x.mul(&y)), antipode(&y).mul(&antipode(&x)));
    }

    #[test]
    fn exchange_order_is_irrelevant(t in tangle()) {
        prop_assert_eq!(
            evaluate_basis(&t, ExchangeOrder::LeftFirst).unwrap(),
            evaluate_basis(&t, ExchangeOrder::RightFirst).unwrap()
        );
    }

    #[test]
    fn cutting_is_the_coproduct(t in tangle(), p in any::<usize>(), p2 in any::<usize>()) {
        let len = t.word().slices().len();
        let p = p % (len + 1);
        prop_assert_eq!(cut_state_sum(&t, p).unwrap(), coproduct(&evaluate(&t).unwrap()));
        let p2 = p + p2 % (len - p + 1);
        prop_assert_eq!(cut_twice(&t, p, p2, true).unwrap(), cut_twice(&t, p, p2, false).unwrap());
    }
}
