//! Jones-Wenzl idempotents.

use std::any::Any;
use std::collections::HashMap;
use std::sync::Arc;

use once_cell::sync::Lazy;
use parking_lot::Mutex;

use super::{resolve, Matching, Slice, SliceWord, TLElement, TlError};
use crate::ring::{quantum_factorial, quantum_int, CoeffRing, FractionField, HalfLaurent, LaurentRing, RatFunc};

type Memo = HashMap<(String, usize), Arc<dyn Any + Send + Sync>>;

static MEMO: Lazy<Mutex<Memo>> = Lazy::new(|| Mutex::new(HashMap::new()));

fn cached<T: Any + Send + Sync>(key: (String, usize)) -> Option<Arc<T>> {
    MEMO.lock().get(&key).cloned().and_then(|v| v.downcast::<T>().ok())
}

/// Insert unless another thread got there first; either way return the stored value.
fn store<T: Any + Send + Sync>(key: (String, usize), value: T) -> Arc<T> {
    let mut memo = MEMO.lock();
    let entry = memo.entry(key).or_insert_with(|| Arc::new(value));
    entry.clone().downcast::<T>().expect("memo entry type")
}

/// `f_n` over `ring`, built by the Wenzl recursion
/// `f_n = f_{n-1} + ([n-1]/[n]) f_{n-1} e_{n-1} f_{n-1}`.
///
/// Over the generic field the recursion runs on the integral multiples `[n]! f_n`
/// (see [`jones_wenzl_scaled`]) and divides once at the end.
pub fn jones_wenzl<R: CoeffRing>(ring: &R, n: usize) -> Result<Arc<TLElement<R::Elem>>, TlError> {
    let key = (ring.key(), n);
    if let Some(f) = cached::<TLElement<R::Elem>>(key.clone()) {
        return Ok(f);
    }
    if let Some(generic) = (ring as &dyn Any).downcast_ref::<FractionField>() {
        let g = jones_wenzl_scaled(n)?;
        let fact = quantum_factorial(n as u32);
        let mut f = TLElement::zero(n, n);
        for (m, c) in g.terms() {
            f.add_term(generic, m.clone(), &RatFunc::ratio(c, &fact).expect("nonzero factorial"));
        }
        let boxed: Box<dyn Any> = Box::new(f);
        let f = *boxed.downcast::<TLElement<R::Elem>>().expect("generic field elements");
        return Ok(store(key, f));
    }
    let f = if n <= 1 {
        TLElement::identity(ring, n)
    } else {
        let prev = jones_wenzl(ring, n - 1)?;
        let inv = ring
            .inv(&ring.from_laurent(&quantum_int(n as u32)))
            .ok_or_else(|| TlError::DivisionByZero { k: n, ring: ring.key() })?;
        let c = ring.mul(&ring.from_laurent(&quantum_int(n as u32 - 1)), &inv);
        let big = TLElement::tensor(ring, &prev, &TLElement::identity(ring, 1));
        let e = TLElement::from_matching(ring, Matching::e(n, n - 2));
        let mid = TLElement::mul(ring, &TLElement::mul(ring, &big, &e)?, &big)?;
        big.add(ring, &mid.scale(ring, &c))?
    };
    Ok(store(key, f))
}

/// `g_n = [n]! f_n`, which has coefficients in `Z[q^{±1/2}]`.
///
/// Multiplying the Wenzl recursion by `[n]!` gives
/// `g_n = [n] G + (G e_{n-1} G) / [n-2]!` with `G = g_{n-1} ⊗ 1`; the division is exact.
pub fn jones_wenzl_scaled(n: usize) -> Result<Arc<TLElement<HalfLaurent>>, TlError> {
    let key = ("scaled".to_string(), n);
    if let Some(f) = cached::<TLElement<HalfLaurent>>(key.clone()) {
        return Ok(f);
    }
    let r = LaurentRing;
    let g = if n <= 1 {
        TLElement::identity(&r, n)
    } else {
        let prev = jones_wenzl_scaled(n - 1)?;
        let big = TLElement::tensor(&r, &prev, &TLElement::identity(&r, 1));
        let e = TLElement::from_matching(&r, Matching::e(n, n - 2));
        let mid = TLElement::mul(&r, &TLElement::mul(&r, &big, &e)?, &big)?;
        let fact = quantum_factorial(n as u32 - 2);
        let mut out = big.scale(&r, &quantum_int(n as u32));
        for (m, c) in mid.terms() {
            let v = c.div_exact(&fact).ok_or(TlError::NotIntegral)?;
            out.add_term(&r, m.clone(), &v);
        }
        out
    };
    Ok(store(key, g))
}

/// A reduced word for every permutation of `n` letters, as crossing positions.
fn reduced_words(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    permutations(&mut perm, 0, &mut |p| {
        let mut a = p.to_vec();
        let mut word = Vec::new();
        loop {
            let Some(i) = (0..n.saturating_sub(1)).find(|&i| a[i] > a[i + 1]) else { break };
            a.swap(i, i + 1);
            word.push(i);
        }
        word.reverse();
        out.push(word);
    });
    out
}

fn permutations(p: &mut Vec<usize>, k: usize, emit: &mut dyn FnMut(&[usize])) {
    if k == p.len() {
        emit(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, emit);
        p.swap(k, i);
    }
}

/// One candidate normalisation of the symmetric-group formula for `f_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymmetricSumConvention {
    /// Each crossing of length `ℓ` contributes `q^{weight·ℓ}`.
    pub weight: i64,
    /// Crossing lifted as a positive (`true`) or negative crossing.
    pub positive: bool,
    /// Global factor `q^{prefactor · n(n-1)/2}`.
    pub prefactor: i64,
}

impl SymmetricSumConvention {
    pub fn label(&self) -> String {
        format!(
            "weight q^({}*len), {} crossings, prefactor q^({}*n(n-1)/2)",
            self.weight,
            if self.positive { "positive" } else { "negative" },
            self.prefactor
        )
    }
}

/// `q^{prefactor·n(n-1)/2} / [n]! · Σ_σ q^{weight·ℓ(σ)} σ̂`.
pub fn symmetric_sum(n: usize, conv: SymmetricSumConvention) -> Result<TLElement<RatFunc>, TlError> {
    let ring = FractionField;
    let mut total = TLElement::zero(n, n);
    for word in reduced_words(n) {
        let slices = word
            .iter()
            .map(|&i| if conv.positive { Slice::CrossPos(i) } else { Slice::CrossNeg(i) })
            .collect();
        let x = resolve(&ring, &SliceWord::new(n, slices)?)?;
        let w = RatFunc::from_laurent(&HalfLaurent::q_pow(conv.weight * word.len() as i64));
        total = total.add(&ring, &x.scale(&ring, &w))?;
    }
    let pre = HalfLaurent::q_pow(conv.prefactor * (n * n.saturating_sub(1) / 2) as i64);
    let norm = RatFunc::ratio(&pre, &quantum_factorial(n as u32)).expect("nonzero factorial");
    Ok(total.scale(&ring, &norm))
}

/// All candidate conventions whose symmetric sum equals the recursively built `f_n`.
pub fn symmetric_sum_matches(n: usize) -> Result<Vec<SymmetricSumConvention>, TlError> {
    let f = jones_wenzl(&FractionField, n)?;
    let mut out = Vec::new();
    for weight in [1, -1, 3, -3] {
        for positive in [true, false] {
            for prefactor in [0, 2, -2] {
                let conv = SymmetricSumConvention { weight, positive, prefactor };
                if symmetric_sum(n, conv)? == *f {
                    out.push(conv);
                }
            }
        }
    }
    Ok(out)
}
