//! Chebyshev identities behind the Frobenius kernel, and threading by `T_N`.

use serde::Serialize;
use serde_json::json;
use stated_skein::ring::{cheb_s, cheb_t, BiPoly, UniPoly};

use crate::{Check, Outcome, RunConfig};

#[derive(Clone, Debug, Serialize)]
pub struct FrobeniusReport {
    pub n: u32,
    /// `T_N^2 - 4`
    pub lhs: String,
    /// `S_{N-1}`, the cofactor witness
    pub cofactor: String,
    pub divisible: bool,
    /// `(u1^2 - 4)(u2^2 - 4)`
    pub omega: String,
    pub omega_nonzero: bool,
}

fn x2_minus_4() -> UniPoly {
    UniPoly::from_ints(&[-4, 0, 1])
}

/// `T_N^2 - 4 = (x^2 - 4) S_{N-1}^2`, and `Ω` in `Z[u1, u2]`.
pub fn frobenius_kernel(n: u32) -> FrobeniusReport {
    assert!(n >= 2, "N >= 2");
    let t = cheb_t(n);
    let lhs = &(&t * &t) - &UniPoly::from_ints(&[4]);
    let s = cheb_s(n - 1);
    let rhs = &x2_minus_4() * &(&s * &s);
    let f = x2_minus_4();
    let omega = &BiPoly::from_uni(&f, 0).expect("integral") * &BiPoly::from_uni(&f, 1).expect("integral");
    FrobeniusReport {
        n,
        lhs: lhs.to_string(),
        cofactor: s.to_string(),
        divisible: lhs == rhs,
        omega: omega.to_string(),
        omega_nonzero: !omega.is_zero(),
    }
}

/// Image of `x^k` in the solid torus: `k` parallel copies each threaded by `T_N`.
pub fn threading(k: u32, n: u32) -> UniPoly {
    cheb_t(n).pow(k)
}

pub struct Frobenius;

impl Check for Frobenius {
    fn name(&self) -> &'static str {
        "frobenius"
    }

    fn description(&self) -> &'static str {
        "T_N^2 - 4 = (x^2 - 4) S_{N-1}^2 and nonvanishing of (u1^2-4)(u2^2-4)"
    }

    fn run(&self, cfg: &RunConfig) -> Outcome {
        let (lo, hi) = match cfg.n {
            Some(n) => (n.max(2), n.max(2)),
            None => (2, cfg.n_max.max(2)),
        };
        let reports: Vec<FrobeniusReport> = (lo..=hi).map(frobenius_kernel).collect();
        let ok = reports.iter().all(|r| r.divisible && r.omega_nonzero);
        Outcome::new(
            ok,
            format!("divisibility for {lo} <= N <= {hi}"),
            json!({ "reports": reports }),
        )
    }
}

pub struct Threading;

impl Check for Threading {
    fn name(&self) -> &'static str {
        "threading"
    }

    fn description(&self) -> &'static str {
        "threading x^k by T_N is multiplicative"
    }

    fn run(&self, cfg: &RunConfig) -> Outcome {
        let mut ok = true;
        let mut rows = Vec::new();
        let ns: Vec<u32> = match cfg.n {
            Some(n) => vec![n],
            None => (1..=cfg.n_max.min(8)).collect(),
        };
        for n in ns {
            ok &= threading(0, n) == UniPoly::one() && threading(1, n) == cheb_t(n);
            for a in 0..=3 {
                for b in 0..=3 {
                    ok &= threading(a + b, n) == &threading(a, n) * &threading(b, n);
                }
            }
            rows.push(json!({"N": n, "x": threading(1, n).to_string(), "x^2": threading(2, n).to_string()}));
        }
        Outcome::new(ok, "Phi(1) = 1, Phi(x) = T_N, Phi(x^(a+b)) = Phi(x^a) Phi(x^b)", json!({ "images": rows }))
    }
}
