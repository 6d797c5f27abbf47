//! One line per acceptance criterion: PASS/FAIL, wall time and its limit.
//!
//! Run with `cargo test -p skein-verify --test acceptance -- --nocapture` to see the table.

use std::time::{Duration, Instant};

use skein_verify::{run_one, Registry, RunConfig};

struct Criterion {
    id: u32,
    title: &'static str,
    checks: &'static [&'static str],
    limit: Duration,
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

const CRITERIA: [Criterion; 13] = [
    Criterion { id: 1, title: "TL dimensions are Catalan numbers", checks: &["catalan"], limit: secs(1) },
    Criterion { id: 2, title: "Jones-Wenzl idempotents", checks: &["jones-wenzl"], limit: secs(10) },
    Criterion { id: 3, title: "closure of f_n is S_n", checks: &["closure"], limit: secs(10) },
    Criterion { id: 4, title: "u/v lemma, TL and stated", checks: &["uvkm"], limit: secs(60) },
    Criterion { id: 5, title: "sphere-slide vanishing chain", checks: &["sphere-slide"], limit: secs(5) },
    Criterion { id: 6, title: "presentation and Hopf axioms", checks: &["presentation", "hopf"], limit: secs(30) },
    Criterion { id: 7, title: "coproduct from cutting", checks: &["cutting"], limit: secs(30) },
    Criterion { id: 8, title: "HH0 torsion certificates", checks: &["hh0"], limit: secs(5) },
    Criterion { id: 9, title: "core loop is 2", checks: &["core-loop"], limit: secs(1) },
    Criterion { id: 10, title: "disk annihilator (1+q^2)", checks: &["disk"], limit: secs(1) },
    Criterion { id: 11, title: "Chebyshev-Frobenius kernel", checks: &["frobenius"], limit: secs(5) },
    Criterion { id: 12, title: "Hoste-Przytycki survival of x_{N-2}", checks: &["hp"], limit: secs(1) },
    Criterion { id: 13, title: "edge inversion is an involution", checks: &["inversion"], limit: secs(1) },
];

/// Criteria that are false as stated. They are still run in full; the harness insists they
/// keep failing so a change in behaviour is noticed.
const KNOWN_UNATTAINABLE: &[(u32, &str)] = &[(
    12,
    "at m = 16, 24, 40 the annihilator 1 - q^{2N} of x_{N-2} specialises to 2 (q^{2N} = -1), \
     and for N = 2 there is no x_0; x_{N-2} survives only when 8 does not divide m",
)];

#[test]
fn acceptance() {
    let registry = Registry::default();
    let cfg = RunConfig::default();
    let mut unexpected = Vec::new();
    for c in &CRITERIA {
        let start = Instant::now();
        let reports: Vec<_> = c
            .checks
            .iter()
            .map(|n| run_one(registry.get(n).unwrap_or_else(|| panic!("no check {n}")), &cfg))
            .collect();
        let wall = start.elapsed();
        let passed = reports.iter().all(|r| r.passed()) && wall <= c.limit;
        let known = KNOWN_UNATTAINABLE.iter().find(|(id, _)| *id == c.id);
        println!(
            "criterion {:>2} {:<4} {:<40} {:>9.3}s / {}s{}",
            c.id,
            if passed { "PASS" } else { "FAIL" },
            c.title,
            wall.as_secs_f64(),
            c.limit.as_secs(),
            known.map(|(_, why)| format!("  [known: {why}]")).unwrap_or_default(),
        );
        if !passed {
            for r in reports.iter().filter(|r| !r.passed()) {
                println!("    {}: {}", r.name, r.summary);
            }
        }
        match (passed, known) {
            (true, None) | (false, Some(_)) => {}
            (false, None) => unexpected.push(format!("criterion {} failed", c.id)),
            (true, Some(_)) => unexpected.push(format!("criterion {} passed but is listed as unattainable", c.id)),
        }
    }
    assert!(unexpected.is_empty(), "{unexpected:?}");
}
