//! Verification suite. Each check is a `Check` trait object in a registry and is picked by
//! name at run time; `all` runs everything in parallel and reports in name order.

pub mod checks;
pub mod random;

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use stated_skein::ring::RingMode;

pub use checks::frobenius::{frobenius_kernel, threading, FrobeniusReport};
pub use checks::hp::{hoste_przytycki, HPModule, HPReport};
pub use checks::lemma::{check_uvkm, check_uvkm_stated, stated_v0_value};
pub use checks::sphere::{sphere_slide_chain, FormalVModule, SphereSlideReport, Sym};

#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    /// Coefficient settings the specialisation-dependent checks run under.
    pub rings: Vec<RingMode>,
    /// Degree bound for commutator spans.
    pub degree: u32,
    /// Bound on k+m for the lemma checks.
    pub kmax: usize,
    /// Largest N for the Chebyshev identities.
    pub n_max: u32,
    /// Run the Chebyshev identities at this N only.
    pub n: Option<u32>,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            rings: vec![
                RingMode::Generic,
                RingMode::Cyclotomic(16),
                RingMode::Cyclotomic(24),
                RingMode::Cyclotomic(40),
            ],
            degree: 2,
            kmax: 4,
            n_max: 20,
            n: None,
            seed: 0x5eed,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub status: Status,
    pub summary: String,
    pub specializations: Vec<String>,
    pub details: serde_json::Value,
    pub wall_ms: f64,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// What a check hands back before the registry stamps name and timing on it.
pub struct Outcome {
    pub ok: bool,
    pub summary: String,
    pub specializations: Vec<String>,
    pub details: serde_json::Value,
}

impl Outcome {
    pub fn new(ok: bool, summary: impl Into<String>, details: serde_json::Value) -> Self {
        Self { ok, summary: summary.into(), specializations: Vec::new(), details }
    }

    pub fn with_rings(mut self, rings: &[RingMode]) -> Self {
        self.specializations = rings.iter().map(|r| r.to_string()).collect();
        self
    }
}

pub trait Check: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn run(&self, cfg: &RunConfig) -> Outcome;
}

pub struct Registry {
    checks: Vec<Box<dyn Check>>,
}

#[derive(Debug, thiserror::Error)]
#[error("unknown check {0:?}; available: {1}")]
pub struct UnknownCheck(pub String, pub String);

impl Registry {
    pub fn empty() -> Self {
        Self { checks: Vec::new() }
    }

    pub fn register(&mut self, c: Box<dyn Check>) {
        self.checks.push(c);
        self.checks.sort_by_key(|c| c.name());
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.checks.iter().map(|c| c.name()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&dyn Check> {
        self.checks.iter().find(|c| c.name() == name).map(|c| c.as_ref())
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Check> + '_ {
        self.checks.iter().map(|c| c.as_ref())
    }

    /// `all`, one name, or a comma-separated list.
    pub fn select(&self, selector: &str) -> Result<Vec<&dyn Check>, UnknownCheck> {
        if selector.trim() == "all" {
            return Ok(self.iter().collect());
        }
        selector
            .split(',')
            .map(|s| s.trim())
            .map(|s| self.get(s).ok_or_else(|| UnknownCheck(s.to_string(), self.names().join(", "))))
            .collect()
    }

    pub fn run(&self, selector: &str, cfg: &RunConfig) -> Result<SuiteReport, UnknownCheck> {
        let picked = self.select(selector)?;
        let mut reports: Vec<CheckReport> = picked.par_iter().map(|c| run_one(*c, cfg)).collect();
        reports.sort_by(|a, b| a.name.cmp(&b.name));
        Ok(SuiteReport { config: cfg.clone(), all_passed: reports.iter().all(|r| r.passed()), checks: reports })
    }
}

impl Default for Registry {
    fn default() -> Self {
        let mut r = Self::empty();
        for c in checks::builtin() {
            r.register(c);
        }
        r
    }
}

pub fn run_one(c: &dyn Check, cfg: &RunConfig) -> CheckReport {
    let start = Instant::now();
    let out = c.run(cfg);
    CheckReport {
        name: c.name().to_string(),
        status: if out.ok { Status::Pass } else { Status::Fail },
        summary: out.summary,
        specializations: out.specializations,
        details: out.details,
        wall_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub config: RunConfig,
    pub all_passed: bool,
    pub checks: Vec<CheckReport>,
}
