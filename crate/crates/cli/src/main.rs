//! `skein`: normal forms, Jones-Wenzl projectors, Hopf maps, HH0 certificates, cutting, and
//! the verification suite.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use stated_skein::bigon::StatedTangle;
use stated_skein::cutting::cut_state_sum;
use stated_skein::hh0::tau;
use stated_skein::oq::{antipode, coproduct, counit, OqElement};
use stated_skein::parse::parse_oq;
use stated_skein::ring::{CoeffRing, CyclotomicField, CyclotomicSpec, FractionField, RingMode};
use stated_skein::tl::{jones_wenzl, TLElement};
use skein_verify::{Registry, RunConfig};

#[derive(Parser, Debug)]
#[command(name = "skein", version, about = "Exact Kauffman-bracket and stated skein calculus")]
struct Cli {
    /// Coefficients: `generic` (the fraction field) or `cyclo:<m>` with q^{1/2} a primitive
    /// m-th root of unity.
    #[arg(long, global = true)]
    ring: Option<RingMode>,
    /// Commutator degree bound for HH0.
    #[arg(long, global = true)]
    degree: Option<u32>,
    /// Bound on k+m for the lemma checks.
    #[arg(long, global = true)]
    kmax: Option<usize>,
    /// Write the result as JSON to this path.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum HopfOp {
    Coproduct,
    Counit,
    Antipode,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// The Jones-Wenzl projector f_n.
    Jw { n: usize },
    /// PBW normal form of an element such as `ba` or `q^2*ab - d^2`.
    Nf { element: String },
    /// Apply the coproduct, counit or antipode.
    Hopf { op: HopfOp, element: String },
    /// Class of an element in the commutator quotient, with a certificate.
    Hh0 { element: String },
    /// Cut a stated bigon diagram (JSON, or @file) before slice `pos`.
    Cut { diagram: String, pos: usize },
    /// Run verification checks: `all`, a name, or a comma-separated list.
    Verify {
        #[arg(default_value = "all")]
        selector: String,
        /// Restrict the Chebyshev checks to this N.
        #[arg(long = "N")]
        n: Option<u32>,
        #[arg(long)]
        seed: Option<u64>,
        /// List the available checks and exit.
        #[arg(long)]
        list: bool,
    },
}

fn parse_element(s: &str) -> Result<OqElement> {
    parse_oq(s).map_err(|e| anyhow!("{}\n{}", e, e.render(s)))
}

fn jw_json<R: CoeffRing>(ring: &R, n: usize) -> Result<(String, Value)> {
    let f = jones_wenzl(ring, n).map_err(|e| anyhow!("Jones-Wenzl recursion: {e}"))?;
    Ok((render_tl(ring, &f), json!({"n": n, "ring": ring.key(), "terms": f.to_json(ring)})))
}

fn render_tl<R: CoeffRing>(ring: &R, x: &TLElement<R::Elem>) -> String {
    x.terms()
        .map(|(m, c)| format!("  {:?}  {}", m, ring.render(c)))
        .collect::<Vec<_>>()
        .join("\n")
}

fn emit(cli: &Cli, text: &str, value: &Value) -> Result<()> {
    println!("{text}");
    if let Some(p) = &cli.json {
        fs::write(p, serde_json::to_string_pretty(value)?).with_context(|| format!("writing {}", p.display()))?;
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<bool> {
    match &cli.cmd {
        Cmd::Jw { n } => {
            let (text, value) = match cli.ring.unwrap_or(RingMode::Generic) {
                RingMode::Generic => jw_json(&FractionField, *n)?,
                RingMode::Cyclotomic(m) => {
                    let spec = CyclotomicSpec::new(m);
                    eprintln!("q^(1/2) of order {m}, N = ord(q^4) = {}", spec.ord_q4());
                    jw_json(&CyclotomicField::new(m), *n)?
                }
            };
            emit(cli, &text, &value)?;
        }
        Cmd::Nf { element } => {
            let x = parse_element(element)?;
            emit(cli, &x.to_string(), &json!(x))?;
        }
        Cmd::Hopf { op, element } => {
            let x = parse_element(element)?;
            match op {
                HopfOp::Coproduct => {
                    let d = coproduct(&x);
                    emit(cli, &d.to_string(), &serde_json::to_value(&d)?)?
                }
                HopfOp::Counit => {
                    let e = counit(&x);
                    emit(cli, &e.to_string(), &json!(e))?
                }
                HopfOp::Antipode => {
                    let s = antipode(&x);
                    emit(cli, &s.to_string(), &json!(s))?
                }
            }
        }
        Cmd::Hh0 { element } => {
            let x = parse_element(element)?;
            let cert = tau(&x, cli.degree.unwrap_or(2));
            let text = format!("{:?} (certificate checks: {})", cert.verdict, cert.verify());
            emit(cli, &text, &serde_json::to_value(&cert)?)?;
        }
        Cmd::Cut { diagram, pos } => {
            let src = match diagram.strip_prefix('@') {
                Some(path) => fs::read_to_string(path).with_context(|| format!("reading {path}"))?,
                None => diagram.clone(),
            };
            let t: StatedTangle = serde_json::from_str(&src).context("stated diagram JSON")?;
            let cut = cut_state_sum(&t, *pos)?;
            emit(cli, &cut.to_string(), &serde_json::to_value(&cut)?)?;
        }
        Cmd::Verify { selector, n, seed, list } => {
            let registry = Registry::default();
            if *list {
                for c in registry.iter() {
                    println!("{:<14} {}", c.name(), c.description());
                }
                return Ok(true);
            }
            let mut cfg = RunConfig::default();
            if let Some(r) = cli.ring {
                cfg.rings = vec![r];
            }
            if let Some(d) = cli.degree {
                cfg.degree = d;
            }
            if let Some(k) = cli.kmax {
                if k == 0 {
                    bail!("--kmax must be positive");
                }
                cfg.kmax = k;
            }
            cfg.n = *n;
            if let Some(s) = seed {
                cfg.seed = *s;
            }
            let report = registry.run(selector, &cfg)?;
            let mut lines = Vec::new();
            for r in &report.checks {
                lines.push(format!(
                    "{} {:<14} {:>9.1} ms  {}",
                    if r.passed() { "PASS" } else { "FAIL" },
                    r.name,
                    r.wall_ms,
                    r.summary
                ));
            }
            let text = lines.join("\n");
            emit(cli, &text, &serde_json::to_value(&report)?)?;
            return Ok(report.all_passed);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(RingMode::Cyclotomic(0)) = cli.ring {
        eprintln!("error: cyclotomic m must be at least 1");
        return ExitCode::from(2);
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
