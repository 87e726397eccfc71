//! The 60-instance benchmark: sizes 10 to 35, ten seeds each.
//!
//! Before solving, every regenerated instance is hashed and compared with
//! the checked-in `data/suite/SHA256SUMS`, so a change in the generator
//! aborts the run instead of silently producing a different table.

use std::path::Path;
use std::process::Command;
use std::time::Instant;

use sha2::{Digest, Sha256};

use crate::approx::{fptas, Epsilon};
use crate::error::{Error, Result};
use crate::exact::solve_dp;
use crate::instance::Instance;
use crate::instgen::{format_instance, suite, suite_file_name};
use crate::models::{emit_model, ModelKind, RcVariant};

const SUITE_SUMS: &str = include_str!("../data/suite/SHA256SUMS");

pub const DEFAULT_EPS: [&str; 5] = ["0.1", "0.25", "0.5", "1", "2"];

/// Largest instance sent to an external solver.
pub const LP_ROUNDTRIP_MAX_N: usize = 15;

/// An external solver invocation: `sh -c '<command> "$1"' sh <model.lp>`.
/// The last number printed on stdout is taken as the optimal objective.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpRoundtrip {
    pub command: String,
    pub model: ModelKind,
}

#[derive(Debug, Clone)]
pub struct BenchOptions {
    /// `(column label, value)` pairs.
    pub eps: Vec<(String, Epsilon)>,
    /// Restrict to these sizes / seeds; `None` runs everything.
    pub sizes: Option<Vec<usize>>,
    pub seeds: Option<Vec<u64>>,
    pub lp_roundtrip: Option<LpRoundtrip>,
}

impl Default for BenchOptions {
    fn default() -> Self {
        Self {
            eps: DEFAULT_EPS
                .iter()
                .map(|s| (s.to_string(), s.parse().expect("valid default")))
                .collect(),
            sizes: None,
            seeds: None,
            lp_roundtrip: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub seed: u64,
    pub strip_width: u64,
    pub opt: u64,
    pub shape: (usize, usize),
    pub sequence: String,
    pub dp_ms: f64,
    /// One `(height, milliseconds)` per epsilon.
    pub fptas: Vec<(u64, f64)>,
    /// Objective reported by the external solver, when one was run.
    pub lp_opt: Option<i64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub eps_labels: Vec<String>,
    pub rows: Vec<BenchRow>,
    pub lp_roundtrip: bool,
}

impl BenchReport {
    pub fn to_csv(&self) -> String {
        self.render(true)
    }

    /// The CSV without timing columns; identical across reruns.
    pub fn to_csv_without_times(&self) -> String {
        self.render(false)
    }

    fn render(&self, times: bool) -> String {
        let mut header = vec!["n", "seed", "b", "opt", "rows", "cols", "sequence"]
            .into_iter()
            .map(String::from)
            .collect::<Vec<_>>();
        if times {
            header.push("dp_ms".into());
        }
        for label in &self.eps_labels {
            header.push(format!("fptas_{label}"));
            if times {
                header.push(format!("fptas_{label}_ms"));
            }
        }
        if self.lp_roundtrip {
            header.push("lp_opt".into());
        }
        let mut out = header.join(",");
        out.push('\n');
        for row in &self.rows {
            let mut cells = vec![
                row.n.to_string(),
                row.seed.to_string(),
                row.strip_width.to_string(),
                row.opt.to_string(),
                row.shape.0.to_string(),
                row.shape.1.to_string(),
                row.sequence.clone(),
            ];
            if times {
                cells.push(format!("{:.3}", row.dp_ms));
            }
            for &(height, ms) in &row.fptas {
                cells.push(height.to_string());
                if times {
                    cells.push(format!("{ms:.3}"));
                }
            }
            if self.lp_roundtrip {
                cells.push(row.lp_opt.map(|v| v.to_string()).unwrap_or_default());
            }
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// Expected `(file name, digest)` pairs in suite order.
pub fn expected_suite_hashes() -> Vec<(String, String)> {
    SUITE_SUMS
        .lines()
        .filter_map(|line| {
            let (hash, name) = line.split_once("  ")?;
            Some((name.trim().to_string(), hash.to_string()))
        })
        .collect()
}

/// Regenerates the suite and checks it against the pinned hashes.
pub fn verified_suite() -> Result<Vec<(usize, u64, Instance)>> {
    let expected = expected_suite_hashes();
    let instances = suite();
    if expected.len() != instances.len() {
        return Err(Error::SuiteMismatch(format!(
            "{} pinned hashes for {} instances",
            expected.len(),
            instances.len()
        )));
    }
    for ((n, seed, inst), (name, hash)) in instances.iter().zip(&expected) {
        let file = suite_file_name(*n, *seed);
        if &file != name {
            return Err(Error::SuiteMismatch(format!("expected {name}, generated {file}")));
        }
        let actual = sha256_hex(format_instance(inst).as_bytes());
        if &actual != hash {
            return Err(Error::SuiteMismatch(format!(
                "{file}: hash {actual}, pinned {hash}"
            )));
        }
    }
    Ok(instances)
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

pub fn run_bench(opts: &BenchOptions) -> Result<BenchReport> {
    let selected = verified_suite()?.into_iter().filter(|(n, seed, _)| {
        opts.sizes.as_ref().is_none_or(|s| s.contains(n))
            && opts.seeds.as_ref().is_none_or(|s| s.contains(seed))
    });

    let mut rows = Vec::new();
    for (n, seed, inst) in selected {
        let start = Instant::now();
        let sol = solve_dp(&inst)?;
        let dp_ms = elapsed_ms(start);

        let mut heights = Vec::with_capacity(opts.eps.len());
        for (_, eps) in &opts.eps {
            let start = Instant::now();
            let approx = fptas(&inst, *eps)?;
            heights.push((approx.objective, elapsed_ms(start)));
        }

        let lp_opt = match &opts.lp_roundtrip {
            Some(rt) if n <= LP_ROUNDTRIP_MAX_N => {
                let value = run_external(rt, &inst)?;
                if value != sol.objective as i64 {
                    return Err(Error::ExternalSolver(format!(
                        "{}: solver reported {value}, DP optimum is {}",
                        suite_file_name(n, seed),
                        sol.objective
                    )));
                }
                Some(value)
            }
            _ => None,
        };

        rows.push(BenchRow {
            n,
            seed,
            strip_width: inst.strip_width(),
            opt: sol.objective,
            shape: sol.shape,
            sequence: sol.rc_sequence.to_string(),
            dp_ms,
            fptas: heights,
            lp_opt,
        });
    }
    Ok(BenchReport {
        eps_labels: opts.eps.iter().map(|(label, _)| label.clone()).collect(),
        rows,
        lp_roundtrip: opts.lp_roundtrip.is_some(),
    })
}

/// Emits the model for `inst`, runs the external command on it and returns
/// the reported objective rounded to an integer.
pub fn run_external(rt: &LpRoundtrip, inst: &Instance) -> Result<i64> {
    let doc = emit_model(rt.model, RcVariant::Capped, inst);
    let file = tempfile::Builder::new().suffix(".lp").tempfile()?;
    std::fs::write(file.path(), &doc.text)?;
    solve_external(&rt.command, file.path())
}

fn solve_external(command: &str, model: &Path) -> Result<i64> {
    let output = Command::new("sh")
        .arg("-c")
        .arg(format!("{command} \"$1\""))
        .arg("sh")
        .arg(model)
        .output()?;
    if !output.status.success() {
        return Err(Error::ExternalSolver(format!(
            "`{command}` exited with {}: {}",
            output.status,
            String::from_utf8_lossy(&output.stderr).trim()
        )));
    }
    let stdout = String::from_utf8_lossy(&output.stdout);
    let value = stdout
        .split(|c: char| c.is_whitespace() || c == '=' || c == ':' || c == ',')
        .filter_map(|tok| tok.parse::<f64>().ok())
        .rfind(|v| v.is_finite())
        .ok_or_else(|| Error::ExternalSolver(format!("no objective value in output of `{command}`")))?;
    let rounded = value.round();
    if (value - rounded).abs() > 1e-6 {
        return Err(Error::ExternalSolver(format!(
            "objective {value} is not integral"
        )));
    }
    Ok(rounded as i64)
}
