//! Implementations behind the CLI subcommands. Each returns the rendered
//! output plus an exit code: 0 success/holds, 1 inequality violated,
//! 2 usage/parse/precondition problems (raised as errors by `main`).

use std::path::Path;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::ValueEnum;
use serde::Serialize;

use dqmat::decomp::{dq_hermitian_eig, dq_svd, spectral_norm};
use dqmat::inequalities::{
    hermitian_part_vs_singular, hermitian_trace_check, hoffman_wielandt_hermitian,
    hoffman_wielandt_singular, ky_fan_partial_trace_check, von_neumann_check, InequalityReport,
};
use dqmat::matrix::{DQMatrix, DQVector};
use dqmat::random::{self, SplitMix64};
use dqmat::DualNumber;

use crate::format::{read_dqm_file, write_dqm_file};
use crate::report::RunReport;
use crate::verify::{run_all, VerifyConfig};

pub struct CmdOutput {
    pub text: String,
    pub code: i32,
}

impl CmdOutput {
    fn ok(text: String) -> Self {
        CmdOutput { text, code: 0 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NormKind {
    Fro,
    Spec,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckName {
    /// von Neumann trace bound on singular values.
    Vn,
    /// Trace bound on Hermitian eigenvalues.
    VnHerm,
    /// Hoffman-Wielandt bound on singular values.
    Hw,
    /// Hoffman-Wielandt bound on Hermitian eigenvalues.
    HwHerm,
    /// Partial-trace bound (diagonal vs largest eigenvalues).
    Kyfan,
    /// Hermitian-part eigenvalues vs singular values, per index.
    Lem43,
    /// Cauchy-Schwarz on vectors (files flattened row-major).
    Cauchy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    General,
    Hermitian,
    Infinitesimal,
    EpsPerturbPair,
    ClusteredHermPair,
}

fn dual_pair(d: DualNumber) -> (f64, f64) {
    (d.st, d.eps)
}

// ── eig ───────────────────────────────────────────────────────────────

#[derive(Serialize)]
struct EigOutput {
    eigenvalues: Vec<(f64, f64)>,
}

pub fn cmd_eig(file: &Path, cluster_tol: Option<f64>, json: bool) -> Result<CmdOutput> {
    let a = read_dqm_file(file)?;
    let eig = dq_hermitian_eig(&a, cluster_tol).map_err(|e| anyhow!("{e}"))?;
    if json {
        let out = EigOutput { eigenvalues: eig.lambdas.iter().map(|&l| dual_pair(l)).collect() };
        Ok(CmdOutput::ok(serde_json::to_string_pretty(&out)?))
    } else {
        let parts: Vec<String> = eig.lambdas.iter().map(|l| l.to_string()).collect();
        Ok(CmdOutput::ok(parts.join(" ")))
    }
}

// ── svd ───────────────────────────────────────────────────────────────

#[derive(Serialize)]
struct SvdOutput {
    sigmas: Vec<(f64, f64)>,
    appreciable_rank: usize,
    rank: usize,
    s: usize,
}

pub fn cmd_svd(file: &Path, cluster_tol: Option<f64>, json: bool) -> Result<CmdOutput> {
    let a = read_dqm_file(file)?;
    let svd = dq_svd(&a, cluster_tol).map_err(|e| anyhow!("{e}"))?;
    let s = svd.sigmas.len();
    if json {
        let out = SvdOutput {
            sigmas: svd.sigmas.iter().map(|&x| dual_pair(x)).collect(),
            appreciable_rank: svd.appreciable_rank,
            rank: svd.rank,
            s,
        };
        Ok(CmdOutput::ok(serde_json::to_string_pretty(&out)?))
    } else {
        let parts: Vec<String> = svd.sigmas.iter().map(|x| x.to_string()).collect();
        Ok(CmdOutput::ok(format!(
            "{}; r={} t={} s={}",
            parts.join(" "),
            svd.appreciable_rank,
            svd.rank,
            s
        )))
    }
}

// ── norm ──────────────────────────────────────────────────────────────

pub fn cmd_norm(file: &Path, kind: NormKind, json: bool) -> Result<CmdOutput> {
    let a = read_dqm_file(file)?;
    let value = match kind {
        NormKind::Fro => a.frobenius_norm(),
        NormKind::Spec => spectral_norm(&a).map_err(|e| anyhow!("{e}"))?,
    };
    if json {
        Ok(CmdOutput::ok(serde_json::to_string_pretty(&serde_json::json!({
            "kind": match kind { NormKind::Fro => "fro", NormKind::Spec => "spec" },
            "value": dual_pair(value),
        }))?))
    } else {
        Ok(CmdOutput::ok(value.to_string()))
    }
}

// ── check ─────────────────────────────────────────────────────────────

#[derive(Serialize)]
struct ReportJson {
    lhs: (f64, f64),
    rhs: (f64, f64),
    slack: (f64, f64),
    holds: bool,
    condition_met: bool,
}

impl From<&InequalityReport> for ReportJson {
    fn from(r: &InequalityReport) -> Self {
        ReportJson {
            lhs: dual_pair(r.lhs),
            rhs: dual_pair(r.rhs),
            slack: dual_pair(r.slack),
            holds: r.holds,
            condition_met: r.condition_met,
        }
    }
}

#[derive(Serialize)]
struct CheckOutput {
    name: String,
    reports: Vec<ReportJson>,
    holds: bool,
    condition_met: bool,
}

fn render_reports(name: &str, reports: &[(String, InequalityReport)], json: bool) -> CmdOutput {
    let holds = reports.iter().all(|(_, r)| r.holds);
    let condition_met = reports.iter().all(|(_, r)| r.condition_met);
    let code = if !condition_met {
        2
    } else if holds {
        0
    } else {
        1
    };
    let text = if json {
        let out = CheckOutput {
            name: name.to_string(),
            reports: reports.iter().map(|(_, r)| ReportJson::from(r)).collect(),
            holds,
            condition_met,
        };
        serde_json::to_string_pretty(&out).expect("serializable")
    } else {
        let mut lines = Vec::new();
        for (label, r) in reports {
            lines.push(format!(
                "{name}{label}: lhs={} rhs={} slack={} holds={} condition_met={}",
                r.lhs, r.rhs, r.slack, r.holds, r.condition_met
            ));
        }
        lines.join("\n")
    };
    CmdOutput { text, code }
}

fn flatten(a: &DQMatrix) -> DQVector {
    let mut entries = Vec::with_capacity(a.rows() * a.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            entries.push(a[(i, j)]);
        }
    }
    DQVector::new(entries).expect("nonempty matrix")
}

pub fn cmd_check(
    name: CheckName,
    file_a: &Path,
    file_b: Option<&Path>,
    k: Option<usize>,
    json: bool,
) -> Result<CmdOutput> {
    let a = read_dqm_file(file_a)?;
    let b = file_b.map(read_dqm_file).transpose()?;
    let need_b = |b: Option<DQMatrix>| b.context("this check needs two matrix files");

    let reports: Vec<(String, InequalityReport)> = match name {
        CheckName::Vn => {
            let b = need_b(b)?;
            vec![(String::new(), von_neumann_check(&a, &b).map_err(|e| anyhow!("{e}"))?)]
        }
        CheckName::VnHerm => {
            let b = need_b(b)?;
            vec![(String::new(), hermitian_trace_check(&a, &b).map_err(|e| anyhow!("{e}"))?)]
        }
        CheckName::Hw => {
            let b = need_b(b)?;
            vec![(String::new(), hoffman_wielandt_singular(&a, &b).map_err(|e| anyhow!("{e}"))?)]
        }
        CheckName::HwHerm => {
            let b = need_b(b)?;
            vec![(String::new(), hoffman_wielandt_hermitian(&a, &b).map_err(|e| anyhow!("{e}"))?)]
        }
        CheckName::Kyfan => {
            let ks: Vec<usize> = match k {
                Some(k) => vec![k],
                None => (1..=a.rows()).collect(),
            };
            let mut reps = Vec::new();
            for k in ks {
                let rep = ky_fan_partial_trace_check(&a, k).map_err(|e| anyhow!("{e}"))?;
                reps.push((format!("[k={k}]"), rep));
            }
            reps
        }
        CheckName::Lem43 => hermitian_part_vs_singular(&a)
            .map_err(|e| anyhow!("{e}"))?
            .into_iter()
            .enumerate()
            .map(|(i, r)| (format!("[i={}]", i + 1), r))
            .collect(),
        CheckName::Cauchy => {
            let b = need_b(b)?;
            let u = flatten(&a);
            let v = flatten(&b);
            if u.len() != v.len() {
                bail!("vectors have different lengths ({} vs {})", u.len(), v.len());
            }
            let lhs = u.inner_product(&v).map_err(|e| anyhow!("{e}"))?.magnitude();
            let rhs = u.norm2() * v.norm2();
            let slack = rhs - lhs;
            let rep = InequalityReport {
                lhs,
                rhs,
                slack,
                holds: dqmat::inequalities::compare_tolerant(
                    slack,
                    DualNumber::ZERO,
                    dqmat::inequalities::DEFAULT_ETA_ST,
                    dqmat::inequalities::DEFAULT_ETA_IN,
                ) != std::cmp::Ordering::Less,
                condition_met: true,
            };
            vec![(String::new(), rep)]
        }
    };
    let label = match name {
        CheckName::Vn => "vn",
        CheckName::VnHerm => "vn-herm",
        CheckName::Hw => "hw",
        CheckName::HwHerm => "hw-herm",
        CheckName::Kyfan => "kyfan",
        CheckName::Lem43 => "lem43",
        CheckName::Cauchy => "cauchy",
    };
    Ok(render_reports(label, &reports, json))
}

// ── gen ───────────────────────────────────────────────────────────────

pub fn cmd_gen(
    kind: GenKind,
    m: usize,
    n: Option<usize>,
    seed: u64,
    out: &Path,
    out2: Option<&Path>,
) -> Result<CmdOutput> {
    if m == 0 {
        bail!("m must be at least 1");
    }
    let n = n.unwrap_or(m);
    if n == 0 {
        bail!("n must be at least 1");
    }
    let square_only = matches!(
        kind,
        GenKind::Hermitian | GenKind::EpsPerturbPair | GenKind::ClusteredHermPair
    );
    if square_only && n != m {
        bail!("this kind generates square matrices; pass matching --m/--n or omit --n");
    }
    let mut rng = SplitMix64::new(seed);
    let kind_name = match kind {
        GenKind::General => "general",
        GenKind::Hermitian => "hermitian",
        GenKind::Infinitesimal => "infinitesimal",
        GenKind::EpsPerturbPair => "eps-perturb-pair",
        GenKind::ClusteredHermPair => "clustered-herm-pair",
    };
    let comment = format!("kind={kind_name} m={m} n={n} seed={seed}");

    let pair = match kind {
        GenKind::General => (random::general(&mut rng, m, n), None),
        GenKind::Hermitian => (random::hermitian(&mut rng, m), None),
        GenKind::Infinitesimal => (random::infinitesimal(&mut rng, m, n), None),
        GenKind::EpsPerturbPair => {
            let (a, b) = random::eps_perturb_pair(&mut rng, m);
            (a, Some(b))
        }
        GenKind::ClusteredHermPair => {
            let (a, b) = random::clustered_herm_pair(&mut rng, m, 4);
            (a, Some(b))
        }
    };

    let mut written = vec![out.display().to_string()];
    write_dqm_file(out, &pair.0, &[&comment])?;
    match (pair.1, out2) {
        (Some(b), Some(path2)) => {
            write_dqm_file(path2, &b, &[&comment, "second matrix of the pair"])?;
            written.push(path2.display().to_string());
        }
        (Some(_), None) => bail!("{kind_name} produces two files; pass --out2"),
        (None, Some(_)) => bail!("{kind_name} produces a single file; drop --out2"),
        (None, None) => {}
    }
    Ok(CmdOutput::ok(written.iter().map(|p| format!("wrote {p}")).collect::<Vec<_>>().join("\n")))
}

// ── verify ────────────────────────────────────────────────────────────

pub fn cmd_verify(
    seed: u64,
    trials: usize,
    sizes: Option<Vec<usize>>,
    json: bool,
    inject_failure: bool,
) -> Result<CmdOutput> {
    if trials == 0 {
        bail!("--trials must be positive");
    }
    if let Some(list) = &sizes {
        if list.is_empty() || list.iter().any(|&s| s == 0 || s > 32) {
            bail!("--sizes entries must be in 1..=32");
        }
    }
    let cfg = VerifyConfig::new(seed, trials, sizes);
    let start = Instant::now();
    let checks = run_all(&cfg, inject_failure);
    let wall_ms = start.elapsed().as_millis();
    let report = RunReport::new(format!("verify --trials {trials}"), seed, checks, wall_ms);
    let code = if report.pass { 0 } else { 1 };
    let text = if json { report.to_json() } else { report.render_text() };
    Ok(CmdOutput { text, code })
}
