use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand};

use dqmat_cli::commands::{
    cmd_check, cmd_eig, cmd_gen, cmd_norm, cmd_svd, cmd_verify, CheckName, CmdOutput, GenKind,
    NormKind,
};

/// Dual quaternion matrix toolkit: decompositions, norms, and inequality
/// suites over DQM text files.
///
/// Exit codes: 0 success (inequalities hold), 1 an inequality was violated,
/// 2 usage, parse, or precondition errors (for `check hw` this includes the
/// difference not being appreciable).
#[derive(Parser)]
#[command(name = "dqmat", version, about)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Eigenvalues of a Hermitian DQM file, nonascending "(st, in)" pairs.
    Eig {
        file: PathBuf,
        /// Standard-part gaps at or below this are one multiplicity block.
        #[arg(long)]
        cluster_tol: Option<f64>,
        #[arg(long)]
        json: bool,
    },
    /// Singular values plus the appreciable rank r, rank t, and s = min(m, n).
    Svd {
        file: PathBuf,
        #[arg(long)]
        cluster_tol: Option<f64>,
        #[arg(long)]
        json: bool,
    },
    /// Frobenius or spectral norm, printed as a dual number.
    Norm {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: NormKind,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate one inequality on matrix files.
    Check {
        #[arg(value_enum)]
        name: CheckName,
        file_a: PathBuf,
        /// Second operand; required for vn, vn-herm, hw, hw-herm, cauchy.
        file_b: Option<PathBuf>,
        /// For kyfan: check a single k instead of every k.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Write seeded random DQM files.
    Gen {
        #[arg(long, value_enum)]
        kind: GenKind,
        #[arg(long)]
        m: usize,
        /// Defaults to m.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        /// Second output file for pair kinds.
        #[arg(long)]
        out2: Option<PathBuf>,
    },
    /// Run the full verification suite.
    Verify {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Base instance count per suite.
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        /// Comma-separated matrix sizes, e.g. "2,3,4,8".
        #[arg(long)]
        sizes: Option<String>,
        #[arg(long)]
        json: bool,
        /// Force one failing check (test hook).
        #[arg(long, hide = true)]
        inject_failure: bool,
    },
}

fn dispatch(cmd: Cmd) -> Result<CmdOutput> {
    match cmd {
        Cmd::Eig { file, cluster_tol, json } => cmd_eig(&file, cluster_tol, json),
        Cmd::Svd { file, cluster_tol, json } => cmd_svd(&file, cluster_tol, json),
        Cmd::Norm { file, kind, json } => cmd_norm(&file, kind, json),
        Cmd::Check { name, file_a, file_b, k, json } => {
            cmd_check(name, &file_a, file_b.as_deref(), k, json)
        }
        Cmd::Gen { kind, m, n, seed, out, out2 } => {
            cmd_gen(kind, m, n, seed, &out, out2.as_deref())
        }
        Cmd::Verify { seed, trials, sizes, json, inject_failure } => {
            let sizes = sizes
                .map(|s| {
                    s.split(',')
                        .map(|tok| tok.trim().parse::<usize>())
                        .collect::<Result<Vec<_>, _>>()
                })
                .transpose()?;
            cmd_verify(seed, trials, sizes, json, inject_failure)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.cmd) {
        Ok(out) => {
            if !out.text.is_empty() {
                println!("{}", out.text);
            }
            ExitCode::from(out.code as u8)
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
