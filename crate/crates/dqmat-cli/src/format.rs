//! The DQM text format for dual quaternion matrices.
//!
//! ```text
//! # optional comment lines start with '#'
//! DQM <rows> <cols>
//! st.w st.x st.y st.z in.w in.x in.y in.z     (one entry per line,
//! ...                                          rows·cols lines, row-major)
//! ```
//!
//! Reals are written with Rust's shortest round-trip decimal formatting, so
//! `parse(write(A)) == A` bit for bit.

use std::fmt::Write as _;
use std::path::Path;

use anyhow::{bail, Context, Result};
use dqmat::{DQMatrix, DualQuaternion, Quaternion};

pub const MAGIC: &str = "DQM";

/// Render a matrix in DQM format. `comments` become leading `#` lines.
pub fn write_dqm(a: &DQMatrix, comments: &[&str]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "{MAGIC} {} {}", a.rows(), a.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let q = a[(i, j)];
            let _ = writeln!(
                out,
                "{} {} {} {} {} {} {} {}",
                q.st.w, q.st.x, q.st.y, q.st.z, q.eps.w, q.eps.x, q.eps.y, q.eps.z
            );
        }
    }
    out
}

/// Parse DQM text into a matrix.
pub fn parse_dqm(text: &str) -> Result<DQMatrix> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));

    let header = lines.next().context("missing DQM header")?;
    let mut parts = header.split_whitespace();
    let magic = parts.next().context("empty header")?;
    if magic != MAGIC {
        bail!("bad magic {magic:?}, expected {MAGIC:?}");
    }
    let rows: usize = parts.next().context("missing row count")?.parse().context("row count")?;
    let cols: usize = parts.next().context("missing col count")?.parse().context("col count")?;
    if parts.next().is_some() {
        bail!("trailing tokens in header");
    }
    if rows == 0 || cols == 0 {
        bail!("dimensions must be at least 1x1, got {rows}x{cols}");
    }

    let mut entries = Vec::with_capacity(rows * cols);
    for (idx, line) in lines.enumerate() {
        if entries.len() == rows * cols {
            bail!("more than {} entry lines", rows * cols);
        }
        let nums: Vec<f64> = line
            .split_whitespace()
            .map(|tok| tok.parse::<f64>().with_context(|| format!("entry {idx}: bad real {tok:?}")))
            .collect::<Result<_>>()?;
        if nums.len() != 8 {
            bail!("entry {idx}: expected 8 reals, got {}", nums.len());
        }
        if nums.iter().any(|x| !x.is_finite()) {
            bail!("entry {idx}: non-finite value");
        }
        entries.push(DualQuaternion::new(
            Quaternion::new(nums[0], nums[1], nums[2], nums[3]),
            Quaternion::new(nums[4], nums[5], nums[6], nums[7]),
        ));
    }
    if entries.len() != rows * cols {
        bail!("expected {} entries, got {}", rows * cols, entries.len());
    }
    Ok(DQMatrix::from_fn(rows, cols, |i, j| entries[i * cols + j]))
}

pub fn read_dqm_file(path: &Path) -> Result<DQMatrix> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_dqm(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn write_dqm_file(path: &Path, a: &DQMatrix, comments: &[&str]) -> Result<()> {
    std::fs::write(path, write_dqm(a, comments))
        .with_context(|| format!("writing {}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use dqmat::random::{self, SplitMix64};

    fn bits_equal(a: &DQMatrix, b: &DQMatrix) -> bool {
        if a.dims() != b.dims() {
            return false;
        }
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                let (p, q) = (a[(i, j)], b[(i, j)]);
                let comp = [
                    (p.st.w, q.st.w),
                    (p.st.x, q.st.x),
                    (p.st.y, q.st.y),
                    (p.st.z, q.st.z),
                    (p.eps.w, q.eps.w),
                    (p.eps.x, q.eps.x),
                    (p.eps.y, q.eps.y),
                    (p.eps.z, q.eps.z),
                ];
                if comp.iter().any(|(x, y)| x.to_bits() != y.to_bits()) {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn round_trip_is_bit_exact() {
        let mut rng = SplitMix64::new(0xF11E);
        for trial in 0..100 {
            let m = 1 + trial % 5;
            let n = 1 + (trial / 5) % 4;
            let a = random::general(&mut rng, m, n);
            let text = write_dqm(&a, &["round trip"]);
            let b = parse_dqm(&text).unwrap();
            assert!(bits_equal(&a, &b), "trial {trial}");
        }
    }

    #[test]
    fn parser_rejects_malformed_input() {
        assert!(parse_dqm("").is_err());
        assert!(parse_dqm("XXX 1 1\n0 0 0 0 0 0 0 0\n").is_err());
        assert!(parse_dqm("DQM 0 1\n").is_err());
        assert!(parse_dqm("DQM 1 1\n0 0 0 0 0 0 0\n").is_err());
        assert!(parse_dqm("DQM 1 1\n0 0 0 0 0 0 0 inf\n").is_err());
        assert!(parse_dqm("DQM 2 1\n0 0 0 0 0 0 0 0\n").is_err());
        assert!(parse_dqm("DQM 1 1\n0 0 0 0 0 0 0 0\n1 1 1 1 1 1 1 1\n").is_err());
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let text = "# header\n\nDQM 1 1\n# entry next\n1 -0 0.5 0 0 0 0 3\n";
        let a = parse_dqm(text).unwrap();
        assert_eq!(a[(0, 0)].st.w, 1.0);
        assert_eq!(a[(0, 0)].st.y, 0.5);
        assert_eq!(a[(0, 0)].eps.z, 3.0);
        assert!(a[(0, 0)].st.x.to_bits() == (-0.0f64).to_bits());
    }
}
