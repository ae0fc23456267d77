//! The verification suite: one runner per criterion, each producing a
//! pass/fail [`CheckLine`]. Runners draw from independent SplitMix64
//! streams derived from the configured seed, so reports are deterministic
//! for a fixed `(command, seed)` pair.

use std::cmp::Ordering;

use dqmat::decomp::{dq_hermitian_eig, dq_svd, spectral_norm};
use dqmat::dual::DualNumber;
use dqmat::dual_quaternion::DualQuaternion;
use dqmat::error::DualError;
use dqmat::inequalities::{
    compare_tolerant, hermitian_part_vs_singular, hermitian_trace_check,
    hoffman_wielandt_hermitian, hoffman_wielandt_singular, ky_fan_partial_trace_check,
    ordered_product_dominance, von_neumann_check,
};
use dqmat::matrix::{orthonormalize_columns, DQMatrix};
use dqmat::quaternion::Quaternion;
use dqmat::random::{self, SplitMix64};
use dqmat::solvers::{quat_hermitian_eig, quat_svd};

use crate::format::{parse_dqm, write_dqm};
use crate::report::{CheckLine, SlackTracker};

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub seed: u64,
    pub trials: usize,
    pub sizes: Vec<usize>,
}

pub fn default_sizes() -> Vec<usize> {
    vec![2, 3, 4, 6, 8, 12, 16]
}

impl VerifyConfig {
    pub fn new(seed: u64, trials: usize, sizes: Option<Vec<usize>>) -> Self {
        VerifyConfig { seed, trials, sizes: sizes.unwrap_or_else(default_sizes) }
    }

    fn stream(&self, salt: u64) -> SplitMix64 {
        SplitMix64::new(self.seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
    }

    fn sizes_capped(&self, cap: usize) -> Vec<usize> {
        let v: Vec<usize> = self.sizes.iter().copied().filter(|&s| s <= cap).collect();
        if v.is_empty() {
            vec![cap.min(4)]
        } else {
            v
        }
    }
}

/// Run every criterion in order.
pub fn run_all(cfg: &VerifyConfig, inject_failure: bool) -> Vec<CheckLine> {
    let mut checks = vec![
        criterion_scalar_laws(cfg),
        criterion_quaternion_identity(cfg),
        criterion_decomposition_residuals(cfg),
        criterion_trace_identities(cfg),
        criterion_majorization_suite(cfg),
        criterion_von_neumann(cfg),
        criterion_hw_singular(cfg),
        criterion_hw_hermitian(cfg),
        criterion_spectral_norm(cfg),
        criterion_file_format(cfg),
    ];
    if inject_failure {
        let mut t = SlackTracker::new("injected-failure");
        t.assert_that(false);
        t.set_detail("test hook".to_string());
        checks.push(t.finish());
    }
    checks
}

fn rand_dual_mixed(rng: &mut SplitMix64) -> DualNumber {
    match rng.next_below(4) {
        0 => DualNumber::new(0.0, rng.next_unit()),
        1 => DualNumber::new(rng.next_unit(), 0.0),
        _ => DualNumber::new(rng.next_unit(), rng.next_unit()),
    }
}

fn rel_close(a: DualNumber, b: DualNumber, tol: f64) -> bool {
    (a.st - b.st).abs() <= tol * b.st.abs().max(1.0)
        && (a.eps - b.eps).abs() <= tol * b.eps.abs().max(1.0)
}

// ── criterion 1: dual scalar laws ────────────────────────────────────

pub fn criterion_scalar_laws(cfg: &VerifyConfig) -> CheckLine {
    let mut rng = cfg.stream(1);
    let mut t = SlackTracker::new("dual-scalar-laws");
    let zero = DualNumber::ZERO;
    let pairs = cfg.trials.saturating_mul(100);
    for _ in 0..pairs {
        let p = rand_dual_mixed(&mut rng);
        let q = rand_dual_mixed(&mut rng);
        let (ap, aq) = (p.abs(), q.abs());

        // (a) nonnegative times nonnegative stays nonnegative.
        t.assert_that((ap * aq).compare(zero) != Ordering::Less);

        // (b) positive times positive is positive when one factor is
        // appreciable.
        if ap.compare(zero) == Ordering::Greater
            && aq.compare(zero) == Ordering::Greater
            && (ap.is_appreciable() || aq.is_appreciable())
        {
            t.assert_that((ap * aq).compare(zero) == Ordering::Greater);
        }

        // (c) |p| = p for nonnegative p, |p| > p otherwise.
        if p.compare(zero) != Ordering::Less {
            t.assert_that(p.abs() == p);
        } else {
            t.assert_that(p.abs().compare(p) == Ordering::Greater);
        }

        // (d) |p| = √(p²) for appreciable p.
        if p.is_appreciable() {
            t.assert_that(rel_close((p * p).sqrt().expect("p² > 0"), p.abs(), 1e-12));
        }

        // (e) √(pq) = √p √q for positive appreciable factors.
        if ap.is_appreciable() && aq.is_appreciable() {
            let lhs = (ap * aq).sqrt().expect("positive");
            let rhs = ap.sqrt().expect("positive") * aq.sqrt().expect("positive");
            t.assert_that(rel_close(lhs, rhs, 1e-12));
        }

        // (f) monotonicity: p - q ≥ 0 implies √p - √q ≥ 0.
        if aq.is_appreciable() && aq.compare(zero) == Ordering::Greater {
            let big = aq + ap;
            let diff = big.sqrt().expect("positive") - aq.sqrt().expect("positive");
            t.assert_that(diff.compare(zero) != Ordering::Less);
        }

        // Closed forms round-trip to 1e-12 relative: √ then square, and
        // the inverse identity q·q⁻¹ = 1 (exact in the ε-algebra).
        if ap.is_appreciable() {
            let r = ap.sqrt().expect("positive");
            t.assert_that(rel_close(r * r, ap, 1e-12));
        }
        if p.is_appreciable() {
            let unit = p * p.inverse().expect("appreciable");
            t.assert_that(rel_close(unit, DualNumber::ONE, 1e-12));
        }
    }

    // √ of a nonzero infinitesimal must fail, every time.
    for _ in 0..cfg.trials.max(1) {
        let x = loop {
            let x = rng.next_unit().abs();
            if x > 0.0 {
                break x;
            }
        };
        t.assert_that(DualNumber::new(0.0, x).sqrt() == Err(DualError::NotRepresentable));
    }
    t.set_detail(format!("{pairs} random pairs"));
    t.finish()
}

// ── criterion 2: quaternion identity ─────────────────────────────────

pub fn criterion_quaternion_identity(cfg: &VerifyConfig) -> CheckLine {
    let mut rng = cfg.stream(2);
    let mut t = SlackTracker::new("quaternion-identity");
    let pairs = cfg.trials.saturating_mul(100);
    let mut worst = 0.0f64;
    for _ in 0..pairs {
        let p = random::quaternion(&mut rng);
        let q = random::quaternion(&mut rng);
        let sym = p * q.conj() + q * p.conj();
        let residue = sym.imag_norm().max((sym.re() - 2.0 * p.dot(q)).abs());
        worst = worst.max(residue);
        t.assert_that(residue < 1e-13);
    }
    // Full multiplication table, exactly.
    let units = [Quaternion::ONE, Quaternion::I, Quaternion::J, Quaternion::K];
    let expected = [
        [(0, 1.0), (1, 1.0), (2, 1.0), (3, 1.0)],
        [(1, 1.0), (0, -1.0), (3, 1.0), (2, -1.0)],
        [(2, 1.0), (3, -1.0), (0, -1.0), (1, 1.0)],
        [(3, 1.0), (2, 1.0), (1, -1.0), (0, -1.0)],
    ];
    for (i, row) in expected.iter().enumerate() {
        for (j, &(unit, sign)) in row.iter().enumerate() {
            t.assert_that(units[i] * units[j] == units[unit].scale(sign));
        }
    }
    t.set_detail(format!("worst residue {worst:.2e}"));
    t.finish()
}

// ── criterion 3: decomposition residuals ─────────────────────────────

fn eig_instance(rng: &mut SplitMix64, kind: usize, m: usize) -> DQMatrix {
    match kind {
        0 => random::hermitian(rng, m),
        1 => random::infinitesimal_hermitian(rng, m),
        _ => random::clustered_herm_pair(rng, m, 4).0,
    }
}

fn svd_instance(rng: &mut SplitMix64, kind: usize, m: usize, n: usize) -> DQMatrix {
    match kind {
        0 => random::general(rng, m, n),
        1 => random::hermitian(rng, m),
        2 => random::infinitesimal(rng, m, n),
        _ => random::clustered_herm_pair(rng, m, 4).0,
    }
}

fn recon_scale(a: &DQMatrix) -> f64 {
    let f = a.frobenius_norm();
    1.0 + f.st + f.eps.abs()
}

fn eig_residuals(a: &DQMatrix, eig: &dqmat::HermEig) -> (f64, f64) {
    let m = a.rows();
    let mut sig = DQMatrix::zeros(m, m);
    for i in 0..m {
        sig[(i, i)] = DualQuaternion::from_dual_number(eig.lambdas[i]);
    }
    let rec = eig.u.matmul(&sig).unwrap().matmul(&eig.u.conj_transpose()).unwrap();
    let d = rec.sub(a).unwrap();
    (d.standard_part().frobenius_norm(), d.infinitesimal_part().frobenius_norm())
}

fn svd_residuals(a: &DQMatrix, svd: &dqmat::DualSvd) -> (f64, f64) {
    let (m, n) = a.dims();
    let mut sig = DQMatrix::zeros(m, n);
    for (i, &s) in svd.sigmas.iter().enumerate() {
        sig[(i, i)] = DualQuaternion::from_dual_number(s);
    }
    let rec = svd.u.matmul(&sig).unwrap().matmul(&svd.v.conj_transpose()).unwrap();
    let d = rec.sub(a).unwrap();
    (d.standard_part().frobenius_norm(), d.infinitesimal_part().frobenius_norm())
}

fn unitarity_residual(u: &DQMatrix) -> f64 {
    let eye = DQMatrix::identity(u.cols());
    let d = u.conj_transpose().matmul(u).unwrap().sub(&eye).unwrap();
    d.standard_part().frobenius_norm().max(d.infinitesimal_part().frobenius_norm())
}

pub fn criterion_decomposition_residuals(cfg: &VerifyConfig) -> CheckLine {
    let mut rng = cfg.stream(3);
    let mut t = SlackTracker::new("decomposition-residuals");
    let per_kind = (cfg.trials / 2).max(1);
    let sizes = cfg.sizes_capped(16);
    let mut worst_rel = 0.0f64;

    for kind in 0..3 {
        for trial in 0..per_kind {
            let m = sizes[trial % sizes.len()];
            let a = eig_instance(&mut rng, kind, m);
            let tol = 1e-8 * recon_scale(&a);
            match dq_hermitian_eig(&a, None) {
                Ok(eig) => {
                    let (rs, ri) = eig_residuals(&a, &eig);
                    let uu = unitarity_residual(&eig.u);
                    worst_rel = worst_rel.max(rs.max(ri).max(uu) / tol * 1e-8);
                    t.assert_that(rs <= tol && ri <= tol && uu <= tol);
                    let oracle = quat_hermitian_eig(&a.standard_part().hermitian_part().unwrap())
                        .expect("hermitian");
                    t.assert_that(eig.lambdas.iter().zip(oracle.lambdas.iter()).all(
                        |(lam, ora)| (lam.st - ora).abs() <= 1e-9 * (1.0 + ora.abs()),
                    ));
                }
                Err(_) => t.assert_that(false),
            }
        }
    }

    for kind in 0..4 {
        for trial in 0..per_kind {
            let m = sizes[trial % sizes.len()];
            let n = if kind == 1 || kind == 3 { m } else { sizes[(trial + 2) % sizes.len()] };
            let a = svd_instance(&mut rng, kind, m, n);
            let tol = 1e-8 * recon_scale(&a);
            match dq_svd(&a, None) {
                Ok(svd) => {
                    let (rs, ri) = svd_residuals(&a, &svd);
                    let uu = unitarity_residual(&svd.u).max(unitarity_residual(&svd.v));
                    worst_rel = worst_rel.max(rs.max(ri).max(uu) / tol * 1e-8);
                    t.assert_that(rs <= tol && ri <= tol && uu <= tol);
                    let oracle = quat_svd(&a.standard_part()).expect("svd");
                    t.assert_that(svd.sigmas.iter().zip(oracle.sigmas.iter()).all(
                        |(sig, ora)| (sig.st - ora).abs() <= 1e-9 * (1.0 + ora),
                    ));
                }
                Err(_) => t.assert_that(false),
            }
        }
    }
    t.set_detail(format!("{per_kind} per kind, worst residual {worst_rel:.2e} (rel)"));
    t.finish()
}

// ── criterion 4: trace identities ────────────────────────────────────

pub fn criterion_trace_identities(cfg: &VerifyConfig) -> CheckLine {
    let mut rng = cfg.stream(4);
    let mut t = SlackTracker::new("trace-identities");
    let per_kind = (cfg.trials / 2).max(1);
    let sizes = cfg.sizes_capped(16);

    for kind in 0..3 {
        for trial in 0..per_kind {
            let m = sizes[trial % sizes.len()];
            let a = eig_instance(&mut rng, kind, m);
            let scale = recon_scale(&a);
            let lambdas = match dq_hermitian_eig(&a, None) {
                Ok(e) => e.lambdas,
                Err(_) => {
                    t.assert_that(false);
                    continue;
                }
            };
            let tr = a.trace().unwrap();
            let sum = lambdas.iter().fold(DualNumber::ZERO, |acc, &l| acc + l);
            t.assert_that(
                (tr.st.re() - sum.st).abs() <= 1e-8 * scale
                    && (tr.eps.re() - sum.eps).abs() <= 1e-8 * scale,
            );
        }
    }

    for kind in 0..4 {
        for trial in 0..per_kind {
            let m = sizes[trial % sizes.len()];
            let n = if kind == 1 || kind == 3 { m } else { sizes[(trial + 1) % sizes.len()] };
            let a = svd_instance(&mut rng, kind, m, n);
            let sigmas = match dq_svd(&a, None) {
                Ok(s) => s.sigmas,
                Err(_) => {
                    t.assert_that(false);
                    continue;
                }
            };
            let f = a.frobenius_norm();
            let fsq = f * f;
            let ssq = sigmas.iter().fold(DualNumber::ZERO, |acc, &s| acc + s * s);
            let scale = 1.0 + fsq.st + fsq.eps.abs();
            t.assert_that(
                (fsq.st - ssq.st).abs() <= 1e-8 * scale
                    && (fsq.eps - ssq.eps).abs() <= 1e-8 * scale,
            );
        }
    }
    t.finish()
}

// ── criterion 5: majorization suite ────────────────────────────────────────

pub fn criterion_majorization_suite(cfg: &VerifyConfig) -> CheckLine {
    let mut rng = cfg.stream(5);
    let mut t = SlackTracker::new("majorization-suite");

    // Ordered-product dominance with a majorization-preserving
    // construction: repeatedly average adjacent entries of a sorted y.
    for _ in 0..cfg.trials {
        let m = 2 + rng.next_below(7);
        let mut y: Vec<DualNumber> = (0..m).map(|_| rand_dual_mixed(&mut rng)).collect();
        y.sort_by(|a, b| b.compare(*a));
        let mut z = y.clone();
        for _ in 0..1 + rng.next_below(4) {
            let i = rng.next_below(m - 1);
            let mean = (z[i] + z[i + 1]) * 0.5;
            z[i] = mean;
            z[i + 1] = mean;
        }
        let mut x: Vec<DualNumber> = (0..m).map(|_| rand_dual_mixed(&mut rng)).collect();
        x.sort_by(|a, b| b.compare(*a));
        match ordered_product_dominance(&x, &y, &z) {
            Ok(rep) => t.record(&rep),
            Err(_) => t.assert_that(false),
        }
    }

    // Partial-trace bound for every k.
    let sizes = cfg.sizes_capped(8);
    for trial in 0..cfg.trials {
        let m = sizes[trial % sizes.len()];
        let a = eig_instance(&mut rng, trial % 3, m);
        for k in 1..=m {
            match ky_fan_partial_trace_check(&a, k) {
                Ok(rep) => t.record(&rep),
                Err(_) => t.assert_that(false),
            }
        }
    }

    // Hermitian-part bound per index.
    for trial in 0..cfg.trials {
        let m = sizes[trial % sizes.len()];
        let a = match trial % 2 {
            0 => random::general(&mut rng, m, m),
            _ => random::infinitesimal(&mut rng, m, m),
        };
        match hermitian_part_vs_singular(&a) {
            Ok(reps) => reps.iter().for_each(|rep| t.record(rep)),
            Err(_) => t.assert_that(false),
        }
    }
    t.finish()
}

// ── criterion 6: von Neumann bounds ──────────────────────────────────

pub fn criterion_von_neumann(cfg: &VerifyConfig) -> CheckLine {
    let mut rng = cfg.stream(6);
    let mut t = SlackTracker::new("von-neumann");
    let sizes = cfg.sizes_capped(12);

    for trial in 0..cfg.trials {
        let m = sizes[trial % sizes.len()];
        let n = sizes[(trial + 3) % sizes.len()];
        let a = match trial % 3 {
            0 => random::general(&mut rng, m, n),
            1 => random::infinitesimal(&mut rng, m, n),
            _ => random::general(&mut rng, m, n),
        };
        let equality_case = trial % 10 == 0;
        let b = if equality_case {
            a.clone()
        } else if trial % 3 == 2 {
            random::infinitesimal(&mut rng, m, n)
        } else {
            random::general(&mut rng, m, n)
        };
        match von_neumann_check(&a, &b) {
            Ok(rep) => {
                t.record(&rep);
                if equality_case {
                    t.assert_that(rep.slack.st.abs() <= 1e-8 && rep.slack.eps.abs() <= 1e-8);
                }
            }
            Err(_) => t.assert_that(false),
        }
    }

    for trial in 0..cfg.trials {
        let m = sizes[trial % sizes.len()];
        let a = match trial % 3 {
            0 => random::hermitian(&mut rng, m),
            1 => random::infinitesimal_hermitian(&mut rng, m),
            _ => random::clustered_herm_pair(&mut rng, m, 4).0,
        };
        let equality_case = trial % 10 == 0;
        let b = if equality_case { a.clone() } else { random::hermitian(&mut rng, m) };
        match hermitian_trace_check(&a, &b) {
            Ok(rep) => {
                t.record(&rep);
                if equality_case {
                    t.assert_that(rep.slack.st.abs() <= 1e-8 && rep.slack.eps.abs() <= 1e-8);
                }
            }
            Err(_) => t.assert_that(false),
        }
    }
    t.finish()
}

// ── criterion 7: Hoffman-Wielandt, singular values ───────────────────

pub fn criterion_hw_singular(cfg: &VerifyConfig) -> CheckLine {
    let mut rng = cfg.stream(7);
    let mut t = SlackTracker::new("hoffman-wielandt-singular");
    let sizes = cfg.sizes_capped(12);

    for trial in 0..cfg.trials {
        let m = sizes[trial % sizes.len()];
        let n = sizes[(trial + 2) % sizes.len()];
        let a = random::general(&mut rng, m, n);
        let b = match trial % 3 {
            0 => random::general(&mut rng, m, n),
            1 => a.add(&random::general(&mut rng, m, n)).unwrap(),
            _ => random::infinitesimal(&mut rng, m, n),
        };
        match hoffman_wielandt_singular(&a, &b) {
            Ok(rep) => {
                t.assert_that(rep.condition_met);
                t.record(&rep);
            }
            Err(_) => t.assert_that(false),
        }
    }

    // Both-infinitesimal reduction, checked against the quaternion
    // kernels applied to the ε-factors.
    for trial in 0..(cfg.trials / 10).max(1) {
        let m = sizes[trial % sizes.len()];
        let n = sizes[(trial + 1) % sizes.len()];
        let ap = random::qmatrix(&mut rng, m, n);
        let bp = random::qmatrix(&mut rng, m, n);
        let rep = hoffman_wielandt_singular(
            &DQMatrix::from_infinitesimal(&ap),
            &DQMatrix::from_infinitesimal(&bp),
        )
        .expect("same dims");
        t.assert_that(!rep.condition_met);
        let sa = quat_svd(&ap).unwrap().sigmas;
        let sb = quat_svd(&bp).unwrap().sigmas;
        let lhs: f64 = sa
            .iter()
            .zip(sb.iter())
            .map(|(x, y)| (x - y) * (x - y))
            .sum::<f64>()
            .sqrt();
        let rhs = ap.sub(&bp).unwrap().frobenius_norm();
        t.assert_that((rep.lhs.eps - lhs).abs() <= 1e-8 * (1.0 + lhs));
        t.assert_that((rep.rhs.eps - rhs).abs() <= 1e-8 * (1.0 + rhs));
        // The reduced inequality is the quaternion one; it must hold.
        t.assert_that(rep.holds);
        t.note_slack(rep.slack);
    }
    t.finish()
}

// ── criterion 8: Hoffman-Wielandt, Hermitian eigenvalues ─────────────

pub fn criterion_hw_hermitian(cfg: &VerifyConfig) -> CheckLine {
    let mut rng = cfg.stream(8);
    let mut t = SlackTracker::new("hoffman-wielandt-hermitian");
    let sizes = cfg.sizes_capped(12);
    let mut adversarial = 0usize;

    for trial in 0..cfg.trials {
        let m = sizes[trial % sizes.len()].max(2);
        let (a, b) = match trial % 3 {
            0 => {
                adversarial += 1;
                random::clustered_herm_pair(&mut rng, m, 4)
            }
            1 => random::eps_perturb_pair(&mut rng, m),
            _ => {
                if trial % 6 == 2 {
                    (
                        random::infinitesimal_hermitian(&mut rng, m),
                        random::infinitesimal_hermitian(&mut rng, m),
                    )
                } else {
                    (random::hermitian(&mut rng, m), random::hermitian(&mut rng, m))
                }
            }
        };
        match hoffman_wielandt_hermitian(&a, &b) {
            Ok(rep) => t.record(&rep),
            Err(_) => t.assert_that(false),
        }
    }
    t.assert_that(adversarial * 10 >= cfg.trials * 3);

    // Worked 2×2 example: slack exactly (0, 0) to 1e-10.
    let mut a = DQMatrix::identity(2);
    a[(0, 1)] = DualQuaternion::new(Quaternion::ZERO, Quaternion::I);
    a[(1, 0)] = DualQuaternion::new(Quaternion::ZERO, -Quaternion::I);
    let rep = hoffman_wielandt_hermitian(&a, &DQMatrix::identity(2)).expect("hermitian");
    t.assert_that(rep.slack.st.abs() <= 1e-10 && rep.slack.eps.abs() <= 1e-10);
    t.record(&rep);

    t.set_detail(format!("{adversarial} shared-standard-part pairs"));
    t.finish()
}

// ── criterion 9: spectral norm ───────────────────────────────────────

pub fn criterion_spectral_norm(cfg: &VerifyConfig) -> CheckLine {
    let mut rng = cfg.stream(9);
    let mut t = SlackTracker::new("spectral-norm");
    let sizes = cfg.sizes_capped(8);
    let matrices = (cfg.trials / 200).max(1);

    for trial in 0..matrices {
        let m = sizes[trial % sizes.len()];
        let n = sizes[(trial + 1) % sizes.len()];
        let a = match trial % 3 {
            0 => random::general(&mut rng, m, n),
            1 => random::infinitesimal(&mut rng, m, n),
            _ => random::general(&mut rng, m, n),
        };
        let sigma1 = match spectral_norm(&a) {
            Ok(s) => s,
            Err(_) => {
                t.assert_that(false);
                continue;
            }
        };
        // Randomized bound: no direction beats σ₁ by more than 1e-8
        // relative in either component.
        for _ in 0..1000 {
            let x = random::unit_vector(&mut rng, n);
            let ax = a.mul_vec(&x).unwrap().norm2();
            t.assert_that(compare_tolerant(ax, sigma1, 1e-8, 1e-8) != Ordering::Greater);
            t.note_slack(sigma1 - ax);
        }
        // Attained at the leading right singular vector.
        let svd = dq_svd(&a, None).expect("svd");
        let av = a.mul_vec(&svd.v.column(0)).unwrap().norm2();
        t.assert_that(
            (av.st - sigma1.st).abs() <= 1e-8 * (1.0 + sigma1.st)
                && (av.eps - sigma1.eps).abs() <= 1e-8 * (1.0 + sigma1.eps.abs()),
        );
    }

    // Norm preservation under partially unitary maps.
    for trial in 0..(cfg.trials / 10).max(1) {
        let m = 2 + trial % 6;
        let cols = 1 + trial % m;
        let g = random::general(&mut rng, m, m);
        let q = match orthonormalize_columns(&g) {
            Ok(q) => q,
            Err(_) => continue,
        };
        let u = DQMatrix::from_fn(m, cols, |i, j| q[(i, j)]);
        let x = if trial % 2 == 0 {
            random::unit_vector(&mut rng, cols)
        } else {
            DQMatrix::from_infinitesimal(&random::qmatrix(&mut rng, cols, 1)).column(0)
        };
        let n1 = u.mul_vec(&x).unwrap().norm2();
        let n2 = x.norm2();
        t.assert_that(
            (n1.st - n2.st).abs() <= 1e-10 * (1.0 + n2.st)
                && (n1.eps - n2.eps).abs() <= 1e-10 * (1.0 + n2.eps.abs()),
        );
    }
    t.finish()
}

// ── criterion 10: file format and generator determinism ─────────────

pub fn criterion_file_format(cfg: &VerifyConfig) -> CheckLine {
    let mut rng = cfg.stream(10);
    let mut t = SlackTracker::new("file-format-cli");

    // Bit-exact round trips.
    for trial in 0..100 {
        let m = 1 + trial % 5;
        let n = 1 + (trial / 5) % 4;
        let a = random::general(&mut rng, m, n);
        let text = write_dqm(&a, &[]);
        match parse_dqm(&text) {
            Ok(b) => {
                let same = (0..m).all(|i| {
                    (0..n).all(|j| {
                        let (p, q) = (a[(i, j)], b[(i, j)]);
                        [
                            (p.st.w, q.st.w),
                            (p.st.x, q.st.x),
                            (p.st.y, q.st.y),
                            (p.st.z, q.st.z),
                            (p.eps.w, q.eps.w),
                            (p.eps.x, q.eps.x),
                            (p.eps.y, q.eps.y),
                            (p.eps.z, q.eps.z),
                        ]
                        .iter()
                        .all(|(x, y)| x.to_bits() == y.to_bits())
                    })
                });
                t.assert_that(same);
            }
            Err(_) => t.assert_that(false),
        }
    }

    // Byte-identical generation for a fixed seed.
    for kind in 0..5 {
        let gen = |seed: u64| -> String {
            let mut r = SplitMix64::new(seed);
            let a = match kind {
                0 => random::general(&mut r, 3, 4),
                1 => random::hermitian(&mut r, 4),
                2 => random::infinitesimal(&mut r, 3, 3),
                3 => random::eps_perturb_pair(&mut r, 3).1,
                _ => random::clustered_herm_pair(&mut r, 5, 3).0,
            };
            write_dqm(&a, &["determinism probe"])
        };
        t.assert_that(gen(cfg.seed) == gen(cfg.seed));
        t.assert_that(gen(cfg.seed) != gen(cfg.seed ^ 0xDEAD_BEEF));
    }
    t.finish()
}
