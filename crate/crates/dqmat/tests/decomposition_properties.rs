//! Randomized structural properties of the dual decompositions.

use dqmat::decomp::{dq_hermitian_eig, dq_svd, spectral_norm};
use dqmat::dual::DualNumber;
use dqmat::dual_quaternion::DualQuaternion;
use dqmat::inequalities::{compare_tolerant, DEFAULT_ETA_IN, DEFAULT_ETA_ST};
use dqmat::matrix::DQMatrix;
use dqmat::random::{self, SplitMix64};
use dqmat::solvers::quat_svd;

const SIZES: &[usize] = &[1, 2, 3, 4, 6, 8];

fn eig_residual(a: &DQMatrix, eig: &dqmat::HermEig) -> (f64, f64) {
    let m = a.rows();
    let mut sig = DQMatrix::zeros(m, m);
    for i in 0..m {
        sig[(i, i)] = DualQuaternion::from_dual_number(eig.lambdas[i]);
    }
    let rec = eig.u.matmul(&sig).unwrap().matmul(&eig.u.conj_transpose()).unwrap();
    let diff = rec.sub(a).unwrap();
    (diff.standard_part().frobenius_norm(), diff.infinitesimal_part().frobenius_norm())
}

fn svd_residual(a: &DQMatrix, svd: &dqmat::DualSvd) -> (f64, f64) {
    let (m, n) = a.dims();
    let mut sig = DQMatrix::zeros(m, n);
    for (i, &s) in svd.sigmas.iter().enumerate() {
        sig[(i, i)] = DualQuaternion::from_dual_number(s);
    }
    let rec = svd.u.matmul(&sig).unwrap().matmul(&svd.v.conj_transpose()).unwrap();
    let diff = rec.sub(a).unwrap();
    (diff.standard_part().frobenius_norm(), diff.infinitesimal_part().frobenius_norm())
}

fn unitarity(u: &DQMatrix) -> f64 {
    let eye = DQMatrix::identity(u.cols());
    let diff = u.conj_transpose().matmul(u).unwrap().sub(&eye).unwrap();
    diff.standard_part().frobenius_norm().max(diff.infinitesimal_part().frobenius_norm())
}

fn hermitian_instance(rng: &mut SplitMix64, kind: usize, m: usize) -> DQMatrix {
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

#[test]
fn eig_reconstruction_and_unitarity() {
    let mut rng = SplitMix64::new(0xE16);
    for kind in 0..3 {
        for trial in 0..40 {
            let m = SIZES[trial % SIZES.len()];
            let a = hermitian_instance(&mut rng, kind, m);
            let eig = dq_hermitian_eig(&a, None).unwrap();
            let tol = 1e-8 * (1.0 + a.frobenius_norm().st);
            let (rs, ri) = eig_residual(&a, &eig);
            assert!(rs <= tol && ri <= tol, "kind {kind} m {m}: residual {rs} {ri}");
            assert!(unitarity(&eig.u) <= 1e-8, "kind {kind} m {m}");
            for w in eig.lambdas.windows(2) {
                assert!(w[0].compare(w[1]) != std::cmp::Ordering::Less);
            }
        }
    }
}

#[test]
fn svd_reconstruction_unitarity_and_classification() {
    let mut rng = SplitMix64::new(0x51D);
    for kind in 0..4 {
        for trial in 0..40 {
            let m = SIZES[trial % SIZES.len()];
            let n = if kind == 1 || kind == 3 { m } else { SIZES[(trial + 2) % SIZES.len()] };
            let a = svd_instance(&mut rng, kind, m, n);
            let svd = dq_svd(&a, None).unwrap();
            let tol = 1e-8 * (1.0 + a.frobenius_norm().st);
            let (rs, ri) = svd_residual(&a, &svd);
            assert!(rs <= tol && ri <= tol, "kind {kind} {m}x{n}: residual {rs} {ri}");
            assert!(unitarity(&svd.u) <= 1e-8);
            assert!(unitarity(&svd.v) <= 1e-8);

            // Nonascending total order and the r/t classification.
            for w in svd.sigmas.windows(2) {
                assert!(w[0].compare(w[1]) != std::cmp::Ordering::Less);
            }
            let (r, t) = (svd.appreciable_rank, svd.rank);
            assert!(r <= t && t <= svd.sigmas.len());
            for (i, s) in svd.sigmas.iter().enumerate() {
                if i < r {
                    assert!(s.is_appreciable() && s.st > 0.0);
                } else if i < t {
                    assert!(!s.is_appreciable() && s.eps > 0.0);
                } else {
                    assert!(s.st == 0.0 && s.eps.abs() <= 1e-9);
                }
            }

            // Standard parts match the quaternion SVD of the standard part.
            let oracle = quat_svd(&a.standard_part()).unwrap();
            for (s, o) in svd.sigmas.iter().zip(oracle.sigmas.iter()) {
                assert!((s.st - o).abs() <= 1e-9 * (1.0 + o), "{} vs {}", s.st, o);
            }
        }
    }
}

#[test]
fn trace_matches_eigenvalue_sum() {
    let mut rng = SplitMix64::new(0x7A2);
    for kind in 0..3 {
        for trial in 0..30 {
            let m = SIZES[trial % SIZES.len()];
            let a = hermitian_instance(&mut rng, kind, m);
            let eig = dq_hermitian_eig(&a, None).unwrap();
            let tr = a.trace().unwrap();
            let sum = eig.lambdas.iter().fold(DualNumber::ZERO, |acc, &l| acc + l);
            let scale = 1.0 + a.frobenius_norm().st;
            assert!((tr.st.re() - sum.st).abs() <= 1e-8 * scale);
            assert!((tr.eps.re() - sum.eps).abs() <= 1e-8 * scale);
            assert!(tr.st.imag_norm() <= 1e-10 * scale);
            assert!(tr.eps.imag_norm() <= 1e-10 * scale);
        }
    }
}

#[test]
fn frobenius_norm_squared_matches_sigma_sum() {
    let mut rng = SplitMix64::new(0xF20);
    for kind in 0..4 {
        for trial in 0..30 {
            let m = SIZES[trial % SIZES.len()];
            let n = if kind == 1 || kind == 3 { m } else { SIZES[(trial + 1) % SIZES.len()] };
            let a = svd_instance(&mut rng, kind, m, n);
            let svd = dq_svd(&a, None).unwrap();
            let f = a.frobenius_norm();
            let fsq = f * f;
            let ssq = svd
                .sigmas
                .iter()
                .fold(DualNumber::ZERO, |acc, &s| acc + s * s);
            let scale = 1.0 + fsq.st + fsq.eps.abs();
            assert!((fsq.st - ssq.st).abs() <= 1e-8 * scale);
            assert!((fsq.eps - ssq.eps).abs() <= 1e-8 * scale);
        }
    }
}

#[test]
fn eigenvalues_invariant_under_unitary_conjugation() {
    let mut rng = SplitMix64::new(0x0C4);
    for trial in 0..20 {
        let m = SIZES[1 + trial % (SIZES.len() - 1)];
        let a = random::hermitian(&mut rng, m);
        let w = DQMatrix::from_standard(&random::quaternion_unitary(&mut rng, m));
        let waw = w.matmul(&a).unwrap().matmul(&w.conj_transpose()).unwrap();
        let e1 = dq_hermitian_eig(&a, None).unwrap();
        let e2 = dq_hermitian_eig(&waw, None).unwrap();
        let scale = 1.0 + a.frobenius_norm().st;
        for (x, y) in e1.lambdas.iter().zip(e2.lambdas.iter()) {
            assert!((x.st - y.st).abs() <= 1e-8 * scale);
            assert!((x.eps - y.eps).abs() <= 1e-8 * scale);
        }
    }
}

#[test]
fn spectral_norm_bounds_random_directions() {
    let mut rng = SplitMix64::new(0x5BE);
    for trial in 0..10 {
        let m = 2 + trial % 5;
        let n = 2 + (trial + 1) % 5;
        let a = random::general(&mut rng, m, n);
        let sigma1 = spectral_norm(&a).unwrap();
        let margin = DualNumber::new(1e-8 * (1.0 + sigma1.st), 1e-8 * (1.0 + sigma1.eps.abs()));
        let bound = sigma1 + margin;
        for _ in 0..100 {
            let x = random::unit_vector(&mut rng, n);
            let ax = a.mul_vec(&x).unwrap().norm2();
            assert!(
                compare_tolerant(ax, bound, DEFAULT_ETA_ST, DEFAULT_ETA_IN)
                    != std::cmp::Ordering::Greater,
                "‖Ax‖ = {ax} exceeds σ₁ = {sigma1}"
            );
        }

        // The bound is attained at the leading right singular vector.
        let svd = dq_svd(&a, None).unwrap();
        let v1 = svd.v.column(0);
        let av = a.mul_vec(&v1).unwrap().norm2();
        assert!((av.st - sigma1.st).abs() <= 1e-8 * (1.0 + sigma1.st));
        assert!((av.eps - sigma1.eps).abs() <= 1e-8 * (1.0 + sigma1.eps.abs()));
    }
}

#[test]
fn norm_preserved_by_partially_unitary_maps() {
    let mut rng = SplitMix64::new(0x321);
    for trial in 0..20 {
        let m = 3 + trial % 4;
        let cols = 1 + trial % m;
        // Orthonormalize random dual columns, keep the first `cols`.
        let g = random::general(&mut rng, m, m);
        let q = match dqmat::matrix::orthonormalize_columns(&g) {
            Ok(q) => q,
            Err(_) => continue,
        };
        let u = DQMatrix::from_fn(m, cols, |i, j| q[(i, j)]);
        assert!(u.is_partially_unitary(1e-10).unwrap());
        for _ in 0..10 {
            let appreciable = rng.next_below(2) == 0;
            let x = if appreciable {
                random::unit_vector(&mut rng, cols)
            } else {
                DQMatrix::from_infinitesimal(
                    &random::general(&mut rng, cols, 1).infinitesimal_part(),
                )
                .column(0)
            };
            let ux = u.mul_vec(&x).unwrap();
            let n1 = ux.norm2();
            let n2 = x.norm2();
            assert!((n1.st - n2.st).abs() <= 1e-10 * (1.0 + n2.st));
            assert!((n1.eps - n2.eps).abs() <= 1e-10 * (1.0 + n2.eps.abs()));
        }
    }
}
