//! Seeded, platform-independent generation of test matrices.
//!
//! The generator is SplitMix64: state advances by the odd constant
//! `0x9E3779B97F4A7C15` and each output is finalized with two xor-shift
//! multiplications (`0xBF58476D1CE4E5B9`, `0x94D049BB133111EB`). Floats in
//! `[-1, 1]` come from the top 53 bits, so generated matrices are
//! byte-identical across platforms for a fixed seed. Independent streams
//! are derived by seeding a child generator from the parent (`split`).

use alloc::vec::Vec;

use crate::dual_quaternion::DualQuaternion;
use crate::matrix::{orthonormalize_columns, DQMatrix, DQVector};
use crate::qmatrix::QMatrix;
use crate::quaternion::Quaternion;

/// SplitMix64 pseudo-random generator.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform on `[-1, 1]` from the top 53 bits.
    pub fn next_unit(&mut self) -> f64 {
        let u01 = (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
        2.0 * u01 - 1.0
    }

    /// Integer in `0..bound`.
    pub fn next_below(&mut self, bound: usize) -> usize {
        debug_assert!(bound > 0);
        (self.next_u64() % bound as u64) as usize
    }

    /// Derive an independent child stream.
    pub fn split(&mut self) -> SplitMix64 {
        SplitMix64::new(self.next_u64())
    }
}

pub fn quaternion(rng: &mut SplitMix64) -> Quaternion {
    Quaternion::new(rng.next_unit(), rng.next_unit(), rng.next_unit(), rng.next_unit())
}

pub fn dual_quaternion(rng: &mut SplitMix64) -> DualQuaternion {
    DualQuaternion::new(quaternion(rng), quaternion(rng))
}

/// Dense quaternion matrix with entries uniform on `[-1, 1]`.
pub fn qmatrix(rng: &mut SplitMix64, rows: usize, cols: usize) -> QMatrix {
    QMatrix::from_fn(rows, cols, |_, _| quaternion(rng))
}

/// Hermitian quaternion matrix.
pub fn hermitian_qmatrix(rng: &mut SplitMix64, m: usize) -> QMatrix {
    qmatrix(rng, m, m).hermitian_part().expect("square")
}

/// General dual quaternion matrix.
pub fn general(rng: &mut SplitMix64, rows: usize, cols: usize) -> DQMatrix {
    DQMatrix::from_fn(rows, cols, |_, _| dual_quaternion(rng))
}

/// Hermitian dual quaternion matrix (both parts Hermitian).
pub fn hermitian(rng: &mut SplitMix64, m: usize) -> DQMatrix {
    DQMatrix::from_parts(&hermitian_qmatrix(rng, m), &hermitian_qmatrix(rng, m))
        .expect("matching dims")
}

/// Infinitesimal matrix `εB` with a dense random `B`.
pub fn infinitesimal(rng: &mut SplitMix64, rows: usize, cols: usize) -> DQMatrix {
    DQMatrix::from_infinitesimal(&qmatrix(rng, rows, cols))
}

/// Infinitesimal Hermitian matrix `εB` with Hermitian `B`.
pub fn infinitesimal_hermitian(rng: &mut SplitMix64, m: usize) -> DQMatrix {
    DQMatrix::from_infinitesimal(&hermitian_qmatrix(rng, m))
}

/// Hermitian pair `(A, A + εE)` whose difference is infinitesimal and
/// Hermitian.
pub fn eps_perturb_pair(rng: &mut SplitMix64, m: usize) -> (DQMatrix, DQMatrix) {
    let a = hermitian(rng, m);
    let e = hermitian_qmatrix(rng, m);
    let b = DQMatrix::from_parts(
        &a.standard_part(),
        &a.infinitesimal_part().add(&e).expect("matching dims"),
    )
    .expect("matching dims");
    (a, b)
}

/// Random quaternion unitary matrix from orthonormalized random columns.
pub fn quaternion_unitary(rng: &mut SplitMix64, m: usize) -> QMatrix {
    loop {
        let g = DQMatrix::from_standard(&qmatrix(rng, m, m));
        if let Ok(u) = orthonormalize_columns(&g) {
            return u.standard_part();
        }
    }
}

/// Hermitian pair sharing a standard part with repeated-eigenvalue blocks:
/// `A_st = B_st = W diag(λ₁ I_{k₁}, …, λ_r I_{k_r}) W*` with distinct `λᵢ`
/// and independent random Hermitian infinitesimal parts.
pub fn clustered_herm_pair(
    rng: &mut SplitMix64,
    m: usize,
    max_block: usize,
) -> (DQMatrix, DQMatrix) {
    let mut sizes: Vec<usize> = Vec::new();
    let mut left = m;
    while left > 0 {
        let k = 1 + rng.next_below(max_block.min(left));
        sizes.push(k);
        left -= k;
    }
    // Distinct block eigenvalues separated by at least 0.2.
    let r = sizes.len();
    let mut lambdas = Vec::with_capacity(r);
    for i in 0..r {
        lambdas.push((r - i) as f64 + 0.4 * rng.next_unit());
    }
    let w = quaternion_unitary(rng, m);
    let mut d = QMatrix::zeros(m, m);
    let mut pos = 0;
    for (size, lam) in sizes.iter().zip(lambdas.iter()) {
        for _ in 0..*size {
            d[(pos, pos)] = Quaternion::from_real(*lam);
            pos += 1;
        }
    }
    let st = w
        .matmul(&d)
        .expect("square")
        .matmul(&w.conj_transpose())
        .expect("square")
        .hermitian_part()
        .expect("square");
    let a = DQMatrix::from_parts(&st, &hermitian_qmatrix(rng, m)).expect("matching dims");
    let b = DQMatrix::from_parts(&st, &hermitian_qmatrix(rng, m)).expect("matching dims");
    (a, b)
}

/// Random dual quaternion vector with unit norm (appreciable by
/// construction).
pub fn unit_vector(rng: &mut SplitMix64, n: usize) -> DQVector {
    loop {
        let v = DQVector::new((0..n).map(|_| dual_quaternion(rng)).collect()).expect("n > 0");
        let norm = v.norm2();
        if norm.st > 0.1 {
            let inv = norm.inverse().expect("appreciable");
            return v.scale_right(DualQuaternion::from_dual_number(inv));
        }
    }
}
