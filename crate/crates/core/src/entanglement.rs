//! Concurrence and entanglement of formation for every bipartition, with the
//! Wootters spin-flip construction as an independent matrix-level oracle.
//!
//! Entanglement of formation is always derived from the concurrence through
//! `E = H(1/2 + sqrt(1 - C²)/2)`; see [`crate::printed`] for the originally
//! published expressions, which disagree with these concurrences.

// only needed when std is not linked
#[allow(unused_imports)]
use num_traits::Float;

use crate::catstates::ModelParams;
use crate::numerics::{
    adjoint, binary_entropy, c, hermitian_eigen, hermitize, kron, matmul, pauli, CMatrix,
    DensityMatrix4, ZERO,
};
use crate::{Error, Result};

const SLACK: f64 = 1e-12;
/// Eigenvalues of ρ at or below this are treated as an exact kernel when forming `√ρ`.
const KERNEL_TOL: f64 = 1e-14;

/// A concurrence in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Concurrence(f64);

impl Concurrence {
    /// Accepts values within `1e-12` of `[0, 1]` and clamps them.
    pub fn new(value: f64) -> Result<Self> {
        if !(-SLACK..=1.0 + SLACK).contains(&value) {
            return Err(Error::domain("concurrence", value, "0 <= C <= 1"));
        }
        Ok(Concurrence(value.clamp(0.0, 1.0)))
    }

    fn clamped(value: f64) -> Self {
        Concurrence(value.clamp(0.0, 1.0))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn squared(self) -> f64 {
        self.0 * self.0
    }

    /// Entanglement of formation of a two-qubit state with this concurrence.
    pub fn eof(self) -> f64 {
        eof_from_concurrence(self.0).expect("concurrence lies in [0, 1]")
    }
}

/// `p^{r²} √(1-p²) √(1-p^{2t²}) / (1 + p² cos mπ)`.
pub fn concurrence_ab(params: &ModelParams) -> Concurrence {
    let value = params.reflected_overlap()
        * params.one_minus_p2().sqrt()
        * params.overlap_complement(2.0 * params.t2()).sqrt()
        / params.norm_factor();
    Concurrence::clamped(value)
}

pub fn concurrence_ae(params: &ModelParams) -> Concurrence {
    concurrence_ab(&params.swapped())
}

/// `(1 - p²) / (1 + p² cos mπ)`; independent of the transmissivity.
pub fn concurrence_a_be(params: &ModelParams) -> Concurrence {
    Concurrence::clamped(params.one_minus_p2() / params.norm_factor())
}

/// `p √(1-p^{2r²}) √(1-p^{2t²}) / (1 + p² cos mπ)`, the B–E pair. This is also
/// the concurrence of the B–C pair in a purification `ABC` of `ρ_AB`.
pub fn concurrence_be(params: &ModelParams) -> Concurrence {
    let value = params.p()
        * params.overlap_complement(2.0 * params.r2()).sqrt()
        * params.overlap_complement(2.0 * params.t2()).sqrt()
        / params.norm_factor();
    Concurrence::clamped(value)
}

/// `H(1/2 + sqrt(1 - c²)/2)`.
pub fn eof_from_concurrence(c: f64) -> Result<f64> {
    let c = Concurrence::new(c)?.value();
    binary_entropy(0.5 + 0.5 * (1.0 - c * c).max(0.0).sqrt())
}

pub fn eof_ab(params: &ModelParams) -> f64 {
    concurrence_ab(params).eof()
}

pub fn eof_ae(params: &ModelParams) -> f64 {
    concurrence_ae(params).eof()
}

pub fn eof_a_be(params: &ModelParams) -> f64 {
    concurrence_a_be(params).eof()
}

pub fn eof_be(params: &ModelParams) -> f64 {
    concurrence_be(params).eof()
}

fn spin_flip() -> CMatrix<4> {
    kron(&pauli(2), &pauli(2))
}

/// Wootters concurrence `max(0, μ1 - μ2 - μ3 - μ4)`, where `μi²` are the
/// eigenvalues of `√ρ ρ̃ √ρ` and `ρ̃ = (σy⊗σy) ρ* (σy⊗σy)`.
///
/// The product is formed in the eigenbasis of ρ, where `√ρ` is diagonal and
/// kernel directions are exactly zero.
pub fn wootters_concurrence(rho: &DensityMatrix4) -> Concurrence {
    let eig = rho.eigen();
    let v = eig.vectors.expect("eigenvectors requested");
    let roots = eig
        .values
        .map(|l| if l > KERNEL_TOL { l.sqrt() } else { 0.0 });

    // W = V† Y V*
    let mut v_conj = v;
    for row in v_conj.iter_mut() {
        for z in row.iter_mut() {
            *z = z.conj();
        }
    }
    let w = matmul(&matmul(&adjoint(&v), &spin_flip()), &v_conj);
    // B = √Λ W √Λ, M = B B†
    let mut b = [[ZERO; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            if roots[i] != 0.0 && roots[j] != 0.0 {
                b[i][j] = w[i][j] * c(roots[i] * roots[j]);
            }
        }
    }
    let m = hermitize(&matmul(&b, &adjoint(&b)));
    let mu = hermitian_eigen(&m, false)
        .expect("B B† is Hermitian")
        .values
        .map(|x| x.max(0.0).sqrt());
    Concurrence::clamped(mu[0] - mu[1] - mu[2] - mu[3])
}
