//! Small dense linear algebra and entropy primitives.
//!
//! Everything here is sized at compile time (2×2, 3×3 and 4×4); the
//! two-qubit basis is ordered `|00⟩, |01⟩, |10⟩, |11⟩` with the first qubit
//! as the most significant index.

mod eigen;
mod entropy;

pub use eigen::{hermitian_eigen, symmetric_eigen, symmetric_eigen3, RealSpectrum, Spectrum};
pub use entropy::{binary_entropy, von_neumann_entropy};
pub(crate) use entropy::qubit_block_entropy;

// only needed when std is not linked
#[allow(unused_imports)]
use num_traits::Float;
use num_complex::Complex;

use crate::{Error, Result};

pub type C64 = Complex<f64>;
pub type CMatrix<const N: usize> = [[C64; N]; N];

pub const HERMITIAN_TOL: f64 = 1e-12;
pub const TRACE_TOL: f64 = 1e-12;
/// Eigenvalues in `[-PSD_TOL, 0)` are roundoff; anything more negative is an error.
pub const PSD_TOL: f64 = 1e-10;

pub(crate) const ZERO: C64 = C64 { re: 0.0, im: 0.0 };
pub(crate) const ONE: C64 = C64 { re: 1.0, im: 0.0 };

pub(crate) fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

pub fn identity<const N: usize>() -> CMatrix<N> {
    let mut m = [[ZERO; N]; N];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = ONE;
    }
    m
}

pub fn matmul<const N: usize>(a: &CMatrix<N>, b: &CMatrix<N>) -> CMatrix<N> {
    let mut out = [[ZERO; N]; N];
    for i in 0..N {
        for k in 0..N {
            let aik = a[i][k];
            if aik == ZERO {
                continue;
            }
            for j in 0..N {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

pub fn adjoint<const N: usize>(a: &CMatrix<N>) -> CMatrix<N> {
    let mut out = [[ZERO; N]; N];
    for i in 0..N {
        for j in 0..N {
            out[j][i] = a[i][j].conj();
        }
    }
    out
}

pub fn kron(a: &CMatrix<2>, b: &CMatrix<2>) -> CMatrix<4> {
    let mut out = [[ZERO; 4]; 4];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    out[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

/// Pauli matrices, with index 0 the identity.
pub fn pauli(index: usize) -> CMatrix<2> {
    let i = C64::new(0.0, 1.0);
    match index {
        0 => identity(),
        1 => [[ZERO, ONE], [ONE, ZERO]],
        2 => [[ZERO, -i], [i, ZERO]],
        3 => [[ONE, ZERO], [ZERO, -ONE]],
        _ => panic!("pauli index {index} out of range"),
    }
}

pub(crate) fn trace<const N: usize>(a: &CMatrix<N>) -> C64 {
    (0..N).map(|i| a[i][i]).fold(ZERO, |acc, x| acc + x)
}

pub(crate) fn hermitian_deviation<const N: usize>(a: &CMatrix<N>) -> f64 {
    let mut worst = 0.0_f64;
    for i in 0..N {
        for j in 0..N {
            worst = worst.max((a[i][j] - a[j][i].conj()).norm());
        }
    }
    worst
}

/// A Hermitian, unit-trace, positive semidefinite `N × N` matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix<const N: usize> {
    entries: CMatrix<N>,
}

pub type DensityMatrix2 = DensityMatrix<2>;
pub type DensityMatrix4 = DensityMatrix<4>;

impl<const N: usize> DensityMatrix<N> {
    pub fn new(entries: CMatrix<N>) -> Result<Self> {
        let deviation = hermitian_deviation(&entries);
        if !(deviation <= HERMITIAN_TOL) {
            return Err(Error::NotHermitian { deviation });
        }
        let tr = trace(&entries);
        if !((tr.re - 1.0).abs() <= TRACE_TOL && tr.im.abs() <= TRACE_TOL) {
            return Err(Error::InvalidDensity {
                reason: "trace differs from one",
                value: tr.re - 1.0,
            });
        }
        let min = hermitian_eigen(&entries, false)?.values[N - 1];
        if min < -PSD_TOL {
            return Err(Error::InvalidDensity {
                reason: "negative eigenvalue",
                value: min,
            });
        }
        Ok(DensityMatrix { entries })
    }

    /// Skips validation; callers guarantee the invariants by construction.
    pub(crate) fn from_entries_unchecked(entries: CMatrix<N>) -> Self {
        DensityMatrix { entries }
    }

    /// `|ψ⟩⟨ψ|` for a (not necessarily normalized) state vector.
    pub fn pure(state: &[C64; N]) -> Result<Self> {
        let norm_sq: f64 = state.iter().map(|z| z.norm_sqr()).sum();
        if !(norm_sq > 0.0) {
            return Err(Error::InvalidDensity {
                reason: "zero state vector",
                value: norm_sq,
            });
        }
        let mut entries = [[ZERO; N]; N];
        for i in 0..N {
            for j in 0..N {
                entries[i][j] = state[i] * state[j].conj() / norm_sq;
            }
        }
        Self::new(entries)
    }

    pub fn maximally_mixed() -> Self {
        let mut entries = [[ZERO; N]; N];
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = c(1.0 / N as f64);
        }
        DensityMatrix { entries }
    }

    pub fn entries(&self) -> &CMatrix<N> {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> C64 {
        self.entries[row][col]
    }

    pub fn spectrum(&self) -> Spectrum<N> {
        hermitian_eigen(&self.entries, false).expect("validated density matrix is Hermitian")
    }

    pub fn eigen(&self) -> Spectrum<N> {
        hermitian_eigen(&self.entries, true).expect("validated density matrix is Hermitian")
    }

    pub fn entropy(&self) -> Result<f64> {
        von_neumann_entropy(self)
    }

    /// `U ρ U†`.
    pub fn conjugated(&self, unitary: &CMatrix<N>) -> Result<Self> {
        let out = matmul(&matmul(unitary, &self.entries), &adjoint(unitary));
        Self::new(hermitize(&out))
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst = 0.0_f64;
        for i in 0..N {
            for j in 0..N {
                worst = worst.max((self.entries[i][j] - other.entries[i][j]).norm());
            }
        }
        worst
    }
}

pub(crate) fn hermitize<const N: usize>(a: &CMatrix<N>) -> CMatrix<N> {
    let mut out = *a;
    for i in 0..N {
        for j in 0..N {
            out[i][j] = (a[i][j] + a[j][i].conj()) * 0.5;
        }
    }
    out
}

impl DensityMatrix2 {
    /// Qubit state `(I + r·σ)/2` for a Bloch vector with `|r| ≤ 1`.
    pub fn from_bloch(r: [f64; 3]) -> Result<Self> {
        let i = C64::new(0.0, 1.0);
        Self::new([
            [c(0.5 * (1.0 + r[2])), (c(r[0]) - i * r[1]) * 0.5],
            [(c(r[0]) + i * r[1]) * 0.5, c(0.5 * (1.0 - r[2]))],
        ])
    }
}

impl DensityMatrix4 {
    pub fn product(first: &DensityMatrix2, second: &DensityMatrix2) -> Self {
        DensityMatrix::from_entries_unchecked(kron(first.entries(), second.entries()))
    }
}

/// Which qubit of a two-qubit state is traced out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    First,
    Second,
}

pub fn partial_trace(rho: &DensityMatrix4, traced: Subsystem) -> DensityMatrix2 {
    let m = rho.entries();
    let mut out = [[ZERO; 2]; 2];
    for a in 0..2 {
        for b in 0..2 {
            out[a][b] = match traced {
                Subsystem::Second => m[2 * a][2 * b] + m[2 * a + 1][2 * b + 1],
                Subsystem::First => m[a][b] + m[2 + a][2 + b],
            };
        }
    }
    DensityMatrix::from_entries_unchecked(hermitize(&out))
}

/// Result of a two-outcome projective measurement on the first qubit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementOutcome {
    pub probabilities: [f64; 2],
    /// States of the second qubit conditioned on each outcome.
    pub conditional_states: [DensityMatrix2; 2],
    /// Set when an outcome has (numerically) zero probability; its
    /// conditional state is then the maximally mixed state.
    pub degenerate: [bool; 2],
}

pub const ZERO_PROBABILITY: f64 = 1e-14;

/// `Π_± = (I ± n·σ)/2` as a 2×2 matrix.
pub(crate) fn bloch_projector(n: [f64; 3], sign: f64) -> CMatrix<2> {
    let i = C64::new(0.0, 1.0);
    let (x, y, z) = (sign * n[0], sign * n[1], sign * n[2]);
    [
        [c(0.5 * (1.0 + z)), (c(x) - i * y) * 0.5],
        [(c(x) + i * y) * 0.5, c(0.5 * (1.0 - z))],
    ]
}

/// `Tr_A[(Π ⊗ I) ρ (Π ⊗ I)]`, unnormalized.
pub(crate) fn post_measurement_block(m: &CMatrix<4>, proj: &CMatrix<2>) -> CMatrix<2> {
    let mut out = [[ZERO; 2]; 2];
    for j in 0..2 {
        for l in 0..2 {
            let mut acc = ZERO;
            for i in 0..2 {
                for k in 0..2 {
                    acc += proj[k][i] * m[2 * i + j][2 * k + l];
                }
            }
            out[j][l] = acc;
        }
    }
    out
}

pub fn measurement_update(rho: &DensityMatrix4, direction: [f64; 3]) -> Result<MeasurementOutcome> {
    let norm = direction.iter().map(|x| x * x).sum::<f64>().sqrt();
    if !((norm - 1.0).abs() <= 1e-10) {
        return Err(Error::NotUnitVector { norm });
    }
    let mut probabilities = [0.0; 2];
    let mut conditional_states = [DensityMatrix2::maximally_mixed(); 2];
    let mut degenerate = [false; 2];
    for (k, sign) in [1.0, -1.0].into_iter().enumerate() {
        let block = post_measurement_block(rho.entries(), &bloch_projector(direction, sign));
        let prob = trace(&block).re;
        if prob < ZERO_PROBABILITY {
            degenerate[k] = true;
            probabilities[k] = prob.max(0.0);
            continue;
        }
        let mut state = hermitize(&block);
        for row in state.iter_mut() {
            for z in row.iter_mut() {
                *z /= prob;
            }
        }
        probabilities[k] = prob;
        conditional_states[k] = DensityMatrix::new(state)?;
    }
    Ok(MeasurementOutcome {
        probabilities,
        conditional_states,
        degenerate,
    })
}
