//! Model parameters and the two-qubit density matrices of every bipartition
//! of the damped quasi-Bell cat state.
//!
//! A mode carrying `±β` is mapped onto the qubit basis `{|u⟩, |v⟩}` through
//! `|±β⟩ = a|u⟩ ± b|v⟩`, where `a² - b² = ⟨-β|β⟩`. For the modes used here
//! the overlaps are `p` (mode A), `p^{t²}` (transmitted mode B) and `p^{r²}`
//! (reflected mode E). Two-qubit matrices use the basis order
//! `|uu⟩, |uv⟩, |vu⟩, |vv⟩`.


// only needed when std is not linked
#[allow(unused_imports)]
use num_traits::Float;
use crate::numerics::{c, DensityMatrix4, ZERO};
use crate::{Error, Result};

/// Largest overlap accepted for odd states, whose normalization `1 - p²` vanishes at `p = 1`.
pub const ODD_OVERLAP_MAX: f64 = 1.0 - 1e-9;

/// The parity label `m` of the superposition `|α,±α⟩ + e^{imπ}|-α,∓α⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    /// `m = 0`, symmetric states.
    Even,
    /// `m = 1`, antisymmetric states.
    Odd,
}

impl Parity {
    pub fn from_index(m: i64) -> Result<Self> {
        match m.rem_euclid(2) {
            0 => Ok(Parity::Even),
            _ => Ok(Parity::Odd),
        }
    }

    pub fn index(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    /// `cos(mπ)`.
    pub fn sign(self) -> f64 {
        match self {
            Parity::Even => 1.0,
            Parity::Odd => -1.0,
        }
    }
}

/// `base^exponent` with the convention `0^0 = 1`.
pub(crate) fn pow0(base: f64, exponent: f64) -> f64 {
    if exponent == 0.0 {
        1.0
    } else {
        base.powf(exponent)
    }
}

/// Overlap `p = e^{-2|α|²}`, parity and beam-splitter transmissivity `t²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    p: f64,
    parity: Parity,
    t2: f64,
    r2: f64,
}

impl ModelParams {
    pub fn new(p: f64, parity: Parity, t2: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::domain("p", p, "0 <= p <= 1"));
        }
        if !(0.0..=1.0).contains(&t2) {
            return Err(Error::domain("t2", t2, "0 <= t2 <= 1"));
        }
        if parity == Parity::Odd && !(p < ODD_OVERLAP_MAX) {
            return Err(Error::domain("p", p, "p < 1 - 1e-9 for odd (m = 1) states"));
        }
        Ok(ModelParams {
            p,
            parity,
            t2,
            r2: 1.0 - t2,
        })
    }

    /// Parameters from the coherent amplitude `|α|`.
    pub fn from_alpha(alpha_magnitude: f64, parity: Parity, t2: f64) -> Result<Self> {
        if !(alpha_magnitude >= 0.0) || !alpha_magnitude.is_finite() {
            return Err(Error::domain("alpha", alpha_magnitude, "|alpha| >= 0"));
        }
        Self::new(
            (-2.0 * alpha_magnitude * alpha_magnitude).exp(),
            parity,
            t2,
        )
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn m(&self) -> u8 {
        self.parity.index()
    }

    pub fn t2(&self) -> f64 {
        self.t2
    }

    pub fn r2(&self) -> f64 {
        self.r2
    }

    /// `q = cos(mπ)`.
    pub fn q(&self) -> f64 {
        self.parity.sign()
    }

    /// The same point with transmission and reflection exchanged; identical
    /// to constructing with `t2 = 1 - t2`.
    pub fn swapped(&self) -> Self {
        ModelParams {
            t2: self.r2,
            r2: 1.0 - self.r2,
            ..*self
        }
    }

    /// `p^exponent` with `0^0 = 1`.
    pub fn overlap_pow(&self, exponent: f64) -> f64 {
        pow0(self.p, exponent)
    }

    /// `1 + p² cos(mπ)`, i.e. half the normalization `N_m`.
    pub fn norm_factor(&self) -> f64 {
        match self.parity {
            Parity::Even => 1.0 + self.p * self.p,
            Parity::Odd => self.one_minus_p2(),
        }
    }

    /// `1 − p²`, factored to stay accurate as `p → 1`.
    pub fn one_minus_p2(&self) -> f64 {
        (1.0 - self.p) * (1.0 + self.p)
    }

    /// `1 − p^exponent` without cancellation near `p = 1`.
    pub fn overlap_complement(&self, exponent: f64) -> f64 {
        if exponent == 0.0 || self.p == 1.0 {
            0.0
        } else if self.p == 0.0 {
            1.0
        } else {
            -(exponent * self.p.ln()).exp_m1()
        }
    }

    /// Overlap `p^{t²}` of the transmitted mode.
    pub fn transmitted_overlap(&self) -> f64 {
        self.overlap_pow(self.t2)
    }

    /// Overlap `p^{r²}` of the reflected mode.
    pub fn reflected_overlap(&self) -> f64 {
        self.overlap_pow(self.r2)
    }
}

/// Amplitude transmission `t = e^{-λL}` of a fiber with loss rate `λ` over length `L`.
pub fn transmissivity_from_fiber(loss_rate: f64, length: f64) -> Result<f64> {
    if !(loss_rate >= 0.0) {
        return Err(Error::domain("loss rate", loss_rate, ">= 0"));
    }
    if !(length >= 0.0) {
        return Err(Error::domain("length", length, ">= 0"));
    }
    if loss_rate == 0.0 || length == 0.0 {
        return Ok(1.0);
    }
    Ok((-loss_rate * length).exp())
}

/// Qubit amplitudes `(a, b)` with `a² + b² = 1` and `a² - b²` equal to the overlap.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitBasisCoeffs {
    pub a: f64,
    pub b: f64,
}

pub fn qubit_coeffs(overlap: f64) -> Result<QubitBasisCoeffs> {
    if !(0.0..=1.0).contains(&overlap) {
        return Err(Error::domain("overlap", overlap, "0 <= overlap <= 1"));
    }
    Ok(QubitBasisCoeffs {
        a: ((1.0 + overlap) * 0.5).sqrt(),
        b: ((1.0 - overlap) * 0.5).sqrt(),
    })
}

/// `[(1+w)|e⟩⟨e| + (1-w)|o⟩⟨o|] / norm` with `|e⟩ = a1a2|uu⟩ + b1b2|vv⟩` and
/// `|o⟩ = a1b2|uv⟩ + b1a2|vu⟩`; the shape shared by every mixed bipartition.
fn quasi_bell_mixture(
    first_overlap: f64,
    second_overlap: f64,
    mixing: f64,
    norm: f64,
) -> DensityMatrix4 {
    let f = qubit_coeffs(first_overlap).expect("overlap in [0, 1]");
    let s = qubit_coeffs(second_overlap).expect("overlap in [0, 1]");
    let even = [f.a * s.a, 0.0, 0.0, f.b * s.b];
    let odd = [0.0, f.a * s.b, f.b * s.a, 0.0];
    let (we, wo) = ((1.0 + mixing) / norm, (1.0 - mixing) / norm);
    let mut m = [[ZERO; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            m[i][j] = c(we * even[i] * even[j] + wo * odd[i] * odd[j]);
        }
    }
    DensityMatrix4::from_entries_unchecked(m)
}

/// Modes A and B after the environment is traced out.
pub fn rho_ab(params: &ModelParams) -> DensityMatrix4 {
    quasi_bell_mixture(
        params.p(),
        params.transmitted_overlap(),
        params.q() * params.reflected_overlap(),
        params.norm_factor(),
    )
}

/// Mode A and the environment; `rho_ab` with transmission and reflection exchanged.
pub fn rho_ae(params: &ModelParams) -> DensityMatrix4 {
    rho_ab(&params.swapped())
}

/// Mode B and the environment after mode A is traced out.
pub fn rho_be(params: &ModelParams) -> DensityMatrix4 {
    quasi_bell_mixture(
        params.transmitted_overlap(),
        params.reflected_overlap(),
        params.q() * params.p(),
        params.norm_factor(),
    )
}

/// The pure split A|BE, with BE as one logical qubit `{|0⟩, |1⟩}`.
/// Independent of the transmissivity.
pub fn rho_a_be(params: &ModelParams) -> DensityMatrix4 {
    let QubitBasisCoeffs { a, b } = qubit_coeffs(params.p()).expect("p in [0, 1]");
    let mut m = [[ZERO; 4]; 4];
    match params.parity() {
        Parity::Even => {
            let k = 2.0 / params.norm_factor();
            m[0][0] = c(k * a.powi(4));
            m[0][3] = c(k * a * a * b * b);
            m[3][0] = m[0][3];
            m[3][3] = c(k * b.powi(4));
        }
        Parity::Odd => {
            let k = c(2.0 * a * a * b * b / params.norm_factor());
            for i in 1..3 {
                for j in 1..3 {
                    m[i][j] = k;
                }
            }
        }
    }
    DensityMatrix4::from_entries_unchecked(m)
}
