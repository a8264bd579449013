//! Published closed forms that disagree with the density-matrix oracles.
//!
//! These are kept verbatim so the discrepancies can be measured. Library
//! results never depend on them.

use core::f64::consts::FRAC_PI_2;

// only needed when std is not linked
#[allow(unused_imports)]
use num_traits::Float;

use crate::catstates::ModelParams;
use crate::discord::s_min;
use crate::numerics::binary_entropy;

fn h(x: f64) -> f64 {
    binary_entropy(x.clamp(0.0, 1.0)).expect("clamped into [0, 1]")
}

/// `H(½ + ½√(1 + 2p²q + p^{2s}(p² − 1))/(1 + p²q))` with `s` the exponent
/// carried by the damped overlap. A negative radicand is read as zero.
fn pair_eof(params: &ModelParams, exponent: f64) -> f64 {
    let p = params.p();
    let q = params.q();
    let radicand = 1.0 + 2.0 * p * p * q + params.overlap_pow(2.0 * exponent) * (p * p - 1.0);
    h(0.5 + 0.5 * radicand.max(0.0).sqrt() / params.norm_factor())
}

pub fn eof_ab(params: &ModelParams) -> f64 {
    pair_eof(params, params.r2())
}

pub fn eof_ae(params: &ModelParams) -> f64 {
    pair_eof(params, params.t2())
}

/// `H(½ + ½ p cos(mπ/2)/(1 + p² cos mπ))`.
pub fn eof_a_be(params: &ModelParams) -> f64 {
    let p = params.p();
    let half_angle = if params.m() == 0 { 1.0 } else { (FRAC_PI_2).cos() };
    h(0.5 + 0.5 * p * half_angle / params.norm_factor())
}

pub fn eof_deficit(params: &ModelParams) -> f64 {
    eof_a_be(params) - eof_ab(params) - eof_ae(params)
}

/// `½(1 ± p^{t²})(1 ± p^{r²+1} cos mπ)/(2 + 2p² cos mπ)`; sums to ½.
pub fn lambda_b(params: &ModelParams) -> (f64, f64) {
    let ct = params.transmitted_overlap();
    let cr1 = params.q() * params.overlap_pow(params.r2() + 1.0);
    let denom = 2.0 * (2.0 + 2.0 * params.p() * params.p() * params.q());
    ((1.0 + ct) * (1.0 + cr1) / denom, (1.0 - ct) * (1.0 - cr1) / denom)
}

/// `H(¼(1 + p^{t²})(1 + p^{r²+1} cos mπ)/(1 + p² cos mπ)) − S_min`.
pub fn classical_correlation(params: &ModelParams) -> f64 {
    let arg = 0.25
        * (1.0 + params.transmitted_overlap())
        * (1.0 + params.q() * params.overlap_pow(params.r2() + 1.0))
        / params.norm_factor();
    h(arg) - s_min(params)
}
