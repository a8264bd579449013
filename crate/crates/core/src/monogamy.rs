//! Monogamy deficits `Q(A|BE) − Q(A|B) − Q(A|E)` for each correlation
//! measure. A negative deficit signals a violation.

use crate::catstates::{ModelParams, Parity};
use crate::discord::{discord_a_be, discord_ab, discord_ae};
use crate::entanglement::{
    concurrence_a_be, concurrence_ab, concurrence_ae, eof_a_be, eof_ab, eof_ae, Concurrence,
};
use crate::geodiscord::{geo_discord_a_be, geo_discord_ab, geo_discord_ae};
use crate::{Error, Result};

/// Three-tangle `(1 − p²)[(1 + p²) − p^{2r²} − p^{2t²}]/(1 + p² cos mπ)²`,
/// evaluated through the factorization of the bracket as
/// `(1 − p^{2r²})(1 − p^{2t²})`.
pub fn tangle(params: &ModelParams) -> f64 {
    let n = params.norm_factor();
    params.one_minus_p2()
        * params.overlap_complement(2.0 * params.r2())
        * params.overlap_complement(2.0 * params.t2())
        / (n * n)
}

pub fn eof_deficit(params: &ModelParams) -> f64 {
    eof_a_be(params) - eof_ab(params) - eof_ae(params)
}

pub fn discord_deficit(params: &ModelParams) -> f64 {
    discord_a_be(params) - discord_ab(params) - discord_ae(params)
}

pub fn geo_deficit(params: &ModelParams) -> f64 {
    geo_discord_a_be(params) - geo_discord_ab(params).value() - geo_discord_ae(params).value()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Measure {
    Tangle,
    Eof,
    Discord,
    Geo,
}

impl Measure {
    pub const ALL: [Measure; 4] = [Measure::Tangle, Measure::Eof, Measure::Discord, Measure::Geo];

    pub fn name(self) -> &'static str {
        match self {
            Measure::Tangle => "tangle",
            Measure::Eof => "eof",
            Measure::Discord => "discord",
            Measure::Geo => "geo",
        }
    }

    pub fn deficit(self, params: &ModelParams) -> f64 {
        match self {
            Measure::Tangle => tangle(params),
            Measure::Eof => eof_deficit(params),
            Measure::Discord => discord_deficit(params),
            Measure::Geo => geo_deficit(params),
        }
    }
}

/// A bracketed root in `p` of a deficit at fixed parity and transmissivity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Boundary {
    pub p: f64,
    /// Deficit evaluated at the returned `p`.
    pub residual: f64,
    pub iterations: u32,
}

/// Bisection in `p` on `bracket` down to an interval of width `tol`.
pub fn find_violation_boundary(
    measure: Measure,
    parity: Parity,
    t2: f64,
    bracket: (f64, f64),
    tol: f64,
) -> Result<Boundary> {
    if !(tol > 0.0) {
        return Err(Error::domain("tol", tol, "tol > 0"));
    }
    let (mut lo, mut hi) = if bracket.0 <= bracket.1 { bracket } else { (bracket.1, bracket.0) };
    let f = |p: f64| ModelParams::new(p, parity, t2).map(|pr| measure.deficit(&pr));
    let (f_lo, f_hi) = (f(lo)?, f(hi)?);
    if f_lo == 0.0 {
        return Ok(Boundary { p: lo, residual: 0.0, iterations: 0 });
    }
    if f_hi == 0.0 {
        return Ok(Boundary { p: hi, residual: 0.0, iterations: 0 });
    }
    if f_lo.signum() == f_hi.signum() || f_lo.is_nan() || f_hi.is_nan() {
        return Err(Error::NoSignChange { lo, hi, f_lo, f_hi });
    }
    let lo_negative = f_lo < 0.0;
    let mut iterations = 0;
    while hi - lo > tol && iterations < 200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let value = f(mid)?;
        iterations += 1;
        if value == 0.0 {
            return Ok(Boundary { p: mid, residual: 0.0, iterations });
        }
        if (value < 0.0) == lo_negative {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let p = 0.5 * (lo + hi);
    Ok(Boundary { p, residual: f(p)?, iterations })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonogamyReport {
    pub params: ModelParams,
    pub c_ab: Concurrence,
    pub c_ae: Concurrence,
    pub c_abe: Concurrence,
    pub e_ab: f64,
    pub e_ae: f64,
    pub e_abe: f64,
    pub d_ab: f64,
    pub d_ae: f64,
    pub d_abe: f64,
    pub dg_ab: f64,
    pub dg_ae: f64,
    pub dg_abe: f64,
    pub tau: f64,
    pub e_deficit: f64,
    pub d_deficit: f64,
    pub dg_deficit: f64,
}

pub fn full_report(params: &ModelParams) -> MonogamyReport {
    let (e_ab, e_ae, e_abe) = (eof_ab(params), eof_ae(params), eof_a_be(params));
    let (d_ab, d_ae, d_abe) = (discord_ab(params), discord_ae(params), discord_a_be(params));
    let (dg_ab, dg_ae, dg_abe) = (
        geo_discord_ab(params).value(),
        geo_discord_ae(params).value(),
        geo_discord_a_be(params),
    );
    MonogamyReport {
        params: *params,
        c_ab: concurrence_ab(params),
        c_ae: concurrence_ae(params),
        c_abe: concurrence_a_be(params),
        e_ab,
        e_ae,
        e_abe,
        d_ab,
        d_ae,
        d_abe,
        dg_ab,
        dg_ae,
        dg_abe,
        tau: tangle(params),
        e_deficit: e_abe - e_ab - e_ae,
        d_deficit: d_abe - d_ab - d_ae,
        dg_deficit: dg_abe - dg_ab - dg_ae,
    }
}
