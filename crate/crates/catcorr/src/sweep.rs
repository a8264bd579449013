//! Grid sweeps over `(p, t²)` at fixed parity, one row per point in p-major order.

use catcorr_core::catstates::{rho_a_be, rho_ab, rho_ae, rho_be};
use catcorr_core::discord::{discord_numeric, MinimizerSchedule};
use catcorr_core::entanglement::wootters_concurrence;
use catcorr_core::geodiscord::{bloch_decompose, geo_discord_generic};
use catcorr_core::monogamy::{full_report, MonogamyReport};
use catcorr_core::{ModelParams, Parity};
use rayon::prelude::*;

use crate::error::{CliError, Result};
use crate::format::Table;

pub const COLUMNS: [&str; 19] = [
    "p", "t2", "m", "C_AB", "C_AE", "C_ABE", "E_AB", "E_AE", "E_ABE", "D_AB", "D_AE", "D_ABE",
    "Dg_AB", "Dg_AE", "Dg_ABE", "tau", "E_deficit", "D_deficit", "Dg_deficit",
];

/// Matrix-level cross-checks appended by `--oracles`.
pub const ORACLE_COLUMNS: [&str; 8] = [
    "C_AB_oracle", "C_AE_oracle", "C_ABE_oracle", "C_BE_oracle", "D_AB_oracle", "Dg_AB_oracle",
    "Dg_AE_oracle", "Dg_ABE_oracle",
];

/// Evenly spaced points from `start` to `end` inclusive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Axis {
    pub start: f64,
    pub end: f64,
    pub steps: usize,
}

impl Axis {
    pub fn new(start: f64, end: f64, steps: usize) -> Result<Self> {
        if steps == 0 {
            return Err(CliError::Invalid("steps must be at least 1".into()));
        }
        if !start.is_finite() || !end.is_finite() {
            return Err(CliError::Invalid(format!("axis bounds must be finite, got {start}..{end}")));
        }
        Ok(Axis { start, end, steps })
    }

    pub fn point(&self, i: usize) -> f64 {
        if self.steps == 1 || i == 0 {
            self.start
        } else if i + 1 == self.steps {
            self.end
        } else {
            self.start + (self.end - self.start) * i as f64 / (self.steps - 1) as f64
        }
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.steps).map(|i| self.point(i))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    pub p: Axis,
    pub t2: Axis,
    pub parity: Parity,
    pub include_oracles: bool,
}

impl SweepSpec {
    /// Every grid point, p-major; fails on the first point outside the model domain.
    pub fn grid(&self) -> Result<Vec<ModelParams>> {
        let mut out = Vec::with_capacity(self.p.steps * self.t2.steps);
        for p in self.p.points() {
            for t2 in self.t2.points() {
                out.push(ModelParams::new(p, self.parity, t2)?);
            }
        }
        Ok(out)
    }

    pub fn columns(&self) -> Vec<String> {
        let mut cols: Vec<String> = COLUMNS.iter().map(|s| s.to_string()).collect();
        if self.include_oracles {
            cols.extend(ORACLE_COLUMNS.iter().map(|s| s.to_string()));
        }
        cols
    }
}

pub fn report_row(r: &MonogamyReport) -> Vec<f64> {
    vec![
        r.params.p(),
        r.params.t2(),
        f64::from(r.params.m()),
        r.c_ab.value(),
        r.c_ae.value(),
        r.c_abe.value(),
        r.e_ab,
        r.e_ae,
        r.e_abe,
        r.d_ab,
        r.d_ae,
        r.d_abe,
        r.dg_ab,
        r.dg_ae,
        r.dg_abe,
        r.tau,
        r.e_deficit,
        r.d_deficit,
        r.dg_deficit,
    ]
}

pub fn oracle_row(params: &ModelParams) -> Result<Vec<f64>> {
    let ab = rho_ab(params);
    let ae = rho_ae(params);
    let a_be = rho_a_be(params);
    let numeric = discord_numeric(&ab, &MinimizerSchedule::default())?;
    Ok(vec![
        wootters_concurrence(&ab).value(),
        wootters_concurrence(&ae).value(),
        wootters_concurrence(&a_be).value(),
        wootters_concurrence(&rho_be(params)).value(),
        numeric.discord,
        geo_discord_generic(&bloch_decompose(&ab)),
        geo_discord_generic(&bloch_decompose(&ae)),
        geo_discord_generic(&bloch_decompose(&a_be)),
    ])
}

fn row(params: &ModelParams, include_oracles: bool) -> Result<Vec<f64>> {
    let mut out = report_row(&full_report(params));
    if include_oracles {
        out.extend(oracle_row(params)?);
    }
    Ok(out)
}

/// Evaluates the grid on the current rayon pool. Rows come back in grid
/// order whatever the pool size, and every cell is a pure function of its
/// parameters, so the table does not depend on the thread count.
pub fn run(spec: &SweepSpec) -> Result<Table> {
    let grid = spec.grid()?;
    let rows = grid
        .par_iter()
        .map(|params| row(params, spec.include_oracles))
        .collect::<Result<Vec<_>>>()?;
    let mut table = Table::new(spec.columns());
    table.rows = rows;
    Ok(table)
}
