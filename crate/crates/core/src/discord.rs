//! Quantum discord of the A–B pair with measurement on A.
//!
//! The closed forms use the Koashi–Winter identity: the minimal conditional
//! entropy after measuring A equals the entanglement of formation of the
//! B–C pair of a purification, which for this family is the B–E pair.
//! [`discord_numeric`] minimizes the conditional entropy directly over
//! projective measurements and serves as the oracle for the closed forms.

use core::f64::consts::PI;

// only needed when std is not linked
#[allow(unused_imports)]
use num_traits::Float;

use crate::catstates::ModelParams;
use crate::entanglement::{concurrence_be, eof_a_be};
use crate::numerics::{
    binary_entropy, bloch_projector, partial_trace, post_measurement_block, qubit_block_entropy,
    DensityMatrix4, Subsystem,
};
use crate::Result;

fn h(x: f64) -> f64 {
    binary_entropy(x).expect("probability in [0, 1]")
}

/// The nonzero eigenvalues `(λ+, λ-)` of `ρ_AB`:
/// `(1 ± p^{r²} cos mπ)(1 ± p^{t²+1}) / (2 + 2p² cos mπ)`.
pub fn joint_eigenvalues(params: &ModelParams) -> (f64, f64) {
    let qr = params.q() * params.reflected_overlap();
    let ct = params.overlap_pow(params.t2() + 1.0);
    normalized((1.0 + qr) * (1.0 + ct), (1.0 - qr) * (1.0 - ct))
}

/// Divides by the sum, which equals `2 + 2p² cos mπ` up to rounding, so the
/// pair stays inside `[0, 1]`.
fn normalized(plus: f64, minus: f64) -> (f64, f64) {
    let total = plus + minus;
    (plus / total, minus / total)
}

/// Spectra of the single-mode marginals of `ρ_AB`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MarginalSpectra {
    pub a: (f64, f64),
    pub b: (f64, f64),
}

/// `λA± = (1 ± p)(1 ± p cos mπ) / (2(1 + p² cos mπ))` and
/// `λB± = (1 ± p^{t²})(1 ± p^{r²+1} cos mπ) / (2(1 + p² cos mπ))`.
pub fn marginal_eigenvalues(params: &ModelParams) -> MarginalSpectra {
    let p = params.p();
    let q = params.q();
    let ct = params.transmitted_overlap();
    let cr1 = q * params.overlap_pow(params.r2() + 1.0);
    MarginalSpectra {
        a: normalized((1.0 + p) * (1.0 + p * q), (1.0 - p) * (1.0 - p * q)),
        b: normalized((1.0 + ct) * (1.0 + cr1), (1.0 - ct) * (1.0 - cr1)),
    }
}

/// `I = S(ρA) + S(ρB) - S(ρAB)`.
pub fn mutual_information(params: &ModelParams) -> f64 {
    let m = marginal_eigenvalues(params);
    h(m.a.0) + h(m.b.0) - h(joint_eigenvalues(params).0)
}

/// Minimal conditional entropy of B after a measurement on A.
pub fn s_min(params: &ModelParams) -> f64 {
    concurrence_be(params).eof()
}

/// `J = S(ρB) - S_min`.
pub fn classical_correlation(params: &ModelParams) -> f64 {
    h(marginal_eigenvalues(params).b.0) - s_min(params)
}

/// `D = S(ρA) - S(ρAB) + S_min`.
pub fn discord_ab(params: &ModelParams) -> f64 {
    h(marginal_eigenvalues(params).a.0) - h(joint_eigenvalues(params).0) + s_min(params)
}

pub fn discord_ae(params: &ModelParams) -> f64 {
    discord_ab(&params.swapped())
}

/// The A|BE split is pure, so its discord is its entanglement of formation.
pub fn discord_a_be(params: &ModelParams) -> f64 {
    eof_a_be(params)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscordBreakdown {
    pub mutual_information: f64,
    pub classical_correlation: f64,
    pub discord: f64,
    pub s_min: f64,
    pub lambda_ab_plus: f64,
    pub lambda_a_plus: f64,
    pub lambda_b_plus: f64,
}

pub fn breakdown(params: &ModelParams) -> DiscordBreakdown {
    let marginals = marginal_eigenvalues(params);
    DiscordBreakdown {
        mutual_information: mutual_information(params),
        classical_correlation: classical_correlation(params),
        discord: discord_ab(params),
        s_min: s_min(params),
        lambda_ab_plus: joint_eigenvalues(params).0,
        lambda_a_plus: marginals.a.0,
        lambda_b_plus: marginals.b.0,
    }
}

/// Search schedule for [`discord_numeric`]: an exhaustive `(θ, φ)` grid
/// followed by simplex refinement from the best `restarts` grid cells.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinimizerSchedule {
    pub n_theta: usize,
    pub n_phi: usize,
    pub tolerance: f64,
    pub restarts: usize,
    pub max_iterations: usize,
}

impl Default for MinimizerSchedule {
    fn default() -> Self {
        MinimizerSchedule {
            n_theta: 64,
            n_phi: 128,
            tolerance: 1e-9,
            restarts: 3,
            max_iterations: 2000,
        }
    }
}

impl MinimizerSchedule {
    pub fn with_grid(n_theta: usize, n_phi: usize, tolerance: f64) -> Self {
        MinimizerSchedule {
            n_theta,
            n_phi,
            tolerance,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumericDiscord {
    pub discord: f64,
    /// Smallest conditional entropy found.
    pub s_min: f64,
    /// Measurement direction attaining it.
    pub direction: [f64; 3],
    pub evaluations: usize,
}

fn direction(theta: f64, phi: f64) -> [f64; 3] {
    let (st, ct) = theta.sin_cos();
    let (sp, cp) = phi.sin_cos();
    [st * cp, st * sp, ct]
}

/// `Σ_k p_k S(ρ_{B|k})` for the measurement along `(θ, φ)`.
fn conditional_entropy(rho: &DensityMatrix4, theta: f64, phi: f64) -> f64 {
    let n = direction(theta, phi);
    [1.0, -1.0]
        .into_iter()
        .map(|sign| qubit_block_entropy(&post_measurement_block(rho.entries(), &bloch_projector(n, sign))))
        .sum()
}

/// Nelder–Mead on `(θ, φ)`; the parametrization is periodic so no bounds are needed.
fn simplex_minimize<F: FnMut(f64, f64) -> f64>(
    mut f: F,
    start: (f64, f64),
    step: (f64, f64),
    tolerance: f64,
    max_iterations: usize,
) -> (f64, (f64, f64), usize) {
    let mut pts = [start, (start.0 + step.0, start.1), (start.0, start.1 + step.1)];
    let mut vals = pts.map(|(x, y)| f(x, y));
    let mut evals = 3;
    for _ in 0..max_iterations {
        let mut idx = [0usize, 1, 2];
        idx.sort_unstable_by(|&i, &j| vals[i].total_cmp(&vals[j]));
        pts = idx.map(|i| pts[i]);
        vals = idx.map(|i| vals[i]);
        let size = (pts[1].0 - pts[0].0).abs().max((pts[1].1 - pts[0].1).abs()).max(
            (pts[2].0 - pts[0].0).abs().max((pts[2].1 - pts[0].1).abs()),
        );
        if vals[2] - vals[0] < tolerance && size < 1e-7 {
            break;
        }
        let centroid = ((pts[0].0 + pts[1].0) * 0.5, (pts[0].1 + pts[1].1) * 0.5);
        let along = |t: f64| {
            (
                centroid.0 + t * (pts[2].0 - centroid.0),
                centroid.1 + t * (pts[2].1 - centroid.1),
            )
        };
        let reflected = along(-1.0);
        let fr = f(reflected.0, reflected.1);
        evals += 1;
        if fr < vals[0] {
            let expanded = along(-2.0);
            let fe = f(expanded.0, expanded.1);
            evals += 1;
            if fe < fr {
                pts[2] = expanded;
                vals[2] = fe;
            } else {
                pts[2] = reflected;
                vals[2] = fr;
            }
            continue;
        }
        if fr < vals[1] {
            pts[2] = reflected;
            vals[2] = fr;
            continue;
        }
        let contracted = if fr < vals[2] { along(-0.5) } else { along(0.5) };
        let fc = f(contracted.0, contracted.1);
        evals += 1;
        if fc < vals[2].min(fr) {
            pts[2] = contracted;
            vals[2] = fc;
            continue;
        }
        for k in 1..3 {
            pts[k] = (
                pts[0].0 + 0.5 * (pts[k].0 - pts[0].0),
                pts[0].1 + 0.5 * (pts[k].1 - pts[0].1),
            );
            vals[k] = f(pts[k].0, pts[k].1);
            evals += 1;
        }
    }
    let best = (0..3).min_by(|&i, &j| vals[i].total_cmp(&vals[j])).unwrap_or(0);
    (vals[best], pts[best], evals)
}

/// Discord `S(ρA) - S(ρAB) + min_n Σ_k p_k S(ρ_{B|k})` by direct
/// minimization over projective measurements `(I ± n·σ)/2` on the first qubit.
/// The result is an upper bound on the true discord.
pub fn discord_numeric(rho: &DensityMatrix4, schedule: &MinimizerSchedule) -> Result<NumericDiscord> {
    let s_a = partial_trace(rho, Subsystem::Second).entropy()?;
    let s_ab = rho.entropy()?;

    let n_theta = schedule.n_theta.max(2);
    let n_phi = schedule.n_phi.max(1);
    let d_theta = PI / (n_theta - 1) as f64;
    let d_phi = 2.0 * PI / n_phi as f64;
    let restarts = schedule.restarts.clamp(1, 8);

    // best cells, ascending by objective
    let mut best = [(f64::INFINITY, 0.0, 0.0); 8];
    let mut evaluations = 0;
    for i in 0..n_theta {
        let theta = i as f64 * d_theta;
        // the poles are a single direction each
        let phis = if i == 0 || i == n_theta - 1 { 1 } else { n_phi };
        for j in 0..phis {
            let phi = j as f64 * d_phi;
            let value = conditional_entropy(rho, theta, phi);
            evaluations += 1;
            if value < best[restarts - 1].0 {
                let mut k = restarts - 1;
                while k > 0 && best[k - 1].0 > value {
                    best[k] = best[k - 1];
                    k -= 1;
                }
                best[k] = (value, theta, phi);
            }
        }
    }

    let (mut s_min, mut at) = (best[0].0, (best[0].1, best[0].2));
    for &(value, theta, phi) in best.iter().take(restarts) {
        if !value.is_finite() {
            continue;
        }
        let (refined, point, evals) = simplex_minimize(
            |t, p| conditional_entropy(rho, t, p),
            (theta, phi),
            (0.5 * d_theta, 0.5 * d_phi),
            schedule.tolerance,
            schedule.max_iterations,
        );
        evaluations += evals;
        if refined < s_min {
            s_min = refined;
            at = point;
        }
    }
    Ok(NumericDiscord {
        // only rounding can push this below zero
        discord: (s_a - s_ab + s_min).max(0.0),
        s_min,
        direction: direction(at.0, at.1),
        evaluations,
    })
}
