//! Geometric (Hilbert–Schmidt) discord with measurement on the first qubit.
//!
//! For a two-qubit state with local Bloch vector `x`, partner vector `y` and
//! correlation tensor `R`, the distance to the closest classical-quantum
//! state is `¼(k₂ + k₃)` where `k₁ ≥ k₂ ≥ k₃` are the eigenvalues of
//! `K = x xᵀ + R Rᵀ`.

use core::f64::consts::PI;

// only needed when std is not linked
#[allow(unused_imports)]
use num_traits::Float;

use crate::catstates::{ModelParams, Parity};
use crate::numerics::{c, kron, pauli, symmetric_eigen3, CMatrix, DensityMatrix4, ZERO};
use crate::{Error, Result};

/// `(2√2 − 1)/7`, the positive root of `7p² + 2p − 1`. Below it the even
/// family has two geometric-discord branches at a 50:50 splitter.
pub const COEXISTENCE_THRESHOLD: f64 = 0.261_203_874_963_741_3;

const BLOCH_NORM_TOL: f64 = 1e-10;

pub type Matrix3 = [[f64; 3]; 3];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochForm {
    pub x: [f64; 3],
    pub y: [f64; 3],
    pub r: Matrix3,
}

fn norm_sqr(v: &[f64; 3]) -> f64 {
    v.iter().map(|a| a * a).sum()
}

impl BlochForm {
    /// Rejects local vectors longer than one.
    pub fn new(x: [f64; 3], y: [f64; 3], r: Matrix3) -> Result<Self> {
        for (name, v) in [("x", &x), ("y", &y)] {
            let n = norm_sqr(v).sqrt();
            if !(n <= 1.0 + BLOCH_NORM_TOL) {
                return Err(Error::domain(name, n, "local Bloch vector norm <= 1"));
            }
        }
        Ok(BlochForm { x, y, r })
    }

    /// `¼(I⊗I + Σ xᵢ σᵢ⊗I + Σ yᵢ I⊗σᵢ + Σ Rᵢⱼ σᵢ⊗σⱼ)`.
    pub fn reconstruct(&self) -> CMatrix<4> {
        let mut out = [[ZERO; 4]; 4];
        let mut add = |coef: f64, i: usize, j: usize| {
            if coef == 0.0 {
                return;
            }
            let term = kron(&pauli(i), &pauli(j));
            for (row, trow) in out.iter_mut().zip(term.iter()) {
                for (z, t) in row.iter_mut().zip(trow.iter()) {
                    *z += c(0.25 * coef) * t;
                }
            }
        };
        add(1.0, 0, 0);
        for i in 0..3 {
            add(self.x[i], i + 1, 0);
            add(self.y[i], 0, i + 1);
            for j in 0..3 {
                add(self.r[i][j], i + 1, j + 1);
            }
        }
        out
    }

    /// `K = x xᵀ + R Rᵀ`.
    pub fn k_matrix(&self) -> Matrix3 {
        let mut k = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                k[i][j] = self.x[i] * self.x[j]
                    + (0..3).map(|l| self.r[i][l] * self.r[j][l]).sum::<f64>();
            }
        }
        k
    }
}

/// `xᵢ = Tr ρ(σᵢ⊗I)`, `yᵢ = Tr ρ(I⊗σᵢ)`, `Rᵢⱼ = Tr ρ(σᵢ⊗σⱼ)`.
pub fn bloch_decompose(rho: &DensityMatrix4) -> BlochForm {
    let m = rho.entries();
    let expect = |i: usize, j: usize| {
        let op = kron(&pauli(i), &pauli(j));
        let mut acc = 0.0;
        for a in 0..4 {
            for b in 0..4 {
                acc += (m[a][b] * op[b][a]).re;
            }
        }
        acc
    };
    let mut out = BlochForm {
        x: [0.0; 3],
        y: [0.0; 3],
        r: [[0.0; 3]; 3],
    };
    for i in 0..3 {
        out.x[i] = expect(i + 1, 0);
        out.y[i] = expect(0, i + 1);
        for j in 0..3 {
            out.r[i][j] = expect(i + 1, j + 1);
        }
    }
    out
}

/// Closed-form Bloch data of `ρ_AB`; only `x₃`, `y₃` and the diagonal of `R` are nonzero.
pub fn bloch_ab_closed(params: &ModelParams) -> BlochForm {
    let p = params.p();
    let q = params.q();
    let n = params.norm_factor();
    let t2 = params.t2();
    let r30 = p * (1.0 + q) / n;
    let r03 = (params.transmitted_overlap() + q * params.overlap_pow(2.0 - t2)) / n;
    let r11 = (params.one_minus_p2() * params.overlap_complement(2.0 * t2)).sqrt() / n;
    let r22 = -q * params.reflected_overlap() * r11;
    let r33 = (q * params.overlap_pow(1.0 - t2) + params.overlap_pow(1.0 + t2)) / n;
    BlochForm {
        x: [0.0, 0.0, r30],
        y: [0.0, 0.0, r03],
        r: [[r11, 0.0, 0.0], [0.0, r22, 0.0], [0.0, 0.0, r33]],
    }
}

/// `¼(k₂ + k₃)` from the eigenvalues of `K`.
pub fn geo_discord_generic(bloch: &BlochForm) -> f64 {
    let k = symmetric_eigen3(&bloch.k_matrix(), false)
        .expect("K is symmetric by construction")
        .values;
    (0.25 * (k[1] + k[2])).max(0.0)
}

/// The equivalent form `¼(‖x‖² + ‖R‖²_F − k_max)`.
pub fn geo_discord_compact(bloch: &BlochForm) -> f64 {
    let k = symmetric_eigen3(&bloch.k_matrix(), false)
        .expect("K is symmetric by construction")
        .max();
    let r_sqr: f64 = bloch.r.iter().flatten().map(|v| v * v).sum();
    (0.25 * (norm_sqr(&bloch.x) + r_sqr - k)).max(0.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// `¼(λ₂ + λ₃)`, selected when `λ₁` is the largest eigenvalue.
    Sum23,
    /// `¼(λ₁ + λ₃)`, selected when `λ₂` is the largest eigenvalue.
    Sum13,
}

impl Branch {
    pub fn label(self) -> &'static str {
        match self {
            Branch::Sum23 => "sum_23",
            Branch::Sum13 => "sum_13",
        }
    }
}

/// Eigenvalues of `K` for `ρ_AB` and the branch they select:
/// `λ₁ = R₃₀² + R₃₃²`, `λ₂ = R₁₁²`, `λ₃ = R₂₂²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeoBranch {
    pub branch: Branch,
    pub lambda1: f64,
    pub lambda2: f64,
    pub lambda3: f64,
}

impl GeoBranch {
    pub fn value(&self) -> f64 {
        match self.branch {
            Branch::Sum23 => 0.25 * (self.lambda2 + self.lambda3),
            Branch::Sum13 => 0.25 * (self.lambda1 + self.lambda3),
        }
    }
}

/// `p^{2r²} + p^{2t²} + p²(4 cos mπ + 3) − 1`; nonnegative exactly when `λ₁ ≥ λ₂`.
pub fn branch_condition(params: &ModelParams) -> f64 {
    let p = params.p();
    params.overlap_pow(2.0 * params.r2()) + params.overlap_pow(2.0 * params.t2())
        + p * p * (4.0 * params.q() + 3.0)
        - 1.0
}

pub fn geo_discord_ab(params: &ModelParams) -> GeoBranch {
    let p = params.p();
    let q = params.q();
    let t2 = params.t2();
    let n2 = params.norm_factor() * params.norm_factor();
    let lambda1 = (params.overlap_pow(2.0 + 2.0 * t2)
        + params.overlap_pow(2.0 - 2.0 * t2)
        + (4.0 * q + 2.0) * p * p)
        / n2;
    let lambda2 = params.one_minus_p2() * params.overlap_complement(2.0 * t2) / n2;
    let lambda3 = params.overlap_pow(2.0 * params.r2()) * lambda2;
    let branch = match params.parity() {
        Parity::Odd => Branch::Sum13,
        Parity::Even if branch_condition(params) >= 0.0 => Branch::Sum23,
        Parity::Even => Branch::Sum13,
    };
    GeoBranch {
        branch,
        lambda1,
        lambda2,
        lambda3,
    }
}

pub fn geo_discord_ae(params: &ModelParams) -> GeoBranch {
    geo_discord_ab(&params.swapped())
}

/// `½(1 − p)²/(1 + p² cos mπ)²`, independent of the splitter.
pub fn geo_discord_a_be(params: &ModelParams) -> f64 {
    let p = params.p();
    let n = params.norm_factor();
    0.5 * (1.0 - p) * (1.0 - p) / (n * n)
}

/// The transmissivities `(t₋², t₊²)` where the even-state branch switches,
/// for `0 < p < (2√2 − 1)/7`.
pub fn branch_boundaries(p: f64, parity: Parity) -> Result<(f64, f64)> {
    if parity != Parity::Even {
        return Err(Error::domain("m", 1.0, "branch switching occurs only for m = 0"));
    }
    if !(p > 0.0 && p < COEXISTENCE_THRESHOLD) {
        return Err(Error::domain("p", p, "0 < p < (2*sqrt(2) - 1)/7"));
    }
    let x = (1.0 - 7.0 * p * p) / (2.0 * p);
    let root = (x * x - 1.0).max(0.0).sqrt();
    let lp = p.ln();
    let lower = 0.5 + 0.5 * (x + root).ln() / lp;
    // x - root = 1/(x + root), so the pair is symmetric about ½
    Ok((lower, 1.0 - lower))
}

fn quadratic_form(k: &Matrix3, theta: f64, phi: f64) -> f64 {
    let (st, ct) = theta.sin_cos();
    let (sp, cp) = phi.sin_cos();
    let e = [st * cp, st * sp, ct];
    let mut acc = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            acc += e[i] * k[i][j] * e[j];
        }
    }
    acc
}

const INV_PHI: f64 = 0.618_033_988_749_894_8;

fn golden_max<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> (f64, f64) {
    let mut a = hi - INV_PHI * (hi - lo);
    let mut b = lo + INV_PHI * (hi - lo);
    let (mut fa, mut fb) = (f(a), f(b));
    while hi - lo > tol {
        if fa < fb {
            lo = a;
            a = b;
            fa = fb;
            b = lo + INV_PHI * (hi - lo);
            fb = f(b);
        } else {
            hi = b;
            b = a;
            fb = fa;
            a = hi - INV_PHI * (hi - lo);
            fa = f(a);
        }
    }
    let mid = 0.5 * (lo + hi);
    (mid, f(mid))
}

/// `max eᵀKe` over unit vectors, by an exhaustive `(θ, φ)` grid followed
/// by alternating golden-section refinement in each angle.
pub fn kmax_sphere_oracle(bloch: &BlochForm, n_theta: usize, n_phi: usize) -> f64 {
    kmax_sphere(&bloch.k_matrix(), n_theta, n_phi)
}

pub fn kmax_sphere(k: &Matrix3, n_theta: usize, n_phi: usize) -> f64 {
    let n_theta = n_theta.max(2);
    let n_phi = n_phi.max(1);
    let d_theta = PI / (n_theta - 1) as f64;
    let d_phi = 2.0 * PI / n_phi as f64;
    let (mut best, mut theta, mut phi) = (f64::NEG_INFINITY, 0.0, 0.0);
    for i in 0..n_theta {
        let th = i as f64 * d_theta;
        for j in 0..n_phi {
            let ph = j as f64 * d_phi;
            let v = quadratic_form(k, th, ph);
            if v > best {
                (best, theta, phi) = (v, th, ph);
            }
        }
    }
    for _ in 0..200 {
        let previous = best;
        let (t, _) = golden_max(|t| quadratic_form(k, t, phi), theta - d_theta, theta + d_theta, 1e-12);
        let (f, v) = golden_max(|f| quadratic_form(k, t, f), phi - d_phi, phi + d_phi, 1e-12);
        if v > best {
            (best, theta, phi) = (v, t, f);
        }
        if best - previous <= 1e-16 * best.abs().max(1.0) {
            break;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catstates::{rho_a_be, rho_ab, rho_ae};
    use crate::numerics::{DensityMatrix2, ONE};
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    const EVEN: Parity = Parity::Even;
    const ODD: Parity = Parity::Odd;

    fn params(p: f64, m: Parity, t2: f64) -> ModelParams {
        ModelParams::new(p, m, t2).unwrap()
    }

    fn grid() -> impl Iterator<Item = ModelParams> {
        (1..20).flat_map(|i| {
            (0..=10).flat_map(move |j| {
                [EVEN, ODD]
                    .into_iter()
                    .map(move |m| params(i as f64 * 0.05, m, j as f64 * 0.1))
            })
        })
    }

    fn bell() -> DensityMatrix4 {
        DensityMatrix4::pure(&[ONE, ZERO, ZERO, ONE]).unwrap()
    }

    fn max_diff(a: &BlochForm, b: &BlochForm) -> f64 {
        let mut d = 0.0_f64;
        for i in 0..3 {
            d = d.max((a.x[i] - b.x[i]).abs()).max((a.y[i] - b.y[i]).abs());
            for j in 0..3 {
                d = d.max((a.r[i][j] - b.r[i][j]).abs());
            }
        }
        d
    }

    #[test]
    fn threshold_constant() {
        assert_abs_diff_eq!(COEXISTENCE_THRESHOLD, (2.0 * 2.0_f64.sqrt() - 1.0) / 7.0, epsilon = 1e-15);
        let p = COEXISTENCE_THRESHOLD;
        assert!((7.0 * p * p + 2.0 * p - 1.0).abs() < 1e-15);
    }

    #[test]
    fn decompose_reference_states() {
        let mixed = bloch_decompose(&DensityMatrix4::maximally_mixed());
        assert_eq!(mixed, BlochForm { x: [0.0; 3], y: [0.0; 3], r: [[0.0; 3]; 3] });
        let b = bloch_decompose(&bell());
        let expected = [[1.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, 1.0]];
        for i in 0..3 {
            assert_abs_diff_eq!(b.x[i], 0.0, epsilon = 1e-15);
            for j in 0..3 {
                assert_abs_diff_eq!(b.r[i][j], expected[i][j], epsilon = 1e-15);
            }
        }
        assert!(BlochForm::new([0.0, 0.0, 1.1], [0.0; 3], [[0.0; 3]; 3]).is_err());
    }

    #[test]
    fn reconstruction_round_trips() {
        for pr in grid() {
            for rho in [rho_ab(&pr), rho_ae(&pr), rho_a_be(&pr)] {
                let back = bloch_decompose(&rho).reconstruct();
                let diff = DensityMatrix4::new(back).unwrap().max_abs_diff(&rho);
                assert!(diff <= 1e-12, "{pr:?}: {diff}");
            }
        }
    }

    #[test]
    fn closed_bloch_matches_decomposition() {
        for pr in grid() {
            let d = max_diff(&bloch_ab_closed(&pr), &bloch_decompose(&rho_ab(&pr)));
            assert!(d <= 1e-12, "{pr:?}: {d}");
        }
        let pure_odd = bloch_ab_closed(&params(0.4, ODD, 1.0));
        assert_eq!(pure_odd.x, [0.0; 3]);
        assert_abs_diff_eq!(pure_odd.r[0][0], 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(pure_odd.r[1][1], 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(pure_odd.r[2][2], -1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(bloch_ab_closed(&params(0.5, EVEN, 0.5)).x[2], 0.8, epsilon = 1e-15);
        assert_eq!(bloch_ab_closed(&params(0.0, EVEN, 0.5)).x[2], 0.0);
    }

    #[test]
    fn generic_reference_values() {
        let up = DensityMatrix2::from_bloch([0.0, 0.0, 1.0]).unwrap();
        let product = DensityMatrix4::product(&up, &up);
        assert_abs_diff_eq!(geo_discord_generic(&bloch_decompose(&product)), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(geo_discord_generic(&bloch_decompose(&bell())), 0.5, epsilon = 1e-14);
        let closed = bloch_ab_closed(&params(0.5, EVEN, 0.5));
        assert_abs_diff_eq!(geo_discord_generic(&closed), 0.09, epsilon = 1e-14);
    }

    #[test]
    fn closed_forms_match_generic() {
        for pr in grid() {
            for (side, rho) in [(pr, rho_ab(&pr)), (pr.swapped(), rho_ae(&pr))] {
                let closed = geo_discord_ab(&side);
                let bloch = bloch_decompose(&rho);
                let generic = geo_discord_generic(&bloch);
                assert!((closed.value() - generic).abs() <= 1e-10, "{pr:?}");
                assert!((geo_discord_compact(&bloch) - generic).abs() <= 1e-12, "{pr:?}");
                assert!(closed.lambda2 >= closed.lambda3);
                let r = bloch_ab_closed(&side).r;
                assert!((closed.lambda3 - r[1][1] * r[1][1]).abs() <= 1e-12, "{pr:?}");
                assert!((0.0..=0.5 + 1e-12).contains(&generic));
            }
        }
    }

    #[test]
    fn branch_examples() {
        let g = geo_discord_ab(&params(0.5, EVEN, 0.5));
        assert_eq!(g.branch, Branch::Sum23);
        assert_abs_diff_eq!(g.value(), 0.09, epsilon = 1e-15);

        let p = 0.1;
        let g = geo_discord_ab(&params(p, EVEN, 0.5));
        assert_eq!(g.branch, Branch::Sum13);
        assert_abs_diff_eq!(branch_condition(&params(p, EVEN, 0.5)), 2.0 * p + 7.0 * p * p - 1.0, epsilon = 1e-15);
        let expected = p * (p * p * p + 5.0 * p + 2.0) / (4.0 * (1.0 + p * p).powi(2));
        assert_abs_diff_eq!(g.value(), expected, epsilon = 1e-15);

        for p in [0.1, 0.3, 0.6, 0.9] {
            let g = geo_discord_ab(&params(p, ODD, 0.5));
            assert_eq!(g.branch, Branch::Sum13);
            assert_abs_diff_eq!(g.value(), p * (2.0 + p) / (4.0 * (1.0 + p) * (1.0 + p)), epsilon = 1e-14);
        }
        // general m = 1 closed form
        let pr = params(0.7, ODD, 0.3);
        let (p2, pt, pr2) = (0.49, 0.7_f64.powf(0.6), 0.7_f64.powf(1.4));
        let expected = pr2 * (2.0 - pt - p2) * (1.0 - pt) / (4.0 * (1.0 - p2) * (1.0 - p2));
        assert_abs_diff_eq!(geo_discord_ab(&pr).value(), expected, epsilon = 1e-14);
    }

    #[test]
    fn swap_identities() {
        for p in [0.2, 0.5, 0.8] {
            for m in [EVEN, ODD] {
                assert_eq!(geo_discord_ae(&params(p, m, 0.5)), geo_discord_ab(&params(p, m, 0.5)));
            }
        }
        assert_eq!(geo_discord_ae(&params(0.5, EVEN, 1.0)), geo_discord_ab(&params(0.5, EVEN, 0.0)));
        assert_eq!(geo_discord_ae(&params(0.3, ODD, 0.2)), geo_discord_ab(&params(0.3, ODD, 0.8)));
    }

    #[test]
    fn a_be_values() {
        assert_eq!(geo_discord_a_be(&params(0.0, EVEN, 0.3)), 0.5);
        assert_eq!(geo_discord_a_be(&params(0.0, ODD, 0.3)), 0.5);
        assert_abs_diff_eq!(geo_discord_a_be(&params(2.0_f64.sqrt() - 1.0, ODD, 0.7)), 0.25, epsilon = 1e-15);
        assert_abs_diff_eq!(geo_discord_a_be(&params(0.5, EVEN, 0.2)), 0.08, epsilon = 1e-15);
        assert_eq!(geo_discord_a_be(&params(0.5, EVEN, 0.2)), geo_discord_a_be(&params(0.5, EVEN, 0.9)));
    }

    #[test]
    fn boundaries() {
        let (lo, hi) = branch_boundaries(0.1, EVEN).unwrap();
        assert_abs_diff_eq!(lo, 0.018313885125665, epsilon = 1e-12);
        assert_abs_diff_eq!(hi, 0.981686114874335, epsilon = 1e-12);
        for p in [0.01, 0.05, 0.1, 0.2, 0.25, 0.26] {
            let (lo, hi) = branch_boundaries(p, EVEN).unwrap();
            assert!(0.0 < lo && lo < 0.5 && 0.5 < hi && hi < 1.0);
            assert!((lo + hi - 1.0).abs() <= 1e-10);
            for t in [lo, hi] {
                assert!(branch_condition(&params(p, EVEN, t)).abs() <= 1e-12, "{p} {t}");
                assert!(branch_condition(&params(p, EVEN, t - 1e-6)) * branch_condition(&params(p, EVEN, t + 1e-6)) < 0.0);
                // both branch expressions agree at the switch
                let g = geo_discord_ab(&params(p, EVEN, t));
                assert!(0.25 * (g.lambda1 - g.lambda2).abs() <= 1e-9);
            }
        }
        let (lo, hi) = branch_boundaries(COEXISTENCE_THRESHOLD - 1e-12, EVEN).unwrap();
        assert!((lo - 0.5).abs() < 1e-3 && (hi - 0.5).abs() < 1e-3);
        assert!(branch_boundaries(0.3, EVEN).is_err());
        assert!(branch_boundaries(0.0, EVEN).is_err());
        assert!(branch_boundaries(0.1, ODD).is_err());
    }

    #[test]
    fn straddling_the_boundary_matches_generic() {
        for p in [0.05, 0.1, 0.2, 0.25] {
            let (lo, hi) = branch_boundaries(p, EVEN).unwrap();
            for t in [lo - 1e-4, lo + 1e-4, hi - 1e-4, hi + 1e-4] {
                let pr = params(p, EVEN, t);
                let generic = geo_discord_generic(&bloch_decompose(&rho_ab(&pr)));
                assert!((geo_discord_ab(&pr).value() - generic).abs() <= 1e-10);
            }
        }
    }

    #[test]
    fn sphere_oracle_references() {
        let id = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
        assert_abs_diff_eq!(kmax_sphere(&id, 181, 360), 1.0, epsilon = 1e-12);
        let d = [[3.0, 0.0, 0.0], [0.0, 2.0, 0.0], [0.0, 0.0, 1.0]];
        assert_abs_diff_eq!(kmax_sphere(&d, 181, 360), 3.0, epsilon = 1e-12);
        let b = bloch_decompose(&rho_ab(&params(0.5, EVEN, 0.5)));
        let top = symmetric_eigen3(&b.k_matrix(), false).unwrap().max();
        assert_abs_diff_eq!(kmax_sphere_oracle(&b, 181, 360), top, epsilon = 1e-8);
    }

    proptest! {
        #[test]
        fn sphere_oracle_matches_eigensolver(
            entries in proptest::array::uniform9(-1.0f64..1.0),
        ) {
            let a: Matrix3 = [
                [entries[0], entries[1], entries[2]],
                [entries[3], entries[4], entries[5]],
                [entries[6], entries[7], entries[8]],
            ];
            let bloch = BlochForm { x: [0.0; 3], y: [0.0; 3], r: a };
            let top = symmetric_eigen3(&bloch.k_matrix(), false).unwrap().max();
            prop_assert!((kmax_sphere_oracle(&bloch, 181, 360) - top).abs() <= 1e-8);
        }

        #[test]
        fn generic_ignores_y(
            x in proptest::array::uniform3(-0.5f64..0.5),
            y1 in proptest::array::uniform3(-0.5f64..0.5),
            y2 in proptest::array::uniform3(-0.5f64..0.5),
            r in proptest::array::uniform9(-0.5f64..0.5),
        ) {
            let r = [[r[0], r[1], r[2]], [r[3], r[4], r[5]], [r[6], r[7], r[8]]];
            let a = BlochForm { x, y: y1, r };
            let b = BlochForm { x, y: y2, r };
            prop_assert_eq!(geo_discord_generic(&a), geo_discord_generic(&b));
            prop_assert!((geo_discord_compact(&a) - geo_discord_generic(&a)).abs() <= 1e-12);
        }
    }
}
