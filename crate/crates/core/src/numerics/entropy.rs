
// only needed when std is not linked
#[allow(unused_imports)]
use num_traits::Float;
use super::{CMatrix, DensityMatrix, PSD_TOL};
use crate::{Error, Result};

const DOMAIN_SLACK: f64 = 1e-12;

fn xlog2x(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        x * x.log2()
    }
}

/// Shannon entropy (bits) of the distribution `(x, 1 - x)`, with `0 log 0 = 0`.
pub fn binary_entropy(x: f64) -> Result<f64> {
    if !(-DOMAIN_SLACK..=1.0 + DOMAIN_SLACK).contains(&x) {
        return Err(Error::domain("binary entropy argument", x, "0 <= x <= 1"));
    }
    let x = x.clamp(0.0, 1.0);
    let y = 1.0 - x;
    // sum the two terms in a fixed order so that H(x) and H(1 - x) agree bit for bit
    let (lo, hi) = if x <= y { (x, y) } else { (y, x) };
    Ok(-(xlog2x(lo) + xlog2x(hi)) + 0.0)
}

pub(crate) fn entropy_of_values(values: &[f64]) -> Result<f64> {
    let mut acc = 0.0;
    for &v in values {
        if v < -PSD_TOL {
            return Err(Error::InvalidDensity {
                reason: "negative eigenvalue",
                value: v,
            });
        }
        acc -= xlog2x(v);
    }
    Ok(acc + 0.0)
}

/// `-Tr ρ log2 ρ`.
pub fn von_neumann_entropy<const N: usize>(rho: &DensityMatrix<N>) -> Result<f64> {
    entropy_of_values(&rho.spectrum().values)
}

/// `Tr(B) · S(B / Tr B)` for an unnormalized positive 2×2 block, using the
/// closed-form eigenvalues; zero-weight blocks contribute nothing.
pub(crate) fn qubit_block_entropy(block: &CMatrix<2>) -> f64 {
    let a = block[0][0].re;
    let d = block[1][1].re;
    let weight = a + d;
    if weight <= super::ZERO_PROBABILITY {
        return 0.0;
    }
    let half_gap = ((0.5 * (a - d)).powi(2) + block[0][1].norm_sqr()).sqrt();
    let lo = (0.5 * weight - half_gap).max(0.0);
    let hi = 0.5 * weight + half_gap;
    // w S(ρ) = -Σ λ log λ + w log w
    -(xlog2x(lo) + xlog2x(hi)) + xlog2x(weight)
}
