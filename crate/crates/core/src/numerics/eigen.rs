//! Cyclic Jacobi eigensolvers for small Hermitian and real symmetric matrices.


// only needed when std is not linked
#[allow(unused_imports)]
use num_traits::Float;
use super::{c, hermitian_deviation, identity, CMatrix, C64, ZERO};
use crate::{Error, Result};

const MAX_SWEEPS: usize = 100;
const OFF_DIAGONAL_TOL: f64 = 1e-14;
const INPUT_HERMITIAN_TOL: f64 = 1e-10;

/// Eigenvalues in descending order, with eigenvectors as matrix columns.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spectrum<const N: usize> {
    pub values: [f64; N],
    pub vectors: Option<CMatrix<N>>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealSpectrum<const N: usize> {
    pub values: [f64; N],
    pub vectors: Option<[[f64; N]; N]>,
}

impl<const N: usize> Spectrum<N> {
    pub fn max(&self) -> f64 {
        self.values[0]
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    /// Number of eigenvalues strictly above `threshold`.
    pub fn rank(&self, threshold: f64) -> usize {
        self.values.iter().filter(|&&v| v > threshold).count()
    }
}

impl<const N: usize> RealSpectrum<N> {
    pub fn max(&self) -> f64 {
        self.values[0]
    }
}

fn off_diagonal_norm<const N: usize>(a: &CMatrix<N>) -> f64 {
    let mut acc = 0.0;
    for i in 0..N {
        for j in 0..N {
            if i != j {
                acc += a[i][j].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

fn frobenius<const N: usize>(a: &CMatrix<N>) -> f64 {
    a.iter().flatten().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// `tan` of the Jacobi angle that annihilates an off-diagonal element of
/// modulus `g` between diagonal entries `app` and `aqq`.
fn rotation(app: f64, aqq: f64, g: f64) -> (f64, f64) {
    let theta = (aqq - app) / (2.0 * g);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let cos = 1.0 / (t * t + 1.0).sqrt();
    (cos, t * cos)
}

/// Diagonalizes a Hermitian matrix. Entries are symmetrized before
/// iterating; exact zero couplings are never rotated, so an exactly
/// block-diagonal input keeps its zero blocks.
pub fn hermitian_eigen<const N: usize>(m: &CMatrix<N>, with_vectors: bool) -> Result<Spectrum<N>> {
    let deviation = hermitian_deviation(m);
    if !(deviation <= INPUT_HERMITIAN_TOL) {
        return Err(Error::NotHermitian { deviation });
    }
    let mut a = super::hermitize(m);
    let mut v: CMatrix<N> = identity();
    let scale = frobenius(&a).max(1.0);

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) <= OFF_DIAGONAL_TOL * scale {
            break;
        }
        for p in 0..N {
            for q in (p + 1)..N {
                let apq = a[p][q];
                let g = apq.norm();
                if g == 0.0 {
                    continue;
                }
                let phase = (apq / g).conj();
                let (cos, sin) = rotation(a[p][p].re, a[q][q].re, g);
                // J = D R with D = diag(.., phase at q, ..) and R the real rotation.
                let jpp = c(cos);
                let jpq = c(sin);
                let jqp = phase * -sin;
                let jqq = phase * cos;

                // A ← A J (columns p, q)
                for row in a.iter_mut() {
                    let (xp, xq) = (row[p], row[q]);
                    row[p] = xp * jpp + xq * jqp;
                    row[q] = xp * jpq + xq * jqq;
                }
                // A ← J† A (rows p, q)
                for k in 0..N {
                    let (xp, xq) = (a[p][k], a[q][k]);
                    a[p][k] = jpp.conj() * xp + jqp.conj() * xq;
                    a[q][k] = jpq.conj() * xp + jqq.conj() * xq;
                }
                a[p][q] = ZERO;
                a[q][p] = ZERO;
                a[p][p].im = 0.0;
                a[q][q].im = 0.0;
                if with_vectors {
                    for row in v.iter_mut() {
                        let (xp, xq) = (row[p], row[q]);
                        row[p] = xp * jpp + xq * jqp;
                        row[q] = xp * jpq + xq * jqq;
                    }
                }
            }
        }
    }

    let mut order = [0usize; N];
    for (i, o) in order.iter_mut().enumerate() {
        *o = i;
    }
    order.sort_unstable_by(|&i, &j| a[j][j].re.total_cmp(&a[i][i].re).then(i.cmp(&j)));
    let mut values = [0.0; N];
    let mut vectors = [[ZERO; N]; N];
    for (dst, &src) in order.iter().enumerate() {
        values[dst] = a[src][src].re;
        for r in 0..N {
            vectors[r][dst] = v[r][src];
        }
    }
    Ok(Spectrum {
        values,
        vectors: with_vectors.then_some(vectors),
    })
}

pub fn symmetric_eigen<const N: usize>(
    m: &[[f64; N]; N],
    with_vectors: bool,
) -> Result<RealSpectrum<N>> {
    let mut deviation = 0.0_f64;
    for i in 0..N {
        for j in 0..N {
            deviation = deviation.max((m[i][j] - m[j][i]).abs());
        }
    }
    if !(deviation <= INPUT_HERMITIAN_TOL) {
        return Err(Error::NotHermitian { deviation });
    }
    let mut a = *m;
    for i in 0..N {
        for j in 0..i {
            let avg = 0.5 * (m[i][j] + m[j][i]);
            a[i][j] = avg;
            a[j][i] = avg;
        }
    }
    let mut v = [[0.0; N]; N];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    let scale = a.iter().flatten().map(|x| x * x).sum::<f64>().sqrt().max(1.0);

    for _ in 0..MAX_SWEEPS {
        let mut off = 0.0;
        for i in 0..N {
            for j in 0..N {
                if i != j {
                    off += a[i][j] * a[i][j];
                }
            }
        }
        if off.sqrt() <= OFF_DIAGONAL_TOL * scale {
            break;
        }
        for p in 0..N {
            for q in (p + 1)..N {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let (cos, sin) = rotation(a[p][p], a[q][q], apq.abs());
                // fold the sign of apq into the rotation
                let sin = sin * apq.signum();
                for row in a.iter_mut() {
                    let (xp, xq) = (row[p], row[q]);
                    row[p] = cos * xp - sin * xq;
                    row[q] = sin * xp + cos * xq;
                }
                for k in 0..N {
                    let (xp, xq) = (a[p][k], a[q][k]);
                    a[p][k] = cos * xp - sin * xq;
                    a[q][k] = sin * xp + cos * xq;
                }
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                if with_vectors {
                    for row in v.iter_mut() {
                        let (xp, xq) = (row[p], row[q]);
                        row[p] = cos * xp - sin * xq;
                        row[q] = sin * xp + cos * xq;
                    }
                }
            }
        }
    }

    let mut order = [0usize; N];
    for (i, o) in order.iter_mut().enumerate() {
        *o = i;
    }
    order.sort_unstable_by(|&i, &j| a[j][j].total_cmp(&a[i][i]).then(i.cmp(&j)));
    let mut values = [0.0; N];
    let mut vectors = [[0.0; N]; N];
    for (dst, &src) in order.iter().enumerate() {
        values[dst] = a[src][src];
        for r in 0..N {
            vectors[r][dst] = v[r][src];
        }
    }
    Ok(RealSpectrum {
        values,
        vectors: with_vectors.then_some(vectors),
    })
}

pub fn symmetric_eigen3(m: &[[f64; 3]; 3], with_vectors: bool) -> Result<RealSpectrum<3>> {
    symmetric_eigen(m, with_vectors)
}

#[allow(dead_code)]
pub(crate) fn complex_from_real<const N: usize>(m: &[[f64; N]; N]) -> CMatrix<N> {
    let mut out = [[C64::new(0.0, 0.0); N]; N];
    for i in 0..N {
        for j in 0..N {
            out[i][j] = c(m[i][j]);
        }
    }
    out
}
