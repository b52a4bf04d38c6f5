//! Kernel and index of the standard `∂̄` operator on the disk with a crosscap.
//!
//! On `(D², z ↦ −z on S¹)` the bundle pair `c̃_{1,d}` has sections given by
//! holomorphic `ξ(z) = Σ a_m z^m` with boundary condition
//! `ξ(−z) = (−1)^d z^{2d} conj ξ(z)` on `|z| = 1`. Comparing Fourier modes
//! gives `a_m (−1)^m = (−1)^d conj a_{2d−m}` (and `a_m = 0` when `2d − m < 0`),
//! which [`boundary_recurrence_kernel`] solves exactly. [`numerical_kernel_dim`]
//! recovers the same integer from a collocation matrix and its singular values.
//!
//! [`contour_integral`] evaluates `h^{(m)}(0) = (m!/2πi) ∮ −Re(z^{2k}) z^{−m−1} dz`
//! by the trapezoid rule, which is exact for trigonometric polynomials of
//! degree below the number of nodes.

use crate::bundles::{fredholm_index, RealBundlePair};
use crate::surfaces::ShSurface;
use accurate::sum::Sum3;
use accurate::traits::SumAccumulator;
use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

/// Minimum ratio between the smallest retained and largest discarded
/// singular value.
pub const MIN_SPECTRAL_GAP: f64 = 1e3;

pub const DEFAULT_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SpectralError {
    #[error("truncation K = {trunc} must be at least 2|d| + 2 = {min}")]
    Truncation { trunc: u32, min: u32 },
    #[error("collocation M = {colloc} must be at least 2K + 2 = {min}")]
    Collocation { colloc: u32, min: u32 },
    #[error("collocation M = {colloc} aliases Fourier modes; need M > 2K - 2d = {spread}")]
    Aliased { colloc: u32, spread: i64 },
    #[error("tolerance {0} must lie in (0, 1)")]
    Tolerance(f64),
    #[error(
        "no clear spectral gap (ratio {gap:.3e} < {MIN_SPECTRAL_GAP:e}); system is ill-conditioned"
    )]
    NoSpectralGap { gap: f64 },
    #[error("quadrature needs at least 2k + m + 2 = {min} points, got {points}")]
    TooFewPoints { points: u32, min: u32 },
    #[error("k must be positive")]
    ZeroK,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawProblem")]
pub struct DiskProblem {
    pub d: i64,
    pub trunc: u32,
    pub colloc: u32,
    pub tol: f64,
}

#[derive(Deserialize)]
struct RawProblem {
    d: i64,
    trunc: u32,
    colloc: u32,
    #[serde(default = "default_tol")]
    tol: f64,
}

fn default_tol() -> f64 {
    DEFAULT_TOL
}

impl TryFrom<RawProblem> for DiskProblem {
    type Error = SpectralError;
    fn try_from(r: RawProblem) -> Result<Self, SpectralError> {
        DiskProblem::new(r.d, r.trunc, r.colloc, r.tol)
    }
}

impl DiskProblem {
    pub fn new(d: i64, trunc: u32, colloc: u32, tol: f64) -> Result<Self, SpectralError> {
        let min_k = 2 * d.unsigned_abs() as u32 + 2;
        if trunc < min_k {
            return Err(SpectralError::Truncation { trunc, min: min_k });
        }
        let min_m = 2 * trunc + 2;
        if colloc < min_m {
            return Err(SpectralError::Collocation { colloc, min: min_m });
        }
        // Modes run from 2d - K to K; M nodes must separate them.
        let spread = 2 * trunc as i64 - 2 * d;
        if colloc as i64 <= spread {
            return Err(SpectralError::Aliased { colloc, spread });
        }
        if !(tol > 0.0 && tol < 1.0) {
            return Err(SpectralError::Tolerance(tol));
        }
        Ok(DiskProblem {
            d,
            trunc,
            colloc,
            tol,
        })
    }

    /// `K = 2|d| + 8`, `M = 4K`, default tolerance.
    pub fn standard(d: i64) -> Self {
        let trunc = 2 * d.unsigned_abs() as u32 + 8;
        DiskProblem::new(d, trunc, 4 * trunc, DEFAULT_TOL).expect("standard sizes are valid")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecurrenceKernel {
    pub dim: u32,
    pub relations: Vec<String>,
}

/// Exact real dimension of the space of holomorphic `ξ` with the twisted
/// boundary condition, by pairing Taylor coefficients `m ↔ 2d − m`.
pub fn boundary_recurrence_kernel(d: i64) -> RecurrenceKernel {
    let mut dim = 0;
    let mut relations = Vec::new();
    if d < 0 {
        relations.push("a_m = 0 for all m".to_string());
        return RecurrenceKernel { dim, relations };
    }
    for m in 0..=d {
        let partner = 2 * d - m;
        if partner == m {
            dim += 1;
            relations.push(format!("a_{m} real"));
        } else {
            dim += 2;
            let sign = if (d + m) % 2 == 0 { "" } else { "-" };
            relations.push(format!("a_{partner} = {sign}conj(a_{m}), a_{m} free"));
        }
    }
    relations.push(format!("a_m = 0 for m > {}", 2 * d));
    RecurrenceKernel { dim, relations }
}

/// Cokernel dimension, via Serre duality with the twist `−1 − d`.
pub fn recurrence_cokernel(d: i64) -> u32 {
    boundary_recurrence_kernel(-1 - d).dim
}

/// Real collocation matrix of `ξ ↦ ξ(−z) − (−1)^d z^{2d} conj ξ(z)` on the
/// unknowns `(Re a_0, Im a_0, …, Re a_K, Im a_K)`.
pub fn collocation_matrix(p: &DiskProblem) -> DMatrix<f64> {
    let k = p.trunc as usize;
    let m_pts = p.colloc as usize;
    let s = if p.d.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    let mut a = DMatrix::<f64>::zeros(2 * m_pts, 2 * (k + 1));
    for j in 0..m_pts {
        let z = Complex64::from_polar(1.0, TAU * j as f64 / m_pts as f64);
        for m in 0..=k {
            let fwd = z.powi(m as i32) * if m % 2 == 0 { 1.0 } else { -1.0 };
            let refl = z.powi((2 * p.d - m as i64) as i32) * s;
            let col_re = fwd - refl;
            let col_im = Complex64::i() * (fwd + refl);
            a[(2 * j, 2 * m)] = col_re.re;
            a[(2 * j + 1, 2 * m)] = col_re.im;
            a[(2 * j, 2 * m + 1)] = col_im.re;
            a[(2 * j + 1, 2 * m + 1)] = col_im.im;
        }
    }
    a
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KernelEstimate {
    pub dim: u32,
    pub gap: f64,
    pub sigma_max: f64,
}

/// Kernel dimension of the collocation system together with its spectral gap.
pub fn numerical_kernel(p: &DiskProblem) -> Result<KernelEstimate, SpectralError> {
    let a = collocation_matrix(p);
    let mut sv: Vec<f64> = a.singular_values().iter().copied().collect();
    sv.sort_by(|x, y| y.total_cmp(x));
    let sigma_max = sv[0];
    let cut = p.tol * sigma_max;
    let dim = sv.iter().filter(|s| **s < cut).count();
    let kept_min = sv[sv.len() - dim - 1];
    let gap = if dim == 0 {
        kept_min / cut
    } else {
        kept_min / sv[sv.len() - dim].max(f64::MIN_POSITIVE)
    };
    if gap < MIN_SPECTRAL_GAP {
        return Err(SpectralError::NoSpectralGap { gap });
    }
    Ok(KernelEstimate {
        dim: dim as u32,
        gap,
        sigma_max,
    })
}

pub fn numerical_kernel_dim(p: &DiskProblem) -> Result<u32, SpectralError> {
    numerical_kernel(p).map(|k| k.dim)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IndexCheck {
    pub d: i64,
    pub kernel: u32,
    pub cokernel: u32,
    pub numerical_index: i64,
    pub expected_index: i64,
    pub pass: bool,
}

/// Compares `dim ker − dim coker` with the index formula for the rank-one
/// pair of Maslov index `2d` over the disk with a crosscap.
pub fn fredholm_cross_check_detail(d: i64) -> Result<IndexCheck, SpectralError> {
    let kernel = numerical_kernel_dim(&DiskProblem::standard(d))?;
    let cokernel = if d < 0 { recurrence_cokernel(d) } else { 0 };
    let numerical_index = kernel as i64 - cokernel as i64;
    let pair =
        RealBundlePair::new(1, 2 * d, vec![]).expect("even Maslov index, no standard components");
    let expected_index = fredholm_index(&pair, &ShSurface::disk_with_crosscap())
        .expect("pair matches the crosscap disk");
    Ok(IndexCheck {
        d,
        kernel,
        cokernel,
        numerical_index,
        expected_index,
        pass: numerical_index == expected_index,
    })
}

pub fn fredholm_cross_check(d: i64) -> bool {
    fredholm_cross_check_detail(d).is_ok_and(|c| c.pass)
}

/// `cos(2πj/N)` with the symmetries `c[N−j] = c[j]` and `c[N/2−j] = −c[j]`
/// imposed exactly, so that sums over full cosets cancel to zero.
fn cosine_table(n: usize) -> Vec<f64> {
    let mut c: Vec<f64> = (0..n).map(|j| (TAU * j as f64 / n as f64).cos()).collect();
    if n.is_multiple_of(4) {
        c[n / 4] = 0.0;
    }
    if n.is_multiple_of(2) {
        let h = n / 2;
        for j in 0..=h / 2 {
            c[h - j] = -c[j];
        }
    }
    for j in 1..=n / 2 {
        c[n - j] = c[j];
    }
    c
}

fn factorial(m: u32) -> f64 {
    (1..=m).fold(1.0, |acc, i| acc * i as f64)
}

/// Trapezoidal value of `h^{(m)}(0)` for the harmonic extension problem with
/// boundary data `−Re z^{2k}`: `−(2k)!/2` when `m = 2k`, zero otherwise.
pub fn contour_integral(k: u32, m: u32, points: u32) -> Result<f64, SpectralError> {
    if k == 0 {
        return Err(SpectralError::ZeroK);
    }
    let min = 2 * k + m + 2;
    if points < min {
        return Err(SpectralError::TooFewPoints { points, min });
    }
    let n = points as usize;
    let table = cosine_table(n);
    let (up, down) = (2 * k as i64 - m as i64, -2 * k as i64 - m as i64);
    // Real part of the integrand −½(z^{2k−m} + z^{−2k−m}); the sine parts
    // cancel pairwise.
    let mut acc = Sum3::zero();
    for j in 0..n as i64 {
        let a = table[(up * j).rem_euclid(n as i64) as usize];
        let b = table[(down * j).rem_euclid(n as i64) as usize];
        acc += -0.5 * a;
        acc += -0.5 * b;
    }
    Ok(acc.sum() / n as f64 * factorial(m))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Reconstruction {
    pub k: u32,
    /// Taylor coefficient of `z^{2k}` in `h`, recovered by quadrature.
    pub coefficient: f64,
    /// `max |Re(z^{2k} + h) − ½ Re z^{2k}|` on the sample points.
    pub max_deviation: f64,
    /// Peak-to-peak range of `Re(z^{2k} + h)` on the circle.
    pub amplitude: f64,
}

/// Rebuilds `h(z) = −½ z^{2k}` from its quadrature Taylor coefficient and
/// checks the boundary identity `Re(z^{2k} + h) = ½ Re z^{2k}` at `points`
/// equispaced boundary points. The sum is not constant, so no holomorphic
/// `h` makes `z^{2k}` satisfy the real boundary condition.
pub fn contour_reconstruction(k: u32, points: u32) -> Result<Reconstruction, SpectralError> {
    let m = 2 * k;
    let coefficient = contour_integral(k, m, (2 * k + m + 2).max(64))? / factorial(m);
    let mut max_deviation: f64 = 0.0;
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for j in 0..points {
        let z = Complex64::from_polar(1.0, TAU * j as f64 / points as f64);
        let w = z.powi(m as i32);
        let h = w * coefficient;
        let v = (w + h).re;
        max_deviation = max_deviation.max((v - 0.5 * w.re).abs());
        lo = lo.min(v);
        hi = hi.max(v);
    }
    Ok(Reconstruction {
        k,
        coefficient,
        max_deviation,
        amplitude: hi - lo,
    })
}
