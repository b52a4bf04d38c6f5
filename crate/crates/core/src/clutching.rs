//! Sampled clutching loops `S¹ → GLₙ(C)` and their discrete invariants.
//!
//! A loop is stored as `N` matrices at the roots of unity
//! `z_j = exp(2πij/N)`. With `N` even the antipodal map `z ↦ −z` sends sample
//! `j` to sample `j + N/2`, so every reality condition can be checked exactly
//! on the grid without interpolation.
//!
//! Two conditions appear:
//!
//! * **clutching reality** `A(−z) = conj A(z)`: clutching maps of real bundle
//!   pairs over `(S¹ × S¹, id × antipodal)`. There are two homotopy classes;
//!   [`klein_class`] tells them apart.
//! * **involution condition** `B(−z)·conj B(z) = I`: the matrix `B` of a
//!   conjugation `(z, v) ↦ (−z, B(z) v̄)` covering the antipodal map on the
//!   boundary of a disk. For `B = A(−z)·conj(A(z))⁻¹` this is the bundle pair
//!   `c̃_{n,d}` when `A` has determinant winding `d`; the winding of `det B` is
//!   the Maslov index `2d` ([`classify_disk`]).

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::f64::consts::{PI, TAU};

pub type CMatrix = DMatrix<Complex64>;

/// Default tolerance for the discrete reality checks.
pub const REALITY_TOL: f64 = 1e-9;

/// Consecutive determinant phase jumps at or above this fraction of π are
/// treated as undersampling.
pub const ALIASING_FRACTION: f64 = 0.9;

const SINGULAR_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ClutchingError {
    #[error("loop has no samples")]
    Empty,
    #[error("sample count {0} is odd; the antipodal map must permute the grid")]
    OddSampleCount(usize),
    #[error("sample {index} has shape {rows}x{cols}, expected {n}x{n}")]
    Shape {
        index: usize,
        rows: usize,
        cols: usize,
        n: usize,
    },
    #[error("sample {index} is singular (|det| = {det_abs:e})")]
    Singular { index: usize, det_abs: f64 },
    #[error("determinant phase jumps by {jump:.3} rad between samples {index} and {next}; loop is undersampled")]
    Aliasing {
        index: usize,
        next: usize,
        jump: f64,
    },
    #[error("reality condition fails: max deviation {deviation:e} exceeds {tol:e}")]
    Reality { deviation: f64, tol: f64 },
    #[error("determinant winding {0} is odd; not the boundary matrix of a real bundle pair")]
    OddWinding(i64),
    #[error("phase-shift integer is not constant along the loop (saw {first} and {other} at sample {index})")]
    InconsistentShift {
        first: i64,
        other: i64,
        index: usize,
    },
    #[error("phase-shift value {value:.4} at sample {index} is not close to an integer")]
    NonIntegralShift { value: f64, index: usize },
}

/// A loop of invertible `n × n` matrices at `N` equispaced points on `S¹`.
#[derive(Clone, Debug, PartialEq)]
pub struct SampledLoop {
    n: usize,
    samples: Vec<CMatrix>,
}

#[derive(Serialize, Deserialize)]
struct RawLoop {
    n: usize,
    samples: Vec<Vec<[f64; 2]>>,
}

impl Serialize for SampledLoop {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let samples = self
            .samples
            .iter()
            .map(|m| {
                let mut flat = Vec::with_capacity(self.n * self.n);
                for i in 0..self.n {
                    for j in 0..self.n {
                        let c = m[(i, j)];
                        flat.push([c.re, c.im]);
                    }
                }
                flat
            })
            .collect();
        RawLoop { n: self.n, samples }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SampledLoop {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = RawLoop::deserialize(d)?;
        let n = raw.n;
        let mut samples = Vec::with_capacity(raw.samples.len());
        for (index, flat) in raw.samples.into_iter().enumerate() {
            if flat.len() != n * n {
                return Err(serde::de::Error::custom(format!(
                    "sample {index} has {} entries, expected {}",
                    flat.len(),
                    n * n
                )));
            }
            samples.push(CMatrix::from_row_iterator(
                n,
                n,
                flat.into_iter().map(|[re, im]| Complex64::new(re, im)),
            ));
        }
        SampledLoop::new(n, samples).map_err(serde::de::Error::custom)
    }
}

fn root_of_unity(j: usize, count: usize) -> Complex64 {
    Complex64::from_polar(1.0, TAU * j as f64 / count as f64)
}

fn conj(m: &CMatrix) -> CMatrix {
    m.map(|c| c.conj())
}

fn max_abs(m: &CMatrix) -> f64 {
    m.iter().fold(0.0, |a, c| a.max(c.norm()))
}

/// Wraps an angle into `(−π, π]`.
fn wrap(x: f64) -> f64 {
    let y = x.rem_euclid(TAU);
    if y > PI {
        y - TAU
    } else {
        y
    }
}

impl SampledLoop {
    pub fn new(n: usize, samples: Vec<CMatrix>) -> Result<Self, ClutchingError> {
        if samples.is_empty() {
            return Err(ClutchingError::Empty);
        }
        for (index, m) in samples.iter().enumerate() {
            if m.nrows() != n || m.ncols() != n {
                return Err(ClutchingError::Shape {
                    index,
                    rows: m.nrows(),
                    cols: m.ncols(),
                    n,
                });
            }
            let det_abs = m.clone().determinant().norm();
            if det_abs.is_nan() || det_abs <= SINGULAR_TOL {
                return Err(ClutchingError::Singular { index, det_abs });
            }
        }
        Ok(SampledLoop { n, samples })
    }

    /// Samples `f` at the `count` roots of unity.
    pub fn from_fn(
        n: usize,
        count: usize,
        f: impl Fn(Complex64) -> CMatrix,
    ) -> Result<Self, ClutchingError> {
        SampledLoop::new(n, (0..count).map(|j| f(root_of_unity(j, count))).collect())
    }

    pub fn constant(m: CMatrix, count: usize) -> Result<Self, ClutchingError> {
        let n = m.nrows();
        SampledLoop::new(n, vec![m; count])
    }

    pub fn identity(n: usize, count: usize) -> Self {
        SampledLoop::constant(CMatrix::identity(n, n), count).expect("identity is invertible")
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn samples(&self) -> &[CMatrix] {
        &self.samples
    }

    /// Pointwise matrix product.
    pub fn pointwise_mul(&self, other: &SampledLoop) -> Result<SampledLoop, ClutchingError> {
        if other.len() != self.len() || other.n != self.n {
            return Err(ClutchingError::Shape {
                index: 0,
                rows: other.n,
                cols: other.len(),
                n: self.n,
            });
        }
        SampledLoop::new(
            self.n,
            self.samples
                .iter()
                .zip(&other.samples)
                .map(|(a, b)| a * b)
                .collect(),
        )
    }

    fn half(&self) -> Result<usize, ClutchingError> {
        let count = self.samples.len();
        if count % 2 == 1 {
            return Err(ClutchingError::OddSampleCount(count));
        }
        Ok(count / 2)
    }

    fn dets(&self) -> Vec<Complex64> {
        self.samples
            .iter()
            .map(|m| m.clone().determinant())
            .collect()
    }

    /// Max elementwise deviation from `A(−z) = conj A(z)`.
    pub fn clutching_deviation(&self) -> Result<f64, ClutchingError> {
        let h = self.half()?;
        let count = self.samples.len();
        Ok((0..count)
            .map(|j| max_abs(&(&self.samples[(j + h) % count] - conj(&self.samples[j]))))
            .fold(0.0, f64::max))
    }

    /// Max elementwise deviation from `B(−z)·conj B(z) = I`.
    pub fn involution_deviation(&self) -> Result<f64, ClutchingError> {
        let h = self.half()?;
        let count = self.samples.len();
        let id = CMatrix::identity(self.n, self.n);
        Ok((0..count)
            .map(|j| max_abs(&(&self.samples[(j + h) % count] * conj(&self.samples[j]) - &id)))
            .fold(0.0, f64::max))
    }
}

/// `true` iff the samples satisfy `A(−z) = conj A(z)` within `tol`.
pub fn check_reality(l: &SampledLoop, tol: f64) -> Result<bool, ClutchingError> {
    Ok(l.clutching_deviation()? <= tol)
}

/// `true` iff the samples satisfy `B(−z)·conj B(z) = I` within `tol`.
pub fn check_involution(l: &SampledLoop, tol: f64) -> Result<bool, ClutchingError> {
    Ok(l.involution_deviation()? <= tol)
}

/// Unwrapped phase of `det` along the samples, starting at the principal
/// argument of the first sample, plus the winding number.
fn unwrapped_phase(l: &SampledLoop) -> Result<(Vec<f64>, i64), ClutchingError> {
    let dets = l.dets();
    let count = dets.len();
    let limit = ALIASING_FRACTION * PI;
    let mut phase = Vec::with_capacity(count);
    phase.push(dets[0].arg());
    let mut total = 0.0;
    for j in 0..count {
        let next = (j + 1) % count;
        let jump = wrap(dets[next].arg() - dets[j].arg());
        if jump.abs() >= limit {
            return Err(ClutchingError::Aliasing {
                index: j,
                next,
                jump,
            });
        }
        total += jump;
        if next != 0 {
            phase.push(phase[j] + jump);
        }
    }
    Ok((phase, (total / TAU).round() as i64))
}

/// Winding number of `det ∘ L` around the origin.
pub fn det_winding(l: &SampledLoop) -> Result<i64, ClutchingError> {
    unwrapped_phase(l).map(|(_, w)| w)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiskClass {
    pub d: i64,
    pub maslov: i64,
}

/// Classifies the real bundle pair over the disk whose boundary conjugation is
/// `(z, v) ↦ (−z, B(z) v̄)`, with `B` the sampled loop.
///
/// The winding of `det B` is the Maslov index and is always even; the pair is
/// isomorphic to `c̃_{n,d}` with `d` half of it.
pub fn classify_disk(l: &SampledLoop, tol: f64) -> Result<DiskClass, ClutchingError> {
    let deviation = l.involution_deviation()?;
    if deviation > tol {
        return Err(ClutchingError::Reality { deviation, tol });
    }
    let w = det_winding(l)?;
    if w % 2 != 0 {
        return Err(ClutchingError::OddWinding(w));
    }
    Ok(DiskClass {
        d: w / 2,
        maslov: w,
    })
}

/// The homotopy class of a clutching loop satisfying `A(−z) = conj A(z)`.
///
/// With `ψ` the unwrapped phase of `det A`, `ψ(θ + π) + ψ(θ) = 2πk` for an
/// integer `k` that is the same at every sample; `k mod 2` separates the
/// class of the identity from that of `diag(−1, 1, …, 1)`.
pub fn klein_class(l: &SampledLoop) -> Result<bool, ClutchingError> {
    let deviation = l.clutching_deviation()?;
    if deviation > REALITY_TOL {
        return Err(ClutchingError::Reality {
            deviation,
            tol: REALITY_TOL,
        });
    }
    let (phase, winding) = unwrapped_phase(l)?;
    let count = phase.len();
    let h = count / 2;
    let mut first = None;
    for j in 0..count {
        let opposite = if j + h < count {
            phase[j + h]
        } else {
            phase[j + h - count] + TAU * winding as f64
        };
        let value = (opposite + phase[j]) / TAU;
        let k = value.round();
        if (value - k).abs() > 0.25 {
            return Err(ClutchingError::NonIntegralShift { value, index: j });
        }
        let k = k as i64;
        match first {
            None => first = Some(k),
            Some(f) if f != k => {
                return Err(ClutchingError::InconsistentShift {
                    first: f,
                    other: k,
                    index: j,
                })
            }
            _ => {}
        }
    }
    Ok(first.unwrap_or(0).rem_euclid(2) == 1)
}

/// `diag((−1)^d z^{2d}, 1, …, 1)`: boundary matrix of `c̃_{n,d}`, i.e.
/// `A_d(−z)·conj(A_d(z))⁻¹` for `A_d = diag(z^d, 1, …, 1)`.
pub fn canonical_disk_loop(n: usize, d: i64, count: usize) -> Result<SampledLoop, ClutchingError> {
    let sign = if d.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    SampledLoop::from_fn(n, count, |z| {
        let mut m = CMatrix::identity(n, n);
        m[(0, 0)] = z.powi((2 * d) as i32) * sign;
        m
    })
}

/// Constant `diag(−1, 1, …, 1)` (twisted) or the identity.
pub fn canonical_klein_loop(n: usize, twisted: bool, count: usize) -> SampledLoop {
    let mut m = CMatrix::identity(n, n);
    if twisted {
        m[(0, 0)] = Complex64::new(-1.0, 0.0);
    }
    SampledLoop::constant(m, count).expect("diagonal sign matrix is invertible")
}

/// Random matrix-valued trigonometric polynomial `Σ_{|k|≤degree} C_k z^k`,
/// normalised so its largest entry over the grid has modulus `size`.
/// With `real` set the coefficients satisfy `C_{−k} = (−1)^k conj C_k`, which
/// makes `P(−z) = conj P(z)`.
fn random_trig_matrix<R: Rng>(
    rng: &mut R,
    n: usize,
    count: usize,
    degree: i32,
    real: bool,
    size: f64,
) -> Vec<CMatrix> {
    let mut coeffs: Vec<(i32, CMatrix)> = Vec::new();
    let draw = |rng: &mut R| {
        CMatrix::from_fn(n, n, |_, _| {
            Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
        })
    };
    if real {
        coeffs.push((0, draw(rng).map(|c| Complex64::new(c.re, 0.0))));
        for k in 1..=degree {
            let c = draw(rng);
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            coeffs.push((-k, conj(&c) * Complex64::new(sign, 0.0)));
            coeffs.push((k, c));
        }
    } else {
        for k in -degree..=degree {
            coeffs.push((k, draw(rng)));
        }
    }
    let values: Vec<CMatrix> = (0..count)
        .map(|j| {
            let z = root_of_unity(j, count);
            coeffs
                .iter()
                .fold(CMatrix::zeros(n, n), |acc, (k, c)| acc + c * z.powi(*k))
        })
        .collect();
    let peak = values
        .iter()
        .map(max_abs)
        .fold(0.0, f64::max)
        .max(f64::MIN_POSITIVE);
    let scale = Complex64::new(size / peak, 0.0);
    values.into_iter().map(|m| m * scale).collect()
}

/// Perturbs a boundary matrix by a random change of trivialization
/// `Ψ = I + E(z)` (entries of `E` at most `size`):
/// `B'(z) = Ψ(−z)·B(z)·conj(Ψ(z))⁻¹`. The involution condition is preserved
/// exactly and `Ψ` extends over the disk, so the class does not change.
pub fn perturb_disk_loop<R: Rng>(
    l: &SampledLoop,
    rng: &mut R,
    size: f64,
) -> Result<SampledLoop, ClutchingError> {
    let h = l.half()?;
    let count = l.len();
    let n = l.n;
    let e = random_trig_matrix(rng, n, count, 3, false, size);
    let psi: Vec<CMatrix> = e.into_iter().map(|m| CMatrix::identity(n, n) + m).collect();
    let mut out = Vec::with_capacity(count);
    for j in 0..count {
        let inv = conj(&psi[j])
            .try_inverse()
            .ok_or(ClutchingError::Singular {
                index: j,
                det_abs: 0.0,
            })?;
        out.push(&psi[(j + h) % count] * &l.samples[j] * inv);
    }
    SampledLoop::new(n, out)
}

/// Perturbs a clutching loop multiplicatively, `A' = (I + P(z))·A(z)`, with
/// `P(−z) = conj P(z)` and entries at most `size`.
pub fn perturb_klein_loop<R: Rng>(
    l: &SampledLoop,
    rng: &mut R,
    size: f64,
) -> Result<SampledLoop, ClutchingError> {
    l.half()?;
    let n = l.n;
    let p = random_trig_matrix(rng, n, l.len(), 3, true, size);
    SampledLoop::new(
        n,
        p.iter()
            .zip(&l.samples)
            .map(|(p, a)| (CMatrix::identity(n, n) + p) * a)
            .collect(),
    )
}

/// A loop with determinant winding `w` that satisfies neither reality
/// condition in general: `diag(z^w, 1, …)` times `I + E(z)`.
pub fn random_loop_with_winding(n: usize, w: i64, count: usize, seed: u64) -> SampledLoop {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let e = random_trig_matrix(&mut rng, n, count, 2, false, 0.05);
    SampledLoop::from_fn(n, count, |z| {
        let mut m = CMatrix::identity(n, n);
        m[(0, 0)] = z.powi(w as i32);
        m
    })
    .and_then(|base| {
        SampledLoop::new(
            n,
            e.into_iter()
                .zip(base.samples)
                .map(|(e, b)| (CMatrix::identity(n, n) + e) * b)
                .collect(),
        )
    })
    .expect("small perturbation of an invertible loop")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn scalar_loop(count: usize, f: impl Fn(f64) -> Complex64) -> SampledLoop {
        SampledLoop::from_fn(1, count, |z| CMatrix::from_element(1, 1, f(z.arg()))).unwrap()
    }

    fn bump_loop(count: usize) -> SampledLoop {
        scalar_loop(count, |t| Complex64::from_polar(1.0, PI * (1.0 + t.cos())))
    }

    #[test]
    fn reality_examples() {
        for count in [2, 8, 64] {
            assert!(check_reality(&SampledLoop::identity(3, count), REALITY_TOL).unwrap());
        }
        let zsq = SampledLoop::from_fn(2, 64, |z| {
            CMatrix::from_row_slice(2, 2, &[z * z, c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)])
        })
        .unwrap();
        assert!(!check_reality(&zsq, REALITY_TOL).unwrap());
        assert!(check_reality(&bump_loop(64), REALITY_TOL).unwrap());
        let odd = SampledLoop::identity(1, 7);
        assert_eq!(
            check_reality(&odd, 1e-9),
            Err(ClutchingError::OddSampleCount(7))
        );
    }

    #[test]
    fn reality_forces_zero_winding() {
        // det A(−z) = conj det A(z) makes the winding vanish.
        for seed in 0..10 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let l = perturb_klein_loop(&canonical_klein_loop(2, seed % 2 == 0, 128), &mut rng, 0.3)
                .unwrap();
            assert!(check_reality(&l, 1e-12).unwrap());
            assert_eq!(det_winding(&l).unwrap(), 0);
        }
    }

    #[test]
    fn winding_examples() {
        assert_eq!(det_winding(&SampledLoop::identity(2, 16)).unwrap(), 0);
        let zsq = SampledLoop::from_fn(3, 128, |z| {
            let mut m = CMatrix::identity(3, 3);
            m[(0, 0)] = z * z;
            m
        })
        .unwrap();
        assert_eq!(det_winding(&zsq).unwrap(), 2);
        let zinv = SampledLoop::from_fn(1, 128, |z| CMatrix::from_element(1, 1, z.inv())).unwrap();
        assert_eq!(det_winding(&zinv).unwrap(), -1);
    }

    #[test]
    fn aliasing_detected() {
        let fast = SampledLoop::from_fn(1, 8, |z| CMatrix::from_element(1, 1, z.powi(4))).unwrap();
        assert!(matches!(
            det_winding(&fast),
            Err(ClutchingError::Aliasing { .. })
        ));
    }

    #[test]
    fn singular_and_malformed_rejected() {
        assert!(matches!(
            SampledLoop::constant(CMatrix::zeros(2, 2), 4),
            Err(ClutchingError::Singular { index: 0, .. })
        ));
        assert_eq!(SampledLoop::new(1, vec![]), Err(ClutchingError::Empty));
        let bad: Result<SampledLoop, _> =
            serde_json::from_str(r#"{"n": 2, "samples": [[[1,0],[0,0],[0,0]]]}"#);
        assert!(bad.is_err());
    }

    #[test]
    fn json_round_trip() {
        let l = canonical_disk_loop(2, 1, 8).unwrap();
        let s = serde_json::to_string(&l).unwrap();
        let back: SampledLoop = serde_json::from_str(&s).unwrap();
        assert_eq!(back.len(), 8);
        for (a, b) in back.samples().iter().zip(l.samples()) {
            assert!(max_abs(&(a - b)) < 1e-15);
        }
        let row_major: SampledLoop = serde_json::from_str(
            r#"{"n": 2, "samples": [[[1,0],[2,0],[0,0],[1,0]], [[1,0],[2,0],[0,0],[1,0]]]}"#,
        )
        .unwrap();
        assert_eq!(row_major.samples()[0][(0, 1)], c(2.0, 0.0));
    }

    #[test]
    fn classify_examples() {
        let id = SampledLoop::identity(2, 64);
        assert_eq!(
            classify_disk(&id, REALITY_TOL).unwrap(),
            DiskClass { d: 0, maslov: 0 }
        );
        for d in [-1, 2] {
            let l = canonical_disk_loop(3, d, 128).unwrap();
            assert!(check_involution(&l, 1e-12).unwrap());
            assert_eq!(
                classify_disk(&l, REALITY_TOL).unwrap(),
                DiskClass { d, maslov: 2 * d }
            );
        }
    }

    #[test]
    fn classify_rejects_non_involutions() {
        let l = SampledLoop::from_fn(1, 64, |z| CMatrix::from_element(1, 1, z * 2.0)).unwrap();
        assert!(matches!(
            classify_disk(&l, REALITY_TOL),
            Err(ClutchingError::Reality { .. })
        ));
    }

    #[test]
    fn klein_examples() {
        assert!(!klein_class(&SampledLoop::identity(3, 64)).unwrap());
        assert!(klein_class(&canonical_klein_loop(3, true, 64)).unwrap());
        assert!(klein_class(&bump_loop(64)).unwrap());
    }

    #[test]
    fn klein_class_rejects_broken_reality() {
        let l = scalar_loop(64, |t| Complex64::from_polar(1.0, 0.3 * t.sin() + 0.1));
        assert!(matches!(
            klein_class(&l),
            Err(ClutchingError::Reality { .. })
        ));
    }

    #[test]
    fn perturbations_preserve_conditions_and_classes() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for d in -2..=2 {
            let base = canonical_disk_loop(2, d, 256).unwrap();
            for _ in 0..5 {
                let p = perturb_disk_loop(&base, &mut rng, 0.1).unwrap();
                assert!(check_involution(&p, 1e-10).unwrap());
                assert_eq!(classify_disk(&p, 1e-9).unwrap().d, d);
            }
        }
        for twisted in [false, true] {
            let base = canonical_klein_loop(3, twisted, 128);
            for _ in 0..5 {
                let p = perturb_klein_loop(&base, &mut rng, 0.09).unwrap();
                assert!(check_reality(&p, 1e-12).unwrap());
                assert_eq!(klein_class(&p).unwrap(), twisted);
            }
        }
    }

    #[test]
    fn winding_additive_under_products() {
        for seed in 0..200u64 {
            let w1 = (seed % 7) as i64 - 3;
            let w2 = (seed / 7 % 5) as i64 - 2;
            let a = random_loop_with_winding(2, w1, 128, seed);
            let b = random_loop_with_winding(2, w2, 128, seed + 1000);
            let ab = a.pointwise_mul(&b).unwrap();
            assert_eq!(
                det_winding(&ab).unwrap(),
                det_winding(&a).unwrap() + det_winding(&b).unwrap()
            );
        }
    }

    #[test]
    fn disk_winding_is_even() {
        // det B(θ+π) = 1/conj det B(θ) shifts the phase by a constant 2πk,
        // so the winding is 2k.
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for d in -3..=3 {
            let l =
                perturb_disk_loop(&canonical_disk_loop(1, d, 128).unwrap(), &mut rng, 0.2).unwrap();
            assert_eq!(det_winding(&l).unwrap() % 2, 0);
        }
    }
}
