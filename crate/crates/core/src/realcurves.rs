//! Real rational maps `ℙ¹ → ℙⁿ` intertwining `η[x, y] = [−ȳ, x̄]` with complex
//! conjugation `τₙ`.
//!
//! Each coordinate is `pᵢ = Aᵢ ∏_r (x − b_{i,r} y)(b̄_{i,r} x + y)` with `Aᵢ`
//! real. A factor pair vanishes exactly on the η-orbit `{b, −1/b̄}`, which is
//! why `pᵢ ∘ η = (−1)^{d/2} conj pᵢ`. The degree must be even: for odd `d` no
//! nonzero tuple satisfies the functional equation (see
//! [`equivariance_residual`]).
//!
//! Polynomials are stored by coefficient lists ordered `x^d, x^{d−1}y, …, y^d`.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RealCurveError {
    #[error("degree {0} must be even and positive")]
    Degree(u32),
    #[error("expected {expected} {what}, got {got}")]
    Length {
        what: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("all coefficients A_i are zero")]
    ZeroA,
    #[error("coefficient {0} is not finite")]
    NonFinite(String),
    #[error("tuple is empty or all polynomials vanish")]
    ZeroTuple,
    #[error("polynomials have different lengths")]
    Ragged,
    #[error("sample {index} hits a common zero of the tuple (base point)")]
    BasePoint { index: usize },
    #[error("root 0 has no finite partner; swap is undefined")]
    ZeroRoot,
    #[error("index out of range")]
    Index,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawParams")]
pub struct RealMapParams {
    n: usize,
    d: u32,
    #[serde(rename = "A")]
    a: Vec<f64>,
    roots: Vec<Vec<Complex64>>,
}

#[derive(Deserialize)]
struct RawParams {
    n: usize,
    d: u32,
    #[serde(rename = "A", alias = "a")]
    a: Vec<f64>,
    roots: Vec<Vec<Complex64>>,
}

impl TryFrom<RawParams> for RealMapParams {
    type Error = RealCurveError;
    fn try_from(r: RawParams) -> Result<Self, RealCurveError> {
        RealMapParams::new(r.n, r.d, r.a, r.roots)
    }
}

impl RealMapParams {
    pub fn new(
        n: usize,
        d: u32,
        a: Vec<f64>,
        roots: Vec<Vec<Complex64>>,
    ) -> Result<Self, RealCurveError> {
        if d == 0 || d % 2 == 1 {
            return Err(RealCurveError::Degree(d));
        }
        if a.len() != n + 1 {
            return Err(RealCurveError::Length {
                what: "coefficients A_i",
                expected: n + 1,
                got: a.len(),
            });
        }
        if roots.len() != n + 1 {
            return Err(RealCurveError::Length {
                what: "root lists",
                expected: n + 1,
                got: roots.len(),
            });
        }
        for r in &roots {
            if r.len() != d as usize / 2 {
                return Err(RealCurveError::Length {
                    what: "roots per coordinate",
                    expected: d as usize / 2,
                    got: r.len(),
                });
            }
            if let Some(b) = r.iter().find(|b| !b.is_finite()) {
                return Err(RealCurveError::NonFinite(b.to_string()));
            }
        }
        if let Some(x) = a.iter().find(|x| !x.is_finite()) {
            return Err(RealCurveError::NonFinite(x.to_string()));
        }
        if a.iter().all(|x| *x == 0.0) {
            return Err(RealCurveError::ZeroA);
        }
        Ok(RealMapParams { n, d, a, roots })
    }

    /// Random parameters: `Aᵢ` uniform in `±[0.5, 2]`, roots uniform in the
    /// square `[−2, 2]²`.
    pub fn random<R: Rng>(n: usize, d: u32, rng: &mut R) -> Result<Self, RealCurveError> {
        let a = (0..=n)
            .map(|_| {
                let v = rng.random_range(0.5..2.0);
                if rng.random_bool(0.5) {
                    v
                } else {
                    -v
                }
            })
            .collect();
        let roots = (0..=n)
            .map(|_| {
                (0..d / 2)
                    .map(|_| {
                        Complex64::new(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0))
                    })
                    .collect()
            })
            .collect();
        RealMapParams::new(n, d, a, roots)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn a(&self) -> &[f64] {
        &self.a
    }

    pub fn roots(&self) -> &[Vec<Complex64>] {
        &self.roots
    }

    /// Replaces `b_{i,r}` by its η-partner `−1/b̄` and rescales `Aᵢ` by `−|b|²`,
    /// which leaves `pᵢ` unchanged.
    pub fn swap_root(&self, i: usize, r: usize) -> Result<Self, RealCurveError> {
        let b = *self
            .roots
            .get(i)
            .and_then(|l| l.get(r))
            .ok_or(RealCurveError::Index)?;
        if b == Complex64::new(0.0, 0.0) {
            return Err(RealCurveError::ZeroRoot);
        }
        let mut out = self.clone();
        out.roots[i][r] = -b.conj().inv();
        out.a[i] *= -b.norm_sqr();
        Ok(out)
    }

    /// Conjugates every root; `A` is real and stays fixed.
    pub fn conjugate(&self) -> Self {
        let mut out = self.clone();
        for l in &mut out.roots {
            for b in l.iter_mut() {
                *b = b.conj();
            }
        }
        out
    }
}

/// `n + 1` homogeneous polynomials of a common degree in `(x, y)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<Complex64>>", into = "Vec<Vec<Complex64>>")]
pub struct PolyTuple {
    polys: Vec<Vec<Complex64>>,
}

impl TryFrom<Vec<Vec<Complex64>>> for PolyTuple {
    type Error = RealCurveError;
    fn try_from(polys: Vec<Vec<Complex64>>) -> Result<Self, RealCurveError> {
        PolyTuple::new(polys)
    }
}

impl From<PolyTuple> for Vec<Vec<Complex64>> {
    fn from(t: PolyTuple) -> Self {
        t.polys
    }
}

impl PolyTuple {
    pub fn new(polys: Vec<Vec<Complex64>>) -> Result<Self, RealCurveError> {
        let len = polys.first().map(Vec::len).unwrap_or(0);
        if len == 0 {
            return Err(RealCurveError::ZeroTuple);
        }
        if polys.iter().any(|p| p.len() != len) {
            return Err(RealCurveError::Ragged);
        }
        if polys
            .iter()
            .flatten()
            .all(|c| *c == Complex64::new(0.0, 0.0))
        {
            return Err(RealCurveError::ZeroTuple);
        }
        Ok(PolyTuple { polys })
    }

    /// Independent random coefficients, real and imaginary parts in `[−1, 1]`.
    pub fn random<R: Rng>(n: usize, d: u32, rng: &mut R) -> Self {
        let polys = (0..=n)
            .map(|_| {
                (0..=d)
                    .map(|_| {
                        Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
                    })
                    .collect()
            })
            .collect();
        PolyTuple::new(polys).expect("random coefficients are nonzero almost surely")
    }

    pub fn degree(&self) -> usize {
        self.polys[0].len() - 1
    }

    pub fn polys(&self) -> &[Vec<Complex64>] {
        &self.polys
    }

    pub fn eval(&self, x: Complex64, y: Complex64) -> Vec<Complex64> {
        self.polys.iter().map(|p| eval_poly(p, x, y)).collect()
    }
}

fn eval_poly(p: &[Complex64], x: Complex64, y: Complex64) -> Complex64 {
    // Horner in the ratio, written homogeneously to stay finite at y = 0.
    let d = p.len() - 1;
    let mut acc = Complex64::new(0.0, 0.0);
    let mut ypow = Complex64::new(1.0, 0.0);
    let mut xpows = vec![Complex64::new(1.0, 0.0); d + 1];
    for k in 1..=d {
        xpows[k] = xpows[k - 1] * x;
    }
    for (j, c) in p.iter().enumerate() {
        acc += c * xpows[d - j] * ypow;
        ypow *= y;
    }
    acc
}

fn mul_poly(p: &[Complex64], q: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); p.len() + q.len() - 1];
    for (i, a) in p.iter().enumerate() {
        for (j, b) in q.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

/// Expands the factored coordinates.
pub fn build(p: &RealMapParams) -> PolyTuple {
    let one = Complex64::new(1.0, 0.0);
    let polys =
        p.a.iter()
            .zip(&p.roots)
            .map(|(a, roots)| {
                let mut poly = vec![Complex64::new(*a, 0.0)];
                for b in roots {
                    poly = mul_poly(&poly, &[one, -b]);
                    poly = mul_poly(&poly, &[b.conj(), one]);
                }
                poly
            })
            .collect();
    PolyTuple { polys }
}

/// Sine of the angle between two complex lines `[P]`, `[Q]` in `ℂⁿ⁺¹`.
pub fn projective_distance(p: &[Complex64], q: &[Complex64]) -> f64 {
    let np = p.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    let nq = q.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    let mut s = 0.0;
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            s += (p[a] * q[b] - p[b] * q[a]).norm_sqr();
        }
    }
    s.sqrt() / (np * nq)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EquivarianceReport {
    pub samples: usize,
    pub max_deviation: f64,
    pub pass: bool,
}

/// Samples random points of `ℙ¹` and measures how far `u ∘ η` is from
/// `τₙ ∘ u`.
pub fn check_equivariance<R: Rng>(
    t: &PolyTuple,
    samples: usize,
    tol: f64,
    rng: &mut R,
) -> Result<EquivarianceReport, RealCurveError> {
    let scale: f64 = t.polys.iter().flatten().map(|c| c.norm()).sum();
    let zero = 1e-12 * scale;
    let mut max_deviation: f64 = 0.0;
    for index in 0..samples {
        let x = Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
        let y = Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
        let norm = (x.norm_sqr() + y.norm_sqr()).sqrt();
        let (x, y) = (x / norm, y / norm);
        let lhs = t.eval(-y.conj(), x.conj());
        let rhs: Vec<Complex64> = t.eval(x, y).iter().map(|c| c.conj()).collect();
        let small = |v: &[Complex64]| v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt() <= zero;
        if small(&lhs) || small(&rhs) {
            return Err(RealCurveError::BasePoint { index });
        }
        max_deviation = max_deviation.max(projective_distance(&lhs, &rhs));
    }
    Ok(EquivarianceReport {
        samples,
        max_deviation,
        pass: max_deviation <= tol,
    })
}

pub fn check_equivariance_seeded(
    t: &PolyTuple,
    samples: usize,
    tol: f64,
    seed: u64,
) -> Result<EquivarianceReport, RealCurveError> {
    check_equivariance(t, samples, tol, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Relative least-squares residual of the coefficient identity
/// `(−1)^j c_{d−j} = λ conj c_j` (all coordinates, one `λ`), minimised over
/// `λ ∈ ℂ`. Zero exactly for equivariant tuples. For odd `d` the optimal `λ`
/// is always 0 and the residual is exactly 1.
pub fn equivariance_residual(t: &PolyTuple) -> f64 {
    let d = t.degree();
    let mut v = Vec::new();
    let mut w = Vec::new();
    for p in &t.polys {
        for j in 0..=d {
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            v.push(p[d - j] * sign);
            w.push(p[j].conj());
        }
    }
    let ww: f64 = w.iter().map(|c| c.norm_sqr()).sum();
    let wv: Complex64 = w.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
    let lambda = wv / ww;
    let r: f64 = v
        .iter()
        .zip(&w)
        .map(|(a, b)| (a - lambda * b).norm_sqr())
        .sum();
    (r / ww).sqrt()
}

/// Chordal distance on the Riemann sphere; `None` is the point at infinity.
pub fn chordal(z: Option<Complex64>, w: Option<Complex64>) -> f64 {
    match (z, w) {
        (None, None) => 0.0,
        (Some(z), None) | (None, Some(z)) => 1.0 / (1.0 + z.norm_sqr()).sqrt(),
        (Some(z), Some(w)) => (z - w).norm() / ((1.0 + z.norm_sqr()) * (1.0 + w.norm_sqr())).sqrt(),
    }
}

fn eta_partner(b: Complex64) -> Option<Complex64> {
    if b == Complex64::new(0.0, 0.0) {
        None
    } else {
        Some(-b.conj().inv())
    }
}

/// Zero set of `pᵢ` on the sphere, or `None` when `Aᵢ = 0` (the whole sphere).
pub fn orbit_set(p: &RealMapParams, i: usize) -> Option<Vec<Option<Complex64>>> {
    if p.a[i] == 0.0 {
        return None;
    }
    Some(
        p.roots[i]
            .iter()
            .flat_map(|b| [Some(*b), eta_partner(*b)])
            .collect(),
    )
}

/// `true` iff all coordinates share a zero, i.e. the tuple has a base point.
pub fn in_delta(p: &RealMapParams, tol: f64) -> bool {
    let sets: Vec<Vec<Option<Complex64>>> = (0..=p.n).filter_map(|i| orbit_set(p, i)).collect();
    let Some((first, rest)) = sets.split_first() else {
        return true;
    };
    first.iter().any(|z| {
        rest.iter()
            .all(|set| set.iter().any(|w| chordal(*z, *w) <= tol))
    })
}

/// Parameters forced into Δ: a random point `b` (or its partner) is planted as
/// a root of every coordinate.
pub fn planted_delta_params<R: Rng>(
    n: usize,
    d: u32,
    rng: &mut R,
) -> Result<RealMapParams, RealCurveError> {
    let base = RealMapParams::random(n, d, rng)?;
    let b = Complex64::new(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0));
    let mut roots = base.roots.clone();
    for l in roots.iter_mut() {
        let r = rng.random_range(0..l.len());
        l[r] = if rng.random_bool(0.5) {
            b
        } else {
            -b.conj().inv()
        };
    }
    RealMapParams::new(n, d, base.a, roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn simple() -> RealMapParams {
        RealMapParams::new(
            1,
            2,
            vec![1.0, 1.0],
            vec![vec![c(0.0, 0.0)], vec![c(1.0, 0.0)]],
        )
        .unwrap()
    }

    #[test]
    fn build_examples() {
        let t = build(&simple());
        assert_eq!(t.polys()[0], vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)]);
        assert_eq!(t.polys()[1], vec![c(1.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)]);
        let z =
            RealMapParams::new(2, 4, vec![2.0, 1.0, -1.0], vec![vec![c(0.0, 0.0); 2]; 3]).unwrap();
        for (p, a) in build(&z).polys().iter().zip([2.0, 1.0, -1.0]) {
            let mut expected = vec![c(0.0, 0.0); 5];
            expected[2] = c(a, 0.0);
            assert_eq!(*p, expected);
        }
    }

    #[test]
    fn params_validation() {
        assert_eq!(
            RealMapParams::new(1, 3, vec![1.0, 1.0], vec![vec![], vec![]]),
            Err(RealCurveError::Degree(3))
        );
        assert_eq!(
            RealMapParams::new(1, 2, vec![0.0, 0.0], vec![vec![c(0.0, 0.0)]; 2]),
            Err(RealCurveError::ZeroA)
        );
        assert!(RealMapParams::new(1, 2, vec![1.0], vec![vec![c(0.0, 0.0)]; 2]).is_err());
        let p: RealMapParams =
            serde_json::from_str(r#"{"n":1,"d":2,"A":[1,1],"roots":[[[0,0]],[[1,0]]]}"#).unwrap();
        assert_eq!(p, simple());
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(
            s,
            r#"{"n":1,"d":2,"A":[1.0,1.0],"roots":[[[0.0,0.0]],[[1.0,0.0]]]}"#
        );
    }

    #[test]
    fn equivariance_examples() {
        let r = check_equivariance_seeded(&build(&simple()), 100, 1e-9, 0).unwrap();
        assert!(r.pass, "{r:?}");
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let generic = PolyTuple::random(1, 2, &mut rng);
        assert!(
            check_equivariance(&generic, 100, 1e-9, &mut rng)
                .unwrap()
                .max_deviation
                > 0.1
        );
        let odd = PolyTuple::random(1, 3, &mut rng);
        assert!(
            check_equivariance(&odd, 100, 1e-9, &mut rng)
                .unwrap()
                .max_deviation
                > 0.1
        );
    }

    #[test]
    fn zero_coordinate_is_base_point_free_but_in_delta() {
        let p = RealMapParams::new(
            1,
            2,
            vec![1.0, 0.0],
            vec![vec![c(0.0, 0.0)], vec![c(1.0, 0.0)]],
        )
        .unwrap();
        assert!(in_delta(&p, 1e-8));
    }

    #[test]
    fn base_point_detected() {
        let p = RealMapParams::new(
            1,
            2,
            vec![1.0, 1.0],
            vec![vec![c(0.3, 0.1)], vec![c(0.3, 0.1)]],
        )
        .unwrap();
        let t = build(&p);
        let lhs = t.eval(c(0.3, 0.1), c(1.0, 0.0));
        assert!(lhs.iter().all(|v| v.norm() < 1e-15));
    }

    #[test]
    fn delta_examples() {
        assert!(!in_delta(&simple(), 1e-8));
        let same = RealMapParams::new(1, 2, vec![1.0, 1.0], vec![vec![c(1.0, 0.0)]; 2]).unwrap();
        assert!(in_delta(&same, 1e-8));
        let pm = RealMapParams::new(
            1,
            2,
            vec![1.0, 1.0],
            vec![vec![c(0.0, 1.0)], vec![c(0.0, -1.0)]],
        )
        .unwrap();
        assert!(in_delta(&pm, 1e-8));
        let infinity = RealMapParams::new(
            1,
            2,
            vec![1.0, 1.0],
            vec![vec![c(0.0, 0.0)], vec![c(0.0, 0.0)]],
        )
        .unwrap();
        assert!(in_delta(&infinity, 1e-8));
    }

    #[test]
    fn chordal_metric() {
        assert_eq!(chordal(None, None), 0.0);
        assert!((chordal(Some(c(0.0, 0.0)), None) - 1.0).abs() < 1e-15);
        assert!(chordal(Some(c(1e9, 0.0)), None) < 1e-8);
    }

    #[test]
    fn random_maps_are_equivariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..30 {
            let n = rng.random_range(1..=3);
            let d = [2, 4][rng.random_range(0..2)];
            let p = RealMapParams::random(n, d, &mut rng).unwrap();
            if in_delta(&p, 1e-8) {
                continue;
            }
            let t = build(&p);
            assert!(equivariance_residual(&t) < 1e-12);
            assert!(check_equivariance(&t, 200, 1e-9, &mut rng).unwrap().pass);
        }
    }

    #[test]
    fn planted_cases_in_delta() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..20 {
            let p = planted_delta_params(rng.random_range(1..=3), 4, &mut rng).unwrap();
            assert!(in_delta(&p, 1e-8));
        }
    }

    #[test]
    fn odd_degree_residual_is_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let r = equivariance_residual(&PolyTuple::random(rng.random_range(1..=3), 3, &mut rng));
            assert!((r - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn swap_root_keeps_map() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let p = RealMapParams::random(2, 4, &mut rng).unwrap();
        let q = p.swap_root(1, 0).unwrap();
        let (tp, tq) = (build(&p), build(&q));
        for _ in 0..50 {
            let x = c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
            let y = c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
            assert!(projective_distance(&tp.eval(x, y), &tq.eval(x, y)) < 1e-9);
        }
        assert_eq!(
            RealMapParams::new(1, 2, vec![1.0, 1.0], vec![vec![c(0.0, 0.0)]; 2])
                .unwrap()
                .swap_root(0, 0),
            Err(RealCurveError::ZeroRoot)
        );
    }

    #[test]
    fn conjugate_roots_compose_with_tau() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let p = RealMapParams::random(3, 2, &mut rng).unwrap();
        let (t, tc) = (build(&p), build(&p.conjugate()));
        for _ in 0..50 {
            let x = c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
            let y = c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
            let lhs = tc.eval(x, y);
            let rhs: Vec<_> = t
                .eval(x.conj(), y.conj())
                .iter()
                .map(|v| v.conj())
                .collect();
            assert!(projective_distance(&lhs, &rhs) < 1e-9);
        }
    }
}
