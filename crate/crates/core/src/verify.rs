//! End-to-end acceptance checks. Each criterion recomputes a result with an
//! independent method (brute force, a second formula, or a numerical
//! experiment) and compares.
//!
//! All randomness is drawn from one `u64` seed.

use crate::bundles::{klein_eqw2, KleinTorusPair};
use crate::clutching::{
    canonical_disk_loop, canonical_klein_loop, check_involution, check_reality, classify_disk,
    klein_class, perturb_disk_loop, perturb_klein_loop, CMatrix, SampledLoop, REALITY_TOL,
};
use crate::cohomology::{
    cup_pair, square_class_cokernel, square_pairing, whitney_w2, H1Presentation, OneClass,
    SurfaceCohomology,
};
use crate::holonomy::{
    complete_intersection_check, decompose, holonomy, CrosscapLoopData, OperatorLoop,
    StdBoundaryLoopData,
};
use crate::realcurves::{
    build, check_equivariance, equivariance_residual, in_delta, planted_delta_params, PolyTuple,
    RealMapParams,
};
use crate::spectral::{
    boundary_recurrence_kernel, contour_integral, fredholm_cross_check_detail, numerical_kernel,
    DiskProblem, MIN_SPECTRAL_GAP,
};
use crate::surfaces::{BoundaryKind, ShSurface};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::f64::consts::PI;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl CriterionResult {
    fn new(id: u8, name: &str, failures: Vec<String>, checked: usize) -> Self {
        let pass = failures.is_empty();
        let detail = if pass {
            format!("{checked} checks")
        } else {
            let shown: Vec<_> = failures.iter().take(5).cloned().collect();
            format!(
                "{} of {checked} checks failed: {}",
                failures.len(),
                shown.join("; ")
            )
        };
        CriterionResult {
            id,
            name: name.to_string(),
            pass,
            detail,
        }
    }
}

fn rng_for(seed: u64, id: u8) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(
        seed.wrapping_mul(0x9E37_79B9_7F4A_7C15)
            .wrapping_add(id as u64),
    )
}

fn all_bits(n: usize) -> impl Iterator<Item = Vec<bool>> {
    (0u32..1 << n).map(move |m| (0..n).map(|i| m >> i & 1 == 1).collect())
}

/// Equivariant `w₂` on the Klein torus, twice.
pub fn criterion1() -> CriterionResult {
    let torus = SurfaceCohomology::orientable(1);
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 1..=6 {
        for twist in [false, true] {
            let k = KleinTorusPair::new(n, twist).expect("positive rank");
            let direct = klein_eqw2(&k);
            let via_lines = whitney_w2(&k.real_line_classes(), &torus);
            checked += 1;
            if direct != twist || via_lines != Ok(twist) {
                failures.push(format!(
                    "n={n} twist={twist}: eqw2={direct} whitney={via_lines:?}"
                ));
            }
        }
    }
    CriterionResult::new(1, "Klein-torus equivariant w2", failures, checked)
}

/// Cokernel of squaring on `Ext(H₁, Z₂)` by brute force: homomorphisms to
/// `Z₂` that lift to `Z₄` are exactly the kernel of the Bockstein, so the
/// cokernel rank is `log₂` of the number of liftable ones.
fn cokernel_brute_force(orders: &[u64]) -> u32 {
    let s = orders.len();
    let mut liftable = BTreeSet::new();
    for code in 0..4u32.pow(s as u32) {
        let psi: Vec<u64> = (0..s)
            .map(|i| (code / 4u32.pow(i as u32) % 4) as u64)
            .collect();
        if orders.iter().zip(&psi).all(|(m, t)| m * t % 4 == 0) {
            liftable.insert(psi.iter().map(|t| t % 2).collect::<Vec<_>>());
        }
    }
    liftable.len().trailing_zeros()
}

/// Squares on nonorientable surfaces, and the square-class cokernel.
pub fn criterion2() -> CriterionResult {
    let mut failures = Vec::new();
    let mut checked = 0;
    for k in 1..=8 {
        let ring = SurfaceCohomology::nonorientable(k);
        for bits in all_bits(k) {
            let kappa = OneClass(bits);
            let weight = kappa.0.iter().filter(|b| **b).count() % 2 == 1;
            let sq = square_pairing(&kappa, &ring);
            let cup = cup_pair(&kappa, &kappa, &ring);
            checked += 1;
            if sq != Ok(weight) || cup != Ok(weight) {
                failures.push(format!("k={k} kappa={:?}", kappa.0));
            }
        }
    }
    let mut check = |orders: Vec<(u64, u32)>| {
        let expanded: Vec<u64> = orders
            .iter()
            .flat_map(|(m, r)| std::iter::repeat_n(*m, *r as usize))
            .collect();
        let h = H1Presentation::new(1, orders.clone()).expect("orders >= 2");
        let formula: u32 = orders
            .iter()
            .filter(|(m, _)| m % 4 == 0)
            .map(|(_, r)| r)
            .sum();
        let got = square_class_cokernel(&h);
        let brute = cokernel_brute_force(&expanded);
        checked += 1;
        if got != formula || got != brute {
            failures.push(format!(
                "{orders:?}: got {got}, formula {formula}, brute force {brute}"
            ));
        }
    };
    for m in 2..=64 {
        for r in 1..=3 {
            check(vec![(m, r)]);
        }
    }
    for m1 in 2..=64 {
        for m2 in m1..=64 {
            check(vec![(m1, 1), (m2, 1)]);
        }
    }
    CriterionResult::new(
        2,
        "square pairing and square-class cokernel",
        failures,
        checked,
    )
}

/// Holonomy splits over the boundary; recomputed with integer arithmetic.
pub fn criterion3() -> CriterionResult {
    use BoundaryKind::*;
    let mut failures = Vec::new();
    let mut checked = 0;
    for n_std in 0..=3 {
        for n_cc in 0..=3 {
            let mut boundary = vec![Standard; n_std];
            boundary.extend(vec![Crosscap; n_cc]);
            let surface = ShSurface::new(1, boundary);
            for bits in all_bits(3 * n_std + n_cc) {
                let std: Vec<_> = bits[..3 * n_std]
                    .chunks(3)
                    .map(|c| StdBoundaryLoopData::new(c[0], c[1], c[2]))
                    .collect();
                let cc: Vec<_> = bits[3 * n_std..]
                    .iter()
                    .map(|b| CrosscapLoopData::new(*b))
                    .collect();
                let lp = OperatorLoop::new(surface.clone(), std, cc).expect("counts match");
                let h = holonomy(&lp);
                let (reduced, disks) = decompose(&lp);
                let split = disks.iter().fold(holonomy(&reduced), |a, b| a ^ b);
                let b = |i: usize| bits[i] as u32;
                let mut direct = 0;
                for i in 0..n_std {
                    direct += (b(3 * i) + 1) * b(3 * i + 1) + b(3 * i + 2);
                }
                for i in 0..n_cc {
                    direct += b(3 * n_std + i);
                }
                checked += 1;
                if h != split || h != (direct % 2 == 1) {
                    failures.push(format!("{n_std}+{n_cc} bits={bits:?}"));
                }
            }
        }
    }
    CriterionResult::new(
        3,
        "holonomy decomposition over boundary components",
        failures,
        checked,
    )
}

/// Disk boundary loops: twist and Maslov index, stable under gauge changes.
pub fn criterion4(seed: u64) -> CriterionResult {
    let mut rng = rng_for(seed, 4);
    let mut failures = Vec::new();
    let mut checked = 0;
    for d in -4..=4 {
        let base = canonical_disk_loop(2, d, 256).expect("canonical loop is invertible");
        let mut loops = vec![base.clone()];
        for _ in 0..20 {
            match perturb_disk_loop(&base, &mut rng, 0.05) {
                Ok(l) => loops.push(l),
                Err(e) => failures.push(format!("d={d}: perturbation failed: {e}")),
            }
        }
        for l in &loops {
            checked += 1;
            match classify_disk(l, REALITY_TOL) {
                Ok(c) if c.d == d && c.maslov == 2 * d => {}
                other => failures.push(format!("d={d}: {other:?}")),
            }
        }
    }
    CriterionResult::new(4, "disk clutching classification", failures, checked)
}

/// Two homotopy classes of real clutching loops.
pub fn criterion5(seed: u64) -> CriterionResult {
    let mut rng = rng_for(seed, 5);
    let mut failures = Vec::new();
    let mut checked = 3;
    let bump = SampledLoop::from_fn(1, 128, |z| {
        CMatrix::from_element(1, 1, Complex64::from_polar(1.0, PI * (1.0 + z.re)))
    })
    .expect("unit modulus");
    for (name, l, expected) in [
        ("identity", SampledLoop::identity(3, 64), false),
        ("diag(-1,1,1)", canonical_klein_loop(3, true, 64), true),
        ("exp(i pi (1 + cos t))", bump, true),
    ] {
        let got = klein_class(&l);
        if got != Ok(expected) {
            failures.push(format!("{name}: {got:?}"));
        }
    }
    for n in 1..=3u32 {
        for twist in [false, true] {
            let pair = KleinTorusPair::new(n, twist).expect("positive rank");
            let base = canonical_klein_loop(n as usize, twist, 128);
            for _ in 0..10 {
                checked += 1;
                let l = match perturb_klein_loop(&base, &mut rng, 0.3) {
                    Ok(l) => l,
                    Err(e) => {
                        failures.push(format!("n={n}: perturbation failed: {e}"));
                        continue;
                    }
                };
                match klein_class(&l) {
                    Ok(c) => {
                        let induced = KleinTorusPair::new(n, c).expect("positive rank");
                        if klein_eqw2(&induced) != klein_eqw2(&pair)
                            || CrosscapLoopData::from_boundary_pair(&induced).eqw2 != twist
                        {
                            failures.push(format!("n={n} twist={twist}: class {c}"));
                        }
                    }
                    Err(e) => failures.push(format!("n={n} twist={twist}: {e}")),
                }
            }
        }
    }
    CriterionResult::new(5, "Klein clutching class", failures, checked)
}

/// Kernel dimensions from collocation, and the index formula.
pub fn criterion6() -> CriterionResult {
    let mut failures = Vec::new();
    let mut checked = 0;
    for d in -4..=4i64 {
        checked += 3;
        let expected = if d >= 0 { 2 * d as u32 + 1 } else { 0 };
        match numerical_kernel(&DiskProblem::standard(d)) {
            Ok(k) if k.dim == expected && k.gap >= MIN_SPECTRAL_GAP => {}
            other => failures.push(format!("d={d}: expected {expected}, got {other:?}")),
        }
        if boundary_recurrence_kernel(d).dim != expected {
            failures.push(format!("d={d}: recurrence disagrees"));
        }
        match fredholm_cross_check_detail(d) {
            Ok(c) if c.pass => {}
            other => failures.push(format!("d={d}: index {other:?}")),
        }
    }
    CriterionResult::new(6, "disk index by collocation", failures, checked)
}

/// Trapezoidal contour integrals.
pub fn criterion7() -> CriterionResult {
    let mut failures = Vec::new();
    let mut checked = 0;
    for k in 1..=4u32 {
        for m in 0..=10u32 {
            checked += 1;
            let expected = if m == 2 * k {
                -(1..=m).map(|i| i as f64).product::<f64>() / 2.0
            } else {
                0.0
            };
            match contour_integral(k, m, 64) {
                Ok(v) if (v - expected).abs() <= 1e-12 => {}
                other => failures.push(format!("k={k} m={m}: {other:?}, expected {expected}")),
            }
        }
    }
    CriterionResult::new(7, "contour integral quadrature", failures, checked)
}

/// Real rational maps: equivariance, the degenerate locus, odd degree.
pub fn criterion8(seed: u64) -> CriterionResult {
    let mut rng = rng_for(seed, 8);
    let mut failures = Vec::new();
    let mut checked = 0;
    let mut drawn = 0;
    while drawn < 50 {
        let n = rng.random_range(1..=3);
        let d = [2, 4][rng.random_range(0..2)];
        let p = RealMapParams::random(n, d, &mut rng).expect("valid random parameters");
        if in_delta(&p, 1e-8) {
            continue;
        }
        drawn += 1;
        checked += 1;
        match check_equivariance(&build(&p), 200, 1e-9, &mut rng) {
            Ok(r) if r.pass => {}
            other => failures.push(format!("n={n} d={d}: {other:?}")),
        }
    }
    for _ in 0..20 {
        checked += 1;
        let n = rng.random_range(1..=3);
        let d = [2, 4][rng.random_range(0..2)];
        let p = planted_delta_params(n, d, &mut rng).expect("valid planted parameters");
        if !in_delta(&p, 1e-8) {
            failures.push(format!("planted case not flagged: {p:?}"));
        }
    }
    for _ in 0..100 {
        checked += 1;
        let t = PolyTuple::random(rng.random_range(1..=3), 3, &mut rng);
        let r = equivariance_residual(&t);
        if r < 0.01 {
            failures.push(format!("odd-degree residual {r}"));
        }
    }
    CriterionResult::new(8, "equivariant real rational maps", failures, checked)
}

/// Parity predicate for complete intersections.
pub fn criterion9() -> CriterionResult {
    let mut failures = Vec::new();
    let mut checked = 0;
    let mut tuples: Vec<Vec<u32>> = vec![vec![]];
    let mut all = Vec::new();
    for _ in 0..3 {
        tuples = tuples
            .iter()
            .flat_map(|t| {
                (1..=6).map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
        all.extend(tuples.clone());
    }
    for n in 1..=12u32 {
        for a in &all {
            checked += 1;
            let c = complete_intersection_check(n, a);
            let sign: i32 = a.iter().fold(if n % 2 == 0 { -1 } else { 1 }, |s, x| {
                if x % 2 == 0 {
                    s
                } else {
                    -s
                }
            });
            if c.applies != (c.sign_product == 1) || c.sign_product as i32 != sign {
                failures.push(format!("n={n} a={a:?}: {c:?}"));
            }
        }
    }
    checked += 1;
    if !complete_intersection_check(4, &[5]).applies {
        failures.push("quintic threefold does not apply".into());
    }
    CriterionResult::new(9, "complete-intersection parity", failures, checked)
}

/// Sanity checks that the clutching fixtures satisfy their own conditions.
pub fn fixture_conditions() -> bool {
    let disk = canonical_disk_loop(2, 1, 64).expect("invertible");
    let klein = canonical_klein_loop(2, true, 64);
    check_involution(&disk, REALITY_TOL).unwrap_or(false)
        && check_reality(&klein, REALITY_TOL).unwrap_or(false)
}

pub fn run_all(seed: u64) -> Vec<CriterionResult> {
    vec![
        criterion1(),
        criterion2(),
        criterion3(),
        criterion4(seed),
        criterion5(seed),
        criterion6(),
        criterion7(),
        criterion8(seed),
        criterion9(),
    ]
}
