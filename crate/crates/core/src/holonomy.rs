//! Holonomy of the determinant line over a loop of real Cauchy-Riemann
//! operators, and the orientability predicates built on it.
//!
//! A loop of operators over the mapping torus of an sh-surface is recorded
//! only through the mod-2 pairings that the holonomy formula consumes:
//!
//! ```text
//! ⟨w₁(det D), S¹⟩ = Σ_{standard i} ((w1_b + 1)·w1_alpha + w2_beta)
//!                 + Σ_{crosscap i} eqw2
//! ```
//!
//! `w1_b` is the pairing of `w₁` of the real part with the boundary circle,
//! `w1_alpha` its pairing with a section of the boundary mapping torus,
//! `w2_beta` the pairing of `w₂` with that boundary torus, and `eqw2` the
//! equivariant `w₂` of the top exterior power over the crosscap torus.
//! When the loop comes from a family of maps the boundary class `b_i = [γ_i]`
//! plays the role of the boundary circle; the same `w1_b` input is used.

use crate::bundles::{klein_eqw2, klein_top, KleinTorusPair};
use crate::surfaces::{BoundaryKind, ShSurface};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HolonomyError {
    #[error("loop has {got} standard-boundary entries but the surface has {expected} standard components")]
    StandardCount { expected: usize, got: usize },
    #[error("loop has {got} crosscap entries but the surface has {expected} crosscaps")]
    CrosscapCount { expected: usize, got: usize },
    #[error("no orientation-change entry for component {0}")]
    MissingComponent(u32),
    #[error("no entry for loop class {0}")]
    MissingLoopClass(u32),
    #[error("spin-change bit set for loop class {0} on a line bundle (pi1(SO(1)) = 0)")]
    SpinOnLine(u32),
    #[error("rank must be at least 1")]
    ZeroRank,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StdBoundaryLoopData {
    #[serde(with = "crate::bits")]
    pub w1_b: bool,
    #[serde(with = "crate::bits")]
    pub w1_alpha: bool,
    #[serde(with = "crate::bits")]
    pub w2_beta: bool,
}

impl StdBoundaryLoopData {
    pub fn new(w1_b: bool, w1_alpha: bool, w2_beta: bool) -> Self {
        StdBoundaryLoopData {
            w1_b,
            w1_alpha,
            w2_beta,
        }
    }

    /// This component's summand in the holonomy formula.
    pub fn contribution(&self) -> bool {
        (!self.w1_b & self.w1_alpha) ^ self.w2_beta
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CrosscapLoopData {
    #[serde(with = "crate::bits")]
    pub eqw2: bool,
}

impl CrosscapLoopData {
    pub fn new(eqw2: bool) -> Self {
        CrosscapLoopData { eqw2 }
    }

    /// The crosscap pairing carried by the restriction of a bundle pair to the
    /// boundary torus of a crosscap, via its top exterior power.
    pub fn from_boundary_pair(k: &KleinTorusPair) -> Self {
        CrosscapLoopData {
            eqw2: klein_eqw2(&klein_top(k)),
        }
    }
}

#[derive(Deserialize)]
struct RawLoop {
    surface: ShSurface,
    #[serde(default)]
    std: Vec<StdBoundaryLoopData>,
    #[serde(default)]
    cc: Vec<CrosscapLoopData>,
}

/// A loop of real Cauchy-Riemann operators over the mapping torus of `base`,
/// recorded by its pairing bits. `std` and `cc` follow the order in which
/// standard and crosscap components appear in `base.boundary`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawLoop")]
pub struct OperatorLoop {
    #[serde(rename = "surface")]
    base: ShSurface,
    std: Vec<StdBoundaryLoopData>,
    cc: Vec<CrosscapLoopData>,
}

impl TryFrom<RawLoop> for OperatorLoop {
    type Error = HolonomyError;

    fn try_from(r: RawLoop) -> Result<Self, HolonomyError> {
        OperatorLoop::new(r.surface, r.std, r.cc)
    }
}

impl OperatorLoop {
    pub fn new(
        base: ShSurface,
        std: Vec<StdBoundaryLoopData>,
        cc: Vec<CrosscapLoopData>,
    ) -> Result<Self, HolonomyError> {
        if std.len() != base.standard_count() {
            return Err(HolonomyError::StandardCount {
                expected: base.standard_count(),
                got: std.len(),
            });
        }
        if cc.len() != base.crosscap_count() {
            return Err(HolonomyError::CrosscapCount {
                expected: base.crosscap_count(),
                got: cc.len(),
            });
        }
        Ok(OperatorLoop { base, std, cc })
    }

    pub fn base(&self) -> &ShSurface {
        &self.base
    }

    pub fn standard(&self) -> &[StdBoundaryLoopData] {
        &self.std
    }

    pub fn crosscaps(&self) -> &[CrosscapLoopData] {
        &self.cc
    }
}

/// `⟨w₁(det D), S¹⟩` for the loop.
pub fn holonomy(lp: &OperatorLoop) -> bool {
    let std = lp.std.iter().fold(false, |acc, c| acc ^ c.contribution());
    lp.cc.iter().fold(std, |acc, c| acc ^ c.eqw2)
}

/// Pinches off every crosscap: the determinant line splits as the
/// determinant over the surface with crosscaps removed, tensored with one
/// disk-with-crosscap factor per crosscap. Returns the reduced loop and the
/// holonomy bit of each disk factor, in boundary order.
pub fn decompose(lp: &OperatorLoop) -> (OperatorLoop, Vec<bool>) {
    let reduced = OperatorLoop {
        base: lp.base.without_crosscaps(),
        std: lp.std.clone(),
        cc: Vec::new(),
    };
    let disks = lp
        .cc
        .iter()
        .map(|c| {
            let disk = OperatorLoop {
                base: ShSurface::disk_with_crosscap(),
                std: Vec::new(),
                cc: vec![*c],
            };
            holonomy(&disk)
        })
        .collect();
    (reduced, disks)
}

/// How a change of trivializations acts on a boundary component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum BoundaryTerm {
    Standard {
        #[serde(with = "crate::bits")]
        w1_b: bool,
        /// Component of the fixed locus the boundary maps into.
        component: u32,
        loop_class: u32,
    },
    Crosscap {
        loop_class: u32,
    },
}

/// Changes of the trivialization choices fixing an orientation: orientation
/// flips `o_R` on components of the fixed locus, spin-structure changes `s_R`
/// (parity of the `π₁(SO(n))` element) along loop classes, and homotopy-class
/// changes `o_C` of the crosscap trivializations along loop classes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawChange")]
pub struct TrivializationChange {
    rank: u32,
    #[serde(default, with = "bit_map")]
    o_real: BTreeMap<u32, bool>,
    #[serde(default, with = "bit_map")]
    s_real: BTreeMap<u32, bool>,
    #[serde(default, with = "bit_map")]
    o_complex: BTreeMap<u32, bool>,
}

mod bit_map {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};
    use std::collections::BTreeMap;

    pub fn serialize<S: Serializer>(m: &BTreeMap<u32, bool>, s: S) -> Result<S::Ok, S::Error> {
        let m: BTreeMap<u32, u8> = m.iter().map(|(k, v)| (*k, *v as u8)).collect();
        m.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<u32, bool>, D::Error> {
        let m: BTreeMap<u32, u8> = BTreeMap::deserialize(d)?;
        Ok(m.into_iter().map(|(k, v)| (k, v & 1 == 1)).collect())
    }
}

#[derive(Deserialize)]
struct RawChange {
    rank: u32,
    #[serde(default, with = "bit_map")]
    o_real: BTreeMap<u32, bool>,
    #[serde(default, with = "bit_map")]
    s_real: BTreeMap<u32, bool>,
    #[serde(default, with = "bit_map")]
    o_complex: BTreeMap<u32, bool>,
}

impl TryFrom<RawChange> for TrivializationChange {
    type Error = HolonomyError;

    fn try_from(r: RawChange) -> Result<Self, HolonomyError> {
        TrivializationChange::new(r.rank, r.o_real, r.s_real, r.o_complex)
    }
}

impl TrivializationChange {
    pub fn new(
        rank: u32,
        o_real: BTreeMap<u32, bool>,
        s_real: BTreeMap<u32, bool>,
        o_complex: BTreeMap<u32, bool>,
    ) -> Result<Self, HolonomyError> {
        if rank == 0 {
            return Err(HolonomyError::ZeroRank);
        }
        if rank == 1 {
            if let Some((k, _)) = s_real.iter().find(|(_, v)| **v) {
                return Err(HolonomyError::SpinOnLine(*k));
            }
        }
        Ok(TrivializationChange {
            rank,
            o_real,
            s_real,
            o_complex,
        })
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    fn lookup(
        map: &BTreeMap<u32, bool>,
        key: u32,
        err: HolonomyError,
    ) -> Result<bool, HolonomyError> {
        map.get(&key).copied().ok_or(err)
    }
}

/// Sign `(−1)^ε` by which a change of trivializations acts on the induced
/// orientation, where
/// `ε = Σ_std ((w1_b + 1)·o_R(component) + s_R(class)) + Σ_cc o_C(class)`.
pub fn trivialization_sign(
    t: &TrivializationChange,
    boundary: &[BoundaryTerm],
) -> Result<i8, HolonomyError> {
    let mut eps = false;
    for term in boundary {
        match *term {
            BoundaryTerm::Standard {
                w1_b,
                component,
                loop_class,
            } => {
                let o = TrivializationChange::lookup(
                    &t.o_real,
                    component,
                    HolonomyError::MissingComponent(component),
                )?;
                let s = if t.rank == 1 {
                    t.s_real.get(&loop_class).copied().unwrap_or(false)
                } else {
                    TrivializationChange::lookup(
                        &t.s_real,
                        loop_class,
                        HolonomyError::MissingLoopClass(loop_class),
                    )?
                };
                eps ^= (!w1_b & o) ^ s;
            }
            BoundaryTerm::Crosscap { loop_class } => {
                eps ^= TrivializationChange::lookup(
                    &t.o_complex,
                    loop_class,
                    HolonomyError::MissingLoopClass(loop_class),
                )?;
            }
        }
    }
    Ok(if eps { -1 } else { 1 })
}

/// Boundary terms for a surface, numbering components and loop classes by
/// boundary position.
pub fn boundary_terms(s: &ShSurface, w1_b: &[bool]) -> Vec<BoundaryTerm> {
    let mut std = w1_b.iter();
    s.boundary
        .iter()
        .enumerate()
        .map(|(i, kind)| match kind {
            BoundaryKind::Standard => BoundaryTerm::Standard {
                w1_b: std.next().copied().unwrap_or(false),
                component: i as u32,
                loop_class: i as u32,
            },
            BoundaryKind::Crosscap => BoundaryTerm::Crosscap {
                loop_class: i as u32,
            },
        })
        .collect()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientabilityFlags {
    /// The domain has no standard boundary components.
    #[serde(with = "crate::bits")]
    pub no_std_boundary: bool,
    #[serde(with = "crate::bits")]
    pub pi1_trivial: bool,
    #[serde(with = "crate::bits")]
    pub c1_even: bool,
    /// `Λ^top(V, φ̃)` admits a real square root.
    #[serde(with = "crate::bits")]
    pub has_square_root: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    OrientableGuaranteed,
    NoConclusion,
}

/// Sufficient criterion for orientability of the determinant line over every
/// loop when the domain has crosscaps only.
pub fn crosscap_only_verdict(f: &OrientabilityFlags) -> Verdict {
    if f.no_std_boundary && ((f.pi1_trivial && f.c1_even) || f.has_square_root) {
        Verdict::OrientableGuaranteed
    } else {
        Verdict::NoConclusion
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypersurfaceCheck {
    /// `n − |a|` is odd.
    pub applies: bool,
    /// `(−1)^{n+1} · Π (−1)^{a_i}`.
    pub sign_product: i8,
}

/// Parity condition for complete intersections of multidegree `a` in `Pⁿ`
/// with the standard conjugation.
pub fn complete_intersection_check(n: u32, a: &[u32]) -> HypersurfaceCheck {
    let total: u64 = a.iter().map(|x| *x as u64).sum();
    let applies = (n as i64 - total as i64).rem_euclid(2) == 1;
    let sign_product = if (n as u64 + 1 + total).is_multiple_of(2) {
        1
    } else {
        -1
    };
    HypersurfaceCheck {
        applies,
        sign_product,
    }
}

/// Worked inputs.
pub mod fixtures {
    use super::*;

    /// A single crosscap whose boundary pair is twisted: the determinant line
    /// over a disk with a crosscap is nonorientable.
    pub fn twisted_crosscap_disk() -> OperatorLoop {
        OperatorLoop::new(
            ShSurface::disk_with_crosscap(),
            vec![],
            vec![CrosscapLoopData::new(true)],
        )
        .expect("well-formed")
    }

    /// Loop over the disk with a crosscap through a target whose `c₁` is
    /// divisible by any prescribed integer but with `π₁ ≠ 0`: the
    /// equivariant `w₂` of the target picks up the twisting of a Möbius
    /// factor, so the only crosscap bit is 1 and the loop is not orientable.
    pub fn divisible_c1_nonorientable() -> OperatorLoop {
        let mobius = KleinTorusPair::new(1, true).expect("rank 1");
        OperatorLoop::new(
            ShSurface::disk_with_crosscap(),
            vec![],
            vec![CrosscapLoopData::from_boundary_pair(&mobius)],
        )
        .expect("well-formed")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundles::klein_tensor;
    use BoundaryKind::*;

    fn all_bits(n: usize) -> impl Iterator<Item = Vec<bool>> {
        (0u32..1 << n).map(move |m| (0..n).map(|i| m >> i & 1 == 1).collect())
    }

    #[test]
    fn holonomy_examples() {
        let s = ShSurface::new(1, vec![Standard, Crosscap]);
        let zero =
            OperatorLoop::new(s, vec![Default::default()], vec![Default::default()]).unwrap();
        assert!(!holonomy(&zero));
        assert!(holonomy(&fixtures::twisted_crosscap_disk()));
        let one = OperatorLoop::new(
            ShSurface::new(0, vec![Standard]),
            vec![StdBoundaryLoopData::new(true, true, false)],
            vec![],
        )
        .unwrap();
        assert!(!holonomy(&one));
        assert!(holonomy(&fixtures::divisible_c1_nonorientable()));
    }

    #[test]
    fn malformed_loops_rejected() {
        let s = ShSurface::new(0, vec![Standard, Crosscap]);
        assert_eq!(
            OperatorLoop::new(s.clone(), vec![], vec![Default::default()]),
            Err(HolonomyError::StandardCount {
                expected: 1,
                got: 0
            })
        );
        assert_eq!(
            OperatorLoop::new(s, vec![Default::default()], vec![]),
            Err(HolonomyError::CrosscapCount {
                expected: 1,
                got: 0
            })
        );
        let bad: Result<OperatorLoop, _> = serde_json::from_str(
            r#"{"surface": {"genus": 0, "boundary": ["crosscap"]}, "std": [], "cc": []}"#,
        );
        assert!(bad.is_err());
    }

    #[test]
    fn loop_json() {
        let lp: OperatorLoop = serde_json::from_str(
            r#"{"surface": {"genus": 0, "boundary": ["standard", "crosscap"]},
                "std": [{"w1_b": 1, "w1_alpha": 0, "w2_beta": 1}],
                "cc": [{"eqw2": 1}]}"#,
        )
        .unwrap();
        assert!(!holonomy(&lp));
        let s = serde_json::to_string(&lp).unwrap();
        assert!(s.starts_with(r#"{"surface":"#));
        assert_eq!(serde_json::from_str::<OperatorLoop>(&s).unwrap(), lp);
    }

    #[test]
    fn pure_crosscap_decomposition() {
        let lp = OperatorLoop::new(
            ShSurface::new(0, vec![Crosscap, Crosscap]),
            vec![],
            vec![CrosscapLoopData::new(true), CrosscapLoopData::new(false)],
        )
        .unwrap();
        let (reduced, bits) = decompose(&lp);
        assert!(reduced.base().boundary.is_empty());
        assert!(!holonomy(&reduced));
        assert_eq!(bits, vec![true, false]);
    }

    #[test]
    fn paired_crosscaps_cancel() {
        let lp = OperatorLoop::new(
            ShSurface::new(0, vec![Standard, Crosscap, Crosscap]),
            vec![StdBoundaryLoopData::new(false, true, false)],
            vec![CrosscapLoopData::new(true), CrosscapLoopData::new(true)],
        )
        .unwrap();
        let (reduced, bits) = decompose(&lp);
        assert_eq!(holonomy(&lp), holonomy(&reduced));
        assert!(!bits.iter().fold(false, |a, b| a ^ b));
    }

    // Brute force over every boundary configuration with up to 2+2
    // components and every assignment of bits.
    #[test]
    fn decomposition_identity_brute_force() {
        for n_std in 0..=2 {
            for n_cc in 0..=2 {
                let mut kinds = vec![Standard; n_std];
                kinds.extend(vec![Crosscap; n_cc]);
                for g in 0..2 {
                    let s = ShSurface::new(g, kinds.clone());
                    for bits in all_bits(3 * n_std + n_cc) {
                        let std = (0..n_std)
                            .map(|i| {
                                StdBoundaryLoopData::new(
                                    bits[3 * i],
                                    bits[3 * i + 1],
                                    bits[3 * i + 2],
                                )
                            })
                            .collect();
                        let cc = (0..n_cc)
                            .map(|i| CrosscapLoopData::new(bits[3 * n_std + i]))
                            .collect();
                        let lp = OperatorLoop::new(s.clone(), std, cc).unwrap();
                        let (reduced, disks) = decompose(&lp);
                        assert_eq!(reduced.base().genus, g);
                        assert_eq!(reduced.base().crosscap_count(), 0);
                        let x = disks.iter().fold(false, |a, b| a ^ b);
                        assert_eq!(holonomy(&lp), holonomy(&reduced) ^ x);
                    }
                }
            }
        }
    }

    #[test]
    fn flipping_bits() {
        for base in all_bits(3) {
            let d = StdBoundaryLoopData::new(base[0], base[1], base[2]);
            let s = ShSurface::new(0, vec![Standard, Crosscap]);
            for eq in [false, true] {
                let lp =
                    OperatorLoop::new(s.clone(), vec![d], vec![CrosscapLoopData::new(eq)]).unwrap();
                let flipped_cc =
                    OperatorLoop::new(s.clone(), vec![d], vec![CrosscapLoopData::new(!eq)])
                        .unwrap();
                assert_ne!(holonomy(&lp), holonomy(&flipped_cc));
                let mut da = d;
                da.w1_alpha = !da.w1_alpha;
                let flipped_alpha =
                    OperatorLoop::new(s.clone(), vec![da], vec![CrosscapLoopData::new(eq)])
                        .unwrap();
                assert_eq!(holonomy(&lp) != holonomy(&flipped_alpha), !d.w1_b);
            }
        }
    }

    #[test]
    fn square_roots_kill_crosscap_terms() {
        for a in [false, true] {
            for b in [false, true] {
                let la = KleinTorusPair::new(1, a).unwrap();
                let lb = KleinTorusPair::new(1, b).unwrap();
                let sq_a = klein_tensor(&la, &la).unwrap();
                let sq_b = klein_tensor(&lb, &lb).unwrap();
                let lp = OperatorLoop::new(
                    ShSurface::new(1, vec![Crosscap, Crosscap]),
                    vec![],
                    vec![
                        CrosscapLoopData::from_boundary_pair(&sq_a),
                        CrosscapLoopData::from_boundary_pair(&sq_b),
                    ],
                )
                .unwrap();
                let (_, bits) = decompose(&lp);
                assert!(bits.iter().all(|b| !b));
                assert!(!holonomy(&lp));
            }
        }
    }

    #[test]
    fn sign_examples() {
        let one = |k: u32, v: bool| BTreeMap::from([(k, v)]);
        let t = TrivializationChange::new(1, one(0, true), one(0, false), BTreeMap::new()).unwrap();
        let std = [BoundaryTerm::Standard {
            w1_b: false,
            component: 0,
            loop_class: 0,
        }];
        assert_eq!(trivialization_sign(&t, &std).unwrap(), -1);

        let t =
            TrivializationChange::new(2, BTreeMap::new(), BTreeMap::new(), one(3, true)).unwrap();
        assert_eq!(
            trivialization_sign(&t, &[BoundaryTerm::Crosscap { loop_class: 3 }]).unwrap(),
            -1
        );

        let s = ShSurface::new(1, vec![Standard, Crosscap, Standard]);
        let terms = boundary_terms(&s, &[true, false]);
        let zeros = |ks: &[u32]| ks.iter().map(|k| (*k, false)).collect::<BTreeMap<_, _>>();
        let t = TrivializationChange::new(3, zeros(&[0, 2]), zeros(&[0, 2]), zeros(&[1])).unwrap();
        assert_eq!(trivialization_sign(&t, &terms).unwrap(), 1);
    }

    #[test]
    fn sign_errors() {
        let t = TrivializationChange::new(2, BTreeMap::new(), BTreeMap::new(), BTreeMap::new())
            .unwrap();
        assert_eq!(
            trivialization_sign(
                &t,
                &[BoundaryTerm::Standard {
                    w1_b: false,
                    component: 7,
                    loop_class: 0
                }]
            ),
            Err(HolonomyError::MissingComponent(7))
        );
        assert_eq!(
            trivialization_sign(&t, &[BoundaryTerm::Crosscap { loop_class: 2 }]),
            Err(HolonomyError::MissingLoopClass(2))
        );
        assert_eq!(
            TrivializationChange::new(
                1,
                BTreeMap::new(),
                BTreeMap::from([(4, true)]),
                BTreeMap::new()
            ),
            Err(HolonomyError::SpinOnLine(4))
        );
    }

    #[test]
    fn w1_b_masks_orientation_flip() {
        for w1_b in [false, true] {
            for o in [false, true] {
                for s_bit in [false, true] {
                    let t = TrivializationChange::new(
                        2,
                        BTreeMap::from([(0, o)]),
                        BTreeMap::from([(0, s_bit)]),
                        BTreeMap::new(),
                    )
                    .unwrap();
                    let term = [BoundaryTerm::Standard {
                        w1_b,
                        component: 0,
                        loop_class: 0,
                    }];
                    let eps = ((!w1_b) & o) ^ s_bit;
                    assert_eq!(
                        trivialization_sign(&t, &term).unwrap(),
                        if eps { -1 } else { 1 }
                    );
                }
            }
        }
    }

    #[test]
    fn crosscap_only_examples() {
        let f = |a, b, c, d| OrientabilityFlags {
            no_std_boundary: a,
            pi1_trivial: b,
            c1_even: c,
            has_square_root: d,
        };
        assert_eq!(
            crosscap_only_verdict(&f(true, true, true, false)),
            Verdict::OrientableGuaranteed
        );
        assert_eq!(
            crosscap_only_verdict(&f(true, false, false, true)),
            Verdict::OrientableGuaranteed
        );
        assert_eq!(
            crosscap_only_verdict(&f(true, true, false, false)),
            Verdict::NoConclusion
        );
        assert_eq!(
            crosscap_only_verdict(&f(false, true, true, true)),
            Verdict::NoConclusion
        );
    }

    #[test]
    fn complete_intersection_examples() {
        assert_eq!(
            complete_intersection_check(4, &[5]),
            HypersurfaceCheck {
                applies: true,
                sign_product: 1
            }
        );
        assert_eq!(complete_intersection_check(3, &[]).sign_product, 1);
        assert!(complete_intersection_check(3, &[]).applies);
        assert!(complete_intersection_check(5, &[2, 2]).applies);
        assert_eq!(complete_intersection_check(5, &[2, 2]).sign_product, 1);
        let c = complete_intersection_check(4, &[]);
        assert!(!c.applies);
        assert_eq!(c.sign_product, -1);
    }
}
