//! Mod-2 cohomology of closed surfaces and square classes.
//!
//! `H¹(Σ; Z₂)` is represented in the basis dual to a fixed basis of
//! `H₁(Σ; Z₂)`. For an orientable surface of genus `g` that basis is the
//! standard symplectic one `a₁, b₁, …, a_g, b_g`; for a nonorientable surface
//! with `m` crosscaps it is the basis `a₁, …, a_m` read off the labeling scheme
//! `a₁a₁a₂a₂…a_ma_m`, where `aᵢ·aᵢ = 1`, `aᵢ·aⱼ = 0` and the torsion class is
//! `a₁ + … + a_m`.
//!
//! Cup products of 1-classes evaluated on the mod-2 fundamental class are
//! computed through the intersection form `Q` as `κᵀ Q λ`.

use crate::surfaces::ClosedSurfaceInfo;
use serde::{Deserialize, Serialize};
use std::ops::Add;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CohomologyError {
    #[error("surface has {0} boundary components; cohomology ring needs a closed surface")]
    HasBoundary(u32),
    #[error("dimension mismatch: expected length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("intersection form is not symmetric")]
    NotSymmetric,
    #[error("intersection form is singular over Z2")]
    Singular,
    #[error("invalid ring: square of class {class:?} pairs to {square} but torsion pairing is {torsion}")]
    InvalidRing {
        class: Vec<u8>,
        square: bool,
        torsion: bool,
    },
    #[error("torsion order {0} must be at least 2")]
    BadOrder(u64),
    #[error("torsion multiplicity must be at least 1 (order {0})")]
    BadMultiplicity(u64),
}

/// A class in `H¹(Σ; Z₂)`, written in the basis dual to the `H₁` basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OneClass(#[serde(with = "crate::bits::vec")] pub Vec<bool>);

impl OneClass {
    pub fn zero(rank: usize) -> Self {
        OneClass(vec![false; rank])
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        OneClass(bits.iter().map(|b| b & 1 == 1).collect())
    }

    /// The `i`-th basis vector.
    pub fn basis(rank: usize, i: usize) -> Self {
        let mut v = vec![false; rank];
        v[i] = true;
        OneClass(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|b| !b)
    }

    /// Evaluation on a homology class given in the same basis.
    pub fn dot(&self, other: &[bool]) -> bool {
        self.0
            .iter()
            .zip(other)
            .fold(false, |acc, (a, b)| acc ^ (a & b))
    }

    fn to_u8(&self) -> Vec<u8> {
        self.0.iter().map(|b| *b as u8).collect()
    }
}

impl Add for &OneClass {
    type Output = OneClass;

    fn add(self, rhs: &OneClass) -> OneClass {
        OneClass(self.0.iter().zip(&rhs.0).map(|(a, b)| a ^ b).collect())
    }
}

impl Add for OneClass {
    type Output = OneClass;

    fn add(self, rhs: OneClass) -> OneClass {
        &self + &rhs
    }
}

/// `H¹(Σ; Z₂)` of a closed surface with its intersection form and the torsion
/// class of `H₁(Σ; Z)` (zero when Σ is orientable).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceCohomology {
    orientable: bool,
    h1_rank: usize,
    #[serde(with = "crate::bits::matrix")]
    intersection_form: Vec<Vec<bool>>,
    #[serde(with = "crate::bits::vec")]
    torsion_class: Vec<bool>,
}

impl SurfaceCohomology {
    /// Builds a ring from raw parts. The form must be square, symmetric and
    /// invertible over Z₂; the torsion class is taken as given, so a ring
    /// built here may violate the square identity (see [`square_pairing`]).
    pub fn from_parts(
        orientable: bool,
        intersection_form: Vec<Vec<bool>>,
        torsion_class: Vec<bool>,
    ) -> Result<Self, CohomologyError> {
        let n = intersection_form.len();
        for row in &intersection_form {
            if row.len() != n {
                return Err(CohomologyError::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
        }
        if torsion_class.len() != n {
            return Err(CohomologyError::DimensionMismatch {
                expected: n,
                got: torsion_class.len(),
            });
        }
        let symmetric =
            (0..n).all(|i| (0..i).all(|j| intersection_form[i][j] == intersection_form[j][i]));
        if !symmetric {
            return Err(CohomologyError::NotSymmetric);
        }
        if z2_rank(&intersection_form) != n {
            return Err(CohomologyError::Singular);
        }
        Ok(SurfaceCohomology {
            orientable,
            h1_rank: n,
            intersection_form,
            torsion_class,
        })
    }

    /// Genus-`g` orientable surface, hyperbolic form, no torsion.
    pub fn orientable(genus: usize) -> Self {
        let n = 2 * genus;
        let mut q = vec![vec![false; n]; n];
        for h in 0..genus {
            q[2 * h][2 * h + 1] = true;
            q[2 * h + 1][2 * h] = true;
        }
        SurfaceCohomology {
            orientable: true,
            h1_rank: n,
            intersection_form: q,
            torsion_class: vec![false; n],
        }
    }

    /// Connected sum of `m ≥ 1` projective planes.
    pub fn nonorientable(crosscaps: usize) -> Self {
        let n = crosscaps;
        let q = (0..n).map(|i| (0..n).map(|j| i == j).collect()).collect();
        SurfaceCohomology {
            orientable: false,
            h1_rank: n,
            intersection_form: q,
            torsion_class: vec![true; n],
        }
    }

    pub fn is_orientable(&self) -> bool {
        self.orientable
    }

    pub fn h1_rank(&self) -> usize {
        self.h1_rank
    }

    pub fn intersection_form(&self) -> &[Vec<bool>] {
        &self.intersection_form
    }

    pub fn torsion_class(&self) -> &[bool] {
        &self.torsion_class
    }

    fn check(&self, k: &OneClass) -> Result<(), CohomologyError> {
        if k.len() != self.h1_rank {
            return Err(CohomologyError::DimensionMismatch {
                expected: self.h1_rank,
                got: k.len(),
            });
        }
        Ok(())
    }
}

/// Rank over Z₂ by Gaussian elimination.
fn z2_rank(m: &[Vec<bool>]) -> usize {
    let mut rows: Vec<Vec<bool>> = m.to_vec();
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c]) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x ^= *y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// The cohomology ring of a closed surface.
pub fn ring_of(info: &ClosedSurfaceInfo) -> Result<SurfaceCohomology, CohomologyError> {
    if info.boundary_count != 0 {
        return Err(CohomologyError::HasBoundary(info.boundary_count));
    }
    let k = info.genus_or_crosscap_number as usize;
    Ok(if info.orientable {
        SurfaceCohomology::orientable(k)
    } else {
        SurfaceCohomology::nonorientable(k)
    })
}

/// `⟨κ ∪ λ, [Σ]_{Z₂}⟩ = κᵀ Q λ`.
pub fn cup_pair(
    kappa: &OneClass,
    lambda: &OneClass,
    ring: &SurfaceCohomology,
) -> Result<bool, CohomologyError> {
    ring.check(kappa)?;
    ring.check(lambda)?;
    let mut acc = false;
    for (i, row) in ring.intersection_form.iter().enumerate() {
        if !kappa.0[i] {
            continue;
        }
        acc ^= lambda.dot(row);
    }
    Ok(acc)
}

/// `⟨κ², [Σ]_{Z₂}⟩`, checked against `⟨κ, b_Σ⟩`.
///
/// The two sides agree on every genuine surface ring; disagreement means the
/// ring was assembled with a wrong torsion class and is reported as
/// [`CohomologyError::InvalidRing`].
pub fn square_pairing(kappa: &OneClass, ring: &SurfaceCohomology) -> Result<bool, CohomologyError> {
    let square = cup_pair(kappa, kappa, ring)?;
    let torsion = kappa.dot(&ring.torsion_class);
    if square != torsion {
        return Err(CohomologyError::InvalidRing {
            class: kappa.to_u8(),
            square,
            torsion,
        });
    }
    Ok(square)
}

/// `⟨w₂(L₁ ⊕ … ⊕ L_n), [Σ]_{Z₂}⟩` for real line bundles with the given `w₁`.
///
/// By the Whitney sum formula `w₂` of a sum of lines is the second elementary
/// symmetric polynomial `Σ_{i<j} w₁(Lᵢ) w₁(Lⱼ)`, accumulated here as
/// `Σ_j (w₁(L₁) + … + w₁(L_{j-1})) ∪ w₁(L_j)`.
pub fn whitney_w2(lines: &[OneClass], ring: &SurfaceCohomology) -> Result<bool, CohomologyError> {
    let mut prefix = OneClass::zero(ring.h1_rank);
    let mut acc = false;
    for w in lines {
        acc ^= cup_pair(&prefix, w, ring)?;
        prefix = &prefix + w;
    }
    Ok(acc)
}

/// A finitely generated abelian group `Z^{r₀} ⊕ Z_{m₁}^{r₁} ⊕ …`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct H1Presentation {
    pub free_rank: u32,
    /// `(order, multiplicity)` pairs.
    pub torsion: Vec<(u64, u32)>,
}

impl H1Presentation {
    pub fn new(free_rank: u32, torsion: Vec<(u64, u32)>) -> Result<Self, CohomologyError> {
        for &(m, r) in &torsion {
            if m < 2 {
                return Err(CohomologyError::BadOrder(m));
            }
            if r < 1 {
                return Err(CohomologyError::BadMultiplicity(m));
            }
        }
        Ok(H1Presentation { free_rank, torsion })
    }

    /// Rank of `Ext(H₁, Z₂)`: one `Z₂` per cyclic factor of even order.
    pub fn ext_z2_rank(&self) -> u32 {
        self.torsion
            .iter()
            .filter(|(m, _)| m % 2 == 0)
            .map(|(_, r)| r)
            .sum()
    }

    /// Rank of the image of `κ ↦ κ²` inside `Ext(H₁, Z₂)`: the factors of
    /// order `2 mod 4`.
    pub fn square_image_rank(&self) -> u32 {
        self.torsion
            .iter()
            .filter(|(m, _)| m % 2 == 0 && m % 4 != 0)
            .map(|(_, r)| r)
            .sum()
    }
}

/// Rank of the cokernel of the squaring map into `Ext(H₁, Z₂)`.
///
/// Zero exactly when every mod-2 class vanishing on integral `H₂` is a square.
pub fn square_class_cokernel(h: &H1Presentation) -> u32 {
    h.ext_z2_rank() - h.square_image_rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn torus() -> SurfaceCohomology {
        ring_of(&ClosedSurfaceInfo::orientable(1)).unwrap()
    }

    fn klein() -> SurfaceCohomology {
        ring_of(&ClosedSurfaceInfo::nonorientable(2)).unwrap()
    }

    #[test]
    fn ring_examples() {
        let t = torus();
        assert_eq!(
            t.intersection_form(),
            &[vec![false, true], vec![true, false]]
        );
        assert_eq!(t.torsion_class(), &[false, false]);
        let k = klein();
        assert_eq!(
            k.intersection_form(),
            &[vec![true, false], vec![false, true]]
        );
        assert_eq!(k.torsion_class(), &[true, true]);
        let rp2 = ring_of(&ClosedSurfaceInfo::nonorientable(1)).unwrap();
        assert_eq!(rp2.intersection_form(), &[vec![true]]);
        assert_eq!(rp2.torsion_class(), &[true]);
    }

    #[test]
    fn ring_rejects_boundary() {
        let disk = ClosedSurfaceInfo {
            orientable: true,
            genus_or_crosscap_number: 0,
            boundary_count: 1,
        };
        assert_eq!(ring_of(&disk), Err(CohomologyError::HasBoundary(1)));
    }

    #[test]
    fn cup_examples() {
        let a = OneClass::from_bits(&[1, 0]);
        let b = OneClass::from_bits(&[0, 1]);
        assert!(cup_pair(&a, &b, &torus()).unwrap());
        assert!(!cup_pair(&a, &a, &torus()).unwrap());
        assert!(cup_pair(&a, &a, &klein()).unwrap());
    }

    #[test]
    fn cup_dimension_mismatch() {
        let a = OneClass::from_bits(&[1, 0, 1]);
        assert!(matches!(
            cup_pair(&a, &a, &torus()),
            Err(CohomologyError::DimensionMismatch {
                expected: 2,
                got: 3
            })
        ));
    }

    #[test]
    fn square_examples() {
        assert!(!square_pairing(&OneClass::from_bits(&[1, 1]), &klein()).unwrap());
        assert!(square_pairing(&OneClass::from_bits(&[1, 0]), &klein()).unwrap());
        let t2 = SurfaceCohomology::orientable(2);
        for bits in 0u8..16 {
            let k = OneClass((0..4).map(|i| bits >> i & 1 == 1).collect());
            assert!(!square_pairing(&k, &t2).unwrap());
        }
    }

    #[test]
    fn square_detects_bad_torsion_class() {
        let bad = SurfaceCohomology::from_parts(
            false,
            vec![vec![true, false], vec![false, true]],
            vec![true, false],
        )
        .unwrap();
        let k = OneClass::from_bits(&[0, 1]);
        assert!(matches!(
            square_pairing(&k, &bad),
            Err(CohomologyError::InvalidRing { .. })
        ));
    }

    #[test]
    fn from_parts_validation() {
        assert_eq!(
            SurfaceCohomology::from_parts(
                true,
                vec![vec![true, true], vec![false, true]],
                vec![false; 2]
            ),
            Err(CohomologyError::NotSymmetric)
        );
        assert_eq!(
            SurfaceCohomology::from_parts(
                true,
                vec![vec![true, true], vec![true, true]],
                vec![false; 2]
            ),
            Err(CohomologyError::Singular)
        );
    }

    #[test]
    fn cokernel_examples() {
        assert_eq!(
            square_class_cokernel(&H1Presentation::new(3, vec![]).unwrap()),
            0
        );
        assert_eq!(
            square_class_cokernel(&H1Presentation::new(0, vec![(4, 1)]).unwrap()),
            1
        );
        let h = H1Presentation::new(0, vec![(2, 1), (8, 1), (12, 1)]).unwrap();
        assert_eq!(square_class_cokernel(&h), 2);
        assert!(H1Presentation::new(0, vec![(1, 1)]).is_err());
        assert!(H1Presentation::new(0, vec![(6, 0)]).is_err());
    }

    #[test]
    fn whitney_examples() {
        let t = torus();
        let alpha = OneClass::from_bits(&[1, 0]);
        let beta = OneClass::from_bits(&[0, 1]);
        for n in 1..8 {
            let lines = vec![beta.clone(); n];
            assert!(!whitney_w2(&lines, &t).unwrap());
            let mut lines = vec![alpha.clone(), &alpha + &beta];
            lines.extend(std::iter::repeat_n(beta.clone(), n - 1));
            assert!(whitney_w2(&lines, &t).unwrap());
        }
        assert!(!whitney_w2(&[], &t).unwrap());
    }

    #[test]
    fn ring_json_round_trip() {
        let k = klein();
        let s = serde_json::to_string(&k).unwrap();
        assert!(s.contains(r#""intersection_form":[[1,0],[0,1]]"#));
        let back: SurfaceCohomology = serde_json::from_str(&s).unwrap();
        assert_eq!(back, k);
    }

    fn class(n: usize) -> impl Strategy<Value = OneClass> {
        prop::collection::vec(any::<bool>(), n).prop_map(OneClass)
    }

    fn ring_and_classes() -> impl Strategy<Value = (SurfaceCohomology, OneClass, OneClass, OneClass)>
    {
        prop_oneof![
            (0usize..5).prop_map(SurfaceCohomology::orientable),
            (1usize..9).prop_map(SurfaceCohomology::nonorientable),
        ]
        .prop_flat_map(|r| {
            let n = r.h1_rank();
            (Just(r), class(n), class(n), class(n))
        })
    }

    proptest! {
        #[test]
        fn cup_symmetric_bilinear((r, a, b, c) in ring_and_classes()) {
            prop_assert_eq!(cup_pair(&a, &b, &r).unwrap(), cup_pair(&b, &a, &r).unwrap());
            let lhs = cup_pair(&(&a + &b), &c, &r).unwrap();
            let rhs = cup_pair(&a, &c, &r).unwrap() ^ cup_pair(&b, &c, &r).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn square_identity((r, a, _b, _c) in ring_and_classes()) {
            let sq = cup_pair(&a, &a, &r).unwrap();
            if r.is_orientable() {
                prop_assert!(!sq);
            } else {
                prop_assert_eq!(sq, a.dot(r.torsion_class()));
            }
        }

        #[test]
        fn whitney_permutation_invariant(
            lines in prop::collection::vec(class(4), 0..8),
            rot in 0usize..8,
        ) {
            let r = SurfaceCohomology::nonorientable(4);
            let mut perm = lines.clone();
            if !perm.is_empty() {
                let k = rot % perm.len();
                perm.rotate_left(k);
                perm.reverse();
            }
            prop_assert_eq!(whitney_w2(&lines, &r).unwrap(), whitney_w2(&perm, &r).unwrap());
        }
    }
}
