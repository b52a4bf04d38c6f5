//! Real bundle pairs described by their classifying data.
//!
//! Over a fixed sh-surface a real bundle pair is determined by its complex
//! rank, its Maslov index and, for every standard boundary circle, whether the
//! real part of the bundle is orientable along it. Over the torus
//! `(S¹ × S¹, id × antipodal)` there are exactly two pairs of each rank,
//! distinguished by one twist bit.

use crate::cohomology::OneClass;
use crate::surfaces::ShSurface;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BundleError {
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("Maslov index {maslov} has the wrong parity for boundary w1 bits (sum {w1_sum})")]
    MaslovParity { maslov: i64, w1_sum: usize },
    #[error("base mismatch: pair has {pair} standard-boundary bits, surface has {surface} standard components")]
    BaseMismatch { pair: usize, surface: usize },
    #[error("tensor product is only defined for rank-1 pairs (got rank {0})")]
    NotLine(u32),
}

#[derive(Deserialize)]
struct RawPair {
    rank: u32,
    maslov: i64,
    #[serde(with = "crate::bits::vec")]
    std_w1: Vec<bool>,
}

/// Classifying data `(rank, μ, w₁ bits)` of a real bundle pair.
///
/// The Maslov index must have the parity of the number of standard circles
/// along which the real part is nonorientable; crosscap circles always
/// contribute an even amount.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPair")]
pub struct RealBundlePair {
    rank: u32,
    maslov: i64,
    #[serde(with = "crate::bits::vec")]
    std_w1: Vec<bool>,
}

impl TryFrom<RawPair> for RealBundlePair {
    type Error = BundleError;

    fn try_from(r: RawPair) -> Result<Self, BundleError> {
        RealBundlePair::new(r.rank, r.maslov, r.std_w1)
    }
}

impl RealBundlePair {
    pub fn new(rank: u32, maslov: i64, std_w1: Vec<bool>) -> Result<Self, BundleError> {
        if rank == 0 {
            return Err(BundleError::ZeroRank);
        }
        let w1_sum = std_w1.iter().filter(|b| **b).count();
        if maslov.rem_euclid(2) as usize != w1_sum % 2 {
            return Err(BundleError::MaslovParity { maslov, w1_sum });
        }
        Ok(RealBundlePair {
            rank,
            maslov,
            std_w1,
        })
    }

    /// The trivial pair `(Σ × Cⁿ, standard conjugation)` over `base`.
    pub fn trivial(rank: u32, base: &ShSurface) -> Result<Self, BundleError> {
        RealBundlePair::new(rank, 0, vec![false; base.standard_count()])
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn maslov(&self) -> i64 {
        self.maslov
    }

    pub fn std_w1(&self) -> &[bool] {
        &self.std_w1
    }

    fn check_base(&self, s: &ShSurface) -> Result<(), BundleError> {
        if self.std_w1.len() != s.standard_count() {
            return Err(BundleError::BaseMismatch {
                pair: self.std_w1.len(),
                surface: s.standard_count(),
            });
        }
        Ok(())
    }
}

/// Whitney sum: ranks and Maslov indices add, boundary `w₁` bits add mod 2.
pub fn direct_sum(p: &RealBundlePair, q: &RealBundlePair) -> Result<RealBundlePair, BundleError> {
    if p.std_w1.len() != q.std_w1.len() {
        return Err(BundleError::BaseMismatch {
            pair: q.std_w1.len(),
            surface: p.std_w1.len(),
        });
    }
    Ok(RealBundlePair {
        rank: p.rank + q.rank,
        maslov: p.maslov + q.maslov,
        std_w1: p.std_w1.iter().zip(&q.std_w1).map(|(a, b)| a ^ b).collect(),
    })
}

/// `Λ^top_C` with the induced conjugation.
pub fn top_exterior(p: &RealBundlePair) -> RealBundlePair {
    RealBundlePair {
        rank: 1,
        ..p.clone()
    }
}

/// Tensor product of two line pairs: Maslov indices add, `w₁` bits add.
pub fn line_tensor(p: &RealBundlePair, q: &RealBundlePair) -> Result<RealBundlePair, BundleError> {
    for x in [p, q] {
        if x.rank != 1 {
            return Err(BundleError::NotLine(x.rank));
        }
    }
    let mut s = direct_sum(p, q)?;
    s.rank = 1;
    Ok(s)
}

/// Real index of a real Cauchy-Riemann operator on `p` over `s`:
/// `μ + (1 − ĝ)·n`, with `ĝ` the genus of the double.
pub fn fredholm_index(p: &RealBundlePair, s: &ShSurface) -> Result<i64, BundleError> {
    p.check_base(s)?;
    let g_hat = s.double().genus_or_crosscap_number as i64;
    Ok(p.maslov + (1 - g_hat) * p.rank as i64)
}

/// A real bundle pair over `(S¹ × S¹, id × antipodal)`.
///
/// `twist = false` is `nV₊`; `twist = true` is `V₋ ⊕ (n−1)V₊`, where `V±` is
/// the trivial line clutched by `±1` around the first factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KleinTorusPair {
    pub rank: u32,
    #[serde(with = "crate::bits")]
    pub twist: bool,
}

impl KleinTorusPair {
    pub fn new(rank: u32, twist: bool) -> Result<Self, BundleError> {
        if rank == 0 {
            return Err(BundleError::ZeroRank);
        }
        Ok(KleinTorusPair { rank, twist })
    }

    /// Whitney sum; the twist bits add.
    pub fn direct_sum(&self, other: &KleinTorusPair) -> KleinTorusPair {
        KleinTorusPair {
            rank: self.rank + other.rank,
            twist: self.twist ^ other.twist,
        }
    }

    /// First Stiefel-Whitney classes of the real line bundles the pair splits
    /// into after passing to the quotient `S¹ × RP¹`, in the torus basis
    /// `(α, β)` where α comes from the first factor and β from `RP¹`.
    ///
    /// Real and imaginary axes split each `V±` into two lines:
    /// `(V₊)_R = τ`, `(V₊)_{iR} = γ₂`, `(V₋)_R = γ₁`, `(V₋)_{iR} = γ₁ ⊗ γ₂`.
    pub fn real_line_classes(&self) -> Vec<OneClass> {
        let trivial = OneClass::from_bits(&[0, 0]);
        let gamma1 = OneClass::from_bits(&[1, 0]);
        let gamma2 = OneClass::from_bits(&[0, 1]);
        let gamma12 = OneClass::from_bits(&[1, 1]);
        let untwisted = self.rank - self.twist as u32;
        let mut lines = Vec::with_capacity(2 * self.rank as usize);
        if self.twist {
            lines.push(gamma1);
            lines.push(gamma12);
        }
        for _ in 0..untwisted {
            lines.push(trivial.clone());
            lines.push(gamma2.clone());
        }
        lines
    }
}

/// `⟨w₂^{c̃}(V), [S¹ × S¹]^{id×c}⟩`: vanishes on `nV₊` and not on
/// `V₋ ⊕ (n−1)V₊`.
pub fn klein_eqw2(k: &KleinTorusPair) -> bool {
    k.twist
}

pub fn klein_top(k: &KleinTorusPair) -> KleinTorusPair {
    KleinTorusPair {
        rank: 1,
        twist: k.twist,
    }
}

pub fn klein_tensor(a: &KleinTorusPair, b: &KleinTorusPair) -> Result<KleinTorusPair, BundleError> {
    for x in [a, b] {
        if x.rank != 1 {
            return Err(BundleError::NotLine(x.rank));
        }
    }
    Ok(KleinTorusPair {
        rank: 1,
        twist: a.twist ^ b.twist,
    })
}
