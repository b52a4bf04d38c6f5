//! Oriented symmetric half-surfaces ("sh-surfaces").
//!
//! An sh-surface is a compact oriented surface together with an involution on
//! its boundary that preserves every boundary circle. Each circle either
//! carries the identity (a *standard* component) or the antipodal map (a
//! *crosscap*). Everything downstream depends only on the genus and the two
//! boundary counts, so the model here is purely combinatorial.

use serde::{Deserialize, Serialize};

/// Involution type carried by one boundary circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundaryKind {
    /// Identity involution, `|c_i| = 0`.
    Standard,
    /// Antipodal involution, `|c_i| = 1`.
    Crosscap,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ShSurface {
    pub genus: u32,
    pub boundary: Vec<BoundaryKind>,
}

/// Topological type of a surface: orientability, genus (or crosscap number
/// when nonorientable) and number of boundary circles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClosedSurfaceInfo {
    pub orientable: bool,
    pub genus_or_crosscap_number: u32,
    pub boundary_count: u32,
}

impl ClosedSurfaceInfo {
    pub fn orientable(genus: u32) -> Self {
        ClosedSurfaceInfo {
            orientable: true,
            genus_or_crosscap_number: genus,
            boundary_count: 0,
        }
    }

    pub fn nonorientable(crosscaps: u32) -> Self {
        ClosedSurfaceInfo {
            orientable: false,
            genus_or_crosscap_number: crosscaps,
            boundary_count: 0,
        }
    }

    pub fn euler_char(&self) -> i64 {
        let k = self.genus_or_crosscap_number as i64;
        let b = self.boundary_count as i64;
        if self.orientable {
            2 - 2 * k - b
        } else {
            2 - k - b
        }
    }
}

impl ShSurface {
    pub fn new(genus: u32, boundary: Vec<BoundaryKind>) -> Self {
        ShSurface { genus, boundary }
    }

    /// The closed disk whose boundary is a single crosscap; its double is the
    /// Riemann sphere with the antipodal involution.
    pub fn disk_with_crosscap() -> Self {
        ShSurface::new(0, vec![BoundaryKind::Crosscap])
    }

    /// `|c|_0`, the number of standard boundary components.
    pub fn standard_count(&self) -> usize {
        self.boundary
            .iter()
            .filter(|b| **b == BoundaryKind::Standard)
            .count()
    }

    /// `|c|_1`, the number of crosscaps.
    pub fn crosscap_count(&self) -> usize {
        self.boundary
            .iter()
            .filter(|b| **b == BoundaryKind::Crosscap)
            .count()
    }

    pub fn euler_char(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.boundary.len() as i64
    }

    /// Genus of the doubled closed surface `(Σ⁺ ⊔ Σ⁻)/∼`.
    ///
    /// A surface without boundary is returned unchanged.
    pub fn double(&self) -> ClosedSurfaceInfo {
        let b = self.boundary.len() as u32;
        let genus = if b == 0 {
            self.genus
        } else {
            2 * self.genus + b - 1
        };
        ClosedSurfaceInfo::orientable(genus)
    }

    /// The quotient `Σ̂/ĉ`: each crosscap circle closes up into a Möbius band,
    /// standard circles stay as boundary.
    pub fn quotient(&self) -> ClosedSurfaceInfo {
        let std = self.standard_count() as u32;
        let cc = self.crosscap_count() as u32;
        if cc == 0 {
            ClosedSurfaceInfo {
                orientable: true,
                genus_or_crosscap_number: self.genus,
                boundary_count: std,
            }
        } else {
            ClosedSurfaceInfo {
                orientable: false,
                genus_or_crosscap_number: 2 * self.genus + cc,
                boundary_count: std,
            }
        }
    }

    /// The same surface with every crosscap circle removed from the boundary
    /// list (genus and standard components kept in order).
    pub fn without_crosscaps(&self) -> ShSurface {
        ShSurface {
            genus: self.genus,
            boundary: self
                .boundary
                .iter()
                .copied()
                .filter(|b| *b == BoundaryKind::Standard)
                .collect(),
        }
    }
}
