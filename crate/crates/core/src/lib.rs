//! Orientability computations for families of real Cauchy-Riemann operators
//! over oriented surfaces whose boundary circles carry either the identity
//! or the antipodal involution ("crosscaps").
//!
//! The crate is organised by the objects it manipulates:
//!
//! - [`surfaces`]: combinatorial sh-surfaces, their doubles and quotients.
//! - [`cohomology`]: mod-2 cohomology arithmetic on closed surfaces.
//! - [`bundles`]: real bundle pairs by classifying data, index arithmetic.
//! - [`holonomy`]: the determinant-line holonomy formula and its corollaries.
//! - [`clutching`]: numerical classification of sampled clutching loops.
//! - [`spectral`]: kernel/index verification on the disk with a crosscap.
//! - [`realcurves`]: equivariant real rational maps into projective space.
//! - [`verify`]: the end-to-end acceptance checks, shared by tests and CLI.

pub mod bits;
pub mod bundles;
pub mod clutching;
pub mod cohomology;
pub mod holonomy;
pub mod realcurves;
pub mod spectral;
pub mod surfaces;
pub mod verify;

pub use bundles::{KleinTorusPair, RealBundlePair};
pub use clutching::SampledLoop;
pub use cohomology::{H1Presentation, OneClass, SurfaceCohomology};
pub use holonomy::{CrosscapLoopData, OperatorLoop, StdBoundaryLoopData, TrivializationChange};
pub use realcurves::{PolyTuple, RealMapParams};
pub use spectral::DiskProblem;
pub use surfaces::{BoundaryKind, ClosedSurfaceInfo, ShSurface};

/// Crate-wide error, wrapping the per-module error types.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Cohomology(#[from] cohomology::CohomologyError),
    #[error(transparent)]
    Bundle(#[from] bundles::BundleError),
    #[error(transparent)]
    Holonomy(#[from] holonomy::HolonomyError),
    #[error(transparent)]
    Clutching(#[from] clutching::ClutchingError),
    #[error(transparent)]
    Spectral(#[from] spectral::SpectralError),
    #[error(transparent)]
    RealCurve(#[from] realcurves::RealCurveError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
