//! Numerical laboratory for even Hecke-Maass cusp forms on the modular surface.
//!
//! The crate evaluates the rescaled MacDonald-Bessel kernel e^{pi r/2} K_{ir}(u)
//! across its oscillatory, transition and exponential regimes, solves for
//! desk-scale even Maass forms by Hejhal-style collocation, and builds on those
//! two primitives: horocycle Parseval identities, L^4 and L^p norms over the
//! fundamental domain, geodesic restrictions, Dirichlet-polynomial functionals,
//! a quantitative Littlewood sign-change certificate, and nodal-domain counts
//! on sign grids.
//!
//! Everything is plain `f64` except the slow quadrature oracle for the Bessel
//! kernel, which accumulates in double-double arithmetic so it can serve as an
//! independent reference for the fast asymptotic paths.

pub mod dd;
pub mod error;
pub mod form;
pub mod eigensolver;
pub mod nodal;
pub mod norms;
pub mod oscillation;
pub mod parallel;
pub mod quad;
pub mod selftest;
pub mod special;

pub use error::{Error, Result};
pub use form::{HeckeTable, MaassForm, Point};
pub use special::{BesselEvaluation, BesselRegime, RegimeTag};
