//! Finsleroid metric functions and the machinery needed to check them.
//!
//! The crate covers two families of direction-dependent norms on
//! `R × R^{N-1}` (a distinguished `T` axis plus `N-1` spatial components):
//!
//! * the positive-definite family [`PdParams`], whose unit level set (the
//!   Finsleroid) is a closed convex surface of revolution about the `T` axis,
//!   together with its conjugate Hamiltonian and the explicit map that carries
//!   the Finsleroid onto a round sphere;
//! * the relativistic family [`SrParams`], an anisotropic deformation of the
//!   Minkowski interval.
//!
//! Everything is a pure function of its inputs. Vectors keep the `T`
//! component first, and matrices are indexed `(p, q)` with `0` the `T` slot.

pub mod dual;
pub mod error;
pub mod numerics;
pub mod pd;
pub mod spherical;
pub mod sr;
pub mod vector;

pub use dual::CoLandmarks;
pub use error::{FinslerError, Result};
pub use pd::{Branch, MetricBackend, PdLandmarks, PdParams};
pub use spherical::QuasiEuclideanTensor;
pub use sr::{ConeFactor, Sector, SrLandmarks, SrParams};
pub use vector::{CoVector, EventVector, SphereImage, SquareMatrix};
