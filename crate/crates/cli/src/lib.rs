//! Export layer behind the `finsleroid` binary: profile curves, revolution
//! meshes and landmark sweeps, plus the file formats they are written in.

pub mod error;
pub mod format;
pub mod mesh;
pub mod profile;
pub mod sweep;

pub use error::{ExportError, Result};
pub use mesh::RevolutionMesh;
pub use profile::{ProfileCurve, ProfileFamily};
pub use sweep::{SweepFamily, SweepTable};
