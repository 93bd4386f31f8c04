//! Time-domain Casimir force solver.
//!
//! Computes Casimir forces by running a set of independent dissipative FDTD
//! simulations with harmonic surface sources and integrating the recorded
//! stress-tensor responses against a geometry-independent time kernel.
//!
//! The pipeline:
//!
//! 1. [`scene`] describes the problem: geometry, materials, boundaries,
//!    discretization, the stress surface and the source basis.
//! 2. [`kernel`] tabulates the time kernels `Im g(-t)` that weight the
//!    field responses.
//! 3. [`harmonics`] enumerates one simulation job per (face, cosine order,
//!    azimuthal index, Bloch node, polarization, field family).
//! 4. [`fdtd`] runs each job: a staggered-grid time stepper with uniform
//!    dissipation, dispersive materials, CPML, Bloch and cylindrical modes.
//! 5. [`force`] contracts recorded traces into stress combinations,
//!    integrates them in time and assembles the total force.
//! 6. [`oracle`] provides independent cross-checks: the Lifshitz formula
//!    for layered media and a frequency-domain solve of the same grid.
//! 7. [`runner`] / [`report`] drive batch execution with a worker pool,
//!    checkpointing, sweeps and plot-ready output.
//!
//! Units: `hbar = c = 1`; lengths in the scale `a`, times in `a/c`,
//! angular frequencies and the dissipation `sigma` in `c/a`. Forces come
//! out in `hbar c / a^2` (per unit length for the planar modes, absolute
//! in cylindrical mode).

pub mod error;
pub mod fdtd;
pub mod force;
pub mod harmonics;
pub mod kernel;
pub mod oracle;
pub mod quadrature;
pub mod report;
pub mod runner;
pub mod scene;

pub use error::Error;
pub use kernel::{KernelSpec, KernelTable, KernelVariant};
