//! Crate-wide error types.

use thiserror::Error;

/// Top-level error for the solver pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("kernel: {0}")]
    Kernel(#[from] KernelError),
    #[error("scene: {0}")]
    Scene(#[from] SceneError),
    #[error("fdtd: {0}")]
    Fdtd(#[from] FdtdError),
    #[error("force: {0}")]
    Force(#[from] ForceError),
    #[error("oracle: {0}")]
    Oracle(#[from] OracleError),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Error)]
pub enum KernelError {
    #[error("frequency must be positive, got {0}")]
    NonPositiveFrequency(f64),
    #[error("time must be positive, got {0}")]
    NonPositiveTime(f64),
    #[error("invalid kernel spec: {0}")]
    InvalidSpec(String),
    #[error("quadrature did not converge: relative change {rel:.3e} after {nodes} nodes (t={t}, sigma={sigma})")]
    QuadratureDiverged { rel: f64, nodes: usize, t: f64, sigma: f64 },
}

#[derive(Debug, Error)]
pub enum SceneError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation: {0}")]
    Validation(String),
    #[error("material '{0}' is not defined")]
    UnknownMaterial(String),
    #[error("permittivity pole at omega = {0}")]
    PermittivityPole(num_complex::Complex64),
    #[error("permittivity of a perfect conductor is not evaluable")]
    ConductorPermittivity,
}

#[derive(Debug, Error)]
pub enum FdtdError {
    #[error("field blow-up (non-finite values) detected at step {step}, t = {time:.3}")]
    BlowUp { step: usize, time: f64 },
    #[error("fields did not decay below the termination threshold within {max_steps} steps (sigma too small?)")]
    NonDecay { max_steps: usize },
    #[error("source location {0:?} is outside the cell")]
    SourceOutsideCell([f64; 2]),
    #[error("invalid simulation parameters: {0}")]
    InvalidParams(String),
}

#[derive(Debug, Error)]
pub enum ForceError {
    #[error("kernel dt = {kernel_dt} does not match trace dt = {trace_dt}")]
    DtMismatch { kernel_dt: f64, trace_dt: f64 },
    #[error("trace is missing component {0}")]
    MissingComponent(String),
    #[error("missing jobs in assembly: {0:?}")]
    MissingJobs(Vec<String>),
    #[error("kernel variant {0:?} does not match scene mode")]
    VariantMismatch(crate::kernel::KernelVariant),
}

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("quadrature did not converge: relative change {0:.3e}")]
    QuadratureDiverged(f64),
    #[error("invalid layer stack: {0}")]
    InvalidStack(String),
    #[error("frequency-domain solve failed: {0}")]
    SolveFailed(String),
    #[error("grid too large for the direct solver: {0} x {1} (<= 160 per side supported)")]
    GridTooLarge(usize, usize),
}
