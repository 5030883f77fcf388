//! Simulation and verification toolkit for the greatest convex minorant of
//! Brownian motion, meander, and bridge.
//!
//! The crate provides three independent routes to the same family of random
//! objects -- direct path simulation plus exact hull extraction ([`path`],
//! [`hull`]), samplers for the Poisson point process of hull faces
//! ([`faces`]), and the Markovian vertex recursion ([`recursion`]) -- together
//! with the closed-form densities and transforms that tie them together
//! ([`curves`]) and the statistical machinery used to cross-check every route
//! against every other ([`stats`], [`suites`]).

pub mod config;
pub mod curves;
pub mod faces;
pub mod hull;
pub mod path;
pub mod recursion;
pub mod rng;
pub mod special;
pub mod stats;
pub mod suites;

pub use config::ExperimentConfig;
pub use faces::{FacePoint, FaceProcessSample};
pub use hull::{Face, MinorantDecomposition};
pub use path::{DiscretePath, PathKind};
pub use recursion::{TauRhoState, TauRhoTrajectory};
pub use rng::RngStream;
pub use special::SpecialValue;
pub use stats::TestReport;

/// Errors shared by every module in the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Input outside the mathematical domain of an operation.
    #[error("domain error in {what}: argument {value}")]
    Domain { what: &'static str, value: f64 },
    /// Structurally invalid input (wrong sizes, non-monotone grids, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// An iterative scheme failed to reach its tolerance.
    #[error("{what} did not converge")]
    NonConvergence { what: &'static str },
    /// A simulation hit its configured cap before finishing.
    #[error("{what} exceeded its cap of {cap}")]
    CapExceeded { what: &'static str, cap: f64 },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
