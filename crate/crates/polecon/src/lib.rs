//! Macroeconomic policy analysis toolkit.
//!
//! The crate bundles six small, pure analysis engines:
//!
//! - [`dataio`]: FRED-style CSV ingestion, series alignment, CPI deflation,
//!   and minimum-wage summary statistics.
//! - [`gaps`]: output gaps, cyclical unemployment, and detection of sustained
//!   negative-cyclical-unemployment episodes.
//! - [`fiscal`]: MPC-targeted stimulus sizing for a given recessionary gap.
//! - [`empowerment`]: NPV marginal cost-benefit engine for subsidized
//!   student-loan programs.
//! - [`minwage`]: counterfactual minimum-wage trajectories timed to
//!   negative-cyclical-unemployment episodes.
//! - [`games`]: 2x2 commons games, pure Nash equilibria, and corrective
//!   (Pigouvian) interventions.
//! - [`charity`]: charitable-giving response to tax-price changes and
//!   transfer-channel comparison.
//!
//! Everything is a pure function of its inputs; all values are immutable
//! after construction and safe to share across threads.

pub mod charity;
pub mod dataio;
pub mod empowerment;
mod error;
pub mod fiscal;
pub mod games;
pub mod gaps;
pub mod minwage;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
