//! Solvers for a time-dependent SEIRD epidemic model in one space dimension.
//!
//! Two routes to the same dynamics are provided:
//!
//! * [`kinetic`]: a micro-macro solver for the underlying kinetic transport
//!   model, uniformly stable in the mean free path `eps` and consistent with
//!   the reaction-diffusion limit as `eps -> 0`;
//! * [`macroscale`]: an explicit finite-difference solver for the limiting
//!   SEIRD reaction-diffusion system, used standalone and as the `eps -> 0`
//!   reference for the kinetic runs.
//!
//! [`scenarios`] registers the experiment setups (grids, rates, initial
//! conditions), and [`analysis`] provides the norms, conservation audits and
//! sweep drivers that compare the two solvers.

pub mod analysis;
pub mod error;
pub mod grid;
pub mod kinetic;
pub mod macroscale;
pub mod model;
pub mod scenarios;

pub use error::{Result, SimError};
