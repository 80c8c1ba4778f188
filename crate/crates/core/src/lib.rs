//! Contact-free routing of randomly arriving agents through a grid network.
//!
//! The crate models a rectangular cell grid with node and aisle cells,
//! computes shortest-path distances, assigns visit orders to agents via
//! heuristic or exact solvers that avoid occupied time windows at nodes,
//! and evaluates everything under a seeded Monte Carlo simulation with
//! stochastic arrivals, speeds, dwell times, and route noncompliance.
//!
//! The crate is `no_std`-compatible (with `alloc`); the `std` feature is
//! enabled by default. IO, CLI, and file handling live in the companion
//! `cfr-cli` crate.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod checks;
pub mod exact;
pub mod grid;
pub mod heuristic;
pub mod noncompliance;
pub mod schedule;
pub mod sim;
pub mod stats;
pub mod stochastics;

mod math;

pub use grid::{Cell, DistanceMatrix, Layout, NodeId};
pub use schedule::{BlockedWindowTable, PlannedSchedule, VisitOrder};
pub use sim::{Policy, RunMetrics, SimConfig};
pub use stochastics::{RandomStream, StochasticConfig};
