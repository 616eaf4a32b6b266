//! Shared randomness as a resource: classical coin states under local
//! stochastic processing, their quantum counterparts, and the
//! non-monopolizing social subsidy game that separates the two.
//!
//! The library models five layers:
//!
//! - [`coinspace`]: joint distributions of two classical coins, their
//!   mutual information (the resource monotone), and the named state
//!   families (alpha-correlated, equal not-alpha).
//! - [`freeops`]: local stochastic matrices — the free operations — plus
//!   the two structure results about the alpha-correlated edge: every
//!   two-faced coin decomposes through it, and no processing of it beats
//!   the two-faced ceiling in the three-restaurant game.
//! - [`quoin`]: two-qubit "quoin" states, local POVM measurement, the
//!   statistics they induce, and the reduction of classically correlated
//!   quoins to purely classical simulation.
//! - [`channel`]: qubit noise channels, shared-randomness distribution
//!   through them, advantage thresholds, and entanglement-breaking
//!   detection.
//! - [`game`]: the subsidy game itself — payoff evaluation, analytic
//!   bounds, hard-coded optimal classical strategies, maximin search over
//!   free operations, and the fixed quantum strategies.
//!
//! Supporting modules: [`maximin`] (deterministic multi-start simplex
//! search), [`linalg`] (small complex matrices and a Jacobi Hermitian
//! eigensolver), [`rng`] (seeded xorshift generator), [`csvio`] (CSV
//! serialization), [`verify`] (randomized property suites), and [`cli`]
//! (the `quoins` binary's front end).
//!
//! # Example
//!
//! ```
//! use quoins::coinspace::{eq_not_alpha, mutual_information};
//! use quoins::game::payoff;
//!
//! // The best three-restaurant coin: zero diagonal, uniform elsewhere.
//! let coin = eq_not_alpha(3)?;
//! assert!((payoff(&coin, 3)? - 1.0 / 6.0).abs() < 1e-15);
//! assert!(mutual_information(&coin) > 0.0);
//! # Ok::<(), quoins::Error>(())
//! ```

pub mod channel;
pub mod cli;
pub mod coinspace;
pub mod csvio;
mod error;
pub mod freeops;
pub mod game;
pub mod linalg;
pub mod maximin;
pub mod quoin;
pub mod rng;
pub mod verify;

pub use error::{Error, Result};
