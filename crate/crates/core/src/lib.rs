//! Coding theory over small finite rings.
//!
//! Rings are fully tabulated ([`ring::FiniteRing`]), weights are exact-rational
//! tables ([`weights::WeightFunction`]), and every bound is evaluated in exact
//! arithmetic ([`bounds`]). The [`search`] and [`verify`] modules provide the
//! brute-force side: optimal and greedy code search, list-decoding profiles,
//! and direct checkers for the inequalities the bounds rest on.
//!
//! ```
//! use ringbounds::{bounds, ring::FiniteRing};
//!
//! let z4 = FiniteRing::parse("Z4").unwrap();
//! let report = bounds::sphere_packing_overweight(&z4, 2, 3).unwrap();
//! assert_eq!(report.integer_bound.unwrap(), 3.into());
//! ```

pub mod bounds;
pub mod cli;
pub mod error;
pub mod geometry;
pub mod rational;
pub mod report;
pub mod ring;
pub mod search;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
pub use geometry::{Code, Word};
pub use rational::Rational;
pub use ring::{FiniteRing, RingSpec};
pub use weights::WeightFunction;
