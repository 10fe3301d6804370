//! Exact-arithmetic reconstructions of classical practical-geometry procedures.
//!
//! * [`heron`]: triangle area from sides or vertices, and the geometric
//!   identity behind Heron's rule.
//! * [`circle`]: certified bounds on π from inscribed and circumscribed
//!   regular polygons, with the exhaustion and perimeter/area arguments.
//! * [`mean_prop`]: two mean proportionals (cube roots) by the constructions
//!   of Heron, Philo, Diocles and Nicomedes, plus cissoid and conchoid samplers.
//! * [`root_extraction`]: the digit-by-digit nth-root algorithm with full
//!   step traces.
//! * [`cli`]: the `practica` command-line front end.
//!
//! All arithmetic is on exact rationals. Irrational values are enclosed in
//! [`numerics::Interval`]s whose endpoints are rounded outward, so every
//! printed bound is a proven bound.
//!
//! ```
//! use practica::circle::{pi_bounds, PiTarget};
//! use practica::numerics::{rat, Precision};
//!
//! let b = pi_bounds(&PiTarget::Sides(96), Precision::default()).unwrap();
//! assert!(b.lower() > &rat(223, 71) && b.upper() < &rat(22, 7));
//! ```

pub mod circle;
pub mod cli;
pub mod error;
pub mod geometry;
pub mod heron;
pub mod mean_prop;
pub mod numerics;
pub mod root_extraction;

pub use error::{Error, Result};
