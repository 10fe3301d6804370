//! Exact arithmetic kernel.
//!
//! Every scalar in the crate is a [`Rational`] (an arbitrary-precision
//! fraction kept in lowest terms). Irrational quantities such as square roots,
//! π, or curve intersections are carried as [`Interval`]s whose endpoints are
//! rationals and whose arithmetic rounds outward, so the true value is always
//! enclosed.

mod binomial;
mod interval;
mod rational;
mod roots;

pub use binomial::{binomial, binomial_table};
pub use interval::Interval;
pub use rational::{checked_div, format_decimal, parse_rational, pow10, rat, rat_int, to_f64, Rational};
pub use roots::{ceil_sqrt, floor_sqrt, int_nth_root_floor, rat_sqrt_bounds};

use crate::error::{Error, Result};

/// Guard precision (in decimal digits) for directed-rounding square roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Precision(u32);

impl Precision {
    pub const DEFAULT_DIGITS: u32 = 30;

    pub fn new(decimal_digits: u32) -> Result<Self> {
        if decimal_digits == 0 {
            return Err(Error::domain("precision must be at least one decimal digit"));
        }
        Ok(Precision(decimal_digits))
    }

    pub fn decimal_digits(self) -> u32 {
        self.0
    }

    /// The same precision with `extra` more digits.
    pub fn widened(self, extra: u32) -> Self {
        Precision(self.0 + extra)
    }

    /// `10^-digits` as an exact rational.
    pub fn epsilon(self) -> Rational {
        pow10(-(self.0 as i64))
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision(Self::DEFAULT_DIGITS)
    }
}
