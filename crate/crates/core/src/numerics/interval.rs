use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{pow10, rat_sqrt_bounds, Precision, Rational};
use crate::error::{Error, Result};

/// Closed interval `[lo, hi]` with rational endpoints.
///
/// Arithmetic is exact on the endpoints, so every operation encloses the true
/// result of the same operation on any members of the operands. Only
/// [`Interval::sqrt`] and [`Interval::round_outward`] lose information, and
/// both round outward.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(Error::domain(format!("interval endpoints out of order: [{lo}, {hi}]")));
        }
        Ok(Interval { lo, hi })
    }

    pub fn point(x: Rational) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn into_bounds(self) -> (Rational, Rational) {
        (self.lo, self.hi)
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(BigInt::from(2))
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&Rational::zero())
    }

    /// `[lo, hi]` lies inside `other`.
    pub fn is_subset_of(&self, other: &Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    /// Largest absolute value of any member.
    pub fn magnitude(&self) -> Rational {
        std::cmp::max(self.lo.abs(), self.hi.abs())
    }

    /// Every member of `self` is strictly less than every member of `other`.
    pub fn certainly_lt(&self, other: &Interval) -> bool {
        self.hi < other.lo
    }

    pub fn certainly_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn certainly_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = std::cmp::max(&self.lo, &other.lo).clone();
        let hi = std::cmp::min(&self.hi, &other.hi).clone();
        (lo <= hi).then_some(Interval { lo, hi })
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval { lo: std::cmp::min(&self.lo, &other.lo).clone(), hi: std::cmp::max(&self.hi, &other.hi).clone() }
    }

    pub fn scale(&self, k: &Rational) -> Interval {
        let (a, b) = (&self.lo * k, &self.hi * k);
        if k.is_negative() {
            Interval { lo: b, hi: a }
        } else {
            Interval { lo: a, hi: b }
        }
    }

    pub fn square(&self) -> Interval {
        let (a, b) = (&self.lo * &self.lo, &self.hi * &self.hi);
        if self.contains_zero() {
            Interval { lo: Rational::zero(), hi: std::cmp::max(a, b) }
        } else if self.lo.is_positive() {
            Interval { lo: a, hi: b }
        } else {
            Interval { lo: b, hi: a }
        }
    }

    pub fn abs(&self) -> Interval {
        if self.contains_zero() {
            Interval { lo: Rational::zero(), hi: self.magnitude() }
        } else if self.lo.is_positive() {
            self.clone()
        } else {
            -self
        }
    }

    pub fn recip(&self) -> Result<Interval> {
        if self.contains_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Interval { lo: self.hi.recip(), hi: self.lo.recip() })
    }

    pub fn checked_div(&self, other: &Interval) -> Result<Interval> {
        Ok(self * &other.recip()?)
    }

    /// Outward-rounded square root; the lower endpoint must be non-negative.
    pub fn sqrt(&self, p: Precision) -> Result<Interval> {
        if self.lo.is_negative() {
            return Err(Error::domain(format!("square root of interval with negative member {}", self.lo)));
        }
        let lo = rat_sqrt_bounds(&self.lo, p)?.into_bounds().0;
        let hi = rat_sqrt_bounds(&self.hi, p)?.into_bounds().1;
        Ok(Interval { lo, hi })
    }

    /// Snaps the endpoints outward onto the grid `10^-digits`, bounding the
    /// size of the endpoint denominators in long computations.
    pub fn round_outward(&self, digits: u32) -> Interval {
        let scale = pow10(digits as i64);
        let lo = (&self.lo * &scale).floor() / &scale;
        let hi = (&self.hi * &scale).ceil() / &scale;
        Interval { lo, hi }
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl From<Rational> for Interval {
    fn from(x: Rational) -> Self {
        Interval::point(x)
    }
}

impl Neg for &Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval { lo: -&self.hi, hi: -&self.lo }
    }
}

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval { lo: -self.hi, hi: -self.lo }
    }
}

impl Add for &Interval {
    type Output = Interval;
    fn add(self, rhs: &Interval) -> Interval {
        Interval { lo: &self.lo + &rhs.lo, hi: &self.hi + &rhs.hi }
    }
}

impl Sub for &Interval {
    type Output = Interval;
    fn sub(self, rhs: &Interval) -> Interval {
        Interval { lo: &self.lo - &rhs.hi, hi: &self.hi - &rhs.lo }
    }
}

impl Mul for &Interval {
    type Output = Interval;
    fn mul(self, rhs: &Interval) -> Interval {
        let products = [&self.lo * &rhs.lo, &self.lo * &rhs.hi, &self.hi * &rhs.lo, &self.hi * &rhs.hi];
        let lo = products.iter().min().expect("four products").clone();
        let hi = products.iter().max().expect("four products").clone();
        Interval { lo, hi }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for Interval {
            type Output = Interval;
            fn $m(self, rhs: Interval) -> Interval {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Interval> for Interval {
            type Output = Interval;
            fn $m(self, rhs: &Interval) -> Interval {
                (&self).$m(rhs)
            }
        }
        impl $tr<Interval> for &Interval {
            type Output = Interval;
            fn $m(self, rhs: Interval) -> Interval {
                self.$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rat;
    use proptest::prelude::*;

    fn iv(a: (i64, i64), b: (i64, i64)) -> Interval {
        Interval::new(rat(a.0, a.1), rat(b.0, b.1)).unwrap()
    }

    #[test]
    fn rejects_reversed_endpoints() {
        assert!(Interval::new(rat(2, 1), rat(1, 1)).is_err());
    }

    #[test]
    fn basic_ops() {
        let a = iv((1, 1), (2, 1));
        let b = iv((-3, 1), (1, 2));
        assert_eq!(&a + &b, iv((-2, 1), (5, 2)));
        assert_eq!(&a - &b, iv((1, 2), (5, 1)));
        assert_eq!(&a * &b, iv((-6, 1), (1, 1)));
        assert_eq!(b.square(), iv((0, 1), (9, 1)));
        assert_eq!(b.abs(), iv((0, 1), (3, 1)));
        assert_eq!(a.checked_div(&b), Err(Error::DivisionByZero));
        assert_eq!(b.checked_div(&a).unwrap(), iv((-3, 1), (1, 2)));
        assert_eq!(a.scale(&rat(-2, 1)), iv((-4, 1), (-2, 1)));
    }

    #[test]
    fn outward_rounding_keeps_containment() {
        let a = iv((1, 3), (2, 3));
        let r = a.round_outward(3);
        assert_eq!(r, iv((333, 1000), (667, 1000)));
        assert!(a.is_subset_of(&r));
    }

    #[test]
    fn sqrt_of_interval() {
        let a = iv((2, 1), (3, 1));
        let s = a.sqrt(Precision::new(12).unwrap()).unwrap();
        assert!(s.square().lo() <= &rat(2, 1));
        assert!(s.square().hi() >= &rat(3, 1));
        assert!(iv((-1, 1), (1, 1)).sqrt(Precision::default()).is_err());
    }

    #[test]
    fn intersection_and_hull() {
        let a = iv((0, 1), (2, 1));
        let b = iv((1, 1), (3, 1));
        assert_eq!(a.intersect(&b), Some(iv((1, 1), (2, 1))));
        assert_eq!(a.hull(&b), iv((0, 1), (3, 1)));
        assert_eq!(a.intersect(&iv((5, 1), (6, 1))), None);
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-1_000_000i64..1_000_000, 1i64..1_000_000).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn point_interval_ops_contain_exact_result(a in small_rational(), b in small_rational(), op in 0usize..4) {
            let (ia, ib) = (Interval::point(a.clone()), Interval::point(b.clone()));
            let (exact, enclosure) = match op {
                0 => (&a + &b, &ia + &ib),
                1 => (&a - &b, &ia - &ib),
                2 => (&a * &b, &ia * &ib),
                _ => {
                    if b.is_zero() {
                        prop_assert_eq!(ia.checked_div(&ib), Err(Error::DivisionByZero));
                        return Ok(());
                    }
                    (&a / &b, ia.checked_div(&ib).unwrap())
                }
            };
            prop_assert!(enclosure.contains(&exact));
        }

        #[test]
        fn rational_round_trips(a in small_rational(), b in small_rational()) {
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            if !b.is_zero() {
                prop_assert_eq!(&(&a * &b) / &b, a);
            }
        }

        #[test]
        fn wide_ops_enclose_members(
            a in small_rational(), wa in 0i64..1000, b in small_rational(), wb in 0i64..1000,
            ta in 0i64..=10, tb in 0i64..=10,
        ) {
            let ia = Interval::new(a.clone(), &a + rat(wa, 7)).unwrap();
            let ib = Interval::new(b.clone(), &b + rat(wb, 7)).unwrap();
            let xa = &a + rat(wa * ta, 70);
            let xb = &b + rat(wb * tb, 70);
            prop_assert!((&ia + &ib).contains(&(&xa + &xb)));
            prop_assert!((&ia - &ib).contains(&(&xa - &xb)));
            prop_assert!((&ia * &ib).contains(&(&xa * &xb)));
            if let Ok(q) = ia.checked_div(&ib) {
                prop_assert!(q.contains(&(&xa / &xb)));
            }
        }
    }
}
