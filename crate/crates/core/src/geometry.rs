//! Plane points with exact or interval coordinates.

use std::fmt;

use crate::numerics::{Interval, Precision, Rational};
use crate::Result;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Point2 {
    pub x: Rational,
    pub y: Rational,
}

impl Point2 {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point2 { x, y }
    }

    pub fn sub(&self, other: &Point2) -> Point2 {
        Point2::new(&self.x - &other.x, &self.y - &other.y)
    }

    pub fn dot(&self, other: &Point2) -> Rational {
        &self.x * &other.x + &self.y * &other.y
    }

    /// z-component of the cross product `self × other`.
    pub fn cross(&self, other: &Point2) -> Rational {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn dist_sq(&self, other: &Point2) -> Rational {
        let d = self.sub(other);
        d.dot(&d)
    }

    pub fn to_interval(&self) -> IntervalPoint {
        IntervalPoint::new(Interval::point(self.x.clone()), Interval::point(self.y.clone()))
    }
}

impl fmt::Debug for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A point known only to lie in a coordinate box.
#[derive(Clone, PartialEq, Eq)]
pub struct IntervalPoint {
    pub x: Interval,
    pub y: Interval,
}

impl IntervalPoint {
    pub fn new(x: Interval, y: Interval) -> Self {
        IntervalPoint { x, y }
    }

    pub fn sub(&self, other: &IntervalPoint) -> IntervalPoint {
        IntervalPoint::new(&self.x - &other.x, &self.y - &other.y)
    }

    pub fn add(&self, other: &IntervalPoint) -> IntervalPoint {
        IntervalPoint::new(&self.x + &other.x, &self.y + &other.y)
    }

    pub fn scale(&self, k: &Interval) -> IntervalPoint {
        IntervalPoint::new(&self.x * k, &self.y * k)
    }

    pub fn dot(&self, other: &IntervalPoint) -> Interval {
        &self.x * &other.x + &self.y * &other.y
    }

    pub fn cross(&self, other: &IntervalPoint) -> Interval {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn norm_sq(&self) -> Interval {
        self.x.square() + self.y.square()
    }

    pub fn dist(&self, other: &IntervalPoint, p: Precision) -> Result<Interval> {
        self.sub(other).norm_sq().sqrt(p)
    }

    pub fn midpoint(&self) -> Point2 {
        Point2::new(self.x.midpoint(), self.y.midpoint())
    }

    pub fn contains(&self, pt: &Point2) -> bool {
        self.x.contains(&pt.x) && self.y.contains(&pt.y)
    }
}

impl fmt::Debug for IntervalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.x, self.y)
    }
}
