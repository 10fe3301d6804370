//! Nicomedes' problem: a line through a pole whose segment between two given
//! lines has a prescribed length.
//!
//! Lines through the pole are parameterized by `t` with direction
//! `(1 − t², 2t)`, the rational parameterization of the direction angle
//! `2·atan(t)`. The range `[-1, 1]` covers every direction once.

use num_traits::Signed;

use super::bracket::{find_root, Bracket, Sign};
use crate::error::{Error, Result};
use crate::geometry::{IntervalPoint, Point2};
use crate::numerics::{rat, Interval, Precision, Rational};

/// Default number of scan samples over the parameter range.
pub const DEFAULT_SAMPLES: usize = 64;

#[derive(Debug, Clone)]
pub struct NeusisProblem {
    line1: (IntervalPoint, IntervalPoint),
    line2: (IntervalPoint, IntervalPoint),
    pole: IntervalPoint,
    intercept_len: Rational,
    range: (Rational, Rational),
    samples: usize,
    p: Precision,
}

/// Extra grid digits kept on intersection positions beyond the working precision.
const GRID_GUARD: u32 = 4;

/// Direction of the line through the pole for parameter `t`.
pub fn neusis_direction(t: &Rational) -> Point2 {
    Point2::new(rat(1, 1) - t * t, t * rat(2, 1))
}

impl NeusisProblem {
    /// Lines given by two points each; parallel lines are rejected.
    pub fn new(
        line1: (Point2, Point2),
        line2: (Point2, Point2),
        pole: Point2,
        intercept_len: Rational,
    ) -> Result<Self> {
        Self::from_intervals(
            (line1.0.to_interval(), line1.1.to_interval()),
            (line2.0.to_interval(), line2.1.to_interval()),
            pole.to_interval(),
            intercept_len,
            false,
        )
    }

    /// As [`NeusisProblem::new`] but accepting parallel lines.
    pub fn new_parallel(
        line1: (Point2, Point2),
        line2: (Point2, Point2),
        pole: Point2,
        intercept_len: Rational,
    ) -> Result<Self> {
        Self::from_intervals(
            (line1.0.to_interval(), line1.1.to_interval()),
            (line2.0.to_interval(), line2.1.to_interval()),
            pole.to_interval(),
            intercept_len,
            true,
        )
    }

    /// General form for constructions whose points are only known to lie in boxes.
    pub fn from_intervals(
        line1: (IntervalPoint, IntervalPoint),
        line2: (IntervalPoint, IntervalPoint),
        pole: IntervalPoint,
        intercept_len: Rational,
        allow_parallel: bool,
    ) -> Result<Self> {
        if !intercept_len.is_positive() {
            return Err(Error::domain(format!("intercept length must be positive, got {intercept_len}")));
        }
        let u1 = line1.1.sub(&line1.0);
        let u2 = line2.1.sub(&line2.0);
        for (name, u) in [("first", &u1), ("second", &u2)] {
            if u.norm_sq().contains_zero() {
                return Err(Error::domain(format!("{name} line needs two distinct points")));
            }
        }
        if !allow_parallel && u1.cross(&u2).contains_zero() {
            return Err(Error::domain("the two lines are parallel; use the parallel constructor to allow this"));
        }
        for (name, line, u) in [("first", &line1, &u1), ("second", &line2, &u2)] {
            if u.cross(&pole.sub(&line.0)).contains_zero() {
                return Err(Error::domain(format!("the pole lies on the {name} line")));
            }
        }
        Ok(NeusisProblem {
            line1,
            line2,
            pole,
            intercept_len,
            range: (rat(-1, 1), rat(1, 1)),
            samples: DEFAULT_SAMPLES,
            p: Precision::default(),
        })
    }

    /// Restricts the scanned parameter range.
    pub fn with_range(mut self, lo: Rational, hi: Rational) -> Result<Self> {
        if lo >= hi {
            return Err(Error::domain(format!("empty parameter range [{lo}, {hi}]")));
        }
        self.range = (lo, hi);
        Ok(self)
    }

    pub fn with_samples(mut self, samples: usize) -> Result<Self> {
        if samples < 2 {
            return Err(Error::domain("a scan needs at least two samples"));
        }
        self.samples = samples;
        Ok(self)
    }

    /// Working precision; intersection positions are rounded outward to it.
    pub fn with_precision(mut self, p: Precision) -> Self {
        self.p = p;
        self
    }

    pub fn pole(&self) -> &IntervalPoint {
        &self.pole
    }

    pub fn intercept_len(&self) -> &Rational {
        &self.intercept_len
    }

    pub fn range(&self) -> (&Rational, &Rational) {
        (&self.range.0, &self.range.1)
    }

    /// Position along the direction `d` (from the pole) where the line meets
    /// `line`.
    fn meet(&self, line: &(IntervalPoint, IntervalPoint), d: &IntervalPoint) -> Result<Interval> {
        let u = line.1.sub(&line.0);
        let s = u.cross(&line.0.sub(&self.pole)).checked_div(&u.cross(d))?;
        Ok(s.round_outward(self.p.decimal_digits() + GRID_GUARD))
    }

    /// Intersections of the line with parameter `t` with the first and second lines.
    pub fn cut_points(&self, t: &Rational) -> Result<(IntervalPoint, IntervalPoint)> {
        let d = neusis_direction(t).to_interval();
        let s1 = self.meet(&self.line1, &d)?;
        let s2 = self.meet(&self.line2, &d)?;
        Ok((self.pole.add(&d.scale(&s1)), self.pole.add(&d.scale(&s2))))
    }

    /// Intersection with the second line alone.
    pub fn second_cut(&self, t: &Rational) -> Result<IntervalPoint> {
        let d = neusis_direction(t).to_interval();
        let s2 = self.meet(&self.line2, &d)?;
        Ok(self.pole.add(&d.scale(&s2)))
    }

    /// Squared intercept minus squared target length.
    pub fn defect(&self, t: &Rational) -> Result<Interval> {
        let d = neusis_direction(t).to_interval();
        let s1 = self.meet(&self.line1, &d)?;
        let s2 = self.meet(&self.line2, &d)?;
        Ok((&s1 - &s2).square() * d.norm_sq() - Interval::point(&self.intercept_len * &self.intercept_len))
    }

    pub(crate) fn bracket(&self, done: impl FnMut(&Bracket) -> Result<bool>) -> Result<Bracket> {
        find_root(&self.range.0, &self.range.1, self.samples, |t| Sign::of_result(self.defect(t)), done, "neusis")
            .map_err(|e| match e {
                Error::BracketNotFound(msg) => Error::NoSolution(msg),
                other => other,
            })
    }
}

#[derive(Debug, Clone)]
pub struct NeusisSolution {
    /// Bracket on the direction parameter `t`.
    pub parameter: Interval,
    /// Where the line meets the first line.
    pub first: IntervalPoint,
    /// Where the line meets the second line.
    pub second: IntervalPoint,
    /// Enclosure of the intercepted length.
    pub intercept: Interval,
}

impl NeusisSolution {
    pub fn direction(&self) -> Point2 {
        neusis_direction(&self.parameter.midpoint())
    }
}

fn hull_points(a: &IntervalPoint, b: &IntervalPoint) -> IntervalPoint {
    IntervalPoint::new(a.x.hull(&b.x), a.y.hull(&b.y))
}

/// Solves the neusis to relative tolerance `tol` on the squared intercept.
pub fn solve_neusis(npb: &NeusisProblem, tol: &Rational, p: Precision) -> Result<NeusisSolution> {
    if !tol.is_positive() {
        return Err(Error::domain(format!("tolerance must be positive, got {tol}")));
    }
    let npb = &npb.clone().with_precision(p);
    let bound = tol * &npb.intercept_len * &npb.intercept_len;
    let b = npb.bracket(|b| {
        let lo = npb.defect(&b.lo)?;
        let hi = npb.defect(&b.hi)?;
        Ok(lo.hull(&hi).magnitude() <= bound)
    })?;
    let (f1, f2) = npb.cut_points(&b.lo)?;
    let (g1, g2) = npb.cut_points(&b.hi)?;
    let first = hull_points(&f1, &g1);
    let second = hull_points(&f2, &g2);
    let len_sq =
        npb.defect(&b.lo)?.hull(&npb.defect(&b.hi)?) + Interval::point(&npb.intercept_len * &npb.intercept_len);
    let len_sq = Interval::new(std::cmp::max(len_sq.lo().clone(), rat(0, 1)), len_sq.hi().clone())?;
    Ok(NeusisSolution { parameter: b.as_interval(), first, second, intercept: len_sq.sqrt(p)? })
}
