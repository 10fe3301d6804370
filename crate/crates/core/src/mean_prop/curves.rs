//! Point samplers for the cissoid of Diocles and the conchoid of Nicomedes.
//!
//! The cissoid lives on a circle of radius `R` centred at the origin, with the
//! cusp `D = (0, −R)`, the opposite end of that diameter `A = (0, R)` and
//! `E = (R, 0)`. For a point `H` on the arc and its mirror `M` across the
//! diameter through `E` (so that arcs `EH` and `EM` are equal), the cissoid
//! point `L` is where line `DM` meets the perpendicular from `H` to `DA`.
//!
//! `H` is parameterized rationally by the half-angle tangent `u` of arc `EH`,
//! so every cissoid point is exact.

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::geometry::{IntervalPoint, Point2};
use crate::numerics::{rat, Interval, Precision, Rational};

/// The circle point at half-angle tangent `u` from `E`.
pub fn circle_point(radius: &Rational, u: &Rational) -> Point2 {
    let one = Rational::one();
    let q = &one + u * u;
    Point2::new(radius * (&one - u * u) / &q, radius * rat(2, 1) * u / &q)
}

/// The cissoid point generated by the arc with half-angle tangent `u`.
///
/// `u = 0` gives `E`, `u = −1` gives the cusp, and the branch runs off to
/// infinity as `u → 1`. Parameters with `|u| > 1` give the mirror-image
/// half: `u` and `1/u` are reflections across the cusp axis.
pub fn cissoid_point(radius: &Rational, u: &Rational) -> Result<Point2> {
    if !radius.is_positive() {
        return Err(Error::domain(format!("radius must be positive, got {radius}")));
    }
    if u == &Rational::one() {
        return Err(Error::domain("arc parameter 1 sends the cissoid point to infinity"));
    }
    let h = circle_point(radius, u);
    let (w, k) = (h.x, h.y);
    let x = w * (radius + &k) / (radius - &k);
    Ok(Point2::new(x, k))
}

/// `samples` cissoid points for parameters evenly spaced over `[-1, 1/2]`,
/// from the cusp out to the point level with `(4/5)R`.
pub fn cissoid_points(radius: &Rational, samples: usize) -> Result<Vec<Point2>> {
    if samples < 2 {
        return Err(Error::domain("a curve needs at least two samples"));
    }
    let (lo, hi) = (rat(-1, 1), rat(1, 2));
    let steps = (samples - 1) as i64;
    (0..=steps).map(|i| cissoid_point(radius, &(&lo + (&hi - &lo) * rat(i, steps)))).collect()
}

/// Re-derivation of a cissoid point from its defining construction.
#[derive(Debug, Clone)]
pub struct CissoidCheck {
    /// `|EH|² − |EM|²` for the reconstructed arc endpoints.
    pub chord_defect: Interval,
    /// Cross product of `M − D` and `L − D`; zero when `D`, `M`, `L` are collinear.
    pub collinearity: Interval,
}

impl CissoidCheck {
    pub fn holds(&self) -> bool {
        self.chord_defect.contains_zero() && self.collinearity.contains_zero()
    }
}

/// Recovers `H` and `M` from the height of `point` and checks the equal-arc
/// construction.
pub fn cissoid_check(radius: &Rational, point: &Point2, p: Precision) -> Result<CissoidCheck> {
    let r = Interval::point(radius.clone());
    let k = Interval::point(point.y.clone());
    let w = (r.square() - k.square()).sqrt(p)?;
    let e = IntervalPoint::new(r.clone(), Interval::point(rat(0, 1)));
    let h = IntervalPoint::new(w.clone(), k.clone());
    let m = IntervalPoint::new(w, -k);
    let d = IntervalPoint::new(Interval::point(rat(0, 1)), -r);
    let l = point.to_interval();
    Ok(CissoidCheck {
        chord_defect: e.sub(&h).norm_sq() - e.sub(&m).norm_sq(),
        collinearity: m.sub(&d).cross(&l.sub(&d)),
    })
}

/// Point of the conchoid with pole `(0, −pole_distance)` and base line the
/// x-axis, reached from the base point `(s, 0)`.
pub fn conchoid_point(
    pole_distance: &Rational,
    offset: &Rational,
    s: &Rational,
    p: Precision,
) -> Result<IntervalPoint> {
    if !pole_distance.is_positive() || !offset.is_positive() {
        return Err(Error::domain("conchoid pole distance and offset must be positive"));
    }
    let rho = Interval::point(s * s + pole_distance * pole_distance).sqrt(p)?;
    let k = Interval::point(offset.clone()).checked_div(&rho)?;
    let x = Interval::point(s.clone()) + k.scale(s);
    let y = k.scale(pole_distance);
    Ok(IntervalPoint::new(x, y))
}

/// Upper-branch conchoid points from `samples` base points evenly spaced over
/// `x_range`.
pub fn conchoid_points(
    pole_distance: &Rational,
    offset: &Rational,
    samples: usize,
    x_range: (&Rational, &Rational),
    p: Precision,
) -> Result<Vec<IntervalPoint>> {
    if samples < 2 {
        return Err(Error::domain("a curve needs at least two samples"));
    }
    let (lo, hi) = x_range;
    if lo >= hi {
        return Err(Error::domain(format!("empty range [{lo}, {hi}]")));
    }
    let steps = (samples - 1) as i64;
    (0..=steps).map(|i| conchoid_point(pole_distance, offset, &(lo + (hi - lo) * rat(i, steps)), p)).collect()
}

/// `(x² + (y + d)²)·y² − o²·(y + d)²`, which vanishes on the conchoid with
/// pole distance `d` and offset `o`.
pub fn conchoid_residual(point: &IntervalPoint, pole_distance: &Rational, offset: &Rational) -> Interval {
    let shifted = &point.y + &Interval::point(pole_distance.clone());
    (point.x.square() + shifted.square()) * point.y.square() - shifted.square().scale(&(offset * offset))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurveKind {
    Cissoid { radius: Rational },
    Conchoid { pole_distance: Rational, offset: Rational, x_range: (Rational, Rational) },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveSampler {
    kind: CurveKind,
    sample_count: usize,
}

impl CurveSampler {
    pub fn new(kind: CurveKind, sample_count: usize) -> Result<Self> {
        if sample_count < 2 {
            return Err(Error::domain("a curve needs at least two samples"));
        }
        match &kind {
            CurveKind::Cissoid { radius } if !radius.is_positive() => {
                return Err(Error::domain("cissoid radius must be positive"))
            }
            CurveKind::Conchoid { pole_distance, offset, x_range } => {
                if !pole_distance.is_positive() || !offset.is_positive() {
                    return Err(Error::domain("conchoid pole distance and offset must be positive"));
                }
                if x_range.0 >= x_range.1 {
                    return Err(Error::domain("conchoid range is empty"));
                }
            }
            _ => {}
        }
        Ok(CurveSampler { kind, sample_count })
    }

    pub fn kind(&self) -> &CurveKind {
        &self.kind
    }

    pub fn sample_count(&self) -> usize {
        self.sample_count
    }

    pub fn sample(&self, p: Precision) -> Result<Vec<IntervalPoint>> {
        match &self.kind {
            CurveKind::Cissoid { radius } => {
                Ok(cissoid_points(radius, self.sample_count)?.iter().map(Point2::to_interval).collect())
            }
            CurveKind::Conchoid { pole_distance, offset, x_range } => {
                conchoid_points(pole_distance, offset, self.sample_count, (&x_range.0, &x_range.1), p)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::to_f64;

    fn p() -> Precision {
        Precision::default()
    }

    #[test]
    fn cissoid_landmarks() {
        let r = rat(3, 1);
        assert_eq!(cissoid_point(&r, &rat(0, 1)).unwrap(), Point2::new(r.clone(), rat(0, 1)));
        assert_eq!(cissoid_point(&r, &rat(-1, 1)).unwrap(), Point2::new(rat(0, 1), -r.clone()));
        assert!(cissoid_point(&r, &rat(1, 1)).is_err());
        assert!(cissoid_point(&rat(0, 1), &rat(0, 1)).is_err());
    }

    #[test]
    fn cissoid_near_quadrant_midpoint() {
        // u ≈ tan(π/8)
        let r = rat(2, 1);
        let l = cissoid_point(&r, &rat(-41, 99)).unwrap();
        let check = cissoid_check(&r, &l, p()).unwrap();
        assert!(check.holds());
        assert!(check.collinearity.width() < rat(1, 1_000_000_000_000));
    }

    #[test]
    fn cissoid_approaches_e() {
        let r = rat(1, 1);
        let mut last = rat(1, 1);
        for k in 1..8 {
            let l = cissoid_point(&r, &rat(1, 10i64.pow(k))).unwrap();
            let d = l.dist_sq(&Point2::new(rat(1, 1), rat(0, 1)));
            assert!(d < last);
            last = d;
        }
        assert!(last < rat(1, 1_000_000_000_000));
    }

    #[test]
    fn mirrored_parameters_mirror_across_the_cusp_axis() {
        let r = rat(5, 2);
        for (n, d) in [(1, 3), (-1, 2), (-2, 7), (3, 5)] {
            let a = cissoid_point(&r, &rat(n, d)).unwrap();
            let b = cissoid_point(&r, &rat(d, n)).unwrap();
            assert_eq!(a.x, -b.x);
            assert_eq!(a.y, b.y);
        }
    }

    #[test]
    fn sampled_cissoid_satisfies_construction() {
        let r = rat(7, 3);
        let pts = cissoid_points(&r, 40).unwrap();
        assert_eq!(pts.len(), 40);
        for l in &pts {
            assert!(cissoid_check(&r, l, p()).unwrap().holds(), "{l:?}");
        }
        assert_eq!(cissoid_points(&r, 2).unwrap().len(), 2);
    }

    #[test]
    fn conchoid_vertical_case() {
        let f = conchoid_point(&rat(2, 1), &rat(3, 1), &rat(0, 1), p()).unwrap();
        assert!(f.contains(&Point2::new(rat(0, 1), rat(3, 1))));
        assert!(f.x.is_point());
    }

    #[test]
    fn normalized_conchoid_quartic_and_asymptote() {
        let one = rat(1, 1);
        let pts = conchoid_points(&one, &one, 200, (&rat(0, 1), &rat(40, 1)), p()).unwrap();
        for f in &pts {
            assert!(conchoid_residual(f, &one, &one).contains_zero());
        }
        for w in pts.windows(2) {
            assert!(w[1].y.certainly_lt(&w[0].y));
        }
        assert!(to_f64(pts.last().unwrap().y.hi()) < 0.05);
    }

    #[test]
    fn general_conchoid_residual() {
        let (d, o) = (rat(3, 2), rat(5, 7));
        for s in [-9, -1, 0, 2, 11] {
            let f = conchoid_point(&d, &o, &rat(s, 1), p()).unwrap();
            assert!(conchoid_residual(&f, &d, &o).contains_zero());
        }
    }

    #[test]
    fn sampler_validation() {
        assert!(CurveSampler::new(CurveKind::Cissoid { radius: rat(1, 1) }, 1).is_err());
        assert!(CurveSampler::new(CurveKind::Cissoid { radius: rat(-1, 1) }, 5).is_err());
        let c = CurveSampler::new(
            CurveKind::Conchoid { pole_distance: rat(1, 1), offset: rat(1, 1), x_range: (rat(-2, 1), rat(2, 1)) },
            9,
        )
        .unwrap();
        assert_eq!(c.sample(p()).unwrap().len(), 9);
    }
}
