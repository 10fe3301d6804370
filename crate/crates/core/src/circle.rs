//! Certified circle measurement by regular polygons.
//!
//! Polygons are described for a circle of unit radius. Perimeters are stored
//! as perimeter/diameter (`n·sin(π/n)` inscribed, `n·tan(π/n)` circumscribed),
//! so both sequences close in on π. Doubling the number of sides uses
//!
//! ```text
//! circumscribed(2n) = 2·insc(n)·circ(n) / (insc(n) + circ(n))    harmonic mean
//! inscribed(2n)     = sqrt(circumscribed(2n) · insc(n))           geometric mean
//! ```
//!
//! Both means are increasing in each argument, so each endpoint of the new
//! interval is computed from the matching endpoints of the old one and then
//! rounded outward.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::numerics::{pow10, rat, rat_sqrt_bounds, Interval, Precision, Rational};

/// Extra decimal digits kept on the endpoint grid beyond the square-root precision.
const GRID_GUARD: u32 = 4;

/// Upper limit on doublings when chasing a target width.
const MAX_DOUBLINGS: u32 = 200;

/// Enclosures for the regular `sides`-gon inscribed in and circumscribed
/// about a unit-radius circle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolygonBounds {
    sides: u64,
    per_inscribed: Interval,
    per_circumscribed: Interval,
    area_inscribed: Interval,
    area_circumscribed: Interval,
}

impl PolygonBounds {
    /// Starting polygons whose trigonometric values are nested square roots:
    /// the triangle, square, pentagon and hexagon.
    pub fn seed(sides: u64, p: Precision) -> Result<Self> {
        let sqrt = |x: Rational| rat_sqrt_bounds(&x, p);
        let b = match sides {
            3 => {
                let root3 = sqrt(rat(3, 1))?;
                let per_inscribed = root3.scale(&rat(3, 2));
                let per_circumscribed = root3.scale(&rat(3, 1));
                let area_inscribed = root3.scale(&rat(3, 4));
                PolygonBounds {
                    sides,
                    area_circumscribed: per_circumscribed.clone(),
                    per_inscribed,
                    per_circumscribed,
                    area_inscribed,
                }
            }
            4 => PolygonBounds {
                sides,
                per_inscribed: sqrt(rat(8, 1))?,
                per_circumscribed: Interval::point(rat(4, 1)),
                area_inscribed: Interval::point(rat(2, 1)),
                area_circumscribed: Interval::point(rat(4, 1)),
            },
            5 => {
                // sin 36° = sqrt(10 − 2√5)/4, tan 36° = sqrt(5 − 2√5)
                let root5 = sqrt(rat(5, 1))?;
                let ten = Interval::point(rat(10, 1));
                let five = Interval::point(rat(5, 1));
                let per_inscribed = (&ten - &root5.scale(&rat(2, 1))).sqrt(p)?.scale(&rat(5, 4));
                let per_circumscribed = (&five - &root5.scale(&rat(2, 1))).sqrt(p)?.scale(&rat(5, 1));
                PolygonBounds::from_perimeters(sides, per_inscribed, per_circumscribed)?
            }
            6 => {
                let root3 = sqrt(rat(3, 1))?;
                let per_circumscribed = root3.scale(&rat(2, 1));
                PolygonBounds {
                    sides,
                    per_inscribed: Interval::point(rat(3, 1)),
                    area_circumscribed: per_circumscribed.clone(),
                    per_circumscribed,
                    area_inscribed: root3.scale(&rat(3, 2)),
                }
            }
            _ => return Err(Error::domain(format!("no closed-form seed polygon with {sides} sides"))),
        };
        Ok(b)
    }

    /// The `sides`-gon reached by doubling a seed; `sides` must be 3, 4, 5 or
    /// 6 times a power of two.
    pub fn regular(sides: u64, p: Precision) -> Result<Self> {
        if sides < 3 {
            return Err(Error::domain(format!("a polygon needs at least 3 sides, got {sides}")));
        }
        let doublings = sides.trailing_zeros();
        let odd = sides >> doublings;
        let (seed, doublings) = match (odd, doublings) {
            (3, 0) => (3, 0),
            (3, k) => (6, k - 1),
            (1, k) => (4, k - 2),
            (5, k) => (5, k),
            _ => {
                return Err(Error::domain(format!(
                    "{sides} sides cannot be reached by doubling a triangle, square or pentagon"
                )))
            }
        };
        let mut b = PolygonBounds::seed(seed, p)?;
        for _ in 0..doublings {
            b = double_polygon(&b, p)?;
        }
        Ok(b)
    }

    fn from_perimeters(sides: u64, per_inscribed: Interval, per_circumscribed: Interval) -> Result<Self> {
        // inscribed area = half perimeter × apothem, apothem = cos(π/n) = insc/circ
        let area_inscribed = Interval::new(
            per_inscribed.lo() * per_inscribed.lo() / per_circumscribed.hi(),
            per_inscribed.hi() * per_inscribed.hi() / per_circumscribed.lo(),
        )?;
        Ok(PolygonBounds {
            sides,
            area_circumscribed: per_circumscribed.clone(),
            per_inscribed,
            per_circumscribed,
            area_inscribed,
        })
    }

    pub fn sides(&self) -> u64 {
        self.sides
    }

    /// Perimeter over diameter of the inscribed polygon.
    pub fn per_inscribed(&self) -> &Interval {
        &self.per_inscribed
    }

    /// Perimeter over diameter of the circumscribed polygon.
    pub fn per_circumscribed(&self) -> &Interval {
        &self.per_circumscribed
    }

    pub fn area_inscribed(&self) -> &Interval {
        &self.area_inscribed
    }

    pub fn area_circumscribed(&self) -> &Interval {
        &self.area_circumscribed
    }

    /// The certified enclosure `[insc.lo, circ.hi]` of π.
    pub fn pi_enclosure(&self) -> Interval {
        Interval::new(self.per_inscribed.lo().clone(), self.per_circumscribed.hi().clone())
            .expect("inscribed perimeter below circumscribed")
    }
}

/// One polygon-doubling step.
///
/// Fails with [`Error::PrecisionExhausted`] when the enclosure of π does not
/// shrink, i.e. rounding noise has caught up with the polygon gap.
pub fn double_polygon(b: &PolygonBounds, p: Precision) -> Result<PolygonBounds> {
    let grid = p.decimal_digits() + GRID_GUARD;
    let harmonic = |x: &Rational, y: &Rational| rat(2, 1) * x * y / (x + y);
    let (insc, circ) = (&b.per_inscribed, &b.per_circumscribed);

    let per_circumscribed =
        Interval::new(harmonic(insc.lo(), circ.lo()), harmonic(insc.hi(), circ.hi()))?.round_outward(grid);
    let lo = rat_sqrt_bounds(&(per_circumscribed.lo() * insc.lo()), p)?;
    let hi = rat_sqrt_bounds(&(per_circumscribed.hi() * insc.hi()), p)?;
    let per_inscribed = Interval::new(lo.lo().clone(), hi.hi().clone())?.round_outward(grid);

    let next = PolygonBounds::from_perimeters(b.sides * 2, per_inscribed, per_circumscribed)?;
    let next = PolygonBounds { area_inscribed: next.area_inscribed.round_outward(grid), ..next };
    if next.pi_enclosure().width() >= b.pi_enclosure().width() {
        return Err(Error::PrecisionExhausted(format!(
            "doubling to {} sides no longer narrows the bounds at {} digits",
            next.sides,
            p.decimal_digits()
        )));
    }
    Ok(next)
}

/// How far [`pi_bounds`] should double.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PiTarget {
    /// Stop at this many sides; must be `6·2^k`.
    Sides(u64),
    /// Stop once `upper − lower` is at most this width.
    Width(Rational),
}

/// Certified rational bounds `lower ≤ π ≤ upper`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiBounds {
    lower: Rational,
    upper: Rational,
    sides: Option<u64>,
    precision: Option<Precision>,
}

impl PiBounds {
    /// Bounds taken on trust from elsewhere; only the ordering is checked.
    pub fn new(lower: Rational, upper: Rational) -> Result<Self> {
        if lower >= upper {
            return Err(Error::domain(format!("lower bound {lower} is not below upper bound {upper}")));
        }
        Ok(PiBounds { lower, upper, sides: None, precision: None })
    }

    /// `3 10/71 < π < 3 1/7`, from the 96-gon.
    pub fn archimedean() -> Self {
        PiBounds { lower: rat(223, 71), upper: rat(22, 7), sides: Some(96), precision: None }
    }

    /// The twenty-decimal enclosure `3.14159265358979323846 < π < …847`.
    pub fn ludolphine() -> Self {
        let scale = pow10(-20);
        let base = BigInt::parse_bytes(b"314159265358979323846", 10).expect("literal");
        let lower = Rational::from_integer(base.clone()) * &scale;
        let upper = Rational::from_integer(base + 1) * &scale;
        PiBounds { lower, upper, sides: None, precision: None }
    }

    pub fn lower(&self) -> &Rational {
        &self.lower
    }

    pub fn upper(&self) -> &Rational {
        &self.upper
    }

    pub fn width(&self) -> Rational {
        &self.upper - &self.lower
    }

    /// Number of polygon sides the bounds came from, if known.
    pub fn sides(&self) -> Option<u64> {
        self.sides
    }

    pub fn precision(&self) -> Option<Precision> {
        self.precision
    }

    pub fn as_interval(&self) -> Interval {
        Interval::new(self.lower.clone(), self.upper.clone()).expect("ordered")
    }
}

pub fn pi_bounds(target: &PiTarget, p: Precision) -> Result<PiBounds> {
    match target {
        PiTarget::Sides(n) => {
            let n = *n;
            if n < 6 || n % 6 != 0 || !(n / 6).is_power_of_two() {
                return Err(Error::domain(format!("side count must be 6·2^k, got {n}")));
            }
            let mut b = PolygonBounds::seed(6, p)?;
            while b.sides < n {
                b = double_polygon(&b, p)?;
            }
            Ok(bounds_from(&b, p))
        }
        PiTarget::Width(w) => {
            if !w.is_positive() {
                return Err(Error::domain(format!("target width must be positive, got {w}")));
            }
            match bounds_to_width(w, p) {
                Err(Error::PrecisionExhausted(_)) => {
                    let retry = Precision::new(p.decimal_digits() * 2)?;
                    bounds_to_width(w, retry)
                }
                other => other,
            }
        }
    }
}

fn bounds_to_width(w: &Rational, p: Precision) -> Result<PiBounds> {
    let mut b = PolygonBounds::seed(6, p)?;
    for _ in 0..MAX_DOUBLINGS {
        if &b.pi_enclosure().width() <= w {
            return Ok(bounds_from(&b, p));
        }
        let next = double_polygon(&b, p)?;
        // The true gap shrinks fourfold per doubling; anything slower than
        // halving means rounding dominates.
        if next.pi_enclosure().width() * rat(2, 1) > b.pi_enclosure().width() {
            return Err(Error::PrecisionExhausted(format!("width {w} unattainable at {} digits", p.decimal_digits())));
        }
        b = next;
    }
    Err(Error::PrecisionExhausted(format!("width {w} not reached in {MAX_DOUBLINGS} doublings")))
}

fn bounds_from(b: &PolygonBounds, p: Precision) -> PiBounds {
    PiBounds {
        lower: b.per_inscribed.lo().clone(),
        upper: b.per_circumscribed.hi().clone(),
        sides: Some(b.sides),
        precision: Some(p),
    }
}

/// Circle area as the right triangle with legs `radius` and circumference:
/// `½ · r · (2r·[lower, upper])`.
pub fn circle_area_bounds(radius: &Rational, pi_b: &PiBounds) -> Result<Interval> {
    if !radius.is_positive() {
        return Err(Error::domain(format!("radius must be positive, got {radius}")));
    }
    let circumference = pi_b.as_interval().scale(&(radius * rat(2, 1)));
    Ok(circumference.scale(&(radius / rat(2, 1))))
}

/// Whether `11/14` (circle to square on the diameter) falls inside `π/4`'s
/// certified interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prop2Verdict {
    pub contained: bool,
    /// `11/14` minus the nearest endpoint of `[lower/4, upper/4]`; zero when
    /// contained.
    pub distance: Rational,
    pub quarter: Interval,
}

pub fn prop2_ratio_check(pi_b: &PiBounds) -> Prop2Verdict {
    let ratio = rat(11, 14);
    let quarter = pi_b.as_interval().scale(&rat(1, 4));
    let distance = if &ratio > quarter.hi() {
        &ratio - quarter.hi()
    } else if &ratio < quarter.lo() {
        &ratio - quarter.lo()
    } else {
        Rational::zero()
    };
    Prop2Verdict { contained: quarter.contains(&ratio), distance, quarter }
}

/// One `n → 2n` step of the halving argument, for a unit-radius circle.
#[derive(Debug, Clone)]
pub struct HalvingStep {
    pub sides: u64,
    /// `A_circle − A_in(2n)`
    pub inner_gap: Interval,
    /// `½(A_circle − A_in(n))`
    pub inner_half: Interval,
    /// `A_circ(2n) − A_circle`
    pub outer_gap: Interval,
    /// `½(A_circ(n) − A_circle)`
    pub outer_half: Interval,
    pub inner_certified: bool,
    pub outer_certified: bool,
}

/// Certifies, for `n = 4, 8, …, 4·2^(max_doublings−1)`, that doubling the
/// sides removes more than half of the area between polygon and circle, from
/// inside and from outside.
pub fn exhaustion_report(max_doublings: u32, p: Precision) -> Result<Vec<HalvingStep>> {
    if max_doublings == 0 {
        return Err(Error::domain("at least one doubling is required"));
    }
    let pi_width = pow10(-((p.decimal_digits() / 2).max(1) as i64));
    let pi = pi_bounds(&PiTarget::Width(pi_width), p)?.as_interval();
    let half = rat(1, 2);

    let mut steps = Vec::with_capacity(max_doublings as usize);
    let mut current = PolygonBounds::seed(4, p)?;
    for _ in 0..max_doublings {
        let next = double_polygon(&current, p)?;
        let inner_gap = &pi - &next.area_inscribed;
        let inner_half = (&pi - &current.area_inscribed).scale(&half);
        let outer_gap = &next.area_circumscribed - &pi;
        let outer_half = (&current.area_circumscribed - &pi).scale(&half);

        let inner_certified = inner_gap.certainly_lt(&inner_half);
        let outer_certified = outer_gap.certainly_lt(&outer_half);
        let undecided = |gap: &Interval, half: &Interval| !gap.certainly_lt(half) && !half.certainly_lt(gap);
        if undecided(&inner_gap, &inner_half) || undecided(&outer_gap, &outer_half) {
            return Err(Error::PrecisionExhausted(format!(
                "cannot decide the halving inequalities at {} sides with {} digits",
                current.sides,
                p.decimal_digits()
            )));
        }
        steps.push(HalvingStep {
            sides: current.sides,
            inner_gap,
            inner_half,
            outer_gap,
            outer_half,
            inner_certified,
            outer_certified,
        });
        current = next;
    }
    Ok(steps)
}

/// `½·r·P_in(n) − A_in(2n)` for the unit circle: half the inscribed
/// `n`-gon's perimeter against the inscribed `2n`-gon's area. Contains zero.
pub fn fibonacci_identity_check(n: u64, p: Precision) -> Result<Interval> {
    let polygon = PolygonBounds::regular(n, p)?;
    let doubled = double_polygon(&polygon, p)?;
    // per_inscribed is perimeter/diameter, i.e. half the unit-radius perimeter
    Ok(&polygon.per_inscribed - &doubled.area_inscribed)
}
