//! Triangle area by the semiperimeter rule.
//!
//! Three routes to the same number are provided so they can check each other:
//!
//! * [`heron_product`] runs the rule procedurally (sum the sides, halve,
//!   subtract each side, multiply the four numbers) and returns the product
//!   whose square root is the area.
//! * [`heron_area_sq_from_vertices`] evaluates the symmetric squared-sides form
//!   `16A² = 2a²b² + 2b²c² + 2c²a² − a⁴ − b⁴ − c⁴`, which stays exact for
//!   triangles with irrational sides but rational vertices.
//! * [`verify_heron_identity`] rebuilds the incircle configuration (bisector
//!   intersection, perpendicular feet, tangent segments, the side extended by
//!   the third tangent length) and checks that the squared perpendicular times
//!   the squared semiperimeter equals the semiperimeter times the three
//!   tangent lengths.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::geometry::{IntervalPoint, Point2};
use crate::numerics::{floor_sqrt, rat_sqrt_bounds, Interval, Precision, Rational};

/// Side lengths of a genuine (non-degenerate) triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleSides {
    a: Rational,
    b: Rational,
    c: Rational,
}

impl TriangleSides {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        if !(a.is_positive() && b.is_positive() && c.is_positive()) {
            return Err(Error::DegenerateTriangle(format!("side lengths must be positive: {a}, {b}, {c}")));
        }
        if &a + &b <= c || &b + &c <= a || &a + &c <= b {
            return Err(Error::DegenerateTriangle(format!(
                "sides {a}, {b}, {c} violate the strict triangle inequality"
            )));
        }
        Ok(TriangleSides { a, b, c })
    }

    pub fn sides(&self) -> [&Rational; 3] {
        [&self.a, &self.b, &self.c]
    }

    pub fn semiperimeter(&self) -> Rational {
        (&self.a + &self.b + &self.c) / Rational::from_integer(BigInt::from(2))
    }

    /// Every side multiplied by `k > 0`.
    pub fn scaled(&self, k: &Rational) -> Result<Self> {
        TriangleSides::new(&self.a * k, &self.b * k, &self.c * k)
    }
}

/// `s(s − a)(s − b)(s − c)`, the number whose square root is the area.
pub fn heron_product(t: &TriangleSides) -> Rational {
    let s = t.semiperimeter();
    let [a, b, c] = t.sides();
    &s * (&s - a) * (&s - b) * (&s - c)
}

pub fn heron_area_bounds(t: &TriangleSides, p: Precision) -> Result<Interval> {
    rat_sqrt_bounds(&heron_product(t), p)
}

/// Three non-collinear points with rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleVertices {
    p1: Point2,
    p2: Point2,
    p3: Point2,
}

impl TriangleVertices {
    pub fn new(p1: Point2, p2: Point2, p3: Point2) -> Result<Self> {
        let t = TriangleVertices { p1, p2, p3 };
        if t.twice_signed_area().is_zero() {
            return Err(Error::DegenerateTriangle("vertices are collinear".into()));
        }
        Ok(t)
    }

    pub fn vertices(&self) -> [&Point2; 3] {
        [&self.p1, &self.p2, &self.p3]
    }

    /// Shoelace sum; positive for counter-clockwise vertex order.
    pub fn twice_signed_area(&self) -> Rational {
        self.p2.sub(&self.p1).cross(&self.p3.sub(&self.p1))
    }

    /// Squared lengths of the sides opposite `p1`, `p2`, `p3`.
    pub fn squared_sides(&self) -> [Rational; 3] {
        [self.p2.dist_sq(&self.p3), self.p3.dist_sq(&self.p1), self.p1.dist_sq(&self.p2)]
    }

    /// Side lengths when all three are rational.
    pub fn rational_sides(&self) -> Option<TriangleSides> {
        let [a2, b2, c2] = self.squared_sides();
        let (a, b, c) = (exact_sqrt(&a2)?, exact_sqrt(&b2)?, exact_sqrt(&c2)?);
        TriangleSides::new(a, b, c).ok()
    }
}

/// `A²` from the squared side lengths, exactly.
pub fn heron_area_sq_from_vertices(t: &TriangleVertices) -> Rational {
    let [a2, b2, c2] = t.squared_sides();
    let two = Rational::from_integer(BigInt::from(2));
    let sixteen_area_sq = &two * &a2 * &b2 + &two * &b2 * &c2 + &two * &c2 * &a2 - &a2 * &a2 - &b2 * &b2 - &c2 * &c2;
    sixteen_area_sq / Rational::from_integer(BigInt::from(16))
}

fn exact_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().magnitude();
    let d = x.denom().magnitude();
    let (rn, rd) = (floor_sqrt(n), floor_sqrt(d));
    (&rn * &rn == *n && &rd * &rd == *d).then(|| Rational::new(rn.into(), rd.into()))
}

/// Residuals of the incircle configuration for triangle `ABC` with
/// `A = p1`, `B = p2`, `C = p3`.
///
/// `D` is the intersection of the angle bisectors, `E`, `F`, `G` the feet of
/// the perpendiculars from `D` on `AB`, `CA`, `BC`, and `H` the point on `AB`
/// produced past `B` with `BH = CG`, so that `AH` is the semiperimeter.
#[derive(Debug, Clone)]
pub struct HeronIdentityReport {
    /// True when all side lengths were rational and the construction ran exactly.
    pub exact: bool,
    pub incenter: IntervalPoint,
    /// Distances from `D` to `AB`, `BC`, `CA`.
    pub perpendiculars: [Interval; 3],
    /// Pairwise differences of the perpendiculars: `AB−BC`, `BC−CA`, `CA−AB`.
    pub perpendicular_residuals: [Interval; 3],
    pub de: Interval,
    pub ae: Interval,
    pub eb: Interval,
    pub bh: Interval,
    pub ah: Interval,
    /// `AH − (a + b + c)/2`.
    pub semiperimeter_residual: Interval,
    /// `DE²·AH² − AH·EB·BH·AE`.
    pub identity_residual: Interval,
    /// `DE²·AH² − A²` with `A²` from [`heron_area_sq_from_vertices`].
    pub area_residual: Interval,
}

impl HeronIdentityReport {
    /// Every residual interval contains zero and the three perpendiculars
    /// have a common point.
    pub fn holds(&self) -> bool {
        let [r0, r1, r2] = &self.perpendiculars;
        self.identity_residual.contains_zero()
            && self.area_residual.contains_zero()
            && self.semiperimeter_residual.contains_zero()
            && self.perpendicular_residuals.iter().all(Interval::contains_zero)
            && r0.intersect(r1).and_then(|i| i.intersect(r2)).is_some()
    }
}

pub fn verify_heron_identity(t: &TriangleVertices, p: Precision) -> Result<HeronIdentityReport> {
    let [a_pt, b_pt, c_pt] = t.vertices().map(Point2::to_interval);
    let [a2, b2, c2] = t.squared_sides();

    let (exact, lengths) = match t.rational_sides() {
        Some(sides) => (true, sides.sides().map(|s| Interval::point(s.clone()))),
        None => (false, [rat_sqrt_bounds(&a2, p)?, rat_sqrt_bounds(&b2, p)?, rat_sqrt_bounds(&c2, p)?]),
    };
    let [a, b, c] = &lengths;
    let perimeter = a + b + c;

    // Bisector intersection as the side-weighted mean of the vertices.
    let weighted = a_pt.scale(a).add(&b_pt.scale(b)).add(&c_pt.scale(c));
    let inv_perimeter = perimeter.recip()?;
    let d = weighted.scale(&inv_perimeter);

    let dist_to_line = |from: &IntervalPoint, to: &IntervalPoint, len: &Interval| -> Result<Interval> {
        let dir = to.sub(from);
        dir.cross(&d.sub(from)).abs().checked_div(len)
    };
    let perpendiculars =
        [dist_to_line(&a_pt, &b_pt, c)?, dist_to_line(&b_pt, &c_pt, a)?, dist_to_line(&c_pt, &a_pt, b)?];
    let perpendicular_residuals = [
        &perpendiculars[0] - &perpendiculars[1],
        &perpendiculars[1] - &perpendiculars[2],
        &perpendiculars[2] - &perpendiculars[0],
    ];

    let foot = |from: &IntervalPoint, to: &IntervalPoint, len_sq: &Rational| -> IntervalPoint {
        let dir = to.sub(from);
        let along = dir.dot(&d.sub(from)).scale(&len_sq.recip());
        from.add(&dir.scale(&along))
    };
    let e = foot(&a_pt, &b_pt, &c2);
    let g = foot(&b_pt, &c_pt, &a2);

    let de = d.dist(&e, p)?;
    let ae = a_pt.dist(&e, p)?;
    let eb = e.dist(&b_pt, p)?;
    let bh = c_pt.dist(&g, p)?;
    let ah = &(&ae + &eb) + &bh;

    let half = Rational::new(BigInt::from(1), BigInt::from(2));
    let semiperimeter_residual = &ah - &perimeter.scale(&half);
    let lhs = &de.square() * &ah.square();
    let identity_residual = &lhs - &(&(&ah * &eb) * &(&bh * &ae));
    let area_residual = &lhs - &Interval::point(heron_area_sq_from_vertices(t));

    Ok(HeronIdentityReport {
        exact,
        incenter: d,
        perpendiculars,
        perpendicular_residuals,
        de,
        ae,
        eb,
        bh,
        ah,
        semiperimeter_residual,
        identity_residual,
        area_residual,
    })
}
