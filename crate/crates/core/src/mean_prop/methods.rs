//! The four constructions for two mean proportionals.
//!
//! Each method is a one-parameter family of figures with an exact or
//! interval-valued defect that changes sign at the classical configuration.
//! Problems are normalized so the longer line comes first; write `a` for it
//! and `c` for the shorter one. The answer satisfies `a : x :: x : y :: y : c`.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::bracket::{find_root, Bracket, Sign};
use super::curves::cissoid_point;
use super::neusis::NeusisProblem;
use crate::error::{Error, Result};
use crate::geometry::{IntervalPoint, Point2};
use crate::numerics::{pow10, rat, rat_sqrt_bounds, Interval, Precision, Rational};

/// Scan samples used to locate a sign change before bisecting.
pub const SCAN_SAMPLES: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    HeronApollonius,
    Philo,
    Diocles,
    Nicomedes,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::HeronApollonius, Method::Philo, Method::Diocles, Method::Nicomedes];

    pub fn name(self) -> &'static str {
        match self {
            Method::HeronApollonius => "heron",
            Method::Philo => "philo",
            Method::Diocles => "diocles",
            Method::Nicomedes => "nicomedes",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which condition closes Heron's figure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum HeronVariant {
    /// A ruler turned about `B` until `EF = EG`.
    #[default]
    EqualDistances,
    /// A circle about `E` grown until the chord `FG` passes through `B`.
    ChordThroughB,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeanPropProblem {
    long: Rational,
    short: Rational,
    swapped: bool,
    tol: Rational,
    p: Precision,
}

impl MeanPropProblem {
    /// Default relative tolerance, `10^-12`.
    pub fn default_tol() -> Rational {
        pow10(-12)
    }

    pub fn new(ab: Rational, bc: Rational, tol: Rational, p: Precision) -> Result<Self> {
        if !ab.is_positive() || !bc.is_positive() {
            return Err(Error::domain(format!("both lines must be positive, got {ab} and {bc}")));
        }
        if !tol.is_positive() || tol >= Rational::one() {
            return Err(Error::domain(format!("tolerance must lie in (0, 1), got {tol}")));
        }
        let swapped = ab < bc;
        let (long, short) = if swapped { (bc, ab) } else { (ab, bc) };
        Ok(MeanPropProblem { long, short, swapped, tol, p })
    }

    pub fn with_defaults(ab: Rational, bc: Rational) -> Result<Self> {
        Self::new(ab, bc, Self::default_tol(), Precision::default())
    }

    pub fn ab(&self) -> &Rational {
        if self.swapped {
            &self.short
        } else {
            &self.long
        }
    }

    pub fn bc(&self) -> &Rational {
        if self.swapped {
            &self.long
        } else {
            &self.short
        }
    }

    /// True when the problem was given with `ab < bc`.
    pub fn is_swapped(&self) -> bool {
        self.swapped
    }

    pub fn tol(&self) -> &Rational {
        &self.tol
    }

    pub fn precision(&self) -> Precision {
        self.p
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeanPropResult {
    x: Interval,
    y: Interval,
    method: Method,
    residual1: Interval,
    residual2: Interval,
}

impl MeanPropResult {
    /// The mean next to `ab`.
    pub fn x(&self) -> &Interval {
        &self.x
    }

    /// The mean next to `bc`.
    pub fn y(&self) -> &Interval {
        &self.y
    }

    pub fn method(&self) -> Method {
        self.method
    }

    /// `ab·y − x²`.
    pub fn residual1(&self) -> &Interval {
        &self.residual1
    }

    /// `x·bc − y²`.
    pub fn residual2(&self) -> &Interval {
        &self.residual2
    }
}

/// Means for the normalized problem at one parameter value.
type Means = (Interval, Interval);

fn rel_width_ok(v: &Interval, tol: &Rational) -> bool {
    v.lo().is_positive() && v.width() <= tol * v.lo()
}

fn residuals(a: &Rational, c: &Rational, x: &Interval, y: &Interval) -> (Interval, Interval) {
    (y.scale(a) - x.square(), x.scale(c) - y.square())
}

/// Runs scan-then-bisect over `[lo, hi]` and packages the result.
fn solve_on_parameter(
    prob: &MeanPropProblem,
    method: Method,
    lo: &Rational,
    hi: &Rational,
    defect: impl FnMut(&Rational) -> Sign,
    means: impl Fn(&Rational) -> Result<Means>,
) -> Result<MeanPropResult> {
    let (a, c, tol) = (&prob.long, &prob.short, &prob.tol);
    let bound = tol * a * a;
    // each bisection step moves one endpoint, so the other is usually cached
    let cache: RefCell<HashMap<Rational, Means>> = RefCell::default();
    let at = |t: &Rational| -> Result<Means> {
        if let Some(m) = cache.borrow().get(t) {
            return Ok(m.clone());
        }
        let m = means(t)?;
        cache.borrow_mut().insert(t.clone(), m.clone());
        Ok(m)
    };
    let enclose = |b: &Bracket| -> Result<Means> {
        let (x1, y1) = at(&b.lo)?;
        if b.lo == b.hi {
            return Ok((x1, y1));
        }
        let (x2, y2) = at(&b.hi)?;
        Ok((x1.hull(&x2), y1.hull(&y2)))
    };
    let done = |b: &Bracket| -> Result<bool> {
        let (x, y) = enclose(b)?;
        let (r1, r2) = residuals(a, c, &x, &y);
        Ok(rel_width_ok(&x, tol) && rel_width_ok(&y, tol) && r1.magnitude() <= bound && r2.magnitude() <= bound)
    };
    let b = find_root(lo, hi, SCAN_SAMPLES, defect, done, method.name())?;
    let (x, y) = enclose(&b)?;
    Ok(finish(prob, method, x, y))
}

fn finish(prob: &MeanPropProblem, method: Method, x: Interval, y: Interval) -> MeanPropResult {
    let (x, y) = if prob.swapped { (y, x) } else { (x, y) };
    let (residual1, residual2) = residuals(prob.ab(), prob.bc(), &x, &y);
    MeanPropResult { x, y, method, residual1, residual2 }
}

/// Heron's figure: rectangle `ABCD` with `B` at the origin, `A = (0, a)`,
/// `C = (c, 0)` and centre `E`. A line through `B` with slope `−m` meets `DA`
/// produced at `F` and `DC` produced at `G`, so `AF = a/m` and `CG = m·c`.
/// The slope is scanned over `[1, a/c]`, where the means must lie.
pub fn solve_heron_apollonius(prob: &MeanPropProblem, variant: HeronVariant) -> Result<MeanPropResult> {
    let (a, c) = (prob.long.clone(), prob.short.clone());
    match variant {
        HeronVariant::EqualDistances => {
            let (hx, hy) = (&c / rat(2, 1), &a / rat(2, 1));
            let defect = |m: &Rational| {
                let af = &a / m;
                let cg = m * &c;
                // EF² − EG²
                let ef = (&hx + &af) * (&hx + &af) + &hy * &hy;
                let eg = &hx * &hx + (&hy + &cg) * (&hy + &cg);
                Sign::of(&(ef - eg))
            };
            let means = |m: &Rational| Ok((Interval::point(&a / m), Interval::point(m * &c)));
            solve_on_parameter(prob, Method::HeronApollonius, &Rational::one(), &(&a / &c), defect, means)
        }
        HeronVariant::ChordThroughB => {
            // parameter u = AF; the circle about E through F meets DC produced at G
            let p = prob.p;
            let defect = |u: &Rational| {
                let g = apollonius_cg(&a, &c, u, p);
                Sign::of_result(g.map(|g| g.scale(u) - Interval::point(&a * &c)))
            };
            let means = |u: &Rational| Ok((Interval::point(u.clone()), Interval::point(&a * &c / u)));
            solve_on_parameter(prob, Method::HeronApollonius, &c, &a, defect, means)
        }
    }
}

/// `CG` for the circle about `E` through `F` with `AF = u`.
fn apollonius_cg(a: &Rational, c: &Rational, u: &Rational, p: Precision) -> Result<Interval> {
    let half_c = c / rat(2, 1);
    let half_a = a / rat(2, 1);
    let r_sq = (&half_c + u) * (&half_c + u) + &half_a * &half_a;
    let eg_y = rat_sqrt_bounds(&(r_sq - &half_c * &half_c), p)?;
    Ok(eg_y - Interval::point(half_a))
}

/// Philo's figure: Heron's rectangle with its circumscribed circle. The
/// line through `B` meets the circle again at `O`, and is turned until
/// `BG = OF`.
pub fn solve_philo(prob: &MeanPropProblem) -> Result<MeanPropResult> {
    let (a, c) = (prob.long.clone(), prob.short.clone());
    let defect = |m: &Rational| {
        // positions along w = (−1, m): F at a/m, G at −c, O at 2(E·w)/(w·w)
        let s_f = &a / m;
        let s_o = (m * &a - &c) / (Rational::one() + m * m);
        Sign::of(&(s_f - s_o - &c))
    };
    let means = |m: &Rational| Ok((Interval::point(&a / m), Interval::point(m * &c)));
    solve_on_parameter(prob, Method::Philo, &Rational::one(), &(&a / &c), defect, means)
}

/// Diocles' figure: a circle of radius `a` and the cissoid with cusp at
/// `(0, −a)`. The line from `A = (0, a)` to `(c, 0)` meets the cissoid at `L`;
/// with `K` the foot of `L` on the cusp axis, `AK : KH :: KH : DK :: DK : KL`,
/// and rescaling by `a : AK` gives the means.
pub fn solve_diocles(prob: &MeanPropProblem) -> Result<MeanPropResult> {
    let (a, c) = (prob.long.clone(), prob.short.clone());
    let defect = |u: &Rational| match cissoid_point(&a, u) {
        // L on line AC: x_L·a − c·(a − y_L)
        Ok(l) => Sign::of(&(&l.x * &a - &c * (&a - &l.y))),
        Err(_) => Sign::Unknown,
    };
    // KH/AK = (1 + u)/(1 − u), so x = a(1 + u)/(1 − u) and y = x²/a
    let means = |u: &Rational| {
        let one = Rational::one();
        let x = &a * (&one + u) / (&one - u);
        let y = &x * &x / &a;
        Ok((Interval::point(x), Interval::point(y)))
    };
    solve_on_parameter(prob, Method::Diocles, &rat(-1, 1), &Rational::zero(), defect, means)
}

/// Nicomedes' figure: rectangle `ABCL` with `B` at the origin, `A = (0, a)`,
/// `C = (c, 0)`. `G = (−c, 0)` is where `LD` (with `D` the midpoint of `AB`)
/// meets `CB` produced; `F` lies over the midpoint of `BC` with `CF = a/2`,
/// and `CH` is drawn through `C` parallel to `GF`. The neusis from `F`
/// between `CH` and `BC` produced, with intercept `a/2`, lands at `K`. Then
/// `CK` and `AM`, where `KL` meets `BA` produced at `M`, are the means.
pub fn solve_nicomedes(prob: &MeanPropProblem) -> Result<MeanPropResult> {
    let (a, c, p) = (prob.long.clone(), prob.short.clone(), prob.p);
    if a == c {
        // F falls on BC and the figure collapses; the means are the lines themselves
        let v = Interval::point(a);
        return Ok(finish(prob, Method::Nicomedes, v.clone(), v));
    }
    let pt = |x: Rational, y: Rational| Point2::new(x, y).to_interval();
    let half = rat(1, 2);
    let f = rat_sqrt_bounds(&(&a * &a - &c * &c), p)?.scale(&half);
    let pole = IntervalPoint::new(Interval::point(&c * &half), f.clone());
    let c_pt = pt(c.clone(), Rational::zero());
    let h_dir = IntervalPoint::new(Interval::point(&c * rat(3, 2)), f);
    let line1 = (c_pt.clone(), c_pt.add(&h_dir));
    let line2 = (pt(Rational::zero(), Rational::zero()), c_pt);
    // directions between FC and the horizontal put K beyond C
    let t_c = rat_sqrt_bounds(&((&a - &c) / (&a + &c)), p)?;
    let npb = NeusisProblem::from_intervals(line1, line2, pole, &a * &half, false)?
        .with_range(-t_c.lo().clone(), Rational::zero())?
        .with_precision(p);
    let means = |t: &Rational| -> Result<Means> {
        let k = npb.second_cut(t)?.x;
        let ck = k - Interval::point(c.clone());
        let am = Interval::point(&a * &c).checked_div(&ck)?;
        Ok((ck, am))
    };
    solve_on_parameter(
        prob,
        Method::Nicomedes,
        &-t_c.lo().clone(),
        &Rational::zero(),
        |t| Sign::of_result(npb.defect(t)),
        means,
    )
}

pub fn solve(prob: &MeanPropProblem, method: Method) -> Result<MeanPropResult> {
    match method {
        Method::HeronApollonius => solve_heron_apollonius(prob, HeronVariant::default()),
        Method::Philo => solve_philo(prob),
        Method::Diocles => solve_diocles(prob),
        Method::Nicomedes => solve_nicomedes(prob),
    }
}

/// Edge of the cube whose volume is `ratio` times that of the cube on `edge`.
pub fn scale_solid_ratio(
    edge: &Rational,
    ratio: &Rational,
    method: Method,
    tol: &Rational,
    p: Precision,
) -> Result<Interval> {
    if !edge.is_positive() || !ratio.is_positive() {
        return Err(Error::domain("edge and ratio must be positive"));
    }
    let prob = MeanPropProblem::new(ratio * edge, edge.clone(), tol.clone(), p)?;
    Ok(solve(&prob, method)?.y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::to_f64;

    fn problem(ab: i64, bc: i64) -> MeanPropProblem {
        MeanPropProblem::with_defaults(rat(ab, 1), rat(bc, 1)).unwrap()
    }

    type Solver = fn(&MeanPropProblem) -> Result<MeanPropResult>;

    fn all_solvers() -> Vec<(&'static str, Solver)> {
        vec![
            ("heron", |p| solve_heron_apollonius(p, HeronVariant::EqualDistances)),
            ("apollonius", |p| solve_heron_apollonius(p, HeronVariant::ChordThroughB)),
            ("philo", solve_philo),
            ("diocles", solve_diocles),
            ("nicomedes", solve_nicomedes),
        ]
    }

    fn assert_contract(prob: &MeanPropProblem, r: &MeanPropResult) {
        let bound = prob.tol() * prob.ab().max(prob.bc()) * prob.ab().max(prob.bc());
        assert!(r.residual1().magnitude() <= bound, "{:?}", r.residual1());
        assert!(r.residual2().magnitude() <= bound, "{:?}", r.residual2());
        let (x, y) = (r.x().midpoint(), r.y().midpoint());
        if prob.ab() >= prob.bc() {
            assert!(prob.ab() >= &x && x >= y && &y >= prob.bc());
        } else {
            assert!(prob.ab() <= &x && x <= y && &y <= prob.bc());
        }
    }

    #[test]
    fn doubling_ratio() {
        let prob = problem(2, 1);
        for (name, solve) in all_solvers() {
            let r = solve(&prob).unwrap();
            assert_contract(&prob, &r);
            assert!((to_f64(&r.x().midpoint()) - 2f64.powf(2.0 / 3.0)).abs() < 1e-11, "{name}");
            assert!((to_f64(&r.y().midpoint()) - 2f64.cbrt()).abs() < 1e-11, "{name}");
        }
    }

    #[test]
    fn equal_lines() {
        let prob = problem(5, 5);
        for (name, solve) in all_solvers() {
            let r = solve(&prob).unwrap();
            assert_contract(&prob, &r);
            assert!((r.x().midpoint() - rat(5, 1)).abs() < rat(1, 100_000_000_000), "{name}");
            assert!((r.y().midpoint() - rat(5, 1)).abs() < rat(1, 100_000_000_000), "{name}");
        }
    }

    #[test]
    fn perfect_cubes() {
        for (ab, root) in [(8, 2), (27, 3), (1000, 10)] {
            let prob = problem(ab, 1);
            for (name, solve) in all_solvers() {
                let r = solve(&prob).unwrap();
                assert_contract(&prob, &r);
                let err = (r.y().midpoint() - rat(root, 1)).abs();
                assert!(err <= prob.tol() * rat(root, 1), "{name} {ab}: {}", r.y());
            }
        }
    }

    #[test]
    fn orientation_is_restored() {
        let prob = problem(1, 2);
        assert!(prob.is_swapped());
        let r = solve_philo(&prob).unwrap();
        assert_contract(&prob, &r);
        assert!((to_f64(&r.x().midpoint()) - 2f64.cbrt()).abs() < 1e-11);
    }

    #[test]
    fn rational_scales() {
        let prob = MeanPropProblem::with_defaults(rat(16, 3), rat(2, 7)).unwrap();
        let ratio = (16.0 / 3.0) / (2.0 / 7.0);
        for (name, solve) in all_solvers() {
            let r = solve(&prob).unwrap();
            assert_contract(&prob, &r);
            let y = to_f64(&r.y().midpoint()) / (2.0 / 7.0);
            assert!((y / f64::cbrt(ratio) - 1.0).abs() < 1e-10, "{name}");
        }
    }

    #[test]
    fn cube_scaling() {
        let p = Precision::default();
        let tol = MeanPropProblem::default_tol();
        for m in Method::ALL {
            let e = scale_solid_ratio(&rat(1, 1), &rat(2, 1), m, &tol, p).unwrap();
            assert!((to_f64(&e.midpoint()) - 1.259_921_049_894_873_2).abs() < 1e-11);
            let same = scale_solid_ratio(&rat(3, 2), &rat(1, 1), m, &tol, p).unwrap();
            assert!((same.midpoint() - rat(3, 2)).abs() < rat(1, 100_000_000_000));
            let triple = scale_solid_ratio(&rat(2, 1), &rat(27, 1), m, &tol, p).unwrap();
            assert!((triple.midpoint() - rat(6, 1)).abs() < rat(1, 10_000_000_000));
            let half = scale_solid_ratio(&rat(1, 1), &rat(1, 8), m, &tol, p).unwrap();
            assert!((half.midpoint() - rat(1, 2)).abs() < rat(1, 100_000_000_000));
        }
    }

    #[test]
    fn methods_agree_on_random_problems() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..6 {
            let bc = rat(rng.gen_range(1..1000), rng.gen_range(1..100));
            let ab = &bc * rat(rng.gen_range(1000..10_000_000), 1000);
            let prob = MeanPropProblem::with_defaults(ab.clone(), bc).unwrap();
            let results: Vec<_> = all_solvers().iter().map(|(_, f)| f(&prob).unwrap()).collect();
            let bound = prob.tol() * &ab * rat(2, 1);
            for r in &results {
                assert_contract(&prob, r);
                for q in &results {
                    assert!((r.x().midpoint() - q.x().midpoint()).abs() <= bound);
                    assert!((r.y().midpoint() - q.y().midpoint()).abs() <= bound);
                }
            }
        }
    }

    #[test]
    fn invalid_problems() {
        let p = Precision::default();
        assert!(MeanPropProblem::new(rat(0, 1), rat(1, 1), rat(1, 10), p).is_err());
        assert!(MeanPropProblem::new(rat(1, 1), rat(1, 1), rat(0, 1), p).is_err());
        assert!(scale_solid_ratio(&rat(1, 1), &rat(-2, 1), Method::Philo, &rat(1, 10), p).is_err());
    }
}
