//! Scan-then-bisect root bracketing on a one-parameter family.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numerics::{rat, Interval, Rational};

pub(crate) const MAX_BISECTIONS: u32 = 400;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Sign {
    Negative,
    Zero,
    Positive,
    /// The defect could not be evaluated or its enclosure straddles zero.
    Unknown,
}

impl Sign {
    pub(crate) fn of(v: &Rational) -> Sign {
        if v.is_zero() {
            Sign::Zero
        } else if v > &Rational::zero() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub(crate) fn of_interval(v: &Interval) -> Sign {
        if v.is_point() {
            Sign::of(v.lo())
        } else if v.certainly_positive() {
            Sign::Positive
        } else if v.certainly_negative() {
            Sign::Negative
        } else {
            Sign::Unknown
        }
    }

    pub(crate) fn of_result(v: Result<Interval>) -> Sign {
        v.map(|v| Sign::of_interval(&v)).unwrap_or(Sign::Unknown)
    }

    fn is_definite(self) -> bool {
        matches!(self, Sign::Negative | Sign::Positive)
    }
}

/// Parameter interval known to contain a sign change, or a single point
/// where the defect vanished exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Bracket {
    pub lo: Rational,
    pub hi: Rational,
}

impl Bracket {
    pub(crate) fn as_interval(&self) -> Interval {
        Interval::new(self.lo.clone(), self.hi.clone()).expect("bracket endpoints are ordered")
    }
}

/// Samples `samples` equally spaced parameters over `[lo, hi]` (endpoints
/// included) and returns the first pair of neighbouring definite samples of
/// opposite sign, skipping samples whose sign is unknown.
fn scan(
    lo: &Rational,
    hi: &Rational,
    samples: usize,
    defect: &mut impl FnMut(&Rational) -> Sign,
) -> Option<(Bracket, Sign)> {
    let steps = (samples.max(2) - 1) as i64;
    let span = hi - lo;
    let mut last: Option<(Rational, Sign)> = None;
    for i in 0..=steps {
        let t = lo + &span * rat(i, steps);
        let s = defect(&t);
        if s == Sign::Zero {
            return Some((Bracket { lo: t.clone(), hi: t }, Sign::Zero));
        }
        if !s.is_definite() {
            continue;
        }
        if let Some((prev_t, prev_s)) = &last {
            if *prev_s != s {
                return Some((Bracket { lo: prev_t.clone(), hi: t }, *prev_s));
            }
        }
        last = Some((t, s));
    }
    None
}

/// Finds a sign change of `defect` on `[lo, hi]` and bisects until `done`
/// accepts the bracket.
pub(crate) fn find_root(
    lo: &Rational,
    hi: &Rational,
    samples: usize,
    mut defect: impl FnMut(&Rational) -> Sign,
    mut done: impl FnMut(&Bracket) -> Result<bool>,
    what: &str,
) -> Result<Bracket> {
    let (mut b, sign_lo) = scan(lo, hi, samples, &mut defect)
        .ok_or_else(|| Error::BracketNotFound(format!("{what}: no sign change on [{lo}, {hi}]")))?;
    if sign_lo == Sign::Zero {
        return Ok(b);
    }
    for _ in 0..MAX_BISECTIONS {
        if done(&b)? {
            return Ok(b);
        }
        let mid = (&b.lo + &b.hi) / rat(2, 1);
        match defect(&mid) {
            Sign::Zero => return Ok(Bracket { lo: mid.clone(), hi: mid }),
            Sign::Unknown => {
                return Err(Error::PrecisionExhausted(format!("{what}: sign of the defect is undecidable at {mid}")))
            }
            s if s == sign_lo => b.lo = mid,
            _ => b.hi = mid,
        }
    }
    Err(Error::PrecisionExhausted(format!("{what}: tolerance not met after {MAX_BISECTIONS} bisections")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cubic(t: &Rational) -> Sign {
        // t³ − 2
        Sign::of(&(t * t * t - rat(2, 1)))
    }

    #[test]
    fn brackets_cube_root_of_two() {
        let tol = rat(1, 1_000_000_000);
        let b = find_root(&rat(0, 1), &rat(2, 1), 64, cubic, |b| Ok(&b.hi - &b.lo <= tol), "cubic").unwrap();
        assert!(&b.hi - &b.lo <= tol);
        assert_eq!(cubic(&b.lo), Sign::Negative);
        assert_eq!(cubic(&b.hi), Sign::Positive);
    }

    #[test]
    fn exact_sample_hit() {
        let b = find_root(&rat(0, 1), &rat(2, 1), 5, |t| Sign::of(&(t - rat(1, 2))), |_| Ok(false), "linear").unwrap();
        assert_eq!(b, Bracket { lo: rat(1, 2), hi: rat(1, 2) });
    }

    #[test]
    fn unknown_samples_are_skipped() {
        let b = find_root(
            &rat(-1, 1),
            &rat(1, 1),
            3,
            |t| if t.is_zero() { Sign::Unknown } else { Sign::of(t) },
            |b| Ok(b.hi == rat(1, 1)),
            "skip",
        )
        .unwrap();
        assert_eq!(b.lo, rat(-1, 1));
    }

    #[test]
    fn no_sign_change() {
        let err = find_root(&rat(0, 1), &rat(1, 1), 16, |_| Sign::Positive, |_| Ok(true), "flat").unwrap_err();
        assert!(matches!(err, Error::BracketNotFound(_)));
    }
}
