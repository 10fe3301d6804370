use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Pow, Signed, Zero};

use super::{Interval, Precision, Rational};
use crate::error::{Error, Result};

/// `r` with `r^n <= value < (r+1)^n`.
///
/// Newton iteration on integers, started above the root so the iterates
/// decrease monotonically to the floor.
pub fn int_nth_root_floor(value: &BigUint, n: u32) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::domain(format!("root degree must be at least 2, got {n}")));
    }
    if value.is_zero() {
        return Ok(BigUint::zero());
    }
    let n_big = BigUint::from(n);
    let bits = value.bits();
    let mut x = BigUint::one() << bits.div_ceil(n as u64);
    loop {
        let x_pow = Pow::pow(&x, n - 1);
        let next = ((&n_big - 1u32) * &x + value / &x_pow) / &n_big;
        if next >= x {
            break;
        }
        x = next;
    }
    debug_assert!(Pow::pow(&x, n) <= *value && Pow::pow(&(&x + 1u32), n) > *value);
    Ok(x)
}

pub fn floor_sqrt(value: &BigUint) -> BigUint {
    int_nth_root_floor(value, 2).expect("degree 2 is valid")
}

pub fn ceil_sqrt(value: &BigUint) -> BigUint {
    let r = floor_sqrt(value);
    if &r * &r == *value {
        r
    } else {
        r + 1u32
    }
}

/// Directed-rounding enclosure of `sqrt(x)`.
///
/// Numerator and denominator are scaled by `10^(2q)` (one guard digit past the
/// requested precision) and square-rooted as integers: the lower endpoint takes
/// the numerator root rounded down over the denominator root rounded up, the
/// upper endpoint the opposite. The result satisfies `lo^2 <= x <= hi^2` and
/// `hi - lo <= 10^-p * max(1, hi)`.
pub fn rat_sqrt_bounds(x: &Rational, p: Precision) -> Result<Interval> {
    if x.is_negative() {
        return Err(Error::domain(format!("square root of negative value {x}")));
    }
    if x.is_zero() {
        return Ok(Interval::point(Rational::zero()));
    }
    let q = p.decimal_digits() as usize + 1;
    let scale = num_traits::pow(BigUint::from(10u32), 2 * q);
    let num = x.numer().magnitude() * &scale;
    let den = x.denom().magnitude() * &scale;

    let num_lo = floor_sqrt(&num);
    let num_hi = if &num_lo * &num_lo == num { num_lo.clone() } else { &num_lo + 1u32 };
    let den_lo = floor_sqrt(&den);
    let den_hi = if &den_lo * &den_lo == den { den_lo.clone() } else { &den_lo + 1u32 };

    let lo = Rational::new(to_int(num_lo), to_int(den_hi));
    let hi = Rational::new(to_int(num_hi), to_int(den_lo));
    Ok(Interval::new(lo, hi).expect("directed roots are ordered"))
}

fn to_int(n: BigUint) -> BigInt {
    BigInt::from_biguint(Sign::Plus, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{pow10, rat};
    use proptest::prelude::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn worked_cube_roots() {
        // 621^3 = 239483061, so the radicand is 129 past a perfect cube.
        assert_eq!(int_nth_root_floor(&big(239_483_190), 3).unwrap(), big(621));
        assert_eq!(int_nth_root_floor(&big(80_621_568_000), 3).unwrap(), big(4320));
    }

    #[test]
    fn trivial_roots() {
        assert_eq!(int_nth_root_floor(&big(1), 17).unwrap(), big(1));
        assert_eq!(int_nth_root_floor(&big(0), 5).unwrap(), big(0));
        assert_eq!(int_nth_root_floor(&big(15), 2).unwrap(), big(3));
        assert_eq!(int_nth_root_floor(&big(16), 2).unwrap(), big(4));
        assert!(int_nth_root_floor(&big(16), 1).is_err());
        assert!(int_nth_root_floor(&big(16), 0).is_err());
    }

    #[test]
    fn agrees_with_num_bigint() {
        let n = BigUint::parse_bytes(b"98765432109876543210987654321098765432109876543210", 10).unwrap();
        for degree in 2..=17 {
            assert_eq!(int_nth_root_floor(&n, degree).unwrap(), n.nth_root(degree));
        }
    }

    #[test]
    fn sqrt_of_perfect_square_is_exact() {
        let iv = rat_sqrt_bounds(&rat(4, 1), Precision::new(10).unwrap()).unwrap();
        assert_eq!(iv.lo(), &rat(2, 1));
        assert_eq!(iv.hi(), &rat(2, 1));
        let iv = rat_sqrt_bounds(&rat(9, 16), Precision::new(3).unwrap()).unwrap();
        assert!(iv.is_point());
        assert_eq!(iv.lo(), &rat(3, 4));
    }

    #[test]
    fn sqrt_of_zero() {
        let iv = rat_sqrt_bounds(&rat(0, 1), Precision::new(1).unwrap()).unwrap();
        assert!(iv.is_point());
        assert_eq!(iv.lo(), &rat(0, 1));
    }

    #[test]
    fn sqrt_two_to_twenty_digits() {
        // floor(sqrt(2 * 10^40)) = 141421356237309504880
        let p = Precision::new(20).unwrap();
        let iv = rat_sqrt_bounds(&rat(2, 1), p).unwrap();
        let reference =
            Rational::new(BigInt::parse_bytes(b"141421356237309504880", 10).unwrap(), BigInt::from(10u32).pow(20u32));
        assert!(iv.lo() <= &(reference.clone() + pow10(-20)));
        assert!(iv.hi() >= &reference);
        assert!(iv.width() <= pow10(-20));
        assert!(iv.lo() * iv.lo() <= rat(2, 1));
        assert!(iv.hi() * iv.hi() >= rat(2, 1));
    }

    #[test]
    fn negative_sqrt_is_a_domain_error() {
        assert!(matches!(rat_sqrt_bounds(&rat(-1, 4), Precision::default()), Err(Error::Domain(_))));
    }

    fn rational_strategy() -> impl Strategy<Value = Rational> {
        (0u64..u64::MAX, 1u64..u64::MAX).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
    }

    proptest! {
        #[test]
        fn sqrt_bounds_enclose_and_meet_width(x in rational_strategy(), digits in 1u32..40) {
            let p = Precision::new(digits).unwrap();
            let iv = rat_sqrt_bounds(&x, p).unwrap();
            prop_assert!(iv.lo() * iv.lo() <= x);
            prop_assert!(iv.hi() * iv.hi() >= x);
            let scale = std::cmp::max(rat(1, 1), iv.hi().clone());
            prop_assert!(iv.width() <= p.epsilon() * scale);
        }

        #[test]
        fn nth_root_brackets(digits in proptest::collection::vec(0u8..10, 1..80), n in 2u32..=17) {
            let text: String = digits.iter().map(|d| char::from(b'0' + d)).collect();
            let value = BigUint::parse_bytes(text.as_bytes(), 10).unwrap();
            let r = int_nth_root_floor(&value, n).unwrap();
            prop_assert!(Pow::pow(&r, n) <= value);
            prop_assert!(Pow::pow(&(&r + 1u32), n) > value);
        }
    }
}
