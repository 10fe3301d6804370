//! Digit-by-digit extraction of integer nth roots.
//!
//! The radicand is split into "points" of `n` digits from the right. Each
//! point yields one digit of the root. With `r` the root found so far and
//! `d` the next digit, the amount removed from the running remainder is
//!
//! ```text
//! (10r + d)^n − (10r)^n = Σ_{k=1}^{n} C(n,k)·10^(n−k)·r^(n−k)·d^k
//! ```
//!
//! whose coefficients `C(n,k)·10^(n−k)` are the special numbers (300 and 30
//! for cube roots). The trial digit comes from dividing the point by a
//! divisor built from those numbers, and is lowered until the subtraction fits.

use std::fmt::Write as _;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numerics::binomial_table;

fn check_degree(n: u32) -> Result<()> {
    if n < 2 {
        return Err(Error::domain(format!("root degree must be at least 2, got {n}")));
    }
    Ok(())
}

fn pow(base: &BigUint, exp: u32) -> BigUint {
    num_traits::pow(base.clone(), exp as usize)
}

fn ten_pow(exp: u32) -> BigUint {
    pow(&BigUint::from(10u32), exp)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialNumbers {
    degree: u32,
    values: Vec<BigUint>,
}

impl SpecialNumbers {
    /// `C(n,k)·10^(n−k)` for `k = 1 … n−1`.
    pub fn new(degree: u32) -> Result<Self> {
        check_degree(degree)?;
        let row = binomial_table(degree as usize).pop().expect("table has a last row");
        Ok(Self::from_row(degree, &row))
    }

    fn from_row(degree: u32, row: &[BigUint]) -> Self {
        let values = (1..degree).map(|k| &row[k as usize] * ten_pow(degree - k)).collect();
        SpecialNumbers { degree, values }
    }

    /// Special numbers for every degree `2 … max_degree` from one binomial table.
    pub fn table(max_degree: u32) -> Result<Vec<SpecialNumbers>> {
        check_degree(max_degree)?;
        let rows = binomial_table(max_degree as usize);
        Ok((2..=max_degree).map(|n| Self::from_row(n, &rows[n as usize])).collect())
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DivisorMode {
    /// Every special-number term.
    #[default]
    Full,
    /// Only the leading term `n·10^(n−1)·r^(n−1)`.
    Simplified,
}

/// Divisor for the next digit after the root so far `r ≥ 1`.
pub fn form_divisor(root_so_far: &BigUint, sp: &SpecialNumbers, mode: DivisorMode) -> Result<BigUint> {
    if root_so_far.is_zero() {
        return Err(Error::domain("the divisor is formed only after the first digit"));
    }
    let n = sp.degree;
    let terms = match mode {
        DivisorMode::Full => n - 1,
        DivisorMode::Simplified => 1,
    };
    Ok((1..=terms).map(|k| &sp.values[(k - 1) as usize] * pow(root_so_far, n - k)).sum())
}

/// `d^n` for `d = 1 … 9`.
pub fn digit_power_table(n: u32) -> Result<Vec<BigUint>> {
    check_degree(n)?;
    Ok((1..=9u32).map(|d| pow(&BigUint::from(d), n)).collect())
}

/// Digit groups of `n` digits from the right; the leftmost may be shorter.
pub fn group_points(value: &BigUint, n: u32) -> Result<Vec<BigUint>> {
    check_degree(n)?;
    let base = ten_pow(n);
    let mut groups = Vec::new();
    let mut rest = value.clone();
    loop {
        let (q, r) = rest.div_rem(&base);
        groups.push(r);
        if q.is_zero() {
            break;
        }
        rest = q;
    }
    groups.reverse();
    Ok(groups)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    /// Root found before this step.
    pub root_before: BigUint,
    /// Previous remainder followed by this point's digits.
    pub point_value: BigUint,
    /// Zero on steps taken from the digit-power table.
    pub divisor: BigUint,
    pub trial_digit: u8,
    pub corrected_digit: u8,
    /// `(10r + d)^n − (10r)^n`.
    pub subtrahend: BigUint,
    pub remainder_after: BigUint,
}

impl TraceStep {
    /// The terms `C(n,k)·10^(n−k)·r^(n−k)·d^k` for `k = 1 … n−1`, followed by `d^n`.
    pub fn partial_products(&self, sp: &SpecialNumbers) -> Vec<BigUint> {
        let n = sp.degree;
        let d = BigUint::from(self.corrected_digit);
        let mut terms: Vec<BigUint> =
            (1..n).map(|k| &sp.values[(k - 1) as usize] * pow(&self.root_before, n - k) * pow(&d, k)).collect();
        terms.push(pow(&d, n));
        terms
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootExtraction {
    radicand: BigUint,
    degree: u32,
    frac_digits: u32,
    mode: DivisorMode,
    digits: Vec<u8>,
    remainder: BigUint,
    steps: Vec<TraceStep>,
}

impl RootExtraction {
    pub fn radicand(&self) -> &BigUint {
        &self.radicand
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn frac_digits(&self) -> u32 {
        self.frac_digits
    }

    pub fn mode(&self) -> DivisorMode {
        self.mode
    }

    /// Integer-part digits followed by `frac_digits` fractional digits.
    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    /// `radicand·10^(n·frac_digits) − root^n`.
    pub fn remainder(&self) -> &BigUint {
        &self.remainder
    }

    pub fn steps(&self) -> &[TraceStep] {
        &self.steps
    }

    /// The digits read as one integer, i.e. the root times `10^frac_digits`.
    pub fn root_scaled(&self) -> BigUint {
        self.digits.iter().fold(BigUint::zero(), |acc, &d| acc * 10u32 + d)
    }

    pub fn integer_digit_count(&self) -> usize {
        self.digits.len() - self.frac_digits as usize
    }

    /// Decimal form such as `1.41421`.
    pub fn root_string(&self) -> String {
        let mut s: String = self.digits.iter().map(|d| char::from(b'0' + d)).collect();
        if self.frac_digits > 0 {
            s.insert(self.integer_digit_count(), '.');
        }
        s
    }
}

fn subtrahend(r: &BigUint, d: u8, n: u32) -> BigUint {
    let base = r * 10u32;
    pow(&(&base + d), n) - pow(&base, n)
}

/// Extracts the `n`th root of `radicand` to `frac_digits` decimal places,
/// recording each step.
pub fn extract_root(radicand: &BigUint, n: u32, frac_digits: u32, mode: DivisorMode) -> Result<RootExtraction> {
    let sp = SpecialNumbers::new(n)?;
    let powers = digit_power_table(n)?;
    let mut groups = group_points(radicand, n)?;
    groups.extend((0..frac_digits).map(|_| BigUint::zero()));

    let shift = ten_pow(n);
    let mut root = BigUint::zero();
    let mut rem = BigUint::zero();
    let mut digits = Vec::with_capacity(groups.len());
    let mut steps = Vec::with_capacity(groups.len());
    for group in groups {
        let point = &rem * &shift + group;
        let (divisor, trial) = if root.is_zero() {
            let d = powers.iter().take_while(|p| *p <= &point).count() as u8;
            (BigUint::zero(), d)
        } else {
            let divisor = form_divisor(&root, &sp, mode)?;
            let q = (&point / &divisor).to_u8().unwrap_or(9).min(9);
            (divisor, q)
        };
        let mut d = trial;
        let mut sub = subtrahend(&root, d, n);
        while sub > point {
            d -= 1;
            sub = subtrahend(&root, d, n);
        }
        rem = &point - &sub;
        steps.push(TraceStep {
            root_before: root.clone(),
            point_value: point,
            divisor,
            trial_digit: trial,
            corrected_digit: d,
            subtrahend: sub,
            remainder_after: rem.clone(),
        });
        root = root * 10u32 + d;
        digits.push(d);
    }
    Ok(RootExtraction { radicand: radicand.clone(), degree: n, frac_digits, mode, digits, remainder: rem, steps })
}

fn root_name(n: u32) -> String {
    match n {
        2 => "square root".into(),
        3 => "cube root".into(),
        _ => format!("root of degree {n}"),
    }
}

/// Plain-text table of the extraction, one row per step.
///
/// `products` lists the special-number terms whose sum is removed first;
/// `left` is what remains before the digit's own power is subtracted.
pub fn render_trace(rx: &RootExtraction) -> String {
    let sp = SpecialNumbers::new(rx.degree).expect("extraction has a valid degree");
    let header = ["step", "point", "divisor", "trial", "digit", "products", "left", "power", "subtrahend", "remainder"];
    let mut rows: Vec<Vec<String>> = vec![header.iter().map(|s| s.to_string()).collect()];
    for (i, st) in rx.steps.iter().enumerate() {
        let mut parts = st.partial_products(&sp);
        let power = parts.pop().expect("power term");
        let first = st.root_before.is_zero();
        let products_sum: BigUint = parts.iter().sum();
        rows.push(vec![
            (i + 1).to_string(),
            st.point_value.to_string(),
            if first { "-".into() } else { st.divisor.to_string() },
            st.trial_digit.to_string(),
            st.corrected_digit.to_string(),
            if first {
                "-".into()
            } else {
                let terms: Vec<String> = parts.iter().map(|t| t.to_string()).collect();
                format!("{}={}", terms.join("+"), products_sum)
            },
            if first { "-".into() } else { (&st.point_value - &products_sum).to_string() },
            power.to_string(),
            st.subtrahend.to_string(),
            st.remainder_after.to_string(),
        ]);
    }
    let widths: Vec<usize> = (0..header.len()).map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0)).collect();
    let mode = match rx.mode {
        DivisorMode::Full => "full",
        DivisorMode::Simplified => "simplified",
    };
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{} of {} ({} fractional digits, {} divisor)",
        root_name(rx.degree),
        rx.radicand,
        rx.frac_digits,
        mode
    );
    for row in &rows {
        let line: Vec<String> = row.iter().zip(&widths).map(|(cell, w)| format!("{cell:>w$}")).collect();
        let _ = writeln!(out, "{}", line.join("  ").trim_end());
    }
    let _ = writeln!(out, "root {} remainder {}", rx.root_string(), rx.remainder);
    out
}

/// Checks `root^n ≤ radicand·10^(n·f) < (root + 1)^n` and the stored remainder.
pub fn verify_extraction(rx: &RootExtraction) -> bool {
    let target = &rx.radicand * ten_pow(rx.degree * rx.frac_digits);
    let root = rx.root_scaled();
    let low = pow(&root, rx.degree);
    let high = pow(&(&root + BigUint::one()), rx.degree);
    low <= target && target < high && &target - &low == rx.remainder
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::int_nth_root_floor;
    use proptest::prelude::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn digits_of(n: &BigUint) -> Vec<u8> {
        n.to_string().bytes().map(|b| b - b'0').collect()
    }

    #[test]
    fn grouping() {
        assert_eq!(group_points(&big(239483190), 3).unwrap(), vec![big(239), big(483), big(190)]);
        assert_eq!(group_points(&big(80621568000), 3).unwrap(), vec![big(80), big(621), big(568), big(0)]);
        assert_eq!(group_points(&big(7), 5).unwrap(), vec![big(7)]);
        assert_eq!(group_points(&big(0), 2).unwrap(), vec![big(0)]);
        assert!(group_points(&big(7), 1).is_err());
    }

    #[test]
    fn special_numbers() {
        assert_eq!(SpecialNumbers::new(3).unwrap().values(), &[big(300), big(30)]);
        assert_eq!(SpecialNumbers::new(2).unwrap().values(), &[big(20)]);
        let t = SpecialNumbers::table(17).unwrap();
        assert_eq!(t.len(), 16);
        assert_eq!(t[15].values().len(), 16);
        assert_eq!(t[15], SpecialNumbers::new(17).unwrap());
        for sp in &t {
            assert!(sp.values().windows(2).all(|w| w[0] > w[1]));
            assert_eq!(sp.values()[0], BigUint::from(sp.degree()) * ten_pow(sp.degree() - 1));
        }
    }

    #[test]
    fn divisors() {
        let sp = SpecialNumbers::new(3).unwrap();
        assert_eq!(form_divisor(&big(6), &sp, DivisorMode::Full).unwrap(), big(10980));
        assert_eq!(form_divisor(&big(6), &sp, DivisorMode::Simplified).unwrap(), big(10800));
        assert_eq!(form_divisor(&big(4), &sp, DivisorMode::Simplified).unwrap(), big(4800));
        assert!(form_divisor(&big(0), &sp, DivisorMode::Full).is_err());
    }

    #[test]
    fn power_tables() {
        assert_eq!(digit_power_table(3).unwrap(), [1, 8, 27, 64, 125, 216, 343, 512, 729].map(big).to_vec());
        assert_eq!(digit_power_table(2).unwrap()[8], big(81));
        let p17 = digit_power_table(17).unwrap();
        assert_eq!(p17[1], big(131072));
        assert_eq!(p17[8], big(16677181699666569));
    }

    #[test]
    fn clavius_cube_root() {
        let rx = extract_root(&big(239483190), 3, 0, DivisorMode::Full).unwrap();
        assert_eq!(rx.digits(), &[6, 2, 1]);
        assert_eq!(rx.remainder(), &big(129));
        let s = rx.steps();
        assert_eq!(
            (s[0].point_value.clone(), s[0].subtrahend.clone(), s[0].remainder_after.clone()),
            (big(239), big(216), big(23))
        );
        assert_eq!(s[1].point_value, big(23483));
        assert_eq!(s[1].divisor, big(10980));
        assert_eq!((s[1].trial_digit, s[1].corrected_digit), (2, 2));
        assert_eq!(s[1].subtrahend, big(22328));
        assert_eq!(s[1].remainder_after, big(1155));
        assert_eq!(s[2].point_value, big(1155190));
        assert!(verify_extraction(&rx));
    }

    #[test]
    fn stifel_cube_root() {
        let rx = extract_root(&big(80621568000), 3, 0, DivisorMode::Simplified).unwrap();
        assert_eq!(rx.digits(), &[4, 3, 2, 0]);
        assert_eq!(rx.remainder(), &big(0));
        let s = &rx.steps()[1];
        assert_eq!(rx.steps()[0].subtrahend, big(64));
        assert_eq!((s.point_value.clone(), s.divisor.clone(), s.corrected_digit), (big(16621), big(4800), 3));
        let sp = SpecialNumbers::new(3).unwrap();
        assert_eq!(s.partial_products(&sp), vec![big(14400), big(1080), big(27)]);
        assert_eq!(s.subtrahend, big(15480 + 27));
        assert_eq!(s.remainder_after, big(1114));
    }

    #[test]
    fn fractional_square_root_of_two() {
        let rx = extract_root(&big(2), 2, 5, DivisorMode::Full).unwrap();
        assert_eq!(rx.root_string(), "1.41421");
        assert_eq!(rx.remainder(), &(big(20_000_000_000) - big(141421) * big(141421)));
        assert!(verify_extraction(&rx));
    }

    #[test]
    fn zero_radicand() {
        let rx = extract_root(&big(0), 3, 2, DivisorMode::Full).unwrap();
        assert_eq!(rx.digits(), &[0, 0, 0]);
        assert_eq!(rx.root_string(), "0.00");
        let text = render_trace(&extract_root(&big(0), 3, 0, DivisorMode::Full).unwrap());
        assert_eq!(text.lines().filter(|l| l.trim_start().starts_with('1')).count(), 1);
        assert!(text.contains("root 0 remainder 0"));
    }

    #[test]
    fn traces_render_worked_values() {
        let clavius = render_trace(&extract_root(&big(239483190), 3, 0, DivisorMode::Full).unwrap());
        for v in ["10980", "22328", "1155", "216"] {
            assert!(clavius.contains(v), "{v}");
        }
        let stifel = render_trace(&extract_root(&big(80621568000), 3, 0, DivisorMode::Simplified).unwrap());
        for v in ["4800", "14400+1080=15480", "1141", "1114", "root 4320 remainder 0"] {
            assert!(stifel.contains(v), "{v}\n{stifel}");
        }
        assert_eq!(stifel, render_trace(&extract_root(&big(80621568000), 3, 0, DivisorMode::Simplified).unwrap()));
    }

    #[test]
    fn perfect_powers() {
        for n in 2..=9u32 {
            for d in 1..=99u64 {
                let rx = extract_root(&pow(&big(d), n), n, 0, DivisorMode::Full).unwrap();
                assert_eq!(rx.root_scaled(), big(d));
                assert!(rx.remainder().is_zero());
            }
        }
    }

    fn radicand() -> impl Strategy<Value = BigUint> {
        proptest::collection::vec(any::<u32>(), 0..7).prop_map(BigUint::new)
    }

    proptest! {
        #[test]
        fn matches_integer_root_oracle(n_val in radicand(), n in 2u32..=17, f in 0u32..=2) {
            let full = extract_root(&n_val, n, f, DivisorMode::Full).unwrap();
            let simple = extract_root(&n_val, n, f, DivisorMode::Simplified).unwrap();
            let scaled = &n_val * ten_pow(n * f);
            let oracle = int_nth_root_floor(&scaled, n).unwrap();
            let mut want = digits_of(&oracle);
            let len = full.digits().len();
            while want.len() < len {
                want.insert(0, 0);
            }
            prop_assert_eq!(full.digits(), &want[..]);
            prop_assert_eq!(full.digits(), simple.digits());
            prop_assert_eq!(full.remainder(), simple.remainder());
            prop_assert!(verify_extraction(&full));
            prop_assert_eq!(full.integer_digit_count(), group_points(&n_val, n).unwrap().len());
            for st in full.steps().iter().chain(simple.steps()) {
                prop_assert!(st.trial_digit >= st.corrected_digit);
                prop_assert_eq!(&st.point_value - &st.subtrahend, st.remainder_after.clone());
                if st.corrected_digit < 9 {
                    prop_assert!(subtrahend(&st.root_before, st.corrected_digit + 1, n) > st.point_value);
                }
            }
        }

        #[test]
        fn special_number_expansion(r in 0u64..1_000_000, d in 0u8..10, n in 2u32..=17) {
            let sp = SpecialNumbers::new(n).unwrap();
            let step = TraceStep {
                root_before: big(r),
                point_value: BigUint::zero(),
                divisor: BigUint::zero(),
                trial_digit: d,
                corrected_digit: d,
                subtrahend: BigUint::zero(),
                remainder_after: BigUint::zero(),
            };
            let sum: BigUint = step.partial_products(&sp).iter().sum();
            prop_assert_eq!(sum, subtrahend(&big(r), d, n));
        }
    }
}
