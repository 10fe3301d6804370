use num_bigint::BigUint;
use num_traits::One;

/// Pascal's triangle through row `max_n`: `table[n][k] = C(n, k)`.
pub fn binomial_table(max_n: usize) -> Vec<Vec<BigUint>> {
    let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(max_n + 1);
    rows.push(vec![BigUint::one()]);
    for n in 1..=max_n {
        let prev = &rows[n - 1];
        let mut row = Vec::with_capacity(n + 1);
        row.push(BigUint::one());
        for k in 1..n {
            row.push(&prev[k - 1] + &prev[k]);
        }
        row.push(BigUint::one());
        rows.push(row);
    }
    rows
}

/// A single coefficient via the multiplicative formula.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(values: &[u64]) -> Vec<BigUint> {
        values.iter().map(|&v| BigUint::from(v)).collect()
    }

    #[test]
    fn small_rows() {
        assert_eq!(binomial_table(0), vec![row(&[1])]);
        assert_eq!(binomial_table(3)[3], row(&[1, 3, 3, 1]));
    }

    #[test]
    fn row_seventeen() {
        let t = binomial_table(17);
        assert_eq!(t[17][8], BigUint::from(24310u32));
        assert_eq!(t[17].len(), 18);
    }

    #[test]
    fn recurrence_matches_direct_formula() {
        let t = binomial_table(40);
        for (n, r) in t.iter().enumerate() {
            assert_eq!(r[0], BigUint::one());
            assert_eq!(r[n], BigUint::one());
            for (k, c) in r.iter().enumerate() {
                assert_eq!(*c, binomial(n as u64, k as u64));
            }
        }
        assert_eq!(binomial(3, 5), BigUint::ZERO);
    }
}
