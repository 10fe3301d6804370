//! Each doubling removes more than half the area between polygon and circle.

use practica::circle::{exhaustion_report, fibonacci_identity_check};
use practica::numerics::{to_f64, Precision};

fn main() -> practica::Result<()> {
    let p = Precision::default();
    println!("{:>5}  {:>12}  {:>12}  {:>12}  {:>12}", "n", "inner gap", "half before", "outer gap", "half before");
    for s in exhaustion_report(8, p)? {
        println!(
            "{:>5}  {:>12.4e}  {:>12.4e}  {:>12.4e}  {:>12.4e}  {}",
            s.sides,
            to_f64(&s.inner_gap.midpoint()),
            to_f64(&s.inner_half.midpoint()),
            to_f64(&s.outer_gap.midpoint()),
            to_f64(&s.outer_half.midpoint()),
            if s.inner_certified && s.outer_certified { "certified" } else { "open" }
        );
    }
    for n in [4, 6, 12, 48, 96] {
        let d = fibonacci_identity_check(n, p)?;
        println!(
            "half perimeter of the {n}-gon minus area of the {}-gon: width {:.1e}, contains 0: {}",
            2 * n,
            to_f64(&d.width()),
            d.contains_zero()
        );
    }
    Ok(())
}
