//! Doubling the cube four ways, then growing a cube in a given ratio.

use practica::mean_prop::{scale_solid_ratio, solve, MeanPropProblem, Method};
use practica::numerics::{format_decimal, rat, Precision};

fn main() -> practica::Result<()> {
    let prob = MeanPropProblem::with_defaults(rat(2, 1), rat(1, 1))?;
    println!("2 : x :: x : y :: y : 1");
    for m in Method::ALL {
        let r = solve(&prob, m)?;
        println!(
            "{:<10} x = {}  y = {}",
            m.name(),
            format_decimal(&r.x().midpoint(), 14),
            format_decimal(&r.y().midpoint(), 14)
        );
    }

    let edge = scale_solid_ratio(
        &rat(3, 1),
        &rat(5, 4),
        Method::Diocles,
        &MeanPropProblem::default_tol(),
        Precision::default(),
    )?;
    println!("\na cube of edge 3 enlarged by 5/4 has edge {}", format_decimal(&edge.midpoint(), 12));
    Ok(())
}
