//! A line through a point whose piece between two lines has a given length.

use practica::geometry::Point2;
use practica::mean_prop::{solve_neusis, NeusisProblem};
use practica::numerics::{format_decimal, rat, Precision};

fn main() -> practica::Result<()> {
    let pt = |x, y| Point2::new(rat(x, 1), rat(y, 1));
    // the coordinate axes, the point (1, 1), a piece of length 3
    let npb = NeusisProblem::new((pt(0, 0), pt(1, 0)), (pt(0, 0), pt(0, 1)), pt(1, 1), rat(3, 1))?
        .with_range(rat(-1, 1), rat(0, 1))?;
    let s = solve_neusis(&npb, &rat(1, 1_000_000_000_000), Precision::default())?;
    let show = |p: &practica::geometry::IntervalPoint| {
        format!("({}, {})", format_decimal(&p.x.midpoint(), 12), format_decimal(&p.y.midpoint(), 12))
    };
    println!("meets the x-axis at {} and the y-axis at {}", show(&s.first), show(&s.second));
    println!("intercepted length {}", format_decimal(&s.intercept.midpoint(), 12));
    Ok(())
}
