//! Samples the conchoid, checks it against its quartic, and writes an SVG.
//!
//! ```text
//! cargo run --example conchoid_curve > conchoid.svg
//! ```

use practica::cli::points_svg;
use practica::mean_prop::{cissoid_points, conchoid_points, conchoid_residual};
use practica::numerics::{rat, Precision};

fn main() -> practica::Result<()> {
    let one = rat(1, 1);
    let pts = conchoid_points(&one, &one, 120, (&rat(-8, 1), &rat(8, 1)), Precision::default())?;
    let on_curve = pts.iter().filter(|f| conchoid_residual(f, &one, &one).contains_zero()).count();
    eprintln!("{on_curve} of {} conchoid points satisfy (x² + (y+1)²)y² = (y+1)²", pts.len());

    let cissoid = cissoid_points(&one, 60)?;
    eprintln!("cissoid sampled from the cusp {:?} to {:?}", cissoid[0], cissoid[cissoid.len() - 1]);

    print!("{}", points_svg(&pts));
    Ok(())
}
