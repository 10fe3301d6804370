//! Bounds on π from the 96-gon, then to 20 decimals, and the 11:14 ratio.

use practica::circle::{pi_bounds, prop2_ratio_check, PiBounds, PiTarget};
use practica::numerics::{format_decimal, parse_rational, Precision};

fn main() -> practica::Result<()> {
    let p = Precision::new(15)?;
    for sides in [6, 12, 24, 48, 96] {
        let b = pi_bounds(&PiTarget::Sides(sides), p)?;
        println!("{sides:>3} sides: {} < pi < {}", format_decimal(b.lower(), 10), format_decimal(b.upper(), 10));
    }

    let width = parse_rational("1e-21")?;
    let b = pi_bounds(&PiTarget::Width(width), Precision::default())?;
    println!(
        "\nafter {} sides:\n  {}\n  {}",
        b.sides().unwrap_or(0),
        format_decimal(b.lower(), 22),
        format_decimal(b.upper(), 22)
    );

    for (name, bounds) in [("22/7 and 223/71", PiBounds::archimedean()), ("20 decimals", PiBounds::ludolphine())] {
        let v = prop2_ratio_check(&bounds);
        println!(
            "11/14 against pi/4 from {name}: contained = {}, off by {}",
            v.contained,
            format_decimal(&v.distance, 8)
        );
    }
    Ok(())
}
