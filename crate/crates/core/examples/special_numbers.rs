//! The special numbers C(n,k)·10^(n−k) for degrees 2 through 17.

use practica::root_extraction::SpecialNumbers;

fn main() -> practica::Result<()> {
    for sp in SpecialNumbers::table(17)? {
        let values: Vec<String> = sp.values().iter().map(ToString::to_string).collect();
        println!("{:>2}: {}", sp.degree(), values.join(" "));
    }
    Ok(())
}
