//! The two worked cube-root extractions, and a square root with decimals.

use num_bigint::BigUint;
use practica::root_extraction::{extract_root, render_trace, DivisorMode};

fn main() -> practica::Result<()> {
    print!("{}", render_trace(&extract_root(&BigUint::from(239_483_190u64), 3, 0, DivisorMode::Full)?));
    println!();
    print!("{}", render_trace(&extract_root(&BigUint::from(80_621_568_000u64), 3, 0, DivisorMode::Simplified)?));
    println!();
    print!("{}", render_trace(&extract_root(&BigUint::from(2u32), 2, 6, DivisorMode::Full)?));
    Ok(())
}
