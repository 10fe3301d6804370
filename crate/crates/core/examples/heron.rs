//! Heron's rule on side lengths and on coordinates, and the incircle
//! identity that proves it.

use practica::geometry::Point2;
use practica::heron::{
    heron_area_bounds, heron_area_sq_from_vertices, heron_product, verify_heron_identity, TriangleSides,
    TriangleVertices,
};
use practica::numerics::{format_decimal, rat, Precision};

fn main() -> practica::Result<()> {
    let p = Precision::default();

    let t = TriangleSides::new(rat(13, 1), rat(14, 1), rat(15, 1))?;
    println!(
        "sides 13 14 15: s = {}, product = {}, area = {}",
        t.semiperimeter(),
        heron_product(&t),
        heron_area_bounds(&t, p)?
    );

    let t = TriangleSides::new(rat(2, 1), rat(3, 1), rat(4, 1))?;
    let area = heron_area_bounds(&t, p)?;
    println!("sides 2 3 4: area in [{}, {}]", format_decimal(area.lo(), 20), format_decimal(area.hi(), 20));

    let pt = |x, y| Point2::new(rat(x, 1), rat(y, 1));
    let fig = TriangleVertices::new(pt(1, 2), pt(0, 0), pt(5, 0))?;
    println!("vertices (1,2) (0,0) (5,0): area squared = {}", heron_area_sq_from_vertices(&fig));

    let right = TriangleVertices::new(pt(0, 3), pt(0, 0), pt(4, 0))?;
    let report = verify_heron_identity(&right, p)?;
    println!(
        "incircle identity on the 3-4-5 triangle: exact = {}, holds = {}, DE = {}, AH = {}",
        report.exact,
        report.holds(),
        report.de,
        report.ah
    );
    Ok(())
}
