//! Deterministic text, CSV and SVG rendering.

use std::fmt::Write as _;

use num_traits::Signed;

use crate::geometry::IntervalPoint;
use crate::numerics::{format_decimal, pow10, Interval, Rational};

/// Number of decimal places for rendered values unless a command asks for more.
pub const DEFAULT_DIGITS: u32 = 15;

fn round_to_grid(value: &Rational, digits: u32, up: bool) -> Rational {
    let scale = pow10(digits as i64);
    let scaled = value * &scale;
    let snapped = if up { scaled.ceil() } else { scaled.floor() };
    snapped / scale
}

/// `[lo, hi]` widened outward to `digits` places.
pub fn format_bounds(iv: &Interval, digits: u32) -> String {
    format!(
        "[{}, {}]",
        format_decimal(&round_to_grid(iv.lo(), digits, false), digits),
        format_decimal(&round_to_grid(iv.hi(), digits, true), digits)
    )
}

/// Midpoint truncated to `digits` places, followed by the enclosing bounds
/// when the interval is wider than one unit in the last place.
pub fn format_interval(iv: &Interval, digits: u32) -> String {
    let mid = format_decimal(&iv.midpoint(), digits);
    if iv.width() > pow10(-(digits as i64)) {
        format!("{mid} {}", format_bounds(iv, digits))
    } else {
        mid
    }
}

/// Scientific rendering of the largest member's magnitude, for residuals.
pub fn format_magnitude(iv: &Interval) -> String {
    format!("{:.2e}", crate::numerics::to_f64(&iv.magnitude()))
}

/// Left-aligned columns separated by two spaces.
pub fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols).map(|c| rows.iter().filter_map(|r| r.get(c)).map(String::len).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().zip(&widths).map(|(cell, w)| format!("{cell:<w$}")).collect();
        let _ = writeln!(out, "{}", cells.join("  ").trim_end());
    }
    out
}

/// `x,y` CSV of interval midpoints.
pub fn points_csv(points: &[IntervalPoint], digits: u32) -> String {
    let mut out = String::from("x,y\n");
    for pt in points {
        let _ =
            writeln!(out, "{},{}", format_decimal(&pt.x.midpoint(), digits), format_decimal(&pt.y.midpoint(), digits));
    }
    out
}

const SVG_SIZE: i64 = 800;
const SVG_MARGIN: i64 = 40;

/// Standalone 800×800 SVG drawing the points as one polyline, scaled to fit
/// with the aspect ratio preserved and the y axis pointing up.
pub fn points_svg(points: &[IntervalPoint]) -> String {
    let mids: Vec<(Rational, Rational)> = points.iter().map(|p| (p.x.midpoint(), p.y.midpoint())).collect();
    let min_x = mids.iter().map(|p| &p.0).min().cloned().unwrap_or_default();
    let max_x = mids.iter().map(|p| &p.0).max().cloned().unwrap_or_default();
    let min_y = mids.iter().map(|p| &p.1).min().cloned().unwrap_or_default();
    let max_y = mids.iter().map(|p| &p.1).max().cloned().unwrap_or_default();
    let span = std::cmp::max(&max_x - &min_x, &max_y - &min_y);
    let inner = Rational::from_integer((SVG_SIZE - 2 * SVG_MARGIN).into());
    let scale = if span.is_positive() { inner / span } else { Rational::from_integer(1.into()) };
    let margin = Rational::from_integer(SVG_MARGIN.into());
    let top = Rational::from_integer((SVG_SIZE - SVG_MARGIN).into());

    let coords: Vec<String> = mids
        .iter()
        .map(|(x, y)| {
            let sx = &margin + (x - &min_x) * &scale;
            let sy = &top - (y - &min_y) * &scale;
            format!("{},{}", format_decimal(&sx, 2), format_decimal(&sy, 2))
        })
        .collect();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SVG_SIZE}\" height=\"{SVG_SIZE}\" viewBox=\"0 0 {SVG_SIZE} {SVG_SIZE}\">"
    );
    let _ = writeln!(out, "<rect width=\"{SVG_SIZE}\" height=\"{SVG_SIZE}\" fill=\"white\"/>");
    let _ = writeln!(
        out,
        "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"{}\"/>",
        coords.join(" ")
    );
    out.push_str("</svg>\n");
    out
}
