//! SVG drawing of rank-two slices in the style of the usual weight diagrams.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, RootType, Weight};

use super::{QPoint, SlicePolytope};

/// Screen images of the two fundamental weights.
fn basis(rs: &RootSystem) -> [(f64, f64); 2] {
    match rs.root_type() {
        RootType::A => [(40.0, 0.0), (20.0, 35.0)],
        RootType::B => [(40.0, 0.0), (20.0, 20.0)],
        RootType::C => [(40.0, 0.0), (40.0, 40.0)],
        RootType::D | RootType::G => [(40.0, 0.0), (60.0, 35.0)],
    }
}

/// Shaded hull, a dot per component, circles around cohomological
/// components and squares around the remaining generalized PRV components.
pub fn slice_svg(
    rs: &RootSystem,
    slice: &SlicePolytope,
    cohomological: &BTreeSet<Weight>,
    generalized_prv: &BTreeSet<Weight>,
) -> Result<String> {
    if rs.rank() != 2 {
        return Err(Error::NotRankTwo(rs.rank()));
    }
    let [b1, b2] = basis(rs);
    let screen = |p: &QPoint| -> (f64, f64) {
        let (a, b) = (p.to_f64(0), p.to_f64(1));
        (a * b1.0 + b * b2.0, a * b1.1 + b * b2.1)
    };
    let all: Vec<(f64, f64)> = slice
        .hull_vertices
        .iter()
        .map(screen)
        .chain(slice.support.iter().map(|w| screen(&QPoint::from(w))))
        .collect();
    let margin = 30.0;
    let min_x = all.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
    let max_x = all.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max);
    let min_y = all.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
    let max_y = all.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max);
    let (width, height) = (max_x - min_x + 2.0 * margin, max_y - min_y + 2.0 * margin);
    let place = |p: (f64, f64)| (p.0 - min_x + margin, max_y - p.1 + margin);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.2} {height:.2}">"#
    );
    let _ = writeln!(
        s,
        "  <title>{} V{} (x) V{}</title>",
        slice.root_system, slice.lambda, slice.mu
    );
    let poly: Vec<String> = slice
        .hull_vertices
        .iter()
        .map(|v| {
            let (x, y) = place(screen(v));
            format!("{x:.2},{y:.2}")
        })
        .collect();
    let _ = writeln!(
        s,
        r##"  <polygon points="{}" fill="#dddddd" stroke="#555555" stroke-width="1"/>"##,
        poly.join(" ")
    );
    for w in &slice.support {
        let (x, y) = place(screen(&QPoint::from(w)));
        let _ = writeln!(
            s,
            r#"  <circle cx="{x:.2}" cy="{y:.2}" r="2.5" fill="black"><title>{w}</title></circle>"#
        );
        if cohomological.contains(w) {
            let _ = writeln!(
                s,
                r#"  <circle class="cohomological" cx="{x:.2}" cy="{y:.2}" r="7" fill="none" stroke="black" stroke-width="1.2"/>"#
            );
        } else if generalized_prv.contains(w) {
            let _ = writeln!(
                s,
                r#"  <rect class="generalized-prv" x="{:.2}" y="{:.2}" width="12" height="12" fill="none" stroke="black" stroke-width="1.2"/>"#,
                x - 6.0,
                y - 6.0
            );
        }
    }
    s.push_str("</svg>\n");
    Ok(s)
}
