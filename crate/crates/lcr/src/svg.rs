//! Deterministic SVG rendering of drawings (display only).
//!
//! Coordinates are converted to decimals only for display; nothing rendered
//! here ever feeds back into a predicate. Output is byte-deterministic for a
//! given input: points are drawn in id order and edges in canonical order.

use std::fmt::Write as _;

use num_traits::ToPrimitive;

use crate::construct::PartName;
use crate::crossing::CrossingProfile;
use crate::geom::PointSet;

const VIEW: f64 = 1000.0;
const MARGIN: f64 = 60.0;

/// Format with 9 significant digits, the display-only precision contract.
fn sig9(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (8 - magnitude).clamp(0, 17) as usize;
    let mut s = format!("{x:.decimals$}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    s
}

fn approx(r: &crate::geom::Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(0.0);
        let d = r.denom().to_f64().unwrap_or(1.0);
        n / d
    })
}

/// Render a drawing as SVG: edges as lines, lcr-achieving edges highlighted,
/// points as labeled disks, and optional per-part labels at part centroids.
pub fn emit_svg(ps: &PointSet, profile: &CrossingProfile, parts: Option<&[PartName]>) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {VIEW} {VIEW}\">"
    )
    .unwrap();
    writeln!(out, "<rect width=\"{VIEW}\" height=\"{VIEW}\" fill=\"white\"/>").unwrap();

    let coords: Vec<(f64, f64)> = ps.iter().map(|p| (approx(&p.x), approx(&p.y))).collect();
    if !coords.is_empty() {
        let min_x = coords.iter().map(|c| c.0).fold(f64::INFINITY, f64::min);
        let max_x = coords.iter().map(|c| c.0).fold(f64::NEG_INFINITY, f64::max);
        let min_y = coords.iter().map(|c| c.1).fold(f64::INFINITY, f64::min);
        let max_y = coords.iter().map(|c| c.1).fold(f64::NEG_INFINITY, f64::max);
        let span = (max_x - min_x).max(max_y - min_y).max(f64::MIN_POSITIVE);
        let scale = (VIEW - 2.0 * MARGIN) / span;
        // Flip y so larger y is up, as on paper.
        let place = |&(x, y): &(f64, f64)| {
            (
                MARGIN + (x - min_x) * scale,
                VIEW - MARGIN - (y - min_y) * scale,
            )
        };

        let hot = profile.max_edges();
        for (edge, count) in &profile.counts {
            let (x1, y1) = place(&coords[edge.u]);
            let (x2, y2) = place(&coords[edge.v]);
            let (stroke, width) = if hot.contains(edge) {
                ("#d62728", "3")
            } else {
                ("#9999bb", "1")
            };
            writeln!(
                out,
                "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{stroke}\" \
                 stroke-width=\"{width}\"><title>{}-{}: {count} crossings</title></line>",
                sig9(x1),
                sig9(y1),
                sig9(x2),
                sig9(y2),
                edge.u,
                edge.v,
            )
            .unwrap();
        }

        for (id, c) in coords.iter().enumerate() {
            let (x, y) = place(c);
            writeln!(
                out,
                "<circle cx=\"{}\" cy=\"{}\" r=\"6\" fill=\"#1f3b73\"/>",
                sig9(x),
                sig9(y)
            )
            .unwrap();
            writeln!(
                out,
                "<text x=\"{}\" y=\"{}\" font-size=\"14\" fill=\"black\">{id}</text>",
                sig9(x + 8.0),
                sig9(y - 8.0)
            )
            .unwrap();
        }

        if let Some(parts) = parts {
            let mut order: Vec<PartName> = Vec::new();
            for part in parts {
                if !order.contains(part) {
                    order.push(*part);
                }
            }
            for part in order {
                let members: Vec<&(f64, f64)> = parts
                    .iter()
                    .zip(&coords)
                    .filter(|(p, _)| **p == part)
                    .map(|(_, c)| c)
                    .collect();
                let k = members.len() as f64;
                let cx = members.iter().map(|c| c.0).sum::<f64>() / k;
                let cy = members.iter().map(|c| c.1).sum::<f64>() / k;
                let (x, y) = place(&(cx, cy));
                writeln!(
                    out,
                    "<text x=\"{}\" y=\"{}\" font-size=\"22\" font-weight=\"bold\" \
                     fill=\"#2a7d2a\">{part}</text>",
                    sig9(x + 14.0),
                    sig9(y + 24.0)
                )
                .unwrap();
            }
        }
    }

    writeln!(out, "</svg>").unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::construct_three_arcs;
    use crate::crossing::crossing_profile;

    #[test]
    fn empty_set_yields_minimal_svg() {
        let ps = PointSet::from_int_coords(&[]);
        let svg = emit_svg(&ps, &crossing_profile(&ps), None);
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert!(!svg.contains("<circle"));
        assert!(!svg.contains("<line"));
    }

    #[test]
    fn convex_quad_highlights_both_diagonals() {
        let ps = PointSet::from_int_coords(&[(0, 0), (9, 1), (10, 8), (1, 7)]);
        let svg = emit_svg(&ps, &crossing_profile(&ps), None);
        assert_eq!(svg.matches("stroke=\"#d62728\"").count(), 2);
        assert_eq!(svg.matches("<circle").count(), 4);
        assert_eq!(svg.matches("<line").count(), 6);
    }

    #[test]
    fn three_arc_svg_has_part_labels_and_is_deterministic() {
        let built = construct_three_arcs(9).unwrap();
        let profile = crossing_profile(&built.base);
        let a = emit_svg(&built.base, &profile, Some(&built.parts));
        let b = emit_svg(&built.base, &profile, Some(&built.parts));
        assert_eq!(a, b);
        for label in ["ARC0", "ARC1", "ARC2"] {
            assert!(a.contains(&format!(">{label}</text>")), "missing {label}");
        }
    }

    #[test]
    fn sig9_keeps_nine_significant_digits() {
        assert_eq!(sig9(0.0), "0");
        assert_eq!(sig9(123.456789123), "123.456789");
        assert_eq!(sig9(-0.000123456789123), "-0.000123456789");
        assert_eq!(sig9(1000.0), "1000");
    }
}
