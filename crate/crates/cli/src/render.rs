//! Static SVG pictures of regions and tilings.
//!
//! Output depends only on the region and the tiling, and numbers are
//! printed with fixed precision, so equal inputs give equal bytes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use qtiling::lattice::{layout, Lozenge, LozengeOrientation, Region, RegionSpec, UnitTriangle};

/// Side of a unit triangle in pixels.
const UNIT: f64 = 24.0;
const MARGIN: f64 = 12.0;

const DENT_FILL: &str = "#9e9e9e";
const GRID: &str = "#cfcfcf";

fn fill(o: LozengeOrientation) -> &'static str {
    match o {
        LozengeOrientation::Right => "#e3a33b",
        LozengeOrientation::Left => "#4f8dc2",
        LozengeOrientation::Vertical => "#7db36a",
    }
}

fn class(o: LozengeOrientation) -> &'static str {
    match o {
        LozengeOrientation::Right => "right",
        LozengeOrientation::Left => "left",
        LozengeOrientation::Vertical => "vertical",
    }
}

struct Frame {
    top: i32,
    min_x2: i32,
}

impl Frame {
    /// Doubled x coordinate keeps half units exact.
    fn x2((u, v): (i32, i32)) -> i32 {
        2 * u + v
    }

    fn point(&self, p: (i32, i32)) -> String {
        let x = MARGIN + (Self::x2(p) - self.min_x2) as f64 * UNIT / 2.0;
        let y = MARGIN + (self.top - p.1) as f64 * UNIT * 3f64.sqrt() / 2.0;
        format!("{x:.2},{y:.2}")
    }

    fn polygon(&self, pts: &[(i32, i32)]) -> String {
        pts.iter().map(|p| self.point(*p)).collect::<Vec<_>>().join(" ")
    }
}

/// The picture of `region`, with the dents of `spec` shaded and `tiling`
/// drawn on top when given.
pub fn svg(region: &Region, spec: Option<&RegionSpec>, tiling: Option<&[Lozenge]>) -> String {
    let dents: BTreeSet<UnitTriangle> = match spec {
        Some(s) => layout(s)
            .hexagon
            .cells()
            .into_iter()
            .filter(|c| !region.contains(c))
            .collect(),
        None => BTreeSet::new(),
    };
    let points: Vec<(i32, i32)> = region.iter().chain(&dents).flat_map(|c| c.vertices()).collect();
    let frame = Frame {
        top: points.iter().map(|p| p.1).max().unwrap_or(0),
        min_x2: points.iter().map(|&p| Frame::x2(p)).min().unwrap_or(0),
    };
    let width = points.iter().map(|&p| Frame::x2(p)).max().unwrap_or(0) - frame.min_x2;
    let height = frame.top - points.iter().map(|p| p.1).min().unwrap_or(0);
    let w = 2.0 * MARGIN + width as f64 * UNIT / 2.0;
    let h = 2.0 * MARGIN + height as f64 * UNIT * 3f64.sqrt() / 2.0;

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.2}" height="{h:.2}" viewBox="0 0 {w:.2} {h:.2}">"#
    );
    let _ = writeln!(out, r#"<g class="dents" fill="{DENT_FILL}" stroke="none">"#);
    for c in &dents {
        let _ = writeln!(out, r#"<polygon class="dent" points="{}"/>"#, frame.polygon(&c.vertices()));
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r#"<g class="cells" fill="white" stroke="{GRID}" stroke-width="0.5">"#);
    for c in region.iter() {
        let _ = writeln!(out, r#"<polygon class="cell" points="{}"/>"#, frame.polygon(&c.vertices()));
    }
    let _ = writeln!(out, "</g>");
    if let Some(tiling) = tiling {
        let mut sorted: Vec<&Lozenge> = tiling.iter().collect();
        sorted.sort_by_key(|l| (l.up(), l.down()));
        let _ = writeln!(out, r#"<g class="tiling" stroke="black" stroke-width="0.75">"#);
        for l in sorted {
            let o = l.orientation();
            let _ = writeln!(
                out,
                r#"<polygon class="{}" fill="{}" points="{}"/>"#,
                class(o),
                fill(o),
                frame.polygon(&l.vertices())
            );
        }
        let _ = writeln!(out, "</g>");
    }
    let _ = writeln!(
        out,
        r#"<path class="outline" fill="none" stroke="black" stroke-width="2" stroke-linecap="round" d="{}"/>"#,
        outline(region)
            .iter()
            .map(|(a, b)| format!("M{}L{}", frame.point(*a), frame.point(*b)))
            .collect::<String>()
    );
    let _ = writeln!(out, "</svg>");
    out
}

/// Unit edges that belong to exactly one cell of the region, sorted.
fn outline(region: &Region) -> Vec<((i32, i32), (i32, i32))> {
    let mut seen: BTreeMap<((i32, i32), (i32, i32)), u32> = BTreeMap::new();
    for c in region.iter() {
        for (a, b) in c.edges_ccw() {
            *seen.entry((a.min(b), a.max(b))).or_default() += 1;
        }
    }
    seen.into_iter().filter(|(_, n)| *n == 1).map(|(e, _)| e).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use qtiling::enumerate::lex_first_tiling;
    use qtiling::lattice::build_region;

    #[test]
    fn unit_hexagon() {
        let r = build_region(&RegionSpec::hex(1, 1, 1));
        let s = svg(&r, Some(&RegionSpec::hex(1, 1, 1)), None);
        assert_eq!(s.matches(r#"class="cell""#).count(), 6);
        assert_eq!(s.matches(r#"class="dent""#).count(), 0);
        assert_eq!(outline(&r).len(), 6);
    }

    #[test]
    fn dents_and_tiling() {
        let spec = RegionSpec::f(2, 1, 2, 2, 3, 2, 3, 2, 2);
        let r = build_region(&spec);
        let t = lex_first_tiling(&r).unwrap();
        let s = svg(&r, Some(&spec), Some(&t));
        assert!(s.matches(r#"class="dent""#).count() > 0);
        let lozenges = ["right", "left", "vertical"]
            .iter()
            .map(|c| s.matches(&format!(r#"<polygon class="{c}""#)).count())
            .sum::<usize>();
        assert_eq!(lozenges, r.len() / 2);
        assert_eq!(s, svg(&r, Some(&spec), Some(&t)));
    }
}
