//! Bounding hexagons, triangular dents and the placement table for the five families.
//!
//! A hexagon with clockwise sides `s1..s6` (starting from the northwest side)
//! is placed with the left end of its south side at the origin. Its lattice
//! points are then
//!
//! ```text
//! 0 <= v <= s1 + s6,   -s6 <= u <= s5,   0 <= u + v <= s1 + s2
//! ```
//!
//! and a unit triangle belongs to a convex shape iff its three vertices do.

use serde::{Deserialize, Serialize};

use super::cell::UnitTriangle;
use super::region::Region;
use super::spec::RegionSpec;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Hexagon {
    /// Clockwise from the northwest side: NW, N, NE, SE, S, SW.
    pub sides: [u32; 6],
}

impl Hexagon {
    /// Fails unless opposite-side differences close up.
    pub fn new(sides: [u32; 6]) -> Result<Self> {
        let s = sides.map(i64::from);
        if s[1] + s[2] != s[4] + s[5] || s[0] + s[5] != s[2] + s[3] {
            return Err(Error::InvalidParameters(format!(
                "sides {sides:?} do not close up"
            )));
        }
        Ok(Self { sides })
    }

    pub fn height(&self) -> i32 {
        (self.sides[0] + self.sides[5]) as i32
    }

    /// `u` coordinate of the southeast side.
    pub fn se_line(&self) -> i32 {
        self.sides[4] as i32
    }

    /// `u` coordinate of the northwest side.
    pub fn nw_line(&self) -> i32 {
        -(self.sides[5] as i32)
    }

    /// `u + v` on the northeast side.
    pub fn ne_diag(&self) -> i32 {
        (self.sides[0] + self.sides[1]) as i32
    }

    pub fn contains_point(&self, (u, v): (i32, i32)) -> bool {
        (0..=self.height()).contains(&v)
            && (self.nw_line()..=self.se_line()).contains(&u)
            && (0..=self.ne_diag()).contains(&(u + v))
    }

    pub fn contains(&self, c: &UnitTriangle) -> bool {
        c.vertices().iter().all(|p| self.contains_point(*p))
    }

    /// All unit triangles inside, in scan order.
    pub fn cells(&self) -> Vec<UnitTriangle> {
        let mut out = Vec::new();
        for j in 0..self.height() {
            for i in self.nw_line()..self.se_line() {
                for c in [UnitTriangle::up(i, j), UnitTriangle::down(i, j)] {
                    if self.contains(&c) {
                        out.push(c);
                    }
                }
            }
        }
        out
    }

    /// Corner lattice points, counterclockwise from the origin.
    pub fn corners(&self) -> [(i32, i32); 6] {
        let [s1, s2, s3, s4, s5, _] = self.sides.map(|s| s as i32);
        [
            (0, 0),
            (s5, 0),
            (s5, s4),
            (s5 - s3, s4 + s3),
            (s5 - s3 - s2, s4 + s3),
            (s5 - s3 - s2, s4 + s3 - s1),
        ]
    }
}

/// A removed equilateral triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Dent {
    /// Up-pointing, vertices `(u, v), (u+n, v), (u, v+n)`.
    Up { u: i32, v: i32, n: u32 },
    /// Down-pointing, vertices `(u-n, v), (u, v), (u, v-n)`.
    Down { u: i32, v: i32, n: u32 },
}

impl Dent {
    pub fn contains_point(&self, (p, r): (i32, i32)) -> bool {
        match *self {
            Dent::Up { u, v, n } => p >= u && r >= v && p + r <= u + v + n as i32,
            Dent::Down { u, v, n } => p <= u && r <= v && p + r >= u + v - n as i32,
        }
    }

    pub fn contains(&self, c: &UnitTriangle) -> bool {
        c.vertices().iter().all(|p| self.contains_point(*p))
    }

    pub fn size(&self) -> u32 {
        match *self {
            Dent::Up { n, .. } | Dent::Down { n, .. } => n,
        }
    }

    pub fn corners(&self) -> [(i32, i32); 3] {
        match *self {
            Dent::Up { u, v, n } => [(u, v), (u + n as i32, v), (u, v + n as i32)],
            Dent::Down { u, v, n } => [(u - n as i32, v), (u, v), (u, v - n as i32)],
        }
    }

    /// Cells of the dent, in scan order.
    pub fn cells(&self) -> Vec<UnitTriangle> {
        let n = self.size() as i32;
        let (u0, v0) = match *self {
            Dent::Up { u, v, .. } => (u, v),
            Dent::Down { u, v, .. } => (u - n, v - n),
        };
        let mut out = Vec::new();
        for j in v0..v0 + n {
            for i in u0..u0 + n {
                for c in [UnitTriangle::up(i, j), UnitTriangle::down(i, j)] {
                    if self.contains(&c) {
                        out.push(c);
                    }
                }
            }
        }
        out
    }
}

/// Hexagon and dents for a spec.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layout {
    pub hexagon: Hexagon,
    pub dents: Vec<Dent>,
}

fn up(u: u32, v: u32, n: u32) -> Dent {
    Dent::Up {
        u: u as i32,
        v: v as i32,
        n,
    }
}

fn up_at(u: i32, v: i32, n: u32) -> Dent {
    Dent::Up { u, v, n }
}

fn down_at(u: i32, v: i32, n: u32) -> Dent {
    Dent::Down { u, v, n }
}

/// The placement table. Every dent offset used anywhere lives here.
pub fn layout(spec: &RegionSpec) -> Layout {
    let hex = |s: [u32; 6]| Hexagon::new(s).expect("family sides always close up");
    match *spec {
        RegionSpec::Hex { a, b, c } => Layout {
            hexagon: hex([a, b, c, a, b, c]),
            dents: vec![],
        },
        RegionSpec::K { a, x, y, z, t } => Layout {
            hexagon: hex([z + a, x + y, t + a, z, x + y + a, t]),
            // a-triangle on the south side, x units from the southwest corner
            dents: vec![up(x, 0, a)],
        },
        RegionSpec::Q { a, b, x, y, z, t } => {
            let h = hex([z + a + b, x + y, y + t + a + b, z, x + y + a + b, y + t]);
            // both dents have their left side on the line u = x
            let top = h.ne_diag() - x as i32 - b as i32;
            Layout {
                hexagon: h,
                dents: vec![up(x, 0, a), up_at(x as i32, top, b)],
            }
        }
        RegionSpec::B { x, y, z, t, a, b, c, d } => {
            let h = hex([
                z + b + c + d,
                x + y + z + t + a,
                t + b + c + d,
                z + a,
                x + y + z + t + b + c + d,
                t + a,
            ]);
            let top = h.height();
            let (xi, ai, ci) = (x as i32, a as i32, c as i32);
            Layout {
                hexagon: h,
                dents: vec![
                    // south side: d-triangle, then the b-triangle z+t+c further right
                    up(x, 0, d),
                    up(x + z + t + c + d, 0, b),
                    // north bowtie centred at (x, top - a)
                    down_at(xi, top, a),
                    up_at(xi, top - ai - ci, c),
                ],
            }
        }
        RegionSpec::F { x, y, z, a, b, c, d, e, f } => {
            let h = hex([
                z + x + a + b + c,
                x + y + d + e + f,
                y + z + a + b + c,
                z + x + d + e + f,
                x + y + a + b + c,
                y + z + d + e + f,
            ]);
            // bowtie centres: (x+c, a), (x+c, a+l), (x+c-l, a+l)
            let l = (x + y + z + d + e + f) as i32;
            let (cu, cv) = ((x + c) as i32, a as i32);
            Layout {
                hexagon: h,
                dents: vec![
                    up_at(cu, 0, a),
                    down_at(cu, cv + d as i32, d),
                    up_at(cu, cv + l, b),
                    down_at(cu, cv + l, e),
                    up_at(cu - l - c as i32, cv + l, c),
                    down_at(cu - l + f as i32, cv + l, f),
                ],
            }
        }
    }
}

/// Cell set of the named region, with reference lines taken from its
/// bounding hexagon (base row 0, southeast line `s5`).
pub fn build_region(spec: &RegionSpec) -> Region {
    let Layout { hexagon, dents } = layout(spec);
    let cells = hexagon
        .cells()
        .into_iter()
        .filter(|c| !dents.iter().any(|d| d.contains(c)));
    Region::with_reference(cells, 0, hexagon.se_line()).with_frame(hexagon)
}

/// A bare hexagon translated so that its south-side left corner sits at
/// `origin`, with the given reference lines.
pub fn hexagon_at(sides: [u32; 6], origin: (i32, i32), base_row: i32, se_line: i32) -> Result<Region> {
    let h = Hexagon::new(sides)?;
    let cells = h.cells().into_iter().map(|c| UnitTriangle {
        i: c.i + origin.0,
        j: c.j + origin.1,
        orient: c.orient,
    });
    Ok(Region::with_reference(cells, base_row, se_line))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_hexagon() {
        let r = build_region(&RegionSpec::hex(1, 1, 1));
        assert_eq!(r.len(), 6);
        assert_eq!(r.up_count(), 3);
    }

    #[test]
    fn hexagon_cell_count() {
        // area of Hex(a,b,c) in unit triangles is 2(ab+bc+ca)
        for (a, b, c) in [(2, 3, 4), (0, 2, 5), (3, 3, 0)] {
            let h = Hexagon::new([a, b, c, a, b, c]).unwrap();
            assert_eq!(h.cells().len() as u32, 2 * (a * b + b * c + c * a));
        }
    }

    #[test]
    fn dent_cells() {
        assert_eq!(up_at(0, 0, 3).cells().len(), 9);
        assert_eq!(down_at(5, 5, 2).cells().len(), 4);
        assert_eq!(up_at(0, 0, 0).cells().len(), 0);
        let d = down_at(1, 1, 1).cells();
        assert_eq!(d, vec![UnitTriangle::down(0, 0)]);
    }

    #[test]
    fn corners_close() {
        let h = Hexagon::new([2, 3, 4, 2, 3, 4]).unwrap();
        for p in h.corners() {
            assert!(h.contains_point(p));
        }
        assert!(Hexagon::new([1, 1, 1, 1, 1, 2]).is_err());
    }

    #[test]
    fn dents_lie_inside_the_hexagon() {
        let spec = RegionSpec::f(2, 1, 2, 2, 3, 2, 3, 2, 2);
        let Layout { hexagon, dents } = layout(&spec);
        for d in &dents {
            for p in d.corners() {
                assert!(hexagon.contains_point(p), "{d:?}");
            }
        }
    }
}
