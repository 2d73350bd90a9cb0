use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Orientation {
    Up,
    Down,
}

/// A unit triangle in oblique coordinates.
///
/// Lattice points are `(u, v)` with `v` the row height; `Up(i, j)` has
/// vertices `(i, j), (i+1, j), (i, j+1)` and `Down(i, j)` has vertices
/// `(i+1, j), (i, j+1), (i+1, j+1)`, so the two interleave along row `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UnitTriangle {
    pub i: i32,
    pub j: i32,
    pub orient: Orientation,
}

impl UnitTriangle {
    pub const fn up(i: i32, j: i32) -> Self {
        Self {
            i,
            j,
            orient: Orientation::Up,
        }
    }

    pub const fn down(i: i32, j: i32) -> Self {
        Self {
            i,
            j,
            orient: Orientation::Down,
        }
    }

    pub fn is_up(&self) -> bool {
        self.orient == Orientation::Up
    }

    pub fn vertices(&self) -> [(i32, i32); 3] {
        let (i, j) = (self.i, self.j);
        match self.orient {
            Orientation::Up => [(i, j), (i + 1, j), (i, j + 1)],
            Orientation::Down => [(i + 1, j), (i, j + 1), (i + 1, j + 1)],
        }
    }

    /// The three edge-adjacent cells, in the order
    /// (across the slanted `u+v` edge, across the `u` edge, across the horizontal edge).
    pub fn neighbors(&self) -> [UnitTriangle; 3] {
        let (i, j) = (self.i, self.j);
        match self.orient {
            Orientation::Up => [Self::down(i, j), Self::down(i - 1, j), Self::down(i, j - 1)],
            Orientation::Down => [Self::up(i, j), Self::up(i + 1, j), Self::up(i, j + 1)],
        }
    }

    pub fn is_adjacent(&self, other: &UnitTriangle) -> bool {
        self.neighbors().contains(other)
    }

    /// Edges as ordered vertex pairs, counterclockwise around the cell.
    pub fn edges_ccw(&self) -> [((i32, i32), (i32, i32)); 3] {
        let [a, b, c] = self.vertices();
        match self.orient {
            // (i,j) -> (i+1,j) -> (i,j+1) is counterclockwise
            Orientation::Up => [(a, b), (b, c), (c, a)],
            // (i+1,j) -> (i+1,j+1) -> (i,j+1) is counterclockwise
            Orientation::Down => [(a, c), (c, b), (b, a)],
        }
    }
}

/// Scan order: rows bottom to top, then left to right, `Up(i, j)` before `Down(i, j)`.
impl Ord for UnitTriangle {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.j, self.i, self.orient).cmp(&(other.j, other.i, other.orient))
    }
}

impl PartialOrd for UnitTriangle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for UnitTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.orient {
            Orientation::Up => "Up",
            Orientation::Down => "Down",
        };
        write!(f, "{tag}({}, {})", self.i, self.j)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LozengeOrientation {
    Left,
    Right,
    Vertical,
}

/// Two edge-adjacent unit triangles, one of each orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Lozenge {
    up: UnitTriangle,
    down: UnitTriangle,
}

impl Lozenge {
    /// `None` unless the cells are adjacent.
    pub fn new(a: UnitTriangle, b: UnitTriangle) -> Option<Self> {
        let (up, down) = match (a.orient, b.orient) {
            (Orientation::Up, Orientation::Down) => (a, b),
            (Orientation::Down, Orientation::Up) => (b, a),
            _ => return None,
        };
        up.is_adjacent(&down).then_some(Self { up, down })
    }

    pub fn up(&self) -> UnitTriangle {
        self.up
    }

    pub fn down(&self) -> UnitTriangle {
        self.down
    }

    pub fn orientation(&self) -> LozengeOrientation {
        let (i, j) = (self.up.i, self.up.j);
        if self.down == UnitTriangle::down(i, j) {
            LozengeOrientation::Right
        } else if self.down == UnitTriangle::down(i - 1, j) {
            LozengeOrientation::Left
        } else {
            LozengeOrientation::Vertical
        }
    }

    /// Row index of the lozenge's top edge or top vertex.
    pub fn top_row(&self) -> i32 {
        self.up.j + 1
    }

    /// Index of the `u = const` lattice line through the left side of a
    /// right lozenge. Meaningless for the other orientations.
    pub fn left_line(&self) -> i32 {
        self.up.i
    }

    pub fn vertices(&self) -> [(i32, i32); 4] {
        let (i, j) = (self.up.i, self.up.j);
        match self.orientation() {
            LozengeOrientation::Right => [(i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)],
            LozengeOrientation::Left => [(i, j), (i + 1, j), (i, j + 1), (i - 1, j + 1)],
            LozengeOrientation::Vertical => [(i, j), (i + 1, j - 1), (i + 1, j), (i, j + 1)],
        }
    }
}
