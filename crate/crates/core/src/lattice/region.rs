use std::collections::{BTreeSet, HashSet, VecDeque};

use super::cell::{Orientation, UnitTriangle};
use super::geometry::Hexagon;

/// A finite set of unit triangles together with the two reference lines the
/// positional weights are measured from.
///
/// Sub-regions obtained by deleting cells keep the reference lines of the
/// region they came from, so weights stay comparable across a condensation
/// instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    cells: BTreeSet<UnitTriangle>,
    base_row: i32,
    se_line: i32,
    frame: Option<Hexagon>,
}

impl Region {
    /// Builds a region whose reference lines come from its own cells:
    /// the lowest row and the largest `u` coordinate of any vertex.
    pub fn from_cells(cells: impl IntoIterator<Item = UnitTriangle>) -> Self {
        let cells: BTreeSet<_> = cells.into_iter().collect();
        let base_row = cells
            .iter()
            .flat_map(|c| c.vertices())
            .map(|p| p.1)
            .min()
            .unwrap_or(0);
        let se_line = cells
            .iter()
            .flat_map(|c| c.vertices())
            .map(|p| p.0)
            .max()
            .unwrap_or(0);
        Self {
            cells,
            base_row,
            se_line,
            frame: None,
        }
    }

    pub fn with_reference(
        cells: impl IntoIterator<Item = UnitTriangle>,
        base_row: i32,
        se_line: i32,
    ) -> Self {
        Self {
            cells: cells.into_iter().collect(),
            base_row,
            se_line,
            frame: None,
        }
    }

    pub(crate) fn with_frame(mut self, frame: Hexagon) -> Self {
        self.frame = Some(frame);
        self
    }

    pub fn empty() -> Self {
        Self::with_reference([], 0, 0)
    }

    pub fn cells(&self) -> &BTreeSet<UnitTriangle> {
        &self.cells
    }

    pub fn iter(&self) -> impl Iterator<Item = &UnitTriangle> {
        self.cells.iter()
    }

    pub fn base_row(&self) -> i32 {
        self.base_row
    }

    pub fn se_line(&self) -> i32 {
        self.se_line
    }

    /// The bounding hexagon the region was cut from, if it came from a spec.
    pub fn frame(&self) -> Option<&Hexagon> {
        self.frame.as_ref()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, c: &UnitTriangle) -> bool {
        self.cells.contains(c)
    }

    pub fn up_count(&self) -> usize {
        self.cells.iter().filter(|c| c.is_up()).count()
    }

    pub fn down_count(&self) -> usize {
        self.cells.len() - self.up_count()
    }

    pub fn is_balanced(&self) -> bool {
        self.up_count() == self.down_count()
    }

    /// Neighbours of `c` that belong to the region.
    pub fn neighbors_in(&self, c: &UnitTriangle) -> impl Iterator<Item = UnitTriangle> + '_ {
        let ns = c.neighbors();
        ns.into_iter().filter(move |n| self.cells.contains(n))
    }

    /// Same reference lines, cells removed.
    pub fn without<'a>(&self, cells: impl IntoIterator<Item = &'a UnitTriangle>) -> Region {
        let mut out = self.clone();
        for c in cells {
            out.cells.remove(c);
        }
        out
    }

    /// Same reference lines, cells added.
    pub fn with<'a>(&self, cells: impl IntoIterator<Item = &'a UnitTriangle>) -> Region {
        let mut out = self.clone();
        out.cells.extend(cells.into_iter().copied());
        out
    }

    /// Same reference lines, only the cells kept by `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&UnitTriangle) -> bool) -> Region {
        let mut out = self.clone();
        out.cells.retain(|c| keep(c));
        out
    }

    pub fn is_subset(&self, other: &Region) -> bool {
        self.cells.is_subset(&other.cells)
    }

    /// Edge-connected components, each sorted in scan order.
    pub fn components(&self) -> Vec<Vec<UnitTriangle>> {
        let mut seen: HashSet<UnitTriangle> = HashSet::new();
        let mut out = Vec::new();
        for start in &self.cells {
            if !seen.insert(*start) {
                continue;
            }
            let mut comp = vec![*start];
            let mut queue = VecDeque::from([*start]);
            while let Some(c) = queue.pop_front() {
                for n in self.neighbors_in(&c) {
                    if seen.insert(n) {
                        comp.push(n);
                        queue.push_back(n);
                    }
                }
            }
            comp.sort();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Rows spanned by the cells, inclusive.
    pub fn row_range(&self) -> Option<(i32, i32)> {
        let lo = self.cells.first()?.j;
        let hi = self.cells.last()?.j;
        Some((lo, hi))
    }

    /// Range of `i` over the cells, inclusive.
    pub fn column_range(&self) -> Option<(i32, i32)> {
        let lo = self.cells.iter().map(|c| c.i).min()?;
        let hi = self.cells.iter().map(|c| c.i).max()?;
        Some((lo, hi))
    }

    /// Number of cells of the given orientation.
    pub fn count(&self, orient: Orientation) -> usize {
        self.cells.iter().filter(|c| c.orient == orient).count()
    }

    /// 64-bit FNV-1a digest of the cell set and reference lines.
    pub fn digest(&self) -> u64 {
        const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
        const PRIME: u64 = 0x0100_0000_01b3;
        let mut h = OFFSET;
        let mut eat = |x: i32| {
            for b in x.to_le_bytes() {
                h ^= b as u64;
                h = h.wrapping_mul(PRIME);
            }
        };
        eat(self.base_row);
        eat(self.se_line);
        for c in &self.cells {
            eat(c.i);
            eat(c.j);
            eat(c.is_up() as i32);
        }
        h
    }
}

impl<'a> IntoIterator for &'a Region {
    type Item = &'a UnitTriangle;
    type IntoIter = std::collections::btree_set::Iter<'a, UnitTriangle>;

    fn into_iter(self) -> Self::IntoIter {
        self.cells.iter()
    }
}
