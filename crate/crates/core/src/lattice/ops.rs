use std::collections::{BTreeSet, HashMap};
use std::fmt;

use super::cell::{Lozenge, UnitTriangle};
use super::region::Region;
use super::weights::{lozenge_exponent, lozenge_weight, WeightScheme};
use crate::qalgebra::QPoly;

/// Removes forced lozenges until none is left.
///
/// Returns the reduced region and the product of the removed weights. If
/// some cell is left with no partner the region has no tiling, and the
/// result is the empty region with the zero polynomial.
pub fn eliminate_forced(region: &Region, scheme: WeightScheme) -> (Region, QPoly) {
    let mut cells: BTreeSet<UnitTriangle> = region.cells().clone();
    let mut exponent: u64 = 0;
    let degree = |cells: &BTreeSet<UnitTriangle>, c: &UnitTriangle| {
        c.neighbors().iter().filter(|n| cells.contains(n)).count()
    };
    let mut stack: Vec<UnitTriangle> = cells.iter().copied().collect();
    stack.reverse();
    while let Some(c) = stack.pop() {
        if !cells.contains(&c) {
            continue;
        }
        match degree(&cells, &c) {
            0 => return (Region::with_reference([], region.base_row(), region.se_line()), QPoly::zero()),
            1 => {
                let partner = c
                    .neighbors()
                    .into_iter()
                    .find(|n| cells.contains(n))
                    .expect("degree one");
                let loz = Lozenge::new(c, partner).expect("neighbours form a lozenge");
                exponent += lozenge_exponent(&loz, region, scheme) as u64;
                cells.remove(&c);
                cells.remove(&partner);
                for n in partner.neighbors().into_iter().chain(c.neighbors()) {
                    if cells.contains(&n) {
                        stack.push(n);
                    }
                }
            }
            _ => {}
        }
    }
    let reduced = region.filter(|c| cells.contains(c));
    let exponent = u32::try_from(exponent).expect("forced weight exponent fits in u32");
    (reduced, QPoly::q_pow(exponent))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitFailure {
    NotSubset,
    Unbalanced { up: usize, down: usize },
    /// Part cells of both orientations touch the rest.
    MixedBorder { up: UnitTriangle, down: UnitTriangle },
}

impl fmt::Display for SplitFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SplitFailure::NotSubset => write!(f, "part is not contained in the region"),
            SplitFailure::Unbalanced { up, down } => {
                write!(f, "part is not balanced ({up} up, {down} down)")
            }
            SplitFailure::MixedBorder { up, down } => {
                write!(f, "both {up} and {down} run along the border")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitCheck {
    Valid,
    Invalid(SplitFailure),
}

impl SplitCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, SplitCheck::Valid)
    }
}

/// Checks the separating condition for splitting `region` into `part` and
/// the rest: `part` is balanced, and the part cells along the border all
/// have one orientation.
///
/// The condition is taken over the whole border. Asking it only side by
/// side would accept a single lozenge in the middle of a hexagon, whose
/// removal does not factor the generating function.
pub fn split_region(region: &Region, part: &Region) -> SplitCheck {
    if !part.is_subset(region) {
        return SplitCheck::Invalid(SplitFailure::NotSubset);
    }
    if !part.is_balanced() {
        return SplitCheck::Invalid(SplitFailure::Unbalanced {
            up: part.up_count(),
            down: part.down_count(),
        });
    }
    let on_border = |c: &&UnitTriangle| region.neighbors_in(c).any(|n| !part.contains(&n));
    let up = part.iter().filter(on_border).find(|c| c.is_up());
    let down = part.iter().filter(on_border).find(|c| !c.is_up());
    match (up, down) {
        (Some(&up), Some(&down)) => SplitCheck::Invalid(SplitFailure::MixedBorder { up, down }),
        _ => SplitCheck::Valid,
    }
}

/// The planar bipartite dual: up cells on one side, down cells on the other,
/// one weighted edge per shared lattice edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualGraph {
    pub ups: Vec<UnitTriangle>,
    pub downs: Vec<UnitTriangle>,
    /// `(index into ups, index into downs, weight)`.
    pub edges: Vec<(usize, usize, QPoly)>,
}

impl DualGraph {
    pub fn vertex_count(&self) -> usize {
        self.ups.len() + self.downs.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }
}

pub fn dual_graph(region: &Region, scheme: WeightScheme) -> DualGraph {
    let ups: Vec<_> = region.iter().filter(|c| c.is_up()).copied().collect();
    let downs: Vec<_> = region.iter().filter(|c| !c.is_up()).copied().collect();
    let down_index: HashMap<UnitTriangle, usize> =
        downs.iter().enumerate().map(|(k, d)| (*d, k)).collect();
    let mut edges = Vec::new();
    for (ui, u) in ups.iter().enumerate() {
        for d in u.neighbors() {
            if let Some(&di) = down_index.get(&d) {
                let loz = Lozenge::new(*u, d).expect("adjacent");
                edges.push((ui, di, lozenge_weight(&loz, region, scheme)));
            }
        }
    }
    DualGraph { ups, downs, edges }
}

/// The six cells around lattice point `p`, counterclockwise, sector `k`
/// lying between directions `k` and `k + 1` of
/// `(1,0), (0,1), (-1,1), (-1,0), (0,-1), (1,-1)`.
fn fan((u, v): (i32, i32)) -> [UnitTriangle; 6] {
    [
        UnitTriangle::up(u, v),
        UnitTriangle::down(u - 1, v),
        UnitTriangle::up(u - 1, v),
        UnitTriangle::down(u - 1, v - 1),
        UnitTriangle::up(u, v - 1),
        UnitTriangle::down(u, v - 1),
    ]
}

const DIRS: [(i32, i32); 6] = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];

/// Boundary cycles of the region, each given as the sequence of cells met
/// while walking the cycle with the region on the left.
///
/// At a vertex the walk lists every cell of the fan it sweeps past, so the
/// first cycle (the one through the lowest-leftmost vertex) is the outer
/// face of the dual graph read counterclockwise.
pub fn boundary_walks(region: &Region) -> Vec<Vec<UnitTriangle>> {
    let present = |c: &UnitTriangle| region.contains(c);
    // outgoing boundary edge at (vertex, direction) -> arc of fan sectors
    let mut points: BTreeSet<(i32, i32)> = BTreeSet::new();
    for c in region {
        points.extend(c.vertices());
    }
    // points sorted by (v, u) so the first is the lowest-leftmost
    let mut ordered: Vec<(i32, i32)> = points.iter().copied().collect();
    ordered.sort_by_key(|p| (p.1, p.0));

    let mut used: BTreeSet<((i32, i32), usize)> = BTreeSet::new();
    let mut walks = Vec::new();
    for &start in &ordered {
        let f = fan(start);
        for k in 0..6 {
            let out = present(&f[k]) && !present(&f[(k + 5) % 6]);
            if !out || used.contains(&(start, k)) {
                continue;
            }
            let mut walk = Vec::new();
            let (mut p, mut dir) = (start, k);
            loop {
                used.insert((p, dir));
                let q = (p.0 + DIRS[dir].0, p.1 + DIRS[dir].1);
                // arrive at q along the ray pointing back to p
                let back = (dir + 3) % 6;
                let fq = fan(q);
                // sector back-1 is on the left of the incoming edge; sweep clockwise
                let mut s = (back + 5) % 6;
                loop {
                    walk.push(fq[s]);
                    let prev = (s + 5) % 6;
                    if !present(&fq[prev]) {
                        break;
                    }
                    s = prev;
                }
                p = q;
                dir = s;
                if p == start && dir == k {
                    break;
                }
            }
            walks.push(walk);
        }
    }
    walks
}

/// Whether the cells appear in this cyclic order around one face.
///
/// Each cell is located at its first occurrence on a boundary walk (outer
/// face counterclockwise, holes clockwise); `None` if no single walk meets
/// every cell.
pub fn in_cyclic_order(region: &Region, cells: &[UnitTriangle]) -> Option<bool> {
    boundary_walks(region).iter().find_map(|walk| {
        let pos: Vec<usize> = cells
            .iter()
            .map(|c| walk.iter().position(|x| x == c))
            .collect::<Option<_>>()?;
        let distinct: BTreeSet<_> = pos.iter().collect();
        if distinct.len() != pos.len() {
            return Some(false);
        }
        let descents = (0..pos.len())
            .filter(|&k| pos[k] > pos[(k + 1) % pos.len()])
            .count();
        Some(descents == 1)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{build_region, RegionSpec};

    #[test]
    fn no_forced_lozenges_in_a_hexagon() {
        let r = build_region(&RegionSpec::hex(1, 1, 1));
        let (red, w) = eliminate_forced(&r, WeightScheme::Wt2);
        assert_eq!(red, r);
        assert!(w.is_one());
    }

    #[test]
    fn lone_cell_is_untileable() {
        let r = Region::from_cells([UnitTriangle::up(0, 0)]);
        let (red, w) = eliminate_forced(&r, WeightScheme::Unweighted);
        assert!(red.is_empty());
        assert!(w.is_zero());
    }

    #[test]
    fn single_lozenge_is_forced() {
        let r = Region::with_reference([UnitTriangle::up(0, 3), UnitTriangle::down(0, 3)], 0, 5);
        let (red, w) = eliminate_forced(&r, WeightScheme::Wt2);
        assert!(red.is_empty());
        assert_eq!(w, QPoly::q_pow(4));
        let (_, w1) = eliminate_forced(&r, WeightScheme::Wt1);
        assert_eq!(w1, QPoly::q_pow(5));
    }

    #[test]
    fn dual_graph_counts() {
        let g = dual_graph(&build_region(&RegionSpec::hex(1, 1, 1)), WeightScheme::Unweighted);
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 6));
        let g = dual_graph(&build_region(&RegionSpec::hex(2, 2, 2)), WeightScheme::Unweighted);
        assert_eq!((g.vertex_count(), g.edge_count()), (24, 30));
        let g = dual_graph(&Region::from_cells([UnitTriangle::up(0, 0)]), WeightScheme::Wt1);
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
    }

    #[test]
    fn split_of_single_cell_is_unbalanced() {
        let r = build_region(&RegionSpec::hex(1, 1, 1));
        let part = r.filter(|c| *c == UnitTriangle::up(0, 0));
        assert!(matches!(
            split_region(&r, &part),
            SplitCheck::Invalid(SplitFailure::Unbalanced { .. })
        ));
    }

    #[test]
    fn outer_walk_of_unit_hexagon() {
        let r = build_region(&RegionSpec::hex(1, 1, 1));
        let walks = boundary_walks(&r);
        assert_eq!(walks.len(), 1);
        // each boundary vertex of the unit hexagon sweeps two cells
        assert_eq!(walks[0].len(), 12);
        let cells: BTreeSet<_> = walks[0].iter().copied().collect();
        assert_eq!(cells.len(), 6);
    }

    #[test]
    fn cyclic_order_on_unit_hexagon() {
        let r = build_region(&RegionSpec::hex(1, 1, 1));
        let outer = &boundary_walks(&r)[0];
        let mut firsts: Vec<UnitTriangle> = Vec::new();
        for c in outer {
            if !firsts.contains(c) {
                firsts.push(*c);
            }
        }
        let four = [firsts[0], firsts[1], firsts[2], firsts[3]];
        assert_eq!(in_cyclic_order(&r, &four), Some(true));
        let swapped = [firsts[0], firsts[2], firsts[1], firsts[3]];
        assert_eq!(in_cyclic_order(&r, &swapped), Some(false));
        let rotated = [firsts[2], firsts[3], firsts[0], firsts[1]];
        assert_eq!(in_cyclic_order(&r, &rotated), Some(true));
    }

    #[test]
    fn hole_gives_second_walk() {
        let h = build_region(&RegionSpec::hex(3, 3, 3));
        let r = h.without(&[UnitTriangle::up(0, 2)]);
        assert_eq!(boundary_walks(&r).len(), 2);
    }
}
