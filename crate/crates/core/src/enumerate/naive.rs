//! Plain backtracking over tilings, used as an independent check on the sweep.

use std::collections::{BTreeMap, HashMap};

use crate::lattice::{Lozenge, Region, UnitTriangle, WeightScheme};

struct Search<'a> {
    cells: Vec<UnitTriangle>,
    partners: Vec<Vec<(usize, u32)>>,
    covered: Vec<bool>,
    hist: &'a mut BTreeMap<u32, u128>,
}

impl Search<'_> {
    fn run(&mut self, from: usize, weight: u32) {
        let Some(k) = (from..self.cells.len()).find(|&k| !self.covered[k]) else {
            *self.hist.entry(weight).or_default() += 1;
            return;
        };
        self.covered[k] = true;
        for idx in 0..self.partners[k].len() {
            let (p, w) = self.partners[k][idx];
            if !self.covered[p] {
                self.covered[p] = true;
                self.run(k + 1, weight + w);
                self.covered[p] = false;
            }
        }
        self.covered[k] = false;
    }
}

/// Exponent histogram of all tilings, visiting cells column by column.
pub(crate) fn histogram(region: &Region, scheme: WeightScheme) -> BTreeMap<u32, u128> {
    let mut cells: Vec<UnitTriangle> = region.iter().copied().collect();
    cells.sort_by_key(|c| (c.i, c.j, c.is_up()));
    let index: HashMap<UnitTriangle, usize> =
        cells.iter().enumerate().map(|(k, c)| (*c, k)).collect();
    let partners = cells
        .iter()
        .map(|c| {
            c.neighbors()
                .iter()
                .filter_map(|n| {
                    let &p = index.get(n)?;
                    let loz = Lozenge::new(*c, *n).expect("neighbours");
                    let w = crate::lattice::lozenge_exponent(&loz, region, scheme);
                    Some((p, w))
                })
                .collect()
        })
        .collect();
    let mut hist = BTreeMap::new();
    if cells.len() % 2 == 0 {
        let n = cells.len();
        Search {
            cells,
            partners,
            covered: vec![false; n],
            hist: &mut hist,
        }
        .run(0, 0);
    }
    hist
}
