//! One explicit tiling, chosen greedily in scan order.

use std::collections::{HashMap, VecDeque};

use crate::lattice::{Lozenge, Region, UnitTriangle};

struct Graph {
    cells: Vec<UnitTriangle>,
    /// neighbours sorted in scan order
    adj: Vec<Vec<usize>>,
    mate: Vec<Option<usize>>,
    fixed: Vec<bool>,
}

impl Graph {
    fn new(region: &Region) -> Self {
        let cells: Vec<UnitTriangle> = region.iter().copied().collect();
        let index: HashMap<UnitTriangle, usize> = cells.iter().enumerate().map(|(k, c)| (*c, k)).collect();
        let adj = cells
            .iter()
            .map(|c| {
                let mut n: Vec<usize> = c.neighbors().iter().filter_map(|n| index.get(n).copied()).collect();
                n.sort_unstable();
                n
            })
            .collect();
        let n = cells.len();
        Self {
            cells,
            adj,
            mate: vec![None; n],
            fixed: vec![false; n],
        }
    }

    /// Alternating path from the free vertex `from` to the free vertex `to`
    /// avoiding fixed cells; flips it on success.
    fn augment(&mut self, from: usize, to: Option<usize>) -> bool {
        let n = self.cells.len();
        let mut prev: Vec<Option<usize>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        let mut end = None;
        'bfs: while let Some(a) = queue.pop_front() {
            for &b in &self.adj[a] {
                if seen[b] || self.fixed[b] || self.mate[a] == Some(b) {
                    continue;
                }
                seen[b] = true;
                prev[b] = Some(a);
                match self.mate[b] {
                    None if to.map_or(true, |t| t == b) => {
                        end = Some(b);
                        break 'bfs;
                    }
                    None => {}
                    Some(m) => {
                        if !seen[m] && !self.fixed[m] {
                            seen[m] = true;
                            queue.push_back(m);
                        }
                    }
                }
            }
        }
        let Some(mut b) = end else { return false };
        loop {
            let a = prev[b].expect("path back to the start");
            let next = self.mate[a];
            self.mate[a] = Some(b);
            self.mate[b] = Some(a);
            if a == from {
                return true;
            }
            b = next.expect("inner path vertices are matched");
        }
    }
}

/// The tiling picked by covering cells in scan order, each with the first
/// neighbour (in scan order) that still leaves a tileable remainder.
/// `None` if the region has no tiling.
pub fn lex_first_tiling(region: &Region) -> Option<Vec<Lozenge>> {
    if !region.is_balanced() {
        return None;
    }
    let mut g = Graph::new(region);
    let n = g.cells.len();
    for k in 0..n {
        if g.cells[k].is_up() && g.mate[k].is_none() && !g.augment(k, None) {
            return None;
        }
    }
    let mut out = Vec::with_capacity(n / 2);
    for c in 0..n {
        if g.fixed[c] {
            continue;
        }
        let options: Vec<usize> = g.adj[c].iter().copied().filter(|&p| !g.fixed[p]).collect();
        let mut chosen = None;
        for p in options {
            if g.mate[c] == Some(p) {
                chosen = Some(p);
                break;
            }
            // rematch c with p, then repair the two vertices left over
            let saved = g.mate.clone();
            let (p0, c0) = (g.mate[c].expect("perfect matching"), g.mate[p].expect("perfect matching"));
            g.mate[p0] = None;
            g.mate[c0] = None;
            g.mate[c] = Some(p);
            g.mate[p] = Some(c);
            g.fixed[c] = true;
            g.fixed[p] = true;
            let ok = g.augment(c0, Some(p0));
            g.fixed[c] = false;
            g.fixed[p] = false;
            if ok {
                chosen = Some(p);
                break;
            }
            g.mate = saved;
        }
        let p = chosen.expect("a perfect matching always extends");
        g.fixed[c] = true;
        g.fixed[p] = true;
        out.push(Lozenge::new(g.cells[c], g.cells[p]).expect("neighbours"));
    }
    Some(out)
}
