//! Triangular-lattice geometry: cells, lozenges, the five region families,
//! positional weights, forced lozenges, splitting and the dual graph.

mod cell;
mod geometry;
mod ops;
mod region;
mod spec;
mod weights;

pub use cell::{Lozenge, LozengeOrientation, Orientation, UnitTriangle};
pub use geometry::{build_region, hexagon_at, layout, Dent, Hexagon, Layout};
pub use ops::{
    boundary_walks, dual_graph, eliminate_forced, in_cyclic_order, split_region, DualGraph,
    SplitCheck, SplitFailure,
};
pub use region::Region;
pub use spec::{Family, RegionSpec};
pub use weights::{lozenge_exponent, lozenge_weight, WeightScheme};
