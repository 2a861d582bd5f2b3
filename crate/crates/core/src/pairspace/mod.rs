//! Surface pairs `(X, D)`: global orbifold Euler numbers and the
//! inequalities they satisfy.

mod assembly;
mod checks;
mod types;

pub use assembly::{
    component_euler_top, effectivity, euler_orbifold_global, euler_top_curve, pair_kd_squared, total_degree,
};
pub use checks::{
    check_bmy, check_multiplicity_bound, max_curve_canonical_degree, BmyReport, MultiplicityBoundReport, Verdict,
};
pub use types::{ComponentData, Intersections, PairDescription, SingularPointData, SurfaceData, SurfaceMode};
