//! Applications: line arrangements, cuspidal plane curves, canonical
//! degrees of curves on surfaces of general type.

mod arrangement;
mod canonical;
mod cusps;
mod inequality;

pub use arrangement::{
    check_arrangement, fermat_arrangement, ArrangementData, ArrangementReport, ArrangementStatus, InequalityLine,
};
pub use canonical::canonical_degree_bound;
pub use cusps::{
    compare_with_cusp_infimum, compare_with_sqrt, cusp_cost, cusp_count_bound, cusp_euler, cusp_ratio,
    cusp_ratio_optimize, CuspBoundQuery, CuspRatioOptimum,
};
pub use inequality::{check_singular_point_inequality, SingularPointQuery, SingularPointReport, SingularPointTerm};
