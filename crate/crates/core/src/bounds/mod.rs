//! Edge clique covers, chromatic numbers and the bound calculators built on them.

mod chromatic;
mod clique_cover;
mod formulas;
mod report;

pub use chromatic::{chromatic_number, CHROMATIC_MAX_N};
pub use clique_cover::{edge_clique_cover, edge_clique_cover_capped, CliqueCover, DEFAULT_CLIQUE_COVER_CAP};
pub use formulas::{
    chromatic_boxicity_check, chromatic_upper_bound, focal_count, multipartite_mycielski_bounds,
    mycielski_kn_boxicity, mycielski_lower_bound, mycielski_upper_bound, needs_extra_part, ChromaticCheck,
    MultipartiteBounds,
};
pub use report::{bounds_report, BoundsReport, Tagged, REPORT_HEADER};
