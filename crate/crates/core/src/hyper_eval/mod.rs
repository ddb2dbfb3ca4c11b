//! Hypergeometric series at unit argument, the function `K`, and the
//! terminating `₄F₃(1)` identity it specializes to.

mod gauss;
mod k;
mod point;
mod series;
mod terminating;

pub use gauss::gauss_f21;
pub use k::{f43_star, f43_star_terminating, k_function, k_function_parts, pfq_unit, regularized_pfq_unit};
pub use point::{generic_position_forms, HyperplanePoint};
pub use series::{unit_series, SeriesOptions, SeriesResult};
pub use terminating::{
    terminating_f43_exact, terminating_f43_identity_check, terminating_identity_exact, terminating_invariance_exact,
};
