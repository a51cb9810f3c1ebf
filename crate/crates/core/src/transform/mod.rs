//! The Legendre transform and the geometric area identities around it.

mod area;
mod conjugate;

pub use area::{
    area_report_mixed, area_report_same_sign, area_tolerance, base_point, AreaPoint, AreaReport,
    QuadrantCase,
};
pub use conjugate::{
    conjugate_model, conjugate_point, double_transform, fenchel_young_residual, tangent_intercept,
    ConjugatePoint,
};
