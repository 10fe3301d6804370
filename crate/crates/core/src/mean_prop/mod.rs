//! Two mean proportionals between two lines by the constructions of Heron
//! (with Apollonius' circle variant), Philo, Diocles and Nicomedes.
//!
//! Every construction is a figure depending on one free parameter; the
//! parameter is located by scanning for a sign change of a defect and then
//! bisecting with exact rational parameters.

mod bracket;
mod curves;
mod methods;
mod neusis;

pub use curves::{
    circle_point, cissoid_check, cissoid_point, cissoid_points, conchoid_point, conchoid_points, conchoid_residual,
    CissoidCheck, CurveKind, CurveSampler,
};
pub use methods::{
    scale_solid_ratio, solve, solve_diocles, solve_heron_apollonius, solve_nicomedes, solve_philo, HeronVariant,
    MeanPropProblem, MeanPropResult, Method, SCAN_SAMPLES,
};
pub use neusis::{neusis_direction, solve_neusis, NeusisProblem, NeusisSolution, DEFAULT_SAMPLES};
