//! Circular arcs in 3D, tangent measurement, and the closed-form angle
//! bounds used to certify layouts.

mod arc;
mod clearance;
mod lemma;
mod vec3;

pub use arc::{CircularArc, Endpoint, Side};
pub use clearance::{arc_clearance, perturb, ClearanceReport, CloseArcs, PERTURB_ROUNDS};
pub use lemma::{angle_between, lemma1_delta, lemma2_delta};
pub use vec3::Vec3;

#[derive(Debug, Clone, Copy, PartialEq, thiserror::Error)]
pub enum GeometryError {
    #[error("arc endpoints coincide")]
    DegenerateChord,
    #[error("{name} = {value} is outside its valid range")]
    AngleOutOfRange { name: &'static str, value: f64 },
    #[error("non-finite coordinate")]
    NonFinite,
    #[error("zero-length direction vector")]
    ZeroVector,
    #[error("{name} = {value} is outside the domain of the bound")]
    DomainError { name: &'static str, value: f64 },
    #[error("arcs still too close after {0} perturbation rounds")]
    PerturbationFailed(usize),
}
