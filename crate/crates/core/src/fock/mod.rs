//! Exact evolution in the invariant sectors of the trilinear Hamiltonian,
//! used as an independent numerical oracle for the closed forms.

mod coherent;
mod compare;
mod oracle;
mod sector;
pub mod tridiag;

pub use coherent::{coherent_weights, CoherentWeights, ALPHA_CAP, DEFAULT_TAIL_TOL};
pub use compare::{compare, fit_slope, scaling_chis, QuantitySlope, ScalingPoint, ScalingReport, CLAIMED, INFORMATIONAL, REQUIRED_SLOPE};
pub use oracle::oracle_moments;
pub use sector::{build_sector, evolve_sector, SectorState, BOUNDARY_TOL};
