//! Dense numerical laboratory for the mean-field quantum laser master
//! equation: nonlinear GKSL dynamics on a truncated Fock⊗qubit space,
//! the closed-form states it converges to, and the stability analysis of
//! the associated Maxwell-Bloch (complex Lorenz) system.

pub mod analysis;
pub mod closed_forms;
pub mod error;
pub mod hilbert;
pub mod lindblad;
pub mod maxwell_bloch;
pub mod observables;
pub mod params;

// pub use error::CoreError;
// pub use hilbert::SpaceSpec;
// pub use lindblad::DensityMatrix;
// pub use maxwell_bloch::MBState;
// pub use params::LaserParams;
