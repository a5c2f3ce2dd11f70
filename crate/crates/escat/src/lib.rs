//! Boundary-integral solver for two-dimensional time-harmonic elastic wave
//! scattering by unbounded rough surfaces with a Dirichlet condition.
//!
//! The scattered field is represented as a combined double/single-layer
//! potential over the surface; the resulting second-kind integral equation
//! is discretized with a Nystrom scheme that treats the periodic logarithmic
//! singularity with trigonometric quadrature weights and the smooth remainder
//! with the trapezoidal rule.
//!
//! Pipeline: [`surface`] supplies geometry, [`navier_green`] the elastic
//! Green tensor and traction kernels, [`kernel_split`] the log/smooth kernel
//! split with stable diagonal limits, [`quadrature`] the weights and knots,
//! [`nystrom_solver`] the dense collocation solve, [`fields`] incident and
//! scattered field evaluation, and [`experiments`] the reproducible error
//! studies behind the `escat` command-line tool.

// Compile and run every code block of the README and the book as doc-tests
// so the prose cannot drift from the library.
#[cfg(doctest)]
mod guide {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/surfaces.md")]
    mod surfaces {}
    #[doc = include_str!("../../../book/src/greens-tensor.md")]
    mod greens_tensor {}
    #[doc = include_str!("../../../book/src/kernel-split.md")]
    mod kernel_split_chapter {}
    #[doc = include_str!("../../../book/src/quadrature.md")]
    mod quadrature_chapter {}
    #[doc = include_str!("../../../book/src/solver.md")]
    mod solver_chapter {}
    #[doc = include_str!("../../../book/src/fields.md")]
    mod fields_chapter {}
    #[doc = include_str!("../../../book/src/experiments.md")]
    mod experiments_chapter {}
}

pub mod experiments;
pub mod fields;
pub mod kernel_split;
mod linalg;
pub mod navier_green;
pub mod nystrom_solver;
pub mod quadrature;
pub mod specfun;
pub mod surface;
