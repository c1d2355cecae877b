//! Transfinite harmonic and biharmonic spline interpolation on concentric
//! spheres in `R^d`, exact best constants for the Poisson problem on an
//! annulus, and numerical certificates for the associated error bounds.
//!
//! Every computation decouples into spherical-harmonic channels `(k, l)`: a
//! field is expanded as `sum u_{k,l}(|x|) Y_{k,l}(x/|x|)`, the Laplacian acts
//! on `u_{k,l}` as the radial operator `L_k`, and each channel is a
//! one-dimensional spline problem solved in closed form.

pub mod biharmonic;
pub mod error;
pub mod field;
pub mod harmonic;
pub mod harness;
pub mod quadrature;
pub mod radial;
pub mod report;
pub mod sphere;
pub mod spline;
pub mod torsion;

pub use biharmonic::{fit_biharmonic_mode, interpolate_biharmonic, ModeSystem};
pub use error::{Error, Result};
pub use field::{standard_suite, TestField};
pub use harmonic::{fit_harmonic_mode, interpolate_harmonic};
pub use sphere::{eval_harmonic, fourier_laplace_coefficient, sphere_quadrature, ModeIndex, SphereQuadrature};
pub use spline::{eval_expansion, AnnularPartition, RadialSpline, SplineExpansion};
pub use torsion::{torsion_constant, torsion_function, Annulus, TorsionReport};
