//! Dilogarithm numerics built around the gemini function family
//! `g(x) = b ln((1 + a e^{-x/b}) / (1 - e^{-x/b}))`.
//!
//! The crate is split into five layers:
//!
//! * [`polylog`]: Li₂ (real and complex), Li₃, χ₂, Cl₂, ψ₁, Γ, ζ and named constants.
//! * [`analysis`]: quadrature, bracketed root finding and the named-constant registry.
//! * [`gemini`]: values, areas, fixed points, medians and scale-factor analytics.
//! * [`geometry`]: solids of revolution, raw moments and curvature of geminoids.
//! * [`catalog`]: a registry of dilogarithm identities with a sampling verifier.

pub mod analysis;
pub mod catalog;
pub mod error;
pub mod gemini;
pub mod geometry;
pub mod polylog;
pub mod tolerance;

pub use error::{Error, Result};
pub use num_complex::Complex64;

/// Complex number returned by every polylogarithm evaluation.
pub type ComplexValue = Complex64;
