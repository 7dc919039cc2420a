//! Numerical infrastructure: quadrature, bracketed roots and the named-constant registry.

mod constants;
mod quadrature;
mod roots;

pub use constants::{constant, constants_table, Defining, NamedConstant, Provenance};
pub(crate) use constants::value_of;
pub use quadrature::{integrate, Limit, QuadratureSpec};
pub use roots::{find_root, solve_nstep, solve_trinomial, StepSign};
