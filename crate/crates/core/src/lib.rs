//! Independence polynomials of simple graphs and the dynamics of their
//! reduced polynomials.
//!
//! - [`graph`]: bitset graphs, graph6, canonical forms, independence
//!   polynomials and edge statistics.
//! - [`poly`]: exact integer polynomials and positive factorizations.
//! - [`chebyshev`]: Chebyshev polynomials and their affine conjugates.
//! - [`dynamics`]: roots, backward orbits, Hausdorff distances, fixed points
//!   and escape-time rasters.
//! - [`classifier`]: exact attractor classification.
//! - [`search`]: component equations and isomorph-free graph enumeration.
//! - [`verify`]: the self-check suite used by `indatt verify`.

pub mod chebyshev;
pub mod classifier;
pub mod dynamics;
pub mod graph;
pub mod poly;
pub mod search;
pub mod verify;
