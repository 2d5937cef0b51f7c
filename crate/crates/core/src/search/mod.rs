//! Diophantine component analysis of the segment quartics and isomorph-free
//! enumeration of the graphs realizing each component.
//!
//! A disconnected graph whose attractor is `[-4/k, 0]` has independence
//! polynomial `1 + 16z + 20k·z² + 8k²·z³ + k³·z⁴`, and its components'
//! polynomials multiply to it. [`solve_components`] solves the coefficient
//! equations for each shape of factorization, [`enumerate_complements`] finds
//! the graphs with a given polynomial through their complements, and
//! [`realize_disconnected`] combines the two.

mod components;
mod enumerate;
mod realize;

pub use components::{dedup_symmetric, segment_quartic, solve_components, CaseKind, ComponentSolution};
pub use enumerate::{all_graphs, enumerate_complements, enumerate_for_poly, EnumConstraints, MAX_ENUM_VERTICES};
pub use realize::{realize_disconnected, FactorRealization, Realization, Verdict};

use crate::graph::GraphError;
use crate::poly::PolyError;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("segment index k must be in 1..=4, got {0}")]
    BadSegmentIndex(u32),
    #[error("enumeration supports at most {cap} vertices, got {n}")]
    CapExceeded { n: usize, cap: usize },
    #[error("{edges} edges do not fit on {n} vertices")]
    TooManyEdges { n: usize, edges: usize },
    #[error("target polynomial must have degree 1..=4 with constant term 1, got {0}")]
    UnsupportedTarget(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
