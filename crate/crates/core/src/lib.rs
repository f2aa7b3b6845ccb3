//! Alternative finite difference WENO schemes of orders 3, 5, 7 and 9 for the
//! Euler, relativistic hydrodynamics and ten-moment systems.

// `!(x > 0.0)` is how admissibility checks also reject NaN, and stencil
// loops read clearer with explicit indices.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

pub mod error;
pub mod legendre;
pub mod order;
pub mod riemann;
pub mod systems;
pub mod weno_boundary;
pub mod weno_center;

pub use error::{Error, Result};
pub use order::SchemeOrder;
pub mod mesh;
pub mod scheme;
pub mod time;
pub mod harness;
pub mod config;
