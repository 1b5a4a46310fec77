//! Certified lower bounds on the size of triangulations of real Grassmann
//! manifolds `G_k(R^n)`.
//!
//! The pipeline: mod-2 cohomology (`gf2_ring`) supplies nonzero cup products,
//! which bound the number of vertices (`bounds`); rational Betti numbers from
//! q-binomial Poincaré polynomials (`poincare`) feed the manifold versions of
//! the Lower Bound Theorem, expressed through f/h/g-vector transforms
//! (`face_vectors`).

pub mod bounds;
pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod face_vectors;
pub mod gf2_ring;
pub mod poincare;

pub use error::{Error, Result};
