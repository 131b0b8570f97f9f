//! Birkhoff's version of Hilbert's projective metric on concrete cones.
//!
//! The crate covers
//!
//! * [`cone`]: orthant, simplicial, polyhedral, PSD and Lorentz cones with
//!   the order bounds `M(x/y)`, `m(x/y)` and the Hilbert, Thompson and Funk
//!   distances;
//! * [`hilbert_geometry`]: the classical cross-ratio metric on polytopes;
//! * [`birkhoff`]: projective diameter, contraction ratio and certified power
//!   iteration for nonnegative matrices;
//! * [`embeddings`]: isometric embeddings of simplex and polytope geometries
//!   into normed spaces;
//! * [`jordan`]: spectral calculus in symmetric-matrix and spin-factor
//!   Jordan algebras;
//! * [`transfer`]: Perron–Frobenius operators of iterated function systems
//!   on Hölder cones;
//! * [`dynamics`]: orbits, period detection and period bounds for
//!   order-preserving homogeneous maps.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod birkhoff;
pub mod cone;
pub mod dynamics;
pub mod embeddings;
pub mod error;
pub mod hilbert_geometry;
pub mod jordan;
mod polytope;
pub mod rng;
pub mod transfer;

pub use cone::{homogenize, Cone, ConeKind, Membership, OrderBounds, PolytopeInput};
pub use error::{Error, Result};
pub use hilbert_geometry::{ChordEndpoints, ChordNorm, PolytopalDomain};
