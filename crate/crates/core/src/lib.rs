//! Generalized metric spaces valued in `K̄ = K ∪ {-∞, ∞}` and `K̄`-extended
//! L-convex sets, with the constructions that make them dual to each other.
//!
//! The crate is organised bottom-up:
//!
//! * [`scalar_algebra`]: extended scalars and the four enriching lattices.
//! * [`enriched_cat`]: finite categories enriched in any of those lattices,
//!   their functors, canonical orderings, presheaves and Yoneda embeddings.
//! * [`lconvex`]: extended L-convex sets stored as difference-bound matrices.
//! * [`duality`]: the object, map and ordering dualities between the two.
//! * [`classify`]: the ten shapes of two-point instances.

pub mod classify;
pub mod duality;
pub mod enriched_cat;
mod error;
pub mod lconvex;
mod matrix;
pub mod scalar_algebra;

pub use error::{Error, Result};
pub use matrix::SquareMatrix;
pub use scalar_algebra::{EnrichingLattice, ExtScalar, Kbar, Real, Scalar, ScalarKind};
pub use classify::{Family, TwoPointShape};
pub use duality::Homomorphism;
pub use enriched_cat::{KCategory, Presheaf, VCategory, VFunctor};
pub use lconvex::{GeneratorSet, LConvexSet, PointVector, RawConstraints};
