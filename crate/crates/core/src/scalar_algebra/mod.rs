//! Exact arithmetic and lattice structure for the enriching lattices.

mod laws;
mod lattice;
mod scalar;

pub use laws::{check_laws, Law, LawOutcome, LawReport};
pub use lattice::{
    check_adjointness, EnrichingLattice, Kbar, KbarPlus, KbarPlusCart, LatticeName, Two,
};
pub use scalar::{
    bool_and, bool_implies, cart_implies, cart_tensor, ext_add, ext_inf, ext_sub, ext_sup,
    trunc_add, trunc_sub, ExtScalar, Real, Scalar, ScalarKind,
};
