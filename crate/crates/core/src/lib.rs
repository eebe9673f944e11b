//! Exact computation of cohomological components of tensor products.
//!
//! The crate decides when the restriction map on line-bundle cohomology of a
//! flag variety along the diagonal is a nonzero map of modules, using the
//! inversion-set criterion on triples of Weyl group elements, and enumerates
//! the resulting components of `V(lambda') (x) V(mu')` together with the
//! surrounding representation-theoretic and polyhedral data.
//!
//! All arithmetic is exact.

pub mod error;
pub mod linalg;
pub mod lrcone;
pub mod prv;
pub mod reduction;
pub mod regression;
pub mod repthy;
pub mod rootsys;
pub mod schubert;
pub mod weylcomb;

pub use error::{Error, Result};
pub use rootsys::{
    ActionMode, DominantData, GlWeight, RootSystem, RootType, Weight, WeylElement, WeylGroup,
};
pub use weylcomb::{InvSet, Triple};
