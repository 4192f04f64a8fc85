//! Finite rings, their ideal lattices and radicals, and decision procedures
//! for S-prime and S-𝒥-ideal classes, with a property harness that checks
//! the classical results about those classes over a corpus of small rings.

pub mod context;
pub mod elemset;
pub mod error;
pub mod expr;
pub mod harness;
pub mod ideal;
pub mod predicate;
pub mod radical;
pub mod ring;
pub mod subset;

pub use context::RingContext;
pub use elemset::ElemSet;
pub use error::{Error, Result};
pub use ideal::{enumerate_ideals, IdealSet, LatticeIndex};
pub use ring::{Hom, Module, Ring};
