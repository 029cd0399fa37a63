//! Exact computations with Hecke algebras, Kazhdan-Lusztig bases and the
//! Grothendieck group of the principal block of category O, together with a
//! concrete model of the rank-one principal block on which the wall-crossing
//! derived equivalences can be checked on the nose.

pub mod block;
pub mod error;
pub mod hecke;
pub mod k0;
pub mod kl_oracle;
pub mod linalg;
pub mod report;
pub mod ring;
pub mod suite;
pub mod weyl;

pub use block::{BlockModule, RankOne};
pub use error::{Error, Result};
pub use hecke::{DualVariant, HeckeAlgebra, HeckeElt, KlVariant};
pub use k0::{BasisKind, K0Class, K0Model, WallVariant};
pub use report::{Check, VerificationReport};
pub use ring::{LaurentPoly, Substitution};
pub use suite::{BlockSuite, Suite};
pub use weyl::{CartanDatum, CartanLetter, WeylElt, WeylGroup};
