//! A model of the rank-one block: modules over a five-dimensional algebra,
//! translation to and from the wall, and complexes of functors.

pub mod algebra;
pub mod complex;
pub mod cross;
pub mod functor;
pub mod rank_one;

pub use algebra::{BlockAlgebra, BlockModule, Vertex};
pub use complex::{ChainComplex, ComplexMap, Component, FunctorComplex, Homology};
pub use cross::check_k0_cross;
pub use functor::{Adjunctions, Atom, Cat, Letter, Nat, Obj, Word};
pub use rank_one::{CatalogEntry, HomologyRow, RankOne, Translation};
