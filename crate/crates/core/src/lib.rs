//! Inversion-set transfer `w(Φ_x) = Φ_y` in Coxeter systems, Coxeter squares
//! and `n`-cubes, and the correspondence between cubes in `A_n`, based
//! rectangle partitions of the root poset and binary trees.

pub mod cube;
pub mod error;
pub mod generic;
pub mod groupoid;
pub mod rect;
pub mod transfer;
pub mod typea;

pub use error::{Error, Result};
pub use generic::{CoxeterMatrix, GenericElement, GenericRoot, GenericSystem, RootTable, Scalar};
pub use typea::{GeneratorSet, Permutation, PositiveRoot, Rank, RootSet, SignedRoot, Word};

pub type GenericSystemF64 = GenericSystem<f64>;
pub type GenericSystemF32 = GenericSystem<f32>;
pub type GenericRootF64 = GenericRoot<f64>;
pub type GenericElementF64 = GenericElement<f64>;
