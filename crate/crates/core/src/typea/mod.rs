//! Exact arithmetic in the Coxeter system `A_n ≅ S_{n+1}`.

mod perm;
mod roots;

pub use perm::{all_permutations, GeneratorSet, Permutation, Rank, Word};
pub use roots::{act, inversion_set_of_word, root_data, DescentData, PositiveRoot, RootSet, SignedRoot};
