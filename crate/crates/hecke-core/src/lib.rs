//! Combinatorics of almost normal subgroup pairs over concrete finitely
//! generated group families.
//!
//! The crate materializes balls of the coset space `X = Gamma / Lambda`,
//! enumerates double cosets and commensuration indices, approximates the
//! completion of the pair by finite permutation groups level by level,
//! computes exact structure constants of the double-coset convolution
//! algebra, and certifies positive-type / conditionally-negative-type
//! kernels on finite balls.

pub mod error;
pub mod group;
pub mod pair;

pub use error::{CosetError, GroupError, KernelError, LevelError, ParseError};
pub use group::GroupElement;
pub use pair::{Budgets, Family, PairPresentation};
