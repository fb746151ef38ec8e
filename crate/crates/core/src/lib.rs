//! Combinatorics and algebra of colored interval partitions: the
//! noncommutative Faà di Bruno Hopf algebra, its antipodes, the planar tree
//! families that index them, and substitution of noncommutative power series.

pub mod algebra;
pub mod checks;
pub mod error;
pub mod series;
pub mod trees;
pub mod words;

pub use algebra::{AlgebraElement, Antipode, Generator, HopfAlgebra, Monomial, TensorElement};
pub use error::{Error, Result};
pub use series::{FreeCoefficient, GeneralSeries, NCSeries, Side};
pub use trees::{PlanarForest, PlanarTree, TreeClass, VertexPath};
pub use words::{Color, ColorWord, ColoredIntervalPartition};
