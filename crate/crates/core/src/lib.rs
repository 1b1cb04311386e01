//! Exact combinatorics for local Weyl modules of the current superalgebra
//! `sl(1|2)[t]`: super POP enumeration, graded characters by three
//! independent routes, and the dimension calculus of CV modules.

pub mod cvmod;
pub mod error;
pub mod partitions;
pub mod qalgebra;
pub mod superpop;
pub mod verify;
pub mod weylchar;

pub use error::{Error, Result};
pub use partitions::{CVIndex, Partition};
pub use qalgebra::{GradedCharacter, QPolynomial};
pub use superpop::{BasisTuple, PbwWord, SuperPop};
