//! Exact diagonal reduction of matrices over Bezout rings, commutative or not.
//!
//! Rings plug in through [`Ring`]; reductions return the diagonal form together
//! with invertible row and column transforms and their inverses.

pub mod error;
pub mod instances;
pub mod matrix;
pub mod oracle;
pub mod reduction;
pub mod ring;

pub use error::{Error, ParseError, Result};
pub use matrix::{apply_elementary, multiply, verify_transform_pair, DiagonalForm, ElementaryOp, Matrix, TransformPair};
pub use ring::{Capabilities, Ring, Side};
