//! Exact computations with graded modules over Lie superalgebras whose odd
//! part squares to zero.

pub mod cohomology;
pub mod corpus;
pub mod dsvariety;
pub mod error;
pub mod graded;
pub mod io;
pub mod linalg;
pub mod projstable;
pub mod random;
pub mod rigid;
pub mod superalg;

pub use error::{Error, Result};
