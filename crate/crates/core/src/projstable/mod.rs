//! Projectivity, the decomposition into an induced part and a reduced part,
//! and equality in the stable category.

mod decompose;
mod frobenius;
mod projective;
mod top;

pub use decompose::{decompose, Decomposition, DecompositionCheck};
pub use frobenius::{frobenius_check, FrobeniusReport};
pub use projective::{is_projective, stable_equal, ProjectivityResult, StableResult};
pub use top::{is_reduced, top_operator, top_operator_ordered, TopOddOperator};

use crate::error::{Error, Result};
use crate::superalg::SuperAlgebra;

/// The hypotheses under which complements are constructed: `g0` semisimple,
/// or `g0 = 0`.
pub(crate) fn require_semisimple(alg: &SuperAlgebra) -> Result<()> {
    if alg.dim0() == 0 || alg.even().is_semisimple() {
        Ok(())
    } else {
        Err(Error::NotSemisimple)
    }
}

pub(crate) fn require_odd(alg: &SuperAlgebra) -> Result<()> {
    if alg.dim1() == 0 {
        Err(Error::Precondition("dim g1 = 0: the top odd operator is the empty product".into()))
    } else {
        Ok(())
    }
}
