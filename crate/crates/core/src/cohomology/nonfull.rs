use crate::error::{Error, Result};
use crate::graded::G0Module;

use super::ce::chevalley_eilenberg;
use super::sym::sym_power;

/// `Ext^{i-j-n+1}_{g0}(V, S^{i-j-n}(g1) ⊗ W)` as Chevalley–Eilenberg
/// cohomology of `V* ⊗ S^{i-j-n}(g1) ⊗ W`; `n` is passed explicitly.
/// Zero when `i - j - n < 0` or the degree exceeds `dim g0`.
pub fn nonfullness_ext(v: &G0Module, w: &G0Module, i: i64, j: i64, n: usize) -> Result<usize> {
    if i <= j {
        return Err(Error::Precondition(format!("need i > j, got i = {i}, j = {j}")));
    }
    if v.alg() != w.alg() {
        return Err(Error::AlgebraMismatch);
    }
    let m = i - j - n as i64;
    if m < 0 {
        return Ok(0);
    }
    let degree = m + 1;
    if degree > v.alg().dim0() as i64 {
        return Ok(0);
    }
    let sym = sym_power(&G0Module::odd_part(v.alg().clone()), m as usize)?;
    let coeff = v.dual().tensor(&sym)?.tensor(w)?;
    Ok(chevalley_eilenberg(&coeff)?.get(degree))
}
