use serde::Serialize;

use crate::error::Result;

use super::cech::{cech_line_bundle, closed_form_h0};

/// One nonzero group `Ext^l(R(i), R(j)) ≅ U(g0) ⊗ S^{sym_degree}(E*) [⊗ Λ^{r+1}(E*)]`.
/// The `U(g0)` factor is recorded, never built.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtDescriptor {
    pub l: usize,
    pub sym_degree: i64,
    pub sym_dim: usize,
    pub top_twist_present: bool,
    pub ug0_factor: bool,
}

/// Nonzero Ext groups between twists of the structure sheaf on `P^r`,
/// read off `H^l(P^r, O(j - i))` with `Hom(O(a), O(b)) = S^{b-a}(E*)`.
/// Only `l = 0` and `l = r` can occur.
pub fn ext_twisted(i: i64, j: i64, r: usize) -> Result<Vec<ExtDescriptor>> {
    let d = j - i;
    let table = cech_line_bundle(r, d)?;
    let mut out = Vec::new();
    let h0 = table.get(0);
    if h0 > 0 {
        out.push(ExtDescriptor { l: 0, sym_degree: d, sym_dim: h0, top_twist_present: false, ug0_factor: true });
    }
    let top = table.get(r as i64);
    if top > 0 {
        let sym_degree = -d - r as i64 - 1;
        debug_assert_eq!(top, closed_form_h0(r, sym_degree));
        out.push(ExtDescriptor { l: r, sym_degree, sym_dim: top, top_twist_present: true, ug0_factor: true });
    }
    for l in 1..r as i64 {
        debug_assert_eq!(table.get(l), 0);
    }
    Ok(out)
}

/// Descriptions of the readings this table does not adopt, for reports.
pub fn ext_convention_notes(i: i64, j: i64, r: usize) -> Vec<String> {
    vec![
        format!(
            "adopted Hom(O(a),O(b)) = S^(b-a)(E*): Ext^0 uses S^(j-i) = S^({}); \
             the opposite index convention would use S^(i-j) = S^({})",
            j - i,
            i - j
        ),
        format!("top cohomology placed at l = r = {r}; the alternative count by dim g1 would place it at l = {}", r + 1),
    ]
}
