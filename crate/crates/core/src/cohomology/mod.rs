//! Cohomology calculators: line bundles on projective space, Ext tables
//! between twists, Lie algebra cohomology and odd Koszul complexes.

mod ce;
mod cech;
mod ext;
mod koszul;
mod nonfull;
mod sym;
mod table;

pub use ce::{ce_differential, chevalley_eilenberg};
pub use cech::{cech_line_bundle, closed_form_h0, closed_form_top};
pub use ext::{ext_convention_notes, ext_twisted, ExtDescriptor};
pub use koszul::{koszul_differential, koszul_odd};
pub use nonfull::nonfullness_ext;
pub use sym::{monomials, sym_power};
pub use table::CohomologyTable;
