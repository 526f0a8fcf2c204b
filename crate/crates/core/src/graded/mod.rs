//! Graded modules, their maps and the standard constructions on them.

mod hom;
mod induced;
mod module;
mod ops;

pub use hom::{find_isomorphism, hom_graded, MapSpace};
pub use induced::{
    evaluation_from_pieces, evaluation_map, free_cover, induced_module, sort_with_sign, wedge_left, wedge_sign,
    ExteriorBasis,
};
pub use module::{G0Module, GradedMap, GradedModule};
pub use ops::{
    change_basis, direct_sum, double_dual_iso, dual, image, kernel, right_twist, shift, submodule, sum_inclusion,
    sum_projection, tensor, tensor_blocks, truncate_above, truncate_below,
};
