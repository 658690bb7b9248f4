//! Complexes, resolutions, Ext and the homotopy category of projectives.

mod complex;
mod ext;
mod homotopy;
mod resolution;

pub use complex::{cone, find_quasi_iso, ChainMap, Complex};
pub use ext::{
    canonical_theta, ext_basis, ext_dim, ext_dim_modules, is_p_infty_object, yoneda_product,
    ExtClass, PInftyReport,
};
pub use homotopy::{chain_map_basis, ext_dim_via_hom_complex, hom_homotopy_dim};
pub use resolution::{minimal_projective_resolution, Resolution};
