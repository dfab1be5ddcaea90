//! Grid estimates of sup-norm deviation, modulus of continuity and total
//! variation.

mod deviation;
mod modulus;
mod variation;

pub use deviation::{
    grid_deviation, sup_deviation, DeviationProfile, SupOptions, REFINE_CANDIDATES,
};
pub use modulus::{
    family_modulus, modulus_of_continuity, window_cells, window_oscillation, ModulusEstimate,
    ModulusScope,
};
pub use variation::{
    refined_total_variation, total_variation, windowed_variation, windowed_variation_of,
    VariationEstimate, VariationProfile, VARIATION_REL_TOL,
};
