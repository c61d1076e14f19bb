//! Structural decompositions of `I_n` as an `A_n`-bimodule.

mod filtration;
mod kernel;
mod quotient;
mod socle;
mod split;
mod weyl;

pub use filtration::{
    bimodule_filtration_dims, multiplicity_report, MultiplicityReport, MAX_FILTRATION_INDEX,
    STABLE_WINDOW,
};
pub use kernel::{h_difference, kernel_witness_check};
pub use quotient::{project_bn, BnElement};
pub use socle::{census, label_components, socle_level, socle_member, CensusLabel, Label};
pub use split::{q_dims, split, SplitTriple};
pub use weyl::{to_weyl, weyl_monomial, WeylDisplay, WeylElement};
