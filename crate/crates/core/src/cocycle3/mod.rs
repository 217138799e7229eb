//! Explicit 3-cocycles of `F/F_k`, the degree-3 basis census, and cocycles of central quotients.

mod census;
mod gamma;
mod quotient;

pub use census::{census_basis3, Census, CensusSlice};
pub use gamma::{
    b_correction, b_correction_printed, corrected_3cocycle, corrected_3cocycle_expanded, corrected_3cocycle_printed,
    gamma3, gamma_map, ThreeCocycleSpec,
};
pub use quotient::CentralQuotientGroup;
