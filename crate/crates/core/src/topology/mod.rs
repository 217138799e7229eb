//! Milnor invariants of longitude words, Johnson homomorphisms of free-group endomorphisms,
//! and the vanishing criterion for their Morita lift.

mod johnson;
mod milnor;

pub use johnson::{johnson_tau, morita_vanishes, torelli_depth, FreeEndomorphism, JohnsonValue};
pub use milnor::{LongitudeSystem, MuCrosscheck};
