//! Invariant differential forms on the Magnus image: β-coordinates, the dX coframe,
//! the 1-forms `γ_J` and the Massey 2-forms.

mod forms;
mod gamma;

pub use forms::{Action, BetaPolynomial, DifferentialForm, IndexWord};
pub use gamma::{gamma_form, massey_2form, massey_bridge, split_wedge, structure_sign};
