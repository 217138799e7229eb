//! Non-homogeneous cochains on `F/F_k`, Massey 2-cocycles and the central extension by `F_k/F_{k+1}`.

mod expr;
mod extension;
mod massey;

pub use expr::CochainExpr;
pub use extension::{
    evaluate_word_in_extension, pairing, pairing_paths, s_map, ExtensionBasis, ExtensionElement, ExtensionEvaluation,
    NilpotentElement, PairingPaths,
};
pub use massey::{defining_system, massey2, split_sum, DefiningSystem, SignConvention};
