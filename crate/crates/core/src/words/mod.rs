//! Free-group words and standard sequences.

mod lyndon;
mod word;

pub use lyndon::{
    format_index, is_standard, mobius, parse_index, standard_bracket, standard_commutator, standard_sequences,
    standard_sequences_bounded, witt_number, StandardSequence, WittNumber, DEFAULT_ENUMERATION_BOUND,
};
pub use word::{commutator, nested_commutator, normalize, Letter, Word};
