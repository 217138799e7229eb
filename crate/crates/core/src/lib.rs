//! Exact computation in the free nilpotent quotients `F/F_k`.
//!
//! The crate is organised bottom-up:
//!
//! * [`words`]: free-group words, standard (Lyndon) sequences, Witt numbers
//!   and standard commutators.
//! * [`magnus`]: the truncated Magnus expansion, coefficient functionals,
//!   the unipotent representation `Υ_k` and shuffle relations.
//! * [`cochain`]: evaluable cochains on `F/F_k`, coboundary and cup
//!   product, defining systems, Massey 2-cocycles, the central extension
//!   `F/F_{k+1} → F/F_k` and the pairing with relators.
//! * [`cocycle3`]: explicit 3-cocycles, the degree-3 census and 2-/3-cocycles
//!   of quotients by central elements.
//! * [`topology`]: Milnor invariants of longitude systems and Johnson
//!   homomorphisms of free-group endomorphisms.
//! * [`derham`]: invariant differential forms on the image of the Magnus
//!   expansion.
//!
//! All arithmetic is over arbitrary-precision integers.

pub mod cochain;
pub mod cocycle3;
pub mod derham;
pub mod error;
pub mod magnus;
pub mod sample;
pub mod topology;
pub mod words;

pub use error::{Error, Result};
pub use magnus::{c, equal_mod_fk, magnus_expand, upsilon, TruncatedPolynomial};
pub use words::{commutator, standard_commutator, standard_sequences, witt_number, StandardSequence, Word};
