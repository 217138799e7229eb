//! Truncated noncommutative polynomials, the Magnus expansion and the
//! unipotent matrix representation.

mod expand;
mod poly;
mod shuffle;
mod upsilon;

pub use expand::{c, equal_mod_fk, in_lower_central_term, magnus_expand};
pub use poly::{Monomial, TruncatedPolynomial};
pub use shuffle::{first_shuffle_violation, satisfies_shuffle_relations, shuffles, ShuffleSet};
pub use upsilon::{upsilon, CommPoly, Lambda, UnitriangularMatrix};
