//! Exact computations in free Milnor groups.
//!
//! Words in meridians ([`words`]) are mapped by the Magnus expansion
//! ([`magnus`]) into the reduced ring of square-free non-commutative
//! polynomials ([`series`]). On top of that sit Milnor invariants of
//! string-link style presentations ([`links`]) and a verifier for a
//! five-fold commutator obstruction with parametric handle meridians
//! ([`obstruction`]).

pub mod links;
pub mod magnus;
pub mod obstruction;
pub mod poly;
pub mod ring;
pub mod series;
pub mod words;

pub use magnus::{expand, is_trivial_mf, mf_equal, ExpansionContext, MagnusError};
pub use poly::{IntPolynomial, Unknown};
pub use ring::Coefficient;
pub use series::{Monomial, Series, SeriesError, VarSet};
pub use words::{
    commutator, conjugate, milnor_relator, parse_word, reduce, Alphabet, Generator, Word,
};
