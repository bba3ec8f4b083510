//! Virtual knot invariants of virtual braid closures.
//!
//! The crate builds virtual braid words (including the virtual torus families
//! `VT(p,q,n)` and `(i,j,k)`), traces their closures into Gauss diagrams, and
//! evaluates the P- and u-polynomials. The `unknotting` module produces the
//! explicit crossing-change sequences for the `(i,j,k)` family and checks them
//! against the P-polynomial lower bound; `search` enumerates virtualizations of
//! standard torus braids.

pub mod braid;
pub mod cli;
pub mod error;
pub mod gauss;
pub mod invariants;
pub mod polynomial;
pub mod search;
pub mod unknotting;

pub use braid::{
    apply_rewrite, make_ijk, make_vt, parse_braid, rewrite_moves, BraidLetter, BraidWord, FamilySpec,
    LetterKind, Permutation, Rewrite, Sign,
};
pub use error::{Error, Result};
pub use gauss::{
    flip, gauss_from_closure, linked, normalize_positive, r1_reduce, r2_reduce, simplify, ChordRef, Endpoint,
    GaussDiagram, Role,
};
pub use invariants::{chord_index, crossing_index, p_invariant, u_invariant, vu_lower_bound, UOrientation};
pub use polynomial::{poly_to_string, IndexPolynomial};
