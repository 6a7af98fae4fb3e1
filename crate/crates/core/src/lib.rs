//! Combinatorial calculus for Legendrian fronts, framed knot diagrams and
//! finite-order invariants.
//!
//! The crate is split along four lines:
//!
//! * [`fronts`]: x-ordered front words, their Thurston–Bennequin and rotation
//!   numbers, stabilizations and the Legendrian front moves.
//! * [`framed`]: signed Gauss codes with an integer framing offset, framed
//!   Reidemeister moves, framing ladders and discriminant-crossing counts
//!   along move sequences.
//! * [`vassiliev`]: singular diagrams, resolutions, alternating sums and the
//!   upward extension of invariant ladders along the framing direction.
//! * [`topology`]: finitely generated abelian groups, the condition rule
//!   engine, circle-bundle group normal forms and free-group word pairs.
//!
//! Everything is a pure function over immutable values.

pub mod framed;
pub mod fronts;
pub mod topology;
pub mod vassiliev;

mod sign;

pub use sign::Sign;
