//! Decision procedures for finitely presented ordered Abelian groups.
//!
//! The crate decides forking independence, classifies cuts, computes normal
//! forms and invariant-extension-space descriptors, and evaluates spines, for
//! three families of structures:
//!
//! * dense linear orders ([`dlo`]),
//! * presented ordered ℚ-vector spaces, i.e. lexicographic towers of
//!   real-algebraic slots ([`ovs`], [`doag`]),
//! * regular ordered Abelian groups in the Presburger language ([`roag`]).
//!
//! Everything is exact: rationals are arbitrary precision, real algebraic
//! numbers carry a squarefree defining polynomial and an isolating interval,
//! and no floating point is used anywhere.

pub mod dlo;
pub mod doag;
pub mod error;
pub mod exactnum;
pub mod linlex;
pub mod oracle;
pub mod ovs;
pub mod roag;

pub use error::Error;
