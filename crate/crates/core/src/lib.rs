//! Desk-scale laboratory for the Banach-Mazur game and the order invariants
//! around it.
//!
//! The crate is organised by subject:
//!
//! * [`poset`] - finite posets, antichains, Souslin number, dense subsets,
//!   Noetherian type, down-set reduction and the Boolean completion.
//! * [`topology`] - finite topological spaces, regular-open algebras and the
//!   space/poset translation of cellularity and pi-Noetherian type.
//! * [`ordinal`] - symbolic ordinals with aleph-indexed terms, cardinal normal
//!   forms, truncation, depth and normal segments.
//! * [`game`] - the Banach-Mazur referee over pluggable region systems.
//! * [`galvin`] - coded pi-bases and the 2-tactic obtained from a
//!   full-information winning strategy.
//! * [`hechler`] - the Hechler forcing order on finitely represented
//!   conditions.
//! * [`session`] - interactive game sessions shared by the CLI, the HTTP
//!   service and the Python bindings.
//! * [`text`] - line-oriented file formats for posets and spaces.

pub mod cardinal;
pub mod galvin;
pub mod game;
pub mod hechler;
pub mod ordinal;
pub mod poset;
pub mod session;
pub mod text;
pub mod topology;

pub use cardinal::ExtendedCardinal;
pub use ordinal::{CardinalSym, Ordinal};
pub use poset::FinitePoset;
pub use topology::FiniteSpace;
