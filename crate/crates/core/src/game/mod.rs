//! The Banach-Mazur game.
//!
//! EMPTY opens with `U_0`, NONEMPTY answers `V_0 ⊆ U_0`, EMPTY continues with
//! `U_1 ⊆ V_0`, and so on. NONEMPTY wins a play when the intersection of the
//! chain is nonempty. Plays are truncated at a horizon; a win is only ever
//! *certified* by a concrete witness point, otherwise the outcome is
//! `Undetermined`.
//!
//! Spaces are symbolic: a [`RegionSystem`] decides containment between
//! descriptors of nonempty open sets.

mod baire;
mod interval;
mod players;
mod poset_regions;
mod referee;
mod transcript;

use std::fmt::Debug;

use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::cardinal::ExtendedCardinal;

pub use baire::{BaireClopen, BairePoint, BaireSpace};
pub use interval::{IntervalSystem, IntervalUnion};
pub use players::{
    closure_refinement_strategy, random_empty_player, ClosureRefinement, RandomEmpty,
    ScriptedEmpty, TacticStrategy,
};
pub use poset_regions::{DownSet, PosetRegions};
pub use referee::{run_game, Game};
pub use transcript::{Outcome, Round, Transcript};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("horizon must be at least 1")]
    ZeroHorizon,
    #[error("{system}: {what} is not supported")]
    Unsupported {
        system: &'static str,
        what: &'static str,
    },
    #[error("cannot parse region `{0}`")]
    Parse(String),
    #[error("{0}")]
    Invalid(String),
}

/// The two players, serialized in upper case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Mover {
    Empty,
    Nonempty,
}

impl std::fmt::Display for Mover {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mover::Empty => "EMPTY",
            Mover::Nonempty => "NONEMPTY",
        })
    }
}

/// A space presented by descriptors of nonempty open sets.
pub trait RegionSystem {
    type Region: Clone + Debug + PartialEq + Serialize;
    type Point: Clone + Debug + PartialEq + Serialize;

    fn id(&self) -> &'static str;

    /// The whole space, EMPTY's implicit first arena.
    fn whole(&self) -> Self::Region;

    fn is_subset(&self, a: &Self::Region, b: &Self::Region) -> bool;

    fn equals(&self, a: &Self::Region, b: &Self::Region) -> bool {
        self.is_subset(a, b) && self.is_subset(b, a)
    }

    /// A random region strictly inside `a`, or `None` when `a` has no proper
    /// nonempty open subset.
    fn sample_refinement(&self, a: &Self::Region, rng: &mut ChaCha8Rng) -> Option<Self::Region>;

    /// A point in every region of a nested chain, when one can be exhibited.
    fn witness_point(&self, chain: &[Self::Region]) -> Option<Self::Point>;

    /// A region whose closure lies inside `a`, for systems that have one.
    fn closed_refinement(&self, _a: &Self::Region) -> Option<Self::Region> {
        None
    }

    fn supports_closed_refinement(&self) -> bool {
        false
    }

    /// The Souslin number of the space, as declared by the system.
    fn declared_souslin_number(&self) -> ExtendedCardinal;
}

/// EMPTY's side: sees NONEMPTY's last reply (`None` before the first move).
pub trait EmptyPlayer<S: RegionSystem> {
    fn next_move(&mut self, system: &S, last_v: Option<&S::Region>) -> Result<S::Region, String>;
}

/// A full-information NONEMPTY strategy: `history` is `U_0, V_0, ..., U_n`.
pub trait Strategy<S: RegionSystem> {
    fn respond(&self, system: &S, history: &[S::Region]) -> Result<S::Region, String>;
}

/// A NONEMPTY responder that only sees EMPTY's last `k()` moves.
///
/// `window` holds `U_{n-k+1}, ..., U_n`, fewer in the first rounds; the
/// caller never hands over anything else.
pub trait KTactic<S: RegionSystem> {
    fn k(&self) -> usize;
    fn respond(&self, system: &S, window: &[S::Region]) -> Result<S::Region, String>;
}

/// EMPTY's moves out of a full history, in order.
pub fn empty_moves<R: Clone>(history: &[R]) -> Vec<R> {
    history.iter().step_by(2).cloned().collect()
}
