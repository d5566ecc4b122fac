use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{empty_moves, EmptyPlayer, GameError, KTactic, RegionSystem, Strategy};

impl<S, F> Strategy<S> for F
where
    S: RegionSystem,
    F: Fn(&S, &[S::Region]) -> Result<S::Region, String>,
{
    fn respond(&self, system: &S, history: &[S::Region]) -> Result<S::Region, String> {
        self(system, history)
    }
}

/// Plays a fixed list of moves, then gives up.
#[derive(Clone, Debug)]
pub struct ScriptedEmpty<R> {
    moves: std::vec::IntoIter<R>,
}

impl<R> ScriptedEmpty<R> {
    pub fn new(moves: Vec<R>) -> Self {
        ScriptedEmpty {
            moves: moves.into_iter(),
        }
    }
}

impl<S: RegionSystem> EmptyPlayer<S> for ScriptedEmpty<S::Region> {
    fn next_move(&mut self, _: &S, _: Option<&S::Region>) -> Result<S::Region, String> {
        self.moves
            .next()
            .ok_or_else(|| "script exhausted".to_string())
    }
}

/// Seeded random refinements of NONEMPTY's last reply.
#[derive(Clone, Debug)]
pub struct RandomEmpty {
    rng: ChaCha8Rng,
}

pub fn random_empty_player<S: RegionSystem>(_system: &S, seed: u64) -> RandomEmpty {
    RandomEmpty {
        rng: ChaCha8Rng::seed_from_u64(seed),
    }
}

impl<S: RegionSystem> EmptyPlayer<S> for RandomEmpty {
    /// Stays put when the region has no proper refinement.
    fn next_move(&mut self, system: &S, last_v: Option<&S::Region>) -> Result<S::Region, String> {
        let arena = last_v.cloned().unwrap_or_else(|| system.whole());
        Ok(system
            .sample_refinement(&arena, &mut self.rng)
            .unwrap_or(arena))
    }
}

/// Answers `U` with a region whose closure lies in `U`.
#[derive(Clone, Copy, Debug, Default)]
pub struct ClosureRefinement;

pub fn closure_refinement_strategy<S: RegionSystem>(
    system: &S,
) -> Result<ClosureRefinement, GameError> {
    if system.supports_closed_refinement() {
        Ok(ClosureRefinement)
    } else {
        Err(GameError::Unsupported {
            system: system.id(),
            what: "closed refinement",
        })
    }
}

impl<S: RegionSystem> Strategy<S> for ClosureRefinement {
    fn respond(&self, system: &S, history: &[S::Region]) -> Result<S::Region, String> {
        let u = history.last().ok_or("no move to answer")?;
        system
            .closed_refinement(u)
            .ok_or_else(|| format!("{}: no closed refinement", system.id()))
    }
}

/// A k-tactic seen as a strategy: only the last `k` EMPTY moves are passed on.
#[derive(Clone, Debug)]
pub struct TacticStrategy<T>(pub T);

impl<S: RegionSystem, T: KTactic<S>> Strategy<S> for TacticStrategy<T> {
    fn respond(&self, system: &S, history: &[S::Region]) -> Result<S::Region, String> {
        let us = empty_moves(history);
        let from = us.len().saturating_sub(self.0.k());
        self.0.respond(system, &us[from..])
    }
}
