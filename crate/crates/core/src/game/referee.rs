use super::{EmptyPlayer, GameError, Mover, Outcome, RegionSystem, Round, Strategy, Transcript};

/// A play in progress. Moves are checked before they are recorded, so the
/// recorded history is always a legal nested chain.
#[derive(Debug)]
pub struct Game<'s, S: RegionSystem> {
    system: &'s S,
    horizon: usize,
    history: Vec<S::Region>,
    outcome: Option<Outcome<S::Point>>,
}

impl<'s, S: RegionSystem> Game<'s, S> {
    pub fn new(system: &'s S, horizon: usize) -> Result<Self, GameError> {
        if horizon == 0 {
            return Err(GameError::ZeroHorizon);
        }
        Ok(Game {
            system,
            horizon,
            history: Vec::new(),
            outcome: None,
        })
    }

    pub fn system(&self) -> &S {
        self.system
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    /// Index of the current (or next) round.
    pub fn round(&self) -> usize {
        self.history.len() / 2
    }

    /// `U_0, V_0, ...` as played so far.
    pub fn history(&self) -> &[S::Region] {
        &self.history
    }

    pub fn outcome(&self) -> Option<&Outcome<S::Point>> {
        self.outcome.as_ref()
    }

    pub fn to_move(&self) -> Option<Mover> {
        match (&self.outcome, self.history.len() % 2) {
            (Some(_), _) => None,
            (None, 0) => Some(Mover::Empty),
            (None, _) => Some(Mover::Nonempty),
        }
    }

    /// Why `u` would be an illegal move for EMPTY now, if it would be.
    pub fn check_empty(&self, u: &S::Region) -> Result<(), String> {
        if self.to_move() != Some(Mover::Empty) {
            return Err("not EMPTY's turn".into());
        }
        match self.history.last() {
            None if !self.system.is_subset(u, &self.system.whole()) => {
                Err("not a subset of the space".into())
            }
            Some(v) if !self.system.is_subset(u, v) => Err("not a subset of previous V".into()),
            _ => Ok(()),
        }
    }

    pub fn check_nonempty(&self, v: &S::Region) -> Result<(), String> {
        if self.to_move() != Some(Mover::Nonempty) {
            return Err("not NONEMPTY's turn".into());
        }
        let u = self.history.last().expect("EMPTY has moved");
        if self.system.is_subset(v, u) {
            Ok(())
        } else {
            Err("not a subset of U".into())
        }
    }

    pub fn play_empty(&mut self, u: S::Region) -> Result<(), String> {
        self.check_empty(&u)?;
        self.history.push(u);
        Ok(())
    }

    /// Records `v`; after the last round this settles the outcome.
    pub fn play_nonempty(&mut self, v: S::Region) -> Result<(), String> {
        self.check_nonempty(&v)?;
        self.history.push(v);
        if self.round() == self.horizon {
            let vs: Vec<S::Region> = self.history.iter().skip(1).step_by(2).cloned().collect();
            self.outcome = Some(match self.system.witness_point(&vs) {
                Some(witness) => Outcome::NonemptyCertified { witness },
                None => Outcome::Undetermined {
                    horizon: self.horizon,
                },
            });
        }
        Ok(())
    }

    /// Ends the play against `mover`.
    pub fn forfeit(&mut self, mover: Mover, reason: String) {
        self.outcome = Some(Outcome::IllegalMove {
            round: self.round(),
            mover,
            reason,
        });
    }

    /// Completed rounds and the outcome, `None` while undecided.
    pub fn transcript(&self) -> Transcript<S::Region, S::Point> {
        Transcript {
            rounds: self.rounds(),
            outcome: self.outcome.clone().unwrap_or(Outcome::Undetermined {
                horizon: self.round(),
            }),
        }
    }

    pub fn rounds(&self) -> Vec<Round<S::Region>> {
        self.history
            .chunks_exact(2)
            .enumerate()
            .map(|(n, pair)| Round {
                n,
                u: pair[0].clone(),
                v: pair[1].clone(),
            })
            .collect()
    }
}

/// Plays to `horizon` rounds. Illegal moves and player errors end the play
/// as `IllegalMove` against the offender.
pub fn run_game<S: RegionSystem>(
    system: &S,
    empty: &mut dyn EmptyPlayer<S>,
    nonempty: &dyn Strategy<S>,
    horizon: usize,
) -> Result<Transcript<S::Region, S::Point>, GameError> {
    let mut game = Game::new(system, horizon)?;
    while game.outcome().is_none() {
        let u = empty.next_move(system, game.history().last());
        if let Err(reason) = u.and_then(|u| game.play_empty(u)) {
            game.forfeit(Mover::Empty, reason);
            break;
        }
        let v = nonempty.respond(system, game.history());
        if let Err(reason) = v.and_then(|v| game.play_nonempty(v)) {
            game.forfeit(Mover::Nonempty, reason);
        }
    }
    Ok(game.transcript())
}
