//! Interactive games against the Galvin 2-tactic on Baire space.
//!
//! A session is a [`Game`] with a fixed NONEMPTY player (ς built from the
//! closure-refinement strategy) and a per-round decode audit. EMPTY's moves
//! come from a caller or, on request, from a seeded random player, so the
//! whole evolution is a function of the configuration and the move log.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::galvin::{
    audit_play, audit_round, baire_coded_base, galvin_two_tactic, BaireCodedBase, DecodeAudit,
    GalvinTactic, RoundAudit,
};
use crate::game::{
    random_empty_player, run_game, BaireClopen, BairePoint, BaireSpace, ClosureRefinement,
    EmptyPlayer, Game, GameError, Mover, Outcome, RandomEmpty, Round, ScriptedEmpty, Strategy,
    TacticStrategy, Transcript,
};

/// Longest play a session accepts; coded symbols grow by one bit per
/// recorded superset, so very long plays get unwieldy.
pub const MAX_HORIZON: usize = 1024;

static BAIRE: BaireSpace = BaireSpace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SessionError {
    #[error("unknown region system `{0}` (supported: baire)")]
    UnknownSystem(String),
    #[error("unknown sigma `{0}` (supported: closure)")]
    UnknownSigma(String),
    #[error("horizon must be between 1 and {MAX_HORIZON}, got {0}")]
    Horizon(usize),
    #[error("round {round}: {reason}")]
    IllegalMove { round: usize, reason: String },
    #[error("the game is over")]
    Finished,
}

fn default_system() -> String {
    "baire".into()
}

fn default_sigma() -> String {
    "closure".into()
}

fn default_horizon() -> usize {
    16
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SessionConfig {
    #[serde(default = "default_system")]
    pub system: String,
    #[serde(default = "default_horizon")]
    pub horizon: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_sigma")]
    pub sigma: String,
}

impl Default for SessionConfig {
    fn default() -> Self {
        SessionConfig {
            system: default_system(),
            horizon: default_horizon(),
            seed: 0,
            sigma: default_sigma(),
        }
    }
}

impl SessionConfig {
    pub fn validate(&self) -> Result<(), SessionError> {
        if self.system != "baire" {
            return Err(SessionError::UnknownSystem(self.system.clone()));
        }
        if self.sigma != "closure" {
            return Err(SessionError::UnknownSigma(self.sigma.clone()));
        }
        if self.horizon == 0 || self.horizon > MAX_HORIZON {
            return Err(SessionError::Horizon(self.horizon));
        }
        Ok(())
    }
}

pub type Tactic = GalvinTactic<BaireCodedBase, ClosureRefinement>;

pub fn tactic() -> Tactic {
    galvin_two_tactic(baire_coded_base(), ClosureRefinement)
}

/// An EMPTY move as logged: explicit, or drawn from the session's player.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoggedMove {
    pub u: BaireClopen,
    #[serde(default)]
    pub auto: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct MoveReply {
    pub round: usize,
    pub u: BaireClopen,
    pub v: BaireClopen,
    pub audit: RoundAudit<BaireClopen>,
    pub outcome: Option<Outcome<BairePoint>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SessionState {
    pub id: String,
    pub system: String,
    pub sigma: String,
    pub horizon: usize,
    pub seed: u64,
    pub round: usize,
    pub to_move: Option<Mover>,
    pub outcome: Option<Outcome<BairePoint>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TranscriptView {
    pub id: String,
    pub rounds: Vec<Round<BaireClopen>>,
    pub outcome: Option<Outcome<BairePoint>>,
}

#[derive(Debug)]
pub struct GameSession {
    id: String,
    config: SessionConfig,
    game: Game<'static, BaireSpace>,
    tactic: TacticStrategy<Tactic>,
    empty: RandomEmpty,
    log: Vec<LoggedMove>,
    audits: Vec<RoundAudit<BaireClopen>>,
}

impl GameSession {
    pub fn new(id: impl Into<String>, config: SessionConfig) -> Result<Self, SessionError> {
        config.validate()?;
        let game =
            Game::new(&BAIRE, config.horizon).map_err(|_| SessionError::Horizon(config.horizon))?;
        Ok(GameSession {
            id: id.into(),
            empty: random_empty_player(&BAIRE, config.seed),
            config,
            game,
            tactic: TacticStrategy(tactic()),
            log: Vec::new(),
            audits: Vec::new(),
        })
    }

    /// Rebuilds a session from its move log.
    pub fn replay(
        id: impl Into<String>,
        config: SessionConfig,
        log: &[LoggedMove],
    ) -> Result<Self, SessionError> {
        let mut s = GameSession::new(id, config)?;
        for m in log {
            if m.auto {
                let reply = s.auto_move()?;
                if reply.u != m.u {
                    return Err(SessionError::IllegalMove {
                        round: reply.round,
                        reason: "log does not match the seeded player".into(),
                    });
                }
            } else {
                s.submit(m.u.clone())?;
            }
        }
        Ok(s)
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn config(&self) -> &SessionConfig {
        &self.config
    }

    pub fn log(&self) -> &[LoggedMove] {
        &self.log
    }

    pub fn audits(&self) -> &[RoundAudit<BaireClopen>] {
        &self.audits
    }

    pub fn is_over(&self) -> bool {
        self.game.outcome().is_some()
    }

    /// Plays `u` for EMPTY and returns ς's reply. Illegal moves leave the
    /// session untouched.
    pub fn submit(&mut self, u: BaireClopen) -> Result<MoveReply, SessionError> {
        self.play(u, false)
    }

    /// Lets the seeded random player move for EMPTY.
    pub fn auto_move(&mut self) -> Result<MoveReply, SessionError> {
        if self.is_over() {
            return Err(SessionError::Finished);
        }
        let u = self
            .empty
            .next_move(&BAIRE, self.game.history().last())
            .expect("the random player always moves");
        self.play(u, true)
    }

    fn play(&mut self, u: BaireClopen, auto: bool) -> Result<MoveReply, SessionError> {
        if self.is_over() {
            return Err(SessionError::Finished);
        }
        let round = self.game.round();
        self.game
            .play_empty(u.clone())
            .map_err(|reason| SessionError::IllegalMove { round, reason })?;
        self.log.push(LoggedMove { u: u.clone(), auto });
        let v = match self.tactic.respond(&BAIRE, self.game.history()) {
            Ok(v) => v,
            Err(reason) => {
                // Unreachable on legal play; recorded rather than hidden.
                self.game.forfeit(Mover::Nonempty, reason.clone());
                return Err(SessionError::IllegalMove { round, reason });
            }
        };
        if let Err(reason) = self.game.play_nonempty(v.clone()) {
            self.game.forfeit(Mover::Nonempty, reason.clone());
            return Err(SessionError::IllegalMove { round, reason });
        }
        let us: Vec<BaireClopen> = self.log.iter().map(|m| m.u.clone()).collect();
        let audit = audit_round(self.tactic.0.base(), &ClosureRefinement, &us, &v);
        self.audits.push(audit.clone());
        Ok(MoveReply {
            round,
            u,
            v,
            audit,
            outcome: self.game.outcome().cloned(),
        })
    }

    pub fn state(&self) -> SessionState {
        SessionState {
            id: self.id.clone(),
            system: self.config.system.clone(),
            sigma: self.config.sigma.clone(),
            horizon: self.config.horizon,
            seed: self.config.seed,
            round: self.game.round(),
            to_move: self.game.to_move(),
            outcome: self.game.outcome().cloned(),
        }
    }

    pub fn transcript(&self) -> Transcript<BaireClopen, BairePoint> {
        self.game.transcript()
    }

    pub fn transcript_view(&self) -> TranscriptView {
        TranscriptView {
            id: self.id.clone(),
            rounds: self.game.rounds(),
            outcome: self.game.outcome().cloned(),
        }
    }
}

/// One complete game of ς against EMPTY: scripted when `moves` is given,
/// otherwise the seeded random player. Returns the transcript and its audit.
pub fn run_galvin(
    seed: u64,
    horizon: usize,
    moves: Option<Vec<BaireClopen>>,
) -> Result<
    (
        Transcript<BaireClopen, BairePoint>,
        DecodeAudit<BaireClopen>,
    ),
    GameError,
> {
    let tactic = TacticStrategy(tactic());
    let mut empty: Box<dyn EmptyPlayer<BaireSpace>> = match moves {
        Some(m) => Box::new(ScriptedEmpty::new(m)),
        None => Box::new(random_empty_player(&BAIRE, seed)),
    };
    let t = run_game(&BAIRE, empty.as_mut(), &tactic, horizon)?;
    let audit = audit_play(tactic.0.base(), &ClosureRefinement, &t);
    Ok((t, audit))
}
