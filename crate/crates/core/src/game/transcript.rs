use serde::Serialize;

use super::{Mover, RegionSystem};

/// One completed round.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Round<R> {
    pub n: usize,
    #[serde(rename = "U")]
    pub u: R,
    #[serde(rename = "V")]
    pub v: R,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "outcome")]
pub enum Outcome<P> {
    NonemptyCertified {
        witness: P,
    },
    Undetermined {
        horizon: usize,
    },
    IllegalMove {
        round: usize,
        mover: Mover,
        reason: String,
    },
}

impl<P> Outcome<P> {
    pub fn tag(&self) -> &'static str {
        match self {
            Outcome::NonemptyCertified { .. } => "NonemptyCertified",
            Outcome::Undetermined { .. } => "Undetermined",
            Outcome::IllegalMove { .. } => "IllegalMove",
        }
    }

    pub fn is_certified(&self) -> bool {
        matches!(self, Outcome::NonemptyCertified { .. })
    }
}

/// The legal rounds of a play and how it ended.
#[derive(Clone, Debug, PartialEq)]
pub struct Transcript<R, P> {
    pub rounds: Vec<Round<R>>,
    pub outcome: Outcome<P>,
}

impl<R: Clone + Serialize, P: Serialize> Transcript<R, P> {
    pub fn u_moves(&self) -> Vec<R> {
        self.rounds.iter().map(|r| r.u.clone()).collect()
    }

    pub fn v_moves(&self) -> Vec<R> {
        self.rounds.iter().map(|r| r.v.clone()).collect()
    }

    /// `U_0, V_0, U_1, V_1, ...`.
    pub fn chain(&self) -> Vec<R> {
        self.rounds
            .iter()
            .flat_map(|r| [r.u.clone(), r.v.clone()])
            .collect()
    }

    /// First index of the flattened chain that fails to sit inside its
    /// predecessor.
    pub fn first_break<S: RegionSystem<Region = R>>(&self, system: &S) -> Option<usize> {
        let chain = self.chain();
        chain
            .windows(2)
            .position(|w| !system.is_subset(&w[1], &w[0]))
            .map(|i| i + 1)
    }

    /// One JSON object per round, then the outcome.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for round in &self.rounds {
            out.push_str(&serde_json::to_string(round).expect("regions serialize"));
            out.push('\n');
        }
        out.push_str(&serde_json::to_string(&self.outcome).expect("outcomes serialize"));
        out.push('\n');
        out
    }
}
