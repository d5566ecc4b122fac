//! Galvin's coding: from a full-information winning strategy for NONEMPTY
//! to one that only looks at EMPTY's last two moves.
//!
//! NONEMPTY never plays inside EMPTY's move directly. She first shrinks
//! `π(U_n)` to `Û_n = ψ_{π(U_n)}({π(U_0), ..., π(U_n)})`, a cell that encodes
//! the whole history so far, and then answers as the original strategy σ
//! would against the auxiliary play `Û_0, V_0, Û_1, ...`. Because EMPTY's
//! next move lands inside `Û_n`, the pair `(U_n, U_{n+1})` is enough to
//! recover every `π(U_i)` and re-run the auxiliary play.

use serde::Serialize;
use thiserror::Error;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::game::{BaireClopen, BaireSpace, KTactic, RegionSystem, Strategy, Transcript};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GalvinError {
    #[error("psi: {0} is not a superset of the coded region")]
    NotASuperset(String),
    #[error("round {round}: {reason}")]
    IllegalMove { round: usize, reason: String },
    #[error("sigma failed at round {round}: {reason}")]
    Sigma { round: usize, reason: String },
    #[error(transparent)]
    Decode(#[from] DecodeFailure),
}

/// The two EMPTY moves do not come from a play coded by this base.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("decode failure: {0}")]
pub struct DecodeFailure(pub String);

/// A π-base `𝓑` in which every member has finitely many supersets, with
/// injections `ψ_V` of finite sets of those supersets into a cellular
/// family inside `V`, and a selector `π(U) ⊆ U`.
pub trait CodedPiBase {
    type System: RegionSystem;

    fn system(&self) -> &Self::System;

    fn member(&self, v: &Region<Self>) -> bool;

    /// `{W ∈ 𝓑 : V ⊆ W}`, always including `V`.
    fn supersets(&self, v: &Region<Self>) -> Vec<Region<Self>>;

    fn psi(&self, v: &Region<Self>, f: &[Region<Self>]) -> Result<Region<Self>, GalvinError>;

    /// `ψ_V^{-1}(W)`, or `None` when `W` is not in the range.
    fn psi_invert(&self, v: &Region<Self>, w: &Region<Self>) -> Option<Vec<Region<Self>>>;

    /// The member of `ψ_V`'s range containing `u`, if any.
    fn psi_cell(&self, v: &Region<Self>, u: &Region<Self>) -> Option<Region<Self>>;

    fn pi(&self, u: &Region<Self>) -> Region<Self>;
}

pub type Region<B> = <<B as CodedPiBase>::System as RegionSystem>::Region;

/// All basic clopens of Baire space. `[s]` has the prefixes of `s` as
/// supersets, and `ψ_[s](F) = [s ⌢ m]` where bit `i` of `m` marks the
/// prefix of length `i`.
#[derive(Clone, Copy, Debug, Default)]
pub struct BaireCodedBase {
    space: BaireSpace,
}

impl BaireCodedBase {
    pub fn new() -> Self {
        BaireCodedBase { space: BaireSpace }
    }
}

pub fn baire_coded_base() -> BaireCodedBase {
    BaireCodedBase::new()
}

impl CodedPiBase for BaireCodedBase {
    type System = BaireSpace;

    fn system(&self) -> &BaireSpace {
        &self.space
    }

    fn member(&self, _v: &BaireClopen) -> bool {
        true
    }

    fn supersets(&self, v: &BaireClopen) -> Vec<BaireClopen> {
        (0..=v.len()).map(|i| v.prefix(i)).collect()
    }

    fn psi(&self, v: &BaireClopen, f: &[BaireClopen]) -> Result<BaireClopen, GalvinError> {
        let mut mask = BigUint::zero();
        for w in f {
            if !v.within(w) {
                return Err(GalvinError::NotASuperset(w.to_string()));
            }
            mask.set_bit(w.len() as u64, true);
        }
        Ok(v.child(mask))
    }

    fn psi_invert(&self, v: &BaireClopen, w: &BaireClopen) -> Option<Vec<BaireClopen>> {
        if w.len() != v.len() + 1 || !w.within(v) {
            return None;
        }
        let mask = &w.symbols()[v.len()];
        if mask.bits() > v.len() as u64 + 1 {
            return None;
        }
        Some(
            (0..=v.len())
                .filter(|&i| mask.bit(i as u64))
                .map(|i| v.prefix(i))
                .collect(),
        )
    }

    fn psi_cell(&self, v: &BaireClopen, u: &BaireClopen) -> Option<BaireClopen> {
        if u.len() <= v.len() || !u.within(v) {
            return None;
        }
        let cell = u.prefix(v.len() + 1);
        self.psi_invert(v, &cell).map(|_| cell)
    }

    /// Moves are basic clopens already.
    fn pi(&self, u: &BaireClopen) -> BaireClopen {
        u.clone()
    }
}

/// The auxiliary play `Û_0, V_0, Û_1, V_1, ...`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HatPlay<R> {
    pub hats: Vec<R>,
    pub vs: Vec<R>,
}

/// Runs the auxiliary play of σ against the coded versions of EMPTY's moves.
pub fn hat_simulation<B, Sg>(
    base: &B,
    empty_moves: &[Region<B>],
    sigma: &Sg,
) -> Result<HatPlay<Region<B>>, GalvinError>
where
    B: CodedPiBase,
    Sg: Strategy<B::System> + ?Sized,
{
    let system = base.system();
    let mut play = HatPlay {
        hats: Vec::with_capacity(empty_moves.len()),
        vs: Vec::with_capacity(empty_moves.len()),
    };
    // `Û_0, V_0, ..., Û_n`, kept alongside `play` so σ's input is not
    // rebuilt every round.
    let mut history: Vec<Region<B>> = Vec::with_capacity(2 * empty_moves.len());
    let mut pis: Vec<Region<B>> = Vec::with_capacity(empty_moves.len());
    for (n, u) in empty_moves.iter().enumerate() {
        if let Some(v) = play.vs.last() {
            if !system.is_subset(u, v) {
                return Err(GalvinError::IllegalMove {
                    round: n,
                    reason: "not a subset of previous V".into(),
                });
            }
        }
        let pi = base.pi(u);
        if !pis.contains(&pi) {
            pis.push(pi.clone());
        }
        let hat = base.psi(&pi, &pis)?;
        history.push(hat.clone());
        play.hats.push(hat);
        let v = sigma
            .respond(system, &history)
            .map_err(|reason| GalvinError::Sigma { round: n, reason })?;
        if !system.is_subset(&v, play.hats.last().expect("just pushed")) {
            return Err(GalvinError::Sigma {
                round: n,
                reason: "reply is not inside the coded move".into(),
            });
        }
        history.push(v.clone());
        play.vs.push(v);
    }
    Ok(play)
}

/// Recovers `[π(U_0), ..., π(U_{n-1})]` from `U_{n-1}` and `U_n`, ordered
/// from the largest region down.
pub fn decode_history<B: CodedPiBase>(
    base: &B,
    u_prev: &Region<B>,
    u_cur: &Region<B>,
) -> Result<Vec<Region<B>>, DecodeFailure> {
    let system = base.system();
    let v = base.pi(u_prev);
    let cell = base.psi_cell(&v, u_cur).ok_or_else(|| {
        DecodeFailure("the move lies in no coded cell of the previous one".into())
    })?;
    let mut recovered = base
        .psi_invert(&v, &cell)
        .ok_or_else(|| DecodeFailure("cell is outside the coding range".into()))?;
    recovered.sort_by(
        |a, b| match (system.is_subset(a, b), system.is_subset(b, a)) {
            (true, false) => std::cmp::Ordering::Greater,
            (false, true) => std::cmp::Ordering::Less,
            _ => std::cmp::Ordering::Equal,
        },
    );
    if !recovered
        .windows(2)
        .all(|w| system.is_subset(&w[1], &w[0]) && w[0] != w[1])
    {
        return Err(DecodeFailure(
            "recovered regions do not form a strict chain".into(),
        ));
    }
    if recovered.last() != Some(&v) {
        return Err(DecodeFailure(
            "recovered chain does not end at the previous move".into(),
        ));
    }
    Ok(recovered)
}

/// The 2-tactic ς built from σ over a coded base.
#[derive(Clone, Debug)]
pub struct GalvinTactic<B, Sg> {
    base: B,
    sigma: Sg,
}

pub fn galvin_two_tactic<B, Sg>(base: B, sigma: Sg) -> GalvinTactic<B, Sg> {
    GalvinTactic { base, sigma }
}

impl<B: CodedPiBase, Sg: Strategy<B::System>> GalvinTactic<B, Sg> {
    pub fn base(&self) -> &B {
        &self.base
    }

    pub fn sigma(&self) -> &Sg {
        &self.sigma
    }

    /// `ς(U_{n-1}, U_n)`, or `ς(U_0)` in the first round.
    pub fn reply(&self, window: &[Region<B>]) -> Result<Region<B>, GalvinError> {
        let moves = match window {
            [u0] => vec![u0.clone()],
            [prev, cur] => {
                let mut pis = decode_history(&self.base, prev, cur)?;
                pis.push(self.base.pi(cur));
                pis
            }
            _ => {
                return Err(GalvinError::IllegalMove {
                    round: 0,
                    reason: format!("a 2-tactic takes 1 or 2 moves, got {}", window.len()),
                })
            }
        };
        let play = hat_simulation(&self.base, &moves, &self.sigma)?;
        Ok(play.vs.last().expect("at least one round").clone())
    }
}

impl<B: CodedPiBase, Sg: Strategy<B::System>> KTactic<B::System> for GalvinTactic<B, Sg> {
    fn k(&self) -> usize {
        2
    }

    fn respond(&self, _system: &B::System, window: &[Region<B>]) -> Result<Region<B>, String> {
        self.reply(window).map_err(|e| e.to_string())
    }
}

/// What the audit found in one round.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RoundAudit<R> {
    pub n: usize,
    /// `[π(U_0), ..., π(U_{n-1})]` decoded from `(U_{n-1}, U_n)`; absent in
    /// round 0.
    pub recovered: Option<Vec<R>>,
    pub history_matches: bool,
    /// Re-running the auxiliary play from the decoded history reproduces
    /// the direct simulation.
    pub simulation_matches: bool,
    pub hat: Option<R>,
    pub aux_v: Option<R>,
    /// The real reply equals the auxiliary play's reply.
    pub reply_matches: bool,
    /// `V_n ⊆ Û_n ⊆ V_{n-1}` in the auxiliary play.
    pub aux_legal: bool,
    pub error: Option<String>,
}

impl<R> RoundAudit<R> {
    pub fn ok(&self) -> bool {
        self.history_matches && self.simulation_matches && self.reply_matches && self.aux_legal
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DecodeAudit<R> {
    pub rounds: Vec<RoundAudit<R>>,
    /// The real V-chain equals the auxiliary play's V-chain.
    pub v_chain_equal: bool,
    pub first_mismatch: Option<usize>,
    pub all_match: bool,
}

/// Audits one round: `us` are `U_0..=U_n`, `real_v` is the reply on record.
pub fn audit_round<B, Sg>(
    base: &B,
    sigma: &Sg,
    us: &[Region<B>],
    real_v: &Region<B>,
) -> RoundAudit<Region<B>>
where
    B: CodedPiBase,
    Sg: Strategy<B::System> + ?Sized,
{
    let system = base.system();
    let n = us.len() - 1;
    let mut audit = RoundAudit {
        n,
        recovered: None,
        history_matches: true,
        simulation_matches: true,
        hat: None,
        aux_v: None,
        reply_matches: false,
        aux_legal: false,
        error: None,
    };
    let direct = match hat_simulation(base, us, sigma) {
        Ok(d) => d,
        Err(e) => {
            audit.history_matches = false;
            audit.simulation_matches = false;
            audit.error = Some(e.to_string());
            return audit;
        }
    };
    let hat = &direct.hats[n];
    let v = &direct.vs[n];
    audit.reply_matches = v == real_v;
    audit.aux_legal =
        system.is_subset(v, hat) && (n == 0 || system.is_subset(hat, &direct.vs[n - 1]));
    if n >= 1 {
        let truth: Vec<_> = us[..n].iter().map(|u| base.pi(u)).collect();
        match decode_history(base, &us[n - 1], &us[n]) {
            Ok(recovered) => {
                audit.history_matches = recovered == truth;
                let mut moves = recovered.clone();
                moves.push(base.pi(&us[n]));
                audit.simulation_matches =
                    hat_simulation(base, &moves, sigma).as_ref() == Ok(&direct);
                audit.recovered = Some(recovered);
            }
            Err(e) => {
                audit.history_matches = false;
                audit.simulation_matches = false;
                audit.error = Some(e.to_string());
            }
        }
    }
    audit.hat = Some(hat.clone());
    audit.aux_v = Some(v.clone());
    audit
}

/// Checks a play of ς round by round against the direct simulation.
pub fn audit_play<B, Sg, P>(
    base: &B,
    sigma: &Sg,
    transcript: &Transcript<Region<B>, P>,
) -> DecodeAudit<Region<B>>
where
    B: CodedPiBase,
    Sg: Strategy<B::System> + ?Sized,
    P: Serialize,
{
    let us = transcript.u_moves();
    let rounds: Vec<_> = transcript
        .rounds
        .iter()
        .map(|r| audit_round(base, sigma, &us[..=r.n], &r.v))
        .collect();
    let first_mismatch = rounds.iter().find(|r| !r.ok()).map(|r| r.n);
    let v_chain_equal = rounds.iter().all(|r| r.reply_matches);
    DecodeAudit {
        all_match: first_mismatch.is_none(),
        rounds,
        v_chain_equal,
        first_mismatch,
    }
}

/// `m` as a set of bit positions, for display.
pub fn mask_bits(mask: &BigUint) -> Vec<u64> {
    (0..mask.bits()).filter(|&i| mask.bit(i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{
        closure_refinement_strategy, random_empty_player, run_game, ClosureRefinement,
        ScriptedEmpty, TacticStrategy,
    };

    fn c(s: &[u64]) -> BaireClopen {
        BaireClopen::from_u64s(s)
    }

    #[test]
    fn supersets_are_prefixes() {
        let b = baire_coded_base();
        assert_eq!(b.supersets(&c(&[2, 5])), vec![c(&[]), c(&[2]), c(&[2, 5])]);
    }

    #[test]
    fn psi_bitmask() {
        let b = baire_coded_base();
        let v = c(&[2, 5]);
        let w = b.psi(&v, &[c(&[]), c(&[2, 5])]).unwrap();
        assert_eq!(w, c(&[2, 5, 5]));
        assert_eq!(b.psi_invert(&v, &w), Some(vec![c(&[]), c(&[2, 5])]));
        assert!(matches!(
            b.psi(&v, &[c(&[3])]),
            Err(GalvinError::NotASuperset(_))
        ));
        assert_eq!(b.psi_invert(&v, &c(&[2, 5, 8])), None);
        assert_eq!(mask_bits(&BigUint::from(9u32)), vec![0, 3]);
    }

    #[test]
    fn worked_example() {
        let b = baire_coded_base();
        let play = hat_simulation(&b, &[c(&[]), c(&[1, 0, 7])], &ClosureRefinement).unwrap();
        assert_eq!(play.hats, vec![c(&[1]), c(&[1, 0, 7, 9])]);
        assert_eq!(play.vs, vec![c(&[1, 0]), c(&[1, 0, 7, 9, 0])]);
        let u2 = c(&[1, 0, 7, 9, 0, 4]);
        assert_eq!(
            decode_history(&b, &c(&[1, 0, 7]), &u2).unwrap(),
            vec![c(&[]), c(&[1, 0, 7])]
        );
    }

    #[test]
    fn first_round_codes_itself() {
        let b = baire_coded_base();
        for u0 in [c(&[]), c(&[4]), c(&[3, 3, 3])] {
            let play = hat_simulation(&b, std::slice::from_ref(&u0), &ClosureRefinement).unwrap();
            assert!(play.hats[0].within(&u0) && play.hats[0] != u0);
        }
    }

    #[test]
    fn tampered_move_fails_to_decode() {
        let b = baire_coded_base();
        // [1,0,7] has 4 prefixes; 16 is not a 4-bit mask.
        assert!(decode_history(&b, &c(&[1, 0, 7]), &c(&[1, 0, 7, 16])).is_err());
        assert!(decode_history(&b, &c(&[1, 0, 7]), &c(&[1, 0, 7])).is_err());
        assert!(decode_history(&b, &c(&[1, 0, 7]), &c(&[2])).is_err());
    }

    #[test]
    fn seeded_play_audits_clean() {
        let b = baire_coded_base();
        let sigma = closure_refinement_strategy(b.system()).unwrap();
        let tactic = TacticStrategy(galvin_two_tactic(b, sigma));
        let mut empty = random_empty_player(b.system(), 7);
        let t = run_game(b.system(), &mut empty, &tactic, 16).unwrap();
        assert!(t.outcome.is_certified(), "{:?}", t.outcome);
        let audit = audit_play(&b, &sigma, &t);
        assert!(audit.all_match, "{audit:?}");
        assert!(audit.v_chain_equal);
    }

    #[test]
    fn corrupted_reply_is_caught() {
        let b = baire_coded_base();
        let tactic = TacticStrategy(galvin_two_tactic(b, ClosureRefinement));
        let mut empty = random_empty_player(b.system(), 3);
        let mut t = run_game(b.system(), &mut empty, &tactic, 6).unwrap();
        t.rounds[4].v = t.rounds[4].u.child(1u32.into());
        let audit = audit_play(&b, &ClosureRefinement, &t);
        assert_eq!(audit.first_mismatch, Some(4));
        assert!(!audit.rounds[4].reply_matches && !audit.v_chain_equal);
    }

    #[test]
    fn window_purity() {
        let tactic = galvin_two_tactic(baire_coded_base(), ClosureRefinement);
        let window = [c(&[1, 0, 7]), c(&[1, 0, 7, 9, 0, 2])];
        let a = tactic.respond(&BaireSpace, &window).unwrap();
        let b = tactic.respond(&BaireSpace, &window.clone()).unwrap();
        assert_eq!(a, b);
        // Bits 0, 3 and 6: the root, [1,0,7] and the current move.
        assert_eq!(a, c(&[1, 0, 7, 9, 0, 2, 73, 0]));
    }

    #[test]
    fn scripted_worked_trace() {
        let b = baire_coded_base();
        let tactic = TacticStrategy(galvin_two_tactic(b, ClosureRefinement));
        let mut empty = ScriptedEmpty::new(vec![c(&[]), c(&[1, 0, 7]), c(&[1, 0, 7, 9, 0, 4])]);
        let t = run_game(b.system(), &mut empty, &tactic, 3).unwrap();
        assert_eq!(t.v_moves()[..2], [c(&[1, 0]), c(&[1, 0, 7, 9, 0])]);
        let audit = audit_play(&b, &ClosureRefinement, &t);
        assert!(audit.all_match);
        assert_eq!(audit.rounds[2].recovered, Some(vec![c(&[]), c(&[1, 0, 7])]));
    }
}
