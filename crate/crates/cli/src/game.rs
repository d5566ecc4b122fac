//! `bmgl game`: scripted or seeded plays, batch audits and the terminal loop.

use std::io::{BufRead, Write};

use bmgl_core::galvin::RoundAudit;
use bmgl_core::game::{
    closure_refinement_strategy, random_empty_player, run_game, BaireClopen, BairePoint,
    BaireSpace, EmptyPlayer, ScriptedEmpty, Transcript,
};
use bmgl_core::session::{run_galvin, GameSession, MoveReply, SessionConfig, SessionError};
use serde_json::json;

use crate::{input, CliError, Output};

/// Who answers EMPTY.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Nonempty {
    /// The 2-tactic built from the closure-refinement strategy.
    Galvin,
    /// The full-information closure-refinement strategy itself.
    Closure,
}

/// `;`- or newline-separated clopen literals, e.g. `[3]; 3 0 5`.
pub fn parse_moves(src: &str) -> Result<Vec<BaireClopen>, CliError> {
    src.split([';', '\n'])
        .map(str::trim)
        .filter(|m| !m.is_empty() && !m.starts_with('#'))
        .map(|m| m.parse::<BaireClopen>().map_err(input))
        .collect()
}

pub fn check_system(system: &str) -> Result<(), CliError> {
    if system == "baire" {
        Ok(())
    } else {
        Err(CliError::Input(format!(
            "unknown region system `{system}` (supported: baire)"
        )))
    }
}

fn check_horizon(horizon: usize) -> Result<(), CliError> {
    if horizon == 0 {
        Err(CliError::Input("horizon must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// One play; scripted moves default the horizon to their number.
pub fn run(
    seed: u64,
    horizon: Option<usize>,
    moves: Option<Vec<BaireClopen>>,
    nonempty: Nonempty,
) -> Result<Transcript<BaireClopen, BairePoint>, CliError> {
    let horizon = horizon
        .or_else(|| moves.as_ref().map(Vec::len))
        .unwrap_or(16);
    check_horizon(horizon)?;
    match nonempty {
        Nonempty::Galvin => Ok(run_galvin(seed, horizon, moves).map_err(input)?.0),
        Nonempty::Closure => {
            let sigma = closure_refinement_strategy(&BaireSpace).map_err(input)?;
            let mut empty: Box<dyn EmptyPlayer<BaireSpace>> = match moves {
                Some(m) => Box::new(ScriptedEmpty::new(m)),
                None => Box::new(random_empty_player(&BaireSpace, seed)),
            };
            run_game(&BaireSpace, empty.as_mut(), &sigma, horizon).map_err(input)
        }
    }
}

/// Per-round audits of one scripted or seeded play, one JSON line each.
pub fn audit_one(
    seed: u64,
    horizon: Option<usize>,
    moves: Option<Vec<BaireClopen>>,
) -> Result<Output, CliError> {
    let horizon = horizon
        .or_else(|| moves.as_ref().map(Vec::len))
        .unwrap_or(16);
    check_horizon(horizon)?;
    let (_, audit) = run_galvin(seed, horizon, moves).map_err(input)?;
    let mut text = String::new();
    for r in &audit.rounds {
        text += &serde_json::to_string(r).expect("audits serialize");
        text.push('\n');
    }
    let verdict = if audit.all_match {
        "all-match"
    } else {
        "mismatch"
    };
    text += &format!(
        "{}/{} rounds {verdict}\n",
        audit.rounds.iter().filter(|r| r.ok()).count(),
        audit.rounds.len()
    );
    let violation =
        (!audit.all_match).then(|| format!("audit mismatch at round {:?}", audit.first_mismatch));
    Ok(Output {
        text,
        json: serde_json::to_value(&audit).expect("audits serialize"),
        violation,
    })
}

/// `n` seeded games starting at `seed`, each audited.
pub fn audit_batch(n: usize, horizon: usize, seed: u64) -> Result<Output, CliError> {
    check_horizon(horizon)?;
    let mut clean = 0;
    let mut certified = 0;
    let mut failures = Vec::new();
    for s in seed..seed + n as u64 {
        let (t, audit) = run_galvin(s, horizon, None).map_err(input)?;
        if audit.all_match && audit.v_chain_equal {
            clean += 1;
        } else {
            failures.push(json!({"seed": s, "round": audit.first_mismatch}));
        }
        if t.outcome.is_certified() {
            certified += 1;
        }
    }
    let verdict = if clean == n { "all-match" } else { "mismatch" };
    let text = format!("{clean}/{n} {verdict}\ncertified: {certified}/{n}\n");
    let json = json!({
        "games": n,
        "horizon": horizon,
        "first_seed": seed,
        "all_match": clean,
        "certified": certified,
        "failures": failures,
    });
    let violation = (clean < n).then(|| format!("{} audits failed", n - clean));
    Ok(Output {
        text,
        json,
        violation,
    })
}

fn describe_audit(a: &RoundAudit<BaireClopen>) -> String {
    let mut s = String::from("  audit: ");
    match &a.recovered {
        Some(chain) => {
            let chain: Vec<String> = chain.iter().map(|c| c.to_string()).collect();
            s += &format!("recovered {}; ", chain.join(" ⊃ "));
        }
        None => s += "round 0, nothing to decode; ",
    }
    if let Some(hat) = &a.hat {
        s += &format!("coded move {hat}; ");
    }
    s += if a.ok() { "all match" } else { "MISMATCH" };
    if let Some(e) = &a.error {
        s += &format!(" ({e})");
    }
    s
}

fn describe_reply(r: &MoveReply) -> String {
    let mut s = format!(
        "U_{n} = {}\nV_{n} = {}\n{}\n",
        r.u,
        r.v,
        describe_audit(&r.audit),
        n = r.round
    );
    if let Some(o) = &r.outcome {
        s += &format!(
            "outcome: {}\n",
            serde_json::to_string(o).expect("outcomes serialize")
        );
    }
    s
}

/// Terminal loop: EMPTY's moves are read from `input` as sequence literals
/// (`1 0 7` or `[1,0,7]`), `auto` lets the seeded player move, `quit` stops.
pub fn play<R: BufRead, W: Write>(
    config: SessionConfig,
    mut input_lines: R,
    out: &mut W,
) -> Result<GameSession, CliError> {
    let mut session = GameSession::new("terminal", config).map_err(input)?;
    let io = |e: std::io::Error| CliError::Input(e.to_string());
    writeln!(
        out,
        "Banach-Mazur game on Baire space, horizon {}. You play EMPTY; enter a sequence, `auto` or `quit`.",
        session.config().horizon
    )
    .map_err(io)?;
    while !session.is_over() {
        let state = session.state();
        let inside = session
            .transcript()
            .rounds
            .last()
            .map(|r| r.v.to_string())
            .unwrap_or_else(|| "[]".into());
        write!(out, "round {} (inside {inside})> ", state.round).map_err(io)?;
        out.flush().map_err(io)?;
        let mut line = String::new();
        if input_lines.read_line(&mut line).map_err(io)? == 0 {
            writeln!(out).map_err(io)?;
            break;
        }
        let line = line.trim();
        let reply = match line {
            "" => continue,
            "quit" | "q" => break,
            "auto" => session.auto_move(),
            literal => match literal.parse::<BaireClopen>() {
                Ok(u) => session.submit(u),
                Err(e) => {
                    writeln!(out, "  cannot read `{literal}`: {e}").map_err(io)?;
                    continue;
                }
            },
        };
        match reply {
            Ok(r) => write!(out, "{}", describe_reply(&r)).map_err(io)?,
            Err(SessionError::IllegalMove { reason, .. }) => writeln!(
                out,
                "  rejected: {reason}; moves must extend the sequence {inside}; try again"
            )
            .map_err(io)?,
            Err(e) => writeln!(out, "  {e}").map_err(io)?,
        }
    }
    Ok(session)
}
