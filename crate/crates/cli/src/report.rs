//! Analysis reports for posets, spaces, ordinals and Hechler conditions.

use std::time::Instant;

use bmgl_core::hechler::{EvFun, HechlerCond};
use bmgl_core::poset::{for_each_poset, PosetError, Separativity, Verdict};
use bmgl_core::text::{parse_raw_poset, parse_space};
use bmgl_core::{CardinalSym, ExtendedCardinal, FinitePoset, Ordinal};
use serde_json::{json, Value};

use crate::{input, CliError, Output};

pub const MAX_SURVEY: usize = 6;

/// Finite values as numbers, alephs as `"aleph_k"`.
fn card(c: ExtendedCardinal) -> Value {
    match c {
        ExtendedCardinal::Finite(n) => json!(n),
        ExtendedCardinal::Aleph(_) => json!(c.to_string()),
    }
}

fn verdict(v: Verdict) -> &'static str {
    match v {
        Verdict::Holds => "holds",
        Verdict::Fails => "fails",
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn analyze_poset(src: &str, exhaustive: bool) -> Result<Output, CliError> {
    let raw = parse_raw_poset(src).map_err(input)?;
    let p = FinitePoset::validate(&raw).map_err(input)?;
    let name = raw.name.clone().unwrap_or_else(|| "poset".into());
    let sep = p.separativity();
    let nabla = p.check_nabla().map_err(input)?;
    let pi = match p.pi_noetherian_type(exhaustive) {
        Ok(pi) => pi,
        Err(PosetError::InvariantMismatch(m)) => return Err(CliError::Violation(m)),
        Err(e) => return Err(input(e)),
    };
    let nt_whole = p.noetherian_type(p.all()).map_err(input)?;
    let minimal = p.minimal_elements();
    let nt_min = p.noetherian_type(minimal).map_err(input)?;
    let antichain = p.ids_of(p.max_antichain().members());

    let sep_text = match sep {
        Separativity::Separative => "yes".to_string(),
        Separativity::Counterexample(a, b) => format!("no (witness {},{})", p.id(a), p.id(b)),
    };
    let mut text = format!("poset {name}: {} elements\n", p.len());
    text += &format!(
        "separative: {sep_text}; S={}; πNt={}; ▽: {}\n",
        nabla.souslin_number,
        pi.value,
        verdict(nabla.verdict)
    );
    text += &format!(
        "nt(P)={nt_whole}; nt(minimal)={nt_min}; minimal: {}; max antichain: {}\n",
        p.ids_of(minimal).join(" "),
        antichain.join(" ")
    );
    if let Some(ex) = pi.exhaustive {
        text += &format!("πNt over all dense subsets: {ex}\n");
    }

    let witness = match sep {
        Separativity::Separative => Value::Null,
        Separativity::Counterexample(a, b) => json!({"p": p.id(a), "q": p.id(b)}),
    };
    let json = json!({
        "poset": name,
        "elements": p.ids(),
        "separative": sep.holds(),
        "separativity_witness": witness,
        "souslin_number": card(nabla.souslin_number),
        "pi_noetherian_type": card(pi.value),
        "pi_noetherian_exhaustive": pi.exhaustive.map(card),
        "nt_whole": card(nt_whole),
        "nt_minimal": card(nt_min),
        "minimal": p.ids_of(minimal),
        "max_antichain": antichain,
        "nabla": verdict(nabla.verdict),
    });
    let violation = (nabla.verdict == Verdict::Fails)
        .then(|| format!("piNt {} exceeds S {}", pi.value, nabla.souslin_number));
    Ok(Output {
        text,
        json,
        violation,
    })
}

pub fn survey(n: usize) -> Result<Output, CliError> {
    if n == 0 || n > MAX_SURVEY {
        return Err(CliError::Input(format!(
            "survey size must be between 1 and {MAX_SURVEY}, got {n}"
        )));
    }
    let start = Instant::now();
    let mut violations = Vec::new();
    let count = for_each_poset(n, |p| {
        let ok = match p.check_nabla() {
            Ok(r) => {
                r.verdict == Verdict::Holds && r.pi_noetherian_type == ExtendedCardinal::Finite(2)
            }
            Err(_) => false,
        };
        if !ok {
            violations.push(p.to_string());
        }
    })
    .map_err(input)?;
    let secs = start.elapsed().as_secs_f64();
    let text = format!(
        "{count} posets, {} violations\nelapsed: {secs:.3}s\n",
        violations.len()
    );
    let json = json!({
        "n": n,
        "posets": count,
        "violations": violations.len(),
        "first_violation": violations.first(),
        "elapsed_seconds": secs,
    });
    let violation = (!violations.is_empty()).then(|| format!("{} violations", violations.len()));
    Ok(Output {
        text,
        json,
        violation,
    })
}

pub fn analyze_space(src: &str) -> Result<Output, CliError> {
    let named = parse_space(src).map_err(input)?;
    let space = &named.space;
    let name = named.name.clone().unwrap_or_else(|| "space".into());
    let preds = space.predicates();
    let inv = space.invariants().map_err(input)?;
    let report = space.check_translation().map_err(input)?;

    let base: Vec<String> = inv
        .pi_base
        .iter()
        .map(|u| format!("{{{}}}", u.join(",")))
        .collect();
    let translation = if !report.asserted {
        "not asserted (space is not pi-regular)"
    } else if report.equal {
        "holds"
    } else {
        "FAILS"
    };
    let mut text = format!(
        "space {name}: {} points, {} opens\n",
        space.points().len(),
        space.opens().len()
    );
    text += &format!(
        "hausdorff: {}; quasi-regular: {}; pi-regular: {}\n",
        yes_no(preds.hausdorff.holds),
        yes_no(preds.quasi_regular.holds),
        yes_no(preds.pi_regular.holds)
    );
    text += &format!(
        "S={}; πNt={}; π-base: {}\n",
        inv.souslin_number,
        inv.pi_noetherian_type,
        base.join(" ")
    );
    text += &format!(
        "regular-open poset: S={}; πNt={}\n",
        report.regular_open.0, report.regular_open.1
    );
    text += &format!("translation: {translation}\n");

    let json = json!({
        "space": name,
        "points": space.points(),
        "opens": space.opens().iter().map(|&u| space.names(u)).collect::<Vec<_>>(),
        "predicates": preds,
        "souslin_number": card(inv.souslin_number),
        "pi_noetherian_type": card(inv.pi_noetherian_type),
        "pi_base": inv.pi_base,
        "regular_open": {
            "souslin_number": card(report.regular_open.0),
            "pi_noetherian_type": card(report.regular_open.1),
        },
        "translation": {
            "asserted": report.asserted,
            "equal": report.equal,
        },
    });
    let violation = report
        .violated()
        .then(|| "space and regular-open invariants differ".to_string());
    Ok(Output {
        text,
        json,
        violation,
    })
}

pub fn ordinal(expr: &str, lambda: &str) -> Result<Output, CliError> {
    let a: Ordinal = expr.parse().map_err(input)?;
    let lambda: CardinalSym = lambda.parse().map_err(input)?;
    let truncated = a.truncated_cnf(&lambda).map_err(input)?;
    let depth = truncated.len();
    let segments: Vec<Ordinal> = (0..=depth)
        .map(|j| a.normal_segment(j, &lambda).map_err(input))
        .collect::<Result<_, _>>()?;
    let show = |terms: &[Ordinal]| {
        terms
            .iter()
            .map(|t| t.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    };
    let cardinal = a.cardinal().map(|c| c.to_string());

    let mut text = format!("α = {a}\n");
    text += &format!("|α| = {}\n", cardinal.as_deref().unwrap_or("0"));
    text += &format!("cnf: [{}]\n", show(&a.cnf()));
    text += &format!(
        "λ = {lambda}: truncated cnf [{}]; ℸ = {depth}\n",
        show(&truncated)
    );
    for (j, s) in segments.iter().enumerate() {
        text += &format!("⌊α⌋_{j} = {s}\n");
    }

    let strings = |terms: &[Ordinal]| terms.iter().map(|t| t.to_string()).collect::<Vec<_>>();
    let json = json!({
        "ordinal": a.to_string(),
        "cardinal": cardinal,
        "cardinally_even": !a.is_zero() && a.is_cardinally_even(),
        "cnf": strings(&a.cnf()),
        "lambda": lambda.to_string(),
        "truncated_cnf": strings(&truncated),
        "daleth": depth,
        "segments": strings(&segments),
    });
    Ok(Output {
        text,
        json,
        violation: None,
    })
}

pub fn hechler_leq(stronger: &str, weaker: &str) -> Result<Output, CliError> {
    let q: HechlerCond = stronger.parse().map_err(input)?;
    let p: HechlerCond = weaker.parse().map_err(input)?;
    let holds = q.leq(&p);
    Ok(Output {
        text: format!("{q} ≤ {p}: {}\n", yes_no(holds)),
        json: json!({"stronger": q, "weaker": p, "leq": holds}),
        violation: None,
    })
}

pub fn hechler_compatible(a: &str, b: &str) -> Result<Output, CliError> {
    let p: HechlerCond = a.parse().map_err(input)?;
    let q: HechlerCond = b.parse().map_err(input)?;
    let witness = p.compatible(&q);
    let text = match &witness {
        Some(r) => format!("compatible: yes; witness {r}\n"),
        None => "compatible: no\n".to_string(),
    };
    Ok(Output {
        text,
        json: json!({"a": p, "b": q, "compatible": witness.is_some(), "witness": witness}),
        violation: None,
    })
}

pub fn ev_leq_star(f: &str, g: &str) -> Result<Output, CliError> {
    let f: EvFun = f.parse().map_err(input)?;
    let g: EvFun = g.parse().map_err(input)?;
    let holds = f.leq_star(&g);
    Ok(Output {
        text: format!("{f} ≤* {g}: {}\n", yes_no(holds)),
        json: json!({"f": f.to_string(), "g": g.to_string(), "leq_star": holds}),
        violation: None,
    })
}
