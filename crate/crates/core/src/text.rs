//! Line-oriented file formats.
//!
//! Posets:
//!
//! ```text
//! poset diamond
//! elements a b t
//! leq a t
//! leq b t
//! closure
//! ```
//!
//! Spaces:
//!
//! ```text
//! space sierpinski
//! points x y
//! subbasis x
//! ```
//!
//! Blank lines and `#` comments are ignored.

use thiserror::Error;

use crate::poset::{FinitePoset, PosetError, RawPoset};
use crate::topology::{FiniteSpace, TopologyError};

#[derive(Debug, Error)]
pub enum TextError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Topology(#[from] TopologyError),
}

fn syntax(line: usize, message: impl Into<String>) -> TextError {
    TextError::Syntax {
        line,
        message: message.into(),
    }
}

/// Numbered, comment-stripped, nonblank lines split into a keyword and the rest.
fn directives(src: &str) -> impl Iterator<Item = (usize, &str, &str)> {
    src.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            return None;
        }
        let (head, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        Some((i + 1, head, rest.trim()))
    })
}

pub fn parse_raw_poset(src: &str) -> Result<RawPoset, TextError> {
    let mut raw = RawPoset {
        name: None,
        elements: Vec::new(),
        pairs: Vec::new(),
        closure: false,
    };
    let mut seen_header = false;
    for (line, head, rest) in directives(src) {
        match head {
            "poset" if !seen_header => {
                seen_header = true;
                if !rest.is_empty() {
                    raw.name = Some(rest.to_string());
                }
            }
            "poset" => return Err(syntax(line, "repeated `poset` header")),
            _ if !seen_header => return Err(syntax(line, "expected `poset <name>` first")),
            "elements" => raw
                .elements
                .extend(rest.split_whitespace().map(str::to_string)),
            "leq" => {
                let args: Vec<&str> = rest.split_whitespace().collect();
                let [q, p] = args[..] else {
                    return Err(syntax(line, "`leq` takes exactly two ids"));
                };
                raw.pairs.push((q.to_string(), p.to_string()));
            }
            "closure" if rest.is_empty() => raw.closure = true,
            "closure" => return Err(syntax(line, "`closure` takes no arguments")),
            other => return Err(syntax(line, format!("unknown directive `{other}`"))),
        }
    }
    if !seen_header {
        return Err(syntax(0, "missing `poset` header"));
    }
    Ok(raw)
}

pub fn parse_poset(src: &str) -> Result<FinitePoset, TextError> {
    Ok(FinitePoset::validate(&parse_raw_poset(src)?)?)
}

/// A parsed space file: the name, if given, and the generated topology.
#[derive(Clone, Debug)]
pub struct NamedSpace {
    pub name: Option<String>,
    pub space: FiniteSpace,
}

pub fn parse_space(src: &str) -> Result<NamedSpace, TextError> {
    let mut name = None;
    let mut seen_header = false;
    let mut points = Vec::new();
    let mut subbasis = Vec::new();
    for (line, head, rest) in directives(src) {
        match head {
            "space" if !seen_header => {
                seen_header = true;
                if !rest.is_empty() {
                    name = Some(rest.to_string());
                }
            }
            "space" => return Err(syntax(line, "repeated `space` header")),
            _ if !seen_header => return Err(syntax(line, "expected `space <name>` first")),
            "points" => points.extend(rest.split_whitespace().map(str::to_string)),
            "subbasis" => subbasis.push(
                rest.split(',')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(str::to_string)
                    .collect::<Vec<_>>(),
            ),
            other => return Err(syntax(line, format!("unknown directive `{other}`"))),
        }
    }
    if !seen_header {
        return Err(syntax(0, "missing `space` header"));
    }
    Ok(NamedSpace {
        name,
        space: FiniteSpace::generate_from_ids(points, &subbasis)?,
    })
}
