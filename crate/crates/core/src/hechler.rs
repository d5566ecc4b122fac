//! The Hechler forcing order on finitely represented conditions.
//!
//! Side functions are eventually affine: finitely many exceptional values
//! over an affine form `a*n + c`. This class is closed under pointwise
//! maximum and makes eventual dominance and the extension relation
//! decidable. The order is a preorder; conditions are not quotiented.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse Hechler literal: {0}")]
pub struct ParseError(String);

/// `f(n) = exceptions[n]` where present, else `slope * n + intercept`.
///
/// Canonical: no exception equals the affine value at its key.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EvFun {
    exceptions: BTreeMap<u64, u64>,
    slope: u64,
    intercept: u64,
}

impl EvFun {
    pub fn new(exceptions: BTreeMap<u64, u64>, slope: u64, intercept: u64) -> EvFun {
        let mut f = EvFun {
            exceptions,
            slope,
            intercept,
        };
        f.canonicalize();
        f
    }

    pub fn affine(slope: u64, intercept: u64) -> EvFun {
        EvFun::new(BTreeMap::new(), slope, intercept)
    }

    pub fn constant(c: u64) -> EvFun {
        EvFun::affine(0, c)
    }

    pub fn identity() -> EvFun {
        EvFun::affine(1, 0)
    }

    fn canonicalize(&mut self) {
        let (slope, intercept) = (self.slope, self.intercept);
        self.exceptions
            .retain(|&n, v| u128::from(*v) != affine_at(slope, intercept, n));
    }

    pub fn exceptions(&self) -> &BTreeMap<u64, u64> {
        &self.exceptions
    }

    pub fn slope(&self) -> u64 {
        self.slope
    }

    pub fn intercept(&self) -> u64 {
        self.intercept
    }

    /// First argument from which the affine tail governs: one past the
    /// largest exception key.
    pub fn tail_start(&self) -> u64 {
        self.exceptions.keys().next_back().map_or(0, |k| k + 1)
    }

    pub fn eval(&self, n: u64) -> u128 {
        match self.exceptions.get(&n) {
            Some(&v) => u128::from(v),
            None => affine_at(self.slope, self.intercept, n),
        }
    }

    fn tail_at(&self, n: u64) -> u128 {
        affine_at(self.slope, self.intercept, n)
    }

    /// Eventual dominance `self <=* other`. Exceptions are finite and do not
    /// matter; the affine tails are compared by slope, then intercept.
    pub fn leq_star(&self, other: &EvFun) -> bool {
        (self.slope, self.intercept) <= (other.slope, other.intercept)
    }

    /// `self(n) <= other(n)` for every `n >= from`.
    pub fn leq_from(&self, other: &EvFun, from: u64) -> bool {
        if self.slope > other.slope {
            return false;
        }
        let horizon = from.max(self.tail_start()).max(other.tail_start());
        // Past `horizon` both are affine and the gap is nondecreasing.
        (from..horizon).all(|n| self.eval(n) <= other.eval(n))
            && self.tail_at(horizon) <= other.tail_at(horizon)
    }

    /// Pointwise maximum, canonical.
    pub fn max(&self, other: &EvFun) -> EvFun {
        let (hi, lo) = if (self.slope, self.intercept) >= (other.slope, other.intercept) {
            (self, other)
        } else {
            (other, self)
        };
        // From `crossing` on, hi's tail dominates lo's tail.
        let crossing = if hi.slope == lo.slope || hi.intercept >= lo.intercept {
            0
        } else {
            let gap = lo.intercept - hi.intercept;
            let rate = hi.slope - lo.slope;
            gap.div_ceil(rate)
        };
        let horizon = crossing.max(hi.tail_start()).max(lo.tail_start());
        let mut exceptions = BTreeMap::new();
        for n in 0..horizon {
            let v = self.eval(n).max(other.eval(n));
            exceptions.insert(n, u64::try_from(v).expect("value fits the input range"));
        }
        EvFun::new(exceptions, hi.slope, hi.intercept)
    }
}

fn affine_at(slope: u64, intercept: u64, n: u64) -> u128 {
    u128::from(slope) * u128::from(n) + u128::from(intercept)
}

/// A Hechler condition `(stem, side)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HechlerCond {
    pub stem: Vec<u64>,
    pub side: EvFun,
}

impl HechlerCond {
    pub fn new(stem: Vec<u64>, side: EvFun) -> Self {
        HechlerCond { stem, side }
    }

    /// `self <= weaker`: the stem extends, the side function dominates from
    /// the end of the stem on, and the new stem entries dominate `weaker`'s
    /// side function.
    pub fn leq(&self, weaker: &HechlerCond) -> bool {
        let (t, g) = (&self.stem, &self.side);
        let (s, f) = (&weaker.stem, &weaker.side);
        t.starts_with(s)
            && f.leq_from(g, t.len() as u64)
            && (s.len()..t.len()).all(|n| u128::from(t[n]) >= f.eval(n as u64))
    }

    /// A common extension, if one exists. Stems must be comparable and the
    /// longer stem must dominate the other side function on its new entries;
    /// the witness keeps the longer stem and takes the pointwise max.
    pub fn compatible(&self, other: &HechlerCond) -> Option<HechlerCond> {
        let (long, short) = if self.stem.len() >= other.stem.len() {
            (self, other)
        } else {
            (other, self)
        };
        if !long.stem.starts_with(&short.stem) {
            return None;
        }
        let dominates = (short.stem.len()..long.stem.len())
            .all(|n| u128::from(long.stem[n]) >= short.side.eval(n as u64));
        dominates.then(|| HechlerCond {
            stem: long.stem.clone(),
            side: long.side.max(&short.side),
        })
    }
}

pub fn concat(s: &[u64], t: &[u64]) -> Vec<u64> {
    let mut out = Vec::with_capacity(s.len() + t.len());
    out.extend_from_slice(s);
    out.extend_from_slice(t);
    out
}

impl fmt::Display for EvFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.exceptions.is_empty() {
            let body: Vec<String> = self
                .exceptions
                .iter()
                .map(|(k, v)| format!("{k}:{v}"))
                .collect();
            write!(f, "{{{}}} + ", body.join(","))?;
        }
        match (self.slope, self.intercept) {
            (0, c) => write!(f, "{c}"),
            (1, 0) => write!(f, "n"),
            (1, c) => write!(f, "n+{c}"),
            (a, 0) => write!(f, "{a}n"),
            (a, c) => write!(f, "{a}n+{c}"),
        }
    }
}

impl fmt::Display for HechlerCond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let stem: Vec<String> = self.stem.iter().map(u64::to_string).collect();
        write!(f, "([{}], {})", stem.join(","), self.side)
    }
}

impl FromStr for EvFun {
    type Err = ParseError;

    /// `{k:v,...} + a*n+c`, either part optional; `an`, `n`, `c` and sums
    /// such as `2n+1` are accepted for the affine part.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = |what: &str| ParseError(format!("{what} in `{s}`"));
        let (exceptions, rest) = if let Some(body) = s.strip_prefix('{') {
            let close = body.find('}').ok_or_else(|| err("unclosed `{`"))?;
            let mut map = BTreeMap::new();
            for entry in body[..close].split(',').filter(|e| !e.is_empty()) {
                let (k, v) = entry.split_once(':').ok_or_else(|| err("expected `k:v`"))?;
                let k = k.parse().map_err(|_| err("bad exception key"))?;
                let v = v.parse().map_err(|_| err("bad exception value"))?;
                if map.insert(k, v).is_some() {
                    return Err(err("repeated exception key"));
                }
            }
            let rest = &body[close + 1..];
            let rest = match rest.strip_prefix('+') {
                Some(r) => r,
                None if rest.is_empty() => "0",
                None => return Err(err("expected `+` after exceptions")),
            };
            (map, rest.to_string())
        } else {
            (BTreeMap::new(), s.clone())
        };
        let (mut slope, mut intercept) = (0u64, 0u64);
        if rest.is_empty() {
            return Err(err("missing affine part"));
        }
        for part in rest.split('+') {
            if let Some(coef) = part.strip_suffix('n') {
                let coef = coef.strip_suffix('*').unwrap_or(coef);
                let a = if coef.is_empty() {
                    1
                } else {
                    coef.parse().map_err(|_| err("bad slope"))?
                };
                slope = slope.checked_add(a).ok_or_else(|| err("slope overflow"))?;
            } else {
                let c: u64 = part.parse().map_err(|_| err("bad intercept"))?;
                intercept = intercept
                    .checked_add(c)
                    .ok_or_else(|| err("intercept overflow"))?;
            }
        }
        Ok(EvFun::new(exceptions, slope, intercept))
    }
}

impl FromStr for HechlerCond {
    type Err = ParseError;

    /// `([3,4], {0:7} + 2n+1)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        let err = |what: &str| ParseError(format!("{what} in `{trimmed}`"));
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| err("expected `( ... )`"))?
            .trim();
        let inner = inner
            .strip_prefix('[')
            .ok_or_else(|| err("expected `[` stem"))?;
        let close = inner.find(']').ok_or_else(|| err("unclosed stem"))?;
        let stem = inner[..close]
            .split(',')
            .map(str::trim)
            .filter(|x| !x.is_empty())
            .map(|x| x.parse::<u64>().map_err(|_| err("bad stem entry")))
            .collect::<Result<Vec<_>, _>>()?;
        let side = inner[close + 1..]
            .trim()
            .strip_prefix(',')
            .ok_or_else(|| err("expected `,` after stem"))?;
        Ok(HechlerCond {
            stem,
            side: side.parse()?,
        })
    }
}

impl Serialize for HechlerCond {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for HechlerCond {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
