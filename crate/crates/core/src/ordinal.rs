//! Symbolic ordinals with aleph-indexed terms.
//!
//! An [`Ordinal`] is stored canonically as
//!
//! ```text
//! w_{k0}*b0 + w_{k1}*b1 + ... + w^e0*c0 + w^e1*c1 + ... + n
//! ```
//!
//! with `k0 > k1 > ... >= 1`, every coefficient ordinal `b_i` nonzero and of
//! cardinality at most aleph_{k_i}, followed by a countable part in base-w
//! Cantor normal form with natural exponents (exponent 0 is the finite
//! tail). Everything after the term `w_k*b` is below `w_k`, so the
//! decomposition is unique and value equality is structural equality.
//!
//! The class is closed under addition and the multiplications needed to
//! write cardinally even ordinals (`|d| * b`). Exponentiation is limited to
//! natural powers.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Aleph terms `(index, coeff)` and countable terms `(exp, coeff)`.
pub type OrdinalParts = (Vec<(u32, Ordinal)>, Vec<(u32, BigUint)>);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrdinalError {
    #[error("the ordinal 0 has no cardinal normal form term")]
    Zero,
    #[error("truncation cardinal must be infinite, got {0}")]
    FiniteLambda(CardinalSym),
    #[error("index {index} out of range for depth {depth}")]
    IndexOutOfRange { index: usize, depth: usize },
    #[error("cannot parse ordinal: {0}")]
    Parse(String),
}

/// Cardinality of an ordinal: `Finite(n) < Aleph(0) < Aleph(1) < ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CardinalSym {
    Finite(BigUint),
    Aleph(u32),
}

impl CardinalSym {
    pub fn finite(n: u64) -> Self {
        CardinalSym::Finite(BigUint::from(n))
    }

    /// The initial ordinal of this cardinal.
    pub fn to_ordinal(&self) -> Ordinal {
        match self {
            CardinalSym::Finite(n) => Ordinal::nat(n.clone()),
            CardinalSym::Aleph(k) => Ordinal::aleph(*k),
        }
    }
}

impl fmt::Display for CardinalSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CardinalSym::Finite(n) => write!(f, "{n}"),
            CardinalSym::Aleph(k) => write!(f, "aleph_{k}"),
        }
    }
}

impl FromStr for CardinalSym {
    type Err = OrdinalError;

    /// Accepts `aleph_k`, `w_k`, `w` or a natural number.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let index = |rest: &str| {
            rest.parse::<u32>()
                .map_err(|_| OrdinalError::Parse(format!("bad cardinal `{s}`")))
        };
        if let Some(rest) = s.strip_prefix("aleph_") {
            return Ok(CardinalSym::Aleph(index(rest)?));
        }
        if let Some(rest) = s.strip_prefix("w_") {
            return Ok(CardinalSym::Aleph(index(rest)?));
        }
        if s == "w" {
            return Ok(CardinalSym::Aleph(0));
        }
        s.parse::<BigUint>()
            .map(CardinalSym::Finite)
            .map_err(|_| OrdinalError::Parse(format!("bad cardinal `{s}`")))
    }
}

/// `w_index * coeff`, `index >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct AlephTerm {
    index: u32,
    coeff: Ordinal,
}

/// `w^exp * coeff`, `coeff >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct OmegaTerm {
    exp: u32,
    coeff: BigUint,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Ordinal {
    alephs: Vec<AlephTerm>,
    countable: Vec<OmegaTerm>,
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal::default()
    }

    pub fn one() -> Self {
        Ordinal::nat(1u32)
    }

    pub fn nat<N: Into<BigUint>>(n: N) -> Self {
        let n = n.into();
        if n.is_zero() {
            return Ordinal::zero();
        }
        Ordinal {
            alephs: Vec::new(),
            countable: vec![OmegaTerm { exp: 0, coeff: n }],
        }
    }

    /// `w^exp`.
    pub fn omega_pow(exp: u32) -> Self {
        Ordinal {
            alephs: Vec::new(),
            countable: vec![OmegaTerm {
                exp,
                coeff: BigUint::one(),
            }],
        }
    }

    pub fn omega() -> Self {
        Ordinal::omega_pow(1)
    }

    /// `w_k`; `w_0` is `w`.
    pub fn aleph(k: u32) -> Self {
        if k == 0 {
            return Ordinal::omega();
        }
        Ordinal {
            alephs: vec![AlephTerm {
                index: k,
                coeff: Ordinal::one(),
            }],
            countable: Vec::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.alephs.is_empty() && self.countable.is_empty()
    }

    pub fn as_natural(&self) -> Option<BigUint> {
        match (self.alephs.as_slice(), self.countable.as_slice()) {
            ([], []) => Some(BigUint::zero()),
            ([], [OmegaTerm { exp: 0, coeff }]) => Some(coeff.clone()),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.as_natural().is_some()
    }

    /// Index of the leading aleph term, if any.
    fn lead_aleph(&self) -> Option<u32> {
        self.alephs.first().map(|t| t.index)
    }

    /// Cardinality; `None` for zero.
    pub fn cardinal(&self) -> Option<CardinalSym> {
        if let Some(k) = self.lead_aleph() {
            return Some(CardinalSym::Aleph(k));
        }
        match self.countable.first() {
            None => None,
            Some(t) if t.exp > 0 => Some(CardinalSym::Aleph(0)),
            Some(t) => Some(CardinalSym::Finite(t.coeff.clone())),
        }
    }

    pub fn cardinal_of(&self) -> Result<CardinalSym, OrdinalError> {
        self.cardinal().ok_or(OrdinalError::Zero)
    }

    pub fn add(&self, other: &Ordinal) -> Ordinal {
        if other.is_zero() {
            return self.clone();
        }
        match other.lead_aleph() {
            Some(m) => {
                let mut alephs: Vec<AlephTerm> = self
                    .alephs
                    .iter()
                    .filter(|t| t.index > m)
                    .cloned()
                    .collect();
                let mut rest = other.alephs.iter();
                let head = rest.next().expect("lead aleph exists");
                let coeff = match self.alephs.iter().find(|t| t.index == m) {
                    Some(t) => t.coeff.add(&head.coeff),
                    None => head.coeff.clone(),
                };
                alephs.push(AlephTerm { index: m, coeff });
                alephs.extend(rest.cloned());
                Ordinal {
                    alephs,
                    countable: other.countable.clone(),
                }
            }
            None => Ordinal {
                alephs: self.alephs.clone(),
                countable: add_countable(&self.countable, &other.countable),
            },
        }
    }

    /// `w_k * x` in canonical form, `k >= 1`. Terms of `x` above `w_k`
    /// absorb the factor (`w_k * w_m = w_m` for `m > k`).
    fn aleph_times(k: u32, x: &Ordinal) -> Ordinal {
        debug_assert!(k >= 1);
        if x.is_zero() {
            return Ordinal::zero();
        }
        let mut alephs: Vec<AlephTerm> = x.alephs.iter().filter(|t| t.index > k).cloned().collect();
        let low = Ordinal {
            alephs: x.alephs.iter().filter(|t| t.index <= k).cloned().collect(),
            countable: x.countable.clone(),
        };
        if !low.is_zero() {
            alephs.push(AlephTerm {
                index: k,
                coeff: low,
            });
        }
        Ordinal {
            alephs,
            countable: Vec::new(),
        }
    }

    pub fn mul(&self, other: &Ordinal) -> Ordinal {
        if self.is_zero() || other.is_zero() {
            return Ordinal::zero();
        }
        // Left distributivity over the summands of `other`.
        let mut out = Ordinal::zero();
        for t in &other.alephs {
            let factor = self.mul_aleph(t.index).mul(&t.coeff);
            out = out.add(&factor);
        }
        for t in &other.countable {
            let factor = if t.exp == 0 {
                self.mul_nat(&t.coeff)
            } else {
                self.mul_omega_pow(t.exp).mul_nat(&t.coeff)
            };
            out = out.add(&factor);
        }
        out
    }

    fn mul_nat(&self, c: &BigUint) -> Ordinal {
        if c.is_zero() || self.is_zero() {
            return Ordinal::zero();
        }
        let mut out = self.clone();
        if let Some(head) = out.alephs.first_mut() {
            head.coeff = head.coeff.mul_nat(c);
        } else {
            out.countable[0].coeff *= c;
        }
        out
    }

    /// `self * w^e` for `e >= 1` and `self` nonzero.
    fn mul_omega_pow(&self, e: u32) -> Ordinal {
        match self.alephs.first() {
            Some(head) => Ordinal::aleph_times(head.index, &head.coeff.mul_omega_pow(e)),
            None => Ordinal::omega_pow(self.countable[0].exp + e),
        }
    }

    /// `self * w_m` for `m >= 1` and `self` nonzero.
    fn mul_aleph(&self, m: u32) -> Ordinal {
        match self.alephs.first() {
            Some(head) if head.index >= m => {
                Ordinal::aleph_times(head.index, &head.coeff.mul_aleph(m))
            }
            _ => Ordinal::aleph(m),
        }
    }

    /// `self^n` for natural `n`.
    pub fn pow_nat(&self, n: u32) -> Ordinal {
        (0..n).fold(Ordinal::one(), |acc, _| acc.mul(self))
    }

    /// Whether `self = |self| * b` for some `b`: nothing may remain below
    /// the leading cardinal.
    pub fn is_cardinally_even(&self) -> bool {
        match (self.alephs.as_slice(), self.countable.as_slice()) {
            ([], countable) => match countable {
                [] => true,
                [OmegaTerm { exp: 0, .. }] => true,
                terms => terms.iter().all(|t| t.exp > 0),
            },
            ([_], []) => true,
            _ => false,
        }
    }

    /// Cardinal normal form: cardinally even terms of strictly decreasing
    /// cardinality. Empty for zero.
    pub fn cnf(&self) -> Vec<Ordinal> {
        let mut terms: Vec<Ordinal> = self
            .alephs
            .iter()
            .map(|t| Ordinal {
                alephs: vec![t.clone()],
                countable: Vec::new(),
            })
            .collect();
        let (infinite, finite): (Vec<OmegaTerm>, Vec<OmegaTerm>) =
            self.countable.iter().cloned().partition(|t| t.exp > 0);
        if !infinite.is_empty() {
            terms.push(Ordinal {
                alephs: Vec::new(),
                countable: infinite,
            });
        }
        if !finite.is_empty() {
            terms.push(Ordinal {
                alephs: Vec::new(),
                countable: finite,
            });
        }
        terms
    }

    /// Cardinal normal form with every term of cardinality below `lambda`
    /// collapsed into one final term.
    pub fn truncated_cnf(&self, lambda: &CardinalSym) -> Result<Vec<Ordinal>, OrdinalError> {
        if let CardinalSym::Finite(_) = lambda {
            return Err(OrdinalError::FiniteLambda(lambda.clone()));
        }
        let mut kept = Vec::new();
        let mut tail = Ordinal::zero();
        for term in self.cnf() {
            let card = term.cardinal().expect("cnf terms are nonzero");
            if card >= *lambda {
                kept.push(term);
            } else {
                tail = tail.add(&term);
            }
        }
        if !tail.is_zero() {
            kept.push(tail);
        }
        Ok(kept)
    }

    /// Number of terms in the `lambda`-truncated cardinal normal form.
    pub fn daleth(&self, lambda: &CardinalSym) -> Result<usize, OrdinalError> {
        Ok(self.truncated_cnf(lambda)?.len())
    }

    /// Sum of the first `j` normal terms, `j <= daleth`.
    pub fn normal_segment(&self, j: usize, lambda: &CardinalSym) -> Result<Ordinal, OrdinalError> {
        let terms = self.truncated_cnf(lambda)?;
        if j > terms.len() {
            return Err(OrdinalError::IndexOutOfRange {
                index: j,
                depth: terms.len(),
            });
        }
        Ok(sum(&terms[..j]))
    }

    /// Half-open interval `[segment j, segment j+1)`, `j < daleth`.
    pub fn normal_interval(
        &self,
        j: usize,
        lambda: &CardinalSym,
    ) -> Result<(Ordinal, Ordinal), OrdinalError> {
        let terms = self.truncated_cnf(lambda)?;
        if j >= terms.len() {
            return Err(OrdinalError::IndexOutOfRange {
                index: j,
                depth: terms.len(),
            });
        }
        Ok((sum(&terms[..j]), sum(&terms[..=j])))
    }

    /// Rebuilds the canonical form from arbitrary (possibly unordered or
    /// non-canonical) parts by summing them left to right.
    pub fn normalize(&self) -> Ordinal {
        let mut out = Ordinal::zero();
        for t in &self.alephs {
            out = out.add(&Ordinal::aleph_times(t.index, &t.coeff.normalize()));
        }
        for t in &self.countable {
            out = out.add(&Ordinal::omega_pow(t.exp).mul_nat(&t.coeff));
        }
        out
    }

    /// Structural view for callers building or inspecting terms: aleph terms
    /// as `(index, coeff)` then countable terms as `(exp, coeff)`.
    pub fn parts(&self) -> OrdinalParts {
        (
            self.alephs
                .iter()
                .map(|t| (t.index, t.coeff.clone()))
                .collect(),
            self.countable
                .iter()
                .map(|t| (t.exp, t.coeff.clone()))
                .collect(),
        )
    }

    /// Sum of `w_k * b` over `alephs` then `w^e * c` over `countable`, in the
    /// given order.
    pub fn from_parts(alephs: Vec<(u32, Ordinal)>, countable: Vec<(u32, BigUint)>) -> Ordinal {
        let mut out = Ordinal::zero();
        for (k, b) in alephs {
            let term = if k == 0 {
                Ordinal::omega().mul(&b)
            } else {
                Ordinal::aleph_times(k, &b)
            };
            out = out.add(&term);
        }
        for (e, c) in countable {
            out = out.add(&Ordinal::omega_pow(e).mul_nat(&c));
        }
        out
    }
}

pub fn sum(terms: &[Ordinal]) -> Ordinal {
    terms.iter().fold(Ordinal::zero(), |acc, t| acc.add(t))
}

fn add_countable(a: &[OmegaTerm], b: &[OmegaTerm]) -> Vec<OmegaTerm> {
    let Some(head) = b.first() else {
        return a.to_vec();
    };
    let mut out: Vec<OmegaTerm> = a.iter().filter(|t| t.exp > head.exp).cloned().collect();
    let coeff = match a.iter().find(|t| t.exp == head.exp) {
        Some(t) => &t.coeff + &head.coeff,
        None => head.coeff.clone(),
    };
    out.push(OmegaTerm {
        exp: head.exp,
        coeff,
    });
    out.extend(b[1..].iter().cloned());
    out
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.alephs.iter().zip(&other.alephs) {
            let ord = a.index.cmp(&b.index).then_with(|| a.coeff.cmp(&b.coeff));
            if ord != Ordering::Equal {
                return ord;
            }
        }
        // A missing aleph term means the remainder is below the other side's
        // next term.
        match self.alephs.len().cmp(&other.alephs.len()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.countable.iter().zip(&other.countable) {
            let ord = a.exp.cmp(&b.exp).then_with(|| a.coeff.cmp(&b.coeff));
            if ord != Ordering::Equal {
                return ord;
            }
        }
        self.countable.len().cmp(&other.countable.len())
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for t in &self.alephs {
            let coeff = match t.coeff.as_natural() {
                Some(n) if n.is_one() => String::new(),
                Some(n) => format!("*{n}"),
                None => format!("*({})", t.coeff),
            };
            parts.push(format!("w_{}{coeff}", t.index));
        }
        for t in &self.countable {
            let base = match t.exp {
                0 => {
                    parts.push(t.coeff.to_string());
                    continue;
                }
                1 => "w".to_string(),
                e => format!("w^{e}"),
            };
            if t.coeff.is_one() {
                parts.push(base);
            } else {
                parts.push(format!("{base}*{}", t.coeff));
            }
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for Ordinal {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Ordinal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Serialize for CardinalSym {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Grammar: `expr := term ('+' term)*`, `term := factor ('*' factor)*`,
/// `factor := atom ('^' nat)?`, `atom := nat | 'w' | 'w_' nat | '(' expr ')'`.
impl FromStr for Ordinal {
    type Err = OrdinalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parser = Parser {
            src: s.as_bytes(),
            pos: 0,
        };
        let value = parser.expr()?;
        parser.skip_ws();
        if parser.pos != parser.src.len() {
            return Err(parser.error("trailing input"));
        }
        Ok(value)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> OrdinalError {
        OrdinalError::Parse(format!("{what} at byte {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Ordinal, OrdinalError> {
        let mut value = self.term()?;
        while self.eat(b'+') {
            value = value.add(&self.term()?);
        }
        Ok(value)
    }

    fn term(&mut self) -> Result<Ordinal, OrdinalError> {
        let mut value = self.factor()?;
        while self.eat(b'*') {
            value = value.mul(&self.factor()?);
        }
        Ok(value)
    }

    fn factor(&mut self) -> Result<Ordinal, OrdinalError> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let n = self.natural()?;
            let n = n.to_u32().ok_or_else(|| self.error("exponent too large"))?;
            return Ok(base.pow_nat(n));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Ordinal, OrdinalError> {
        self.skip_ws();
        match self.src.get(self.pos) {
            Some(b'(') => {
                self.pos += 1;
                let value = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(value)
            }
            Some(b'w') => {
                self.pos += 1;
                if self.src.get(self.pos) == Some(&b'_') {
                    self.pos += 1;
                    let k = self.natural()?;
                    let k = k
                        .to_u32()
                        .ok_or_else(|| self.error("aleph index too large"))?;
                    Ok(Ordinal::aleph(k))
                } else {
                    Ok(Ordinal::omega())
                }
            }
            Some(c) if c.is_ascii_digit() => Ok(Ordinal::nat(self.natural()?)),
            _ => Err(self.error("expected a number, `w`, `w_k` or `(`")),
        }
    }

    fn natural(&mut self) -> Result<BigUint, OrdinalError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("ascii digits parse"))
    }
}
