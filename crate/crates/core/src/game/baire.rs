use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use super::{GameError, RegionSystem};
use crate::cardinal::ExtendedCardinal;

/// Baire space `ω^ω`, played on basic clopens.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BaireSpace;

/// The basic clopen `[s]`: all sequences extending `s`.
///
/// Symbols are unbounded naturals; coded moves carry bitmasks whose width
/// grows with the play. The sequence is shared and prefixes are views into
/// it, so clones and prefixes are cheap.
#[derive(Clone, Default)]
pub struct BaireClopen {
    seq: Arc<[BigUint]>,
    len: usize,
}

/// The point `s ⌢ 0^ω`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BairePoint(pub Vec<BigUint>);

impl BaireClopen {
    pub fn root() -> Self {
        BaireClopen::default()
    }

    pub fn new(symbols: Vec<BigUint>) -> Self {
        BaireClopen {
            len: symbols.len(),
            seq: symbols.into(),
        }
    }

    pub fn from_u64s(symbols: &[u64]) -> Self {
        BaireClopen::new(symbols.iter().map(|&d| BigUint::from(d)).collect())
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn symbols(&self) -> &[BigUint] {
        &self.seq[..self.len]
    }

    /// `[self] ⊆ [other]`, i.e. `other`'s sequence is a prefix of ours.
    pub fn within(&self, other: &BaireClopen) -> bool {
        other.len <= self.len
            && (Arc::ptr_eq(&self.seq, &other.seq) || self.symbols().starts_with(other.symbols()))
    }

    /// Panics if `len` exceeds the sequence length.
    pub fn prefix(&self, len: usize) -> BaireClopen {
        assert!(len <= self.len, "prefix longer than the sequence");
        BaireClopen {
            seq: Arc::clone(&self.seq),
            len,
        }
    }

    pub fn child(&self, symbol: BigUint) -> BaireClopen {
        let mut s = Vec::with_capacity(self.len + 1);
        s.extend_from_slice(self.symbols());
        s.push(symbol);
        BaireClopen::new(s)
    }
}

impl PartialEq for BaireClopen {
    fn eq(&self, other: &Self) -> bool {
        self.symbols() == other.symbols()
    }
}

impl Eq for BaireClopen {}

impl std::hash::Hash for BaireClopen {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.symbols().hash(state)
    }
}

impl PartialOrd for BaireClopen {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BaireClopen {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.symbols().cmp(other.symbols())
    }
}

impl fmt::Debug for BaireClopen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("BaireClopen").field(&self.symbols()).finish()
    }
}

impl RegionSystem for BaireSpace {
    type Region = BaireClopen;
    type Point = BairePoint;

    fn id(&self) -> &'static str {
        "baire"
    }

    fn whole(&self) -> BaireClopen {
        BaireClopen::root()
    }

    fn is_subset(&self, a: &BaireClopen, b: &BaireClopen) -> bool {
        a.within(b)
    }

    /// Appends a uniform digit, then keeps appending with probability 1/2.
    fn sample_refinement(&self, a: &BaireClopen, rng: &mut ChaCha8Rng) -> Option<BaireClopen> {
        let mut s = a.symbols().to_vec();
        loop {
            s.push(BigUint::from(rng.gen_range(0u32..10)));
            if !rng.gen_bool(0.5) {
                return Some(BaireClopen::new(s));
            }
        }
    }

    /// The longest sequence of a prefix chain, padded with zeros, lies in
    /// every member.
    fn witness_point(&self, chain: &[BaireClopen]) -> Option<BairePoint> {
        let longest = chain
            .iter()
            .max_by_key(|c| c.len())
            .cloned()
            .unwrap_or_default();
        chain
            .iter()
            .all(|c| longest.within(c))
            .then(|| BairePoint(longest.symbols().to_vec()))
    }

    fn closed_refinement(&self, a: &BaireClopen) -> Option<BaireClopen> {
        Some(a.child(BigUint::from(0u32)))
    }

    fn supports_closed_refinement(&self) -> bool {
        true
    }

    fn declared_souslin_number(&self) -> ExtendedCardinal {
        ExtendedCardinal::Aleph(1)
    }
}

fn write_symbols(f: &mut fmt::Formatter<'_>, s: &[BigUint]) -> fmt::Result {
    f.write_str("[")?;
    for (i, d) in s.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{d}")?;
    }
    f.write_str("]")
}

impl fmt::Display for BaireClopen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_symbols(f, self.symbols())
    }
}

impl fmt::Display for BairePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_symbols(f, &self.0)?;
        f.write_str("^0")
    }
}

/// Accepts `[3,1,4]`, `<3,1,4>`, `⟨3,1,4⟩` or bare `3 1 4`; `[]` and the
/// empty string are the root.
impl FromStr for BaireClopen {
    type Err = GameError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let inner = [('[', ']'), ('<', '>'), ('⟨', '⟩')]
            .iter()
            .find_map(|&(l, r)| t.strip_prefix(l).and_then(|x| x.strip_suffix(r)))
            .unwrap_or(t);
        inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|x| !x.is_empty())
            .map(|x| {
                x.parse::<BigUint>()
                    .map_err(|_| GameError::Parse(s.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(BaireClopen::new)
    }
}

fn serialize_symbols<S: Serializer>(symbols: &[BigUint], serializer: S) -> Result<S::Ok, S::Error> {
    let mut seq = serializer.serialize_seq(Some(symbols.len()))?;
    for d in symbols {
        match d.to_u64() {
            Some(x) => seq.serialize_element(&x)?,
            None => seq.serialize_element(&d.to_string())?,
        }
    }
    seq.end()
}

/// A JSON array; symbols beyond `u64` are written as decimal strings.
impl Serialize for BaireClopen {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serialize_symbols(self.symbols(), serializer)
    }
}

impl Serialize for BairePoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serialize_symbols(&self.0, serializer)
    }
}

impl<'de> Deserialize<'de> for BaireClopen {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;

        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Symbol {
            Num(u64),
            Text(String),
        }

        impl<'de> Visitor<'de> for V {
            type Value = BaireClopen;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an array of naturals or a sequence literal")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<BaireClopen, E> {
                v.parse().map_err(E::custom)
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<BaireClopen, A::Error> {
                let mut out = Vec::new();
                while let Some(sym) = seq.next_element::<Symbol>()? {
                    out.push(match sym {
                        Symbol::Num(x) => BigUint::from(x),
                        Symbol::Text(t) => t.trim().parse().map_err(de::Error::custom)?,
                    });
                }
                Ok(BaireClopen::new(out))
            }
        }

        d.deserialize_any(V)
    }
}
