use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use super::{GameError, RegionSystem};
use crate::cardinal::ExtendedCardinal;

/// A finite union of open rational intervals, components sorted and
/// pairwise disjoint (touching endpoints allowed: the endpoint is in
/// neither).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalUnion(Vec<(BigRational, BigRational)>);

impl IntervalUnion {
    pub fn new(mut parts: Vec<(BigRational, BigRational)>) -> Result<Self, GameError> {
        if parts.is_empty() {
            return Err(GameError::Invalid(
                "interval union has no components".into(),
            ));
        }
        if let Some((lo, hi)) = parts.iter().find(|(lo, hi)| lo >= hi) {
            return Err(GameError::Invalid(format!("empty interval ({lo}, {hi})")));
        }
        parts.sort();
        let mut merged: Vec<(BigRational, BigRational)> = Vec::with_capacity(parts.len());
        for (lo, hi) in parts {
            match merged.last_mut() {
                Some(last) if lo < last.1 => {
                    if hi > last.1 {
                        last.1 = hi;
                    }
                }
                _ => merged.push((lo, hi)),
            }
        }
        Ok(IntervalUnion(merged))
    }

    pub fn interval(lo: BigRational, hi: BigRational) -> Result<Self, GameError> {
        IntervalUnion::new(vec![(lo, hi)])
    }

    pub fn components(&self) -> &[(BigRational, BigRational)] {
        &self.0
    }
}

/// The reals seen through open rational intervals inside an ambient one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalSystem {
    ambient: IntervalUnion,
}

impl IntervalSystem {
    pub fn new(lo: BigRational, hi: BigRational) -> Result<Self, GameError> {
        Ok(IntervalSystem {
            ambient: IntervalUnion::interval(lo, hi)?,
        })
    }
}

impl Default for IntervalSystem {
    /// The unit interval.
    fn default() -> Self {
        IntervalSystem::new(BigRational::zero(), BigRational::from_integer(1.into()))
            .expect("0 < 1")
    }
}

impl RegionSystem for IntervalSystem {
    type Region = IntervalUnion;
    type Point = String;

    fn id(&self) -> &'static str {
        "intervals"
    }

    fn whole(&self) -> IntervalUnion {
        self.ambient.clone()
    }

    /// Each component of `a` is connected, so it must sit inside a single
    /// component of `b`.
    fn is_subset(&self, a: &IntervalUnion, b: &IntervalUnion) -> bool {
        a.0.iter()
            .all(|(lo, hi)| b.0.iter().any(|(blo, bhi)| blo <= lo && hi <= bhi))
    }

    /// A tenth-grid subinterval of a random component.
    fn sample_refinement(&self, a: &IntervalUnion, rng: &mut ChaCha8Rng) -> Option<IntervalUnion> {
        let (lo, hi) = &a.0[rng.gen_range(0..a.0.len())];
        let (i, j) = loop {
            let i = rng.gen_range(0..10i64);
            let j = rng.gen_range(i + 1..=10);
            if a.0.len() > 1 || (i, j) != (0, 10) {
                break (i, j);
            }
        };
        let at = |k: i64| lo + (hi - lo) * BigRational::new(BigInt::from(k), BigInt::from(10));
        Some(IntervalUnion(vec![(at(i), at(j))]))
    }

    /// A finite chain of open intervals says nothing about its limit, so no
    /// witness is ever offered.
    fn witness_point(&self, _chain: &[IntervalUnion]) -> Option<String> {
        None
    }

    fn declared_souslin_number(&self) -> ExtendedCardinal {
        ExtendedCardinal::Aleph(1)
    }
}

impl fmt::Display for IntervalUnion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (lo, hi)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" u ")?;
            }
            write!(f, "({lo}, {hi})")?;
        }
        Ok(())
    }
}

/// `(1/3, 1/2) u (3/4, 1)`.
impl FromStr for IntervalUnion {
    type Err = GameError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || GameError::Parse(s.to_string());
        let parts = s
            .split(['u', 'U', '∪'])
            .map(|part| {
                let inner = part
                    .trim()
                    .strip_prefix('(')
                    .and_then(|x| x.strip_suffix(')'))
                    .ok_or_else(err)?;
                let (lo, hi) = inner.split_once(',').ok_or_else(err)?;
                let lo: BigRational = lo.trim().parse().map_err(|_| err())?;
                let hi: BigRational = hi.trim().parse().map_err(|_| err())?;
                Ok((lo, hi))
            })
            .collect::<Result<Vec<_>, GameError>>()?;
        IntervalUnion::new(parts)
    }
}

/// Components as `[lo, hi]` pairs of exact rational strings.
impl Serialize for IntervalUnion {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for (lo, hi) in &self.0 {
            seq.serialize_element(&[lo.to_string(), hi.to_string()])?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn normalizes_overlaps() {
        let u = IntervalUnion::new(vec![(q(1, 2), q(1, 1)), (q(0, 1), q(3, 4))]).unwrap();
        assert_eq!(u.components(), &[(q(0, 1), q(1, 1))]);
        let touching = IntervalUnion::new(vec![(q(1, 2), q(1, 1)), (q(0, 1), q(1, 2))]).unwrap();
        assert_eq!(touching.components().len(), 2);
        assert!(IntervalUnion::interval(q(1, 2), q(1, 2)).is_err());
    }

    #[test]
    fn subset_respects_gaps() {
        let sys = IntervalSystem::default();
        let two: IntervalUnion = "(0, 1/2) u (1/2, 1)".parse().unwrap();
        let across: IntervalUnion = "(1/4, 3/4)".parse().unwrap();
        assert!(!sys.is_subset(&across, &two));
        assert!(sys.is_subset(&two, &sys.whole()));
        assert!(sys.is_subset(&"(1/8, 1/4)".parse().unwrap(), &two));
        assert!(!sys.equals(&two, &sys.whole()));
    }

    #[test]
    fn refinement_is_strict() {
        let sys = IntervalSystem::default();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut cur = sys.whole();
        for _ in 0..50 {
            let next = sys.sample_refinement(&cur, &mut rng).unwrap();
            assert!(sys.is_subset(&next, &cur) && !sys.equals(&next, &cur));
            cur = next;
        }
    }

    #[test]
    fn literal_and_json() {
        let u: IntervalUnion = "(1/3, 1/2) u (3/4, 1)".parse().unwrap();
        assert_eq!(u.to_string(), "(1/3, 1/2) u (3/4, 1)");
        assert_eq!(
            serde_json::to_string(&u).unwrap(),
            r#"[["1/3","1/2"],["3/4","1"]]"#
        );
        assert!("(1, x)".parse::<IntervalUnion>().is_err());
    }
}
