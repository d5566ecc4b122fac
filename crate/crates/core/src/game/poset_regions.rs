use rand::seq::IteratorRandom;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{GameError, RegionSystem};
use crate::cardinal::ExtendedCardinal;
use crate::poset::{ElementSet, FinitePoset};

/// A poset with the topology whose opens are the sets closed under
/// extension; the basic open of `p` is the set of `p`'s extensions.
#[derive(Clone, Debug)]
pub struct PosetRegions {
    poset: FinitePoset,
}

/// A nonempty open set, serialized as its sorted element indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DownSet(ElementSet);

impl Serialize for DownSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter())
    }
}

impl DownSet {
    pub fn members(&self) -> ElementSet {
        self.0
    }
}

impl PosetRegions {
    pub fn new(poset: FinitePoset) -> Self {
        PosetRegions { poset }
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    /// The basic open below `id`.
    pub fn element(&self, id: &str) -> Result<DownSet, GameError> {
        let p = self
            .poset
            .index_of(id)
            .map_err(|e| GameError::Invalid(e.to_string()))?;
        Ok(DownSet(self.poset.extensions(p)))
    }

    pub fn region(&self, set: ElementSet) -> Result<DownSet, GameError> {
        if set.is_empty() {
            return Err(GameError::Invalid("empty region".into()));
        }
        if !set.is_subset(self.poset.all()) || self.poset.down_set(set) != set {
            return Err(GameError::Invalid(
                "region is not closed under extension".into(),
            ));
        }
        Ok(DownSet(set))
    }
}

impl RegionSystem for PosetRegions {
    type Region = DownSet;
    type Point = String;

    fn id(&self) -> &'static str {
        "poset"
    }

    fn whole(&self) -> DownSet {
        DownSet(self.poset.all())
    }

    fn is_subset(&self, a: &DownSet, b: &DownSet) -> bool {
        a.0.is_subset(b.0)
    }

    /// The extensions of a random member, when that is a proper subset.
    fn sample_refinement(&self, a: &DownSet, rng: &mut ChaCha8Rng) -> Option<DownSet> {
        a.0.iter()
            .map(|p| self.poset.extensions(p))
            .filter(|&e| e != a.0)
            .choose(rng)
            .map(DownSet)
    }

    /// Certifies only a singleton: every later legal move must equal it.
    fn witness_point(&self, chain: &[DownSet]) -> Option<String> {
        let last = chain.last()?;
        (last.0.len() == 1).then(|| self.poset.id(last.0.first().expect("nonempty")).to_string())
    }

    fn declared_souslin_number(&self) -> ExtendedCardinal {
        self.poset.souslin_number()
    }
}
