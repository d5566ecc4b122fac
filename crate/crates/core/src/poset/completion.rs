use super::{ElementSet, FinitePoset, PosetError, Separativity};
use crate::topology::{FiniteSpace, PointSet, TopologyError};

/// Regular-open algebra (minus the empty set) of a separative poset's
/// down-set topology, with the dense embedding `p -> int(cl(p's extensions))`.
#[derive(Clone, Debug)]
pub struct BooleanCompletion {
    pub algebra: FinitePoset,
    /// Open set behind each algebra element, indexed like `algebra`.
    pub sets: Vec<PointSet>,
    /// `embedding[p]` is the algebra element `p` maps to.
    pub embedding: Vec<usize>,
}

impl FinitePoset {
    /// The topology whose opens are the sets closed under extension.
    pub fn down_set_space(&self) -> Result<FiniteSpace, TopologyError> {
        let basis: Vec<PointSet> = (0..self.len()).map(|p| self.extensions(p)).collect();
        FiniteSpace::generate(self.ids().to_vec(), &basis)
    }

    pub fn boolean_completion(&self) -> Result<BooleanCompletion, TopologyError> {
        if let Separativity::Counterexample(p, q) = self.separativity() {
            return Err(PosetError::NotSeparative(self.id(p).into(), self.id(q).into()).into());
        }
        let space = self.down_set_space()?;
        let ro = space.regular_open_algebra()?;
        let embedding = (0..self.len())
            .map(|p| {
                let hull = space.interior(space.closure(self.extensions(p)));
                ro.sets
                    .iter()
                    .position(|&s| s == hull)
                    .expect("int(cl(U)) of an open U is regular open")
            })
            .collect();
        Ok(BooleanCompletion {
            algebra: ro.poset,
            sets: ro.sets,
            embedding,
        })
    }
}

impl BooleanCompletion {
    pub fn image(&self) -> ElementSet {
        ElementSet::from_indices(self.embedding.iter().copied())
    }
}
