use super::{ElementSet, FinitePoset};

/// Pairwise incompatible elements (no two share an extension).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Antichain(ElementSet);

impl Antichain {
    pub fn new(poset: &FinitePoset, members: ElementSet) -> Option<Antichain> {
        let ok = members.iter().all(|a| {
            members
                .iter()
                .filter(|&b| b > a)
                .all(|b| poset.incompatible(a, b))
        });
        ok.then_some(Antichain(members))
    }

    pub fn members(self) -> ElementSet {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.len()
    }

    pub fn is_empty(self) -> bool {
        self.0.is_empty()
    }
}

struct Search<'a> {
    poset: &'a FinitePoset,
    /// `incompatible[i]`: elements incompatible with `i`.
    incompatible: Vec<ElementSet>,
    best: ElementSet,
}

impl Search<'_> {
    // Include-first branching in index order visits equal-size candidates in
    // lexicographic order, so keeping only strict improvements yields the
    // lexicographically least maximum antichain.
    fn run(&mut self, chosen: ElementSet, candidates: ElementSet) {
        let Some(next) = candidates.first() else {
            if chosen.len() > self.best.len() {
                self.best = chosen;
            }
            return;
        };
        if chosen.len() + candidates.len() <= self.best.len() {
            return;
        }
        let rest = ElementSet(candidates.0 & !(1 << next));
        let mut with = chosen;
        with.insert(next);
        self.run(with, rest & self.incompatible[next]);
        self.run(chosen, rest);
    }
}

impl FinitePoset {
    /// A largest antichain, by branch and bound; ties go to the
    /// lexicographically least member list.
    pub fn max_antichain(&self) -> Antichain {
        let n = self.len();
        let incompatible = (0..n)
            .map(|i| {
                ElementSet::from_indices((0..n).filter(|&j| j != i && self.incompatible(i, j)))
            })
            .collect();
        let mut search = Search {
            poset: self,
            incompatible,
            best: ElementSet::EMPTY,
        };
        search.run(ElementSet::EMPTY, self.all());
        debug_assert!(Antichain::new(search.poset, search.best).is_some());
        Antichain(search.best)
    }
}
