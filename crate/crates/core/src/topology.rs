//! Finite topological spaces.
//!
//! Points are indexed in lexicographic order of their ids and point sets are
//! bitmasks ([`PointSet`]). Open-set posets use element ids of the form
//! `{x,y}` listing the member points in index order.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::cardinal::ExtendedCardinal;
use crate::poset::{FinitePoset, PosetError};

pub use crate::poset::ElementSet as PointSet;

/// Largest space accepted; topologies are materialised as explicit open
/// families.
pub const MAX_POINTS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("space has no points")]
    NoPoints,
    #[error("space has {0} points; at most {MAX_POINTS} supported")]
    TooManyPoints(usize),
    #[error("point `{0}` listed twice")]
    DuplicatePoint(String),
    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    #[error("open family is not a topology: {0}")]
    NotATopology(String),
    #[error("seed is not a cellular family: {0}")]
    NotCellular(String),
    #[error(transparent)]
    Poset(#[from] PosetError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSpace {
    points: Vec<String>,
    /// Sorted by numeric bitmask; always contains the empty set and the
    /// whole space.
    opens: Vec<PointSet>,
}

/// Outcome of one space predicate with a witness on failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Predicate {
    pub holds: bool,
    pub witness: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpacePredicates {
    pub hausdorff: Predicate,
    pub quasi_regular: Predicate,
    /// The refinement condition of quasi-regularity without Hausdorff.
    pub pi_regular: Predicate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpaceInvariants {
    pub souslin_number: ExtendedCardinal,
    pub pi_noetherian_type: ExtendedCardinal,
    pub pi_base: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TranslationReport {
    pub pi_regular: bool,
    pub quasi_regular: bool,
    pub space: (ExtendedCardinal, ExtendedCardinal),
    pub regular_open: (ExtendedCardinal, ExtendedCardinal),
    /// Equality is only asserted for pi-regular spaces.
    pub asserted: bool,
    pub equal: bool,
}

impl TranslationReport {
    pub fn violated(&self) -> bool {
        self.asserted && !self.equal
    }
}

/// Regular-open algebra minus the empty set, with the open set behind each
/// poset element.
#[derive(Clone, Debug)]
pub struct RegularOpenAlgebra {
    pub poset: FinitePoset,
    pub sets: Vec<PointSet>,
}

impl FiniteSpace {
    /// Validates an explicit open family.
    pub fn new(points: Vec<String>, opens: Vec<PointSet>) -> Result<FiniteSpace, TopologyError> {
        let points = sorted_points(points)?;
        let full = PointSet::full(points.len());
        let family: BTreeSet<PointSet> = opens.into_iter().collect();
        if let Some(bad) = family.iter().find(|u| !u.is_subset(full)) {
            return Err(TopologyError::NotATopology(format!(
                "{bad:?} has unknown points"
            )));
        }
        for required in [PointSet::EMPTY, full] {
            if !family.contains(&required) {
                return Err(TopologyError::NotATopology(
                    "missing the empty set or the whole space".into(),
                ));
            }
        }
        for &a in &family {
            for &b in &family {
                if !family.contains(&(a | b)) || !family.contains(&(a & b)) {
                    return Err(TopologyError::NotATopology(
                        "not closed under union and intersection".into(),
                    ));
                }
            }
        }
        Ok(FiniteSpace {
            points,
            opens: family.into_iter().collect(),
        })
    }

    /// Smallest topology containing `subbasis`: finite intersections first,
    /// then unions, each to a fixpoint.
    pub fn generate(
        points: Vec<String>,
        subbasis: &[PointSet],
    ) -> Result<FiniteSpace, TopologyError> {
        let points = sorted_points(points)?;
        let full = PointSet::full(points.len());
        if let Some(bad) = subbasis.iter().find(|u| !u.is_subset(full)) {
            return Err(TopologyError::NotATopology(format!(
                "{bad:?} has unknown points"
            )));
        }
        let mut basis: BTreeSet<PointSet> = subbasis.iter().copied().collect();
        basis.insert(full);
        close_under(&mut basis, |a, b| a & b);
        let mut opens = basis;
        opens.insert(PointSet::EMPTY);
        close_under(&mut opens, |a, b| a | b);
        Ok(FiniteSpace {
            points,
            opens: opens.into_iter().collect(),
        })
    }

    /// Generates from subbasis sets given as point ids.
    pub fn generate_from_ids(
        points: Vec<String>,
        subbasis: &[Vec<String>],
    ) -> Result<FiniteSpace, TopologyError> {
        let sorted = sorted_points(points.clone())?;
        let sets = subbasis
            .iter()
            .map(|ids| point_set(&sorted, ids))
            .collect::<Result<Vec<_>, _>>()?;
        FiniteSpace::generate(points, &sets)
    }

    pub fn discrete(n: usize) -> Result<FiniteSpace, TopologyError> {
        let points = default_points(n);
        let singletons: Vec<_> = (0..n).map(PointSet::singleton).collect();
        FiniteSpace::generate(points, &singletons)
    }

    pub fn indiscrete(n: usize) -> Result<FiniteSpace, TopologyError> {
        FiniteSpace::generate(default_points(n), &[])
    }

    /// Two points, `x` open and `y` not.
    pub fn sierpinski() -> FiniteSpace {
        FiniteSpace::generate(vec!["x".into(), "y".into()], &[PointSet::singleton(0)])
            .expect("two points")
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    pub fn full(&self) -> PointSet {
        PointSet::full(self.points.len())
    }

    pub fn is_open(&self, u: PointSet) -> bool {
        self.opens.binary_search(&u).is_ok()
    }

    pub fn point_set<S: AsRef<str>>(&self, ids: &[S]) -> Result<PointSet, TopologyError> {
        point_set(&self.points, ids)
    }

    pub fn names(&self, u: PointSet) -> Vec<String> {
        u.iter().map(|i| self.points[i].clone()).collect()
    }

    pub fn label(&self, u: PointSet) -> String {
        format!("{{{}}}", self.names(u).join(","))
    }

    fn nonempty_opens(&self) -> impl Iterator<Item = PointSet> + '_ {
        self.opens.iter().copied().filter(|u| !u.is_empty())
    }

    pub fn interior(&self, u: PointSet) -> PointSet {
        self.opens
            .iter()
            .filter(|o| o.is_subset(u))
            .fold(PointSet::EMPTY, |acc, &o| acc | o)
    }

    /// Complement of the union of every open disjoint from `u`.
    pub fn closure(&self, u: PointSet) -> PointSet {
        let outside = self
            .opens
            .iter()
            .filter(|o| !o.intersects(u))
            .fold(PointSet::EMPTY, |acc, &o| acc | o);
        PointSet(self.full().0 & !outside.0)
    }

    pub fn closure_interior(&self, u: PointSet) -> (PointSet, PointSet) {
        (self.closure(u), self.interior(u))
    }

    pub fn is_regular_open(&self, u: PointSet) -> bool {
        self.interior(self.closure(u)) == u
    }

    pub fn is_dense(&self, u: PointSet) -> bool {
        self.closure(u) == self.full()
    }

    pub fn regular_opens(&self) -> Vec<PointSet> {
        self.opens
            .iter()
            .copied()
            .filter(|&u| self.is_regular_open(u))
            .collect()
    }

    /// Regular opens minus the empty set, ordered by inclusion.
    pub fn regular_open_algebra(&self) -> Result<RegularOpenAlgebra, TopologyError> {
        let sets: Vec<_> = self
            .regular_opens()
            .into_iter()
            .filter(|u| !u.is_empty())
            .collect();
        self.inclusion_poset(sets)
    }

    /// Nonempty opens ordered by inclusion.
    pub fn open_poset(&self) -> Result<RegularOpenAlgebra, TopologyError> {
        self.inclusion_poset(self.nonempty_opens().collect())
    }

    fn inclusion_poset(&self, sets: Vec<PointSet>) -> Result<RegularOpenAlgebra, TopologyError> {
        let mut labelled: Vec<(String, PointSet)> =
            sets.into_iter().map(|u| (self.label(u), u)).collect();
        labelled.sort();
        let ids = labelled.iter().map(|(id, _)| id.clone()).collect();
        let sets: Vec<PointSet> = labelled.into_iter().map(|(_, u)| u).collect();
        let poset = FinitePoset::from_relation(ids, |q, p| sets[q].is_subset(sets[p]))?;
        Ok(RegularOpenAlgebra { poset, sets })
    }

    pub fn predicates(&self) -> SpacePredicates {
        let hausdorff = self.hausdorff();
        let refinement = self.refinement_failure();
        let pi_regular = match refinement {
            None => Predicate {
                holds: true,
                witness: None,
            },
            Some(u) => Predicate {
                holds: false,
                witness: Some(self.names(u)),
            },
        };
        let quasi_regular = if !hausdorff.holds {
            hausdorff.clone()
        } else {
            pi_regular.clone()
        };
        SpacePredicates {
            hausdorff,
            quasi_regular,
            pi_regular,
        }
    }

    fn hausdorff(&self) -> Predicate {
        let n = self.points.len();
        for x in 0..n {
            for y in x + 1..n {
                let separated = self.opens.iter().any(|&u| {
                    u.contains(x)
                        && !u.contains(y)
                        && self
                            .opens
                            .iter()
                            .any(|&v| v.contains(y) && !v.intersects(u))
                });
                if !separated {
                    return Predicate {
                        holds: false,
                        witness: Some(vec![self.points[x].clone(), self.points[y].clone()]),
                    };
                }
            }
        }
        Predicate {
            holds: true,
            witness: None,
        }
    }

    /// First nonempty open containing no closure of a nonempty open.
    fn refinement_failure(&self) -> Option<PointSet> {
        self.nonempty_opens().find(|&u| {
            !self
                .nonempty_opens()
                .any(|v| v.is_subset(u) && self.closure(v).is_subset(u))
        })
    }

    pub fn is_cellular(&self, family: &[PointSet]) -> Result<(), TopologyError> {
        for (i, &u) in family.iter().enumerate() {
            if u.is_empty() {
                return Err(TopologyError::NotCellular("contains the empty set".into()));
            }
            if !self.is_open(u) {
                return Err(TopologyError::NotCellular(format!(
                    "{} is not open",
                    self.label(u)
                )));
            }
            if let Some(&v) = family[..i].iter().find(|v| v.intersects(u)) {
                return Err(TopologyError::NotCellular(format!(
                    "{} meets {}",
                    self.label(v),
                    self.label(u)
                )));
            }
        }
        Ok(())
    }

    /// Extends `seed` greedily by the lexicographically least addable open
    /// (comparing sorted point-index lists) until its union is dense.
    pub fn maximal_cellular(&self, seed: &[PointSet]) -> Result<Vec<PointSet>, TopologyError> {
        self.is_cellular(seed)?;
        let mut family = seed.to_vec();
        let mut covered = family.iter().fold(PointSet::EMPTY, |acc, &u| acc | u);
        let mut candidates: Vec<PointSet> = self.nonempty_opens().collect();
        candidates.sort_by_key(|u| u.iter().collect::<Vec<_>>());
        while !self.is_dense(covered) {
            let next = candidates
                .iter()
                .copied()
                .find(|u| !u.intersects(covered))
                .expect("a non-dense union leaves a disjoint nonempty open");
            family.push(next);
            covered = covered | next;
        }
        Ok(family)
    }

    /// Every nonempty open contains a member of `family`, and members are
    /// nonempty opens.
    pub fn is_pi_base(&self, family: &[PointSet]) -> bool {
        family.iter().all(|&b| !b.is_empty() && self.is_open(b))
            && self
                .nonempty_opens()
                .all(|u| family.iter().any(|b| b.is_subset(u)))
    }

    /// Souslin number and pi-Noetherian type, computed on the poset of
    /// nonempty opens.
    pub fn invariants(&self) -> Result<SpaceInvariants, TopologyError> {
        let opens = self.open_poset()?;
        let pi = opens.poset.pi_noetherian_type(false)?;
        let base: Vec<PointSet> = pi.dense.iter().map(|i| opens.sets[i]).collect();
        if !self.is_pi_base(&base) {
            return Err(TopologyError::Poset(PosetError::InvariantMismatch(
                "minimal opens are not a pi-base".into(),
            )));
        }
        Ok(SpaceInvariants {
            souslin_number: opens.poset.souslin_number(),
            pi_noetherian_type: pi.value,
            pi_base: base.into_iter().map(|u| self.names(u)).collect(),
        })
    }

    pub fn check_translation(&self) -> Result<TranslationReport, TopologyError> {
        let predicates = self.predicates();
        let space = self.invariants()?;
        let ro = self.regular_open_algebra()?.poset;
        let regular_open = (ro.souslin_number(), ro.pi_noetherian_type(false)?.value);
        let space = (space.souslin_number, space.pi_noetherian_type);
        Ok(TranslationReport {
            pi_regular: predicates.pi_regular.holds,
            quasi_regular: predicates.quasi_regular.holds,
            asserted: predicates.pi_regular.holds,
            equal: space == regular_open,
            space,
            regular_open,
        })
    }
}

/// Every topology on `n` points (ids `p0`..), one per specialization
/// preorder, generated from the minimal neighbourhoods.
pub fn enumerate_topologies(n: usize) -> Result<Vec<FiniteSpace>, TopologyError> {
    if n == 0 {
        return Err(TopologyError::NoPoints);
    }
    if n > 5 {
        return Err(TopologyError::TooManyPoints(n));
    }
    let off_diagonal: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << off_diagonal.len() {
        // up[x]: points y with x <= y in the specialization preorder.
        let mut up: Vec<u64> = (0..n).map(|x| 1 << x).collect();
        for (bit, &(x, y)) in off_diagonal.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                up[x] |= 1 << y;
            }
        }
        let transitive = (0..n).all(|x| PointSet(up[x]).iter().all(|y| up[y] & !up[x] == 0));
        if !transitive {
            continue;
        }
        let subbasis: Vec<PointSet> = up.into_iter().map(PointSet).collect();
        out.push(FiniteSpace::generate(default_points(n), &subbasis)?);
    }
    Ok(out)
}

fn default_points(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("p{i}")).collect()
}

fn sorted_points(mut points: Vec<String>) -> Result<Vec<String>, TopologyError> {
    if points.is_empty() {
        return Err(TopologyError::NoPoints);
    }
    if points.len() > MAX_POINTS {
        return Err(TopologyError::TooManyPoints(points.len()));
    }
    points.sort();
    if let Some(w) = points.windows(2).find(|w| w[0] == w[1]) {
        return Err(TopologyError::DuplicatePoint(w[0].clone()));
    }
    Ok(points)
}

fn point_set<S: AsRef<str>>(points: &[String], ids: &[S]) -> Result<PointSet, TopologyError> {
    let mut set = PointSet::EMPTY;
    for id in ids {
        let id = id.as_ref();
        let i = points
            .binary_search_by(|p| p.as_str().cmp(id))
            .map_err(|_| TopologyError::UnknownPoint(id.to_string()))?;
        set.insert(i);
    }
    Ok(set)
}

fn close_under<F: Fn(PointSet, PointSet) -> PointSet>(family: &mut BTreeSet<PointSet>, op: F) {
    loop {
        let current: Vec<PointSet> = family.iter().copied().collect();
        let before = family.len();
        for (i, &a) in current.iter().enumerate() {
            for &b in &current[i + 1..] {
                family.insert(op(a, b));
            }
        }
        if family.len() == before {
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(space: &FiniteSpace, ids: &[&str]) -> PointSet {
        space.point_set(ids).unwrap()
    }

    #[test]
    fn generation_examples() {
        let s = FiniteSpace::sierpinski();
        assert_eq!(s.opens(), &[PointSet(0), PointSet(1), PointSet(3)]);
        assert_eq!(FiniteSpace::discrete(3).unwrap().opens().len(), 8);
        assert_eq!(
            FiniteSpace::indiscrete(2).unwrap().opens(),
            &[PointSet(0), PointSet(3)]
        );
    }

    #[test]
    fn explicit_families_validated() {
        let pts = vec!["x".to_string(), "y".to_string()];
        assert!(FiniteSpace::new(pts.clone(), vec![PointSet(0), PointSet(1), PointSet(3)]).is_ok());
        assert!(FiniteSpace::new(pts.clone(), vec![PointSet(0), PointSet(1)]).is_err());
        assert!(FiniteSpace::new(
            vec!["a".into(), "b".into(), "c".into()],
            vec![PointSet(0), PointSet(1), PointSet(2), PointSet(7)]
        )
        .is_err());
    }

    #[test]
    fn closure_interior_examples() {
        let d = FiniteSpace::discrete(3).unwrap();
        let u = PointSet::from_indices([0, 2]);
        assert_eq!(d.closure_interior(u), (u, u));
        let s = FiniteSpace::sierpinski();
        let x = set(&s, &["x"]);
        assert_eq!(s.closure_interior(x), (s.full(), x));
        let i = FiniteSpace::indiscrete(2).unwrap();
        assert_eq!(
            i.closure_interior(PointSet::singleton(0)),
            (i.full(), PointSet::EMPTY)
        );
    }

    #[test]
    fn regular_open_examples() {
        assert_eq!(
            FiniteSpace::sierpinski()
                .regular_open_algebra()
                .unwrap()
                .poset
                .len(),
            1
        );
        assert_eq!(
            FiniteSpace::discrete(3)
                .unwrap()
                .regular_open_algebra()
                .unwrap()
                .poset
                .len(),
            7
        );
        assert_eq!(
            FiniteSpace::indiscrete(3)
                .unwrap()
                .regular_open_algebra()
                .unwrap()
                .poset
                .len(),
            1
        );
    }

    #[test]
    fn predicate_examples() {
        let d = FiniteSpace::discrete(3).unwrap().predicates();
        assert!(d.hausdorff.holds && d.quasi_regular.holds && d.pi_regular.holds);
        let s = FiniteSpace::sierpinski().predicates();
        assert!(!s.hausdorff.holds && !s.quasi_regular.holds && !s.pi_regular.holds);
        assert_eq!(s.pi_regular.witness, Some(vec!["x".to_string()]));
        let i = FiniteSpace::indiscrete(2).unwrap().predicates();
        assert!(!i.hausdorff.holds && !i.quasi_regular.holds && i.pi_regular.holds);
    }

    #[test]
    fn maximal_cellular_examples() {
        let d = FiniteSpace::discrete(3).unwrap();
        let fam = d.maximal_cellular(&[]).unwrap();
        assert_eq!(fam, vec![PointSet(1), PointSet(2), PointSet(4)]);
        assert_eq!(d.maximal_cellular(&fam).unwrap(), fam);
        let s = FiniteSpace::sierpinski();
        assert_eq!(s.maximal_cellular(&[]).unwrap(), vec![set(&s, &["x"])]);
        assert!(d.maximal_cellular(&[PointSet(3), PointSet(1)]).is_err());
        assert!(s.maximal_cellular(&[set(&s, &["y"])]).is_err());
    }

    #[test]
    fn invariant_examples() {
        let fin = ExtendedCardinal::Finite;
        for n in 1..=4 {
            let inv = FiniteSpace::discrete(n).unwrap().invariants().unwrap();
            assert_eq!(
                (inv.souslin_number, inv.pi_noetherian_type),
                (fin(n as u64 + 1), fin(2))
            );
        }
        let inv = FiniteSpace::indiscrete(3).unwrap().invariants().unwrap();
        assert_eq!(
            (inv.souslin_number, inv.pi_noetherian_type),
            (fin(2), fin(2))
        );
        let inv = FiniteSpace::sierpinski().invariants().unwrap();
        assert_eq!(
            (inv.souslin_number, inv.pi_noetherian_type),
            (fin(2), fin(2))
        );
        assert_eq!(inv.pi_base, vec![vec!["x".to_string()]]);
    }

    #[test]
    fn translation_examples() {
        let fin = ExtendedCardinal::Finite;
        let d = FiniteSpace::discrete(3)
            .unwrap()
            .check_translation()
            .unwrap();
        assert!(d.asserted && d.equal);
        assert_eq!(d.space, (fin(4), fin(2)));
        let s = FiniteSpace::sierpinski().check_translation().unwrap();
        assert!(!s.asserted && !s.violated());
        let i = FiniteSpace::indiscrete(2)
            .unwrap()
            .check_translation()
            .unwrap();
        assert!(i.asserted && i.equal);
        assert_eq!(i.regular_open, (fin(2), fin(2)));
    }

    #[test]
    fn topology_counts() {
        let counts: Vec<usize> = (1..=4)
            .map(|n| enumerate_topologies(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 4, 29, 355]);
    }
}
