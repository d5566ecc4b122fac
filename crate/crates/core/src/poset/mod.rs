//! Finite posets and their order invariants.
//!
//! The relation is stored as two bit-matrices: `below[p]` holds every `q`
//! with `q <= p` (the extensions of `p`) and `above[q]` holds every `p` with
//! `q <= p`. Element indices follow the lexicographic order of the ids, so
//! any "first" witness or tie-break is lexicographic on ids.

mod antichain;
mod completion;
mod enumerate;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::cardinal::ExtendedCardinal;

pub use antichain::Antichain;
pub use completion::BooleanCompletion;
pub use enumerate::{enumerate_posets, for_each_poset, MAX_ENUMERATION};

/// Largest poset the bit-matrix representation accepts.
pub const MAX_ELEMENTS: usize = 64;
/// Largest poset for which the exhaustive dense-subset scan runs.
pub const MAX_EXHAUSTIVE: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("poset has no elements")]
    Empty,
    #[error("element `{0}` listed twice")]
    DuplicateElement(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("poset has {size} elements; at most {max} supported")]
    TooLarge { size: usize, max: usize },
    #[error("antisymmetry violated: `{0}` <= `{1}` and `{1}` <= `{0}`")]
    Antisymmetry(String, String),
    #[error("transitivity violated: `{lower}` <= `{middle}` <= `{upper}` but not `{lower}` <= `{upper}`")]
    Transitivity {
        lower: String,
        middle: String,
        upper: String,
    },
    #[error("subset is not dense: `{0}` has no extension in it")]
    NotDense(String),
    #[error("poset is not separative (witness `{0}`, `{1}`)")]
    NotSeparative(String, String),
    #[error("order is not a permutation of the elements")]
    NotAPermutation,
    #[error("invariant mismatch: {0}")]
    InvariantMismatch(String),
}

/// A set of elements of one poset, as a bitmask over element indices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet(pub u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        ElementSet(1 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        ElementSet(it.into_iter().fold(0, |acc, i| acc | (1 << i)))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn intersects(self, other: ElementSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn is_subset(self, other: ElementSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i)
        })
    }
}

impl std::ops::BitAnd for ElementSet {
    type Output = ElementSet;
    fn bitand(self, rhs: Self) -> Self {
        ElementSet(self.0 & rhs.0)
    }
}

impl std::ops::BitOr for ElementSet {
    type Output = ElementSet;
    fn bitor(self, rhs: Self) -> Self {
        ElementSet(self.0 | rhs.0)
    }
}

/// Unvalidated input for [`FinitePoset::validate`].
///
/// `pairs` holds `(q, p)` meaning `q <= p`, that is, `q` extends `p`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawPoset {
    pub name: Option<String>,
    pub elements: Vec<String>,
    pub pairs: Vec<(String, String)>,
    pub closure: bool,
}

/// A validated finite poset, `q <= p` read as "q extends p".
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinitePoset {
    ids: Vec<String>,
    below: Vec<u64>,
    above: Vec<u64>,
}

/// Result of a compatibility query.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Compatibility {
    pub compatible: bool,
    /// Lexicographically least common extension.
    pub witness: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Separativity {
    Separative,
    /// `(p, q)` with `q` not below `p` but every extension of `q` compatible
    /// with `p`.
    Counterexample(usize, usize),
}

impl Separativity {
    pub fn holds(self) -> bool {
        matches!(self, Separativity::Separative)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PiNoetherian {
    pub value: ExtendedCardinal,
    /// The dense subset realising the value (the minimal elements).
    #[serde(skip)]
    pub dense: ElementSet,
    /// Minimum over every dense subset, when the exhaustive scan ran.
    pub exhaustive: Option<ExtendedCardinal>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NablaReport {
    pub verdict: Verdict,
    pub pi_noetherian_type: ExtendedCardinal,
    pub souslin_number: ExtendedCardinal,
}

impl FinitePoset {
    /// Checks the poset axioms on raw input.
    ///
    /// Reflexive pairs are implicit. With `raw.closure` set the transitive
    /// closure is taken first; otherwise the first missing transitive pair is
    /// reported. Antisymmetry is checked before transitivity.
    pub fn validate(raw: &RawPoset) -> Result<FinitePoset, PosetError> {
        if raw.elements.is_empty() {
            return Err(PosetError::Empty);
        }
        if raw.elements.len() > MAX_ELEMENTS {
            return Err(PosetError::TooLarge {
                size: raw.elements.len(),
                max: MAX_ELEMENTS,
            });
        }
        let mut ids = raw.elements.clone();
        ids.sort();
        if let Some(w) = ids.windows(2).find(|w| w[0] == w[1]) {
            return Err(PosetError::DuplicateElement(w[0].clone()));
        }
        let index = |id: &str| {
            ids.binary_search_by(|x| x.as_str().cmp(id))
                .map_err(|_| PosetError::UnknownElement(id.to_string()))
        };
        let n = ids.len();
        let mut below = vec![0u64; n];
        for (p, row) in below.iter_mut().enumerate() {
            *row |= 1 << p;
        }
        for (q, p) in &raw.pairs {
            let (qi, pi) = (index(q)?, index(p)?);
            below[pi] |= 1 << qi;
        }
        if raw.closure {
            transitive_closure(&mut below);
        }
        for a in 0..n {
            for b in a + 1..n {
                if below[b] >> a & 1 == 1 && below[a] >> b & 1 == 1 {
                    return Err(PosetError::Antisymmetry(ids[a].clone(), ids[b].clone()));
                }
            }
        }
        for lower in 0..n {
            for upper in 0..n {
                if below[upper] >> lower & 1 == 1 {
                    continue;
                }
                let middles = ElementSet(below[upper])
                    .iter()
                    .find(|&m| below[m] >> lower & 1 == 1);
                if let Some(middle) = middles {
                    return Err(PosetError::Transitivity {
                        lower: ids[lower].clone(),
                        middle: ids[middle].clone(),
                        upper: ids[upper].clone(),
                    });
                }
            }
        }
        Ok(Self::from_below(ids, below))
    }

    /// Builds a poset from ids and a relation closure `leq(q, p)`, taking the
    /// reflexive-transitive closure and validating the result.
    pub fn from_relation<F>(ids: Vec<String>, leq: F) -> Result<FinitePoset, PosetError>
    where
        F: Fn(usize, usize) -> bool,
    {
        let mut pairs = Vec::new();
        for q in 0..ids.len() {
            for p in 0..ids.len() {
                if q != p && leq(q, p) {
                    pairs.push((ids[q].clone(), ids[p].clone()));
                }
            }
        }
        FinitePoset::validate(&RawPoset {
            name: None,
            elements: ids,
            pairs,
            closure: true,
        })
    }

    /// `below` must already be a partial order over lexicographically sorted ids.
    pub(crate) fn from_below(ids: Vec<String>, below: Vec<u64>) -> FinitePoset {
        let n = ids.len();
        let mut above = vec![0u64; n];
        for (p, &row) in below.iter().enumerate() {
            for q in ElementSet(row).iter() {
                above[q] |= 1 << p;
            }
        }
        FinitePoset { ids, below, above }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn id(&self, i: usize) -> &str {
        &self.ids[i]
    }

    pub fn index_of(&self, id: &str) -> Result<usize, PosetError> {
        self.ids
            .binary_search_by(|x| x.as_str().cmp(id))
            .map_err(|_| PosetError::UnknownElement(id.to_string()))
    }

    pub fn subset_of_ids<S: AsRef<str>>(&self, ids: &[S]) -> Result<ElementSet, PosetError> {
        let mut set = ElementSet::EMPTY;
        for id in ids {
            set.insert(self.index_of(id.as_ref())?);
        }
        Ok(set)
    }

    pub fn ids_of(&self, set: ElementSet) -> Vec<String> {
        set.iter().map(|i| self.ids[i].clone()).collect()
    }

    pub fn all(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    /// `q <= p`: `q` extends `p`.
    pub fn leq(&self, q: usize, p: usize) -> bool {
        self.below[p] >> q & 1 == 1
    }

    /// Every extension of `p`, including `p`.
    pub fn extensions(&self, p: usize) -> ElementSet {
        ElementSet(self.below[p])
    }

    /// Every element that `q` extends, including `q`.
    pub fn weakenings(&self, q: usize) -> ElementSet {
        ElementSet(self.above[q])
    }

    /// Every `(q, p)` pair with `q <= p` and `q != p`.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for p in 0..self.len() {
            for q in self.extensions(p).iter() {
                if q != p {
                    out.push((q, p));
                }
            }
        }
        out
    }

    pub fn is_compatible(&self, p: usize, q: usize) -> Compatibility {
        let common = self.extensions(p) & self.extensions(q);
        Compatibility {
            compatible: !common.is_empty(),
            witness: common.first(),
        }
    }

    pub fn incompatible(&self, p: usize, q: usize) -> bool {
        !self.extensions(p).intersects(self.extensions(q))
    }

    /// Lexicographically first `(p, q)` breaking separativity, if any.
    pub fn separativity(&self) -> Separativity {
        let n = self.len();
        for p in 0..n {
            for q in 0..n {
                if self.leq(q, p) {
                    continue;
                }
                let separated = self.extensions(q).iter().any(|r| self.incompatible(r, p));
                if !separated {
                    return Separativity::Counterexample(p, q);
                }
            }
        }
        Separativity::Separative
    }

    pub fn is_separative(&self) -> bool {
        self.separativity().holds()
    }

    pub fn minimal_elements(&self) -> ElementSet {
        ElementSet::from_indices((0..self.len()).filter(|&p| self.below[p] == 1 << p))
    }

    /// `Err(p)` carries the first element with no extension in `dense`.
    pub fn dense_check(&self, dense: ElementSet) -> Result<(), usize> {
        match (0..self.len()).find(|&p| !self.extensions(p).intersects(dense)) {
            Some(p) => Err(p),
            None => Ok(()),
        }
    }

    pub fn is_dense(&self, dense: ElementSet) -> bool {
        self.dense_check(dense).is_ok()
    }

    /// One more than the largest fiber `{p in D : q <= p}`.
    pub fn noetherian_type(&self, dense: ElementSet) -> Result<ExtendedCardinal, PosetError> {
        self.dense_check(dense)
            .map_err(|p| PosetError::NotDense(self.ids[p].clone()))?;
        let widest = (0..self.len())
            .map(|q| (self.weakenings(q) & dense).len())
            .max()
            .unwrap_or(0);
        Ok(ExtendedCardinal::Finite(widest as u64 + 1))
    }

    /// The minimal elements always realise the minimum, giving 2 on every
    /// nonempty finite poset. With `exhaustive` the minimum over all dense
    /// subsets is computed too and must agree.
    pub fn pi_noetherian_type(&self, exhaustive: bool) -> Result<PiNoetherian, PosetError> {
        let dense = self.minimal_elements();
        let value = self.noetherian_type(dense)?;
        let exhaustive = if exhaustive {
            let scanned = self.exhaustive_pi_noetherian()?;
            if scanned != value {
                return Err(PosetError::InvariantMismatch(format!(
                    "dense-subset scan gives {scanned}, minimal elements give {value}"
                )));
            }
            Some(scanned)
        } else {
            None
        };
        Ok(PiNoetherian {
            value,
            dense,
            exhaustive,
        })
    }

    fn exhaustive_pi_noetherian(&self) -> Result<ExtendedCardinal, PosetError> {
        let n = self.len();
        if n > MAX_EXHAUSTIVE {
            return Err(PosetError::TooLarge {
                size: n,
                max: MAX_EXHAUSTIVE,
            });
        }
        let best = (1u64..1 << n)
            .map(ElementSet)
            .filter(|&d| self.is_dense(d))
            .filter_map(|d| self.noetherian_type(d).ok())
            .min();
        best.ok_or_else(|| PosetError::InvariantMismatch("no dense subset found".into()))
    }

    /// `{p : p <= q for every q in Q}`; the whole poset when `Q` is empty.
    pub fn down_set(&self, q: ElementSet) -> ElementSet {
        q.iter().fold(self.all(), |acc, x| acc & self.extensions(x))
    }

    /// Greedy pass over `q` in the given order, keeping an element only when
    /// it strictly shrinks the running down-set. The result has the same
    /// down-set as `q`, and on a separative poset its size is bounded by the
    /// largest antichain.
    pub fn reduce_down_set(&self, q: &[usize]) -> Vec<usize> {
        let mut running = self.all();
        let mut kept = Vec::new();
        for &x in q {
            let next = running & self.extensions(x);
            if next != running {
                kept.push(x);
                running = next;
            }
        }
        kept
    }

    /// Keeps `order[a]` iff no earlier `order[x]` extends it. The result is
    /// dense, and every member above `order[a]` sits at index `<= a`.
    pub fn enumeration_dense(&self, order: &[usize]) -> Result<ElementSet, PosetError> {
        let mut seen = ElementSet::EMPTY;
        for &p in order {
            if p >= self.len() || seen.contains(p) {
                return Err(PosetError::NotAPermutation);
            }
            seen.insert(p);
        }
        if seen != self.all() {
            return Err(PosetError::NotAPermutation);
        }
        let mut earlier = ElementSet::EMPTY;
        let mut dense = ElementSet::EMPTY;
        for &p in order {
            if !earlier.intersects(self.extensions(p)) {
                dense.insert(p);
            }
            earlier.insert(p);
        }
        Ok(dense)
    }

    pub fn souslin_number(&self) -> ExtendedCardinal {
        ExtendedCardinal::Finite(self.max_antichain().len() as u64 + 1)
    }

    pub fn check_nabla(&self) -> Result<NablaReport, PosetError> {
        let pi = self.pi_noetherian_type(false)?.value;
        let s = self.souslin_number();
        Ok(NablaReport {
            verdict: if pi <= s {
                Verdict::Holds
            } else {
                Verdict::Fails
            },
            pi_noetherian_type: pi,
            souslin_number: s,
        })
    }

    /// Disjoint union; ids are prefixed `"{i}:"` to keep them distinct.
    pub fn disjoint_union(parts: &[FinitePoset]) -> Result<FinitePoset, PosetError> {
        let mut raw = RawPoset::default();
        for (i, part) in parts.iter().enumerate() {
            let tag = |id: &str| format!("{i}:{id}");
            raw.elements.extend(part.ids.iter().map(|id| tag(id)));
            raw.pairs.extend(
                part.strict_pairs()
                    .into_iter()
                    .map(|(q, p)| (tag(&part.ids[q]), tag(&part.ids[p]))),
            );
        }
        FinitePoset::validate(&raw)
    }

    /// Chain `c0 < c1 < ... < c{m-1}`, ids zero-padded so lexicographic and
    /// numeric order agree.
    pub fn chain(m: usize) -> Result<FinitePoset, PosetError> {
        let width = m.saturating_sub(1).to_string().len();
        let ids: Vec<String> = (0..m).map(|i| format!("c{i:0width$}")).collect();
        let pairs = (1..m)
            .map(|i| (ids[i - 1].clone(), ids[i].clone()))
            .collect();
        FinitePoset::validate(&RawPoset {
            name: None,
            elements: ids,
            pairs,
            closure: true,
        })
    }
}

impl fmt::Display for FinitePoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "elements {}", self.ids.join(" "))?;
        for (q, p) in self.strict_pairs() {
            writeln!(f, "leq {} {}", self.ids[q], self.ids[p])?;
        }
        Ok(())
    }
}

fn transitive_closure(below: &mut [u64]) {
    let n = below.len();
    for k in 0..n {
        for p in 0..n {
            if below[p] >> k & 1 == 1 {
                below[p] |= below[k];
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn raw(elements: &[&str], pairs: &[(&str, &str)], closure: bool) -> RawPoset {
        RawPoset {
            name: None,
            elements: elements.iter().map(|s| s.to_string()).collect(),
            pairs: pairs
                .iter()
                .map(|(q, p)| (q.to_string(), p.to_string()))
                .collect(),
            closure,
        }
    }

    fn vee() -> FinitePoset {
        FinitePoset::validate(&raw(&["a", "b", "t"], &[("a", "t"), ("b", "t")], true)).unwrap()
    }

    fn diamond() -> FinitePoset {
        FinitePoset::validate(&raw(
            &["a", "b", "bot", "t"],
            &[("a", "t"), ("b", "t"), ("bot", "a"), ("bot", "b")],
            true,
        ))
        .unwrap()
    }

    #[test]
    fn validate_examples() {
        assert_eq!(vee().len(), 3);
        assert_eq!(
            FinitePoset::validate(&raw(&["a", "b"], &[("a", "b"), ("b", "a")], false)),
            Err(PosetError::Antisymmetry("a".into(), "b".into()))
        );
        match FinitePoset::validate(&raw(&["a", "b", "c"], &[("a", "b"), ("b", "c")], false)) {
            Err(PosetError::Transitivity { lower, upper, .. }) => {
                assert_eq!((lower.as_str(), upper.as_str()), ("a", "c"));
            }
            other => panic!("expected transitivity violation, got {other:?}"),
        }
        assert_eq!(
            FinitePoset::validate(&raw(&[], &[], true)),
            Err(PosetError::Empty)
        );
    }

    #[test]
    fn closure_exposes_cycles() {
        let err = FinitePoset::validate(&raw(
            &["a", "b", "c"],
            &[("a", "b"), ("b", "c"), ("c", "a")],
            true,
        ));
        assert_eq!(err, Err(PosetError::Antisymmetry("a".into(), "b".into())));
    }

    #[test]
    fn unknown_and_duplicate_ids() {
        assert_eq!(
            FinitePoset::validate(&raw(&["a"], &[("a", "z")], true)),
            Err(PosetError::UnknownElement("z".into()))
        );
        assert_eq!(
            FinitePoset::validate(&raw(&["a", "a"], &[], true)),
            Err(PosetError::DuplicateElement("a".into()))
        );
    }

    #[test]
    fn compatibility_examples() {
        let p = vee();
        let (a, b, t) = (0, 1, 2);
        assert!(!p.is_compatible(a, b).compatible);
        assert_eq!(p.is_compatible(a, t).witness, Some(a));
        let d = diamond();
        let bot = d.index_of("bot").unwrap();
        let c = d.is_compatible(d.index_of("a").unwrap(), d.index_of("b").unwrap());
        assert_eq!(c.witness, Some(bot));
    }

    #[test]
    fn separativity_examples() {
        assert!(vee().is_separative());
        let chain = FinitePoset::chain(2).unwrap();
        // c0 <= c1; the failing pair is (p, q) = (c0, c1).
        assert_eq!(chain.separativity(), Separativity::Counterexample(0, 1));
        assert!(!diamond().is_separative());
    }

    #[test]
    fn dense_examples() {
        let chain = FinitePoset::chain(3).unwrap();
        assert_eq!(chain.dense_check(ElementSet::singleton(2)), Err(0));
        assert!(chain.is_dense(chain.all()));
        assert!(chain.is_dense(chain.minimal_elements()));
    }

    #[test]
    fn noetherian_examples() {
        let chain = FinitePoset::chain(3).unwrap();
        assert_eq!(
            chain.noetherian_type(chain.all()),
            Ok(ExtendedCardinal::Finite(4))
        );
        assert_eq!(
            chain.noetherian_type(chain.minimal_elements()),
            Ok(ExtendedCardinal::Finite(2))
        );
        let v = vee();
        assert_eq!(
            v.noetherian_type(ElementSet::from_indices([0, 1])),
            Ok(ExtendedCardinal::Finite(2))
        );
        assert_eq!(
            chain.noetherian_type(ElementSet::singleton(2)),
            Err(PosetError::NotDense("c0".into()))
        );
    }

    #[test]
    fn pi_noetherian_examples() {
        let single = FinitePoset::chain(1).unwrap();
        let r = single.pi_noetherian_type(true).unwrap();
        assert_eq!(r.value, ExtendedCardinal::Finite(2));
        assert_eq!(r.dense, ElementSet::singleton(0));
        let chain = FinitePoset::chain(3).unwrap();
        let r = chain.pi_noetherian_type(true).unwrap();
        assert_eq!(r.exhaustive, Some(ExtendedCardinal::Finite(2)));
        assert_eq!(chain.ids_of(r.dense), vec!["c0"]);
        let big = FinitePoset::chain(21).unwrap();
        assert!(matches!(
            big.pi_noetherian_type(true),
            Err(PosetError::TooLarge { size: 21, max: 20 })
        ));
        assert!(big.pi_noetherian_type(false).is_ok());
    }

    #[test]
    fn down_set_examples() {
        let v = vee();
        let t = v.index_of("t").unwrap();
        assert_eq!(v.down_set(ElementSet::singleton(t)), v.all());
        assert_eq!(
            v.down_set(ElementSet::from_indices([0, 1])),
            ElementSet::EMPTY
        );
        assert_eq!(v.down_set(ElementSet::EMPTY), v.all());
    }

    #[test]
    fn reduce_down_set_examples() {
        let v = vee();
        let (a, t) = (0, 2);
        assert_eq!(v.reduce_down_set(&[t, a]), vec![a]);
        let single = FinitePoset::chain(1).unwrap();
        assert!(single.reduce_down_set(&[0]).is_empty());
        let chain = FinitePoset::chain(3).unwrap();
        assert_eq!(chain.reduce_down_set(&[2, 1, 0]), vec![1, 0]);
    }

    #[test]
    fn enumeration_dense_examples() {
        let chain = FinitePoset::chain(3).unwrap();
        // Top first: no element extends an earlier one, so everything stays.
        assert_eq!(chain.enumeration_dense(&[2, 1, 0]), Ok(chain.all()));
        assert_eq!(
            chain.enumeration_dense(&[0, 1, 2]),
            Ok(ElementSet::singleton(0))
        );
        let anti = FinitePoset::validate(&raw(&["a", "b"], &[], true)).unwrap();
        assert_eq!(anti.enumeration_dense(&[1, 0]), Ok(anti.all()));
        assert_eq!(
            chain.enumeration_dense(&[0, 0, 1]),
            Err(PosetError::NotAPermutation)
        );
        assert_eq!(
            chain.enumeration_dense(&[0, 1]),
            Err(PosetError::NotAPermutation)
        );
    }

    #[test]
    fn souslin_and_nabla_examples() {
        assert_eq!(
            FinitePoset::chain(5).unwrap().souslin_number(),
            ExtendedCardinal::Finite(2)
        );
        let v = vee();
        assert_eq!(v.souslin_number(), ExtendedCardinal::Finite(3));
        let r = v.check_nabla().unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(
            (r.pi_noetherian_type, r.souslin_number),
            (ExtendedCardinal::Finite(2), ExtendedCardinal::Finite(3))
        );
        let s = FinitePoset::chain(1).unwrap().check_nabla().unwrap();
        assert_eq!(
            (s.pi_noetherian_type, s.souslin_number),
            (ExtendedCardinal::Finite(2), ExtendedCardinal::Finite(2))
        );
    }

    #[test]
    fn disjoint_union_of_chains() {
        let parts: Vec<_> = (0..3).map(|_| FinitePoset::chain(2).unwrap()).collect();
        let u = FinitePoset::disjoint_union(&parts).unwrap();
        assert_eq!(u.max_antichain().len(), 3);
        assert_eq!(u.souslin_number(), ExtendedCardinal::Finite(4));
    }
}
