//! A second ordinal arithmetic: plain Cantor normal form with ordinal
//! exponents, where `w_k` (k >= 1) is an atomic exponent satisfying
//! `w^(w_k) = w_k`. Slow and general; used to check the library's
//! cardinal-structured representation.

use std::cmp::Ordering;

use bmgl_core::{CardinalSym, Ordinal};
use num_bigint::BigUint;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Exp {
    Aleph(u32),
    Val(Tower),
}

/// `sum w^e * c` with strictly decreasing exponents and nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Tower(pub Vec<(Exp, BigUint)>);

fn exp_of(t: Tower) -> Exp {
    if let [(Exp::Aleph(k), c)] = t.0.as_slice() {
        if c.is_one() {
            return Exp::Aleph(*k);
        }
    }
    Exp::Val(t)
}

fn tower_of(e: &Exp) -> Tower {
    match e {
        Exp::Aleph(k) => Tower(vec![(Exp::Aleph(*k), BigUint::one())]),
        Exp::Val(t) => t.clone(),
    }
}

fn zero_exp() -> Exp {
    Exp::Val(Tower::default())
}

pub fn cmp_exp(a: &Exp, b: &Exp) -> Ordering {
    match (a, b) {
        (Exp::Aleph(j), Exp::Aleph(k)) => j.cmp(k),
        (Exp::Aleph(_), Exp::Val(t)) => cmp(&tower_of(a), t),
        (Exp::Val(t), Exp::Aleph(_)) => cmp(t, &tower_of(b)),
        (Exp::Val(s), Exp::Val(t)) => cmp(s, t),
    }
}

pub fn cmp(a: &Tower, b: &Tower) -> Ordering {
    for ((ea, ca), (eb, cb)) in a.0.iter().zip(&b.0) {
        match cmp_exp(ea, eb).then_with(|| ca.cmp(cb)) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    a.0.len().cmp(&b.0.len())
}

impl Tower {
    pub fn nat(n: u64) -> Tower {
        if n == 0 {
            Tower::default()
        } else {
            Tower(vec![(zero_exp(), BigUint::from(n))])
        }
    }

    pub fn omega_to(e: Exp) -> Tower {
        Tower(vec![(e, BigUint::one())])
    }

    pub fn aleph(k: u32) -> Tower {
        if k == 0 {
            Tower::omega_to(Exp::Val(Tower::nat(1)))
        } else {
            Tower::omega_to(Exp::Aleph(k))
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, b: &Tower) -> Tower {
        let Some((lead, c)) = b.0.first() else {
            return self.clone();
        };
        let mut out: Vec<(Exp, BigUint)> = self
            .0
            .iter()
            .filter(|(e, _)| cmp_exp(e, lead) == Ordering::Greater)
            .cloned()
            .collect();
        let coeff = match self
            .0
            .iter()
            .find(|(e, _)| cmp_exp(e, lead) == Ordering::Equal)
        {
            Some((_, d)) => d + c,
            None => c.clone(),
        };
        out.push((lead.clone(), coeff));
        out.extend(b.0[1..].iter().cloned());
        Tower(out)
    }

    pub fn mul(&self, b: &Tower) -> Tower {
        if self.is_zero() || b.is_zero() {
            return Tower::default();
        }
        let (lead, lead_c) = &self.0[0];
        let mut out = Tower::default();
        for (e, c) in &b.0 {
            let term = if *e == zero_exp() {
                let mut scaled = self.clone();
                scaled.0[0].1 = lead_c * c;
                scaled
            } else {
                let sum = tower_of(lead).add(&tower_of(e));
                Tower(vec![(exp_of(sum), c.clone())])
            };
            out = out.add(&term);
        }
        out
    }

    /// Cardinality class of the term `w^e`: `None` for finite, else the
    /// aleph index.
    fn class(e: &Exp) -> Option<u32> {
        if *e == zero_exp() {
            return None;
        }
        let mut k = 0;
        while cmp_exp(&Exp::Aleph(k + 1), e) != Ordering::Greater {
            k += 1;
        }
        Some(k)
    }

    pub fn cardinal(&self) -> Option<CardinalSym> {
        let (e, c) = self.0.first()?;
        Some(match Tower::class(e) {
            None => CardinalSym::Finite(c.clone()),
            Some(k) => CardinalSym::Aleph(k),
        })
    }

    /// Consecutive terms grouped by the cardinality of `w^e`.
    pub fn cnf(&self) -> Vec<Tower> {
        let mut groups: Vec<(Option<u32>, Tower)> = Vec::new();
        for (e, c) in &self.0 {
            let class = Tower::class(e);
            match groups.last_mut() {
                Some((k, t)) if *k == class => t.0.push((e.clone(), c.clone())),
                _ => groups.push((class, Tower(vec![(e.clone(), c.clone())]))),
            }
        }
        groups.into_iter().map(|(_, t)| t).collect()
    }

    pub fn truncated_cnf(&self, lambda: u32) -> Vec<Tower> {
        let mut kept = Vec::new();
        let mut tail = Tower::default();
        for term in self.cnf() {
            match Tower::class(&term.0[0].0) {
                Some(k) if k >= lambda => kept.push(term),
                _ => tail.0.extend(term.0),
            }
        }
        if !tail.is_zero() {
            kept.push(tail);
        }
        kept
    }
}

/// The library's value, rebuilt term by term in tower arithmetic.
pub fn translate(o: &Ordinal) -> Tower {
    let (alephs, countable) = o.parts();
    sum_parts(&alephs, &countable)
}

/// Tower sum of raw `from_parts` input, in the given order.
pub fn sum_parts(alephs: &[(u32, Ordinal)], countable: &[(u32, BigUint)]) -> Tower {
    let mut out = Tower::default();
    for (k, b) in alephs {
        out = out.add(&Tower::aleph(*k).mul(&translate(b)));
    }
    for (e, c) in countable {
        let exp = if *e == 0 {
            zero_exp()
        } else {
            Exp::Val(Tower::nat(u64::from(*e)))
        };
        if !c.is_zero() {
            out = out.add(&Tower(vec![(exp, c.clone())]));
        }
    }
    out
}
