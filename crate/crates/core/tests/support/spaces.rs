use bmgl_core::FiniteSpace;

/// A finite topology as a list of open sets over `n` points (bitmasks).
pub struct Opens {
    pub n: usize,
    pub opens: Vec<u64>,
}

impl Opens {
    pub fn of(space: &FiniteSpace) -> Self {
        Opens {
            n: space.points().len(),
            opens: space.opens().iter().map(|u| u.0).collect(),
        }
    }

    fn full(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    pub fn interior(&self, set: u64) -> u64 {
        self.opens
            .iter()
            .filter(|&&u| u & !set == 0)
            .fold(0, |a, &u| a | u)
    }

    /// Points whose every open neighbourhood meets `set`.
    pub fn closure(&self, set: u64) -> u64 {
        (0..self.n)
            .filter(|&x| {
                self.opens
                    .iter()
                    .filter(|&&u| u >> x & 1 == 1)
                    .all(|&u| u & set != 0)
            })
            .fold(0, |a, x| a | 1 << x)
    }

    pub fn nonempty(&self) -> Vec<u64> {
        self.opens.iter().copied().filter(|&u| u != 0).collect()
    }

    pub fn regular_open(&self) -> Vec<u64> {
        self.nonempty()
            .into_iter()
            .filter(|&u| self.interior(self.closure(u)) == u)
            .collect()
    }

    /// Every nonempty open contains the closure of a nonempty open.
    pub fn pi_regular(&self) -> bool {
        let ne = self.nonempty();
        ne.iter()
            .all(|&u| ne.iter().any(|&v| v & !u == 0 && self.closure(v) & !u == 0))
    }

    pub fn full_set(&self) -> u64 {
        self.full()
    }
}

fn families(members: &[u64]) -> impl Iterator<Item = Vec<u64>> + '_ {
    (0u64..1 << members.len()).map(move |m| {
        (0..members.len())
            .filter(|&i| m >> i & 1 == 1)
            .map(|i| members[i])
            .collect()
    })
}

/// `1 + max` size of a pairwise disjoint family from `members`.
pub fn souslin_of(members: &[u64]) -> u64 {
    let best = families(members)
        .filter(|f| {
            f.iter()
                .enumerate()
                .all(|(i, &a)| f[i + 1..].iter().all(|&b| a & b == 0))
        })
        .map(|f| f.len())
        .max()
        .unwrap_or(0);
    best as u64 + 1
}

/// Least Noetherian type of a subfamily `B` of `members` such that every
/// member contains some element of `B`.
pub fn pi_noetherian_of(members: &[u64]) -> u64 {
    families(members)
        .filter(|b| members.iter().all(|&u| b.iter().any(|&x| x & !u == 0)))
        .map(|b| {
            let widest = members
                .iter()
                .map(|&u| b.iter().filter(|&&x| u & !x == 0).count())
                .max()
                .unwrap_or(0);
            widest as u64 + 1
        })
        .min()
        .expect("the whole family qualifies")
}
