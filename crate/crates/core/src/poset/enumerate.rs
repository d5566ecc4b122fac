use super::{ElementSet, FinitePoset, PosetError};

/// Largest `n` accepted by [`enumerate_posets`].
pub const MAX_ENUMERATION: usize = 6;

struct Builder {
    below: Vec<u64>,
    above: Vec<u64>,
}

impl Builder {
    fn grow<F: FnMut(&FinitePoset)>(&mut self, n: usize, ids: &[String], visit: &mut F) {
        let k = self.below.len();
        if k == n {
            visit(&FinitePoset::from_below(ids.to_vec(), self.below.clone()));
            return;
        }
        for down in 0u64..1 << k {
            let down = ElementSet(down);
            // Extensions of the new element must be closed under extension.
            if !down
                .iter()
                .all(|d| ElementSet(self.below[d]).is_subset(down))
            {
                continue;
            }
            for up in 0u64..1 << k {
                let up = ElementSet(up);
                if up.intersects(down) {
                    continue;
                }
                if !up.iter().all(|u| ElementSet(self.above[u]).is_subset(up)) {
                    continue;
                }
                if !up.iter().all(|u| down.is_subset(ElementSet(self.below[u]))) {
                    continue;
                }
                self.push(k, down, up);
                self.grow(n, ids, visit);
                self.pop(k, down, up);
            }
        }
    }

    fn push(&mut self, k: usize, down: ElementSet, up: ElementSet) {
        self.below.push(down.0 | 1 << k);
        self.above.push(up.0 | 1 << k);
        for d in down.iter() {
            self.above[d] |= 1 << k;
        }
        for u in up.iter() {
            self.below[u] |= 1 << k;
        }
    }

    fn pop(&mut self, k: usize, down: ElementSet, up: ElementSet) {
        self.below.pop();
        self.above.pop();
        for d in down.iter() {
            self.above[d] &= !(1 << k);
        }
        for u in up.iter() {
            self.below[u] &= !(1 << k);
        }
    }
}

/// Visits every labeled poset on `n` elements (ids `"0"`..), each exactly
/// once, and returns how many were visited.
pub fn for_each_poset<F: FnMut(&FinitePoset)>(n: usize, mut visit: F) -> Result<usize, PosetError> {
    if n == 0 {
        return Err(PosetError::Empty);
    }
    if n > MAX_ENUMERATION {
        return Err(PosetError::TooLarge {
            size: n,
            max: MAX_ENUMERATION,
        });
    }
    let ids: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let mut count = 0;
    let mut builder = Builder {
        below: Vec::with_capacity(n),
        above: Vec::with_capacity(n),
    };
    builder.grow(n, &ids, &mut |p| {
        count += 1;
        visit(p)
    });
    Ok(count)
}

pub fn enumerate_posets(n: usize) -> Result<Vec<FinitePoset>, PosetError> {
    let mut out = Vec::new();
    for_each_poset(n, |p| out.push(p.clone()))?;
    Ok(out)
}
