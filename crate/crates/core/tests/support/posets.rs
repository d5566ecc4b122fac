#![allow(clippy::needless_range_loop)]

use bmgl_core::FinitePoset;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// `rel[q][p]` iff `q <= p`.
pub type Relation = Vec<Vec<bool>>;

pub fn relation(p: &FinitePoset) -> Relation {
    let n = p.len();
    (0..n)
        .map(|q| (0..n).map(|x| p.leq(q, x)).collect())
        .collect()
}

pub fn from_relation(rel: &Relation) -> FinitePoset {
    let ids = (0..rel.len()).map(|i| format!("e{i:02}")).collect();
    FinitePoset::from_relation(ids, |q, p| rel[q][p]).expect("oracle relations are partial orders")
}

/// Labeled partial orders on `n` points, by checking every reflexive
/// relation for antisymmetry and transitivity.
pub fn count_posets(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect();
    let mut count = 0;
    for mask in 0u64..1 << pairs.len() {
        let mut rel = vec![vec![false; n]; n];
        for i in 0..n {
            rel[i][i] = true;
        }
        for (bit, &(a, b)) in pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                rel[a][b] = true;
            }
        }
        let antisymmetric = (0..n).all(|a| (0..n).all(|b| a == b || !(rel[a][b] && rel[b][a])));
        let transitive =
            (0..n).all(|a| (0..n).all(|b| !rel[a][b] || (0..n).all(|c| !rel[b][c] || rel[a][c])));
        if antisymmetric && transitive {
            count += 1;
        }
    }
    count
}

pub fn compatible(rel: &Relation, a: usize, b: usize) -> bool {
    (0..rel.len()).any(|r| rel[r][a] && rel[r][b])
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..1 << n).map(move |m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
}

pub fn is_antichain(rel: &Relation, set: &[usize]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &a)| set[i + 1..].iter().all(|&b| !compatible(rel, a, b)))
}

/// Largest antichain, by include/exclude search over the elements; only
/// pairwise incompatible choices are extended.
pub fn max_antichain(rel: &Relation) -> usize {
    fn go(rel: &Relation, i: usize, chosen: &mut Vec<usize>) -> usize {
        if i == rel.len() {
            return chosen.len();
        }
        let mut best = go(rel, i + 1, chosen);
        if chosen.iter().all(|&a| !compatible(rel, a, i)) {
            chosen.push(i);
            best = best.max(go(rel, i + 1, chosen));
            chosen.pop();
        }
        best
    }
    go(rel, 0, &mut Vec::new())
}

pub fn souslin(rel: &Relation) -> u64 {
    max_antichain(rel) as u64 + 1
}

pub fn is_dense(rel: &Relation, d: &[usize]) -> bool {
    (0..rel.len()).all(|p| d.iter().any(|&x| rel[x][p]))
}

/// `1 + max_q |{x in D : q <= x}|`.
pub fn noetherian_type(rel: &Relation, d: &[usize]) -> u64 {
    let widest = (0..rel.len())
        .map(|q| d.iter().filter(|&&x| rel[q][x]).count())
        .max()
        .unwrap_or(0);
    widest as u64 + 1
}

/// Minimum Noetherian type over every dense subset.
pub fn pi_noetherian_type(rel: &Relation) -> u64 {
    subsets(rel.len())
        .filter(|d| is_dense(rel, d))
        .map(|d| noetherian_type(rel, &d))
        .min()
        .expect("the whole poset is dense")
}

pub fn minimal(rel: &Relation) -> Vec<usize> {
    let n = rel.len();
    (0..n)
        .filter(|&p| (0..n).all(|q| !rel[q][p] || q == p))
        .collect()
}

/// Common extensions of every member of `q`.
pub fn down_set(rel: &Relation, q: &[usize]) -> Vec<usize> {
    (0..rel.len())
        .filter(|&r| q.iter().all(|&x| rel[r][x]))
        .collect()
}

pub fn is_separative(rel: &Relation) -> bool {
    let n = rel.len();
    (0..n).all(|p| (0..n).all(|q| rel[q][p] || (0..n).any(|r| rel[r][q] && !compatible(rel, r, p))))
}

/// A random partial order: random pairs along a random linear order, then
/// the transitive closure.
pub fn random_relation(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Relation {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut rel = vec![vec![false; n]; n];
    for i in 0..n {
        rel[i][i] = true;
    }
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                rel[order[i]][order[j]] = true;
            }
        }
    }
    for k in 0..n {
        for a in 0..n {
            for b in 0..n {
                if rel[a][k] && rel[k][b] {
                    rel[a][b] = true;
                }
            }
        }
    }
    rel
}

pub fn random_separative(rng: &mut ChaCha8Rng, max_n: usize) -> Relation {
    loop {
        let n = rng.gen_range(1..=max_n);
        let density = rng.gen_range(0.1..0.6);
        let rel = random_relation(rng, n, density);
        if is_separative(&rel) {
            return rel;
        }
    }
}
