//! Hechler conditions with small parameters, a pointwise order check, and a
//! bounded search for common extensions.

use std::collections::BTreeMap;

use bmgl_core::hechler::{EvFun, HechlerCond};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Past this point every small side function is affine.
pub const HORIZON: u64 = 200;

pub fn random_fun(rng: &mut ChaCha8Rng) -> EvFun {
    let mut exceptions = BTreeMap::new();
    for _ in 0..rng.gen_range(0..3) {
        exceptions.insert(rng.gen_range(0..=4), rng.gen_range(0..=16));
    }
    EvFun::new(exceptions, rng.gen_range(0..=16), rng.gen_range(0..=16))
}

pub fn random_stem(rng: &mut ChaCha8Rng) -> Vec<u64> {
    (0..rng.gen_range(0..=4))
        .map(|_| rng.gen_range(0..=16))
        .collect()
}

pub fn random_cond(rng: &mut ChaCha8Rng) -> HechlerCond {
    HechlerCond::new(random_stem(rng), random_fun(rng))
}

/// A random extension of `p`, so that ordered pairs are common.
pub fn random_extension(rng: &mut ChaCha8Rng, p: &HechlerCond) -> HechlerCond {
    let mut stem = p.stem.clone();
    while stem.len() < 4 && rng.gen_bool(0.5) {
        let floor = p.side.eval(stem.len() as u64) as u64;
        stem.push(floor + rng.gen_range(0..=3));
    }
    let side = p.side.max(&random_fun(rng));
    HechlerCond::new(stem, side)
}

/// `g(n) >= f(n)` for every `n` in `from..HORIZON`.
pub fn dominates_pointwise(g: &EvFun, f: &EvFun, from: u64) -> bool {
    (from..HORIZON).all(|n| g.eval(n) >= f.eval(n))
}

pub fn leq(q: &HechlerCond, p: &HechlerCond) -> bool {
    let (t, s) = (&q.stem, &p.stem);
    t.len() >= s.len()
        && t[..s.len()] == s[..]
        && (s.len()..t.len()).all(|n| u128::from(t[n]) >= p.side.eval(n as u64))
        && dominates_pointwise(&q.side, &p.side, t.len() as u64)
}

/// Searches stems extending the longer stem by entries from a fixed menu,
/// paired with a side function above every small one.
pub fn find_common_extension(p: &HechlerCond, q: &HechlerCond) -> Option<HechlerCond> {
    let big = EvFun::affine(17, 33);
    let base = if p.stem.len() >= q.stem.len() {
        &p.stem
    } else {
        &q.stem
    };
    let menu = [0u64, 1, 16, 64, 1000];
    let mut stems = vec![base.clone()];
    for _ in 0..2 {
        let grown: Vec<Vec<u64>> = stems
            .iter()
            .filter(|s| s.len() < 6)
            .flat_map(|s| {
                menu.iter().map(move |&x| {
                    let mut t = s.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
        stems.extend(grown);
    }
    stems
        .into_iter()
        .map(|t| HechlerCond::new(t, big.clone()))
        .find(|r| leq(r, p) && leq(r, q))
}

/// Pointwise eventual domination, sampled well past every exception.
pub fn ev_leq_star(f: &EvFun, g: &EvFun) -> bool {
    (100..=10_000).all(|n| f.eval(n) <= g.eval(n))
}
