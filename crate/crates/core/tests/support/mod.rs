//! Random generators and slow, independent oracles shared by the integration
//! tests. The oracles never call the library's algorithms; posets and spaces
//! are only read through their raw relation or open-set lists.

#![allow(dead_code)]

pub mod hechler_search;
pub mod posets;
pub mod spaces;
pub mod tower;

use bmgl_core::ordinal::OrdinalParts;
use bmgl_core::Ordinal;
use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Raw, unordered parts for `Ordinal::from_parts`: aleph terms with nested
/// coefficients up to `depth`, and countable terms with small exponents.
pub fn random_parts(rng: &mut ChaCha8Rng, depth: u32) -> OrdinalParts {
    let mut alephs = Vec::new();
    for k in 1..=3 {
        if rng.gen_bool(0.35) {
            let coeff = if depth > 0 && rng.gen_bool(0.4) {
                let (a, c) = random_parts(rng, depth - 1);
                Ordinal::from_parts(a, c)
            } else {
                Ordinal::nat(rng.gen_range(1u32..5))
            };
            if !coeff.is_zero() {
                alephs.push((k, coeff));
            }
        }
    }
    alephs.shuffle(rng);
    let countable = (0..rng.gen_range(0..4))
        .map(|_| (rng.gen_range(0..5), BigUint::from(rng.gen_range(1u32..6))))
        .collect();
    (alephs, countable)
}

pub fn random_ordinal(rng: &mut ChaCha8Rng, depth: u32) -> Ordinal {
    let (a, c) = random_parts(rng, depth);
    Ordinal::from_parts(a, c)
}
