#![allow(dead_code)]

use num::BigInt;
use symmean::arith::Rational;
use symmean::condition_c::{alpha_from_beta, sample_beta};
use symmean::rng::SplitMix64;
use symmean::search::sample_x;
use symmean::symmfn::{AlphaVector, VariableVector};

pub const BOUND: u64 = 12;

pub struct Instance {
    pub x: VariableVector,
    pub beta: Vec<Rational>,
    pub alpha: AlphaVector,
}

pub fn range(rng: &mut SplitMix64, lo: usize, hi: usize) -> usize {
    rng.range_inclusive(lo as i64, hi as i64) as usize
}

pub fn rational(rng: &mut SplitMix64, bound: u64) -> Rational {
    let b = bound as i64;
    let num = rng.range_inclusive(-b, b);
    let den = rng.range_inclusive(1, b);
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn nonnegative(rng: &mut SplitMix64, bound: u64) -> Rational {
    let b = bound as i64;
    let num = rng.range_inclusive(0, b);
    let den = rng.range_inclusive(1, b);
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn shuffle<T>(rng: &mut SplitMix64, v: &mut [T]) {
    for i in (1..v.len()).rev() {
        let j = rng.below(i as u64 + 1) as usize;
        v.swap(i, j);
    }
}

/// `3 <= n <= 8`, `1 <= s <= min(4, n - 2)`, rational `beta` and `x` with
/// numerators and denominators bounded by 12.
pub fn family_instance(rng: &mut SplitMix64) -> Instance {
    let n = range(rng, 3, 8);
    let s = range(rng, 1, 4.min(n - 2));
    let beta = sample_beta(rng, s, BOUND);
    let x = sample_x(rng, n, BOUND, BOUND);
    let alpha = alpha_from_beta(&beta).expect("s >= 1");
    Instance { x, beta, alpha }
}

pub fn distinct_x(rng: &mut SplitMix64, n: usize) -> VariableVector {
    loop {
        let x = sample_x(rng, n, BOUND, BOUND);
        let mut v = x.entries().to_vec();
        v.sort();
        if v.windows(2).all(|w| w[0] != w[1]) {
            return x;
        }
    }
}
