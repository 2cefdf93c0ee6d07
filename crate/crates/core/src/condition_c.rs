//! The real-rootedness condition on `alpha`: the polynomial
//! `f(t) = t^s + alpha_1 t^{s-1} + ... + alpha_s` must have only real roots
//! (counted with multiplicity). Its roots are written `-beta_j`, so that
//! `alpha_i = sigma_i(beta)`.

use num::{BigInt, One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{format_rational, Rational};
use crate::error::{range_err, Error, Result};
use crate::rng::SplitMix64;
use crate::symmfn::{sigma_of, AlphaVector};
use crate::upoly::{
    isolate_real_roots, real_root_count, squarefree_decomposition, Endpoint, Polynomial, RootIsolation, SturmChain,
};

pub fn default_width() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(1024))
}

/// A squarefree factor of `f` with fewer real roots than its degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeficientFactor {
    pub factor: Polynomial,
    pub multiplicity: u32,
    pub degree: usize,
    pub real_roots: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionCReport {
    pub holds: bool,
    pub f: Polynomial,
    /// Isolated roots of `f`; each one is some `-beta_j`.
    pub roots: RootIsolation,
    pub degree: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub deficient_factors: Vec<DeficientFactor>,
}

pub fn build_f(alpha: &AlphaVector) -> Polynomial {
    let mut coeffs: Vec<Rational> = alpha.entries().iter().rev().cloned().collect();
    coeffs.push(Rational::one());
    Polynomial::new(coeffs)
}

pub fn check_condition_c(alpha: &AlphaVector) -> ConditionCReport {
    check_condition_c_with_width(alpha, &default_width()).expect("default width is positive")
}

pub fn check_condition_c_with_width(alpha: &AlphaVector, width: &Rational) -> Result<ConditionCReport> {
    let f = build_f(alpha);
    let roots = isolate_real_roots(&f, width)?;
    let mut deficient_factors = Vec::new();
    for (g, m) in squarefree_decomposition(&f)?.factors {
        let real = SturmChain::new(&g)?.count(&Endpoint::NegInfinity, &Endpoint::PosInfinity);
        let degree = g.deg().expect("nonconstant factor");
        if real < degree {
            deficient_factors.push(DeficientFactor {
                factor: g,
                multiplicity: m,
                degree,
                real_roots: real,
            });
        }
    }
    let holds = deficient_factors.is_empty();
    debug_assert_eq!(holds, roots.total_multiplicity() == alpha.s());
    Ok(ConditionCReport {
        holds,
        f,
        roots,
        degree: alpha.s(),
        deficient_factors,
    })
}

/// Just the verdict of [`check_condition_c`], without isolating roots.
pub fn condition_c_holds(alpha: &AlphaVector) -> bool {
    real_root_count(&build_f(alpha)).expect("f is monic") == alpha.s()
}

/// Every real root of `f` is `<= 0`, i.e. every real `beta_j >= 0`.
pub fn roots_nonpositive(alpha: &AlphaVector) -> bool {
    let f = build_f(alpha);
    let factors = squarefree_decomposition(&f).expect("f is monic").factors;
    factors.iter().all(|(g, _)| {
        SturmChain::new(g)
            .expect("nonzero factor")
            .count(&Endpoint::Finite(Rational::zero()), &Endpoint::PosInfinity)
            == 0
    })
}

/// `alpha_i = sigma_i(beta)`, so `f = prod (t + beta_i)`.
pub fn alpha_from_beta(beta: &[Rational]) -> Result<AlphaVector> {
    AlphaVector::new(sigma_of(beta).into_iter().skip(1).collect())
}

/// Coefficients of `(t + b) * f_{alpha'}(t)`.
pub fn alpha_compose(alpha_prime: &AlphaVector, b: &Rational) -> AlphaVector {
    let prev = alpha_prime.entries();
    let s = prev.len();
    let mut out = Vec::with_capacity(s + 1);
    out.push(b + &prev[0]);
    for i in 1..s {
        out.push(b * &prev[i - 1] + &prev[i]);
    }
    out.push(b * &prev[s - 1]);
    AlphaVector::new(out).expect("nonempty")
}

/// Deflates `f` by its root `minus_b`; inverse of [`alpha_compose`] with
/// `b = -minus_b`. Deflating a degree-one `f` leaves the constant 1, which
/// has no alpha vector, so that case yields `None`.
pub fn alpha_decompose(alpha: &AlphaVector, minus_b: &Rational) -> Result<Option<AlphaVector>> {
    let f = build_f(alpha);
    if !f.eval(minus_b).is_zero() {
        return Err(Error::NotARoot(format_rational(minus_b)));
    }
    if alpha.s() == 1 {
        return Ok(None);
    }
    // synthetic division, highest coefficient first
    let mut acc = Rational::one();
    let mut out = Vec::with_capacity(alpha.s() - 1);
    for a in &alpha.entries()[..alpha.s() - 1] {
        acc = a + &acc * minus_b;
        out.push(acc.clone());
    }
    Ok(Some(AlphaVector::new(out)?))
}

/// `s` values with numerator uniform in `[-bound, bound]` and denominator
/// uniform in `[1, bound]`, drawn in that order per entry.
pub fn sample_beta(rng: &mut SplitMix64, s: usize, bound: u64) -> Vec<Rational> {
    let b = bound as i64;
    (0..s)
        .map(|_| {
            let num = rng.range_inclusive(-b, b);
            let den = rng.range_inclusive(1, b);
            Rational::new(BigInt::from(num), BigInt::from(den))
        })
        .collect()
}

pub fn random_condition_c_alpha(s: usize, bound: u64, seed: u64) -> Result<AlphaVector> {
    if s == 0 || bound == 0 || bound > i64::MAX as u64 {
        return Err(range_err("random alpha needs s >= 1 and 1 <= bound <= i64::MAX"));
    }
    let mut rng = SplitMix64::new(seed);
    alpha_from_beta(&sample_beta(&mut rng, s, bound))
}
