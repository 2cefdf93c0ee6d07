//! Random and grid exploration of the gaps when `f` is not real-rooted.

use num::{BigInt, Signed};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{serde_rational, Rational};
use crate::condition_c::condition_c_holds;
use crate::error::{range_err, Hypothesis, Result};
use crate::inequalities::{evaluate_gap, GapForm, GapReport};
use crate::rng::SplitMix64;
use crate::symmfn::{AlphaVector, SymmetricMeans, VariableVector};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub alpha: AlphaVector,
    pub k: i64,
    pub n: usize,
    pub samples: u64,
    pub numerator_bound: u64,
    pub denominator_bound: u64,
    pub seed: u64,
    pub target: GapForm,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub x: VariableVector,
    #[serde(with = "serde_rational")]
    pub gap: Rational,
    pub form: GapForm,
    pub sample_index: u64,
}

impl SearchConfig {
    fn validate(&self) -> Result<()> {
        if self.samples == 0 {
            return Err(range_err("samples must be at least 1"));
        }
        if self.numerator_bound == 0 || self.denominator_bound == 0 {
            return Err(range_err("sampling bounds must be at least 1"));
        }
        if self.numerator_bound > i64::MAX as u64 || self.denominator_bound > i64::MAX as u64 {
            return Err(range_err("sampling bounds must fit in i64"));
        }
        let hi = match self.target {
            GapForm::S => self.n as i64 - 1,
            GapForm::Q => (self.n + self.alpha.s()) as i64 - 1,
        };
        if self.k < 1 || self.k > hi {
            return Err(range_err(format!(
                "search needs 1 <= k <= {hi} for n = {}, got k = {}",
                self.n, self.k
            )));
        }
        Ok(())
    }
}

/// `n` entries, each a numerator uniform in `[-nb, nb]` followed by a
/// denominator uniform in `[1, db]`.
pub fn sample_x(rng: &mut SplitMix64, n: usize, numerator_bound: u64, denominator_bound: u64) -> VariableVector {
    let (nb, db) = (numerator_bound as i64, denominator_bound as i64);
    let entries = (0..n)
        .map(|_| {
            let num = rng.range_inclusive(-nb, nb);
            let den = rng.range_inclusive(1, db);
            Rational::new(BigInt::from(num), BigInt::from(den))
        })
        .collect();
    VariableVector::new(entries).expect("n >= 1")
}

/// The plain (unsharpened) gap of the selected form.
pub fn raw_gap(x: &VariableVector, alpha: &AlphaVector, k: i64, form: GapForm) -> Rational {
    evaluate_gap(&SymmetricMeans::new(x), alpha, k, form, false).gap
}

/// Sample `i` is drawn from its own stream of the seed, and the witness with
/// the smallest index wins, so the result does not depend on thread count.
pub fn find_counterexample(cfg: &SearchConfig) -> Result<Option<Witness>> {
    if cfg.n == 0 {
        return Err(range_err("search needs n >= 1"));
    }
    cfg.validate()?;
    if condition_c_holds(&cfg.alpha) {
        return Err(Hypothesis::FutileSearch.into());
    }
    Ok((0..cfg.samples).into_par_iter().find_map_first(|i| {
        let mut rng = SplitMix64::for_stream(cfg.seed, i);
        let x = sample_x(&mut rng, cfg.n, cfg.numerator_bound, cfg.denominator_bound);
        let gap = raw_gap(&x, &cfg.alpha, cfg.k, cfg.target);
        gap.is_negative().then_some(Witness {
            x,
            gap,
            form: cfg.target,
            sample_index: i,
        })
    }))
}

/// Evaluates the gap on every grid point with the zero convention for
/// out-of-range indices; output order follows the grid.
pub fn sweep_gap(alpha: &AlphaVector, k: i64, grid: &[VariableVector], form: GapForm) -> Vec<GapReport> {
    let verified = condition_c_holds(alpha);
    grid.par_iter()
        .map(|x| evaluate_gap(&SymmetricMeans::new(x), alpha, k, form, verified))
        .collect()
}
