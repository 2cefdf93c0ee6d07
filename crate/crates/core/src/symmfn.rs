//! Elementary symmetric functions `sigma_k`, their means `E_k`, and the two
//! combined operators
//!
//! ```text
//! S_{k;s}(x) = E_k(x)     + sum_{i=1..s} alpha_i E_{k-i}(x)
//! Q_{k;s}(x) = sigma_k(x) + sum_{i=1..s} alpha_i sigma_{k-i}(x)
//! ```
//!
//! Indices outside `0..=n` read as zero inside the combined operators; direct
//! queries through [`e_mean`], [`s_eval`] and [`q_eval`] reject them.

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{binom_rat, serde_rational, Rational};
use crate::error::{range_err, Error, Result};

/// The variables `x = (x_1, ..., x_n)`, `n >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RationalList", into = "RationalList")]
pub struct VariableVector(Vec<Rational>);

/// Coefficients `alpha = (alpha_1, ..., alpha_s)`, `s >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RationalList", into = "RationalList")]
pub struct AlphaVector(Vec<Rational>);

#[derive(Clone, Serialize, Deserialize)]
#[serde(transparent)]
struct RationalList(#[serde(with = "serde_rational::vec")] Vec<Rational>);

impl TryFrom<RationalList> for VariableVector {
    type Error = Error;
    fn try_from(v: RationalList) -> Result<Self> {
        VariableVector::new(v.0)
    }
}

impl From<VariableVector> for RationalList {
    fn from(v: VariableVector) -> Self {
        RationalList(v.0)
    }
}

impl TryFrom<RationalList> for AlphaVector {
    type Error = Error;
    fn try_from(v: RationalList) -> Result<Self> {
        AlphaVector::new(v.0)
    }
}

impl From<AlphaVector> for RationalList {
    fn from(v: AlphaVector) -> Self {
        RationalList(v.0)
    }
}

impl VariableVector {
    pub fn new(entries: Vec<Rational>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyVector);
        }
        Ok(VariableVector(entries))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        VariableVector(self.0.iter().map(|v| v * c).collect())
    }
}

impl AlphaVector {
    pub fn new(entries: Vec<Rational>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyAlpha);
        }
        Ok(AlphaVector(entries))
    }

    pub fn s(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    /// `alpha_i` with the 1-based index used in the formulas.
    pub fn get(&self, i: usize) -> &Rational {
        &self.0[i - 1]
    }
}

/// `sigma_0 .. sigma_n` of `values` by the one-pass product recurrence.
pub(crate) fn sigma_of(values: &[Rational]) -> Vec<Rational> {
    let mut sigma = vec![Rational::one()];
    for v in values {
        sigma.push(Rational::zero());
        for k in (1..sigma.len()).rev() {
            let term = &sigma[k - 1] * v;
            sigma[k] += term;
        }
    }
    sigma
}

pub fn sigma_all(x: &VariableVector) -> Vec<Rational> {
    sigma_of(&x.0)
}

/// `sigma_k(x)` with the zero convention outside `0..=n`.
pub fn sigma(x: &VariableVector, k: i64) -> Rational {
    SymmetricMeans::new(x).sigma(k)
}

pub const BRUTEFORCE_LIMIT: usize = 20;

/// Literal sum over all `k`-subsets; the independent check on [`sigma_all`].
pub fn sigma_bruteforce(x: &VariableVector, k: i64) -> Result<Rational> {
    let n = x.n();
    if n > BRUTEFORCE_LIMIT {
        return Err(Error::EnumerationGuard(n, BRUTEFORCE_LIMIT));
    }
    if k < 0 || k as usize > n {
        return Ok(Rational::zero());
    }
    fn walk(values: &[Rational], start: usize, left: usize, prod: Rational, acc: &mut Rational) {
        if left == 0 {
            *acc += prod;
            return;
        }
        for i in start..=values.len() - left {
            walk(values, i + 1, left - 1, &prod * &values[i], acc);
        }
    }
    let mut acc = Rational::zero();
    walk(&x.0, 0, k as usize, Rational::one(), &mut acc);
    Ok(acc)
}

/// Precomputed `sigma` and `E` for one vector, so the combined operators can
/// be evaluated at many indices without recomputation.
#[derive(Clone, Debug)]
pub struct SymmetricMeans {
    n: usize,
    sigma: Vec<Rational>,
    means: Vec<Rational>,
}

impl SymmetricMeans {
    pub fn new(x: &VariableVector) -> Self {
        Self::from_sigma(sigma_of(&x.0))
    }

    /// From `sigma_0 .. sigma_n`.
    pub fn from_sigma(sigma: Vec<Rational>) -> Self {
        let n = sigma.len() - 1;
        let means = sigma
            .iter()
            .enumerate()
            .map(|(k, s)| s / binom_rat(n, k as i64))
            .collect();
        SymmetricMeans { n, sigma, means }
    }

    /// From `E_1 .. E_n`; `E_0 = 1` is implied.
    pub fn from_means(e: &[Rational]) -> Self {
        let n = e.len();
        let means: Vec<Rational> = std::iter::once(Rational::one()).chain(e.iter().cloned()).collect();
        let sigma = means
            .iter()
            .enumerate()
            .map(|(k, m)| m * binom_rat(n, k as i64))
            .collect();
        SymmetricMeans { n, sigma, means }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sigma(&self, k: i64) -> Rational {
        self.index(k).map_or_else(Rational::zero, |k| self.sigma[k].clone())
    }

    pub fn e(&self, k: i64) -> Rational {
        self.index(k).map_or_else(Rational::zero, |k| self.means[k].clone())
    }

    pub fn sigmas(&self) -> &[Rational] {
        &self.sigma
    }

    pub fn means(&self) -> &[Rational] {
        &self.means
    }

    fn index(&self, k: i64) -> Option<usize> {
        (0..=self.n as i64).contains(&k).then_some(k as usize)
    }

    /// `S_{k;s}` under the zero convention for every index.
    pub fn s(&self, alpha: &AlphaVector, k: i64) -> Rational {
        combine(alpha, k, |j| self.e(j))
    }

    /// `Q_{k;s}` under the zero convention for every index.
    pub fn q(&self, alpha: &AlphaVector, k: i64) -> Rational {
        combine(alpha, k, |j| self.sigma(j))
    }
}

fn combine(alpha: &AlphaVector, k: i64, term: impl Fn(i64) -> Rational) -> Rational {
    alpha
        .0
        .iter()
        .enumerate()
        .fold(term(k), |acc, (i, a)| acc + a * term(k - 1 - i as i64))
}

pub fn e_mean(x: &VariableVector, k: i64) -> Result<Rational> {
    if k < 0 || k as usize > x.n() {
        return Err(range_err(format!("E_k needs 0 <= k <= n = {}, got k = {k}", x.n())));
    }
    Ok(SymmetricMeans::new(x).e(k))
}

pub fn s_eval(x: &VariableVector, alpha: &AlphaVector, k: i64) -> Result<Rational> {
    if k < 0 || k as usize > x.n() {
        return Err(range_err(format!("S_k;s needs 0 <= k <= n = {}, got k = {k}", x.n())));
    }
    Ok(SymmetricMeans::new(x).s(alpha, k))
}

pub fn q_eval(x: &VariableVector, alpha: &AlphaVector, k: i64) -> Result<Rational> {
    let top = x.n() + alpha.s();
    if k < 0 || k as usize > top {
        return Err(range_err(format!("Q_k;s needs 0 <= k <= n + s = {top}, got k = {k}")));
    }
    Ok(SymmetricMeans::new(x).q(alpha, k))
}
