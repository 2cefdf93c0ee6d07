//! The polynomials behind the proofs: `P(t) = prod (t - x_i)`, its scaled
//! derivative `P1`, the companion `P2` with `P = t P1 - P2`, the pencil
//! `P3 = P2 + b P1`, plus augmentation and the special Lagrangian operator.

use num::{BigInt, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{binom, binom_rat, Natural, Rational};
use crate::condition_c::default_width;
use crate::error::{range_err, Hypothesis, Result};
use crate::symmfn::{AlphaVector, SymmetricMeans, VariableVector};
use crate::upoly::{isolate_jointly, isolate_real_roots, real_root_count, Polynomial, RootIsolation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedTriple {
    pub p: Polynomial,
    pub p1: Polynomial,
    pub p2: Polynomial,
}

fn check_n(x: &VariableVector) -> Result<usize> {
    if x.n() < 2 {
        return Err(range_err(format!("need n >= 2, got n = {}", x.n())));
    }
    Ok(x.n())
}

/// Coefficient of `t^{n-1-k}` is `(-1)^k C(n-1, k) * term(k)`.
fn alternating(n: usize, term: impl Fn(i64) -> Rational) -> Polynomial {
    let mut coeffs: Vec<Rational> = (0..n as i64)
        .map(|k| {
            let c = binom_rat(n - 1, k) * term(k);
            if k % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect();
    coeffs.reverse();
    Polynomial::new(coeffs)
}

pub fn build_p1(x: &VariableVector) -> Result<Polynomial> {
    let n = check_n(x)?;
    let m = SymmetricMeans::new(x);
    Ok(alternating(n, |k| m.e(k)))
}

pub fn build_p2(x: &VariableVector) -> Result<Polynomial> {
    let n = check_n(x)?;
    let m = SymmetricMeans::new(x);
    Ok(alternating(n, |k| m.e(k + 1)))
}

pub fn build_p3(x: &VariableVector, b: &Rational) -> Result<Polynomial> {
    let n = check_n(x)?;
    let m = SymmetricMeans::new(x);
    Ok(alternating(n, |k| m.e(k + 1) + b * m.e(k)))
}

pub fn derived_triple(x: &VariableVector) -> Result<DerivedTriple> {
    Ok(DerivedTriple {
        p: Polynomial::from_roots(x.entries()),
        p1: build_p1(x)?,
        p2: build_p2(x)?,
    })
}

/// `P(t) = t P1(t) - P2(t)`, compared coefficient by coefficient.
pub fn verify_p_decomposition(x: &VariableVector) -> Result<bool> {
    let d = derived_triple(x)?;
    Ok(d.p == &(&Polynomial::monomial(Rational::from_integer(BigInt::from(1)), 1) * &d.p1) - &d.p2)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealRootedness {
    pub holds: bool,
    pub polynomial: Polynomial,
    /// `None` for the zero polynomial, which is counted as real-rooted.
    pub degree: Option<usize>,
    pub real_roots: usize,
    pub roots: RootIsolation,
}

pub fn verify_p3_real_rooted(x: &VariableVector, b: &Rational) -> Result<RealRootedness> {
    let p3 = build_p3(x, b)?;
    if p3.is_zero() {
        return Ok(RealRootedness {
            holds: true,
            polynomial: p3,
            degree: None,
            real_roots: 0,
            roots: RootIsolation::default(),
        });
    }
    let degree = p3.deg().expect("nonzero");
    let real_roots = real_root_count(&p3)?;
    Ok(RealRootedness {
        holds: real_roots == degree,
        roots: isolate_real_roots(&p3, &default_width())?,
        polynomial: p3,
        degree: Some(degree),
        real_roots,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InterlacingReport {
    pub holds: bool,
    pub p1_roots: RootIsolation,
    pub p2_roots: RootIsolation,
    /// Left-to-right root labels, `y` for `P1` and `z` for `P2`.
    pub order: String,
}

/// Isolates the roots of `P1` and `P2` in disjoint intervals and checks that
/// all are real and simple and that the two families alternate.
pub fn verify_interlacing(x: &VariableVector) -> Result<InterlacingReport> {
    let n = check_n(x)?;
    let mut sorted = x.entries().to_vec();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Hypothesis::RepeatedEntries.into());
    }
    let p1 = build_p1(x)?;
    let p2 = build_p2(x)?;
    let (r1, r2) = isolate_jointly(&p1, &p2, &default_width())?;

    let mut labelled: Vec<(&Rational, char)> = r1
        .iter()
        .map(|r| (&r.lo, 'y'))
        .chain(r2.iter().map(|r| (&r.lo, 'z')))
        .collect();
    labelled.sort_by(|a, b| a.0.cmp(b.0));
    let order: String = labelled.iter().map(|(_, c)| *c).collect();

    let simple = r1.iter().chain(r2.iter()).all(|r| r.multiplicity == 1);
    let p2_degree = p2.deg().unwrap_or(0);
    let alternates = order.as_bytes().windows(2).all(|w| w[0] != w[1]);
    let holds = simple
        && alternates
        && r1.len() == n - 1
        && r2.len() == p2_degree
        && p2_degree + 2 >= n;
    Ok(InterlacingReport {
        holds,
        p1_roots: r1,
        p2_roots: r2,
        order,
    })
}

/// `Y = (beta_1, ..., beta_s, x_1, ..., x_n)`, for which
/// `sigma_k(Y) = Q_{k;s}(x)` with `alpha = sigma(beta)`.
pub fn augment(x: &VariableVector, beta: &[Rational]) -> VariableVector {
    let mut y = beta.to_vec();
    y.extend_from_slice(x.entries());
    VariableVector::new(y).expect("x is nonempty")
}

/// The special Lagrangian operator `sum_j (-1)^j sigma_{2j+1}` written as
/// `sign * C(n, k) * S_{k;s}` with `k` the largest odd index `<= n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialLagrangian {
    pub k: usize,
    pub s: usize,
    pub alpha: AlphaVector,
    pub sign: i8,
    #[serde(skip)]
    n: usize,
}

impl SpecialLagrangian {
    pub fn n(&self) -> usize {
        self.n
    }

    /// The magnitude `C(n, k)` of the leading coefficient.
    pub fn scale(&self) -> Natural {
        binom(self.n as u64, self.k as i64)
    }
}

/// Coefficients `c_j` of `E_j(x)`, `j = 0..=n`, in the operator.
pub fn special_lagrangian_e_coefficients(n: usize) -> Vec<Rational> {
    (0..=n)
        .map(|j| {
            if j % 2 == 0 {
                return Rational::zero();
            }
            let c = binom_rat(n, j as i64);
            if (j / 2) % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect()
}

pub fn special_lagrangian_alpha(n: usize) -> Result<SpecialLagrangian> {
    if n < 3 {
        return Err(range_err(format!("special Lagrangian form needs n >= 3, got n = {n}")));
    }
    let c = special_lagrangian_e_coefficients(n);
    let k = if n % 2 == 1 { n } else { n - 1 };
    let s = k - 1;
    let top = &c[k];
    let alpha = (1..=s).map(|i| &c[k - i] / top).collect();
    Ok(SpecialLagrangian {
        k,
        s,
        alpha: AlphaVector::new(alpha)?,
        sign: if top.is_negative() { -1 } else { 1 },
        n,
    })
}
