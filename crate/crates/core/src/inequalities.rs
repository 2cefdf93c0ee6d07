//! Exact gaps for the Newton and Maclaurin type inequalities.
//!
//! Every check returns a [`GapReport`]. `gap` is always `lhs - rhs` of the
//! plain comparison (for instance `Q_k^2 - Q_{k-1} Q_{k+1}`). Checks that
//! carry a constant `theta` additionally report `theta_gap`, the margin of
//! the sharpened form, and `holds`/`equality` then refer to that margin.
//!
//! Conditional results refuse to run when their sign hypotheses fail. The
//! real-rootedness condition on `alpha` is the exception: gaps are still
//! evaluated without it, with `condition_c_verified = false`, so that
//! counterexamples can be explored.

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{binom_rat, pow, serde_rational, Rational};
use crate::condition_c::{build_f, condition_c_holds, roots_nonpositive};
use crate::error::{range_err, Error, Hypothesis, Result};
use crate::symmfn::{AlphaVector, SymmetricMeans, VariableVector};
use crate::upoly::{root_multiplicity, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EqualityCause {
    /// `n` of the values among `x_1..x_n, -beta_1..-beta_s` coincide.
    NEqualElements,
    BothSidesZero,
    None,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GapForm {
    #[serde(rename = "S", alias = "S-form")]
    S,
    #[serde(rename = "Q", alias = "Q-form")]
    Q,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapReport {
    #[serde(with = "serde_rational")]
    pub gap: Rational,
    pub holds: bool,
    #[serde(with = "serde_rational")]
    pub lhs: Rational,
    #[serde(with = "serde_rational")]
    pub rhs: Rational,
    pub equality: bool,
    pub equality_cause: EqualityCause,
    pub condition_c_verified: bool,
    #[serde(default, with = "serde_rational::option", skip_serializing_if = "Option::is_none")]
    pub theta: Option<Rational>,
    #[serde(default, with = "serde_rational::option", skip_serializing_if = "Option::is_none")]
    pub theta_gap: Option<Rational>,
    /// False when `k > n`: evaluated, but beyond the classical index range.
    #[serde(default = "yes")]
    pub within_stated_range: bool,
}

fn yes() -> bool {
    true
}

impl GapReport {
    fn plain(lhs: Rational, rhs: Rational, condition_c_verified: bool) -> Self {
        let gap = &lhs - &rhs;
        GapReport {
            holds: !gap.is_negative(),
            equality: gap.is_zero(),
            gap,
            lhs,
            rhs,
            equality_cause: EqualityCause::None,
            condition_c_verified,
            theta: None,
            theta_gap: None,
            within_stated_range: true,
        }
    }

    fn sharpened(lhs: Rational, rhs: Rational, theta: Rational, theta_gap: Rational, condition_c_verified: bool) -> Self {
        GapReport {
            gap: &lhs - &rhs,
            holds: !theta_gap.is_negative(),
            equality: theta_gap.is_zero(),
            lhs,
            rhs,
            equality_cause: EqualityCause::None,
            condition_c_verified,
            theta: Some(theta),
            theta_gap: Some(theta_gap),
            within_stated_range: true,
        }
    }

    fn both_sides_zero(&self) -> bool {
        self.lhs.is_zero() && self.rhs.is_zero()
    }

    /// `gap - theta * lhs` for the `theta`-form; the plain gap otherwise.
    pub fn margin(&self) -> &Rational {
        self.theta_gap.as_ref().unwrap_or(&self.gap)
    }
}

fn check_k(k: i64, lo: i64, hi: i64, what: &str) -> Result<usize> {
    if k < lo || k > hi {
        return Err(range_err(format!("{what} needs {lo} <= k <= {hi}, got k = {k}")));
    }
    Ok(k as usize)
}

/// `1 <= s < n - 1`, the standing assumption of the combined inequalities.
fn check_s(x: &VariableVector, alpha: &AlphaVector) -> Result<()> {
    let (n, s) = (x.n(), alpha.s());
    if s + 1 >= n {
        return Err(range_err(format!("need 1 <= s < n - 1, got s = {s}, n = {n}")));
    }
    Ok(())
}

/// `E_k^2 - E_{k-1} E_{k+1}`, valid for every real `x`.
pub fn newton_gap_e(x: &VariableVector, k: i64) -> Result<GapReport> {
    let k = check_k(k, 1, x.n() as i64 - 1, "E-form Newton inequality")? as i64;
    let m = SymmetricMeans::new(x);
    let mut report = GapReport::plain(pow(&m.e(k), 2), m.e(k - 1) * m.e(k + 1), true);
    if report.equality {
        report.equality_cause = if x.entries().windows(2).all(|w| w[0] == w[1]) {
            EqualityCause::NEqualElements
        } else if report.both_sides_zero() {
            EqualityCause::BothSidesZero
        } else {
            EqualityCause::None
        };
    }
    Ok(report)
}

/// `((C_N^k)^2 - C_N^{k-1} C_N^{k+1}) / (C_N^k)^2` with `N = n + s`.
pub fn theta(n: usize, s: usize, k: i64) -> Result<Rational> {
    let total = n + s;
    check_k(k, 1, total as i64 - 1, "theta")?;
    let mid = binom_rat(total, k);
    let sq = &mid * &mid;
    Ok((&sq - binom_rat(total, k - 1) * binom_rat(total, k + 1)) / sq)
}

/// `sigma_k^2 - sigma_{k-1} sigma_{k+1} >= theta sigma_k^2`.
pub fn sigma_gap(x: &VariableVector, k: i64) -> Result<GapReport> {
    let k = check_k(k, 1, x.n() as i64 - 1, "sigma-form Newton inequality")? as i64;
    let m = SymmetricMeans::new(x);
    Ok(theta_form(m.sigma(k), m.sigma(k - 1) * m.sigma(k + 1), theta(x.n(), 0, k)?, true))
}

fn theta_form(q_k: Rational, rhs: Rational, theta: Rational, verified: bool) -> GapReport {
    let lhs = pow(&q_k, 2);
    let margin = &lhs - &rhs - &theta * &lhs;
    let mut report = GapReport::sharpened(lhs, rhs, theta, margin, verified);
    if report.equality {
        report.equality_cause = if report.both_sides_zero() {
            EqualityCause::BothSidesZero
        } else {
            EqualityCause::NEqualElements
        };
    }
    report
}

/// `S_{k;s}^2 - S_{k-1;s} S_{k+1;s}` for `s + 1 <= k <= n - 1`.
pub fn newton_gap_s(x: &VariableVector, alpha: &AlphaVector, k: i64) -> Result<GapReport> {
    check_s(x, alpha)?;
    let k = check_k(k, alpha.s() as i64 + 1, x.n() as i64 - 1, "S-form Newton inequality")? as i64;
    let m = SymmetricMeans::new(x);
    let verified = condition_c_holds(alpha);
    let mut report = GapReport::plain(pow(&m.s(alpha, k), 2), m.s(alpha, k - 1) * m.s(alpha, k + 1), verified);
    report.equality_cause = witness_from(x, alpha, &report);
    Ok(report)
}

/// Which equality clause applies at this instance, judged structurally
/// rather than from the gap: a value `v` whose multiplicity in `x` plus its
/// multiplicity as a root of `f` reaches `n`, or both sides vanishing.
pub fn equality_witness(x: &VariableVector, alpha: &AlphaVector, k: i64) -> Result<EqualityCause> {
    check_s(x, alpha)?;
    let k = check_k(k, alpha.s() as i64 + 1, x.n() as i64 - 1, "S-form Newton inequality")? as i64;
    let m = SymmetricMeans::new(x);
    let report = GapReport::plain(pow(&m.s(alpha, k), 2), m.s(alpha, k - 1) * m.s(alpha, k + 1), true);
    Ok(witness_from(x, alpha, &report))
}

fn witness_from(x: &VariableVector, alpha: &AlphaVector, report: &GapReport) -> EqualityCause {
    let f = build_f(alpha);
    let mut values: Vec<&Rational> = x.entries().iter().collect();
    values.sort();
    values.dedup();
    let hit = values.into_iter().any(|v| {
        let in_x = x.entries().iter().filter(|e| *e == v).count();
        in_x + root_multiplicity(&f, v) >= x.n()
    });
    if hit {
        EqualityCause::NEqualElements
    } else if report.both_sides_zero() {
        EqualityCause::BothSidesZero
    } else {
        EqualityCause::None
    }
}

/// `Q_{k;s}^2 - Q_{k-1;s} Q_{k+1;s} >= theta Q_{k;s}^2` with
/// `theta = theta(n, s, k)`. Accepts `1 <= k <= n + s - 1`; indices above
/// `n` are flagged as outside the stated range.
pub fn q_gap(x: &VariableVector, alpha: &AlphaVector, k: i64) -> Result<GapReport> {
    check_s(x, alpha)?;
    let (n, s) = (x.n(), alpha.s());
    let k = check_k(k, 1, (n + s) as i64 - 1, "Q-form Newton inequality")? as i64;
    let m = SymmetricMeans::new(x);
    let verified = condition_c_holds(alpha);
    let mut report = theta_form(m.q(alpha, k), m.q(alpha, k - 1) * m.q(alpha, k + 1), theta(n, s, k)?, verified);
    report.within_stated_range = k as usize <= n;
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaclaurinLink {
    /// The link `S_m^{1/m} >= S_{m+1}^{1/(m+1)}`, compared as
    /// `S_m^{m+1}` against `S_{m+1}^m`.
    pub m: usize,
    pub report: GapReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaclaurinChain {
    pub holds: bool,
    pub links: Vec<MaclaurinLink>,
}

/// `S_1 >= S_2^{1/2} >= ... >= S_k^{1/k}` after checking every hypothesis:
/// real-rooted `f` with all `beta_j >= 0`, `E_1..E_s >= 0`, and
/// `S_m >= 0` for `m = s..k`.
pub fn maclaurin_chain_s(x: &VariableVector, alpha: &AlphaVector, k: i64) -> Result<MaclaurinChain> {
    check_s(x, alpha)?;
    let k = check_k(k, 2, x.n() as i64, "Maclaurin chain")?;
    if !condition_c_holds(alpha) {
        return Err(Hypothesis::ConditionC.into());
    }
    if !roots_nonpositive(alpha) {
        return Err(Hypothesis::NegativeBeta.into());
    }
    let m = SymmetricMeans::new(x);
    let s = alpha.s();
    if let Some(j) = (1..=s).find(|&j| m.e(j as i64).is_negative()) {
        return Err(Hypothesis::NegativeMean(j).into());
    }
    if let Some(q) = (s..=k).find(|&q| m.s(alpha, q as i64).is_negative()) {
        return Err(Hypothesis::NegativeS(q).into());
    }
    let values: Vec<Rational> = (0..=k).map(|q| m.s(alpha, q as i64)).collect();
    let links: Vec<MaclaurinLink> = (1..k)
        .map(|q| {
            let mut report = GapReport::plain(pow(&values[q], q + 1), pow(&values[q + 1], q), true);
            if report.equality && report.both_sides_zero() {
                report.equality_cause = EqualityCause::BothSidesZero;
            }
            MaclaurinLink { m: q, report }
        })
        .collect();
    Ok(MaclaurinChain {
        holds: links.iter().all(|l| l.report.holds),
        links,
    })
}

fn check_lk(x: &VariableVector, alpha: &AlphaVector, l: i64, k: i64) -> Result<(i64, i64)> {
    check_s(x, alpha)?;
    let s = alpha.s() as i64;
    if !(s < l && l < k && k <= x.n() as i64) {
        return Err(range_err(format!(
            "need s < l < k <= n, got s = {s}, l = {l}, k = {k}, n = {}",
            x.n()
        )));
    }
    Ok((l, k))
}

/// The sign hypotheses of the chained inequalities: the inner terms
/// `l..=k-1` are nonnegative and, when the chain has more than one link, the
/// two outer terms are not both negative. Without the second clause the
/// inequality fails (both outer terms negative make the right side positive
/// and unbounded by the chain).
fn chain_hypotheses(values: impl Fn(i64) -> Rational, l: i64, k: i64, negative: fn(usize) -> Hypothesis) -> Result<()> {
    if let Some(q) = (l..k).find(|&q| values(q).is_negative()) {
        return Err(negative(q as usize).into());
    }
    if k - l >= 2 && values(l - 1).is_negative() && values(k).is_negative() {
        return Err(Hypothesis::BoundarySigns((l - 1) as usize, k as usize).into());
    }
    Ok(())
}

/// `S_{l;s} S_{k-1;s} >= S_{l-1;s} S_{k;s}` for `s < l < k <= n`.
pub fn general_newton_s(x: &VariableVector, alpha: &AlphaVector, l: i64, k: i64) -> Result<GapReport> {
    let (l, k) = check_lk(x, alpha, l, k)?;
    let m = SymmetricMeans::new(x);
    let value = |q: i64| m.s(alpha, q);
    chain_hypotheses(value, l, k, Hypothesis::NegativeS)?;
    let verified = condition_c_holds(alpha);
    let mut report = GapReport::plain(value(l) * value(k - 1), value(l - 1) * value(k), verified);
    if report.equality && report.both_sides_zero() {
        report.equality_cause = EqualityCause::BothSidesZero;
    }
    Ok(report)
}

/// `1 + Theta = prod_{q=l}^{k-1} (1 + theta(n, s, q))`.
pub fn chain_theta(n: usize, s: usize, l: i64, k: i64) -> Result<Rational> {
    let mut factor = Rational::one();
    for q in l..k {
        factor *= Rational::one() + theta(n, s, q)?;
    }
    Ok(factor - Rational::one())
}

/// `Q_{l;s} Q_{k-1;s} >= (1 + Theta) Q_{l-1;s} Q_{k;s}` for `s < l < k <= n`,
/// with `Theta` from [`chain_theta`].
pub fn general_newton_q(x: &VariableVector, alpha: &AlphaVector, l: i64, k: i64) -> Result<GapReport> {
    let (l, k) = check_lk(x, alpha, l, k)?;
    let m = SymmetricMeans::new(x);
    let value = |q: i64| m.q(alpha, q);
    chain_hypotheses(value, l, k, Hypothesis::NegativeQ)?;
    let big_theta = chain_theta(x.n(), alpha.s(), l, k)?;
    let lhs = value(l) * value(k - 1);
    let rhs = value(l - 1) * value(k);
    let margin = &lhs - (Rational::one() + &big_theta) * &rhs;
    let verified = condition_c_holds(alpha);
    let mut report = GapReport::sharpened(lhs, rhs, big_theta, margin, verified);
    if report.equality && report.both_sides_zero() {
        report.equality_cause = EqualityCause::BothSidesZero;
    }
    Ok(report)
}

/// Evidence that `g(t) = t^n + C_n^1 E_1 t^{n-1} + ... + C_n^n E_n` is not
/// real-rooted: a real-rooted `f` for which the S-form Newton inequality
/// fails on the given `E` values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexRootCertificate {
    pub g: Polynomial,
    pub k: usize,
    pub alpha: AlphaVector,
    #[serde(with = "serde_rational")]
    pub gap: Rational,
    #[serde(with = "serde_rational")]
    pub lhs: Rational,
    #[serde(with = "serde_rational")]
    pub rhs: Rational,
}

pub fn certify_complex(e_values: &[Rational], alpha: &AlphaVector, k: i64) -> Result<Option<ComplexRootCertificate>> {
    let n = e_values.len();
    let s = alpha.s();
    if k <= s as i64 || k >= n as i64 {
        return Err(range_err(format!("need s < k < n, got s = {s}, k = {k}, n = {n}")));
    }
    if !condition_c_holds(alpha) {
        return Err(Error::Hypothesis(Hypothesis::ConditionC));
    }
    let m = SymmetricMeans::from_means(e_values);
    let lhs = pow(&m.s(alpha, k), 2);
    let rhs = m.s(alpha, k - 1) * m.s(alpha, k + 1);
    let gap = &lhs - &rhs;
    if !gap.is_negative() {
        return Ok(None);
    }
    let g = Polynomial::new((0..=n).map(|j| m.sigma((n - j) as i64)).collect());
    Ok(Some(ComplexRootCertificate {
        g,
        k: k as usize,
        alpha: alpha.clone(),
        gap,
        lhs,
        rhs,
    }))
}

/// Evaluates the chosen gap with the zero convention at every index and no
/// range checks; used by sweeps and the counterexample search.
pub fn evaluate_gap(m: &SymmetricMeans, alpha: &AlphaVector, k: i64, form: GapForm, verified: bool) -> GapReport {
    match form {
        GapForm::S => GapReport::plain(pow(&m.s(alpha, k), 2), m.s(alpha, k - 1) * m.s(alpha, k + 1), verified),
        GapForm::Q => {
            let q_k = m.q(alpha, k);
            let rhs = m.q(alpha, k - 1) * m.q(alpha, k + 1);
            match theta(m.n(), alpha.s(), k) {
                Ok(t) => {
                    let mut r = theta_form(q_k, rhs, t, verified);
                    r.within_stated_range = k >= 1 && k as usize <= m.n();
                    r
                }
                Err(_) => {
                    let mut r = GapReport::plain(pow(&q_k, 2), rhs, verified);
                    r.within_stated_range = false;
                    r
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, ratio};
    use crate::condition_c::alpha_from_beta;

    fn vv(v: &[Rational]) -> VariableVector {
        VariableVector::new(v.to_vec()).unwrap()
    }

    fn ints(v: &[i64]) -> VariableVector {
        vv(&v.iter().map(|&a| int(a)).collect::<Vec<_>>())
    }

    fn av(v: &[i64]) -> AlphaVector {
        AlphaVector::new(v.iter().map(|&a| int(a)).collect()).unwrap()
    }

    fn canned_x() -> VariableVector {
        vv(&[ratio(1, 3), ratio(1, 3), int(2), int(3)])
    }

    #[test]
    fn newton_e_examples() {
        let r = newton_gap_e(&ints(&[1, 2, 3]), 1).unwrap();
        assert_eq!(r.gap, ratio(1, 3));
        assert!(r.holds && !r.equality);
        for k in 1..=3 {
            let r = newton_gap_e(&ints(&[5, 5, 5, 5]), k).unwrap();
            assert!(r.equality);
            assert_eq!(r.equality_cause, EqualityCause::NEqualElements);
        }
        assert_eq!(newton_gap_e(&ints(&[1, -1]), 1).unwrap().gap, int(1));
        assert!(newton_gap_e(&ints(&[1, 2]), 2).is_err());
        assert!(newton_gap_e(&ints(&[1, 2]), 0).is_err());
    }

    #[test]
    fn sigma_gap_examples() {
        let r = sigma_gap(&ints(&[1, 2, 3]), 2).unwrap();
        assert_eq!(r.theta, Some(ratio(2, 3)));
        assert_eq!(r.theta_gap, Some(ratio(13, 3)));
        assert_eq!(r.gap, int(85));
        assert!(r.holds);

        let r = sigma_gap(&ints(&[7, 7, 7]), 1).unwrap();
        assert_eq!(r.theta_gap, Some(int(0)));
        assert!(r.equality && r.holds);

        let r = sigma_gap(&ints(&[0, 0, 0]), 2).unwrap();
        assert!(r.equality && r.holds);
        assert_eq!(r.equality_cause, EqualityCause::BothSidesZero);
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta(4, 2, 3).unwrap(), ratio(7, 16));
        assert_eq!(theta(3, 0, 1).unwrap(), ratio(2, 3));
        assert!(theta(4, 2, 6).is_err());
        assert!(theta(4, 2, 0).is_err());
    }

    #[test]
    fn newton_s_examples() {
        let x = ints(&[1, 2, 3, 4]);
        let r = newton_gap_s(&x, &av(&[1]), 2).unwrap();
        assert_eq!(r.gap, ratio(95, 18));
        assert!(r.holds && r.condition_c_verified);
        assert_eq!(r.equality_cause, EqualityCause::None);

        let r = newton_gap_s(&ints(&[1, 1, 1, 1]), &av(&[3]), 2).unwrap();
        assert_eq!(r.gap, int(0));
        assert_eq!(r.equality_cause, EqualityCause::NEqualElements);

        // Outside the real-rooted case the gap is still evaluated and flagged.
        let r = newton_gap_s(&canned_x(), &av(&[0, 1]), 3).unwrap();
        assert!(!r.condition_c_verified);
        assert_eq!(r.gap, ratio(2225, 2916));

        assert!(newton_gap_s(&x, &av(&[1]), 1).is_err());
        assert!(newton_gap_s(&x, &av(&[1, 1, 1]), 3).is_err());
    }

    #[test]
    fn equality_witness_examples() {
        assert_eq!(
            equality_witness(&ints(&[1, 1, 1, 1]), &av(&[-5, 6]), 3).unwrap(),
            EqualityCause::NEqualElements
        );
        assert_eq!(equality_witness(&ints(&[2, 2, 2]), &av(&[-2]), 2).unwrap(), EqualityCause::NEqualElements);
        assert_eq!(equality_witness(&ints(&[1, 2, 3, 4]), &av(&[1]), 2).unwrap(), EqualityCause::None);
        // two copies in x plus a double root of f: (t - 5)^2
        let x = ints(&[5, 5, 1, 9]);
        let a = alpha_from_beta(&[int(-5), int(-5)]).unwrap();
        assert_eq!(equality_witness(&x, &a, 3).unwrap(), EqualityCause::NEqualElements);
        assert_eq!(newton_gap_s(&x, &a, 3).unwrap().gap, int(0));
    }

    #[test]
    fn q_gap_canned_counterexample() {
        let r = q_gap(&canned_x(), &av(&[0, 1]), 3).unwrap();
        assert_eq!(r.gap, ratio(-10, 9));
        assert_eq!(r.lhs, ratio(8464, 81));
        assert_eq!(r.rhs, ratio(94, 9) * ratio(91, 9));
        assert!(!r.holds);
        assert!(!r.condition_c_verified);
        assert_eq!(r.theta, Some(ratio(7, 16)));
    }

    #[test]
    fn q_gap_flags_proof_only_indices() {
        let x = ints(&[1, 2, 3, 4]);
        let a = alpha_from_beta(&[int(1), int(2)]).unwrap();
        assert!(q_gap(&x, &a, 4).unwrap().within_stated_range);
        let r = q_gap(&x, &a, 5).unwrap();
        assert!(!r.within_stated_range);
        assert!(r.holds);
        assert!(q_gap(&x, &a, 6).is_err());
    }

    #[test]
    fn q_gap_augmented_example() {
        // x = (1, 2), beta = (3) is below the s < n - 1 range; use n = 3.
        let x = ints(&[1, 2, 5]);
        let a = alpha_from_beta(&[int(3)]).unwrap();
        for k in 1..=3 {
            assert!(q_gap(&x, &a, k).unwrap().holds);
        }
    }

    #[test]
    fn q_gap_at_zero_vector() {
        // Y = (1, 2, 0, 0, 0, 0): Q_1 = 3, Q_2 = 2, the rest vanish
        let x = ints(&[0, 0, 0, 0]);
        let a = alpha_from_beta(&[int(1), int(2)]).unwrap();
        let r = q_gap(&x, &a, 1).unwrap();
        assert_eq!(r.gap, int(7));
        assert_eq!(r.theta_gap, Some(ratio(7, 4)));
        let r = q_gap(&x, &a, 3).unwrap();
        assert_eq!(r.gap, int(0));
        assert_eq!(r.equality_cause, EqualityCause::BothSidesZero);
    }

    #[test]
    fn maclaurin_examples() {
        let x = ints(&[1, 2, 3, 4]);
        let chain = maclaurin_chain_s(&x, &av(&[1]), 2).unwrap();
        assert_eq!(chain.links.len(), 1);
        let link = &chain.links[0].report;
        assert_eq!(link.lhs, ratio(49, 4));
        assert_eq!(link.rhs, ratio(25, 3));
        assert!(link.holds);

        let chain = maclaurin_chain_s(&x, &av(&[1]), 3).unwrap();
        let link = &chain.links[1].report;
        assert_eq!(link.lhs, pow(&ratio(25, 3), 3));
        assert_eq!(link.rhs, pow(&ratio(55, 3), 2));
        assert!(chain.holds);

        let c = ints(&[3, 3, 3, 3, 3]);
        let chain = maclaurin_chain_s(&c, &alpha_from_beta(&[int(0), int(0)]).unwrap(), 5).unwrap();
        assert!(chain.links.iter().all(|l| l.report.equality));
    }

    #[test]
    fn maclaurin_rejects_failed_hypotheses() {
        let x = ints(&[1, 2, 3, 4]);
        assert_eq!(maclaurin_chain_s(&x, &av(&[0, 1]), 3), Err(Hypothesis::ConditionC.into()));
        let neg = alpha_from_beta(&[int(-1)]).unwrap();
        assert_eq!(maclaurin_chain_s(&x, &neg, 3), Err(Hypothesis::NegativeBeta.into()));
        assert_eq!(
            maclaurin_chain_s(&ints(&[-1, -2, -3, -4]), &av(&[1]), 3),
            Err(Hypothesis::NegativeMean(1).into())
        );
    }

    #[test]
    fn general_newton_s_examples() {
        let x = ints(&[1, 2, 3, 4]);
        let r = general_newton_s(&x, &av(&[1]), 2, 3).unwrap();
        assert_eq!(r.gap, ratio(95, 18));
        // l = k - 1 is the S-form Newton inequality at k - 1
        for k in 3..=4 {
            let chained = general_newton_s(&x, &av(&[1]), k - 1, k).unwrap();
            let single = newton_gap_s(&x, &av(&[1]), k - 1).unwrap();
            assert_eq!(chained.gap, single.gap);
        }
        let c = ints(&[2, 2, 2, 2, 2]);
        let r = general_newton_s(&c, &alpha_from_beta(&[int(-2)]).unwrap(), 2, 5).unwrap();
        assert!(r.equality);
    }

    #[test]
    fn chained_inequality_needs_outer_terms_not_both_negative() {
        // Both outer terms negative: the stated inner hypothesis holds, yet
        // the raw comparison fails, so the check refuses to certify.
        let x = vv(&[ratio(2, 11), ratio(9, 5), ratio(3, 2), ratio(-7, 2), ratio(-7, 10), ratio(5, 12)]);
        let a = alpha_from_beta(&[ratio(-3, 2)]).unwrap();
        let m = SymmetricMeans::new(&x);
        assert!((3..6).all(|q| !m.s(&a, q).is_negative()));
        assert!((m.s(&a, 3) * m.s(&a, 5) - m.s(&a, 2) * m.s(&a, 6)).is_negative());
        assert_eq!(general_newton_s(&x, &a, 3, 6), Err(Hypothesis::BoundarySigns(2, 6).into()));
    }

    #[test]
    fn general_newton_q_examples() {
        let x = ints(&[1, 2, 3, 4]);
        let r = general_newton_q(&x, &av(&[1]), 2, 3).unwrap();
        assert_eq!(r.theta, Some(theta(4, 1, 2).unwrap()));
        assert!(r.holds);
        let single = q_gap(&x, &av(&[1]), 2).unwrap();
        assert_eq!(r.gap, single.gap);

        // tight instance of the sharpened form: x and beta all equal
        let c = ints(&[2, 2, 2, 2, 2]);
        let a = alpha_from_beta(&[int(2)]).unwrap();
        let r = general_newton_q(&c, &a, 2, 5).unwrap();
        assert!(r.holds);
    }

    #[test]
    fn certify_complex_examples() {
        // E from a real-rooted g never yields a certificate.
        let m = SymmetricMeans::new(&ints(&[1, 2, 3, 5]));
        let e = &m.means()[1..];
        assert_eq!(certify_complex(e, &av(&[1]), 2).unwrap(), None);
        assert_eq!(certify_complex(e, &av(&[1]), 3).unwrap(), None);

        // constant vector: equality, no conclusion
        let m = SymmetricMeans::new(&ints(&[3, 3, 3, 3]));
        assert_eq!(certify_complex(&m.means()[1..], &av(&[-1]), 2).unwrap(), None);

        assert_eq!(certify_complex(e, &av(&[0, 1]), 3), Err(Hypothesis::ConditionC.into()));
        assert!(certify_complex(e, &av(&[1]), 1).is_err());
        assert!(certify_complex(e, &av(&[1]), 4).is_err());
    }

    #[test]
    fn certify_complex_emits_for_non_real_rooted_g() {
        // E = (1, 0, 1, 1) with f = t: S_2^2 = 0 < E_1 E_3 = 1
        let e = [int(1), int(0), int(1), int(1)];
        let cert = certify_complex(&e, &av(&[0]), 2).unwrap().expect("certificate");
        assert_eq!(cert.gap, int(-1));
        assert_eq!(cert.g, Polynomial::new(vec![int(1), int(4), int(0), int(4), int(1)]));
        assert!(!crate::upoly::is_real_rooted(&cert.g).unwrap());
    }

    #[test]
    fn gap_report_json_shape() {
        let r = newton_gap_s(&ints(&[1, 2, 3, 4]), &av(&[1]), 2).unwrap();
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["gap"], "95/18");
        assert_eq!(v["holds"], true);
        assert_eq!(v["equality_cause"], "none");
        assert_eq!(v["condition_c_verified"], true);
        assert!(v.get("theta").is_none());
        let back: GapReport = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
    }
}
