//! Dense univariate polynomials over the rationals.
//!
//! Besides ring arithmetic this module carries the real-root machinery the
//! rest of the crate leans on: gcd through primitive pseudo-remainder
//! sequences over the integers, Yun's squarefree decomposition, Sturm
//! chains with half-open interval counting, and bisection-based root
//! isolation.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, Integer, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{format_rational, serde_rational, sign, Rational};
use crate::error::{range_err, Error, Result};

/// Coefficients are indexed by power of `t`; the highest stored coefficient
/// is never zero, so the zero polynomial has no coefficients at all.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "PolynomialJson")]
pub struct Polynomial {
    #[serde(with = "serde_rational::vec")]
    coeffs: Vec<Rational>,
}

#[derive(Deserialize)]
struct PolynomialJson {
    #[serde(with = "serde_rational::vec")]
    coeffs: Vec<Rational>,
}

impl From<PolynomialJson> for Polynomial {
    fn from(raw: PolynomialJson) -> Self {
        Polynomial::new(raw.coeffs)
    }
}

/// Degree with a dedicated marker for the zero polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^d`
    pub fn monomial(c: Rational, d: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); d + 1];
        coeffs[d] = c;
        Self::new(coeffs)
    }

    /// `t - r`
    pub fn linear_root(r: &Rational) -> Self {
        Self::new(vec![-r.clone(), Rational::one()])
    }

    pub fn from_roots(roots: &[Rational]) -> Self {
        let mut coeffs = vec![Rational::one()];
        for r in roots {
            let mut next = vec![Rational::zero(); coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * r;
            }
            coeffs = next;
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            len => Degree::Finite(len - 1),
        }
    }

    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * t + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip()),
            None => Self::zero(),
        }
    }

    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let dd = divisor.deg().ok_or(Error::DivisionByZero)?;
        let lc = divisor.leading().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        let Some(dn) = self.deg().filter(|&d| d >= dd) else {
            return Ok((Polynomial::zero(), self.clone()));
        };
        let mut quot = vec![Rational::zero(); dn - dd + 1];
        for i in (0..=dn - dd).rev() {
            let c = &rem[i + dd] / lc;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Polynomial::new(quot), Polynomial::new(rem)))
    }

    pub fn rem(&self, divisor: &Polynomial) -> Result<Polynomial> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Quotient when `divisor` divides `self` exactly.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        match self.div_rem(divisor) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    /// Sign of the polynomial at a finite point or at either infinity.
    pub fn sign_at(&self, at: &Endpoint) -> i8 {
        let Some(lc) = self.leading() else { return 0 };
        match at {
            Endpoint::Finite(v) => sign(&self.eval(v)),
            Endpoint::PosInfinity => sign(lc),
            Endpoint::NegInfinity => {
                let s = sign(lc);
                if self.coeffs.len() % 2 == 0 {
                    -s
                } else {
                    s
                }
            }
        }
    }
}

pub fn poly_from_roots(roots: &[Rational]) -> Polynomial {
    Polynomial::from_roots(roots)
}

pub fn poly_derivative(p: &Polynomial) -> Polynomial {
    p.derivative()
}

pub fn poly_eval(p: &Polynomial, t: &Rational) -> Rational {
    p.eval(t)
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                let text = format_rational(&mag);
                if i > 0 && text.contains('/') {
                    write!(f, "({text})")?;
                } else {
                    write!(f, "{text}")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// gcd over Z[t]

fn trim_int(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// Clears denominators and content; leading coefficient made positive.
fn primitive_integer(p: &Polynomial) -> Vec<BigInt> {
    let lcm = p
        .coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = p
        .coeffs
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    primitive_part(&mut ints);
    ints
}

fn primitive_part(v: &mut Vec<BigInt>) {
    trim_int(v);
    let content = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return;
    }
    let content = if v.last().is_some_and(Signed::is_negative) {
        -content
    } else {
        content
    };
    for c in v.iter_mut() {
        *c = &*c / &content;
    }
}

/// A positive multiple of `a mod b` (pseudo-remainder scaled by `|lc(b)|`
/// at each step, so signs are preserved).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = b[db].abs();
    let negative = b[db].is_negative();
    while r.len() > db && !r.is_empty() {
        let shift = r.len() - 1 - db;
        let mut lr = r.last().cloned().expect("nonempty");
        if negative {
            lr = -lr;
        }
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &lr * bc;
        }
        trim_int(&mut r);
    }
    r
}

/// Divides out the content without changing signs.
fn strip_content(v: &mut [BigInt]) {
    let content = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() || content.is_one() {
        return;
    }
    for c in v.iter_mut() {
        *c = &*c / &content;
    }
}

/// Sign of `sum c_i t^i` at `t = v`, evaluated in integers as
/// `sum c_i p^i q^(d-i)` for `v = p/q`, `q > 0`.
fn int_sign_at(c: &[BigInt], v: &Rational) -> i8 {
    let Some((lead, rest)) = c.split_last() else { return 0 };
    let (p, q) = (v.numer(), v.denom());
    let mut acc = lead.clone();
    let mut qpow = BigInt::one();
    for ci in rest.iter().rev() {
        qpow *= q;
        acc = acc * p + ci * &qpow;
    }
    match acc.sign() {
        num::bigint::Sign::Minus => -1,
        num::bigint::Sign::NoSign => 0,
        num::bigint::Sign::Plus => 1,
    }
}

fn int_sign_at_endpoint(c: &[BigInt], at: &Endpoint) -> i8 {
    let Some(lc) = c.last() else { return 0 };
    let s = if lc.is_negative() { -1 } else { 1 };
    match at {
        Endpoint::Finite(v) => int_sign_at(c, v),
        Endpoint::PosInfinity => s,
        Endpoint::NegInfinity if c.len() % 2 == 0 => -s,
        Endpoint::NegInfinity => s,
    }
}

fn int_derivative(c: &[BigInt]) -> Vec<BigInt> {
    c.iter().enumerate().skip(1).map(|(i, ci)| ci * BigInt::from(i)).collect()
}

fn from_integer(v: Vec<BigInt>) -> Polynomial {
    Polynomial::new(v.into_iter().map(Rational::from_integer).collect())
}

/// Monic greatest common divisor.
pub fn poly_gcd(p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
    match (p.is_zero(), q.is_zero()) {
        (true, true) => return Err(Error::UndefinedGcd),
        (true, false) => return Ok(q.monic()),
        (false, true) => return Ok(p.monic()),
        _ => {}
    }
    let (mut a, mut b) = (primitive_integer(p), primitive_integer(q));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        let mut r = pseudo_rem(&a, &b);
        if r.is_empty() {
            return Ok(from_integer(b).monic());
        }
        primitive_part(&mut r);
        a = b;
        b = r;
    }
}

// ---------------------------------------------------------------------------
// squarefree decomposition

/// `p = leading * prod(factor_i ^ multiplicity_i)` with monic, squarefree,
/// pairwise coprime factors listed by increasing multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub leading: Rational,
    pub factors: Vec<(Polynomial, u32)>,
}

impl SquarefreeDecomposition {
    pub fn expand(&self) -> Polynomial {
        let mut acc = Polynomial::constant(self.leading.clone());
        for (g, m) in &self.factors {
            for _ in 0..*m {
                acc = &acc * g;
            }
        }
        acc
    }

    /// Product of the distinct factors.
    pub fn squarefree_part(&self) -> Polynomial {
        self.factors
            .iter()
            .fold(Polynomial::one(), |acc, (g, _)| &acc * g)
    }
}

/// Yun's algorithm.
pub fn squarefree_decomposition(p: &Polynomial) -> Result<SquarefreeDecomposition> {
    let leading = p.leading().cloned().ok_or(Error::ZeroPolynomial)?;
    let mut factors = Vec::new();
    if p.is_constant() {
        return Ok(SquarefreeDecomposition { leading, factors });
    }
    let f = p.monic();
    let df = f.derivative();
    let a0 = poly_gcd(&f, &df)?;
    let mut b = f.exact_div(&a0).expect("gcd divides f");
    let c = df.exact_div(&a0).expect("gcd divides f'");
    let mut d = &c - &b.derivative();
    let mut multiplicity = 1u32;
    while !b.is_constant() {
        let a = poly_gcd(&b, &d)?;
        b = b.exact_div(&a).expect("gcd divides b");
        let c = d.exact_div(&a).expect("gcd divides d");
        d = &c - &b.derivative();
        if !a.is_constant() {
            factors.push((a, multiplicity));
        }
        multiplicity += 1;
    }
    Ok(SquarefreeDecomposition { leading, factors })
}

pub fn is_squarefree(p: &Polynomial) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(poly_gcd(p, &p.derivative())?.is_constant())
}

// ---------------------------------------------------------------------------
// Sturm chains

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Endpoint {
    NegInfinity,
    Finite(Rational),
    PosInfinity,
}

impl Endpoint {
    fn rank(&self) -> u8 {
        match self {
            Endpoint::NegInfinity => 0,
            Endpoint::Finite(_) => 1,
            Endpoint::PosInfinity => 2,
        }
    }
}

impl From<Rational> for Endpoint {
    fn from(v: Rational) -> Self {
        Endpoint::Finite(v)
    }
}

impl PartialOrd for Endpoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Endpoint {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Endpoint::Finite(a), Endpoint::Finite(b)) => a.cmp(b),
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

/// The chain `p, p', -rem(p, p'), ...` down to the last nonzero remainder.
pub fn sturm_sequence(p: &Polynomial) -> Result<Vec<Polynomial>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut chain = vec![p.clone()];
    let mut next = p.derivative();
    while !next.is_zero() {
        let prev = chain.last().expect("nonempty");
        let r = prev.rem(&next)?;
        chain.push(next);
        next = -r;
    }
    Ok(chain)
}

/// A Sturm chain kept as primitive integer polynomials. Each member is a
/// positive multiple of the corresponding member of [`sturm_sequence`], so
/// sign variations agree while coefficients stay small.
#[derive(Clone, Debug)]
pub struct SturmChain {
    polys: Vec<Vec<BigInt>>,
}

impl SturmChain {
    pub fn new(p: &Polynomial) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        // primitive_integer may flip the overall sign; that negates every
        // member and leaves the variation counts unchanged
        let mut polys = vec![primitive_integer(p)];
        let mut next = int_derivative(&polys[0]);
        strip_content(&mut next);
        while !next.is_empty() {
            let prev = polys.last().expect("nonempty");
            let mut r = pseudo_rem(prev, &next);
            for c in r.iter_mut() {
                *c = -&*c;
            }
            strip_content(&mut r);
            polys.push(next);
            next = r;
        }
        Ok(SturmChain { polys })
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Sign variations with zeros dropped.
    pub fn variations(&self, at: &Endpoint) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for p in &self.polys {
            let s = int_sign_at_endpoint(p, at);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct roots in the half-open interval `(lo, hi]`. Dropping zeros
    /// makes a root sitting exactly on either endpoint land on the correct
    /// side without perturbing the endpoints.
    pub fn count(&self, lo: &Endpoint, hi: &Endpoint) -> usize {
        self.variations(lo).saturating_sub(self.variations(hi))
    }

    fn vanishes_at(&self, v: &Rational) -> bool {
        int_sign_at(&self.polys[0], v) == 0
    }
}

/// Distinct real roots of a squarefree `p` in `(lo, hi]`.
pub fn count_real_roots(p: &Polynomial, lo: &Endpoint, hi: &Endpoint) -> Result<usize> {
    if lo >= hi {
        return Err(range_err("count_real_roots requires lo < hi"));
    }
    if !is_squarefree(p)? {
        return Err(Error::NotSquarefree);
    }
    Ok(SturmChain::new(p)?.count(lo, hi))
}

/// Cauchy bound `1 + max |a_i / a_deg|`; every real root lies strictly
/// inside `(-B, B)`.
pub fn root_bound(p: &Polynomial) -> Result<Rational> {
    let lc = p.leading().ok_or(Error::ZeroPolynomial)?;
    if p.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let lc = lc.abs();
    let max = p.coeffs[..p.coeffs.len() - 1]
        .iter()
        .map(|c| c.abs() / &lc)
        .max()
        .unwrap_or_else(Rational::zero);
    Ok(Rational::one() + max)
}

// ---------------------------------------------------------------------------
// root isolation

/// One distinct real root: the exact value when `lo == hi`, otherwise known
/// to lie in the open interval `(lo, hi)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootInterval {
    #[serde(with = "serde_rational")]
    pub lo: Rational,
    #[serde(with = "serde_rational")]
    pub hi: Rational,
    #[serde(rename = "mult")]
    pub multiplicity: u32,
}

impl RootInterval {
    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(BigInt::from(2))
    }

    pub fn contains(&self, v: &Rational) -> bool {
        if self.is_point() {
            &self.lo == v
        } else {
            &self.lo < v && v < &self.hi
        }
    }

    fn overlaps(&self, other: &RootInterval) -> bool {
        match (self.is_point(), other.is_point()) {
            (true, true) => self.lo == other.lo,
            (true, false) => other.contains(&self.lo),
            (false, true) => self.contains(&other.lo),
            (false, false) => self.lo.clone().max(other.lo.clone()) < self.hi.clone().min(other.hi.clone()),
        }
    }
}

/// Disjoint isolating intervals sorted left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootIsolation {
    pub entries: Vec<RootInterval>,
}

impl RootIsolation {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total_multiplicity(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = &RootInterval> {
        self.entries.iter()
    }

    pub fn is_disjoint_and_sorted(&self) -> bool {
        self.entries.windows(2).all(|w| w[0].lo <= w[1].lo)
            && self
                .entries
                .iter()
                .enumerate()
                .all(|(i, a)| self.entries[i + 1..].iter().all(|b| !a.overlaps(b)))
    }
}

struct Cell {
    lo: Rational,
    hi: Rational,
    owner: usize,
}

impl Cell {
    fn interval(&self, multiplicity: u32) -> RootInterval {
        RootInterval {
            lo: self.lo.clone(),
            hi: self.hi.clone(),
            multiplicity,
        }
    }
}

fn half(a: &Rational, b: &Rational) -> Rational {
    (a + b) / Rational::from_integer(BigInt::from(2))
}

/// Halves an open cell holding exactly one root of the chain's subject.
fn bisect_cell(chain: &SturmChain, lo: &Rational, hi: &Rational) -> (Rational, Rational) {
    let mid = half(lo, hi);
    if chain.vanishes_at(&mid) {
        return (mid.clone(), mid);
    }
    let left = chain.count(&Endpoint::Finite(lo.clone()), &Endpoint::Finite(mid.clone()));
    if left == 1 {
        (lo.clone(), mid)
    } else {
        (mid, hi.clone())
    }
}

/// Open cells (or points) each holding one root of a squarefree `g`.
fn isolate_squarefree(g: &Polynomial, chain: &SturmChain, width: &Rational) -> Result<Vec<(Rational, Rational)>> {
    let mut out = Vec::new();
    match g.deg() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Ok(out),
        Some(1) => {
            let r = -(&g.coeffs[0] / &g.coeffs[1]);
            out.push((r.clone(), r));
            return Ok(out);
        }
        _ => {}
    }
    // a power of two keeps every bisection point dyadic
    let cauchy = root_bound(g)?;
    let mut bound = Rational::one();
    while bound < cauchy {
        bound *= Rational::from_integer(BigInt::from(2));
    }
    let total = chain.count(&Endpoint::Finite(-bound.clone()), &Endpoint::Finite(bound.clone()));
    let mut stack = vec![(-bound.clone(), bound, total)];
    while let Some((a, b, c)) = stack.pop() {
        if c == 0 {
            continue;
        }
        if c == 1 && &b - &a <= *width {
            out.push((a, b));
            continue;
        }
        let m = half(&a, &b);
        let left_closed = chain.count(&Endpoint::Finite(a.clone()), &Endpoint::Finite(m.clone()));
        if chain.vanishes_at(&m) {
            out.push((m.clone(), m.clone()));
            let left = left_closed - 1;
            stack.push((a, m.clone(), left));
            stack.push((m, b, c - left - 1));
        } else {
            stack.push((a, m.clone(), left_closed));
            stack.push((m, b, c - left_closed));
        }
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(out)
}

/// Isolating intervals no wider than `width` for every distinct real root of
/// `p`, with multiplicities. Roots of linear squarefree factors (and any
/// root hit exactly by a bisection midpoint) come back as exact points.
pub fn isolate_real_roots(p: &Polynomial, width: &Rational) -> Result<RootIsolation> {
    if !width.is_positive() {
        return Err(range_err("isolation width must be positive"));
    }
    let decomposition = squarefree_decomposition(p)?;
    let chains = decomposition
        .factors
        .iter()
        .map(|(g, _)| SturmChain::new(g))
        .collect::<Result<Vec<_>>>()?;
    let mut cells = Vec::new();
    for (owner, ((g, _), chain)) in decomposition.factors.iter().zip(&chains).enumerate() {
        for (lo, hi) in isolate_squarefree(g, chain, width)? {
            cells.push(Cell { lo, hi, owner });
        }
    }
    separate_cells(&mut cells, &chains);
    Ok(RootIsolation {
        entries: cells
            .iter()
            .map(|c| c.interval(decomposition.factors[c.owner].1))
            .collect(),
    })
}

/// Refines cells of distinct (pairwise coprime) polynomials until no two
/// overlap, then sorts them.
fn separate_cells(cells: &mut [Cell], chains: &[SturmChain]) {
    loop {
        cells.sort_by(|a, b| a.lo.cmp(&b.lo).then_with(|| a.hi.cmp(&b.hi)));
        let mut clash = None;
        'scan: for i in 0..cells.len() {
            for j in i + 1..cells.len() {
                if cells[i].interval(1).overlaps(&cells[j].interval(1)) {
                    clash = Some((i, j));
                    break 'scan;
                }
            }
        }
        let Some((i, j)) = clash else { return };
        for k in [i, j] {
            let cell = &mut cells[k];
            if cell.lo != cell.hi {
                let (lo, hi) = bisect_cell(&chains[cell.owner], &cell.lo, &cell.hi);
                cell.lo = lo;
                cell.hi = hi;
            }
        }
    }
}

/// Isolates the roots of two coprime polynomials jointly so that every
/// interval of one is disjoint from every interval of the other.
pub fn isolate_jointly(p: &Polynomial, q: &Polynomial, width: &Rational) -> Result<(RootIsolation, RootIsolation)> {
    if !poly_gcd(p, q)?.is_constant() {
        return Err(range_err("joint isolation needs coprime polynomials"));
    }
    let dp = squarefree_decomposition(p)?;
    let dq = squarefree_decomposition(q)?;
    let factors: Vec<(Polynomial, u32, usize)> = dp
        .factors
        .iter()
        .map(|(g, m)| (g.clone(), *m, 0))
        .chain(dq.factors.iter().map(|(g, m)| (g.clone(), *m, 1)))
        .collect();
    let chains = factors
        .iter()
        .map(|(g, _, _)| SturmChain::new(g))
        .collect::<Result<Vec<_>>>()?;
    let mut cells = Vec::new();
    for (owner, ((g, _, _), chain)) in factors.iter().zip(&chains).enumerate() {
        for (lo, hi) in isolate_squarefree(g, chain, width)? {
            cells.push(Cell { lo, hi, owner });
        }
    }
    separate_cells(&mut cells, &chains);
    let mut out = (RootIsolation::default(), RootIsolation::default());
    for c in &cells {
        let (_, m, side) = &factors[c.owner];
        let target = if *side == 0 { &mut out.0 } else { &mut out.1 };
        target.entries.push(c.interval(*m));
    }
    Ok(out)
}

/// Real roots counted with multiplicity.
pub fn real_root_count(p: &Polynomial) -> Result<usize> {
    let decomposition = squarefree_decomposition(p)?;
    let mut total = 0;
    for (g, m) in &decomposition.factors {
        let chain = SturmChain::new(g)?;
        total += chain.count(&Endpoint::NegInfinity, &Endpoint::PosInfinity) * *m as usize;
    }
    Ok(total)
}

/// Every squarefree factor is totally real. Nonzero constants qualify.
pub fn is_real_rooted(p: &Polynomial) -> Result<bool> {
    let degree = p.deg().ok_or(Error::ZeroPolynomial)?;
    Ok(real_root_count(p)? == degree)
}

/// How many times `t - v` divides `p`; zero for the zero polynomial.
pub fn root_multiplicity(p: &Polynomial, v: &Rational) -> usize {
    if p.is_zero() {
        return 0;
    }
    let linear = Polynomial::linear_root(v);
    let mut q = p.clone();
    let mut m = 0;
    while q.eval(v).is_zero() {
        q = q.exact_div(&linear).expect("v is a root");
        m += 1;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, ratio};

    fn poly(c: &[i64]) -> Polynomial {
        Polynomial::new(c.iter().map(|&v| int(v)).collect())
    }

    #[test]
    fn from_roots_examples() {
        assert_eq!(Polynomial::from_roots(&[int(1), int(2), int(3)]), poly(&[-6, 11, -6, 1]));
        assert_eq!(Polynomial::from_roots(&[]), Polynomial::one());
        assert_eq!(Polynomial::from_roots(&[int(5), int(5)]), poly(&[25, -10, 1]));
    }

    #[test]
    fn derivative_and_eval_examples() {
        assert_eq!(poly(&[-6, 11, -6, 1]).derivative(), poly(&[11, -12, 3]));
        assert!(poly(&[5]).derivative().is_zero());
        assert_eq!(poly(&[1, 0, 1]).derivative(), poly(&[0, 2]));
        assert_eq!(poly(&[-6, 11, -6, 1]).eval(&int(2)), int(0));
        assert_eq!(poly(&[1, 0, 1]).eval(&ratio(1, 2)), ratio(5, 4));
        assert_eq!(Polynomial::zero().eval(&ratio(7, 3)), int(0));
    }

    #[test]
    fn zero_polynomial_has_marker_degree() {
        assert_eq!(Polynomial::zero().degree(), Degree::NegInfinity);
        assert_eq!(poly(&[0, 0]).degree(), Degree::NegInfinity);
        assert_eq!(poly(&[3]).degree(), Degree::Finite(0));
        assert!(Degree::NegInfinity < Degree::Finite(0));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(poly_gcd(&poly(&[-1, 0, 1]), &poly(&[-1, 1])).unwrap(), poly(&[-1, 1]));
        assert_eq!(poly_gcd(&poly(&[1, 0, 1]), &poly(&[-1, 1])).unwrap(), Polynomial::one());
        let p = Polynomial::from_roots(&[int(2), int(2), int(-1)]);
        let q = Polynomial::from_roots(&[int(2), int(-3)]);
        assert_eq!(poly_gcd(&p, &q).unwrap(), poly(&[-2, 1]));
        assert_eq!(poly_gcd(&Polynomial::zero(), &Polynomial::zero()), Err(Error::UndefinedGcd));
        // rational coefficients are cleared before the integer sequence runs
        let p = Polynomial::from_roots(&[ratio(1, 3), ratio(-5, 7)]).scale(&ratio(3, 11));
        let q = Polynomial::from_roots(&[ratio(1, 3), int(4)]);
        assert_eq!(poly_gcd(&p, &q).unwrap(), Polynomial::linear_root(&ratio(1, 3)));
    }

    #[test]
    fn squarefree_examples() {
        let p = Polynomial::from_roots(&[int(2), int(2), int(-1)]);
        let d = squarefree_decomposition(&p).unwrap();
        assert_eq!(d.factors, vec![(poly(&[1, 1]), 1), (poly(&[-2, 1]), 2)]);
        assert_eq!(d.expand(), p);

        let d = squarefree_decomposition(&poly(&[1, 0, 1])).unwrap();
        assert_eq!(d.factors, vec![(poly(&[1, 0, 1]), 1)]);

        let p = Polynomial::from_roots(&[int(1), int(1), int(1)]);
        let d = squarefree_decomposition(&p).unwrap();
        assert_eq!(d.factors, vec![(poly(&[-1, 1]), 3)]);

        let p = Polynomial::from_roots(&[int(1), int(1), int(1)]).scale(&int(-4));
        let d = squarefree_decomposition(&p).unwrap();
        assert_eq!(d.leading, int(-4));
        assert_eq!(d.expand(), p);

        assert_eq!(squarefree_decomposition(&Polynomial::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn sturm_examples() {
        assert_eq!(sturm_sequence(&poly(&[-1, 0, 1])).unwrap(), vec![poly(&[-1, 0, 1]), poly(&[0, 2]), poly(&[1])]);
        assert_eq!(sturm_sequence(&poly(&[1, 0, 1])).unwrap(), vec![poly(&[1, 0, 1]), poly(&[0, 2]), poly(&[-1])]);
        assert_eq!(sturm_sequence(&poly(&[0, 1])).unwrap(), vec![poly(&[0, 1]), poly(&[1])]);
        assert_eq!(sturm_sequence(&Polynomial::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn count_examples() {
        use Endpoint::*;
        assert_eq!(count_real_roots(&poly(&[-1, 0, 1]), &NegInfinity, &PosInfinity).unwrap(), 2);
        assert_eq!(count_real_roots(&poly(&[1, 0, 1]), &NegInfinity, &PosInfinity).unwrap(), 0);
        assert_eq!(count_real_roots(&poly(&[-3, 0, 1]), &Finite(int(0)), &PosInfinity).unwrap(), 1);
        let sq = Polynomial::from_roots(&[int(1), int(1)]);
        assert_eq!(count_real_roots(&sq, &NegInfinity, &PosInfinity), Err(Error::NotSquarefree));
        assert!(matches!(count_real_roots(&poly(&[-1, 0, 1]), &PosInfinity, &NegInfinity), Err(Error::Range(_))));
    }

    #[test]
    fn count_is_half_open_at_root_endpoints() {
        use Endpoint::*;
        let p = Polynomial::from_roots(&[int(-1), int(0), int(2)]);
        assert_eq!(count_real_roots(&p, &Finite(int(-1)), &Finite(int(2))).unwrap(), 2);
        assert_eq!(count_real_roots(&p, &Finite(int(-2)), &Finite(int(-1))).unwrap(), 1);
        assert_eq!(count_real_roots(&p, &Finite(int(0)), &Finite(int(1))).unwrap(), 0);
        assert_eq!(count_real_roots(&p, &Finite(int(-1)), &Finite(int(0))).unwrap(), 1);
    }

    #[test]
    fn root_bound_examples() {
        assert_eq!(root_bound(&poly(&[-3, 0, 1])).unwrap(), int(4));
        assert_eq!(root_bound(&poly(&[-10, 1])).unwrap(), int(11));
        assert_eq!(root_bound(&poly(&[0, 0, 0, 1])).unwrap(), int(1));
        assert_eq!(root_bound(&poly(&[7])), Err(Error::ConstantPolynomial));
    }

    #[test]
    fn isolation_examples() {
        let w = ratio(1, 100);
        let iso = isolate_real_roots(&poly(&[-3, 0, 1]), &w).unwrap();
        assert_eq!(iso.len(), 2);
        let sqrt3 = 3f64.sqrt();
        for (entry, target) in iso.iter().zip([-sqrt3, sqrt3]) {
            assert_eq!(entry.multiplicity, 1);
            assert!(entry.width() <= w);
            assert!(crate::arith::to_f64(&entry.lo) < target && target < crate::arith::to_f64(&entry.hi));
        }

        let iso = isolate_real_roots(&Polynomial::from_roots(&[int(2), int(2)]), &int(1)).unwrap();
        assert_eq!(iso.entries, vec![RootInterval { lo: int(2), hi: int(2), multiplicity: 2 }]);

        assert!(isolate_real_roots(&poly(&[1, 0, 1]), &w).unwrap().is_empty());
        assert!(isolate_real_roots(&poly(&[1, 0, 1]), &int(0)).is_err());
    }

    #[test]
    fn isolation_separates_factors_of_different_multiplicity() {
        // (t^2 - 2)^2 (t^2 - 3): roots +-1.414 (double) and +-1.732
        let a = poly(&[-2, 0, 1]);
        let p = &(&a * &a) * &poly(&[-3, 0, 1]);
        let iso = isolate_real_roots(&p, &int(10)).unwrap();
        assert!(iso.is_disjoint_and_sorted());
        let mults: Vec<u32> = iso.iter().map(|e| e.multiplicity).collect();
        assert_eq!(mults, vec![1, 2, 2, 1]);
        assert_eq!(iso.total_multiplicity(), 6);
    }

    #[test]
    fn isolation_reports_midpoint_hits_as_points() {
        // root 0 is the first bisection midpoint of (-B, B)
        let p = Polynomial::from_roots(&[int(0)]) * poly(&[-2, 0, 1]);
        let iso = isolate_real_roots(&p, &ratio(1, 8)).unwrap();
        assert_eq!(iso.len(), 3);
        assert!(iso.entries[1].is_point());
        assert_eq!(iso.entries[1].lo, int(0));
        assert!(iso.is_disjoint_and_sorted());
    }

    #[test]
    fn root_multiplicity_counts_repeated_division() {
        let p = Polynomial::from_roots(&[int(2), int(2), int(2), int(-1)]);
        assert_eq!(root_multiplicity(&p, &int(2)), 3);
        assert_eq!(root_multiplicity(&p, &int(-1)), 1);
        assert_eq!(root_multiplicity(&p, &int(0)), 0);
    }

    #[test]
    fn display_reads_naturally() {
        assert_eq!(poly(&[-6, 11, -6, 1]).to_string(), "t^3 - 6t^2 + 11t - 6");
        let p = Polynomial::new(vec![int(6), ratio(-22, 3), int(2)]);
        assert_eq!(p.to_string(), "2t^2 - (22/3)t + 6");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }

    #[test]
    fn json_form_uses_rational_strings() {
        let p = Polynomial::new(vec![ratio(-1, 3), int(0), int(1)]);
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(text, r#"{"coeffs":["-1/3","0","1"]}"#);
        let back: Polynomial = serde_json::from_str(r#"{"coeffs":["-1/3","0","1","0"]}"#).unwrap();
        assert_eq!(back, p);
    }
}
