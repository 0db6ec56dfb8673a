//! Exact power series of rational generating functions with integer
//! coefficients.
//!
//! A [`RationalGeneratingFunction`] is a pair of integer polynomials whose
//! denominator has constant term `+1` or `-1`, so every series coefficient is
//! an integer. Expansion runs the linear recurrence given by the denominator.
//!
//! Parametric displays with rational coefficients are assembled by
//! [`GfSum`]: each summand carries a denominator factored into `(1 - t)` and
//! cyclotomic polynomials, which makes the least common denominator a
//! max over exponents.

mod catalog;

pub use catalog::{gf_catalog, series_cache_coefficient};
pub(crate) use catalog::{mod5_case, mod8_case};

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::ExactRational;
use crate::error::{Error, Result};

/// Dense integer polynomial in `t`; index is the exponent. Trailing zeros are
/// trimmed, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs.
    pub fn sparse(terms: &[(usize, i64)]) -> Self {
        let len = terms.iter().map(|&(e, _)| e + 1).max().unwrap_or(0);
        let mut coeffs = vec![BigInt::zero(); len];
        for &(e, c) in terms {
            coeffs[e] += c;
        }
        Self::new(coeffs)
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `t^n`
    pub fn monomial(n: usize) -> Self {
        Self::sparse(&[(n, 1)])
    }

    /// `1 - t^n`
    pub fn one_minus_t_pow(n: usize) -> Self {
        Self::sparse(&[(0, 1), (n, -1)])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn shift(&self, n: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Exact division by a polynomial with leading coefficient +-1.
    /// Returns `None` if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &IntPolynomial) -> Option<IntPolynomial> {
        let dd = divisor.degree()?;
        let lead = divisor.coeffs[dd].clone();
        if !lead.abs().is_one() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return self.is_zero().then(Self::zero);
        }
        let mut q = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &rem[i + dd] * &lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            q[i] = c;
        }
        rem.iter().all(Zero::is_zero).then(|| IntPolynomial::new(q))
    }
}

impl fmt::Display for IntPolynomial {
    /// Space-separated `exponent:coefficient` pairs, nonzero terms only.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| format!("{e}:{c}"))
            .collect();
        write!(f, "{}", terms.join(" "))
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

/// Coefficients `c_0..=c_K` of a series truncated at order `K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesExpansion {
    pub coefficients: Vec<BigInt>,
    pub order: usize,
}

impl SeriesExpansion {
    pub fn get(&self, k: usize) -> Option<&BigInt> {
        self.coefficients.get(k)
    }
}

/// `numerator / denominator` with a unit constant term in the denominator.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalGeneratingFunction {
    numerator: IntPolynomial,
    denominator: IntPolynomial,
}

impl RationalGeneratingFunction {
    pub fn new(numerator: IntPolynomial, denominator: IntPolynomial) -> Result<Self> {
        let d0 = denominator.coeff(0);
        if !d0.abs().is_one() {
            return Err(Error::NonUnitDenominator(d0.to_string()));
        }
        Ok(RationalGeneratingFunction {
            numerator,
            denominator,
        })
    }

    pub fn zero() -> Self {
        RationalGeneratingFunction {
            numerator: IntPolynomial::zero(),
            denominator: IntPolynomial::one(),
        }
    }

    /// `numerator / prod (1 - t^n)` over the listed exponents.
    pub fn over_products(numerator: IntPolynomial, exponents: &[usize]) -> Self {
        let denominator = exponents
            .iter()
            .fold(IntPolynomial::one(), |acc, &n| &acc * &IntPolynomial::one_minus_t_pow(n));
        RationalGeneratingFunction {
            numerator,
            denominator,
        }
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.denominator
    }

    /// Coefficients `c_0..=c_K` with `num = den * sum c_i t^i (mod t^{K+1})`.
    pub fn expand(&self, order: usize) -> SeriesExpansion {
        let den = self.denominator.coeffs();
        // den_0 is +-1, so dividing by it is multiplying by it.
        let d0 = den[0].clone();
        let mut c: Vec<BigInt> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut v = self.numerator.coeff(k);
            for (j, dj) in den.iter().enumerate().take(k + 1).skip(1) {
                if !dj.is_zero() {
                    v -= dj * &c[k - j];
                }
            }
            c.push(v * &d0);
        }
        SeriesExpansion {
            coefficients: c,
            order,
        }
    }

    pub fn coefficient(&self, k: usize) -> BigInt {
        self.expand(k).coefficients.pop().unwrap_or_default()
    }
}

impl Add for &RationalGeneratingFunction {
    type Output = RationalGeneratingFunction;
    fn add(self, rhs: &RationalGeneratingFunction) -> RationalGeneratingFunction {
        if self.denominator == rhs.denominator {
            return RationalGeneratingFunction {
                numerator: &self.numerator + &rhs.numerator,
                denominator: self.denominator.clone(),
            };
        }
        RationalGeneratingFunction {
            numerator: &(&self.numerator * &rhs.denominator) + &(&rhs.numerator * &self.denominator),
            denominator: &self.denominator * &rhs.denominator,
        }
    }
}

impl fmt::Display for RationalGeneratingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}

impl fmt::Debug for RationalGeneratingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalGeneratingFunction({self})")
    }
}

/// `Phi_n(t)` for `n >= 2`.
pub fn cyclotomic(n: u32) -> IntPolynomial {
    assert!(n >= 1);
    let mut p = &IntPolynomial::monomial(n as usize) - &IntPolynomial::one();
    for d in (1..n).filter(|d| n % d == 0) {
        p = p
            .div_exact(&cyclotomic(d))
            .expect("cyclotomic division is exact");
    }
    p
}

/// A denominator factored as `(1 - t)^a * prod Phi_n^{e_n}` (`n >= 2`).
/// Key 1 stands for `(1 - t)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FactoredDenominator(BTreeMap<u32, u32>);

impl FactoredDenominator {
    pub fn one() -> Self {
        Self::default()
    }

    /// `1 - t^n`
    pub fn one_minus_t_pow(n: u32) -> Self {
        FactoredDenominator((1..=n).filter(|d| n % d == 0).map(|d| (d, 1)).collect())
    }

    /// `Phi_n` for `n >= 2`.
    pub fn cyclotomic(n: u32) -> Self {
        assert!(n >= 2, "use one_minus_t_pow(1) for 1 - t");
        FactoredDenominator(BTreeMap::from([(n, 1)]))
    }

    pub fn times(mut self, other: &FactoredDenominator) -> Self {
        for (&n, &e) in &other.0 {
            *self.0.entry(n).or_insert(0) += e;
        }
        self
    }

    pub fn pow(&self, e: u32) -> Self {
        FactoredDenominator(self.0.iter().map(|(&n, &x)| (n, x * e)).collect())
    }

    fn lcm(&self, other: &FactoredDenominator) -> Self {
        let mut out = self.0.clone();
        for (&n, &e) in &other.0 {
            let slot = out.entry(n).or_insert(0);
            *slot = (*slot).max(e);
        }
        FactoredDenominator(out)
    }

    fn quotient(&self, divisor: &FactoredDenominator) -> Self {
        FactoredDenominator(
            self.0
                .iter()
                .map(|(&n, &e)| (n, e - divisor.0.get(&n).copied().unwrap_or(0)))
                .filter(|&(_, e)| e > 0)
                .collect(),
        )
    }

    pub fn expand(&self) -> IntPolynomial {
        self.0.iter().fold(IntPolynomial::one(), |acc, (&n, &e)| {
            let f = if n == 1 {
                IntPolynomial::from_i64(&[1, -1])
            } else {
                cyclotomic(n)
            };
            &acc * &f.pow(e)
        })
    }
}

/// `(1 - t^n)` as a factored denominator.
pub fn om(n: u32) -> FactoredDenominator {
    FactoredDenominator::one_minus_t_pow(n)
}

/// `Phi_n` as a factored denominator.
pub fn cy(n: u32) -> FactoredDenominator {
    FactoredDenominator::cyclotomic(n)
}

/// Product of factored denominators.
pub fn prod(parts: &[FactoredDenominator]) -> FactoredDenominator {
    parts
        .iter()
        .fold(FactoredDenominator::one(), |acc, d| acc.times(d))
}

struct Summand {
    coefficient: ExactRational,
    numerator: Vec<i64>,
    shift: usize,
    denominator: FactoredDenominator,
}

/// Sum of terms `coefficient * t^shift * numerator(t) / denominator(t)` with
/// rational coefficients, combined over a least common denominator.
#[derive(Default)]
pub struct GfSum {
    terms: Vec<Summand>,
}

impl GfSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(
        &mut self,
        coefficient: ExactRational,
        numerator: &[i64],
        shift: usize,
        denominator: FactoredDenominator,
    ) -> &mut Self {
        if !coefficient.is_zero() {
            self.terms.push(Summand {
                coefficient,
                numerator: numerator.to_vec(),
                shift,
                denominator,
            });
        }
        self
    }

    /// Combines the summands. Fails with [`Error::NonIntegral`] if the
    /// combined numerator is not an integer polynomial.
    pub fn build(&self, formula: &'static str) -> Result<RationalGeneratingFunction> {
        let lcd = self
            .terms
            .iter()
            .fold(FactoredDenominator::one(), |acc, t| acc.lcm(&t.denominator));
        let mut acc: Vec<ExactRational> = Vec::new();
        for t in &self.terms {
            let cofactor = lcd.quotient(&t.denominator).expand();
            let body = &IntPolynomial::from_i64(&t.numerator).shift(t.shift) * &cofactor;
            if acc.len() < body.coeffs().len() {
                acc.resize(body.coeffs().len(), ExactRational::zero());
            }
            for (slot, c) in acc.iter_mut().zip(body.coeffs()) {
                if !c.is_zero() {
                    *slot = &*slot + &t.coefficient * ExactRational::from(c.clone());
                }
            }
        }
        let numerator = acc
            .iter()
            .map(|c| c.expect_integer(formula))
            .collect::<Result<Vec<_>>>()?;
        RationalGeneratingFunction::new(IntPolynomial::new(numerator), lcd.expand())
    }
}
