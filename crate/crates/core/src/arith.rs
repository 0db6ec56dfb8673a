//! Exact arithmetic primitives shared by every formula in the crate.
//!
//! Everything here is integer or rational; nothing is ever rounded. The
//! periodic bracket symbol `[t_0, ..., t_{n-1}; n]_k` selects entry `k mod n`,
//! and entries are affine in `k` so that `f4` and `f6` live next to the
//! constant sequences.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A rational number kept in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExactRational(BigRational);

impl ExactRational {
    pub fn new(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Self {
        let d = denominator.into();
        assert!(!d.is_zero(), "zero denominator");
        ExactRational(BigRational::new(numerator.into(), d))
    }

    pub fn zero() -> Self {
        ExactRational(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactRational(BigRational::one())
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        ExactRational(self.0.abs())
    }

    /// The integer value, if the rational is integral.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.to_integer())
    }

    /// Like [`to_integer`](Self::to_integer) but turns a fractional value into
    /// an [`Error::NonIntegral`] naming `formula`.
    pub fn expect_integer(&self, formula: &'static str) -> Result<BigInt> {
        self.to_integer().ok_or_else(|| Error::NonIntegral {
            formula,
            value: self.to_string(),
        })
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc * self;
        }
        acc
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for ExactRational {
    fn from(v: i64) -> Self {
        ExactRational(BigRational::from_integer(BigInt::from(v)))
    }
}

impl From<u64> for ExactRational {
    fn from(v: u64) -> Self {
        ExactRational(BigRational::from_integer(BigInt::from(v)))
    }
}

impl From<u32> for ExactRational {
    fn from(v: u32) -> Self {
        ExactRational(BigRational::from_integer(BigInt::from(v)))
    }
}

impl From<BigInt> for ExactRational {
    fn from(v: BigInt) -> Self {
        ExactRational(BigRational::from_integer(v))
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident) => {
        impl $tr<ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $m(self, rhs: ExactRational) -> ExactRational {
                ExactRational(self.0.$m(rhs.0))
            }
        }
        impl $tr<&ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $m(self, rhs: &ExactRational) -> ExactRational {
                ExactRational(self.0.$m(&rhs.0))
            }
        }
        impl $tr<ExactRational> for &ExactRational {
            type Output = ExactRational;
            fn $m(self, rhs: ExactRational) -> ExactRational {
                ExactRational((&self.0).$m(rhs.0))
            }
        }
        impl $tr<&ExactRational> for &ExactRational {
            type Output = ExactRational;
            fn $m(self, rhs: &ExactRational) -> ExactRational {
                ExactRational((&self.0).$m(&rhs.0))
            }
        }
        impl $tr<i64> for ExactRational {
            type Output = ExactRational;
            fn $m(self, rhs: i64) -> ExactRational {
                self.$m(ExactRational::from(rhs))
            }
        }
        impl $tr<i64> for &ExactRational {
            type Output = ExactRational;
            fn $m(self, rhs: i64) -> ExactRational {
                self.$m(ExactRational::from(rhs))
            }
        }
        impl $tr<ExactRational> for i64 {
            type Output = ExactRational;
            fn $m(self, rhs: ExactRational) -> ExactRational {
                ExactRational::from(self).$m(rhs)
            }
        }
        impl $tr<&ExactRational> for i64 {
            type Output = ExactRational;
            fn $m(self, rhs: &ExactRational) -> ExactRational {
                ExactRational::from(self).$m(rhs)
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-self.0)
    }
}

impl Neg for &ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-&self.0)
    }
}

impl std::iter::Sum for ExactRational {
    fn sum<I: Iterator<Item = ExactRational>>(iter: I) -> Self {
        iter.fold(ExactRational::zero(), |a, b| a + b)
    }
}

/// Shorthand for the rational `n/d`.
pub fn rat(n: i64, d: i64) -> ExactRational {
    ExactRational::new(n, d)
}

/// One entry `alpha*k + beta` of a periodic sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Affine {
    pub alpha: i64,
    pub beta: i64,
}

impl Affine {
    pub const fn constant(beta: i64) -> Self {
        Affine { alpha: 0, beta }
    }

    pub const fn linear(alpha: i64, beta: i64) -> Self {
        Affine { alpha, beta }
    }
}

/// The bracket symbol `[t_0, ..., t_{n-1}; n]_k`: at weight `k` it takes the
/// value of entry `k mod n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicSequence {
    entries: Vec<Affine>,
}

impl PeriodicSequence {
    pub fn new(entries: Vec<Affine>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidArgument(
                "periodic sequence needs a positive modulus".into(),
            ));
        }
        Ok(PeriodicSequence { entries })
    }

    pub fn constants(values: &[i64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| Affine::constant(v)).collect())
    }

    pub fn modulus(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Affine] {
        &self.entries
    }

    pub fn eval(&self, k: u32) -> Result<i64> {
        if k == 0 {
            return Err(Error::InvalidWeight(0));
        }
        Ok(self.at(k))
    }

    // Unchecked evaluation for internal callers that already validated k.
    pub(crate) fn at(&self, k: u32) -> i64 {
        let e = self.entries[k as usize % self.entries.len()];
        e.alpha * i64::from(k) + e.beta
    }
}

/// `periodic_eval(seq, k)`; `k` must be at least 1.
pub fn periodic_eval(seq: &PeriodicSequence, k: u32) -> Result<i64> {
    seq.eval(k)
}

/// Names of the catalogued bracket sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeqName {
    F4,
    F6,
    C3,
    C3Hat,
    C4,
    C4Prime,
    C5,
    C6,
    C6Prime,
    C6Hat,
    C12,
}

impl SeqName {
    pub const ALL: [SeqName; 11] = [
        SeqName::F4,
        SeqName::F6,
        SeqName::C3,
        SeqName::C3Hat,
        SeqName::C4,
        SeqName::C4Prime,
        SeqName::C5,
        SeqName::C6,
        SeqName::C6Prime,
        SeqName::C6Hat,
        SeqName::C12,
    ];

    pub fn label(self) -> &'static str {
        match self {
            SeqName::F4 => "f4",
            SeqName::F6 => "f6",
            SeqName::C3 => "c3",
            SeqName::C3Hat => "c3^",
            SeqName::C4 => "c4",
            SeqName::C4Prime => "c4'",
            SeqName::C5 => "c5",
            SeqName::C6 => "c6",
            SeqName::C6Prime => "c6'",
            SeqName::C6Hat => "c6^",
            SeqName::C12 => "c12",
        }
    }
}

const fn c(v: i64) -> Affine {
    Affine::constant(v)
}

const fn l(alpha: i64, beta: i64) -> Affine {
    Affine::linear(alpha, beta)
}

static F4: [Affine; 4] = [l(1, -2), l(-1, 1), l(-1, 2), l(1, -1)];
static F6: [Affine; 6] = [l(1, -3), l(-2, 2), l(-2, 4), l(1, 0), l(1, -1), l(1, -2)];
static C3: [Affine; 3] = [c(1), c(-1), c(0)];
static C3_HAT: [Affine; 3] = [c(0), c(1), c(-1)];
static C4: [Affine; 4] = [c(1), c(0), c(0), c(-1)];
static C4_PRIME: [Affine; 4] = [c(1), c(-1), c(-1), c(1)];
static C5: [Affine; 5] = [c(1), c(0), c(0), c(-1), c(0)];
static C6: [Affine; 6] = [c(1), c(0), c(0), c(-1), c(0), c(0)];
static C6_PRIME: [Affine; 6] = [c(0), c(1), c(0), c(0), c(-1), c(0)];
static C6_HAT: [Affine; 6] = [c(0), c(1), c(1), c(0), c(-1), c(-1)];
static C12: [Affine; 12] = [
    c(1),
    c(0),
    c(0),
    c(-1),
    c(-1),
    c(-1),
    c(-1),
    c(0),
    c(0),
    c(1),
    c(1),
    c(1),
];

fn raw(name: SeqName) -> &'static [Affine] {
    match name {
        SeqName::F4 => &F4,
        SeqName::F6 => &F6,
        SeqName::C3 => &C3,
        SeqName::C3Hat => &C3_HAT,
        SeqName::C4 => &C4,
        SeqName::C4Prime => &C4_PRIME,
        SeqName::C5 => &C5,
        SeqName::C6 => &C6,
        SeqName::C6Prime => &C6_PRIME,
        SeqName::C6Hat => &C6_HAT,
        SeqName::C12 => &C12,
    }
}

/// The catalogued sequence as an owned value.
pub fn sequence(name: SeqName) -> PeriodicSequence {
    PeriodicSequence {
        entries: raw(name).to_vec(),
    }
}

/// Evaluates a catalogued sequence at `k` without allocating.
pub fn seq(name: SeqName, k: u32) -> i64 {
    let e = raw(name);
    let a = e[k as usize % e.len()];
    a.alpha * i64::from(k) + a.beta
}

pub fn kronecker_delta(k: i64, n: i64) -> i64 {
    i64::from(k == n)
}

/// `(-1)^k` for a weight.
pub fn sign_power(k: u32) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// The modified symbol `(-1/p)`: 0 at p = 2, otherwise +1 or -1 by p mod 4.
pub fn symbol_minus_one(p: u64) -> Result<i64> {
    require_prime(p)?;
    Ok(match p {
        2 => 0,
        _ if p % 4 == 1 => 1,
        _ => -1,
    })
}

/// The modified symbol `(-3/p)`: 0 at p = 3, otherwise +1 or -1 by p mod 3.
pub fn symbol_minus_three(p: u64) -> Result<i64> {
    require_prime(p)?;
    Ok(match p {
        3 => 0,
        _ if p % 3 == 1 => 1,
        _ => -1,
    })
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn bracket_examples() {
        assert_eq!(seq(SeqName::C3, 7), -1);
        assert_eq!(seq(SeqName::F4, 5), -4);
        assert_eq!(seq(SeqName::C12, 14), 0);
        assert_eq!(periodic_eval(&sequence(SeqName::C3), 7).unwrap(), -1);
    }

    #[test]
    fn zero_weight_rejected() {
        assert!(matches!(
            periodic_eval(&sequence(SeqName::C3), 0),
            Err(Error::InvalidWeight(0))
        ));
        assert!(PeriodicSequence::new(vec![]).is_err());
    }

    #[test]
    fn catalog_moduli() {
        let moduli: Vec<usize> = SeqName::ALL.iter().map(|&n| sequence(n).modulus()).collect();
        assert_eq!(moduli, vec![4, 6, 3, 3, 4, 4, 5, 6, 6, 6, 12]);
    }

    #[test]
    fn constant_sequences_are_periodic() {
        for name in SeqName::ALL {
            let s = sequence(name);
            if s.entries().iter().any(|e| e.alpha != 0) {
                continue;
            }
            let n = s.modulus() as u32;
            for k in 1..=1000 {
                assert_eq!(s.eval(k).unwrap(), s.eval(k + n).unwrap(), "{}", name.label());
            }
        }
    }

    #[test]
    fn c3_plus_c3hat() {
        let direct = PeriodicSequence::constants(&[1, 0, -1]).unwrap();
        for k in 1..=1000 {
            let s = seq(SeqName::C3, k) + seq(SeqName::C3Hat, k);
            assert!((-1..=2).contains(&s));
            assert_eq!(s, direct.eval(k).unwrap());
        }
    }

    #[test]
    fn delta() {
        assert_eq!(kronecker_delta(2, 2), 1);
        assert_eq!(kronecker_delta(3, 2), 0);
        assert_eq!(kronecker_delta(35, 35), 1);
    }

    #[test]
    fn modified_symbols() {
        assert_eq!(symbol_minus_one(2).unwrap(), 0);
        assert_eq!(symbol_minus_one(7).unwrap(), -1);
        assert_eq!(symbol_minus_one(13).unwrap(), 1);
        assert_eq!(symbol_minus_three(5).unwrap(), -1);
        assert_eq!(symbol_minus_three(3).unwrap(), 0);
        assert_eq!(symbol_minus_three(7).unwrap(), 1);
        assert!(matches!(symbol_minus_one(9), Err(Error::NotPrime(9))));
        assert!(symbol_minus_three(1).is_err());
    }

    #[test]
    fn symbol_zero_only_at_ramified_prime() {
        for p in (2..10_000u64).filter(|&p| is_prime(p)) {
            let m1 = symbol_minus_one(p).unwrap();
            let m3 = symbol_minus_three(p).unwrap();
            assert!(m1 * m1 <= 1);
            assert_eq!(m1 == 0, p == 2);
            assert_eq!(m3 == 0, p == 3);
        }
    }

    #[test]
    fn rational_display_and_integrality() {
        assert_eq!(rat(6, 4).to_string(), "3/2");
        assert_eq!(rat(-6, -3).to_string(), "2");
        assert!(rat(5, 7).expect_integer("demo").is_err());
        assert_eq!(rat(14, 7).expect_integer("demo").unwrap(), BigInt::from(2));
    }

    fn any_rat() -> impl Strategy<Value = ExactRational> {
        (-10_000i64..10_000, 1i64..500).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn rational_field_laws(a in any_rat(), b in any_rat(), c in any_rat()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            prop_assert!(a.denominator() > &BigInt::zero());
        }
    }
}
