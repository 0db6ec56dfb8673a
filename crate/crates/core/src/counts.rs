//! `s_k(p, omega)`: the number of level-`p` cuspidal representations with
//! Iwahori-spherical local type `omega`, by three routes.
//!
//! * closed forms in `k` (types I, IIb for every `p`; the rest for `p >= 5`),
//! * coefficients of the catalogued generating functions,
//! * for the lift types, products of elliptic new-space dimensions.
//!
//! [`count`] picks one route per query and records which.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{
    kronecker_delta, require_prime, seq, sign_power, symbol_minus_one, symbol_minus_three,
    ExactRational, SeqName,
};
use crate::classnum::{b_param, class_number};
use crate::elliptic::{dim_new_pm, Sign};
use crate::error::{Error, Result};
use crate::series::series_cache_coefficient;

/// Local types whose global count is identically zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ZeroType {
    IIIb,
    IVb,
    IVc,
    IVd,
    Vd,
    VId,
    /// Packets of type (B).
    PacketB,
    /// Packets of type (Q).
    PacketQ,
}

impl ZeroType {
    pub const ALL: [ZeroType; 8] = [
        ZeroType::IIIb,
        ZeroType::IVb,
        ZeroType::IVc,
        ZeroType::IVd,
        ZeroType::Vd,
        ZeroType::VId,
        ZeroType::PacketB,
        ZeroType::PacketQ,
    ];

    pub fn label(self) -> &'static str {
        match self {
            ZeroType::IIIb => "IIIb",
            ZeroType::IVb => "IVb",
            ZeroType::IVc => "IVc",
            ZeroType::IVd => "IVd",
            ZeroType::Vd => "Vd",
            ZeroType::VId => "VId",
            ZeroType::PacketB => "(B)",
            ZeroType::PacketQ => "(Q)",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ReprType {
    I,
    IIa,
    IIb,
    /// IIIa together with the generic part of the VIa/VIb packet.
    IIIaVIab,
    IVa,
    Va,
    /// Also covers Vc, which is counted together with Vb.
    Vb,
    VIc,
    /// VIb, Saito-Kurokawa packets.
    VIbP,
    /// VIb, Yoshida packets.
    VIbY,
    Zero(ZeroType),
}

impl ReprType {
    /// The ten counted types in output order.
    pub const COUNTED: [ReprType; 10] = [
        ReprType::I,
        ReprType::IIa,
        ReprType::IIb,
        ReprType::IIIaVIab,
        ReprType::IVa,
        ReprType::Va,
        ReprType::Vb,
        ReprType::VIbP,
        ReprType::VIbY,
        ReprType::VIc,
    ];

    /// Types whose count is not a lift: IIa, IIIa+VIa/b, IVa, Va.
    pub const GENERIC: [ReprType; 4] = [
        ReprType::IIa,
        ReprType::IIIaVIab,
        ReprType::IVa,
        ReprType::Va,
    ];

    /// Types reached by lifting from elliptic forms at level `p`.
    pub const LIFTS: [ReprType; 4] = [
        ReprType::Vb,
        ReprType::VIbP,
        ReprType::VIc,
        ReprType::VIbY,
    ];

    pub fn label(self) -> &'static str {
        match self {
            ReprType::I => "I",
            ReprType::IIa => "IIa",
            ReprType::IIb => "IIb",
            ReprType::IIIaVIab => "IIIa+VIa/b",
            ReprType::IVa => "IVa",
            ReprType::Va => "Va",
            ReprType::Vb => "Vb",
            ReprType::VIc => "VIc",
            ReprType::VIbP => "VIb(P)",
            ReprType::VIbY => "VIb(Y)",
            ReprType::Zero(z) => z.label(),
        }
    }

    pub fn is_generic(self) -> bool {
        Self::GENERIC.contains(&self)
    }

    pub fn is_lift(self) -> bool {
        Self::LIFTS.contains(&self)
    }
}

impl fmt::Display for ReprType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for ReprType {
    type Err = Error;

    /// Accepts the printed labels plus the spellings `IIIaVIab`, `VIbP`,
    /// `VIbY`, `B`, `Q`; `Vc` parses as `Vb`.
    fn from_str(s: &str) -> Result<Self> {
        let t = match s {
            "I" => ReprType::I,
            "IIa" => ReprType::IIa,
            "IIb" => ReprType::IIb,
            "IIIa+VIa/b" | "IIIaVIab" => ReprType::IIIaVIab,
            "IVa" => ReprType::IVa,
            "Va" => ReprType::Va,
            "Vb" | "Vc" => ReprType::Vb,
            "VIc" => ReprType::VIc,
            "VIb(P)" | "VIbP" => ReprType::VIbP,
            "VIb(Y)" | "VIbY" => ReprType::VIbY,
            "B" => ReprType::Zero(ZeroType::PacketB),
            "Q" => ReprType::Zero(ZeroType::PacketQ),
            other => ZeroType::ALL
                .iter()
                .find(|z| z.label() == other)
                .map(|&z| ReprType::Zero(z))
                .ok_or_else(|| Error::InvalidArgument(format!("unknown type {other:?}")))?,
        };
        Ok(t)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    ClosedForm,
    Series,
    Relation,
    ForcedZero,
}

impl Route {
    pub fn label(self) -> &'static str {
        match self {
            Route::ClosedForm => "closed-form",
            Route::Series => "series",
            Route::Relation => "relation",
            Route::ForcedZero => "forced-zero",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CountValue {
    Known(BigInt),
    Unknown,
}

impl CountValue {
    pub fn known(&self) -> Option<&BigInt> {
        match self {
            CountValue::Known(v) => Some(v),
            CountValue::Unknown => None,
        }
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, CountValue::Unknown)
    }
}

impl fmt::Display for CountValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CountValue::Known(v) => write!(f, "{v}"),
            CountValue::Unknown => f.write_str("unknown"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountResult {
    pub k: u32,
    pub p: u64,
    pub omega: ReprType,
    pub value: CountValue,
    pub route: Route,
}

impl CountResult {
    /// The value, or [`Error::Unknown`].
    pub fn require_known(&self) -> Result<&BigInt> {
        self.value.known().ok_or_else(|| Error::Unknown {
            k: self.k,
            p: self.p,
            omega: self.omega.label().to_string(),
        })
    }
}

fn fr(n: i128, d: i128) -> ExactRational {
    ExactRational::new(BigInt::from(n), BigInt::from(d))
}

fn nonneg(v: ExactRational, formula: &'static str) -> Result<BigInt> {
    let n = v.expect_integer(formula)?;
    if n.is_negative() {
        return Err(Error::Negative {
            formula,
            value: n.to_string(),
        });
    }
    Ok(n)
}

/// `C(p)`, the weight-independent factor in the Yoshida-type count.
pub fn yoshida_cp(p: u64) -> Result<ExactRational> {
    require_prime(p)?;
    if p < 5 {
        return Err(Error::PrimeTooSmall { p, min: 5 });
    }
    let e1 = i128::from(symbol_minus_one(p)?);
    let e3 = i128::from(symbol_minus_three(p)?);
    Ok(fr(i128::from(p) - 1, 24) + fr(1 - e1, 8) + fr(1 - e3, 6) - fr(1, 2))
}

/// Everything a closed form reads at one `(k, p)`.
struct Point {
    k: i128,
    m1: i128,
    d2: i128,
    d3: i128,
    p: i128,
    e1: i128,
    e3: i128,
    hb: i128,
    seqs: [i128; SeqName::ALL.len()],
}

impl Point {
    fn new(k: u32, p: Option<u64>) -> Result<Self> {
        let mut seqs = [0i128; SeqName::ALL.len()];
        for (slot, &name) in seqs.iter_mut().zip(SeqName::ALL.iter()) {
            *slot = i128::from(seq(name, k));
        }
        let (p, e1, e3, hb) = match p {
            Some(p) => (
                i128::from(p),
                i128::from(symbol_minus_one(p)?),
                i128::from(symbol_minus_three(p)?),
                i128::from(class_number(p)? * b_param(p)?),
            ),
            None => (0, 0, 0, 0),
        };
        let k64 = i64::from(k);
        Ok(Point {
            k: i128::from(k),
            m1: i128::from(sign_power(k)),
            d2: i128::from(kronecker_delta(k64, 2)),
            d3: i128::from(kronecker_delta(k64, 3)),
            p,
            e1,
            e3,
            hb,
            seqs,
        })
    }

    fn s(&self, name: SeqName) -> i128 {
        let i = SeqName::ALL.iter().position(|&n| n == name).expect("catalogued");
        self.seqs[i]
    }

    /// `(k-2)(k-1)(2k-3)`
    fn cubic(&self) -> ExactRational {
        fr(self.quad(), 1) * fr(self.lin(), 1)
    }

    /// `(k-2)(k-1)`
    fn quad(&self) -> i128 {
        (self.k - 2) * (self.k - 1)
    }

    /// `2k-3`
    fn lin(&self) -> i128 {
        2 * self.k - 3
    }
}

/// `n/d * x` with `x` an integer.
fn tm(n: i128, d: i128, x: i128) -> ExactRational {
    fr(n, d) * fr(x, 1)
}

fn closed_i(k: u32) -> Result<BigInt> {
    use SeqName::*;
    let q = Point::new(k, None)?;
    let m1 = q.m1;
    let v = fr(1, 17280) * q.cubic()
        + tm(7 * m1, 1152, q.quad())
        + fr(5, 48)
        + fr(q.d3 - q.d2, 1)
        - tm(47, 3456, q.lin())
        + fr(61 * m1, 128)
        - tm(13, 108, q.s(C3Hat))
        - tm(1, 6, q.s(C3))
        + tm(1, 96, q.s(F4))
        - tm(1, 8, q.s(C4Prime))
        + tm(1, 8, q.s(C4))
        + tm(1, 5, q.s(C5))
        + tm(1, 108, q.s(F6))
        + tm(1, 12, q.s(C6Hat))
        + tm(1, 9, q.s(C6))
        + tm(1, 12, q.s(C12))
        - tm(m1, 16, q.lin())
        - tm(m1, 6, q.s(C3Hat));
    nonneg(v, "s_k(I)")
}

fn closed_iib(k: u32) -> Result<BigInt> {
    if k % 2 == 1 {
        return Ok(BigInt::zero());
    }
    let q = Point::new(k, None)?;
    let v = tm(1, 12, q.lin()) - fr(3, 4) + tm(1, 3, q.s(SeqName::C3Hat)) + fr(q.d2, 1);
    nonneg(v, "s_k(IIb)")
}

fn closed_lift(k: u32, p: u64, omega: ReprType) -> Result<BigInt> {
    let q = Point::new(k, Some(p))?;
    let c3h = q.s(SeqName::C3Hat);
    let even = k % 2 == 0;
    let main = tm(q.p - 1, 24, q.lin());
    let split = tm(1 - q.e3, 6, c3h);
    let v = match omega {
        ReprType::Vb if even => main + fr(1 - q.e1, 8) - split - fr(q.hb, 4),
        ReprType::VIbP if even => main + fr(1 - q.e1, 8) - split + fr(q.hb, 4) - fr(q.d2, 1),
        ReprType::VIc if !even => main - fr(1 - q.e1, 8) - split - fr(q.hb, 4),
        ReprType::Vb | ReprType::VIbP | ReprType::VIc => ExactRational::zero(),
        ReprType::VIbY => {
            let c = yoshida_cp(p)?;
            let inner = tm(q.p - 1, 12, q.lin()) + fr(q.m1 * (1 - q.e1), 4)
                - tm(1 - q.e3, 3, c3h)
                - fr(q.d2, 1);
            c * inner
                + fr((2 - q.hb) * q.d2, 4)
                + fr(q.m1 * (q.hb * q.hb - 2 * q.hb), 8)
        }
        _ => unreachable!("not a lift type"),
    };
    nonneg(v, lift_formula(omega))
}

fn lift_formula(omega: ReprType) -> &'static str {
    match omega {
        ReprType::Vb => "s_k(p, Vb)",
        ReprType::VIbP => "s_k(p, VIb(P))",
        ReprType::VIc => "s_k(p, VIc)",
        _ => "s_k(p, VIb(Y))",
    }
}

fn closed_iia(q: &Point, p: u64) -> ExactRational {
    use SeqName::*;
    let (pp, e1, e3, m1) = (q.p, q.e1, q.e3, q.m1);
    let c8 = i128::from(crate::series::mod8_case(ReprType::IIa, p));
    let c5 = i128::from(crate::series::mod5_case(ReprType::IIa, p));
    fr(pp * pp - 1, 17280) * q.cubic()
        + fr(-4 * e3 - 3 * e1 + pp - 3, 24)
        + fr(q.hb, 4)
        - fr(q.d3, 1)
        + tm(16 * (pp + 3) * e3 + 9 * (pp + 4) * e1 - 84 * pp + 119, 3456, q.lin())
        + fr(((16 * e3 - pp + 12) * (e1 - 1) + 3 * (pp - 49)) * m1, 384)
        + tm(m1, 24, q.lin())
        + tm((e3 + 1) * (9 * e1 + pp - 6) - 4 * (pp - 8), 216, q.s(C3Hat))
        + tm(m1, 6, q.s(C3Hat))
        - tm(c8, 4, q.s(C4))
        - tm(c5, 5, q.s(C5))
}

fn closed_iii(q: &Point, p: u64) -> ExactRational {
    use SeqName::*;
    let (pp, e1, e3, m1, hb) = (q.p, q.e1, q.e3, q.m1, q.hb);
    let c8 = i128::from(crate::series::mod8_case(ReprType::IIIaVIab, p));
    let c5 = i128::from(crate::series::mod5_case(ReprType::IIIaVIab, p));
    fr((pp - 1) * (pp * pp + pp + 2), 34560) * q.cubic()
        + fr(3 * e1 - pp - 2, 48)
        - fr(hb, 8)
        - fr((hb * hb - 2 * hb) * m1, 16)
        - fr(q.d3, 1)
        + tm(7 * (pp - 1) * (pp + 3) * m1, 2304, q.quad())
        - tm((pp - 1) * (-32 * e3 - 27 * e1 + 12 * pp - 97), 6912, q.lin())
        - fr(((32 * e3 - 5 * pp - 3) * (9 * e1 - 17) - 40 * (pp + 7)) * m1, 6912)
        - tm((pp - 1) * m1, 24, q.lin())
        + tm(1 - e3, 6, q.s(C3))
        + tm((pp + 5) * (1 - e3), 108, q.s(C3Hat))
        + tm((1 - e3) * m1, 12, q.s(C3Hat))
        + tm((pp + 1) * e1 + pp - 3, 192, q.s(F4))
        + tm(1 - e1, 8, q.s(C4Prime))
        + tm((pp + 1) * e3 + pp - 3, 216, q.s(F6))
        + tm(2 * (e3 - 2), 27, q.s(C6))
        + tm(5 * e3 - 13, 108, q.s(C6Hat))
        + tm(2 * (e3 + 1), 27, q.s(C6Prime))
        + tm((e3 + 1) * (e1 + 1) - 4, 24, q.s(C12))
        - tm(c8, 4, q.s(C4))
        - tm(c5, 5, q.s(C5))
}

fn closed_iva(q: &Point, p: u64) -> ExactRational {
    use SeqName::*;
    let (pp, e1, e3, m1) = (q.p, q.e1, q.e3, q.m1);
    let c8 = i128::from(crate::series::mod8_case(ReprType::IVa, p));
    let c5 = i128::from(crate::series::mod5_case(ReprType::IVa, p));
    fr((pp - 1) * (pp * pp * pp - 1), 17280) * q.cubic()
        + tm(7 * (pp - 1) * (pp - 1) * m1, 1152, q.quad())
        + fr(q.d3, 1)
        + tm((pp - 1) * (16 * e3 + 9 * e1 - 25), 3456, q.lin())
        + tm((e3 - 1) * (9 * e1 + pp - 10), 216, q.s(C3Hat))
        + fr(((16 * e3 - pp - 15) * (9 * e1 - 25) - 16 * (pp + 31)) * m1, 3456)
        + tm((e1 - 1) * (pp - 1), 96, q.s(F4))
        + tm((e3 - 1) * (pp - 1), 108, q.s(F6))
        - tm(4 * (e3 - 2), 27, q.s(C6))
        + tm(2 * (e3 + 1), 27, q.s(C6Hat))
        - tm(4 * (e3 + 1), 27, q.s(C6Prime))
        + tm((e3 - 1) * (e1 - 1), 12, q.s(C12))
        + tm(c8, 2, q.s(C4))
        + tm(c5, 5, q.s(C5))
}

fn closed_va(q: &Point, p: u64) -> ExactRational {
    use SeqName::*;
    let (pp, e1, e3, m1, hb) = (q.p, q.e1, q.e3, q.m1, q.hb);
    let c8 = i128::from(crate::series::mod8_case(ReprType::Va, p));
    let c5 = i128::from(crate::series::mod5_case(ReprType::Va, p));
    fr(pp * (pp - 1) * (pp - 1), 34560) * q.cubic()
        + fr(1 - e1, 16)
        - fr(hb, 8)
        + fr((hb * hb - 2 * hb) * m1, 16)
        - tm(7 * (pp - 1) * (pp - 1) * m1, 2304, q.quad())
        + tm((pp - 1) * m1, 48, q.lin())
        - tm((1 - e3) * m1, 12, q.s(C3Hat))
        - tm((pp - 1) * (-32 * e3 - 27 * e1 + 12 * pp - 97), 6912, q.lin())
        - tm((pp - 4) * (e3 - 1), 108, q.s(C3Hat))
        + fr(((32 * e3 - 5 * pp - 3) * (-9 * e1 + 1) - 40 * (pp + 7)) * m1, 6912)
        - tm((pp - 1) * (e1 - 1), 192, q.s(F4))
        - tm((pp - 1) * (e3 - 1), 216, q.s(F6))
        + tm(2 * (2 * e3 - 1), 27, q.s(C6))
        + tm(e3 + 1, 27, q.s(C6Hat))
        - tm(2 * (e3 + 1), 27, q.s(C6Prime))
        - tm((e3 - 1) * (e1 - 1), 24, q.s(C12))
        - tm(c8, 4, q.s(C4))
        + tm(c5, 5, q.s(C5))
}

fn closed_generic(k: u32, p: u64, omega: ReprType) -> Result<BigInt> {
    let q = Point::new(k, Some(p))?;
    let (v, formula) = match omega {
        ReprType::IIa => (closed_iia(&q, p), "s_k(p, IIa)"),
        ReprType::IIIaVIab => (closed_iii(&q, p), "s_k(p, IIIa+VIa/b)"),
        ReprType::IVa => (closed_iva(&q, p), "s_k(p, IVa)"),
        ReprType::Va => (closed_va(&q, p), "s_k(p, Va)"),
        _ => unreachable!("not a generic type"),
    };
    nonneg(v, formula)
}

fn check_inputs(k: u32, p: u64) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidWeight(k));
    }
    require_prime(p)
}

/// Closed-form value where one exists: types I and IIb for every `p` and
/// `k >= 1`; lift types for `p >= 5`, `k >= 2`; generic types for `p >= 5`,
/// `k >= 3`. Returns `Ok(None)` outside that range.
pub fn closed_form(k: u32, p: u64, omega: ReprType) -> Result<Option<BigInt>> {
    check_inputs(k, p)?;
    Ok(match omega {
        ReprType::I => Some(closed_i(k)?),
        ReprType::IIb => Some(closed_iib(k)?),
        t if t.is_lift() && p >= 5 && k >= 2 => Some(closed_lift(k, p, t)?),
        t if t.is_generic() && p >= 5 && k >= 3 => Some(closed_generic(k, p, t)?),
        _ => None,
    })
}

/// Coefficient of `t^k` in the catalogued generating function.
pub fn series_count(k: u32, p: u64, omega: ReprType) -> Result<BigInt> {
    check_inputs(k, p)?;
    series_cache_coefficient(p, omega, k)
}

/// Lift types from elliptic new-space dimensions at weights `2k - 2` and 2.
pub fn count_via_relation(k: u32, p: u64, omega: ReprType) -> Result<BigInt> {
    if k < 2 {
        return Err(Error::InvalidWeight(k));
    }
    require_prime(p)?;
    let w = 2 * k - 2;
    let even = k % 2 == 0;
    let v = match omega {
        ReprType::Vb if even => dim_new_pm(w, p, Sign::Minus)?,
        ReprType::VIbP if even => dim_new_pm(w, p, Sign::Plus)?,
        ReprType::VIc if !even => dim_new_pm(w, p, Sign::Minus)?,
        ReprType::Vb | ReprType::VIbP | ReprType::VIc => 0,
        ReprType::VIbY => {
            let (wp, wm) = (dim_new_pm(w, p, Sign::Plus)?, dim_new_pm(w, p, Sign::Minus)?);
            let (tp, tm) = (dim_new_pm(2, p, Sign::Plus)?, dim_new_pm(2, p, Sign::Minus)?);
            if even {
                wp * tp + wm * tm
            } else {
                wm * tp + wp * tm
            }
        }
        other => {
            return Err(Error::InvalidArgument(format!(
                "type {other} has no lifting relation"
            )))
        }
    };
    Ok(BigInt::from(v))
}

/// `s_k(p, omega)` by the preferred route.
pub fn count(k: u32, p: u64, omega: ReprType) -> Result<CountResult> {
    check_inputs(k, p)?;
    let result = |value, route| CountResult {
        k,
        p,
        omega,
        value,
        route,
    };
    if k == 1 || matches!(omega, ReprType::Zero(_)) {
        return Ok(result(CountValue::Known(BigInt::zero()), Route::ForcedZero));
    }
    if omega.is_generic() && p >= 5 && k == 2 {
        return Ok(result(CountValue::Unknown, Route::ClosedForm));
    }
    if let Some(v) = closed_form(k, p, omega)? {
        return Ok(result(CountValue::Known(v), Route::ClosedForm));
    }
    let v = series_count(k, p, omega)?;
    Ok(result(CountValue::Known(v), Route::Series))
}

/// Known value of `s_k(p, omega)`, or [`Error::Unknown`].
pub fn count_value(k: u32, p: u64, omega: ReprType) -> Result<BigInt> {
    count(k, p, omega)?.require_known().cloned()
}

/// `count` over a grid, one row per prime in the given order, cells computed
/// in parallel.
pub fn count_table(omega: ReprType, primes: &[u64], ks: &[u32]) -> Result<Vec<Vec<CountResult>>> {
    primes
        .par_iter()
        .map(|&p| ks.iter().map(|&k| count(k, p, omega)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::is_prime;

    fn n(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn examples() {
        assert_eq!(count_value(19, 2, ReprType::IIa).unwrap(), n(1));
        assert_eq!(count_value(3, 11, ReprType::IVa).unwrap(), n(2));
        assert_eq!(count_value(4, 13, ReprType::IIIaVIab).unwrap(), n(3));
        assert_eq!(count_value(10, 5, ReprType::Vb).unwrap(), n(2));
        assert_eq!(count_via_relation(10, 5, ReprType::Vb).unwrap(), n(2));
        assert_eq!(count_via_relation(3, 19, ReprType::VIc).unwrap(), n(1));
        for p in [2u64, 5, 97] {
            assert_eq!(count_value(10, p, ReprType::IIb).unwrap(), n(1));
            assert_eq!(count_via_relation(10, p, ReprType::VIc).unwrap(), n(0));
        }
        let r = count(2, 7, ReprType::IVa).unwrap();
        assert!(r.value.is_unknown());
        assert!(matches!(r.require_known(), Err(Error::Unknown { k: 2, p: 7, .. })));
    }

    #[test]
    fn routes_recorded() {
        assert_eq!(count(19, 2, ReprType::IIa).unwrap().route, Route::Series);
        assert_eq!(count(19, 5, ReprType::IIa).unwrap().route, Route::ClosedForm);
        assert_eq!(count(1, 5, ReprType::IIa).unwrap().route, Route::ForcedZero);
        let z = ReprType::Zero(ZeroType::IVc);
        assert_eq!(count(12, 5, z).unwrap().route, Route::ForcedZero);
    }

    #[test]
    fn yoshida_constant() {
        assert_eq!(yoshida_cp(5).unwrap(), ExactRational::zero());
        assert_eq!(yoshida_cp(11).unwrap(), fr(1, 2));
        assert_eq!(yoshida_cp(7).unwrap(), ExactRational::zero());
        assert!(matches!(yoshida_cp(3), Err(Error::PrimeTooSmall { .. })));
    }

    #[test]
    fn bad_inputs() {
        assert!(matches!(count(0, 5, ReprType::I), Err(Error::InvalidWeight(0))));
        assert!(matches!(count(4, 4, ReprType::I), Err(Error::NotPrime(4))));
        assert!(count_via_relation(1, 5, ReprType::Vb).is_err());
        assert!(count_via_relation(4, 5, ReprType::IIa).is_err());
    }

    #[test]
    fn parse_labels() {
        for t in ReprType::COUNTED {
            assert_eq!(t.label().parse::<ReprType>().unwrap(), t);
        }
        assert_eq!("Vc".parse::<ReprType>().unwrap(), ReprType::Vb);
        assert_eq!("VIbY".parse::<ReprType>().unwrap(), ReprType::VIbY);
        assert_eq!("IVd".parse::<ReprType>().unwrap(), ReprType::Zero(ZeroType::IVd));
        assert!("VIb".parse::<ReprType>().is_err());
    }

    // One weight per residue-class case, against values tabulated at p = 5..19.
    #[test]
    fn residue_case_transcriptions() {
        // IIa: mod 8 selector active at 5, 11, 13, 19; mod 5 value 2 at 7, 13, 17
        assert_eq!(count_value(7, 13, ReprType::IIa).unwrap(), n(2));
        assert_eq!(count_value(3, 19, ReprType::IIa).unwrap(), n(0));
        // p = 7 exercises the mod 8 case of the other generic types
        assert_eq!(count_value(3, 11, ReprType::IVa).unwrap(), n(2));
    }

    #[test]
    fn parity_vanishing() {
        for p in [2u64, 3, 5, 7, 11] {
            for k in 2..=200u32 {
                let z = |t| count_value(k, p, t).unwrap().is_zero();
                if k % 2 == 1 {
                    assert!(z(ReprType::IIb) && z(ReprType::Vb) && z(ReprType::VIbP), "k = {k}");
                } else {
                    assert!(z(ReprType::VIc), "k = {k}");
                }
            }
        }
    }

    #[test]
    fn weight_one_and_two() {
        for p in (2..100u64).filter(|&p| is_prime(p)) {
            for t in ReprType::COUNTED {
                assert!(count_value(1, p, t).unwrap().is_zero());
                // the closed forms themselves also give 0 where they apply
                if let Some(v) = closed_form(1, p, t).unwrap() {
                    assert!(v.is_zero(), "{t} at p = {p}");
                }
            }
        }
        for p in [2u64, 3] {
            for t in ReprType::COUNTED {
                assert!(count_value(2, p, t).unwrap().is_zero(), "{t} at p = {p}");
            }
        }
    }

    #[test]
    fn type_one_independent_of_p() {
        for k in 1..=200u32 {
            let a = count_value(k, 2, ReprType::I).unwrap();
            assert_eq!(a, count_value(k, 5, ReprType::I).unwrap());
            assert_eq!(a, count_value(k, 13, ReprType::I).unwrap());
            assert_eq!(a, series_count(k, 13, ReprType::I).unwrap(), "k = {k}");
        }
    }

    #[test]
    fn closed_forms_match_series() {
        for p in [5u64, 7, 11, 13, 17, 19, 23, 29, 31] {
            for t in ReprType::COUNTED {
                for k in 3..=200u32 {
                    let c = closed_form(k, p, t).unwrap().unwrap();
                    assert_eq!(c, series_count(k, p, t).unwrap(), "{t}, p = {p}, k = {k}");
                }
            }
        }
    }

    #[test]
    fn relation_matches_other_routes() {
        for p in [2u64, 3, 5, 7, 11, 13, 17, 19] {
            for t in ReprType::LIFTS {
                for k in 2..=200u32 {
                    let r = count_via_relation(k, p, t).unwrap();
                    assert_eq!(r, count_value(k, p, t).unwrap(), "{t}, p = {p}, k = {k}");
                }
            }
        }
    }

    #[test]
    fn table_shape_and_order() {
        let ks: Vec<u32> = (1..=9).collect();
        let rows = count_table(ReprType::I, &[2, 19], &ks).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[1][0].p, 19);
        assert!(rows
            .iter()
            .flatten()
            .all(|r| r.value == CountValue::Known(BigInt::zero())));
        let va: Vec<u32> = (4..=30).step_by(2).collect();
        let row = &count_table(ReprType::Va, &[2], &va).unwrap()[0];
        let vals: Vec<String> = row.iter().map(|r| r.value.to_string()).collect();
        assert_eq!(vals.last().unwrap(), "1");
        assert!(vals[..vals.len() - 1].iter().all(|v| v == "0"));
    }
}
