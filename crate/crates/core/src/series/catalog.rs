//! Generating functions for every counted type, per prime.
//!
//! Types I and IIb do not depend on `p`. For `p = 2, 3` the generic types and
//! the lift types have explicit fractions. For `p >= 5` the parametric
//! displays are materialized with `p`, the two symbols, `h*b` and the
//! residue-class selectors substituted.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;

use super::{cy, om, prod, FactoredDenominator, GfSum, IntPolynomial, RationalGeneratingFunction};
use crate::arith::{require_prime, symbol_minus_one, symbol_minus_three, ExactRational};
use crate::classnum::{b_param, class_number};
use crate::counts::{yoshida_cp, ReprType};
use crate::error::{Error, Result};

fn fr(n: i128, d: i128) -> ExactRational {
    ExactRational::new(BigInt::from(n), BigInt::from(d))
}

/// `(1 - t^a)(1 - t^b)...`
fn oms(ns: &[u32]) -> FactoredDenominator {
    prod(&ns.iter().map(|&n| om(n)).collect::<Vec<_>>())
}

/// `(1 - t^4)(1 - t^6)(1 - t^10)(1 - t^12)`
fn d4() -> FactoredDenominator {
    oms(&[4, 6, 10, 12])
}

/// `1 + t^2 + t^4`
fn t3() -> FactoredDenominator {
    cy(3).times(&cy(6))
}

fn ratio(num: IntPolynomial, den: FactoredDenominator) -> RationalGeneratingFunction {
    RationalGeneratingFunction::new(num, den.expand()).expect("catalog denominators are unit")
}

fn sparse(terms: &[(usize, i64)]) -> IntPolynomial {
    IntPolynomial::sparse(terms)
}

/// Sparse polynomial from `(exponent, coefficient)` pairs, shifted by `t^s`.
fn shifted(s: usize, terms: &[(usize, i64)]) -> IntPolynomial {
    sparse(terms).shift(s)
}

fn level_one(omega: ReprType) -> Option<RationalGeneratingFunction> {
    match omega {
        ReprType::I => {
            let mut g = GfSum::new();
            let mut num = vec![0i64; 36];
            num[0] = 1;
            num[35] = 1;
            g.add(fr(1, 1), &num, 0, d4())
                .add(fr(-1, 1), &[1], 0, oms(&[4, 6]))
                .add(fr(-1, 1), &[1], 10, oms(&[2, 6]));
            Some(g.build("sum s_k(I) t^k").expect("integral"))
        }
        ReprType::IIb => Some(ratio(IntPolynomial::monomial(10), oms(&[2, 6]))),
        _ => None,
    }
}

fn prime_two(omega: ReprType) -> Option<RationalGeneratingFunction> {
    let d = oms(&[4, 6]);
    Some(match omega {
        ReprType::Vb => ratio(IntPolynomial::monomial(8), d),
        ReprType::VIbP => ratio(sparse(&[(6, 1), (8, 1), (12, -1)]), d),
        ReprType::VIc => ratio(IntPolynomial::monomial(11), d),
        ReprType::VIbY => RationalGeneratingFunction::zero(),
        ReprType::IIa => {
            let a = shifted(19, &[(0, 1), (2, 1), (4, 1), (6, -1), (8, -1)]);
            let b = shifted(16, &[(0, 1), (2, 1), (4, -1), (6, -1), (8, 1)]);
            ratio(&a + &b, oms(&[4, 4, 6, 10]))
        }
        ReprType::IIIaVIab => {
            let a = shifted(25, &[(0, 1), (2, 1), (4, 1), (6, 1), (8, 1), (10, -1)]);
            let b = shifted(
                12,
                &[
                    (0, 1),
                    (2, 2),
                    (4, 2),
                    (6, 2),
                    (8, 1),
                    (12, -2),
                    (14, -1),
                    (16, -1),
                    (18, -1),
                    (22, 1),
                ],
            );
            ratio(&a + &b, d4())
        }
        ReprType::IVa => {
            let a = shifted(
                13,
                &[
                    (0, 1),
                    (2, 1),
                    (4, 1),
                    (6, 2),
                    (8, 2),
                    (12, 1),
                    (16, -1),
                    (18, -1),
                    (22, 1),
                ],
            );
            let b = shifted(
                10,
                &[
                    (0, 1),
                    (2, 1),
                    (4, 1),
                    (10, 2),
                    (12, 1),
                    (16, 1),
                    (18, 1),
                    (22, -1),
                ],
            );
            ratio(&a + &b, d4())
        }
        ReprType::Va => {
            let a = shifted(15, &[(0, 1), (2, 1), (12, -1)]);
            ratio(&a + &IntPolynomial::monomial(30), d4())
        }
        _ => return None,
    })
}

fn prime_three(omega: ReprType) -> Option<RationalGeneratingFunction> {
    let d = oms(&[2, 6]);
    Some(match omega {
        ReprType::Vb => ratio(IntPolynomial::monomial(6), d),
        ReprType::VIbP => ratio(sparse(&[(4, 1), (8, 1), (10, -1)]), d),
        ReprType::VIc => ratio(IntPolynomial::monomial(9), d),
        ReprType::VIbY => RationalGeneratingFunction::zero(),
        ReprType::IIa => {
            let a = shifted(
                15,
                &[
                    (0, 1),
                    (2, 1),
                    (4, 1),
                    (6, 2),
                    (8, 2),
                    (10, -1),
                    (12, -1),
                    (14, -1),
                ],
            );
            let b = shifted(
                12,
                &[(0, 1), (2, 1), (4, 1), (6, 2), (10, -1), (12, -1), (14, 1)],
            );
            ratio(&a + &b, oms(&[4, 6, 6, 10]))
        }
        ReprType::IIIaVIab => {
            let a = shifted(
                17,
                &[
                    (0, 1),
                    (2, 1),
                    (4, 1),
                    (6, 2),
                    (8, 3),
                    (10, 2),
                    (12, 2),
                    (14, 2),
                    (16, 1),
                    (18, -1),
                ],
            );
            let b = shifted(
                8,
                &[
                    (0, 1),
                    (2, 2),
                    (4, 3),
                    (6, 4),
                    (8, 5),
                    (10, 4),
                    (12, 1),
                    (16, -2),
                    (18, -2),
                    (20, -2),
                    (22, -1),
                    (26, 1),
                ],
            );
            ratio(&a + &b, d4())
        }
        ReprType::IVa => {
            let a = shifted(
                9,
                &[
                    (0, 1),
                    (2, 2),
                    (4, 5),
                    (6, 6),
                    (8, 8),
                    (10, 9),
                    (12, 9),
                    (14, 5),
                    (16, 5),
                    (18, 2),
                    (22, -1),
                    (26, 1),
                ],
            );
            let b = shifted(
                6,
                &[
                    (0, 1),
                    (2, 2),
                    (4, 5),
                    (6, 6),
                    (8, 8),
                    (10, 7),
                    (12, 7),
                    (14, 7),
                    (16, 5),
                    (18, 2),
                    (20, 2),
                    (22, 1),
                    (26, -1),
                ],
            );
            ratio(&a + &b, d4())
        }
        ReprType::Va => {
            let a = shifted(
                11,
                &[(0, 1), (2, 1), (4, 2), (6, 2), (8, 2), (16, -1), (18, -1)],
            );
            let b = &sparse(&[(0, 1), (4, 1), (6, 1)]) * &sparse(&[(0, 1), (8, 1)]);
            ratio(&a + &b.shift(16), d4())
        }
        _ => return None,
    })
}

/// Selector for the `(1 + t)(1 + t^2)` term.
fn mod8_selector(omega: ReprType, p: u64) -> i128 {
    match omega {
        ReprType::IIa => i128::from(matches!(p % 8, 3 | 5)),
        _ => i128::from(p % 8 == 7),
    }
}

/// Selector for the `(1 + t + t^2 + t^3 + t^4)` term.
fn mod5_selector(omega: ReprType, p: u64) -> i128 {
    let r = p % 5;
    match omega {
        ReprType::IIa => match r {
            0 => 1,
            1 | 4 => 0,
            _ => 2,
        },
        ReprType::IIIaVIab => match r {
            0 => 1,
            1 => 0,
            2 | 3 => 1,
            _ => 2,
        },
        ReprType::IVa => match r {
            0 => 1,
            1 => 0,
            2 | 3 => 2,
            _ => 4,
        },
        ReprType::Va => match r {
            2 | 3 => 1,
            4 => -2,
            _ => 0,
        },
        _ => 0,
    }
}

pub(crate) fn mod8_case(omega: ReprType, p: u64) -> i64 {
    mod8_selector(omega, p) as i64
}

pub(crate) fn mod5_case(omega: ReprType, p: u64) -> i64 {
    mod5_selector(omega, p) as i64
}

fn generic_prime(p: u64, omega: ReprType) -> Result<Option<RationalGeneratingFunction>> {
    let e1 = i128::from(symbol_minus_one(p)?);
    let e3 = i128::from(symbol_minus_three(p)?);
    let hb = i128::from(class_number(p)? * b_param(p)?);
    let pi = i128::from(p);
    let c8 = mod8_selector(omega, p);
    let c5 = mod5_selector(omega, p);
    let one_p = || cy(2);
    let ph4 = || cy(4);
    let ph12 = || cy(12);
    let quartic = || oms(&[1, 1, 1, 1]);
    let mut g = GfSum::new();
    let label = match omega {
        ReprType::Vb | ReprType::VIbP => {
            g.add(fr(pi - 1, 24), &[1, 0, 3], 2, oms(&[2, 2]))
                .add(fr(1 - e1, 8), &[1], 2, om(2))
                .add(fr(1 - e3, 6), &[1], 2, t3());
            if omega == ReprType::Vb {
                g.add(fr(-hb, 4), &[1], 2, om(2));
                "sum s_k(p, Vb) t^k"
            } else {
                g.add(fr(hb, 4), &[1], 2, om(2)).add(fr(-1, 1), &[1], 2, FactoredDenominator::one());
                "sum s_k(p, VIb(P)) t^k"
            }
        }
        ReprType::VIc => {
            g.add(fr(pi - 1, 24), &[3, 0, 1], 3, oms(&[2, 2]))
                .add(fr(e1 - 1, 8), &[1], 3, om(2))
                .add(fr(1 - e3, 6), &[0, 0, 1], 3, t3())
                .add(fr(-hb, 4), &[1], 3, om(2));
            "sum s_k(p, VIc) t^k"
        }
        ReprType::VIbY => {
            let c = yoshida_cp(p)?;
            g.add(&c * fr(pi - 1, 12), &[1, 1], 2, oms(&[1, 1]))
                .add(&c * fr(1 - e1, 4), &[1], 2, one_p())
                .add(&c * fr(1 - e3, 3), &[1, 1], 2, cy(3))
                .add(fr(2 - hb, 4) - &c, &[1], 2, FactoredDenominator::one())
                .add(fr(hb * hb - 2 * hb, 8), &[1], 2, one_p());
            "sum s_k(p, VIb(Y)) t^k"
        }
        ReprType::IIa => {
            g.add(fr(pi * pi - 1, 2880), &[1, 1], 3, quartic())
                .add(fr(1 - pi, 288), &[5, 13, 17, 12, 12], 3, oms(&[2, 3]))
                .add(fr(1, 1), &[1], 10, oms(&[2, 6]))
                .add(fr(hb, 4), &[1], 3, om(1))
                .add(fr(-1, 1), &[1], 3, FactoredDenominator::one())
                .add(fr(pi * (e3 - 1), 72), &[1, 1], 3, oms(&[1, 3]))
                .add(fr(e3 - 1, 24), &[-3, 1, 0, 4], 3, oms(&[1, 3]))
                .add(fr(pi * (e1 - 1), 96), &[1], 3, oms(&[1, 2]))
                .add(fr(e1 - 1, 24), &[-4, 2, -1, 3, 3], 3, oms(&[2, 3]))
                .add(fr(-(e3 - 1) * (e1 - 1), 24), &[1], 3, one_p().times(&cy(3)));
            "sum s_k(p, IIa) t^k"
        }
        ReprType::IIIaVIab => {
            const N: [i64; 16] = [
                34, -6, 133, -35, 264, -88, 344, -120, 342, -58, 224, 0, 86, 14, 13, 5,
            ];
            const C31: [i64; 10] = [-2, 2, -6, 6, -5, 3, -5, 3, -3, 1];
            const C32: [i64; 11] = [14, -8, -10, 6, -5, -2, 20, -6, -16, 4, 7];
            const C11: [i64; 7] = [-3, -4, 4, -8, 1, -4, 2];
            const C12: [i64; 9] = [12, 10, -43, 0, 40, 0, -36, 10, 13];
            g.add(fr((pi - 1) * (pi * pi + pi + 2), 5760), &[1, 1], 3, quartic())
                .add(
                    fr(-(pi - 1) * (pi + 3), 1152),
                    &[13, 2, 19, 0, -2],
                    3,
                    one_p().times(&oms(&[2, 2])),
                )
                .add(fr(pi - 1, 144), &N, 3, ph4().pow(2).times(&oms(&[6, 6])))
                .add(fr(-1, 1), &[1], 3, FactoredDenominator::one())
                .add(fr(-(pi + 1) * (e3 - 1), 72), &C31, 3, oms(&[1, 1]).times(&t3().pow(2)))
                .add(fr(-(e3 - 1), 36), &C32, 3, prod(&[om(1), ph12(), om(6)]))
                .add(fr(-(pi + 1) * (e1 - 1), 192), &C11, 3, prod(&[om(1), ph4(), om(4)]))
                .add(fr(-(e1 - 1), 96), &C12, 3, prod(&[om(1), om(4), ph12()]))
                .add(fr((e3 - 1) * (e1 - 1), 24), &[0, -2, -2, 0, 1], 3, one_p().times(&ph12()))
                .add(fr(hb * hb, 16), &[1], 3, one_p())
                .add(fr(-hb, 4), &[1], 3, om(2));
            "sum s_k(p, IIIa+VIa/b) t^k"
        }
        ReprType::IVa => {
            let n7 = &IntPolynomial::from_i64(&[1, 1])
                * &IntPolynomial::from_i64(&[3, -5, 10, -13, 10, -5, 3]);
            let n7: Vec<i64> = n7
                .coeffs()
                .iter()
                .map(|c| i64::try_from(c).expect("small"))
                .collect();
            g.add(fr((pi - 1) * (pi * pi * pi - 1), 2880), &[1, 1], 3, quartic())
                .add(fr(-7 * (pi - 1) * (pi - 1), 576), &[1], 3, one_p().pow(3))
                .add(fr(1, 1), &[1], 3, FactoredDenominator::one())
                .add(fr((pi - 1) * (e3 - 1), 72), &n7, 3, oms(&[1, 1]).times(&t3().pow(2)))
                .add(fr(2 * (e3 - 1), 9), &[1], 3, one_p().times(&cy(6)))
                .add(fr((pi - 1) * (e1 - 1), 96), &[3, 0, -2, 0, 3], 3, prod(&[om(1), ph4(), om(4)]))
                .add(
                    fr(-(e3 - 1) * (e1 - 1), 24),
                    &[3, 6, 7, 6, 3],
                    3,
                    prod(&[one_p(), cy(3), ph12()]),
                );
            "sum s_k(p, IVa) t^k"
        }
        ReprType::Va => {
            g.add(fr(pi * (pi - 1) * (pi - 1), 5760), &[1, 1], 3, quartic())
                .add(
                    fr((pi - 1) * (pi - 1), 1152),
                    &[1, -30, -5, 0, 2],
                    3,
                    oms(&[1, 1]).times(&one_p().pow(3)),
                )
                .add(fr(pi - 1, 24), &[0, 5, 0, -1], 3, oms(&[2, 2]))
                .add(fr(-hb * hb, 16), &[1], 3, one_p())
                .add(fr(-hb, 4), &[0, 1], 3, om(2))
                .add(
                    fr((pi - 1) * (e3 - 1), 72),
                    &[0, 0, 2, -2, 9, -7, 7, -5, 3, -1],
                    3,
                    oms(&[1, 1]).times(&t3().pow(2)),
                )
                .add(fr(e3 - 1, 18), &[-2, 0, 1, 3, 2], 3, one_p().times(&t3()))
                .add(
                    fr(-(pi - 1) * (e1 - 1), 192),
                    &[1, -4, -4, -8, 5, -4, 2],
                    3,
                    prod(&[om(1), ph4(), om(4)]),
                )
                .add(fr(-(e1 - 1), 32), &[1, 3], 3, om(2))
                .add(fr((e3 - 1) * (e1 - 1), 24), &[2, 2, 0, 0, 1], 3, one_p().times(&ph12()));
            "sum s_k(p, Va) t^k"
        }
        _ => return Ok(None),
    };
    // residue-class corrections shared by the four generic types
    if matches!(
        omega,
        ReprType::IIa | ReprType::IIIaVIab | ReprType::IVa | ReprType::Va
    ) {
        let (s8, s5) = match omega {
            ReprType::IVa => (fr(-c8, 2), fr(-c5, 5)),
            ReprType::Va => (fr(c8, 4), fr(-c5, 5)),
            _ => (fr(c8, 4), fr(c5, 5)),
        };
        g.add(s8, &[1], 3, one_p().times(&ph4()))
            .add(s5, &[1, 1], 3, cy(5));
    }
    g.build(label).map(Some)
}

/// The generating function `sum_k s_k(p, omega) t^k`.
pub fn gf_catalog(p: u64, omega: ReprType) -> Result<RationalGeneratingFunction> {
    require_prime(p)?;
    let uncovered = || Error::Uncovered {
        p,
        omega: omega.label().to_string(),
    };
    if let Some(g) = level_one(omega) {
        return Ok(g);
    }
    let found = match p {
        2 => prime_two(omega),
        3 => prime_three(omega),
        _ => generic_prime(p, omega)?,
    };
    found.ok_or_else(uncovered)
}

type CacheKey = (u64, ReprType);

struct CachedSeries {
    gf: RationalGeneratingFunction,
    coefficients: Vec<BigInt>,
}

fn cache() -> &'static Mutex<HashMap<CacheKey, Arc<Mutex<CachedSeries>>>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, Arc<Mutex<CachedSeries>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficient of `t^k` in `gf_catalog(p, omega)`, from a per-`(p, omega)`
/// expansion that grows on demand.
pub fn series_cache_coefficient(p: u64, omega: ReprType, k: u32) -> Result<BigInt> {
    let entry = {
        let mut map = cache().lock().expect("series cache poisoned");
        match map.get(&(p, omega)) {
            Some(e) => Arc::clone(e),
            None => {
                let gf = gf_catalog(p, omega)?;
                let e = Arc::new(Mutex::new(CachedSeries {
                    gf,
                    coefficients: Vec::new(),
                }));
                map.insert((p, omega), Arc::clone(&e));
                e
            }
        }
    };
    let mut e = entry.lock().expect("series cache poisoned");
    let k = k as usize;
    if e.coefficients.len() <= k {
        let order = k.max(2 * e.coefficients.len()).max(255);
        e.coefficients = e.gf.expand(order).coefficients;
    }
    Ok(e.coefficients[k].clone())
}
