//! Consistency suites: golden tables, route agreement, lift identities,
//! Plancherel identities and the large-weight limit.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::arith::{is_prime, ExactRational};
use crate::counts::{closed_form, count, count_via_relation, series_count, ReprType};
use crate::elliptic::dim_cusp_sl2;
use crate::error::{Error, Result};
use crate::fixture::appendix_blocks;
use crate::plancherel::{
    asymptotic_coefficients, limit_ratio, plancherel_class, plancherel_mass, verify_mass_system,
};
use crate::siegel::{dim_siegel_cusp, SubgroupKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Appendix,
    SeriesVsClosed,
    Relations,
    Plancherel,
    Limit,
    All,
}

impl Suite {
    pub const EACH: [Suite; 5] = [
        Suite::Appendix,
        Suite::SeriesVsClosed,
        Suite::Relations,
        Suite::Plancherel,
        Suite::Limit,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Suite::Appendix => "appendix",
            Suite::SeriesVsClosed => "series-vs-closed",
            Suite::Relations => "relations",
            Suite::Plancherel => "plancherel",
            Suite::Limit => "limit",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.label() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub case: String,
    pub expected: String,
    pub actual: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: expected {}, got {}", self.case, self.expected, self.actual)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub suite: &'static str,
    pub cases: usize,
    pub failures: Vec<Failure>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Accumulates cases; each case compares two displayable values.
struct Tally {
    cases: usize,
    failures: Vec<Failure>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn eq<T: PartialEq + fmt::Display>(&mut self, case: impl FnOnce() -> String, expected: T, actual: T) {
        self.cases += 1;
        if expected != actual {
            self.failures.push(Failure {
                case: case(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    /// Records an evaluation error as a failed case.
    fn err(&mut self, case: String, e: &Error) {
        self.cases += 1;
        self.failures.push(Failure {
            case,
            expected: "a value".into(),
            actual: format!("error: {e}"),
        });
    }

    fn merge(&mut self, other: Tally) {
        self.cases += other.cases;
        self.failures.extend(other.failures);
    }

    fn report(self, suite: Suite) -> CheckReport {
        CheckReport {
            suite: suite.label(),
            cases: self.cases,
            failures: self.failures,
        }
    }
}

fn show<T: fmt::Display>(r: Result<T>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

fn count_str(k: u32, p: u64, t: ReprType) -> String {
    show(count(k, p, t).map(|r| r.value))
}

/// Every golden cell against [`count`].
pub fn check_appendix() -> CheckReport {
    let mut t = Tally::new();
    match appendix_blocks() {
        Ok(blocks) => {
            for b in &blocks {
                for (k, p, want) in b.cells() {
                    t.eq(
                        || format!("s_{k}({p}, {})", b.omega),
                        want.to_string(),
                        count_str(k, p, b.omega),
                    );
                }
            }
        }
        Err(e) => t.err("fixture".into(), &e),
    }
    t.report(Suite::Appendix)
}

/// Closed form against series coefficient, `p` = 5..19, `3 <= k <= 200`.
pub fn check_series_vs_closed() -> CheckReport {
    let tallies: Vec<Tally> = [5u64, 7, 11, 13, 17, 19]
        .par_iter()
        .map(|&p| {
            let mut t = Tally::new();
            for omega in ReprType::COUNTED {
                for k in 3..=200u32 {
                    let closed = show(closed_form(k, p, omega).and_then(|v| {
                        v.ok_or_else(|| Error::InvalidArgument("no closed form".into()))
                    }));
                    t.eq(
                        || format!("s_{k}({p}, {omega}) closed vs series"),
                        closed,
                        show(series_count(k, p, omega)),
                    );
                }
            }
            t
        })
        .collect();
    let mut t = Tally::new();
    for x in tallies {
        t.merge(x);
    }
    t.report(Suite::SeriesVsClosed)
}

/// Lift identities, level-one sequence and low-weight vanishing.
pub fn check_relations() -> CheckReport {
    let mut t = Tally::new();
    // series (p = 2, 3) or closed form (p >= 5) against new-space dimensions
    for p in (2..50u64).filter(|&p| is_prime(p)) {
        let kmax = if p <= 3 { 200 } else { 100 };
        for omega in ReprType::LIFTS {
            for k in 2..=kmax {
                t.eq(
                    || format!("s_{k}({p}, {omega}) vs relation"),
                    show(count_via_relation(k, p, omega)),
                    count_str(k, p, omega),
                );
            }
        }
    }
    for k in (2..=100u32).step_by(2) {
        t.eq(
            || format!("s_{k}(IIb) vs dim S_(2k-2)(SL2(Z))"),
            show(dim_cusp_sl2(2 * k - 2)),
            count_str(k, 2, ReprType::IIb),
        );
    }
    for (k, want) in level_one_expectations() {
        let got = show(dim_siegel_cusp(k, 2, SubgroupKind::Full));
        let series = show(
            series_count(k, 2, ReprType::I)
                .and_then(|a| Ok(a + series_count(k, 2, ReprType::IIb)?)),
        );
        t.eq(|| format!("dim S_{k}(Sp(4,Z))"), want.to_string(), got);
        t.eq(|| format!("series c_{k} of I + IIb"), want.to_string(), series);
    }
    for p in (2..100u64).filter(|&p| is_prime(p)) {
        for omega in ReprType::COUNTED {
            t.eq(|| format!("s_1({p}, {omega})"), "0".to_string(), count_str(1, p, omega));
            if p <= 3 {
                t.eq(|| format!("s_2({p}, {omega})"), "0".to_string(), count_str(2, p, omega));
            }
        }
    }
    t.eq(
        || "dim S_2(B(3))".into(),
        "0".to_string(),
        show(dim_siegel_cusp(2, 3, SubgroupKind::Borel)),
    );
    t.report(Suite::Relations)
}

/// `dim S_k(Sp(4, Z))` for `k <= 12` and at 35.
fn level_one_expectations() -> Vec<(u32, u64)> {
    let mut v: Vec<(u32, u64)> = (1..=9).map(|k| (k, 0)).collect();
    v.extend([(10, 1), (11, 0), (12, 1), (35, 1)]);
    v
}

fn prime_powers_upto(n: u64) -> Vec<u64> {
    (2..=n)
        .filter(|&q| {
            let p = (2..=q).find(|d| q % d == 0).expect("q >= 2");
            let mut r = q;
            while r % p == 0 {
                r /= p;
            }
            r == 1
        })
        .collect()
}

/// Mass system for prime powers `q <= 121`; `a_omega(p) = m_omega(p)` for `p < 100`.
pub fn check_plancherel() -> CheckReport {
    let mut t = Tally::new();
    for q in prime_powers_upto(121) {
        t.eq(|| format!("mass system at q = {q}"), "true".to_string(), show(verify_mass_system(q)));
    }
    for p in (2..100u64).filter(|&p| is_prime(p)) {
        for omega in limit_types() {
            let a = asymptotic_coefficients(p, omega).map(|c| c.a);
            let m = plancherel_class(omega).and_then(|c| plancherel_mass(p, c));
            t.eq(|| format!("a_{omega}({p}) vs m"), show(m), show(a));
        }
    }
    t.report(Suite::Plancherel)
}

fn limit_types() -> [ReprType; 5] {
    [
        ReprType::I,
        ReprType::IIa,
        ReprType::IIIaVIab,
        ReprType::IVa,
        ReprType::Va,
    ]
}

/// Ratio bound at `k` in {5000, 5001, 10000, 10001} and the leading-term law.
pub fn check_limit() -> CheckReport {
    let mut t = Tally::new();
    for p in [2u64, 3, 5, 7] {
        for omega in limit_types() {
            for k in [5000u32, 5001, 10000, 10001] {
                let case = || format!("limit ratio s_{k}({p}, {omega})");
                match limit_bound(k, p, omega) {
                    Ok((dev, bound)) => t.eq(
                        case,
                        format!("|deviation| <= {bound}"),
                        if dev.abs() <= bound {
                            format!("|deviation| <= {bound}")
                        } else {
                            format!("deviation {dev}")
                        },
                    ),
                    Err(e) => t.err(case(), &e),
                }
            }
            match leading_term_growth(p, omega, 500) {
                Ok(g) => t.eq(
                    || format!("leading-term remainder of {omega} at p = {p}"),
                    "linear".to_string(),
                    if g.is_linear() {
                        "linear".to_string()
                    } else {
                        format!("{g:?}")
                    },
                ),
                Err(e) => t.err(format!("leading-term remainder of {omega} at p = {p}"), &e),
            }
        }
    }
    t.report(Suite::Limit)
}

/// `(ratio - m, m * 110 / (2k - 3))`.
pub fn limit_bound(k: u32, p: u64, omega: ReprType) -> Result<(ExactRational, ExactRational)> {
    let ratio = limit_ratio(k, p, omega)?;
    let m = plancherel_mass(p, plancherel_class(omega)?)?;
    let bound = &m * 110 / (2 * i64::from(k) - 3);
    Ok((ratio - m, bound))
}

/// Growth of `|s_k - leading_term(k)| / k` over two halves of `3..=kmax`.
#[derive(Debug, Clone, PartialEq)]
pub struct RemainderGrowth {
    /// Max of `|remainder| / k` over the first half.
    pub first: f64,
    /// Max of `|remainder| / k` over the second half.
    pub second: f64,
}

impl RemainderGrowth {
    /// A quadratic remainder would roughly double `|r|/k` from one half to
    /// the next; a linear one keeps it bounded.
    pub fn is_linear(&self) -> bool {
        self.second <= 1.25 * self.first + 1.0
    }
}

pub fn leading_term_growth(p: u64, omega: ReprType, kmax: u32) -> Result<RemainderGrowth> {
    let coeffs = asymptotic_coefficients(p, omega)?;
    let mid = kmax / 2;
    let mut g = RemainderGrowth {
        first: 0.0,
        second: 0.0,
    };
    for k in 3..=kmax {
        let s: BigInt = count(k, p, omega)?.require_known()?.clone();
        let r = (ExactRational::from(s) - coeffs.leading_term(k)).abs() / i64::from(k);
        let slot = if k <= mid { &mut g.first } else { &mut g.second };
        *slot = slot.max(r.to_f64());
    }
    Ok(g)
}

/// Runs one suite, or all of them for [`Suite::All`].
pub fn run_checks(suite: Suite) -> Vec<CheckReport> {
    match suite {
        Suite::All => Suite::EACH.into_iter().flat_map(run_checks).collect(),
        Suite::Appendix => vec![check_appendix()],
        Suite::SeriesVsClosed => vec![check_series_vs_closed()],
        Suite::Relations => vec![check_relations()],
        Suite::Plancherel => vec![check_plancherel()],
        Suite::Limit => vec![check_limit()],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass() {
        for r in run_checks(Suite::All) {
            assert!(r.cases > 0, "{}", r.suite);
            assert!(r.passed(), "{}: {:?}", r.suite, &r.failures[..r.failures.len().min(5)]);
        }
    }

    #[test]
    fn parse_suite_names() {
        for s in Suite::EACH {
            assert_eq!(s.label().parse::<Suite>().unwrap(), s);
        }
        assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn growth_detector_flags_quadratic() {
        let quad = RemainderGrowth {
            first: 10.0,
            second: 20.0,
        };
        assert!(!quad.is_linear());
        let lin = RemainderGrowth {
            first: 3.0,
            second: 2.0,
        };
        assert!(lin.is_linear());
    }
}
