//! Siegel cusp form dimensions for the level-`p` congruence subgroups and
//! their newform dimensions, assembled from the counts.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::arith::ExactRational;
use crate::counts::{count, CountValue, ReprType};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SubgroupKind {
    /// `Sp(4, Z)`
    Full,
    /// `K(p)`
    Paramodular,
    /// `Gamma0(p)`
    Siegel,
    /// `Gamma0'(p)`
    Klingen,
    /// `B(p)`
    Borel,
}

impl SubgroupKind {
    pub const ALL: [SubgroupKind; 5] = [
        SubgroupKind::Full,
        SubgroupKind::Paramodular,
        SubgroupKind::Siegel,
        SubgroupKind::Klingen,
        SubgroupKind::Borel,
    ];

    pub fn label(self) -> &'static str {
        match self {
            SubgroupKind::Full => "full",
            SubgroupKind::Paramodular => "paramodular",
            SubgroupKind::Siegel => "siegel",
            SubgroupKind::Klingen => "klingen",
            SubgroupKind::Borel => "borel",
        }
    }
}

impl fmt::Display for SubgroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for SubgroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SubgroupKind::ALL
            .into_iter()
            .find(|g| g.label() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown group {s:?}")))
    }
}

/// Dimensions of the spaces of fixed vectors, by group and local type.
/// IIIa, VIa and VIb are listed separately here even though only their
/// combination is counted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedVectorDimTable {
    rows: Vec<(SubgroupKind, Vec<(&'static str, u32)>)>,
}

impl FixedVectorDimTable {
    pub fn standard() -> Self {
        use SubgroupKind::*;
        FixedVectorDimTable {
            rows: vec![
                (Full, vec![("I", 1), ("IIb", 1)]),
                (
                    Paramodular,
                    vec![("I", 2), ("IIa", 1), ("IIb", 1), ("Vb", 1), ("VIc", 1)],
                ),
                (
                    Siegel,
                    vec![
                        ("I", 4),
                        ("IIa", 1),
                        ("IIb", 3),
                        ("IIIa", 2),
                        ("Vb", 1),
                        ("VIa", 1),
                        ("VIb", 1),
                    ],
                ),
                (
                    Klingen,
                    vec![
                        ("I", 4),
                        ("IIa", 2),
                        ("IIb", 2),
                        ("IIIa", 1),
                        ("Va", 1),
                        ("Vb", 1),
                        ("VIa", 1),
                        ("VIc", 1),
                    ],
                ),
                (
                    Borel,
                    vec![
                        ("I", 8),
                        ("IIa", 4),
                        ("IIb", 4),
                        ("IIIa", 4),
                        ("IVa", 1),
                        ("Va", 2),
                        ("Vb", 2),
                        ("VIa", 3),
                        ("VIb", 1),
                        ("VIc", 1),
                    ],
                ),
            ],
        }
    }

    pub fn row(&self, h: SubgroupKind) -> &[(&'static str, u32)] {
        self.rows
            .iter()
            .find(|(g, _)| *g == h)
            .map(|(_, r)| r.as_slice())
            .unwrap_or(&[])
    }

    /// `d_{H, label}`; 0 for labels not in the row.
    pub fn get(&self, h: SubgroupKind, label: &str) -> u32 {
        self.row(h)
            .iter()
            .find(|(l, _)| *l == label)
            .map_or(0, |&(_, d)| d)
    }
}

/// Known counts at one `(k, p)`, or `None` if any is unknown.
struct Counts {
    i: ExactRational,
    iia: ExactRational,
    iib: ExactRational,
    comb: ExactRational,
    iva: ExactRational,
    va: ExactRational,
    vb: ExactRational,
    vic: ExactRational,
    vibp: ExactRational,
    viby: ExactRational,
}

fn gather(k: u32, p: u64, needed: &[ReprType]) -> Result<Option<Counts>> {
    let mut vals = [(); 10].map(|_| ExactRational::zero());
    for (slot, t) in vals.iter_mut().zip(ReprType::COUNTED) {
        if !needed.contains(&t) {
            continue;
        }
        match count(k, p, t)?.value {
            CountValue::Known(v) => *slot = ExactRational::from(v),
            CountValue::Unknown => return Ok(None),
        }
    }
    let [i, iia, iib, comb, iva, va, vb, vibp, viby, vic] = vals;
    Ok(Some(Counts {
        i,
        iia,
        iib,
        comb,
        iva,
        va,
        vb,
        vic,
        vibp,
        viby,
    }))
}

fn needed_for(h: SubgroupKind) -> &'static [ReprType] {
    use ReprType::*;
    match h {
        SubgroupKind::Full => &[I, IIb],
        SubgroupKind::Paramodular => &[I, IIa, IIb, Vb, VIc],
        SubgroupKind::Siegel => &[I, IIa, IIb, IIIaVIab, Vb, VIbP, VIbY, VIc],
        SubgroupKind::Klingen => &[I, IIa, IIb, IIIaVIab, Va, Vb, VIbP, VIbY, VIc],
        SubgroupKind::Borel => &ReprType::COUNTED,
    }
}

fn dim_from(c: &Counts, h: SubgroupKind) -> ExactRational {
    let half = ExactRational::new(1, 2);
    let full = &c.i + &c.iib;
    let kp = 2 * &c.i + &c.iia + &c.iib + &c.vb + &c.vic;
    let siegel = &kp + 2 * (&c.i + &c.iib + &c.comb) + &c.vibp + &c.viby - &c.vic;
    let klingen = &half * &siegel + ExactRational::new(3, 2) * &kp + &c.va - &c.i - &c.iib - &c.vb
        - &half * (&c.vibp + &c.viby + &c.vic);
    match h {
        SubgroupKind::Full => full,
        SubgroupKind::Paramodular => kp,
        SubgroupKind::Siegel => siegel,
        SubgroupKind::Klingen => klingen,
        SubgroupKind::Borel => {
            &c.iva - &kp + &siegel + 2 * &klingen - 2 * &c.i - 2 * &c.iib
        }
    }
}

fn to_value(v: ExactRational, formula: &'static str) -> Result<CountValue> {
    Ok(CountValue::Known(BigInt::from(crate::elliptic::to_dim(&v, formula)?)))
}

/// `dim S_k(H)` for the group `H` of level `p`.
pub fn dim_siegel_cusp(k: u32, p: u64, h: SubgroupKind) -> Result<CountValue> {
    match gather(k, p, needed_for(h))? {
        Some(c) => to_value(dim_from(&c, h), "dim S_k(H)"),
        None => Ok(CountValue::Unknown),
    }
}

/// Dimension of the newforms in `S_k(H)`; `H` must have level `p`.
pub fn dim_newforms(k: u32, p: u64, h: SubgroupKind) -> Result<CountValue> {
    use ReprType::*;
    let needed: &[ReprType] = match h {
        SubgroupKind::Full => {
            return Err(Error::InvalidArgument(
                "newforms are defined for the level-p groups only".into(),
            ))
        }
        SubgroupKind::Paramodular => &[IIa, Vb, VIc],
        SubgroupKind::Borel => &[IVa],
        SubgroupKind::Siegel => &[IIa, IIIaVIab, Vb, VIbP, VIbY],
        SubgroupKind::Klingen => &[IIIaVIab, Va],
    };
    let Some(c) = gather(k, p, needed)? else {
        return Ok(CountValue::Unknown);
    };
    let v = match h {
        SubgroupKind::Paramodular => &c.iia + &c.vb + &c.vic,
        SubgroupKind::Borel => c.iva,
        SubgroupKind::Siegel => &c.iia + 2 * &c.comb + &c.vb + &c.vibp + &c.viby,
        _ => &c.comb + &c.va,
    };
    to_value(v, "dim S_k^new(H)")
}

/// Newforms in `S_k(K(p))` that are not lifts; equal to `s_k(p, IIa)`.
pub fn dim_newforms_paramodular_g(k: u32, p: u64) -> Result<CountValue> {
    Ok(count(k, p, ReprType::IIa)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::is_prime;

    fn known(v: CountValue) -> BigInt {
        v.known().cloned().expect("known")
    }

    fn n(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn examples() {
        for p in [2u64, 5, 13] {
            assert_eq!(known(dim_siegel_cusp(10, p, SubgroupKind::Full).unwrap()), n(1));
        }
        assert_eq!(known(dim_siegel_cusp(3, 19, SubgroupKind::Paramodular).unwrap()), n(1));
        assert_eq!(known(dim_siegel_cusp(2, 3, SubgroupKind::Borel).unwrap()), n(0));
        assert_eq!(known(dim_newforms(3, 19, SubgroupKind::Paramodular).unwrap()), n(1));
        assert_eq!(known(dim_newforms(3, 11, SubgroupKind::Borel).unwrap()), n(2));
        assert_eq!(known(dim_newforms_paramodular_g(19, 2).unwrap()), n(1));
        assert_eq!(known(dim_newforms_paramodular_g(3, 19).unwrap()), n(0));
        assert_eq!(known(dim_newforms_paramodular_g(7, 13).unwrap()), n(2));
        assert!(dim_newforms(5, 5, SubgroupKind::Full).is_err());
    }

    #[test]
    fn table_rows_and_packet_sums() {
        let t = FixedVectorDimTable::standard();
        use SubgroupKind::*;
        assert_eq!(t.get(Siegel, "VIa") + t.get(Siegel, "VIb"), 2);
        assert_eq!(t.get(Borel, "VIa") + t.get(Borel, "VIb"), 4);
        assert_eq!(t.get(Klingen, "VIa"), 1);
        assert_eq!(t.get(Paramodular, "IIIa"), 0);
        assert_eq!(t.row(Full).len(), 2);
    }

    #[test]
    fn weight_one_vanishes() {
        for p in (2..50u64).filter(|&p| is_prime(p)) {
            for h in SubgroupKind::ALL {
                assert_eq!(known(dim_siegel_cusp(1, p, h).unwrap()), n(0));
                if h != SubgroupKind::Full {
                    assert_eq!(known(dim_newforms(1, p, h).unwrap()), n(0));
                }
            }
        }
    }

    #[test]
    fn unknown_only_at_weight_two() {
        for p in [5u64, 7, 11] {
            assert!(dim_siegel_cusp(2, p, SubgroupKind::Borel).unwrap().is_unknown());
            assert!(!dim_siegel_cusp(2, p, SubgroupKind::Full).unwrap().is_unknown());
            assert!(!dim_siegel_cusp(3, p, SubgroupKind::Borel).unwrap().is_unknown());
        }
        for p in [2u64, 3] {
            for h in SubgroupKind::ALL {
                assert!(!dim_siegel_cusp(2, p, h).unwrap().is_unknown());
            }
        }
    }

    #[test]
    fn containment_monotonicity() {
        use SubgroupKind::*;
        for p in [2u64, 3, 5, 7, 11] {
            for k in 3..=60u32 {
                let d = |h| known(dim_siegel_cusp(k, p, h).unwrap());
                let (full, si, kl, b) = (d(Full), d(Siegel), d(Klingen), d(Borel));
                assert!(b >= si && si >= full, "p = {p}, k = {k}");
                assert!(b >= kl && kl >= full, "p = {p}, k = {k}");
                assert!(d(Paramodular) >= full, "p = {p}, k = {k}");
            }
        }
    }

    // Sum d_{H, type} * s_k(type) straight from the table, with the combined
    // count split as IIIa = comb - g and generic VIa = VIb = g, VIb also
    // carrying the two lift packets. The result must not depend on g.
    fn from_table(c: &Counts, h: SubgroupKind, g: i64) -> ExactRational {
        let t = FixedVectorDimTable::standard();
        let g = ExactRational::from(g);
        let parts: [(&str, ExactRational); 11] = [
            ("I", c.i.clone()),
            ("IIa", c.iia.clone()),
            ("IIb", c.iib.clone()),
            ("IIIa", &c.comb - &g),
            ("IVa", c.iva.clone()),
            ("Va", c.va.clone()),
            ("Vb", c.vb.clone()),
            ("VIa", g.clone()),
            ("VIb", &g + &c.vibp + &c.viby),
            ("VIc", c.vic.clone()),
            ("", ExactRational::zero()),
        ];
        parts
            .iter()
            .map(|(l, v)| v * ExactRational::from(t.get(h, l)))
            .sum()
    }

    #[test]
    fn round_trip_through_fixed_vector_table() {
        for p in [5u64, 13] {
            for k in 3..=100u32 {
                let c = gather(k, p, &ReprType::COUNTED).unwrap().unwrap();
                for h in SubgroupKind::ALL {
                    let solved = dim_from(&c, h);
                    for g in [0i64, 1, 7] {
                        assert_eq!(from_table(&c, h, g), solved, "{h}, p = {p}, k = {k}");
                    }
                }
            }
        }
    }
}
