//! Local Plancherel masses of the tempered Iwahori-spherical classes,
//! parahoric volumes, and the large-weight comparison with the counts.

use std::fmt;

use num_bigint::BigInt;

use crate::arith::{require_prime, ExactRational};
use crate::counts::{count, ReprType};
use crate::error::{Error, Result};

/// Global measure of `G(Q)\G(A)` under the signed Euler-Poincare normalization,
/// as `(numerator, denominator)`. Recorded for reference; nothing reads it.
pub const SIGNED_MEASURE: (i64, i64) = (-1, 1440);

/// `2^6 * 3^2 * 5`, the normalizer in [`limit_ratio`].
pub const LIMIT_NORMALIZER: i64 = 2880;

/// Tempered Iwahori-spherical classes, grouped by Sally-Tadic group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PlancherelType {
    I,
    II,
    III,
    IV,
    V,
    VI,
}

impl PlancherelType {
    pub const ALL: [PlancherelType; 6] = [
        PlancherelType::I,
        PlancherelType::II,
        PlancherelType::III,
        PlancherelType::IV,
        PlancherelType::V,
        PlancherelType::VI,
    ];

    pub fn label(self) -> &'static str {
        match self {
            PlancherelType::I => "I",
            PlancherelType::II => "II",
            PlancherelType::III => "III",
            PlancherelType::IV => "IV",
            PlancherelType::V => "V",
            PlancherelType::VI => "VI",
        }
    }

    /// Coefficients of the mass as a polynomial in `q`, lowest degree first,
    /// over a common denominator: `(coefficients, denominator)`.
    fn polynomial(self) -> (&'static [i64], i64) {
        match self {
            PlancherelType::I => (&[1], 1),
            // q^2 - 1
            PlancherelType::II => (&[-1, 0, 1], 1),
            // (q - 1)(q^2 + q + 2) / 2
            PlancherelType::III => (&[-2, 1, 0, 1], 2),
            // (q - 1)(q^3 - 1)
            PlancherelType::IV => (&[1, -1, 0, -1, 1], 1),
            // q (q - 1)^2 / 2
            PlancherelType::V => (&[0, 1, -2, 1], 2),
            PlancherelType::VI => (&[], 1),
        }
    }
}

impl fmt::Display for PlancherelType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A parahoric subgroup of `GSp(4, Z_p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParahoricKind {
    /// Hyperspecial `K`.
    Hyperspecial,
    Paramodular,
    Klingen,
    Siegel,
    Iwahori,
}

impl ParahoricKind {
    pub const ALL: [ParahoricKind; 5] = [
        ParahoricKind::Hyperspecial,
        ParahoricKind::Paramodular,
        ParahoricKind::Klingen,
        ParahoricKind::Siegel,
        ParahoricKind::Iwahori,
    ];

    pub fn label(self) -> &'static str {
        match self {
            ParahoricKind::Hyperspecial => "K",
            ParahoricKind::Paramodular => "K(p)",
            ParahoricKind::Klingen => "Kl(p)",
            ParahoricKind::Siegel => "Si(p)",
            ParahoricKind::Iwahori => "I",
        }
    }

    /// Dimensions of fixed vectors in the tempered classes.
    pub fn tempered_row(self) -> &'static [(PlancherelType, i64)] {
        use PlancherelType::*;
        match self {
            ParahoricKind::Hyperspecial => &[(I, 1)],
            ParahoricKind::Paramodular => &[(I, 2), (II, 1)],
            ParahoricKind::Klingen => &[(I, 4), (II, 2), (III, 1), (V, 1), (VI, 1)],
            ParahoricKind::Siegel => &[(I, 4), (II, 1), (III, 2), (VI, 2)],
            ParahoricKind::Iwahori => &[(I, 8), (II, 4), (III, 4), (IV, 1), (V, 2), (VI, 4)],
        }
    }
}

fn check_q(q: u64) -> Result<ExactRational> {
    if q < 2 {
        return Err(Error::InvalidResidueSize(q));
    }
    Ok(ExactRational::from(q))
}

/// `m_omega` at residue field size `q`.
pub fn plancherel_mass(q: u64, omega: PlancherelType) -> Result<ExactRational> {
    let x = check_q(q)?;
    let (coeffs, den) = omega.polynomial();
    let mut acc = ExactRational::zero();
    for &c in coeffs.iter().rev() {
        acc = acc * &x + c;
    }
    Ok(acc / den)
}

/// Volume of a parahoric subgroup, normalized so that `K` has volume 1.
pub fn parahoric_volume(q: u64, h: ParahoricKind) -> Result<ExactRational> {
    let x = check_q(q)?;
    let one_q = &x + 1;
    let one_q2 = &x * &x + 1;
    let index = match h {
        ParahoricKind::Hyperspecial => ExactRational::one(),
        ParahoricKind::Paramodular => one_q2,
        ParahoricKind::Klingen | ParahoricKind::Siegel => one_q * one_q2,
        ParahoricKind::Iwahori => &one_q * &one_q * one_q2,
    };
    Ok(ExactRational::one() / index)
}

/// `sum d_{H, omega} m_omega` for one parahoric.
pub fn mass_sum(q: u64, h: ParahoricKind) -> Result<ExactRational> {
    h.tempered_row()
        .iter()
        .map(|&(t, d)| Ok(plancherel_mass(q, t)? * d))
        .sum()
}

/// Whether `1 / Vol(H) == sum d_{H, omega} m_omega` for all five parahorics.
pub fn verify_mass_system(q: u64) -> Result<bool> {
    for h in ParahoricKind::ALL {
        let lhs = ExactRational::one() / parahoric_volume(q, h)?;
        if lhs != mass_sum(q, h)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The Plancherel class matching a counted type; the combined
/// IIIa+VIa/b count corresponds to III+VI, whose mass is that of III.
pub fn plancherel_class(omega: ReprType) -> Result<PlancherelType> {
    Ok(match omega {
        ReprType::I => PlancherelType::I,
        ReprType::IIa => PlancherelType::II,
        ReprType::IIIaVIab => PlancherelType::III,
        ReprType::IVa => PlancherelType::IV,
        ReprType::Va => PlancherelType::V,
        other => return Err(Error::NotGeneric(other.label().to_string())),
    })
}

/// Leading coefficients: `s_k(p, omega) = a (k-2)(k-1)(2k-3)/17280
/// + b 7 (-1)^k (k-2)(k-1)/1152 + O(k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AsymptoticCoefficients {
    pub omega: ReprType,
    pub a: ExactRational,
    pub b: ExactRational,
}

impl AsymptoticCoefficients {
    /// The two leading terms at weight `k`.
    pub fn leading_term(&self, k: u32) -> ExactRational {
        let k = i64::from(k);
        let quad = ExactRational::from((k - 2) * (k - 1));
        let sign = if k % 2 == 0 { 7 } else { -7 };
        &self.a * &quad * (2 * k - 3) / 17280 + &self.b * quad * sign / 1152
    }
}

pub fn asymptotic_coefficients(p: u64, omega: ReprType) -> Result<AsymptoticCoefficients> {
    require_prime(p)?;
    let p = ExactRational::from(p);
    let pm1 = &p - 1;
    let (a, b) = match omega {
        ReprType::I => (ExactRational::one(), ExactRational::one()),
        ReprType::IIa => (&p * &p - 1, ExactRational::zero()),
        ReprType::IIIaVIab => (
            &pm1 * (&p * &p + &p + 2) / 2,
            &pm1 * (&p + 3) / 2,
        ),
        ReprType::IVa => (&pm1 * (&p * &p * &p - 1), &pm1 * &pm1),
        ReprType::Va => (&p * &pm1 * &pm1 / 2, -(&pm1 * &pm1) / 2),
        other => return Err(Error::NotGeneric(other.label().to_string())),
    };
    Ok(AsymptoticCoefficients { omega, a, b })
}

/// `dim xi_{k,j} = (j+1)(k-2)(k+j-1)(2k+j-3)/6`.
pub fn dim_xi(k: u32, j: u32) -> Result<BigInt> {
    if k < 3 {
        return Err(Error::InvalidWeight(k));
    }
    let (k, j) = (BigInt::from(k), BigInt::from(j));
    let num = (&j + 1) * (&k - 2) * (&k + &j - 1) * (2 * &k + &j - 3);
    (ExactRational::from(num) / 6).expect_integer("dim xi_{k,j}")
}

/// `2880 s_k(p, omega) / dim xi_{k,0}`, which tends to `m_omega(p)`.
pub fn limit_ratio(k: u32, p: u64, omega: ReprType) -> Result<ExactRational> {
    plancherel_class(omega)?;
    let dx = dim_xi(k, 0)?;
    let s = count(k, p, omega)?.require_known()?.clone();
    Ok(ExactRational::from(s) * LIMIT_NORMALIZER / ExactRational::from(dx))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{is_prime, rat};

    fn prime_powers_upto(n: u64) -> Vec<u64> {
        (2..=n)
            .filter(|&q| {
                let p = (2..=q).find(|d| q % d == 0).unwrap();
                let mut r = q;
                while r % p == 0 {
                    r /= p;
                }
                r == 1 && is_prime(p)
            })
            .collect()
    }

    #[test]
    fn masses_at_two() {
        let m: Vec<String> = PlancherelType::ALL
            .iter()
            .map(|&t| plancherel_mass(2, t).unwrap().to_string())
            .collect();
        assert_eq!(m, ["1", "3", "4", "7", "1", "0"]);
        assert_eq!(plancherel_mass(49, PlancherelType::VI).unwrap(), ExactRational::zero());
        assert!(plancherel_mass(1, PlancherelType::I).is_err());
    }

    // Evaluate the factored forms directly rather than the expanded
    // coefficient lists.
    #[test]
    fn masses_match_factored_forms() {
        for q in 2..200i64 {
            let m = |t| plancherel_mass(q as u64, t).unwrap();
            assert_eq!(m(PlancherelType::III), rat((q - 1) * (q * q + q + 2), 2));
            assert_eq!(m(PlancherelType::IV), rat((q - 1) * (q * q * q - 1), 1));
            assert_eq!(m(PlancherelType::V), rat(q * (q - 1) * (q - 1), 2));
            assert_eq!(m(PlancherelType::II), rat(q * q - 1, 1));
        }
    }

    #[test]
    fn volumes() {
        assert_eq!(parahoric_volume(2, ParahoricKind::Paramodular).unwrap(), rat(1, 5));
        assert_eq!(parahoric_volume(3, ParahoricKind::Iwahori).unwrap(), rat(1, 160));
        assert_eq!(parahoric_volume(7, ParahoricKind::Hyperspecial).unwrap(), rat(1, 1));
    }

    #[test]
    fn mass_system() {
        assert_eq!(mass_sum(2, ParahoricKind::Iwahori).unwrap(), rat(45, 1));
        for q in prime_powers_upto(121) {
            assert!(verify_mass_system(q).unwrap(), "q = {q}");
        }
        assert!(prime_powers_upto(121).contains(&49));
        assert!(!prime_powers_upto(121).contains(&12));
    }

    #[test]
    fn coefficients_equal_masses() {
        for p in (2..100u64).filter(|&p| is_prime(p)) {
            for t in [ReprType::I, ReprType::IIa, ReprType::IIIaVIab, ReprType::IVa, ReprType::Va] {
                let a = asymptotic_coefficients(p, t).unwrap().a;
                assert_eq!(a, plancherel_mass(p, plancherel_class(t).unwrap()).unwrap());
            }
        }
        let c = asymptotic_coefficients(5, ReprType::Va).unwrap();
        assert_eq!((c.a, c.b), (rat(40, 1), rat(-8, 1)));
        let c = asymptotic_coefficients(2, ReprType::IVa).unwrap();
        assert_eq!((c.a, c.b), (rat(7, 1), rat(1, 1)));
        assert!(asymptotic_coefficients(5, ReprType::Vb).is_err());
    }

    #[test]
    fn xi_dimensions() {
        assert_eq!(dim_xi(3, 0).unwrap(), BigInt::from(1));
        assert_eq!(dim_xi(4, 2).unwrap(), BigInt::from(35));
        assert_eq!(dim_xi(12, 0).unwrap(), BigInt::from(385));
        assert!(dim_xi(2, 0).is_err());
        for k in 3..300i64 {
            let want = (k - 2) * (k - 1) * (2 * k - 3) / 6;
            assert_eq!(dim_xi(k as u32, 0).unwrap(), BigInt::from(want));
        }
        assert_eq!(64 * 9 * 5, LIMIT_NORMALIZER);
        assert_eq!(SIGNED_MEASURE.1, 32 * 9 * 5);
    }

    #[test]
    fn ratio_examples() {
        // no level-one cusp forms of weight 3, so the ratio starts at 0
        assert_eq!(limit_ratio(3, 5, ReprType::I).unwrap(), rat(0, 1));
        assert_eq!(limit_ratio(20, 5, ReprType::I).unwrap(), rat(2880, 2109));
        let r = limit_ratio(10000, 5, ReprType::IIa).unwrap().to_f64();
        assert!((r - 24.0).abs() < 0.24, "{r}");
        assert!(matches!(limit_ratio(2, 5, ReprType::IIa), Err(Error::InvalidWeight(2))));
        assert!(limit_ratio(4, 5, ReprType::Vb).is_err());
    }
}
