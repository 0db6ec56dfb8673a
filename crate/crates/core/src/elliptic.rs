//! Dimensions of elliptic cusp form spaces: level one, `Gamma0(p)`, the new
//! subspace, and its split by the sign of the functional equation.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::arith::{
    kronecker_delta, rat, require_prime, seq, symbol_minus_one, symbol_minus_three, ExactRational,
    SeqName,
};
use crate::classnum::{b_param, class_number};
use crate::error::{Error, Result};

/// Sign of the functional equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// All four dimensions at one even weight and prime level.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EllipticDims {
    pub k: u32,
    pub p: u64,
    pub full: u64,
    pub new: u64,
    pub plus_new: u64,
    pub minus_new: u64,
}

impl EllipticDims {
    pub fn compute(k: u32, p: u64) -> Result<Self> {
        Ok(EllipticDims {
            k,
            p,
            full: dim_cusp_gamma0(k, p)?,
            new: dim_new_gamma0(k, p)?,
            plus_new: dim_new_pm(k, p, Sign::Plus)?,
            minus_new: dim_new_pm(k, p, Sign::Minus)?,
        })
    }
}

pub(crate) fn to_dim(v: &ExactRational, formula: &'static str) -> Result<u64> {
    let n: BigInt = v.expect_integer(formula)?;
    n.to_u64().ok_or_else(|| Error::Negative {
        formula,
        value: n.to_string(),
    })
}

fn even_weight(k: u32) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidWeight(k));
    }
    if k % 2 == 1 {
        return Err(Error::OddWeight(k));
    }
    Ok(())
}

fn quarter_sign(k: u32) -> i64 {
    // (-1)^(k/2)
    if (k / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `dim S_k(SL2(Z))`; zero for odd `k`.
pub fn dim_cusp_sl2(k: u32) -> Result<u64> {
    if k == 0 {
        return Err(Error::InvalidWeight(k));
    }
    if k % 2 == 1 {
        return Ok(0);
    }
    let c = seq(SeqName::C3, k) + seq(SeqName::C3Hat, k);
    let v = rat(i64::from(k) - 1, 12) + rat(quarter_sign(k), 4) + rat(c, 3) - rat(1, 2)
        + kronecker_delta(i64::from(k), 2);
    to_dim(&v, "dim S_k(SL2(Z))")
}

/// `dim S_k(Gamma0(p))` for even `k >= 2`.
pub fn dim_cusp_gamma0(k: u32, p: u64) -> Result<u64> {
    even_weight(k)?;
    require_prime(p)?;
    let m1 = symbol_minus_one(p)?;
    let m3 = symbol_minus_three(p)?;
    let c = seq(SeqName::C3, k) + seq(SeqName::C3Hat, k);
    let v = rat(i64::from(k) - 1, 12) * ExactRational::from(p + 1)
        + rat(quarter_sign(k) * (1 + m1), 4)
        + rat(c * (1 + m3), 3)
        - 1
        + kronecker_delta(i64::from(k), 2);
    to_dim(&v, "dim S_k(Gamma0(p))")
}

/// `dim S_k^new(Gamma0(p)) = dim S_k(Gamma0(p)) - 2 dim S_k(SL2(Z))`.
pub fn dim_new_gamma0(k: u32, p: u64) -> Result<u64> {
    let full = dim_cusp_gamma0(k, p)?;
    let old = 2 * dim_cusp_sl2(k)?;
    full.checked_sub(old).ok_or(Error::Negative {
        formula: "dim S_k^new(Gamma0(p))",
        value: format!("{full} - {old}"),
    })
}

/// Dimension of the span of newforms of sign `sign` in `S_k^new(Gamma0(p))`.
///
/// For `p = 2, 3` the weight-2 new space is empty and both signs give 0.
pub fn dim_new_pm(k: u32, p: u64, sign: Sign) -> Result<u64> {
    let new = ExactRational::from(dim_new_gamma0(k, p)?);
    let s = sign.as_i64();
    let half = rat(1, 2);
    let v = match p {
        2 | 3 if k == 2 => return Ok(0),
        2 => {
            let corr = if matches!(k % 8, 0 | 2) { half.clone() } else { ExactRational::zero() };
            &new * &half + corr * s
        }
        3 => {
            let corr = if matches!(k % 12, 0 | 2 | 6 | 8) {
                half.clone()
            } else {
                ExactRational::zero()
            };
            &new * &half + corr * s
        }
        _ => {
            let hb = (class_number(p)? * b_param(p)?) as i64;
            let corr = rat(hb, 2) - kronecker_delta(i64::from(k), 2);
            &new * &half + &half * corr * s
        }
    };
    to_dim(&v, "dim S_k^{+-,new}(Gamma0(p))")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::is_prime;

    #[test]
    fn level_one() {
        assert_eq!(dim_cusp_sl2(12).unwrap(), 1);
        assert_eq!(dim_cusp_sl2(2).unwrap(), 0);
        assert_eq!(dim_cusp_sl2(11).unwrap(), 0);
        assert_eq!(dim_cusp_sl2(18).unwrap(), 1);
        assert_eq!(dim_cusp_sl2(24).unwrap(), 2);
        assert!(dim_cusp_sl2(0).is_err());
    }

    // Classical dimension of S_k(SL2(Z)) by the floor rule: k/12 rounded down,
    // minus one when k = 2 (mod 12). Independent of the c3 sequences.
    #[test]
    fn level_one_floor_rule() {
        for k in (2..=400u32).step_by(2) {
            let expected = match (k, k % 12) {
                (2, _) => 0,
                (_, 2) => k / 12 - 1,
                _ => k / 12,
            };
            assert_eq!(dim_cusp_sl2(k).unwrap(), u64::from(expected), "k = {k}");
        }
    }

    #[test]
    fn gamma0_examples() {
        assert_eq!(dim_cusp_gamma0(2, 11).unwrap(), 1);
        assert_eq!(dim_cusp_gamma0(4, 19).unwrap(), 4);
        assert_eq!(dim_cusp_gamma0(2, 5).unwrap(), 0);
        assert!(matches!(dim_cusp_gamma0(3, 5), Err(Error::OddWeight(3))));
        assert!(dim_cusp_gamma0(4, 15).is_err());
    }

    #[test]
    fn new_examples() {
        assert_eq!(dim_new_gamma0(2, 11).unwrap(), 1);
        assert_eq!(dim_new_gamma0(4, 19).unwrap(), 4);
        assert_eq!(
            dim_new_gamma0(18, 5).unwrap(),
            dim_cusp_gamma0(18, 5).unwrap() - 2
        );
    }

    #[test]
    fn sign_split_examples() {
        assert_eq!(dim_new_pm(2, 11, Sign::Minus).unwrap(), 0);
        assert_eq!(dim_new_pm(2, 11, Sign::Plus).unwrap(), 1);
        assert_eq!(dim_new_pm(4, 19, Sign::Minus).unwrap(), 1);
        let n = dim_new_gamma0(18, 2).unwrap();
        assert_eq!(dim_new_pm(18, 2, Sign::Plus).unwrap(), (n + 1) / 2);
        assert_eq!(dim_new_pm(2, 2, Sign::Plus).unwrap(), 0);
        assert_eq!(dim_new_pm(2, 3, Sign::Minus).unwrap(), 0);
        assert!(dim_new_pm(5, 7, Sign::Plus).is_err());
    }

    #[test]
    fn split_sums_to_new() {
        for p in (2..100u64).filter(|&p| is_prime(p)) {
            for k in (2..=100u32).step_by(2) {
                let d = EllipticDims::compute(k, p).unwrap();
                assert_eq!(d.plus_new + d.minus_new, d.new, "k = {k}, p = {p}");
                assert_eq!(d.new, d.full - 2 * dim_cusp_sl2(k).unwrap());
            }
        }
    }

    #[test]
    fn weight_two_minus_space() {
        for p in (5..200u64).filter(|&p| is_prime(p)) {
            let new = dim_new_gamma0(2, p).unwrap() as i64;
            let hb = (class_number(p).unwrap() * b_param(p).unwrap()) as i64;
            let minus = dim_new_pm(2, p, Sign::Minus).unwrap() as i64;
            assert_eq!(4 * minus, 2 * new - hb + 2, "p = {p}");
        }
    }
}
