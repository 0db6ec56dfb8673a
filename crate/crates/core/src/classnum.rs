//! Class numbers of `Q(sqrt(-p))` by counting reduced binary quadratic forms,
//! and the parameter `b` that pairs with them in the sign-split new-space
//! dimensions.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::arith::{gcd_u64, require_prime};
use crate::error::{Error, Result};

/// Field data for `Q(sqrt(-p))`, `p >= 5` prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ImaginaryQuadraticData {
    pub p: u64,
    /// Field discriminant: `-p` when `p = 3 (mod 4)`, else `-4p`.
    pub discriminant: i64,
    pub h: u64,
    pub b: u64,
}

impl ImaginaryQuadraticData {
    pub fn for_prime(p: u64) -> Result<Self> {
        Ok(ImaginaryQuadraticData {
            p,
            discriminant: field_discriminant(p)?,
            h: class_number(p)?,
            b: b_param(p)?,
        })
    }

    /// The product `h*b` consumed by the lift and generic-type formulas.
    pub fn hb(&self) -> u64 {
        self.h * self.b
    }
}

fn check_large_prime(p: u64) -> Result<()> {
    require_prime(p)?;
    if p < 5 {
        return Err(Error::PrimeTooSmall { p, min: 5 });
    }
    Ok(())
}

pub fn field_discriminant(p: u64) -> Result<i64> {
    check_large_prime(p)?;
    let p = p as i64;
    Ok(if p % 4 == 3 { -p } else { -4 * p })
}

/// Number of reduced primitive forms `(a, b, c)` of discriminant `disc < 0`.
///
/// Reduced means `|b| <= a <= c`, with `b >= 0` whenever `|b| = a` or `a = c`.
pub fn reduced_form_count(disc: i64) -> u64 {
    assert!(disc < 0 && disc.rem_euclid(4) <= 1, "bad discriminant {disc}");
    let n = disc.unsigned_abs();
    let mut count = 0;
    let mut a = 1u64;
    // a <= sqrt(|D|/3)
    while 3 * a * a <= n {
        for b in -(a as i64) + 1..=(a as i64) {
            let b2 = (b * b) as u64;
            let num = b2 + n;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c < a || (c == a && b < 0) {
                continue;
            }
            if gcd_u64(gcd_u64(a, b.unsigned_abs()), c) == 1 {
                count += 1;
            }
        }
        a += 1;
    }
    count
}

fn memo() -> &'static Mutex<HashMap<u64, u64>> {
    static MEMO: OnceLock<Mutex<HashMap<u64, u64>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Class number of `Q(sqrt(-p))` for a prime `p >= 5`. Memoized per prime.
pub fn class_number(p: u64) -> Result<u64> {
    check_large_prime(p)?;
    if let Some(&h) = memo().lock().expect("class number memo poisoned").get(&p) {
        return Ok(h);
    }
    let h = reduced_form_count(field_discriminant(p)?);
    memo()
        .lock()
        .expect("class number memo poisoned")
        .insert(p, h);
    Ok(h)
}

/// `b = 1` for `p = 1 (mod 4)`, `2` for `p = 7 (mod 8)`, `4` for `p = 3 (mod 8)`.
pub fn b_param(p: u64) -> Result<u64> {
    check_large_prime(p)?;
    Ok(match p % 8 {
        1 | 5 => 1,
        7 => 2,
        _ => 4,
    })
}
