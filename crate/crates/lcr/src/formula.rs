//! Closed-form values of the rectilinear local crossing number of `K_n`.

use serde::Serialize;

use crate::{Error, Result};

/// The exact value of `lcr(K_n)` together with its congruence class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LcrValue {
    pub n: u64,
    pub value: u64,
    /// `n mod 3`.
    pub class: u8,
    /// True exactly for the two exceptional orders, n = 8 and n = 14.
    pub exceptional: bool,
}

/// `ceil((1/2) (n-3-ceil((n-3)/3)) ceil((n-3)/3))` for `n >= 3`.
///
/// All ceilings are exact integer arithmetic; no division-then-round.
pub fn ceiling_form(n: u64) -> u64 {
    assert!(n >= 3);
    let m = n - 3;
    let t = m.div_ceil(3);
    ((m - t) * t).div_ceil(2)
}

/// The congruence-class form, equal to [`ceiling_form`] for every `n >= 3`.
pub fn piecewise_form(n: u64) -> u64 {
    assert!(n >= 3);
    match n % 3 {
        0 => (n - 3) * (n - 3) / 9,
        1 => (n - 1) * (n - 4) / 9,
        _ => (n - 2) * (n - 2) / 9 - (n - 2) / 6,
    }
}

/// Exact `lcr(K_n)`: the ceiling form with the two exceptional orders
/// overridden (`lcr(K_8) = 4`, `lcr(K_14) = 15`); 0 for `n <= 2`.
pub fn lcr_formula(n: u64) -> LcrValue {
    let class = (n % 3) as u8;
    let (value, exceptional) = match n {
        0..=2 => (0, false),
        8 => (4, true),
        14 => (15, true),
        _ => {
            let v = ceiling_form(n);
            debug_assert_eq!(v, piecewise_form(n));
            (v, false)
        }
    };
    LcrValue { n, value, class, exceptional }
}

/// The congruence-class lower bound on `lcr(K_n)`, valid for all `n >= 3`
/// including the exceptional orders (where the true value exceeds it by one).
pub fn lower_bound_class(n: u64) -> Result<u64> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("lower bound needs n >= 3, got {n}")));
    }
    Ok(piecewise_form(n))
}
