//! Exact rational helpers: conversions, falling factorials, and rigorous
//! comparison of a rational against `c * exp(-x)`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> BigRational {
    BigRational::new(num.into(), den.into())
}

pub fn from_biguint(num: &BigUint, den: &BigUint) -> BigRational {
    BigRational::new(BigInt::from(num.clone()), BigInt::from(den.clone()))
}

/// `p/q` in lowest terms (`p` alone when `q = 1`).
pub fn render(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// `(n)_j = n (n - 1) ... (n - j + 1)`.
pub fn falling_factorial(n: u64, j: u64) -> BigUint {
    (0..j).fold(BigUint::one(), |acc, i| acc * BigUint::from(n - i))
}

/// Rational enclosure `lo <= exp(-x) <= hi` for `x >= 0`, using `terms`
/// Taylor terms of `exp(x)` and a geometric tail bound.
pub fn exp_neg_enclosure(x: &BigRational, terms: usize) -> (BigRational, BigRational) {
    assert!(!x.is_negative(), "exponent must be non-negative");
    if x.is_zero() {
        return (BigRational::one(), BigRational::one());
    }
    // the geometric tail bound needs terms + 2 > x
    let min_terms = x.ceil().to_integer().to_usize().unwrap_or(usize::MAX).saturating_add(2);
    let terms = terms.max(min_terms);
    let mut term = BigRational::one();
    let mut partial = BigRational::one();
    for i in 1..=terms {
        term = term * x / BigRational::from_integer(BigInt::from(i));
        partial += &term;
    }
    let next = term * x / BigRational::from_integer(BigInt::from(terms + 1));
    let ratio_bound = x / BigRational::from_integer(BigInt::from(terms + 2));
    let tail = next / (BigRational::one() - ratio_bound);
    let upper_exp = &partial + tail;
    (upper_exp.recip(), partial.recip())
}

/// Decides `value <= scale * exp(-x)` exactly (`scale > 0`, `x >= 0`).
pub fn le_scaled_exp_neg(value: &BigRational, scale: &BigRational, x: &BigRational) -> bool {
    let target = value / scale;
    let mut terms = 32;
    loop {
        let (lo, hi) = exp_neg_enclosure(x, terms);
        if target <= lo {
            return true;
        }
        if target > hi {
            return false;
        }
        // `target` can equal exp(-x) only when x = 0, which is exact above.
        terms *= 2;
        assert!(terms <= 1 << 16, "enclosure failed to separate values");
    }
}

pub fn le_exp_neg(value: &BigRational, x: &BigRational) -> bool {
    le_scaled_exp_neg(value, &BigRational::one(), x)
}
