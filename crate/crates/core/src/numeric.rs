//! Exact integer helpers shared by the counting formulas.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// `C(m, 0), C(m, 1), ..., C(m, upto)` computed row by row from Pascal's rule.
pub fn binomial_prefix(m: usize, upto: usize) -> Vec<BigUint> {
    let width = upto + 1;
    let mut row = vec![BigUint::zero(); width];
    row[0] = BigUint::one();
    for _ in 0..m {
        for k in (1..width).rev() {
            let prev = row[k - 1].clone();
            row[k] += prev;
        }
    }
    row
}

/// `log2(value)`, accurate to double precision even when `value` has
/// millions of bits: the top 128 bits are converted and the rest is an
/// exact power of two.
pub fn log2_big(value: &BigUint) -> f64 {
    assert!(!value.is_zero(), "log2 of zero");
    let bits = value.bits();
    if bits <= 128 {
        return value.to_u128().expect("fits in 128 bits").to_f64().expect("finite").log2();
    }
    let shift = bits - 128;
    let top = (value >> shift).to_u128().expect("fits in 128 bits");
    (top as f64).log2() + shift as f64
}
