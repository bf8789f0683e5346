use super::{PrimeList, UnitPoint};
use crate::error::{Error, Result};

fn check_args(i: u64, base: u64) -> Result<()> {
    if i == 0 {
        return Err(Error::invalid("sequence index must be >= 1"));
    }
    if base < 2 {
        return Err(Error::invalid(format!("radix must be >= 2, got {base}")));
    }
    Ok(())
}

/// Base-`base` digits of `i`, least significant first.
fn digits(mut i: u64, base: u64) -> impl Iterator<Item = u64> {
    std::iter::from_fn(move || {
        if i == 0 {
            None
        } else {
            let d = i % base;
            i /= base;
            Some(d)
        }
    })
}

/// Radical inverse of `i` in base `base`: the digits of `i` mirrored about
/// the radix point.
///
/// Accumulated Horner-style from the most significant digit of the result
/// inwards, so each step divides once and the error stays within a few ulps.
pub fn radical_inverse(i: u64, base: u64) -> Result<f64> {
    check_args(i, base)?;
    let digits: Vec<u64> = digits(i, base).collect();
    let r = base as f64;
    Ok(digits.iter().rev().fold(0.0, |acc, &d| (acc + d as f64) / r))
}

/// Exact radical inverse as `(numerator, denominator)` with denominator
/// `base^m`, `m` the number of digits of `i`. Not reduced.
pub fn radical_inverse_fraction(i: u64, base: u64) -> Result<(u64, u64)> {
    check_args(i, base)?;
    let overflow = || Error::Capacity(format!("radical inverse of {i} in base {base} overflows u64"));
    let mut num = 0u64;
    let mut den = 1u64;
    for d in digits(i, base) {
        num = num
            .checked_mul(base)
            .and_then(|n| n.checked_add(d))
            .ok_or_else(overflow)?;
        den = den.checked_mul(base).ok_or_else(overflow)?;
    }
    Ok((num, den))
}

/// Halton point `i` using the first `dim` primes as bases.
pub fn halton_point(i: u64, dim: usize, primes: &PrimeList) -> Result<UnitPoint> {
    if primes.len() < dim {
        return Err(Error::Capacity(format!(
            "Halton point of dimension {dim} needs {dim} prime bases, only {} available",
            primes.len()
        )));
    }
    primes.as_slice()[..dim]
        .iter()
        .map(|&p| radical_inverse(i, p))
        .collect::<Result<Vec<_>>>()
        .map(UnitPoint::new)
}
