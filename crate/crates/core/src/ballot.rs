//! Monotone lattice paths that stay weakly above the diagonal `y = x`.
//!
//! The two segment counts of the bimodality argument live here. For a
//! height `h` and offset `z`, put `x = h + 1 - z` and consider the
//! half-integer points `A = (x - 1/2, h + 1/2)` and `B = (x - 3/2, h - 1/2)`.
//! Paths passing SE of `B` but not of `A` and vice versa differ exactly by
//! the paths through the horizontal segment `(x-2,h) -> (x,h)` (counted by
//! `M_1`) and the vertical segment `(x-1,h-1) -> (x-1,h+1)` (counted by
//! `M_2`). The points are never materialized; every API takes `(n, h, z)`.

use num_bigint::{BigInt, BigUint, Sign};
use serde::{Deserialize, Serialize};

use crate::arith::{exact_div, BinomialCache, ExactInt};
use crate::{Error, Result};

/// A lattice point; path-count queries require `x <= y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePoint {
    pub x: u32,
    pub y: u32,
}

impl LatticePoint {
    pub const fn new(x: u32, y: u32) -> Self {
        LatticePoint { x, y }
    }
}

/// `f(a, b)`: number of monotone paths `(0,0) -> (a,b)` weakly above the
/// diagonal, `C(a+b, a) - C(a+b, a-1)`.
pub fn ballot_count(cache: &BinomialCache, a: u32, b: u32) -> Result<BigUint> {
    if a > b {
        return Err(Error::domain(format!("ballot_count needs a <= b, got ({a}, {b})")));
    }
    let top = a as i64 + b as i64;
    let all = cache.binomial(top, a as i64)?;
    let bad = cache.binomial(top, a as i64 - 1)?;
    Ok(all - bad)
}

/// Numbers of Catalan paths through the two segments of the bimodality
/// argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathCountPair {
    /// Paths containing `(x-2, h) -> (x, h)`.
    pub m1: BigUint,
    /// Paths containing `(x-1, h-1) -> (x-1, h+1)`.
    pub m2: BigUint,
}

impl PathCountPair {
    pub fn difference(&self) -> ExactInt {
        BigInt::from_biguint(Sign::Plus, self.m2.clone()) - BigInt::from_biguint(Sign::Plus, self.m1.clone())
    }
}

fn check_segment_domain(n: u32, h: u32, z: u32) -> Result<u32> {
    if n < 2 || h < 1 || h > n - 1 || z < 1 || z + 1 > h {
        return Err(Error::domain(format!(
            "segment counts need 1 <= h <= n-1 and 1 <= z <= h-1, got n={n}, h={h}, z={z}"
        )));
    }
    Ok(h + 1 - z)
}

/// `M_1 = f(x-2, h)·f(n-h, n-x)` and `M_2 = f(x-1, h-1)·f(n-h-1, n-x+1)`
/// with `x = h + 1 - z`.
pub fn segment_counts(cache: &BinomialCache, n: u32, h: u32, z: u32) -> Result<PathCountPair> {
    let x = check_segment_domain(n, h, z)?;
    let m1 = ballot_count(cache, x - 2, h)? * ballot_count(cache, n - h, n - x)?;
    let m2 = ballot_count(cache, x - 1, h - 1)? * ballot_count(cache, n - h - 1, n - x + 1)?;
    Ok(PathCountPair { m1, m2 })
}

/// `M_2 - M_1` through its single-product closed form
///
/// `C(x+h-2, x-1)·C(2n-x-h, n-h-1)·(h-x+1)(h-x+2)(h-x+3)(n-x-h+1) / (h(h+1)(n-h)(n-x+2))`.
///
/// Positive iff `h + x < n + 1`, zero on `h + x = n + 1`.
pub fn path_difference(cache: &BinomialCache, n: u32, h: u32, z: u32) -> Result<ExactInt> {
    let x = check_segment_domain(n, h, z)? as i64;
    let (n, h) = (n as i64, h as i64);
    let b1 = BigInt::from_biguint(Sign::Plus, cache.binomial(x + h - 2, x - 1)?);
    let b2 = BigInt::from_biguint(Sign::Plus, cache.binomial(2 * n - x - h, n - h - 1)?);
    let d = h - x;
    let num = b1 * b2 * BigInt::from((d + 1) * (d + 2) * (d + 3)) * BigInt::from(n - x - h + 1);
    let den = BigInt::from(h * (h + 1)) * BigInt::from((n - h) * (n - x + 2));
    Ok(exact_div(&num, &den))
}
