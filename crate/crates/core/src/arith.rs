//! Exact integers, exact ratios and a factorial cache sized for a whole scan.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Signed arbitrary-precision integer. Path counts themselves are kept as
/// [`BigUint`]; differences of counts land here.
pub type ExactInt = BigInt;

/// Environment variable that overrides the default cache capacity.
pub const NMAX_ENV: &str = "CATSORT_NMAX";

/// Immutable factorial table answering `C(m, k)` for every `m <= 2 * n_max`.
///
/// Built once per process and then shared read-only between workers.
#[derive(Debug, Clone)]
pub struct BinomialCache {
    n_max: u32,
    fact: Vec<BigUint>,
    ln_fact: Vec<f64>,
}

impl BinomialCache {
    pub const DEFAULT_N_MAX: u32 = 2000;

    pub fn new(n_max: u32) -> Self {
        let top = 2 * n_max as usize;
        let mut fact = Vec::with_capacity(top + 1);
        fact.push(BigUint::one());
        for k in 1..=top {
            let next = &fact[k - 1] * (k as u64);
            fact.push(next);
        }
        // Kahan-compensated running sum keeps ln(m!) within a few ulps.
        let mut ln_fact = Vec::with_capacity(top + 1);
        let (mut sum, mut comp) = (0.0f64, 0.0f64);
        ln_fact.push(0.0);
        for k in 1..=top {
            let y = (k as f64).ln() - comp;
            let t = sum + y;
            comp = (t - sum) - y;
            sum = t;
            ln_fact.push(sum);
        }
        BinomialCache { n_max, fact, ln_fact }
    }

    /// Cache sized from `CATSORT_NMAX`, falling back to [`Self::DEFAULT_N_MAX`].
    pub fn from_env() -> Result<Self> {
        match std::env::var(NMAX_ENV) {
            Ok(raw) => {
                let n_max = raw.trim().parse::<u32>().map_err(|_| {
                    Error::domain(format!("{NMAX_ENV}={raw:?} is not a non-negative integer"))
                })?;
                Ok(Self::new(n_max))
            }
            Err(_) => Ok(Self::new(Self::DEFAULT_N_MAX)),
        }
    }

    pub fn n_max(&self) -> u32 {
        self.n_max
    }

    fn check_top(&self, m: u64) -> Result<()> {
        if m > 2 * self.n_max as u64 {
            Err(Error::Capacity { top: m, required_n_max: m.div_ceil(2) })
        } else {
            Ok(())
        }
    }

    /// Exact `C(m, k)`; zero when `k < 0` or `k > m`.
    pub fn binomial(&self, m: i64, k: i64) -> Result<BigUint> {
        if m < 0 {
            return Err(Error::domain(format!("binomial top index {m} is negative")));
        }
        self.check_top(m as u64)?;
        if k < 0 || k > m {
            return Ok(BigUint::zero());
        }
        let (m, k) = (m as usize, k as usize);
        let den = &self.fact[k] * &self.fact[m - k];
        Ok(&self.fact[m] / den)
    }

    /// `Cat(n) = C(2n, n) / (n + 1)`.
    pub fn catalan(&self, n: u32) -> Result<BigUint> {
        if n > self.n_max {
            return Err(Error::Capacity { top: 2 * n as u64, required_n_max: n as u64 });
        }
        let central = self.binomial(2 * n as i64, n as i64)?;
        Ok(central / (n as u64 + 1))
    }

    /// Natural log of `C(m, k)` for `0 <= k <= m <= 2 * n_max`.
    pub(crate) fn ln_binomial(&self, m: usize, k: usize) -> f64 {
        debug_assert!(k <= m && m < self.ln_fact.len());
        self.ln_fact[m] - self.ln_fact[k] - self.ln_fact[m - k]
    }

    pub(crate) fn require_n(&self, n: u32) -> Result<()> {
        self.check_top(2 * n as u64)
    }
}

/// `num / den` as an `f64` to within a few ulps, without overflowing on
/// operands far beyond `f64::MAX`.
pub fn ratio_to_f64(num: &BigUint, den: &BigUint) -> f64 {
    if den.is_zero() {
        return f64::NAN;
    }
    if num.is_zero() {
        return 0.0;
    }
    // Top 64 bits of each side, with the dropped bits folded into a binary exponent.
    let top = |x: &BigUint| -> (f64, i64) {
        let shift = x.bits().saturating_sub(64);
        ((x >> shift).to_f64().expect("64-bit value"), shift as i64)
    };
    let (n, en) = top(num);
    let (d, ed) = top(den);
    let mut value = n / d;
    let mut exp = en - ed;
    while exp > 0 && value.is_finite() {
        let step = exp.min(1000);
        value *= 2f64.powi(step as i32);
        exp -= step;
    }
    while exp < 0 && value != 0.0 {
        let step = exp.max(-1000);
        value *= 2f64.powi(step as i32);
        exp -= step;
    }
    value
}

/// Exact rational in lowest terms with a positive denominator.
///
/// Ordering is exact (cross-multiplication), never through floats.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRatio(BigRational);

impl ExactRatio {
    pub fn new(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::domain("ratio with zero denominator"));
        }
        Ok(ExactRatio(BigRational::new(num, den)))
    }

    /// `num / den` for non-negative counts; `den` must be positive.
    pub fn from_counts(num: &BigUint, den: &BigUint) -> Self {
        assert!(!den.is_zero(), "count ratio with zero denominator");
        let num = BigInt::from_biguint(Sign::Plus, num.clone());
        let den = BigInt::from_biguint(Sign::Plus, den.clone());
        ExactRatio(BigRational::new(num, den))
    }

    pub fn from_integer(value: impl Into<BigInt>) -> Self {
        ExactRatio(BigRational::from_integer(value.into()))
    }

    pub fn zero() -> Self {
        ExactRatio(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactRatio(BigRational::one())
    }

    pub fn half() -> Self {
        ExactRatio(BigRational::new(BigInt::one(), BigInt::from(2)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    /// Compares against `1/2` as `2·num` vs `den`.
    pub fn cmp_half(&self) -> Ordering {
        (self.numer() * 2u32).cmp(self.denom())
    }

    /// `1 - self`.
    pub fn complement(&self) -> Self {
        ExactRatio(BigRational::one() - &self.0)
    }

    /// `|self - (1 - self)| = |2·self - 1|`.
    pub fn margin(&self) -> Self {
        let two = BigRational::from_integer(BigInt::from(2));
        ExactRatio((&self.0 * two - BigRational::one()).abs())
    }

    pub fn to_f64(&self) -> f64 {
        let magnitude = ratio_to_f64(self.numer().magnitude(), self.denom().magnitude());
        if self.numer().is_negative() {
            -magnitude
        } else {
            magnitude
        }
    }

    /// Integer value, if the ratio is integral.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.to_integer())
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for ExactRatio {
    fn from(value: BigRational) -> Self {
        ExactRatio(value)
    }
}

impl fmt::Display for ExactRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for ExactRatio {
            type Output = ExactRatio;
            fn $method(self, rhs: ExactRatio) -> ExactRatio {
                ExactRatio(self.0.$method(rhs.0))
            }
        }
        impl<'a> $tr<&'a ExactRatio> for &'a ExactRatio {
            type Output = ExactRatio;
            fn $method(self, rhs: &'a ExactRatio) -> ExactRatio {
                ExactRatio((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

/// Exact `a / b` for integers known to divide; panics otherwise.
pub(crate) fn exact_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    assert!(r.is_zero(), "inexact division {a} / {b}");
    q
}
