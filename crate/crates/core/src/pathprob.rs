//! Visit probabilities of a uniform Catalan path `(0,0) -> (n,n)`.
//!
//! * `p_n(a,b)`: the path passes through `(a,b)`.
//! * `q_n(a,b)`: it uses the vertical edge `(a,b-1) -> (a,b)`.
//! * `r_n(a,b)`: it uses both vertical edges `(a,b-1) -> (a,b) -> (a,b+1)`.
//!
//! Each is a product of two ballot numbers over `Cat(n)`. The `*_count`
//! functions return that integer numerator; the row functions produce a
//! whole horizontal slice of numerators by walking the ballot ratios,
//! which is what the scans use.

use std::ops::Range;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::arith::{BinomialCache, ExactRatio};
use crate::ballot::{ballot_count, LatticePoint};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VisitKind {
    Vertex,
    Edge,
    DoubleEdge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VisitProbability {
    pub value: ExactRatio,
    pub kind: VisitKind,
    pub point: LatticePoint,
    pub n: u32,
}

fn outside(kind: &str, n: u32, a: u32, b: u32) -> Error {
    Error::domain(format!("{kind} visit point ({a}, {b}) is outside the valid region for n = {n}"))
}

/// `f(a,b)·f(n-b, n-a)`: paths through `(a, b)`.
pub fn vertex_count(cache: &BinomialCache, n: u32, a: u32, b: u32) -> Result<BigUint> {
    if a > b || b > n {
        return Err(outside("vertex", n, a, b));
    }
    Ok(ballot_count(cache, a, b)? * ballot_count(cache, n - b, n - a)?)
}

/// `f(a,b-1)·f(n-b, n-a)`: paths through `(a,b-1) -> (a,b)`.
pub fn edge_count(cache: &BinomialCache, n: u32, a: u32, b: u32) -> Result<BigUint> {
    if b == 0 || a + 1 > b || b > n {
        return Err(outside("edge", n, a, b));
    }
    Ok(ballot_count(cache, a, b - 1)? * ballot_count(cache, n - b, n - a)?)
}

/// `f(a,b-1)·f(n-b-1, n-a)`: paths through `(a,b-1) -> (a,b) -> (a,b+1)`.
pub fn double_edge_count(cache: &BinomialCache, n: u32, a: u32, b: u32) -> Result<BigUint> {
    if b == 0 || a + 1 > b || b + 1 > n {
        return Err(outside("double-edge", n, a, b));
    }
    Ok(ballot_count(cache, a, b - 1)? * ballot_count(cache, n - b - 1, n - a)?)
}

fn over_catalan(cache: &BinomialCache, n: u32, count: BigUint) -> Result<ExactRatio> {
    Ok(ExactRatio::from_counts(&count, &cache.catalan(n)?))
}

pub fn p_visit(cache: &BinomialCache, n: u32, a: u32, b: u32) -> Result<ExactRatio> {
    over_catalan(cache, n, vertex_count(cache, n, a, b)?)
}

pub fn q_visit(cache: &BinomialCache, n: u32, a: u32, b: u32) -> Result<ExactRatio> {
    over_catalan(cache, n, edge_count(cache, n, a, b)?)
}

pub fn r_visit(cache: &BinomialCache, n: u32, a: u32, b: u32) -> Result<ExactRatio> {
    over_catalan(cache, n, double_edge_count(cache, n, a, b)?)
}

pub fn visit(cache: &BinomialCache, n: u32, kind: VisitKind, point: LatticePoint) -> Result<VisitProbability> {
    let LatticePoint { x: a, y: b } = point;
    let value = match kind {
        VisitKind::Vertex => p_visit(cache, n, a, b)?,
        VisitKind::Edge => q_visit(cache, n, a, b)?,
        VisitKind::DoubleEdge => r_visit(cache, n, a, b)?,
    };
    Ok(VisitProbability { value, kind, point, n })
}

/// Products `f(x, left_b)·f(c, n - x)` for `x` in `xs`, walking both ballot
/// factors by their exact step ratios instead of recomputing binomials.
fn product_row(cache: &BinomialCache, n: u32, left_b: u32, c: u32, xs: Range<u32>) -> Result<Vec<BigUint>> {
    if xs.is_empty() {
        return Ok(Vec::new());
    }
    let last = xs.end - 1;
    if last > left_b || c > n - last {
        return Err(Error::domain(format!(
            "row x-range {xs:?} leaves the triangle (left_b = {left_b}, c = {c}, n = {n})"
        )));
    }
    let mut left = ballot_count(cache, xs.start, left_b)?;
    let mut right = ballot_count(cache, c, n - xs.start)?;
    let mut out = Vec::with_capacity(xs.len());
    let b = left_b as u64;
    let c = c as u64;
    for x in xs.clone() {
        out.push(&left * &right);
        if x == last {
            break;
        }
        let x64 = x as u64;
        // f(x+1, b) = f(x, b)·(x+b+1)(b-x) / ((x+1)(b-x+1))
        left = (&left * ((x64 + b + 1) * (b - x64))) / ((x64 + 1) * (b - x64 + 1));
        // f(c, d-1) = f(c, d)·(d-c)(d+1) / ((c+d)(d-c+1)),  d = n - x
        let d = n as u64 - x64;
        right = (&right * ((d - c) * (d + 1))) / ((c + d) * (d - c + 1));
    }
    Ok(out)
}

fn check_height(n: u32, h: u32) -> Result<()> {
    if h == 0 || h > n {
        Err(Error::domain(format!("height {h} outside [1, {n}]")))
    } else {
        Ok(())
    }
}

/// Numerators `Cat(n)·q_n(x, h)` of the vertical step at height `h`
/// happening at position `x`, for `x` in `xs ⊆ [0, h)`.
pub fn vertical_step_counts(cache: &BinomialCache, n: u32, h: u32, xs: Range<u32>) -> Result<Vec<BigUint>> {
    check_height(n, h)?;
    if xs.end > h {
        return Err(Error::domain(format!("vertical step at height {h} has x < {h}, got range {xs:?}")));
    }
    product_row(cache, n, h - 1, n - h, xs)
}

/// Numerators `Cat(n)·p_n(x, b)` for `x` in `0..=b`.
pub fn vertex_counts_row(cache: &BinomialCache, n: u32, b: u32) -> Result<Vec<BigUint>> {
    if b > n {
        return Err(Error::domain(format!("row {b} outside [0, {n}]")));
    }
    product_row(cache, n, b, n - b, 0..b + 1)
}

/// Floating-point `q_n(x, h)` for every `x` in `0..h`, evaluated in log
/// space so nothing overflows for large `n`.
pub fn vertical_step_probs_f64(cache: &BinomialCache, n: u32, h: u32) -> Result<Vec<f64>> {
    check_height(n, h)?;
    cache.require_n(n)?;
    let ln_ballot = |a: u32, b: u32| -> f64 {
        cache.ln_binomial((a + b) as usize, a as usize) + ((b - a + 1) as f64).ln() - ((b + 1) as f64).ln()
    };
    let ln_cat = ln_ballot(n, n);
    let c = n - h;
    Ok((0..h).map(|x| (ln_ballot(x, h - 1) + ln_ballot(c, n - x) - ln_cat).exp()).collect())
}
