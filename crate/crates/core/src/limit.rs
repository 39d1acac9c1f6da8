//! Marginal CDF of the standard Brownian excursion on `[0, 1]`.
//!
//! `F(t, r) = P[e(t) <= r] = 2/√(2π t³(1-t)³) ∫₀^r x² exp(-x²/(2t(1-t))) dx`,
//! evaluated by adaptive Simpson quadrature. `R_n(⌊tn⌋, z)` converges to
//! `F(t, z/√(2n))`. The upper tail `P[e(t) >= r]` is `1 - F`.

use std::f64::consts::PI;

use crate::arith::BinomialCache;
use crate::sortprob::r_tail;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExcursionQuery {
    pub t: f64,
    pub r: f64,
}

impl ExcursionQuery {
    pub fn new(t: f64, r: f64) -> Result<Self> {
        if !(t > 0.0 && t < 1.0) {
            return Err(Error::domain(format!("excursion time t = {t} must lie in (0, 1)")));
        }
        if !(r.is_finite() && r >= 0.0) {
            return Err(Error::domain(format!("excursion level r = {r} must be finite and >= 0")));
        }
        Ok(ExcursionQuery { t, r })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    pub abs_tol: f64,
    pub max_depth: u32,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig { abs_tol: 1e-10, max_depth: 40 }
    }
}

struct Simpson<'a, F> {
    f: &'a F,
    max_depth: u32,
    worst_error: f64,
    failed: bool,
}

impl<F: Fn(f64) -> f64> Simpson<'_, F> {
    #[allow(clippy::too_many_arguments)]
    fn refine(&mut self, a: f64, b: f64, fa: f64, fm: f64, fb: f64, whole: f64, tol: f64, depth: u32) -> f64 {
        let m = 0.5 * (a + b);
        let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
        let (flm, frm) = ((self.f)(lm), (self.f)(rm));
        let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        let delta = left + right - whole;
        if delta.abs() <= 15.0 * tol {
            return left + right + delta / 15.0;
        }
        if depth >= self.max_depth {
            self.failed = true;
            self.worst_error += delta.abs() / 15.0;
            return left + right + delta / 15.0;
        }
        self.refine(a, m, fa, flm, fm, left, tol / 2.0, depth + 1)
            + self.refine(m, b, fm, frm, fb, right, tol / 2.0, depth + 1)
    }
}

/// Adaptive Simpson over `[a, b]`, pre-split into `panels` equal pieces so
/// a narrow bump cannot slip between the first samples.
fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, panels: u32, tol: f64, max_depth: u32) -> Result<f64> {
    let mut s = Simpson { f, max_depth, worst_error: 0.0, failed: false };
    let width = (b - a) / panels as f64;
    let mut total = 0.0;
    for i in 0..panels {
        let lo = a + width * i as f64;
        let hi = if i + 1 == panels { b } else { lo + width };
        let (flo, fmid, fhi) = (f(lo), f(0.5 * (lo + hi)), f(hi));
        let whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
        total += s.refine(lo, hi, flo, fmid, fhi, whole, tol / panels as f64, 0);
    }
    if s.failed && s.worst_error > tol {
        return Err(Error::Tolerance { achieved: s.worst_error, requested: tol });
    }
    Ok(total)
}

/// `F(t, r)`, the excursion CDF at time `t`, to within `cfg.abs_tol`.
pub fn excursion_cdf(q: ExcursionQuery, cfg: QuadratureConfig) -> Result<f64> {
    if cfg.abs_tol.is_nan() || cfg.abs_tol <= 0.0 {
        return Err(Error::domain(format!("abs_tol = {} must be positive", cfg.abs_tol)));
    }
    if q.r == 0.0 {
        return Ok(0.0);
    }
    let var = q.t * (1.0 - q.t);
    let sigma = var.sqrt();
    let norm = 2.0 / (2.0 * PI * var * var * var).sqrt();
    // Past 40σ the integrand is below e^-800 and contributes nothing representable.
    let upper = q.r.min(40.0 * sigma);
    let integrand = |x: f64| x * x * (-x * x / (2.0 * var)).exp();
    let integral = adaptive_simpson(&integrand, 0.0, upper, 16, cfg.abs_tol / norm, cfg.max_depth)?;
    Ok((norm * integral).clamp(0.0, 1.0))
}

/// One row of the finite-n versus limit comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimitComparison {
    pub t: f64,
    pub r_value: f64,
    pub limit_value: f64,
    pub gap: f64,
}

/// `R_n(⌊tn⌋, z)` against `F(t, z/√(2n))` along `grid`.
pub fn compare_finite_to_limit(
    cache: &BinomialCache,
    n: u32,
    z: u32,
    grid: &[f64],
    cfg: QuadratureConfig,
) -> Result<Vec<LimitComparison>> {
    let level = z as f64 / (2.0 * n as f64).sqrt();
    grid.iter()
        .map(|&t| {
            let q = ExcursionQuery::new(t, level)?;
            let h = (t * n as f64).floor() as u32;
            if h == 0 {
                return Err(Error::domain(format!("⌊{t}·{n}⌋ = 0 has no vertical step")));
            }
            let r_value = r_tail(cache, n, h, z)?.to_f64();
            let limit_value = excursion_cdf(q, cfg)?;
            Ok(LimitComparison { t, r_value, limit_value, gap: (r_value - limit_value).abs() })
        })
        .collect()
}
