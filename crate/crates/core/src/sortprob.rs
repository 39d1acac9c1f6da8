//! The sorting probability function `R_n(h, z)` and everything built on it.
//!
//! Orientation is fixed once: `R_n(h, z) = P[L(2, h-z) < L(1, h)]`, the
//! probability that the vertical step at height `h` of a uniform Catalan
//! path sits at horizontal position `x >= h - z`. Pair probabilities are
//! reported as `P[x before y]` and converted through `1 - R` when needed.
//!
//! All heavy work reduces to integer numerators over the common
//! denominator `Cat(n)`: `Cat(n)·R_n(h,z)` is a sum of `z` products of
//! ballot numbers, so comparisons against `1/2` are comparisons of
//! `2·N` against `Cat(n)`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{ratio_to_f64, BinomialCache, ExactRatio};
use crate::exec::Exec;
use crate::pathprob::{vertex_counts_row, vertical_step_counts, vertical_step_probs_f64};
use crate::{Error, Result};

/// A cell of the `2 × n` Young diagram in matrix coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: u8,
    pub col: u32,
}

impl Cell {
    pub const fn new(row: u8, col: u32) -> Self {
        Cell { row, col }
    }

    pub fn validate(&self, n: u32) -> Result<()> {
        if !(self.row == 1 || self.row == 2) || self.col < 1 || self.col > n {
            return Err(Error::domain(format!("cell {self} is not in the 2 x {n} diagram")));
        }
        Ok(())
    }

    /// `Some(true)` if `self` precedes `other` in every linear extension,
    /// `Some(false)` if it follows, `None` if the two are incomparable.
    pub fn forced_order(&self, other: &Cell) -> Option<bool> {
        match (self.row, other.row) {
            (r, s) if r == s => Some(self.col < other.col),
            (1, _) => (self.col <= other.col).then_some(true),
            _ => (other.col <= self.col).then_some(false),
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairProbability {
    pub x: Cell,
    pub y: Cell,
    pub prob_x_before_y: ExactRatio,
    /// `|P[x before y] - P[y before x]|`.
    pub margin: ExactRatio,
}

impl PairProbability {
    fn new(x: Cell, y: Cell, prob_x_before_y: ExactRatio) -> Self {
        let margin = prob_x_before_y.margin();
        PairProbability { x, y, prob_x_before_y, margin }
    }
}

fn check_r_domain(n: u32, h: u32, z: u32) -> Result<()> {
    if z < 1 || z >= h || h > n {
        return Err(Error::domain(format!("R_n(h, z) needs 1 <= z < h <= n, got n={n}, h={h}, z={z}")));
    }
    Ok(())
}

/// `Cat(n)·P[vertical step at height h has x >= h - z]` for any `z >= 0`.
/// Saturates at `Cat(n)` once `z >= h`.
pub fn tail_count(cache: &BinomialCache, n: u32, h: u32, z: u32) -> Result<BigUint> {
    let lo = h.saturating_sub(z);
    Ok(vertical_step_counts(cache, n, h, lo..h)?.into_iter().sum())
}

/// `P[vertical step at height h has x >= h - z]`, defined for every
/// `1 <= h <= n` and `z >= 0`; equals `R_n(h, z)` on its domain and `1`
/// once `z >= h`.
pub fn r_tail(cache: &BinomialCache, n: u32, h: u32, z: u32) -> Result<ExactRatio> {
    Ok(ExactRatio::from_counts(&tail_count(cache, n, h, z)?, &cache.catalan(n)?))
}

/// `R_n(h, z) = Σ_{k=1..z} q_n(h-k, h)` for `1 <= z < h <= n`.
pub fn r_function(cache: &BinomialCache, n: u32, h: u32, z: u32) -> Result<ExactRatio> {
    check_r_domain(n, h, z)?;
    r_tail(cache, n, h, z)
}

/// `R_n` at real arguments, floored.
pub fn r_function_floor(cache: &BinomialCache, n: u32, h: f64, z: f64) -> Result<ExactRatio> {
    if !(h.is_finite() && z.is_finite()) || h < 0.0 || z < 0.0 {
        return Err(Error::domain(format!("R_n at non-finite or negative ({h}, {z})")));
    }
    r_function(cache, n, h.floor() as u32, z.floor() as u32)
}

/// `Cat(n)·R_n(h, z)` for `z = 0..=h` (entry `h` is `Cat(n)` itself).
pub fn r_counts_row(cache: &BinomialCache, n: u32, h: u32) -> Result<Vec<BigUint>> {
    let steps = vertical_step_counts(cache, n, h, 0..h)?;
    let mut out = Vec::with_capacity(h as usize + 1);
    let mut acc = BigUint::zero();
    out.push(acc.clone());
    for count in steps.iter().rev() {
        acc += count;
        out.push(acc.clone());
    }
    Ok(out)
}

/// `P[x before y]` under a uniform linear extension of `P_n`.
pub fn pair_probability(cache: &BinomialCache, n: u32, x: Cell, y: Cell) -> Result<PairProbability> {
    x.validate(n)?;
    y.validate(n)?;
    if x == y {
        return Err(Error::domain(format!("pair probability of {x} with itself")));
    }
    if let Some(before) = x.forced_order(&y) {
        let p = if before { ExactRatio::one() } else { ExactRatio::zero() };
        return Ok(PairProbability::new(x, y, p));
    }
    // Incomparable: one cell is (1,a), the other (2,b) with b < a.
    let (top, bottom) = if x.row == 1 { (x, y) } else { (y, x) };
    let (a, b) = (top.col, bottom.col);
    let bottom_first = r_function(cache, n, a, a - b)?;
    let p = if x.row == 1 { bottom_first.complement() } else { bottom_first };
    Ok(PairProbability::new(x, y, p))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DeltaMode {
    /// Every incomparable pair is evaluated exactly.
    Exact,
    /// Floating-point pass over all pairs, exact re-evaluation of every
    /// pair within [`SCREEN_WINDOW`] of the float minimum.
    #[default]
    Screened,
}

/// Float margins within this distance of the float minimum are
/// re-verified exactly. Log-space evaluation keeps the float error of
/// every margin below `1e-10`.
pub const SCREEN_WINDOW: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct DeltaRecord {
    pub n: u32,
    pub delta: ExactRatio,
    pub argmin: PairProbability,
    pub delta_float: f64,
    /// `δ·n^{5/4}`.
    pub scaled_n54: f64,
    /// `log δ / log n`; `-inf` when `δ = 0`.
    pub log_n_delta: f64,
    pub catalan: BigUint,
    /// `δ·Cat(n) = |Cat(n) - 2·N|`.
    pub delta_count: BigUint,
    /// `N = Cat(n)·P[L(2,b) < L(1,a)]` at the minimizing pair.
    pub before_count: BigUint,
}

impl DeltaRecord {
    /// Columns `(a, b)` of the minimizing pair `(1,a), (2,b)`.
    pub fn argmin_cols(&self) -> (u32, u32) {
        (self.argmin.x.col, self.argmin.y.col)
    }

    /// `(1/2)(1 - δ)·Cat(n) = min(N, Cat(n) - N)`.
    pub fn half_complement_count(&self) -> BigUint {
        let other = &self.catalan - &self.before_count;
        other.min(self.before_count.clone())
    }
}

/// Best pair so far; ordered by margin numerator, then `a`, then `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Candidate {
    margin: BigUint,
    a: u32,
    b: u32,
    before: BigUint,
}

impl Candidate {
    fn key(&self) -> (&BigUint, u32, u32) {
        (&self.margin, self.a, self.b)
    }

    fn min(self, other: Candidate) -> Candidate {
        if other.key() < self.key() {
            other
        } else {
            self
        }
    }
}

fn margin_count(cat: &BigUint, before: &BigUint) -> BigUint {
    let twice = before << 1u32;
    if &twice >= cat {
        twice - cat
    } else {
        cat - twice
    }
}

/// Exact minimum over one row `a = h` of the pairs `(1,h), (2,h-z)`.
fn exact_row_best(cache: &BinomialCache, n: u32, h: u32, cat: &BigUint) -> Result<Candidate> {
    let steps = vertical_step_counts(cache, n, h, 1..h)?;
    let mut before = BigUint::zero();
    let mut best: Option<Candidate> = None;
    for z in 1..h {
        before += &steps[(h - z - 1) as usize];
        let cand = Candidate { margin: margin_count(cat, &before), a: h, b: h - z, before: before.clone() };
        best = Some(match best {
            None => cand,
            Some(cur) => cur.min(cand),
        });
    }
    Ok(best.expect("row with h >= 2 has at least one pair"))
}

/// Float margins `|1 - 2R_n(h,z)|` for `z = 1..h-1`, index `z - 1`.
fn float_row_margins(cache: &BinomialCache, n: u32, h: u32) -> Result<Vec<f64>> {
    let probs = vertical_step_probs_f64(cache, n, h)?;
    let mut acc = 0.0f64;
    let mut out = Vec::with_capacity(h as usize - 1);
    for z in 1..h {
        acc += probs[(h - z) as usize];
        out.push((1.0 - 2.0 * acc).abs());
    }
    Ok(out)
}

fn collect_results<T>(rows: Vec<Result<T>>) -> Result<Vec<T>> {
    rows.into_iter().collect()
}

fn screened_best(cache: &BinomialCache, n: u32, cat: &BigUint, exec: Exec) -> Result<Candidate> {
    let heights: Vec<u32> = (2..=n).collect();
    let row_mins = exec.map(heights.clone(), |h| {
        float_row_margins(cache, n, h).map(|m| m.into_iter().fold(f64::INFINITY, f64::min))
    });
    let float_min = collect_results(row_mins)?.into_iter().fold(f64::INFINITY, f64::min);
    let cutoff = float_min + SCREEN_WINDOW;

    let per_row = exec.map(heights, |h| -> Result<Option<Candidate>> {
        let margins = float_row_margins(cache, n, h)?;
        let mut best: Option<Candidate> = None;
        for (i, &m) in margins.iter().enumerate() {
            if m <= cutoff {
                let z = i as u32 + 1;
                let before = tail_count(cache, n, h, z)?;
                let cand = Candidate { margin: margin_count(cat, &before), a: h, b: h - z, before };
                best = Some(match best {
                    None => cand,
                    Some(cur) => cur.min(cand),
                });
            }
        }
        Ok(best)
    });
    collect_results(per_row)?
        .into_iter()
        .flatten()
        .reduce(Candidate::min)
        .ok_or_else(|| Error::domain(format!("screening left no candidates for n = {n}")))
}

fn exact_best(cache: &BinomialCache, n: u32, cat: &BigUint, exec: Exec) -> Result<Candidate> {
    let heights: Vec<u32> = (2..=n).collect();
    let rows = exec.map(heights, |h| exact_row_best(cache, n, h, cat));
    Ok(collect_results(rows)?.into_iter().reduce(Candidate::min).expect("n >= 2"))
}

/// `δ(P_n)` with the default executor.
pub fn delta(cache: &BinomialCache, n: u32, mode: DeltaMode) -> Result<DeltaRecord> {
    delta_with(cache, n, mode, Exec::default())
}

/// `δ(P_n) = min |1 - 2·R_n(a, a-b)|` over the incomparable pairs
/// `(1,a), (2,b)` with `b < a`. Ties go to the smallest `a`, then the
/// smallest `b`. Both modes return identical records.
pub fn delta_with(cache: &BinomialCache, n: u32, mode: DeltaMode, exec: Exec) -> Result<DeltaRecord> {
    if n < 2 {
        return Err(Error::domain(format!("δ(P_n) needs n >= 2, got {n}")));
    }
    cache.require_n(n)?;
    let cat = cache.catalan(n)?;
    let best = match mode {
        DeltaMode::Exact => exact_best(cache, n, &cat, exec)?,
        DeltaMode::Screened => screened_best(cache, n, &cat, exec)?,
    };
    let delta = ExactRatio::from_counts(&best.margin, &cat);
    let bottom_first = ExactRatio::from_counts(&best.before, &cat);
    let argmin = PairProbability::new(Cell::new(1, best.a), Cell::new(2, best.b), bottom_first.complement());
    let delta_float = ratio_to_f64(&best.margin, &cat);
    let nf = n as f64;
    Ok(DeltaRecord {
        n,
        delta,
        argmin,
        delta_float,
        scaled_n54: delta_float * nf.powf(1.25),
        log_n_delta: delta_float.ln() / nf.ln(),
        catalan: cat,
        delta_count: best.margin,
        before_count: best.before,
    })
}

/// Output of the crossing construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingRecord {
    pub n: u32,
    pub z_star: u32,
    pub h1: u32,
    pub r_at_h1: ExactRatio,
    pub r_at_h1_plus: ExactRatio,
}

impl CrossingRecord {
    /// `|1 - 2·R_n(h1, z*)|`, the margin of the pair `(1,h1), (2,h1-z*)`.
    pub fn margin(&self) -> ExactRatio {
        self.r_at_h1.margin()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CrossingOutcome {
    Found(CrossingRecord),
    NoCrossing { n: u32, reason: String },
}

/// Integers `z` with `√n/10 <= z <= 10√n`.
pub fn j_interval(n: u32) -> Option<(u32, u32)> {
    let n = n as u64;
    let mut lo = 0u64;
    while 100 * lo * lo < n {
        lo += 1;
    }
    let mut hi = 0u64;
    while (hi + 1) * (hi + 1) <= 100 * n {
        hi += 1;
    }
    (lo.max(1) <= hi).then_some((lo.max(1) as u32, hi as u32))
}

/// The discrete crossing construction.
///
/// With `m = ⌊n/2⌋`: `z*` is the largest integer `z ∈ [√n/10, 10√n]` (and
/// `z < m`) with `R_n(m, z) <= 1/2`; then `h1` is the largest `h <= m` with
/// `R_n(h, z*) >= 1/2`, so `R_n(h1+1, z*) <= 1/2 <= R_n(h1, z*)`.
pub fn find_crossing(cache: &BinomialCache, n: u32) -> Result<CrossingOutcome> {
    cache.require_n(n)?;
    let none = |reason: String| Ok(CrossingOutcome::NoCrossing { n, reason });
    let mid = n / 2;
    let Some((z_lo, z_hi)) = j_interval(n) else {
        return none(format!("no integer in [√{n}/10, 10√{n}]"));
    };
    if mid < 2 {
        return none(format!("⌊n/2⌋ = {mid} admits no z < h"));
    }
    let z_hi = z_hi.min(mid - 1);
    if z_lo > z_hi {
        return none(format!("J ∩ [1, {}] is empty", mid - 1));
    }
    let cat = cache.catalan(n)?;
    let row = r_counts_row(cache, n, mid)?;
    let Some(z_star) = (z_lo..=z_hi).rev().find(|&z| (&row[z as usize] << 1u32) <= cat) else {
        return none(format!("R_n({mid}, z) > 1/2 for every z in [{z_lo}, {z_hi}]"));
    };
    for h in (z_star + 1..=mid).rev() {
        let count = tail_count(cache, n, h, z_star)?;
        if (&count << 1u32) >= cat {
            let r_at_h1 = ExactRatio::from_counts(&count, &cat);
            let r_at_h1_plus = r_tail(cache, n, h + 1, z_star)?;
            return Ok(CrossingOutcome::Found(CrossingRecord { n, z_star, h1: h, r_at_h1, r_at_h1_plus }));
        }
    }
    none(format!("R_n(h, {z_star}) < 1/2 for every h in [{}, {mid}]", z_star + 1))
}

/// `E[L(cell)]` as the tail sum `Σ_{m=1..2n} P[L(cell) >= m]`.
///
/// `L(1,h) >= m` iff the path's vertex after `m-1` steps has `y <= h-1`;
/// `L(2,b) >= m` iff that vertex has `x <= b-1`. Each vertex is weighted by
/// its visit count, and every path meets each anti-diagonal once.
pub fn expected_position(cache: &BinomialCache, n: u32, cell: Cell) -> Result<ExactRatio> {
    cell.validate(n)?;
    let cat = cache.catalan(n)?;
    let mut total = BigUint::zero();
    let rows = if cell.row == 1 { 0..cell.col } else { 0..n + 1 };
    for y in rows {
        let row = vertex_counts_row(cache, n, y)?;
        let x_end = if cell.row == 1 { y + 1 } else { cell.col.min(y + 1) };
        for x in 0..x_end {
            // The terminal vertex (n, n) sits on anti-diagonal 2n and is never counted.
            if x + y < 2 * n {
                total += &row[x as usize];
            }
        }
    }
    Ok(ExactRatio::from_counts(&total, &cat))
}

/// Mirror height under the central symmetry of `P_n`:
/// `R_n(h, z) = R_n(n + z + 1 - h, z)`.
pub fn mirror_height(n: u32, h: u32, z: u32) -> u32 {
    n + z + 1 - h
}

/// Checks `R_n(h, z) = R_n(n + z + 1 - h, z)` for
/// `h ∈ [z+1, (n+z+1)/2]`, `z >= 1`.
pub fn symmetry_check(cache: &BinomialCache, n: u32, h: u32, z: u32) -> Result<bool> {
    if z < 1 || h < z + 1 || 2 * h > n + z + 1 {
        return Err(Error::domain(format!(
            "symmetry check needs z >= 1 and z+1 <= h <= (n+z+1)/2, got n={n}, h={h}, z={z}"
        )));
    }
    let mirror = mirror_height(n, h, z);
    Ok(tail_count(cache, n, h, z)? == tail_count(cache, n, mirror, z)?)
}

/// Where `R_n(·, z)` attains its minimum over `h ∈ (z, n]`: the smallest
/// minimizer is `⌈(n+z)/2⌉`.
pub fn argmin_height(n: u32, z: u32) -> u32 {
    (n + z).div_ceil(2)
}

/// Sign of `R_n(h,z) - R_n(h+1,z)` predicted by the bimodality argument.
pub fn predicted_step_sign(n: u32, h: u32, z: u32) -> Ordering {
    (n + z).cmp(&(2 * h))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cache() -> BinomialCache {
        BinomialCache::new(200)
    }

    #[test]
    fn cell_order() {
        let (a, b) = (Cell::new(1, 3), Cell::new(2, 2));
        assert_eq!(a.forced_order(&b), None);
        assert_eq!(b.forced_order(&a), None);
        assert_eq!(Cell::new(1, 2).forced_order(&Cell::new(2, 2)), Some(true));
        assert_eq!(Cell::new(2, 2).forced_order(&Cell::new(1, 2)), Some(false));
        assert_eq!(Cell::new(2, 1).forced_order(&Cell::new(2, 4)), Some(true));
        assert!(Cell::new(3, 1).validate(4).is_err());
        assert!(Cell::new(1, 5).validate(4).is_err());
        assert!(Cell::new(1, 0).validate(4).is_err());
    }

    #[test]
    fn small_values() {
        let c = cache();
        let r = r_function(&c, 3, 2, 1).unwrap();
        assert_eq!(r.to_string(), "2/5");
        let p = pair_probability(&c, 3, Cell::new(1, 2), Cell::new(2, 1)).unwrap();
        assert_eq!(p.prob_x_before_y.to_string(), "3/5");
        assert_eq!(p.margin.to_string(), "1/5");
        let q = pair_probability(&c, 3, Cell::new(2, 1), Cell::new(1, 2)).unwrap();
        assert_eq!(q.prob_x_before_y.to_string(), "2/5");
        assert!(r_function(&c, 10, 3, 5).is_err());
        assert!(r_function(&c, 10, 11, 5).is_err());
        assert!(pair_probability(&c, 3, Cell::new(1, 2), Cell::new(1, 2)).is_err());
    }

    #[test]
    fn minimum_element_precedes_everything() {
        let c = cache();
        for n in 2..=8 {
            for row in 1..=2u8 {
                for col in 1..=n {
                    let y = Cell::new(row, col);
                    if y != Cell::new(1, 1) {
                        let p = pair_probability(&c, n, Cell::new(1, 1), y).unwrap();
                        assert_eq!(p.prob_x_before_y, ExactRatio::one());
                        assert_eq!(p.margin, ExactRatio::one());
                    }
                }
            }
        }
    }

    #[test]
    fn widest_r_is_complement_of_first_column() {
        let c = cache();
        for n in 2..=20 {
            for h in 2..=n {
                let r = r_function(&c, n, h, h - 1).unwrap();
                let q0 = crate::pathprob::q_visit(&c, n, 0, h).unwrap();
                assert_eq!(r, q0.complement());
            }
        }
    }

    #[test]
    fn floor_extension() {
        let c = cache();
        assert_eq!(r_function_floor(&c, 20, 9.7, 3.2).unwrap(), r_function(&c, 20, 9, 3).unwrap());
        assert!(r_function_floor(&c, 20, f64::NAN, 3.0).is_err());
    }

    #[test]
    fn tail_saturates() {
        let c = cache();
        assert_eq!(r_tail(&c, 30, 10, 10).unwrap(), ExactRatio::one());
        assert_eq!(r_tail(&c, 30, 10, 50).unwrap(), ExactRatio::one());
        assert_eq!(r_tail(&c, 30, 10, 0).unwrap(), ExactRatio::zero());
    }

    #[test]
    fn delta_small() {
        let c = cache();
        let d = delta(&c, 3, DeltaMode::Exact).unwrap();
        assert_eq!(d.delta.to_string(), "1/5");
        assert_eq!(d.argmin_cols(), (2, 1));
        assert_eq!(d.delta_count, BigUint::from(1u32));
        let s = delta(&c, 3, DeltaMode::Screened).unwrap();
        assert_eq!(d, s);
        let d2 = delta(&c, 2, DeltaMode::Exact).unwrap();
        assert!(d2.delta.is_zero());
        assert_eq!(d2.log_n_delta, f64::NEG_INFINITY);
        assert!(delta(&c, 1, DeltaMode::Exact).is_err());
    }

    #[test]
    fn modes_and_executors_agree() {
        let c = cache();
        for n in 2..=80 {
            let e = delta_with(&c, n, DeltaMode::Exact, Exec::Sequential).unwrap();
            let s = delta_with(&c, n, DeltaMode::Screened, Exec::Parallel).unwrap();
            assert_eq!(e, s, "n={n}");
        }
    }

    #[test]
    fn half_complement_count() {
        let c = cache();
        for n in 3..=30 {
            let d = delta(&c, n, DeltaMode::Exact).unwrap();
            let twice = &d.catalan - &d.delta_count;
            assert_eq!(d.half_complement_count() * 2u32, twice);
        }
    }

    #[test]
    fn expected_position_extremes() {
        let c = cache();
        for n in 1..=25 {
            assert_eq!(expected_position(&c, n, Cell::new(1, 1)).unwrap(), ExactRatio::one());
            assert_eq!(expected_position(&c, n, Cell::new(2, n)).unwrap(), ExactRatio::from_integer(2 * n));
        }
    }

    #[test]
    fn expected_position_by_step_distribution() {
        // E[L(1,h)] = h + E[x of the vertical step at height h]; E[L(2,b)] = 2n+1 - E[L(1,n+1-b)].
        let c = cache();
        for n in 1..=20u32 {
            let cat = c.catalan(n).unwrap();
            for h in 1..=n {
                let steps = vertical_step_counts(&c, n, h, 0..h).unwrap();
                let weighted: BigUint = steps.iter().enumerate().map(|(x, v)| v * (x as u64)).sum();
                let direct = ExactRatio::from_integer(h) + ExactRatio::from_counts(&weighted, &cat);
                assert_eq!(expected_position(&c, n, Cell::new(1, h)).unwrap(), direct);
                let mirrored = ExactRatio::from_integer(2 * n + 1) - direct;
                assert_eq!(expected_position(&c, n, Cell::new(2, n + 1 - h)).unwrap(), mirrored);
            }
        }
    }

    #[test]
    fn symmetry_fixed_point_and_domain() {
        let c = cache();
        for n in 3..=30u32 {
            for z in 1..n {
                if (n + z + 1) % 2 == 0 {
                    let h = (n + z).div_ceil(2);
                    if h > z {
                        assert_eq!(mirror_height(n, h, z), h);
                        assert!(symmetry_check(&c, n, h, z).unwrap());
                    }
                }
            }
        }
        assert!(symmetry_check(&c, 10, 3, 3).is_err());
        assert!(symmetry_check(&c, 10, 9, 2).is_err());
    }

    #[test]
    fn j_interval_bounds() {
        assert_eq!(j_interval(1000), Some((4, 316)));
        assert_eq!(j_interval(400), Some((2, 200)));
        assert_eq!(j_interval(1), Some((1, 10)));
        assert_eq!(j_interval(100), Some((1, 100)));
    }

    #[test]
    fn crossing_small_n() {
        let c = cache();
        for n in [20u32, 50, 100, 150] {
            match find_crossing(&c, n).unwrap() {
                CrossingOutcome::Found(rec) => {
                    assert!(rec.r_at_h1_plus.cmp_half() != Ordering::Greater);
                    assert!(rec.r_at_h1.cmp_half() != Ordering::Less);
                    assert!(rec.h1 <= n / 2);
                }
                CrossingOutcome::NoCrossing { reason, .. } => panic!("n={n}: {reason}"),
            }
        }
        assert!(matches!(find_crossing(&c, 3).unwrap(), CrossingOutcome::NoCrossing { .. }));
    }
}
