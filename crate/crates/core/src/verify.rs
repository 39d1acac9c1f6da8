//! Verification suites behind `catsort verify`.
//!
//! Each suite returns one [`CheckResult`] per property. A property holds
//! over every case it was run on; `detail` carries the case count or the
//! first counterexample.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};

use crate::arith::{BinomialCache, ExactRatio};
use crate::ballot::{path_difference, segment_counts, LatticePoint};
use crate::exec::Exec;
use crate::limit::{compare_finite_to_limit, excursion_cdf, ExcursionQuery, QuadratureConfig};
use crate::oracle::{
    oracle_count_southeast_of, oracle_delta_count, oracle_expected_position, oracle_pair_probability, oracle_visit,
};
use crate::pathprob::{double_edge_count, edge_count, p_visit, q_visit, r_visit, vertex_count};
use crate::sortprob::{
    argmin_height, delta, expected_position, find_crossing, mirror_height, pair_probability, predicted_step_sign,
    r_counts_row, tail_count, Cell, CrossingOutcome, DeltaMode,
};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Lemmas,
    Oracle,
    Limit,
    Crossing,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lemmas" => Ok(Suite::Lemmas),
            "oracle" => Ok(Suite::Oracle),
            "limit" => Ok(Suite::Limit),
            "crossing" => Ok(Suite::Crossing),
            other => Err(Error::domain(format!("unknown suite {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

pub fn all_passed(results: &[CheckResult]) -> bool {
    results.iter().all(|r| r.passed)
}

/// Counts cases of one property and keeps the first failure.
struct Tally {
    name: &'static str,
    cases: u64,
    failure: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally { name, cases: 0, failure: None }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(describe());
        }
    }

    fn merge(&mut self, other: Tally) {
        self.cases += other.cases;
        if self.failure.is_none() {
            self.failure = other.failure;
        }
    }

    fn finish(self) -> CheckResult {
        match self.failure {
            None => CheckResult { name: self.name.into(), passed: true, detail: format!("{} cases", self.cases) },
            Some(f) => CheckResult {
                name: self.name.into(),
                passed: false,
                detail: format!("{} cases, first failure: {f}", self.cases),
            },
        }
    }
}

fn signed(x: &BigUint) -> BigInt {
    BigInt::from_biguint(Sign::Plus, x.clone())
}

const LEMMA_NAMES: [&str; 7] = [
    "step sign: R(h) > R(h+1) iff h < (n+z)/2, equal at h = (n+z)/2",
    "symmetry R(h,z) = R(n+z+1-h,z)",
    "strict monotonicity in z",
    "smallest argmin over h is ceil((n+z)/2)",
    "chain r <= q <= p",
    "ratio identity r/p",
    "path difference = M2 - M1 = Cat*(R(h) - R(h+1))",
];

fn lemma_tallies() -> Vec<Tally> {
    LEMMA_NAMES.iter().map(|&n| Tally::new(n)).collect()
}

fn lemmas_for_n(cache: &BinomialCache, n: u32) -> Result<Vec<Tally>> {
    let mut t = lemma_tallies();
    // rows[h][z] = Cat·R_n(h, z), z = 0..=h; rows[0] is unused.
    let mut rows = vec![Vec::new()];
    for h in 1..=n {
        rows.push(r_counts_row(cache, n, h)?);
    }
    let r = |h: u32, z: u32| &rows[h as usize][z as usize];

    for h in 1..n {
        for z in 1..h {
            let actual = r(h, z).cmp(r(h + 1, z));
            let predicted = predicted_step_sign(n, h, z);
            t[0].check(actual == predicted, || format!("n={n} h={h} z={z}: {actual:?} vs {predicted:?}"));
        }
    }
    for z in 1..n {
        for h in z + 1..=n {
            if 2 * h > n + z + 1 {
                break;
            }
            let m = mirror_height(n, h, z);
            t[1].check(r(h, z) == r(m, z), || format!("n={n} h={h} z={z} mirror={m}"));
        }
        let best = (z + 1..=n).min_by(|&a, &b| r(a, z).cmp(r(b, z)).then(a.cmp(&b))).expect("z < n");
        let predicted = argmin_height(n, z);
        t[3].check(best == predicted, || format!("n={n} z={z}: argmin {best} vs {predicted}"));
    }
    for h in 2..=n {
        for z in 1..h - 1 {
            t[2].check(r(h, z) < r(h, z + 1), || format!("n={n} h={h} z={z}"));
        }
    }
    for b in 1..n {
        for a in 0..b {
            let p = vertex_count(cache, n, a, b)?;
            let q = edge_count(cache, n, a, b)?;
            let rr = double_edge_count(cache, n, a, b)?;
            t[4].check(rr <= q && q <= p, || format!("n={n} ({a},{b})"));
            if a + b > 0 {
                let (n, a, b) = (n as u64, a as u64, b as u64);
                let num = (n - b) * (b - a) * (b - a + 2) * (b + 1);
                let den = (2 * n - a - b) * (b - a + 1) * (b - a + 1) * (a + b);
                t[5].check(&rr * den == &p * num, || format!("n={n} ({a},{b})"));
            }
        }
    }
    if n >= 2 {
        for h in 2..n {
            for z in 1..h {
                let closed = path_difference(cache, n, h, z)?;
                let m = segment_counts(cache, n, h, z)?.difference();
                let from_r = signed(r(h, z)) - signed(r(h + 1, z));
                t[6].check(closed == m && m == from_r, || {
                    format!("n={n} h={h} z={z}: closed {closed}, M2-M1 {m}, N2-N1 {from_r}")
                });
            }
        }
    }
    Ok(t)
}

/// Exhaustive exact checks of the structural identities for `3 <= n <= max_n`.
pub fn lemma_suite(cache: &BinomialCache, max_n: u32, exec: Exec) -> Result<Vec<CheckResult>> {
    cache.require_n(max_n)?;
    let per_n = exec.map((3..=max_n).collect(), |n| lemmas_for_n(cache, n));
    let mut total = lemma_tallies();
    for tallies in per_n {
        for (acc, t) in total.iter_mut().zip(tallies?) {
            acc.merge(t);
        }
    }
    Ok(total.into_iter().map(Tally::finish).collect())
}

/// The three structural claims in their literal printed form:
/// `R(h) > R(h+1) iff h <= (n+z)/2`, `R(h,z) = R(n+z-h,z)` and the
/// minimizer `⌊(n+z)/2⌋`. Reported, not asserted.
pub fn stated_forms(cache: &BinomialCache, max_n: u32) -> Result<Vec<CheckResult>> {
    cache.require_n(max_n)?;
    let mut iff = Tally::new("as stated: R(h) > R(h+1) iff h <= (n+z)/2");
    let mut sym = Tally::new("as stated: R(h,z) = R(n+z-h,z)");
    let mut argmin = Tally::new("as stated: argmin over h is floor((n+z)/2)");
    for n in 3..=max_n {
        let mut rows = vec![Vec::new()];
        for h in 1..=n {
            rows.push(r_counts_row(cache, n, h)?);
        }
        let r = |h: u32, z: u32| &rows[h as usize][z as usize];
        for h in 1..n {
            for z in 1..h {
                let claim = 2 * h <= n + z;
                let actual = r(h, z) > r(h + 1, z);
                iff.check(claim == actual, || format!("n={n} h={h} z={z}"));
            }
        }
        for z in 1..n {
            for h in z + 1..=n {
                if 2 * h > n + z + 1 || n + z - h > n || n + z - h <= z {
                    continue;
                }
                sym.check(r(h, z) == r(n + z - h, z), || format!("n={n} h={h} z={z}"));
            }
            let best = (z + 1..=n).min_by(|&a, &b| r(a, z).cmp(r(b, z)).then(a.cmp(&b))).expect("z < n");
            let floor = (n + z) / 2;
            argmin.check(best == floor, || format!("n={n} z={z}: smallest argmin {best}, floor {floor}"));
        }
    }
    Ok(vec![iff.finish(), sym.finish(), argmin.finish()])
}

fn incomparable_pairs(n: u32) -> Vec<(Cell, Cell)> {
    let mut out = Vec::new();
    for a in 2..=n {
        for b in 1..a {
            out.push((Cell::new(1, a), Cell::new(2, b)));
        }
    }
    out
}

/// Library formulas against brute-force enumeration of tableaux,
/// `2 <= n <= max_n`.
pub fn oracle_suite(cache: &BinomialCache, max_n: u32) -> Result<Vec<CheckResult>> {
    cache.require_n(max_n)?;
    let mut pairs = Tally::new("pair probabilities");
    let mut visits = Tally::new("visit probabilities p, q, r");
    let mut southeast = Tally::new("N2 - N1 by path counting = path difference");
    let mut expected = Tally::new("expected positions");
    let mut deltas = Tally::new("delta and its argmin");
    let pt = |x, y| LatticePoint { x, y };
    for n in 2..=max_n {
        for (x, y) in incomparable_pairs(n) {
            let lib = pair_probability(cache, n, x, y)?.prob_x_before_y;
            let orc = oracle_pair_probability(n, x, y)?;
            pairs.check(lib == orc, || format!("n={n} {x} {y}: {lib} vs {orc}"));
        }
        for b in 0..=n {
            for a in 0..=b {
                let p = p_visit(cache, n, a, b)?;
                let o = oracle_visit(n, &[pt(a, b)])?;
                visits.check(p == o, || format!("p n={n} ({a},{b}): {p} vs {o}"));
                if b >= 1 && a < b {
                    let q = q_visit(cache, n, a, b)?;
                    let o = oracle_visit(n, &[pt(a, b - 1), pt(a, b)])?;
                    visits.check(q == o, || format!("q n={n} ({a},{b}): {q} vs {o}"));
                    if b < n {
                        let r = r_visit(cache, n, a, b)?;
                        let o = oracle_visit(n, &[pt(a, b - 1), pt(a, b), pt(a, b + 1)])?;
                        visits.check(r == o, || format!("r n={n} ({a},{b}): {r} vs {o}"));
                    }
                }
            }
        }
        for h in 2..n {
            for z in 1..h {
                // B = (h-z-1/2, h-1/2), A = (h-z+1/2, h+1/2) in doubled coordinates.
                let (hz, h2) = (2 * (h - z) as i64, 2 * h as i64);
                let n2 = oracle_count_southeast_of(n, hz - 1, h2 - 1)?;
                let n1 = oracle_count_southeast_of(n, hz + 1, h2 + 1)?;
                let diff = BigInt::from(n2) - BigInt::from(n1);
                let closed = path_difference(cache, n, h, z)?;
                southeast.check(diff == closed, || format!("n={n} h={h} z={z}: {diff} vs {closed}"));
            }
        }
        for row in [1u8, 2] {
            for col in 1..=n {
                let cell = Cell::new(row, col);
                let lib = expected_position(cache, n, cell)?;
                let orc = oracle_expected_position(n, cell)?;
                expected.check(lib == orc, || format!("n={n} {cell}: {lib} vs {orc}"));
            }
        }
        let d = delta(cache, n, DeltaMode::Exact)?;
        let (m, a, b, total) = oracle_delta_count(n)?;
        let want = ExactRatio::from_counts(&BigUint::from(m), &BigUint::from(total));
        let got_cols = d.argmin_cols();
        deltas.check(d.delta == want && got_cols == (a, b), || {
            format!("n={n}: {} at {got_cols:?} vs {want} at ({a},{b})", d.delta)
        });
    }
    Ok(vec![pairs.finish(), visits.finish(), southeast.finish(), expected.finish(), deltas.finish()])
}

/// Grid `t = 0.1, ..., 0.9`.
pub fn limit_grid() -> Vec<f64> {
    (1..=9).map(|i| i as f64 / 10.0).collect()
}

pub const LIMIT_N: u32 = 200;
pub const LIMIT_Z: u32 = 7;
pub const LIMIT_GAP_TOL: f64 = 0.05;
pub const CDF_TOL: f64 = 1e-8;

/// Largest `|R_200(⌊200t⌋, 7) - F(t, 7/√400)|` over the grid, and where.
pub fn limit_gap(cache: &BinomialCache) -> Result<(f64, f64)> {
    let rows = compare_finite_to_limit(cache, LIMIT_N, LIMIT_Z, &limit_grid(), QuadratureConfig::default())?;
    Ok(rows.iter().fold((0.0, f64::NAN), |best, r| if r.gap > best.0 { (r.gap, r.t) } else { best }))
}

/// Excursion CDF normalization and time symmetry, plus the finite-n gap.
pub fn limit_suite(cache: &BinomialCache) -> Result<Vec<CheckResult>> {
    let cfg = QuadratureConfig::default();
    let cdf = |t: f64, r: f64| excursion_cdf(ExcursionQuery::new(t, r)?, cfg);
    let mut norm = Tally::new("normalization |F(t, large) - 1| <= 1e-8");
    let mut sym = Tally::new("symmetry |F(t,r) - F(1-t,r)| <= 1e-8");
    for t in limit_grid() {
        let v = cdf(t, 8.0)?;
        norm.check((v - 1.0).abs() <= CDF_TOL, || format!("t={t}: {v}"));
        for r in [0.05, 0.1, 0.25, 0.35, 0.5, 1.0] {
            let (a, b) = (cdf(t, r)?, cdf(1.0 - t, r)?);
            sym.check((a - b).abs() <= CDF_TOL, || format!("t={t} r={r}: {a} vs {b}"));
        }
    }
    let (gap, at) = limit_gap(cache)?;
    let gap_check = CheckResult {
        name: format!("finite-n gap at n={LIMIT_N}, z={LIMIT_Z} <= {LIMIT_GAP_TOL}"),
        passed: gap <= LIMIT_GAP_TOL,
        detail: format!("max gap {gap:.6} at t={at}"),
    };
    Ok(vec![norm.finish(), sym.finish(), gap_check])
}

/// Published values of the crossing construction.
pub const KNOWN_CROSSINGS: &[(u32, u32, u32)] = &[(1000, 33, 439)];

/// The crossing construction at `n`: bracketing around `1/2`, the next
/// `z` staying above `1/2` at its minimum, and agreement with any known
/// value.
pub fn crossing_suite(cache: &BinomialCache, n: u32) -> Result<Vec<CheckResult>> {
    let rec = match find_crossing(cache, n)? {
        CrossingOutcome::Found(rec) => rec,
        CrossingOutcome::NoCrossing { reason, .. } => {
            return Ok(vec![CheckResult { name: "crossing exists".into(), passed: false, detail: reason }]);
        }
    };
    let half = ExactRatio::half();
    let mut out = vec![CheckResult {
        name: "bracketing R(h1+1, z*) <= 1/2 <= R(h1, z*)".into(),
        passed: rec.r_at_h1_plus <= half && half <= rec.r_at_h1,
        detail: format!(
            "z*={}, h1={}, R(h1)={:.9}, R(h1+1)={:.9}",
            rec.z_star,
            rec.h1,
            rec.r_at_h1.to_f64(),
            rec.r_at_h1_plus.to_f64()
        ),
    }];
    let z_next = rec.z_star + 1;
    let cat = cache.catalan(n)?;
    let mut min: Option<(BigUint, u32)> = None;
    for h in z_next + 1..=n {
        let c = tail_count(cache, n, h, z_next)?;
        if min.as_ref().is_none_or(|(m, _)| c < *m) {
            min = Some((c, h));
        }
    }
    if let Some((m, h)) = min {
        out.push(CheckResult {
            name: format!("min over h of R(h, {z_next}) > 1/2"),
            passed: (&m << 1u32) > cat,
            detail: format!("minimum {:.9} at h={h}", crate::arith::ratio_to_f64(&m, &cat)),
        });
    }
    if let Some(&(_, z, h1)) = KNOWN_CROSSINGS.iter().find(|k| k.0 == n) {
        out.push(CheckResult {
            name: "matches known crossing".into(),
            passed: rec.z_star == z && rec.h1 == h1,
            detail: format!("got z*={}, h1={}; expected z*={z}, h1={h1}", rec.z_star, rec.h1),
        });
    }
    Ok(out)
}
