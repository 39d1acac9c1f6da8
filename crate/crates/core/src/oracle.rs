//! Brute-force ground truth by enumerating every standard Young tableau of
//! shape `(n, n)`.
//!
//! Nothing here touches the ballot formulas: tableaux come from
//! backtracking over Dyck words (up-step = entry in the first row), and
//! every probability is a plain count over the enumerated set.

use num_bigint::BigUint;

use crate::arith::ExactRatio;
use crate::ballot::LatticePoint;
use crate::exec::Exec;
use crate::sortprob::Cell;
use crate::{Error, Result};

/// Largest `n` enumerated without an explicit override.
pub const DEFAULT_GUARD: u32 = 12;
/// Largest `n` enumerated at all.
pub const HARD_LIMIT: u32 = 16;

fn check_guard(n: u32, allow_large: bool) -> Result<()> {
    let limit = if allow_large { HARD_LIMIT } else { DEFAULT_GUARD };
    if n > limit {
        return Err(Error::OracleGuard { n, guard: DEFAULT_GUARD, hard_limit: HARD_LIMIT });
    }
    Ok(())
}

/// A standard Young tableau of shape `(n, n)`; `rows[r][c]` holds the entry
/// of cell `(r+1, c+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableau {
    pub rows: [Vec<u32>; 2],
}

impl Tableau {
    fn from_word(word: &[bool]) -> Self {
        let n = word.len() / 2;
        let mut rows = [Vec::with_capacity(n), Vec::with_capacity(n)];
        for (t, &up) in word.iter().enumerate() {
            rows[usize::from(!up)].push(t as u32 + 1);
        }
        Tableau { rows }
    }

    pub fn n(&self) -> u32 {
        self.rows[0].len() as u32
    }

    pub fn entry(&self, cell: Cell) -> u32 {
        self.rows[cell.row as usize - 1][cell.col as usize - 1]
    }

    /// Rows and columns strictly increase and the entries are `1..=2n`.
    pub fn is_standard(&self) -> bool {
        let n = self.rows[0].len();
        if self.rows[1].len() != n {
            return false;
        }
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = (0..n).all(|c| self.rows[0][c] < self.rows[1][c]);
        let mut seen: Vec<u32> = self.rows.iter().flatten().copied().collect();
        seen.sort_unstable();
        rows_ok && cols_ok && seen.iter().copied().eq(1..=2 * n as u32)
    }

    /// Lattice path vertices `(x, y)`, where `y` counts first-row entries.
    pub fn path(&self) -> Vec<LatticePoint> {
        let n = self.n();
        let mut out = Vec::with_capacity(2 * n as usize + 1);
        let (mut x, mut y) = (0u32, 0u32);
        out.push(LatticePoint::new(0, 0));
        for t in 1..=2 * n {
            if (y as usize) < self.rows[0].len() && self.rows[0][y as usize] == t {
                y += 1;
            } else {
                x += 1;
            }
            out.push(LatticePoint::new(x, y));
        }
        out
    }
}

/// Streams every tableau whose Dyck word starts with a fixed prefix.
#[derive(Debug, Clone)]
pub struct Tableaux {
    n: usize,
    prefix_len: usize,
    word: Option<Vec<bool>>,
    started: bool,
}

impl Tableaux {
    fn with_prefix(n: u32, prefix: &[bool]) -> Self {
        let n = n as usize;
        let ups = prefix.iter().filter(|&&u| u).count();
        let mut valid = prefix.len() <= 2 * n && ups <= n;
        let mut height = 0i64;
        for &u in prefix {
            height += if u { 1 } else { -1 };
            valid &= height >= 0;
        }
        let word = valid.then(|| {
            let mut w = prefix.to_vec();
            w.extend(std::iter::repeat_n(true, n - ups));
            w.resize(2 * n, false);
            w
        });
        Tableaux { n, prefix_len: prefix.len(), word, started: false }
    }

    /// Lexicographic successor (up < down) of the current word that keeps
    /// the prefix; `false` when exhausted.
    fn advance(&mut self) -> bool {
        let Some(word) = self.word.as_mut() else { return false };
        let n = self.n;
        let mut ups_before = vec![0usize; word.len() + 1];
        for (i, &u) in word.iter().enumerate() {
            ups_before[i + 1] = ups_before[i] + usize::from(u);
        }
        for i in (self.prefix_len..word.len()).rev() {
            let ups = ups_before[i];
            let downs = i - ups;
            if word[i] && downs < ups {
                word[i] = false;
                let rest_ups = n - ups;
                for (k, slot) in word[i + 1..].iter_mut().enumerate() {
                    *slot = k < rest_ups;
                }
                return true;
            }
        }
        self.word = None;
        false
    }
}

impl Iterator for Tableaux {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        if self.started {
            if !self.advance() {
                return None;
            }
        } else {
            self.started = true;
        }
        self.word.as_deref().map(Tableau::from_word)
    }
}

/// Every `SYT(n, n)` exactly once. Refuses `n > 12` unless `allow_large`,
/// and `n > 16` always.
pub fn enumerate_tableaux(n: u32, allow_large: bool) -> Result<Tableaux> {
    check_guard(n, allow_large)?;
    Ok(Tableaux::with_prefix(n, &[]))
}

/// Valid Dyck prefixes of length `len`, used to shard enumeration.
fn prefixes(n: u32, len: usize) -> Vec<Vec<bool>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * 2);
        for p in out {
            let ups = p.iter().filter(|&&u| u).count();
            let downs = p.len() - ups;
            if ups < n as usize {
                let mut q = p.clone();
                q.push(true);
                next.push(q);
            }
            if downs < ups {
                let mut q = p;
                q.push(false);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

/// Folds `visit` over every tableau, sharded by fixed-length prefixes.
/// Returns the per-tableau accumulator summed over the shards.
pub fn fold_tableaux<A, F>(n: u32, allow_large: bool, exec: Exec, init: A, visit: F) -> Result<A>
where
    A: Clone + Send + Sync + std::ops::AddAssign,
    F: Fn(&mut A, &Tableau) + Sync + Send,
{
    check_guard(n, allow_large)?;
    let shards = prefixes(n, (2 * n as usize).min(8));
    let parts = exec.map(shards, |prefix| {
        let mut acc = init.clone();
        for t in Tableaux::with_prefix(n, &prefix) {
            visit(&mut acc, &t);
        }
        acc
    });
    let mut total = init;
    for p in parts {
        total += p;
    }
    Ok(total)
}

/// Number of tableaux satisfying `pred`, together with the total count.
pub fn count_where<F>(n: u32, allow_large: bool, pred: F) -> Result<(u64, u64)>
where
    F: Fn(&Tableau) -> bool + Sync + Send,
{
    #[derive(Clone, Default)]
    struct Tally(u64, u64);
    impl std::ops::AddAssign for Tally {
        fn add_assign(&mut self, o: Tally) {
            self.0 += o.0;
            self.1 += o.1;
        }
    }
    let t = fold_tableaux(n, allow_large, Exec::Parallel, Tally::default(), |acc, t| {
        acc.1 += 1;
        if pred(t) {
            acc.0 += 1;
        }
    })?;
    Ok((t.0, t.1))
}

fn ratio(hits: u64, total: u64) -> ExactRatio {
    ExactRatio::from_counts(&BigUint::from(hits), &BigUint::from(total))
}

/// `P[entry(x) < entry(y)]` by direct counting.
pub fn oracle_pair_probability(n: u32, x: Cell, y: Cell) -> Result<ExactRatio> {
    x.validate(n)?;
    y.validate(n)?;
    if x == y {
        return Err(Error::domain(format!("pair probability of {x} with itself")));
    }
    let (hits, total) = count_where(n, false, |t| t.entry(x) < t.entry(y))?;
    Ok(ratio(hits, total))
}

/// Fraction of Catalan paths visiting every listed point.
pub fn oracle_visit(n: u32, points: &[LatticePoint]) -> Result<ExactRatio> {
    let (hits, total) = count_where(n, false, |t| {
        let path = t.path();
        points.iter().all(|p| path.contains(p))
    })?;
    Ok(ratio(hits, total))
}

/// Number of paths passing strictly SE of the half-integer point
/// `(px2/2, py2/2)` (doubled coordinates, `py2` odd): the up-step crossing
/// the line `y = py` happens at some `x > px`.
pub fn oracle_count_southeast_of(n: u32, px2: i64, py2: i64) -> Result<u64> {
    assert!(py2 % 2 != 0, "py must be a half-integer");
    let (hits, _) = count_where(n, false, |t| {
        let path = t.path();
        path.windows(2).any(|w| {
            let (from, to) = (w[0], w[1]);
            from.x == to.x && 2 * from.y as i64 <= py2 && py2 <= 2 * to.y as i64 && 2 * from.x as i64 > px2
        })
    })?;
    Ok(hits)
}

/// `(δ(P_n)·Cat(n), a, b, Cat(n))` by counting every pair `(1,a), (2,b)`,
/// `b < a`, across all tableaux; ties go to the smallest `a`, then `b`.
pub fn oracle_delta_count(n: u32) -> Result<(u64, u32, u32, u64)> {
    if n < 2 {
        return Err(Error::domain(format!("δ(P_n) needs n >= 2, got {n}")));
    }
    let nn = n as usize;
    #[derive(Clone)]
    struct Table(Vec<u64>, u64);
    impl std::ops::AddAssign for Table {
        fn add_assign(&mut self, o: Table) {
            for (a, b) in self.0.iter_mut().zip(o.0) {
                *a += b;
            }
            self.1 += o.1;
        }
    }
    // counts[a * n + b]: tableaux with entry(2,b) < entry(1,a), 1-based a, b < n.
    let table = fold_tableaux(n, false, Exec::Parallel, Table(vec![0; (nn + 1) * (nn + 1)], 0), |acc, t| {
        acc.1 += 1;
        for a in 2..=nn {
            for b in 1..a {
                if t.rows[1][b - 1] < t.rows[0][a - 1] {
                    acc.0[a * (nn + 1) + b] += 1;
                }
            }
        }
    })?;
    let total = table.1;
    let mut best: Option<(u64, u32, u32)> = None;
    for a in 2..=nn {
        for b in 1..a {
            let hits = table.0[a * (nn + 1) + b];
            let margin = (2 * hits).abs_diff(total);
            let key = (margin, a as u32, b as u32);
            if best.is_none_or(|cur| key < cur) {
                best = Some(key);
            }
        }
    }
    let (m, a, b) = best.expect("n >= 2");
    Ok((m, a, b, total))
}

/// `E[L(cell)]` by averaging entries.
pub fn oracle_expected_position(n: u32, cell: Cell) -> Result<ExactRatio> {
    cell.validate(n)?;
    #[derive(Clone, Default)]
    struct Sum(u64, u64);
    impl std::ops::AddAssign for Sum {
        fn add_assign(&mut self, o: Sum) {
            self.0 += o.0;
            self.1 += o.1;
        }
    }
    let s = fold_tableaux(n, false, Exec::Parallel, Sum::default(), |acc, t| {
        acc.0 += t.entry(cell) as u64;
        acc.1 += 1;
    })?;
    Ok(ratio(s.0, s.1))
}
