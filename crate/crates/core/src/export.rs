//! Scans over `n` and the file formats they produce.
//!
//! CSV columns are fixed: `n, delta_num, delta_den, argmin_a, argmin_b,
//! delta_float, scaled_n54, log_n_delta`, one row per `n` ascending, floats
//! with 17 significant digits. b-files are OEIS plain text, `"n value"` per
//! line, LF-terminated.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use serde::Serialize;

use crate::arith::{BinomialCache, ExactRatio};
use crate::exec::{with_workers, Exec};
use crate::sortprob::{delta_with, DeltaMode, DeltaRecord};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanFormat {
    Csv,
    Jsonl,
    OeisBfile,
}

impl FromStr for ScanFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(ScanFormat::Csv),
            "jsonl" => Ok(ScanFormat::Jsonl),
            "oeis_bfile" | "bfile" => Ok(ScanFormat::OeisBfile),
            other => Err(Error::domain(format!("unknown scan format {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanConfig {
    pub n_from: u32,
    pub n_to: u32,
    pub mode: DeltaMode,
    pub workers: usize,
    pub output_path: String,
    pub format: ScanFormat,
}

impl ScanConfig {
    pub fn validate(&self, cache: &BinomialCache) -> Result<()> {
        if self.n_from < 3 || self.n_from > self.n_to || self.n_to > cache.n_max() {
            return Err(Error::domain(format!(
                "scan range needs 3 <= n_from <= n_to <= n_max = {}, got [{}, {}]",
                cache.n_max(),
                self.n_from,
                self.n_to
            )));
        }
        if self.workers < 1 {
            return Err(Error::domain("scan needs at least one worker"));
        }
        Ok(())
    }
}

/// `δ(P_n)` for every `n` in `[n_from, n_to]` on a pool of `workers`
/// threads, in ascending `n`. `on_done` is called once per finished `n`.
pub fn run_scan(
    cache: &BinomialCache,
    cfg: &ScanConfig,
    on_done: impl Fn(u32) + Sync + Send,
) -> Result<Vec<DeltaRecord>> {
    cfg.validate(cache)?;
    let ns: Vec<u32> = (cfg.n_from..=cfg.n_to).collect();
    let exec = if cfg.workers > 1 { Exec::Parallel } else { Exec::Sequential };
    let records = with_workers(cfg.workers, || {
        exec.map(ns, |n| {
            let rec = delta_with(cache, n, cfg.mode, exec);
            on_done(n);
            rec
        })
    });
    records.into_iter().collect()
}

fn float17(x: f64) -> String {
    format!("{x:.16e}")
}

pub const CSV_HEADER: &str = "n,delta_num,delta_den,argmin_a,argmin_b,delta_float,scaled_n54,log_n_delta";

pub fn write_csv<W: Write>(out: &mut W, records: &[DeltaRecord]) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in records {
        let (a, b) = r.argmin_cols();
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            r.n,
            r.delta.numer(),
            r.delta.denom(),
            a,
            b,
            float17(r.delta_float),
            float17(r.scaled_n54),
            float17(r.log_n_delta)
        )?;
    }
    Ok(())
}

#[derive(Serialize)]
struct JsonRow {
    n: u32,
    delta_num: String,
    delta_den: String,
    argmin_a: u32,
    argmin_b: u32,
    delta_float: f64,
    scaled_n54: f64,
    log_n_delta: Option<f64>,
}

pub fn write_jsonl<W: Write>(out: &mut W, records: &[DeltaRecord]) -> io::Result<()> {
    for r in records {
        let (a, b) = r.argmin_cols();
        let row = JsonRow {
            n: r.n,
            delta_num: r.delta.numer().to_string(),
            delta_den: r.delta.denom().to_string(),
            argmin_a: a,
            argmin_b: b,
            delta_float: r.delta_float,
            scaled_n54: r.scaled_n54,
            log_n_delta: r.log_n_delta.is_finite().then_some(r.log_n_delta),
        };
        serde_json::to_writer(&mut *out, &row)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

/// The two published sequences derived from `δ(P_n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OeisSequence {
    /// `δ(P_n)·Cat(n)`.
    A335212,
    /// `(1/2)(1 - δ(P_n))·Cat(n)`.
    A335213,
}

impl fmt::Display for OeisSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OeisSequence::A335212 => "A335212",
            OeisSequence::A335213 => "A335213",
        })
    }
}

impl FromStr for OeisSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "A335212" => Ok(OeisSequence::A335212),
            "A335213" => Ok(OeisSequence::A335213),
            other => Err(Error::domain(format!("unknown sequence {other:?}"))),
        }
    }
}

impl OeisSequence {
    /// Term for `n`; errors instead of rounding when it is not an integer.
    pub fn term(&self, record: &DeltaRecord) -> Result<BigInt> {
        let cat = ExactRatio::from_integer(BigInt::from_biguint(Sign::Plus, record.catalan.clone()));
        let value = match self {
            OeisSequence::A335212 => &record.delta * &cat,
            OeisSequence::A335213 => &(&ExactRatio::half() * &record.delta.complement()) * &cat,
        };
        value.to_integer().ok_or_else(|| Error::NonInteger { n: record.n, value: value.to_string() })
    }
}

pub fn write_bfile<W: Write>(out: &mut W, which: OeisSequence, records: &[DeltaRecord]) -> Result<()> {
    for r in records {
        writeln!(out, "{} {}", r.n, which.term(r)?)?;
    }
    Ok(())
}

/// Terms of a b-file; blank lines and `#` comments are skipped.
pub fn parse_bfile(text: &str) -> Result<Vec<(u32, BigInt)>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = || Error::BFileParse { line: i + 1, text: line.to_string() };
        let mut parts = line.split_whitespace();
        let (Some(n), Some(v), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(bad());
        };
        out.push((n.parse().map_err(|_| bad())?, v.parse().map_err(|_| bad())?));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFileComparison {
    pub shared: usize,
    pub mismatches: Vec<(u32, BigInt, BigInt)>,
}

impl BFileComparison {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares two b-files over the indices they share.
pub fn compare_bfiles(ours: &[(u32, BigInt)], theirs: &[(u32, BigInt)]) -> BFileComparison {
    let lookup: std::collections::BTreeMap<u32, &BigInt> = theirs.iter().map(|(n, v)| (*n, v)).collect();
    let mut shared = 0;
    let mut mismatches = Vec::new();
    for (n, v) in ours {
        if let Some(&other) = lookup.get(n) {
            shared += 1;
            if other != v {
                mismatches.push((*n, v.clone(), other.clone()));
            }
        }
    }
    BFileComparison { shared, mismatches }
}

/// Sequence terms for `n` in `[n_from, max_n]`.
pub fn sequence_terms(
    cache: &BinomialCache,
    which: OeisSequence,
    n_from: u32,
    max_n: u32,
    workers: usize,
) -> Result<Vec<(u32, BigInt)>> {
    let cfg = ScanConfig {
        n_from,
        n_to: max_n,
        mode: DeltaMode::Screened,
        workers,
        output_path: String::new(),
        format: ScanFormat::OeisBfile,
    };
    run_scan(cache, &cfg, |_| {})?
        .iter()
        .map(|r| Ok((r.n, which.term(r)?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(n_from: u32, n_to: u32, workers: usize) -> ScanConfig {
        ScanConfig {
            n_from,
            n_to,
            mode: DeltaMode::Screened,
            workers,
            output_path: String::new(),
            format: ScanFormat::Csv,
        }
    }

    #[test]
    fn csv_layout() {
        let cache = BinomialCache::new(50);
        let recs = run_scan(&cache, &cfg(3, 5, 2), |_| {}).unwrap();
        let mut buf = Vec::new();
        write_csv(&mut buf, &recs).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some(CSV_HEADER));
        let first: Vec<&str> = lines.next().unwrap().split(',').collect();
        assert_eq!(&first[..5], &["3", "1", "5", "2", "1"]);
        assert_eq!(first[5], "2.0000000000000001e-1");
        assert_eq!(text.lines().count(), 4);
    }

    #[test]
    fn jsonl_layout() {
        let cache = BinomialCache::new(50);
        let recs = run_scan(&cache, &cfg(3, 3, 1), |_| {}).unwrap();
        let mut buf = Vec::new();
        write_jsonl(&mut buf, &recs).unwrap();
        let v: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        assert_eq!(v["delta_num"], "1");
        assert_eq!(v["delta_den"], "5");
        assert_eq!(v["argmin_a"], 2);
    }

    #[test]
    fn bfile_terms() {
        let cache = BinomialCache::new(50);
        let recs = run_scan(&cache, &cfg(3, 3, 1), |_| {}).unwrap();
        let mut buf = Vec::new();
        write_bfile(&mut buf, OeisSequence::A335212, &recs).unwrap();
        assert_eq!(buf, b"3 1\n");
        buf.clear();
        write_bfile(&mut buf, OeisSequence::A335213, &recs).unwrap();
        assert_eq!(buf, b"3 2\n");
    }

    #[test]
    fn bfile_parse_and_compare() {
        let parsed = parse_bfile("# comment\n3 1\n\n4 2\n5 7\n").unwrap();
        assert_eq!(parsed.len(), 3);
        let ours = vec![(4, BigInt::from(2)), (5, BigInt::from(6)), (6, BigInt::from(1))];
        let cmp = compare_bfiles(&ours, &parsed);
        assert_eq!(cmp.shared, 2);
        assert_eq!(cmp.mismatches, vec![(5, BigInt::from(6), BigInt::from(7))]);
        assert!(parse_bfile("3 x\n").is_err());
        assert!(parse_bfile("3 1 2\n").is_err());
    }

    #[test]
    fn scan_validation() {
        let cache = BinomialCache::new(50);
        assert!(run_scan(&cache, &cfg(2, 5, 1), |_| {}).is_err());
        assert!(run_scan(&cache, &cfg(6, 5, 1), |_| {}).is_err());
        assert!(run_scan(&cache, &cfg(3, 51, 1), |_| {}).is_err());
        assert!(run_scan(&cache, &cfg(3, 5, 0), |_| {}).is_err());
        assert_eq!("jsonl".parse::<ScanFormat>().unwrap(), ScanFormat::Jsonl);
        assert!("xml".parse::<ScanFormat>().is_err());
        assert_eq!("a335213".parse::<OeisSequence>().unwrap(), OeisSequence::A335213);
    }
}
