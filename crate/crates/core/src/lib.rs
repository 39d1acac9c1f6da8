//! Exact sorting probabilities of the Catalan poset `P_n = C_2 × C_n`.
//!
//! Linear extensions of `P_n` are standard Young tableaux of shape `(n, n)`,
//! which in turn are Dyck paths from `(0,0)` to `(n,n)` that never dip below
//! the diagonal. Cells of the first row are up-steps and cells of the second
//! row are right-steps. Every probability in this crate is an exact rational
//! over `Cat(n)`.
//!
//! Layout:
//!
//! * [`arith`]: big integers, exact ratios and the factorial cache.
//! * [`ballot`]: above-diagonal path counts.
//! * [`pathprob`]: vertex and edge visit probabilities.
//! * [`sortprob`]: `R_n(h, z)`, pair probabilities, `δ(P_n)` and the crossing construction.
//! * [`oracle`]: brute-force tableau enumeration, independent of the formulas.
//! * [`limit`]: the Brownian excursion marginal CDF.
//! * [`export`] and [`verify`]: scan records, file formats and check suites.

pub mod arith;
pub mod ballot;
mod error;
pub mod exec;
pub mod export;
pub mod limit;
pub mod oracle;
pub mod pathprob;
pub mod sortprob;
pub mod verify;

pub use arith::{BinomialCache, ExactInt, ExactRatio};
pub use error::{Error, Result};
pub use exec::Exec;
pub use sortprob::{Cell, CrossingOutcome, CrossingRecord, DeltaMode, DeltaRecord, PairProbability};
