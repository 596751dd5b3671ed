//! Per-`n` sweeps on a rayon pool. Records are gathered in `n` order and
//! assembled by the same routine as the sequential sweeps, so the reports
//! are identical whatever the thread schedule.

use std::ops::RangeInclusive;

use laplaceq_core::verify::{Sweep, VerificationReport};
use laplaceq_core::{Error, Result};
use rayon::prelude::*;

pub const THREADS_VAR: &str = "LAPLACEQ_THREADS";

/// Thread cap from `LAPLACEQ_THREADS`; `None` when unset, empty or 0.
pub fn thread_cap() -> Option<usize> {
    std::env::var(THREADS_VAR)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&t| t > 0)
}

fn pool(threads: Option<usize>) -> rayon::ThreadPool {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        b = b.num_threads(t);
    }
    b.build().expect("thread pool")
}

pub fn run_sweep(
    sweep: Sweep,
    n_range: RangeInclusive<usize>,
    m: Option<usize>,
    threads: Option<usize>,
) -> Result<VerificationReport> {
    if n_range.is_empty() {
        return Err(Error::InvalidParameter {
            name: "n_range",
            reason: "empty range".into(),
        });
    }
    let bounds = (*n_range.start(), *n_range.end());
    let ns: Vec<usize> = n_range.collect();
    let per_n: Vec<Result<_>> = pool(threads).install(|| ns.par_iter().map(|&n| sweep.records(n, m)).collect());
    let mut records = Vec::new();
    // first error in n order, not whichever thread lost the race
    for r in per_n {
        records.extend(r?);
    }
    Ok(VerificationReport::assemble(
        sweep.theorem(),
        sweep.subject(),
        bounds,
        m,
        records,
        sweep.kind(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use laplaceq_core::verify::{sweeps_for, TheoremId};

    #[test]
    fn matches_sequential() {
        for theorem in [TheoremId::T2, TheoremId::T3, TheoremId::T5, TheoremId::T6, TheoremId::T8, TheoremId::T9, TheoremId::AlikeRelation] {
            for sweep in sweeps_for(theorem) {
                let range = sweep.min_order()..=30;
                let seq = sweep.run(range.clone(), None).unwrap();
                for threads in [Some(1), Some(3), None] {
                    assert_eq!(run_sweep(sweep, range.clone(), None, threads).unwrap(), seq);
                }
            }
        }
    }

    #[test]
    fn errors_match_sequential() {
        let sweep = sweeps_for(TheoremId::T8)[0];
        let seq = sweep.run(3..=20, None).unwrap_err();
        assert_eq!(run_sweep(sweep, 3..=20, None, Some(4)).unwrap_err(), seq);
        #[allow(clippy::reversed_empty_ranges)]
        let empty = 9..=8;
        assert!(run_sweep(sweep, empty, None, None).is_err());
    }
}
