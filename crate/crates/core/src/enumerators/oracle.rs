use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::{extended_vars, Enumerator, Kind, Method};
use crate::codes::{AllWords, Budget, CodeSpec, Statistic};
use crate::error::{Error, Result};
use crate::exactalg::IntPoly;

type Counts = HashMap<Vec<u64>, u64>;

fn record(stats: &[Statistic], r: u32, x: &[u32], counts: &mut Counts) -> Result<()> {
    let mut exps = Vec::with_capacity(stats.len() + r as usize);
    for s in stats {
        let v = s.eval_symbols(x);
        let v = u64::try_from(v).map_err(|_| {
            Error::Unsupported(format!("statistic value {v} is negative; exponents must be >= 0"))
        })?;
        exps.push(v);
    }
    exps.resize(stats.len() + r as usize, 0);
    for &sym in x {
        exps[stats.len() + sym as usize] += 1;
    }
    *counts.entry(exps).or_insert(0) += 1;
    Ok(())
}

/// Sums the extended monomial of every word of `[r]^n` accepted by `keep`.
/// Work is split by two-symbol prefixes and merged by polynomial addition.
pub(crate) fn tally(
    n: usize,
    r: u32,
    stats: &[Statistic],
    keep: impl Fn(&[u32]) -> bool + Sync,
    budget: Budget,
) -> Result<IntPoly> {
    budget.check_space(r, n)?;
    for s in stats {
        s.check_length(n)?;
    }
    let depth = n.min(2);
    let prefixes: Vec<Vec<u32>> = AllWords::new(depth, r).map(|w| w.symbols().to_vec()).collect();
    let partial: Vec<Counts> = prefixes
        .par_iter()
        .map(|p| {
            let mut counts = Counts::new();
            for w in AllWords::with_prefix(n, r, p) {
                if keep(w.symbols()) {
                    record(stats, r, w.symbols(), &mut counts)?;
                }
            }
            Ok(counts)
        })
        .collect::<Result<_>>()?;
    let mut total = Counts::new();
    for part in partial {
        for (k, v) in part {
            *total.entry(k).or_insert(0) += v;
        }
    }
    IntPoly::from_terms(
        &extended_vars(stats.len(), r),
        total.into_iter().map(|(k, v)| (k, BigInt::from(v))),
    )
}

/// Extended weight enumerator by summing over the codewords.
pub fn oracle_extended(spec: &CodeSpec, budget: Budget) -> Result<Enumerator> {
    let stats = spec.statistics();
    let poly = tally(spec.n(), spec.r(), &stats, |x| spec.contains_symbols(x), budget)?;
    Enumerator::new(Kind::Extended, poly, Some(spec.clone()), Method::Oracle)
}
