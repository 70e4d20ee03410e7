//! Threaded search over the oracle's pass partitions.

use std::collections::BTreeSet;
use std::thread;

use powersum_core::oracle::{SearchPlan, SearchSpec};
use powersum_core::{PowerSumPair, Result};

/// Environment default for the worker count.
pub const WORKERS_ENV: &str = "POWERSUM_WORKERS";

/// `POWERSUM_WORKERS` if it parses as a positive integer, else 1.
pub fn default_workers() -> usize {
    std::env::var(WORKERS_ENV).ok().and_then(|v| v.trim().parse().ok()).filter(|&n: &usize| n > 0).unwrap_or(1)
}

/// Same results as `oracle::search`, computed by `workers` threads that each
/// take every `workers`-th pass. The merge is a sorted set, so the output
/// does not depend on the worker count or scheduling.
pub fn parallel_search(spec: &SearchSpec, workers: usize) -> Result<Vec<PowerSumPair>> {
    let workers = workers.max(1);
    let plan = SearchPlan::new(spec)?.with_min_passes(workers);
    plan.check_ceiling()?;
    let parts: Vec<BTreeSet<PowerSumPair>> = thread::scope(|s| {
        let handles: Vec<_> = (0..workers).map(|w| s.spawn({
            let plan = &plan;
            move || plan.collect_partition(w, workers)
        })).collect();
        handles.into_iter().map(|h| h.join().expect("search worker panicked")).collect()
    });
    let mut all = BTreeSet::new();
    for p in parts {
        all.extend(p);
    }
    Ok(all.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use powersum_core::oracle::search;

    #[test]
    fn worker_count_does_not_change_results() {
        let spec = SearchSpec::new([3], 12).unwrap().with_signed(false);
        let one = search(&spec).unwrap();
        for w in [1, 2, 3, 8] {
            assert_eq!(parallel_search(&spec, w).unwrap(), one, "workers = {w}");
        }
    }
}
