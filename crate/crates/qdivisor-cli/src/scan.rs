//! Bulk evaluation of F(n) or the largest coefficient over a range, fanned
//! out across worker threads. Workers take interleaved stripes (cost grows
//! with n) and the merged result is sorted, so output bytes are identical
//! for every thread count.

use std::thread;

use qdivisor_core::erdos_nicolas::f_value;
use qdivisor_core::kr_poly::largest_coefficient;
use qdivisor_core::Result;

use crate::args::ScanKind;

/// Largest number of values one scan may cover.
pub const MAX_SPAN: u64 = 100_000_000;

fn value_for(what: ScanKind, n: u64) -> Result<u64> {
    match what {
        ScanKind::F => f_value(n),
        ScanKind::MaxCoeff => largest_coefficient(n),
    }
}

/// Computes `what` for every n in `targets`, in ascending order of n.
pub fn compute(targets: &[u64], what: ScanKind, threads: usize) -> Result<Vec<(u64, u64)>> {
    let threads = threads.clamp(1, targets.len().max(1));
    if threads == 1 || targets.len() < 128 {
        let mut rows = Vec::with_capacity(targets.len());
        for &n in targets {
            rows.push((n, value_for(what, n)?));
        }
        return Ok(rows);
    }

    let worker_results: Vec<Result<Vec<(u64, u64)>>> = thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|worker| {
                scope.spawn(move || {
                    targets
                        .iter()
                        .skip(worker)
                        .step_by(threads)
                        .map(|&n| value_for(what, n).map(|v| (n, v)))
                        .collect()
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("scan worker panicked"))
            .collect()
    });

    let mut rows = Vec::with_capacity(targets.len());
    for result in worker_results {
        rows.extend(result?);
    }
    rows.sort_unstable_by_key(|&(n, _)| n);
    Ok(rows)
}
