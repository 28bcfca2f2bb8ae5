//! Order-preserving fan-out over scoped threads.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

use cactus3_core::counting::{m_bruteforce_range, m_bruteforce_ranges, MTable};

use crate::error::Result;

/// `items.map(f)` on up to `jobs` threads; results come back in input order.
pub fn par_map<T: Sync, R: Send>(items: &[T], jobs: usize, f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let jobs = jobs.clamp(1, items.len().max(1));
    if jobs == 1 {
        return items.iter().map(f).collect();
    }
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<R>>> = Mutex::new((0..items.len()).map(|_| None).collect());
    thread::scope(|s| {
        for _ in 0..jobs {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(item) = items.get(i) else { break };
                let r = f(item);
                slots.lock().expect("no worker panicked")[i] = Some(r);
            });
        }
    });
    slots
        .into_inner()
        .expect("no worker panicked")
        .into_iter()
        .map(|r| r.expect("every slot filled"))
        .collect()
}

/// `m_bruteforce` split into `α₁` rank ranges; the merge does not depend on `jobs`.
pub fn m_table(n: usize, limit: usize, jobs: usize) -> Result<MTable> {
    let ranges = m_bruteforce_ranges(n, (jobs * 4).max(1));
    let parts = par_map(&ranges, jobs, |r| m_bruteforce_range(n, limit, r.clone()));
    let mut table = MTable::new(n);
    for part in parts {
        table.merge(&part?)?;
    }
    Ok(table)
}
