//! Worker pool with order-preserving results, and the resource budget used
//! to interrupt long searches.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;
use std::time::{Duration, Instant};

use pmh_core::engine::{check_pmh_branch, first_branches, Interrupt, PmhVerdict};
use pmh_core::{Graph, Result};

/// Applies `f` to every item on up to `jobs` threads. Results come back in
/// item order whatever the scheduling.
pub fn map_ordered<T, R, F>(jobs: usize, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    let jobs = jobs.max(1).min(items.len().max(1));
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
                slots.lock().expect("worker panicked")[i] = Some(r);
            });
        }
    });
    slots
        .into_inner()
        .expect("worker panicked")
        .into_iter()
        .map(|r| r.expect("every item is processed"))
        .collect()
}

/// Per-instance limits: a wall-clock deadline and a cap on matchings
/// examined, shared by every worker of the instance.
pub struct Budget {
    deadline: Option<Instant>,
    cap: u64,
    seen: AtomicU64,
}

impl Budget {
    pub fn new(timeout: Option<Duration>, cap: u64) -> Budget {
        Budget {
            deadline: timeout.map(|t| Instant::now() + t),
            cap,
            seen: AtomicU64::new(0),
        }
    }

    pub fn unlimited() -> Budget {
        Budget::new(None, u64::MAX)
    }

    pub fn timed_out(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }

    pub fn over_cap(&self) -> bool {
        self.seen.load(Ordering::Relaxed) >= self.cap
    }
}

impl Interrupt for Budget {
    /// Called once before each matching; counts it against the shared cap.
    fn should_stop(&self, _examined: u64) -> bool {
        self.seen.fetch_add(1, Ordering::Relaxed) >= self.cap || self.timed_out()
    }
}

/// `check_pmh` with the stream split by the first branching edge. The
/// per-branch verdicts are merged in branch order, so the witness is the
/// first failure in enumeration order for any `jobs`.
pub fn check_pmh_parallel(g: &Graph, jobs: usize, budget: &Budget) -> Result<PmhVerdict> {
    let branches = first_branches(g);
    let parts = map_ordered(jobs, &branches, |&e| check_pmh_branch(g, e, budget));
    let mut verdict: Option<PmhVerdict> = None;
    for part in parts {
        let part = part?;
        verdict = Some(match verdict {
            None => part,
            Some(v) => v.merge(part),
        });
    }
    match verdict {
        Some(v) => Ok(v),
        None => pmh_core::engine::check_pmh_with(g, budget),
    }
}
