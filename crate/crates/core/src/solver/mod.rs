//! Exact metric dimension and partition dimension.
//!
//! Each invariant has a naive oracle (plain enumeration, used as the
//! reference in tests) and a pruned search that is the production path.

mod bounds;
mod metric;
pub mod oracle;
mod partition;
pub mod rgs;

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

pub use bounds::{dim_lower_bound, pd_lower_bound};
pub use metric::metric_dimension;
pub use oracle::{metric_dimension_oracle, partition_dimension_oracle};
pub use partition::{find_resolving_partition, partition_dimension};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default node budget shared by both solvers.
pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000_000;

/// Largest order the metric dimension search accepts.
pub const MAX_DIM_ORDER: usize = 64;
/// Largest order the partition dimension search accepts.
pub const MAX_PD_ORDER: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    /// Search nodes allowed before giving up with [`Error::BudgetExceeded`].
    pub node_budget: u64,
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            node_budget: DEFAULT_NODE_BUDGET,
            threads: None,
        }
    }
}

impl SolverConfig {
    pub fn with_budget(node_budget: u64) -> Self {
        SolverConfig {
            node_budget,
            ..Self::default()
        }
    }

    pub fn threads(mut self, threads: usize) -> Self {
        self.threads = Some(threads.max(1));
        self
    }

    pub(crate) fn run<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        match self.threads {
            None => f(),
            Some(n) => rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .expect("thread pool")
                .install(f),
        }
    }
}

/// Optimal value with a witness achieving it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult<W> {
    pub value: usize,
    pub witness: W,
    pub nodes_explored: u64,
    pub used_oracle: bool,
}

pub(crate) fn check_input(g: &Graph, limit: usize) -> Result<()> {
    if g.order() < 2 {
        return Err(Error::OrderTooSmall(g.order()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.order() > limit {
        return Err(Error::OrderTooLarge {
            order: g.order(),
            limit,
        });
    }
    Ok(())
}

/// Node counter shared by all workers of one solve.
pub(crate) struct Budget {
    limit: u64,
    used: AtomicU64,
    exceeded: AtomicBool,
}

impl Budget {
    const FLUSH: u64 = 1 << 12;

    pub(crate) fn new(limit: u64) -> Self {
        Budget {
            limit,
            used: AtomicU64::new(0),
            exceeded: AtomicBool::new(false),
        }
    }

    /// Adds `n` nodes; returns `false` once the budget is spent.
    pub(crate) fn charge(&self, n: u64) -> bool {
        let total = self.used.fetch_add(n, Ordering::Relaxed) + n;
        if total > self.limit {
            self.exceeded.store(true, Ordering::Relaxed);
        }
        !self.exceeded.load(Ordering::Relaxed)
    }

    pub(crate) fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    pub(crate) fn is_exceeded(&self) -> bool {
        self.exceeded.load(Ordering::Relaxed)
    }

    pub(crate) fn error(&self) -> Error {
        Error::BudgetExceeded(self.limit)
    }
}

/// Per-worker node tally that flushes into a [`Budget`] in batches.
pub(crate) struct LocalCounter<'a> {
    budget: &'a Budget,
    pending: u64,
}

impl<'a> LocalCounter<'a> {
    pub(crate) fn new(budget: &'a Budget) -> Self {
        LocalCounter { budget, pending: 0 }
    }

    /// Counts one node; `false` when the search must stop.
    #[inline]
    pub(crate) fn tick(&mut self) -> bool {
        self.pending += 1;
        if self.pending >= Budget::FLUSH {
            self.flush()
        } else {
            true
        }
    }

    pub(crate) fn flush(&mut self) -> bool {
        let n = std::mem::take(&mut self.pending);
        self.budget.charge(n)
    }
}

impl Drop for LocalCounter<'_> {
    fn drop(&mut self) {
        self.flush();
    }
}
