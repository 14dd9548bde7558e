//! Metric dimension as a hitting-set problem.
//!
//! Every unordered pair `{u, v}` must be hit by a vertex `w` with
//! `d(u,w) != d(v,w)`. The search branches on the uncovered pair with the
//! fewest remaining candidates and prunes with a disjoint-pair packing bound.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use super::bounds::dim_lower_bound;
use super::{check_input, Budget, LocalCounter, SolveResult, SolverConfig, MAX_DIM_ORDER};
use crate::error::Result;
use crate::graph::Graph;
use crate::resolve::{is_resolving_set, VertexSet};

struct PairCover {
    /// Vertices distinguishing each pair, as a bitmask.
    distinguishers: Vec<u64>,
    /// Pairs each vertex distinguishes, as a bitset over pair indices.
    covers: Vec<Vec<u64>>,
    words: usize,
}

impl PairCover {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        let dm = g.distances();
        let pairs = n * (n - 1) / 2;
        let words = pairs.div_ceil(64);
        let mut distinguishers = Vec::with_capacity(pairs);
        let mut covers = vec![vec![0u64; words]; n];
        for u in 0..n {
            for v in u + 1..n {
                let p = distinguishers.len();
                let mut mask = 0u64;
                for (w, cover) in covers.iter_mut().enumerate() {
                    if dm.get(u, w) != dm.get(v, w) {
                        mask |= 1 << w;
                        cover[p / 64] |= 1 << (p % 64);
                    }
                }
                distinguishers.push(mask);
            }
        }
        PairCover {
            distinguishers,
            covers,
            words,
        }
    }
}

struct Search<'a> {
    cover: &'a PairCover,
    counter: LocalCounter<'a>,
    /// Branch index of this worker; the search stops once an earlier branch
    /// has succeeded.
    branch: usize,
    best_branch: &'a AtomicUsize,
    stopped: bool,
}

impl Search<'_> {
    fn should_stop(&mut self) -> bool {
        if !self.counter.tick() || self.best_branch.load(Ordering::Relaxed) < self.branch {
            self.stopped = true;
        }
        self.stopped
    }

    /// Picks the uncovered pair with fewest candidates and bounds the number
    /// of further vertices needed. `None` when every pair is covered.
    fn inspect(&self, covered: &[u64], excluded: u64) -> Option<(u64, usize)> {
        let mut best: Option<u64> = None;
        let mut best_count = u32::MAX;
        let mut packed = 0u64;
        let mut packing = 0usize;
        for (w, &word) in covered.iter().enumerate() {
            let mut free = !word;
            if w == self.cover.words - 1 {
                let tail = self.cover.distinguishers.len() % 64;
                if tail != 0 {
                    free &= (1u64 << tail) - 1;
                }
            }
            while free != 0 {
                let p = w * 64 + free.trailing_zeros() as usize;
                free &= free - 1;
                let cand = self.cover.distinguishers[p] & !excluded;
                let count = cand.count_ones();
                if count < best_count {
                    best_count = count;
                    best = Some(cand);
                }
                if cand & packed == 0 {
                    packed |= cand;
                    packing += 1;
                }
                if count == 0 {
                    return Some((0, usize::MAX));
                }
            }
        }
        best.map(|cand| (cand, packing))
    }

    fn dfs(
        &mut self,
        chosen: u64,
        excluded: u64,
        covered: &[u64],
        remaining: usize,
    ) -> Option<u64> {
        if self.should_stop() {
            return None;
        }
        let Some((cand, needed)) = self.inspect(covered, excluded) else {
            return Some(chosen);
        };
        if needed > remaining {
            return None;
        }
        let mut excluded = excluded;
        let mut next = covered.to_vec();
        let mut rest = cand;
        while rest != 0 {
            let w = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            for (dst, (&a, &b)) in next
                .iter_mut()
                .zip(covered.iter().zip(&self.cover.covers[w]))
            {
                *dst = a | b;
            }
            if let Some(found) = self.dfs(chosen | 1 << w, excluded, &next, remaining - 1) {
                return Some(found);
            }
            if self.stopped {
                return None;
            }
            excluded |= 1 << w;
        }
        None
    }
}

/// Resolving set of size `k`, if one exists.
fn search_size(cover: &PairCover, k: usize, budget: &Budget) -> Option<u64> {
    let empty = vec![0u64; cover.words];
    let best_branch = AtomicUsize::new(usize::MAX);
    let root = Search {
        cover,
        counter: LocalCounter::new(budget),
        branch: 0,
        best_branch: &best_branch,
        stopped: false,
    };
    let (cand, needed) = match root.inspect(&empty, 0) {
        None => return Some(0),
        Some(x) => x,
    };
    drop(root);
    if needed > k {
        return None;
    }
    let candidates: Vec<usize> = (0..64).filter(|&w| cand >> w & 1 == 1).collect();
    candidates
        .par_iter()
        .enumerate()
        .map(|(branch, &w)| {
            let excluded = candidates[..branch].iter().fold(0u64, |m, &x| m | 1 << x);
            let mut search = Search {
                cover,
                counter: LocalCounter::new(budget),
                branch,
                best_branch: &best_branch,
                stopped: false,
            };
            let found = search.dfs(1 << w, excluded, &cover.covers[w], k - 1);
            if found.is_some() {
                best_branch.fetch_min(branch, Ordering::Relaxed);
            }
            found
        })
        .find_map_first(|x| x)
}

/// Exact metric dimension by branch and bound over distinguished pairs.
pub fn metric_dimension(g: &Graph, config: &SolverConfig) -> Result<SolveResult<VertexSet>> {
    check_input(g, MAX_DIM_ORDER)?;
    let n = g.order();
    let lower = dim_lower_bound(g)?;
    let cover = PairCover::new(g);
    let budget = Budget::new(config.node_budget);
    let dm = g.distances();
    config.run(|| {
        for k in lower..n {
            let found = search_size(&cover, k, &budget);
            if budget.is_exceeded() {
                return Err(budget.error());
            }
            if let Some(mask) = found {
                let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                let witness = VertexSet::new(members, n)?;
                debug_assert!(is_resolving_set(&dm, &witness));
                return Ok(SolveResult {
                    value: witness.len(),
                    witness,
                    nodes_explored: budget.used(),
                    used_oracle: false,
                });
            }
        }
        unreachable!("n - 1 vertices always resolve a connected graph")
    })
}
