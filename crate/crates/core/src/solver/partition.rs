//! Partition dimension by pruned restricted-growth search.
//!
//! Vertices are assigned to blocks in a fixed order. Block labels follow
//! restricted growth with respect to that order, so every unordered partition
//! is visited once. Pruning:
//!
//! * twins go to distinct blocks, with labels increasing along each twin
//!   class. Each class occupies consecutive positions of the order, so
//!   permuting one class never moves the first member of a block holding an
//!   earlier class; every orbit under twin swaps keeps a representative;
//! * every block must still be openable by the remaining vertices;
//! * a same-block pair `u, v` is dead once its current block distances agree
//!   and no unassigned vertex that distinguishes `u` from `v` is closer to
//!   either of them than the largest of those distances. Unassigned vertices
//!   `w` with `d(u,w) = d(v,w)` lower both coordinates equally, so such a
//!   pair ends with equal vectors in every completion.
//!
//! Surviving leaves are re-checked with the plain partition checker.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use super::bounds::pd_lower_bound;
use super::{check_input, Budget, LocalCounter, SolveResult, SolverConfig, MAX_PD_ORDER};
use crate::error::Result;
use crate::graph::{DistanceMatrix, Graph};
use crate::resolve::{check_resolving_blocks, twin_classes, Partition};

const INF: u8 = u8::MAX;
const NONE: u8 = u8::MAX;

type Row = [u8; MAX_PD_ORDER];

/// Read-only data shared by all workers for one graph.
struct Plan {
    n: usize,
    /// Assignment order.
    order: Vec<usize>,
    /// Distances, `n * n`, saturated at `INF - 1`.
    dist: Vec<u8>,
    /// For pair `(u, v)`, `u < v`: at depth `k`, the smallest
    /// `min(d(u,w), d(v,w))` over distinguishing `w` placed after position
    /// `k`; `INF` when none remain. Layout `pair * n + k`.
    horizon: Vec<u8>,
    /// The twin placed just before each vertex, if any.
    prev_twin: Vec<Option<usize>>,
    dm: DistanceMatrix,
}

#[inline]
fn pair_index(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v);
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

impl Plan {
    fn new(dm: &DistanceMatrix) -> Self {
        let n = dm.order();
        let dist: Vec<u8> = (0..n * n)
            .map(|i| dm.get(i / n, i % n).min(INF as u32 - 1) as u8)
            .collect();
        let d = |u: usize, v: usize| dist[u * n + v];
        let twins = twin_classes(dm);

        let mut distinguishers: Vec<Vec<usize>> = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                distinguishers.push((0..n).filter(|&w| d(u, w) != d(v, w)).collect());
            }
        }
        let order = assignment_order(n, &twins, &distinguishers, &dist);
        let mut pos = vec![0; n];
        for (k, &v) in order.iter().enumerate() {
            pos[v] = k;
        }

        let mut horizon = vec![INF; distinguishers.len() * n];
        let mut p = 0;
        for u in 0..n {
            for v in u + 1..n {
                let slot = &mut horizon[p * n..(p + 1) * n];
                for &w in &distinguishers[p] {
                    let near = d(u, w).min(d(v, w));
                    // w is still unassigned at every depth k < pos[w]
                    for s in slot.iter_mut().take(pos[w]) {
                        *s = (*s).min(near);
                    }
                }
                p += 1;
            }
        }

        let mut prev_twin = vec![None; n];
        for class in &twins {
            let mut by_pos = class.clone();
            by_pos.sort_by_key(|&v| pos[v]);
            for w in by_pos.windows(2) {
                prev_twin[w[1]] = Some(w[0]);
            }
        }

        Plan {
            n,
            order,
            dist,
            horizon,
            prev_twin,
            dm: dm.clone(),
        }
    }
}

/// Largest twin class first, then greedily the vertex that completes the
/// most distinguisher sets, ties broken by proximity to placed vertices and
/// then by id. A chosen vertex brings the rest of its twin class along.
fn assignment_order(
    n: usize,
    twins: &[Vec<usize>],
    distinguishers: &[Vec<usize>],
    dist: &[u8],
) -> Vec<usize> {
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let seed = twins
        .iter()
        .max_by(|a, b| a.len().cmp(&b.len()).then(b[0].cmp(&a[0])))
        .expect("nonempty graph");
    let mut missing: Vec<usize> = distinguishers.iter().map(Vec::len).collect();
    let place =
        |v: usize, placed: &mut Vec<bool>, order: &mut Vec<usize>, missing: &mut Vec<usize>| {
            placed[v] = true;
            order.push(v);
            for (p, ds) in distinguishers.iter().enumerate() {
                if ds.contains(&v) {
                    missing[p] -= 1;
                }
            }
        };
    for &v in seed {
        place(v, &mut placed, &mut order, &mut missing);
    }
    while order.len() < n {
        let mut best: Option<(usize, u32, usize)> = None;
        for v in (0..n).filter(|&v| !placed[v]) {
            let completes = distinguishers
                .iter()
                .enumerate()
                .filter(|(p, ds)| missing[*p] == 1 && ds.contains(&v))
                .count();
            let near = order
                .iter()
                .map(|&u| dist[u * n + v] as u32)
                .min()
                .unwrap_or(0);
            let better = best
                .is_none_or(|(c, d, w)| completes > c || (completes == c && (near, v) < (d, w)));
            if better {
                best = Some((completes, near, v));
            }
        }
        let (_, _, v) = best.expect("unplaced vertex");
        let class = twins
            .iter()
            .find(|c| c.contains(&v))
            .expect("twin classes cover");
        for &w in class {
            place(w, &mut placed, &mut order, &mut missing);
        }
    }
    order
}

/// Mutable search state of one worker.
struct State<'a> {
    plan: &'a Plan,
    t: usize,
    assign: Vec<u8>,
    /// `cur[x][b]`: distance from `x` to the assigned part of block `b`.
    cur: Vec<Row>,
    members: Vec<Vec<usize>>,
    opened: usize,
    undo: Vec<(u8, u8, u8)>,
}

impl<'a> State<'a> {
    fn new(plan: &'a Plan, t: usize) -> Self {
        State {
            plan,
            t,
            assign: vec![NONE; plan.n],
            cur: vec![[INF; MAX_PD_ORDER]; plan.n],
            members: vec![Vec::new(); t],
            opened: 0,
            undo: Vec::with_capacity(plan.n * plan.n),
        }
    }

    /// Block choices allowed for the vertex at depth `k`.
    fn choices(&self, k: usize) -> impl Iterator<Item = usize> + '_ {
        let v = self.plan.order[k];
        let remaining_after = self.plan.n - k - 1;
        let limit = (self.opened + 1).min(self.t);
        (0..limit).filter(move |&b| {
            let opened = self.opened.max(b + 1);
            remaining_after >= self.t - opened
                && self.plan.prev_twin[v].is_none_or(|w| self.assign[w] < b as u8)
        })
    }

    fn apply(&mut self, v: usize, b: usize) -> usize {
        let n = self.plan.n;
        let mark = self.undo.len();
        self.assign[v] = b as u8;
        self.members[b].push(v);
        self.opened = self.opened.max(b + 1);
        for x in 0..n {
            let d = self.plan.dist[x * n + v];
            let slot = &mut self.cur[x][b];
            if d < *slot {
                self.undo.push((x as u8, b as u8, *slot));
                *slot = d;
            }
        }
        mark
    }

    fn revert(&mut self, v: usize, b: usize, mark: usize, opened: usize) {
        while self.undo.len() > mark {
            let (x, blk, old) = self.undo.pop().unwrap();
            self.cur[x as usize][blk as usize] = old;
        }
        self.members[b].pop();
        self.assign[v] = NONE;
        self.opened = opened;
    }

    /// Whether some same-block pair can no longer be separated after
    /// assigning depth `k`.
    fn has_dead_pair(&self, k: usize) -> bool {
        let n = self.plan.n;
        for block in &self.members {
            for (i, &a) in block.iter().enumerate() {
                let ra = &self.cur[a];
                for &b in &block[i + 1..] {
                    if *ra != self.cur[b] {
                        continue;
                    }
                    let (u, v) = if a < b { (a, b) } else { (b, a) };
                    let horizon = self.plan.horizon[pair_index(n, u, v) * n + k];
                    let reach = ra[..self.t].iter().copied().max().unwrap_or(0);
                    if reach <= horizon {
                        return true;
                    }
                }
            }
        }
        false
    }

    fn leaf_resolves(&self) -> bool {
        check_resolving_blocks(&self.plan.dm, &self.members).is_resolving()
    }
}

struct Worker<'a> {
    counter: LocalCounter<'a>,
    prefix: usize,
    best_prefix: &'a AtomicUsize,
    stopped: bool,
}

impl Worker<'_> {
    fn should_stop(&mut self) -> bool {
        if !self.counter.tick() || self.best_prefix.load(Ordering::Relaxed) < self.prefix {
            self.stopped = true;
        }
        self.stopped
    }

    fn dfs(&mut self, state: &mut State<'_>, k: usize) -> bool {
        if k == state.plan.n {
            return state.leaf_resolves();
        }
        let v = state.plan.order[k];
        let blocks: Vec<usize> = state.choices(k).collect();
        for b in blocks {
            if self.should_stop() {
                return false;
            }
            let opened = state.opened;
            let mark = state.apply(v, b);
            if !state.has_dead_pair(k) && self.dfs(state, k + 1) {
                return true;
            }
            state.revert(v, b, mark, opened);
            if self.stopped {
                return false;
            }
        }
        false
    }
}

/// All viable assignments of the first `depth` vertices, in search order.
fn prefixes(plan: &Plan, t: usize, depth: usize) -> Vec<Vec<u8>> {
    fn walk(state: &mut State<'_>, k: usize, depth: usize, out: &mut Vec<Vec<u8>>) {
        if k == depth {
            out.push(
                state.plan.order[..depth]
                    .iter()
                    .map(|&v| state.assign[v])
                    .collect(),
            );
            return;
        }
        let v = state.plan.order[k];
        let blocks: Vec<usize> = state.choices(k).collect();
        for b in blocks {
            let opened = state.opened;
            let mark = state.apply(v, b);
            if !state.has_dead_pair(k) {
                walk(state, k + 1, depth, out);
            }
            state.revert(v, b, mark, opened);
        }
    }
    let mut state = State::new(plan, t);
    let mut out = Vec::new();
    walk(&mut state, 0, depth, &mut out);
    out
}

fn search_blocks(plan: &Plan, t: usize, budget: &Budget) -> Option<Partition> {
    let target = 64 * rayon::current_num_threads();
    let mut depth = 1.min(plan.n);
    let mut starts = prefixes(plan, t, depth);
    while starts.len() < target && depth < plan.n.saturating_sub(2) {
        depth += 1;
        starts = prefixes(plan, t, depth);
    }
    let best_prefix = AtomicUsize::new(usize::MAX);
    starts
        .par_iter()
        .enumerate()
        .map(|(idx, prefix)| {
            let mut state = State::new(plan, t);
            for (k, &b) in prefix.iter().enumerate() {
                state.apply(plan.order[k], b as usize);
            }
            let mut worker = Worker {
                counter: LocalCounter::new(budget),
                prefix: idx,
                best_prefix: &best_prefix,
                stopped: false,
            };
            if worker.dfs(&mut state, prefix.len()) {
                best_prefix.fetch_min(idx, Ordering::Relaxed);
                let mut labels = vec![0; plan.n];
                for (v, &b) in state.assign.iter().enumerate() {
                    labels[v] = b as usize;
                }
                Some(Partition::from_labels(&labels))
            } else {
                None
            }
        })
        .find_map_first(|x| x)
}

/// Searches for a resolving partition of `g` with exactly `t` blocks.
/// `Ok(None)` is an exhaustive refutation.
pub fn find_resolving_partition(
    g: &Graph,
    t: usize,
    config: &SolverConfig,
) -> Result<Option<Partition>> {
    check_input(g, MAX_PD_ORDER)?;
    if t == 0 || t > g.order() {
        return Ok(None);
    }
    let plan = Plan::new(&g.distances());
    let budget = Budget::new(config.node_budget);
    let found = config.run(|| search_blocks(&plan, t, &budget));
    if budget.is_exceeded() {
        return Err(budget.error());
    }
    Ok(found)
}

/// Exact partition dimension, starting from [`pd_lower_bound`].
pub fn partition_dimension(g: &Graph, config: &SolverConfig) -> Result<SolveResult<Partition>> {
    check_input(g, MAX_PD_ORDER)?;
    let n = g.order();
    let lower = pd_lower_bound(g)?;
    if lower >= n {
        return Ok(SolveResult {
            value: n,
            witness: Partition::singletons(n),
            nodes_explored: 0,
            used_oracle: false,
        });
    }
    let plan = Plan::new(&g.distances());
    let budget = Budget::new(config.node_budget);
    config.run(|| {
        for t in lower..=n {
            let found = search_blocks(&plan, t, &budget);
            if budget.is_exceeded() {
                return Err(budget.error());
            }
            if let Some(witness) = found {
                return Ok(SolveResult {
                    value: t,
                    witness,
                    nodes_explored: budget.used(),
                    used_oracle: false,
                });
            }
        }
        unreachable!("singletons always resolve")
    })
}
