//! Naive reference solvers. Exponential and unpruned on purpose: they are
//! the ground truth the pruned searches are checked against.

use itertools::Itertools;

use super::rgs::FixedBlockPartitions;
use super::{check_input, SolveResult};
use crate::error::Result;
use crate::graph::{DistanceMatrix, Graph};
use crate::resolve::{is_resolving_set, Partition, VertexSet};

/// Graphs above this order are rejected by the oracles.
pub const MAX_ORDER: usize = 20;

/// Tries every `k`-subset in lexicographic order for `k = 1, 2, ...`.
pub fn metric_dimension_oracle(g: &Graph) -> Result<SolveResult<VertexSet>> {
    check_input(g, MAX_ORDER)?;
    let n = g.order();
    let dm = g.distances();
    let mut examined = 0u64;
    for k in 1..n {
        for subset in (0..n).combinations(k) {
            examined += 1;
            let s = VertexSet::new(subset, n)?;
            if is_resolving_set(&dm, &s) {
                return Ok(SolveResult {
                    value: k,
                    witness: s,
                    nodes_explored: examined,
                    used_oracle: true,
                });
            }
        }
    }
    unreachable!("all but one vertex always resolve a connected graph")
}

/// Tries every set partition into `t` blocks for `t = 2, 3, ...`.
pub fn partition_dimension_oracle(g: &Graph) -> Result<SolveResult<Partition>> {
    check_input(g, MAX_ORDER)?;
    let n = g.order();
    let dm = g.distances();
    let mut examined = 0u64;
    for t in 2..=n {
        let mut found = None;
        examined += for_each_partition(&dm, t, |labels| {
            if labels_resolve(&dm, labels, t) {
                found = Some(Partition::from_labels(labels));
                false
            } else {
                true
            }
        });
        if let Some(p) = found {
            return Ok(SolveResult {
                value: t,
                witness: p,
                nodes_explored: examined,
                used_oracle: true,
            });
        }
    }
    unreachable!("singletons always resolve")
}

/// First resolving partition with exactly `t` blocks in restricted-growth
/// order, by plain enumeration.
pub fn find_resolving_partition_naive(dm: &DistanceMatrix, t: usize) -> Option<Partition> {
    let mut found = None;
    for_each_partition(dm, t, |labels| {
        if labels_resolve(dm, labels, t) {
            found = Some(Partition::from_labels(labels));
            false
        } else {
            true
        }
    });
    found
}

/// Calls `visit` on every resolving partition with exactly `t` blocks.
/// Returns how many there were.
pub fn for_each_resolving_partition(
    dm: &DistanceMatrix,
    t: usize,
    mut visit: impl FnMut(&Partition),
) -> u64 {
    let mut count = 0;
    for_each_partition(dm, t, |labels| {
        if labels_resolve(dm, labels, t) {
            count += 1;
            visit(&Partition::from_labels(labels));
        }
        true
    });
    count
}

/// Enumerates `t`-block label strings until `visit` returns `false`.
/// Returns the number of strings visited.
fn for_each_partition(
    dm: &DistanceMatrix,
    t: usize,
    mut visit: impl FnMut(&[usize]) -> bool,
) -> u64 {
    let mut it = FixedBlockPartitions::new(dm.order(), t);
    let mut count = 0;
    while it.advance() {
        count += 1;
        if !visit(it.labels()) {
            break;
        }
    }
    count
}

/// Whether the label string describes a resolving partition.
fn labels_resolve(dm: &DistanceMatrix, labels: &[usize], t: usize) -> bool {
    let n = dm.order();
    let mut vectors = vec![u32::MAX; n * t];
    for v in 0..n {
        let row = dm.row(v);
        let vec = &mut vectors[v * t..(v + 1) * t];
        for (w, &b) in labels.iter().enumerate() {
            vec[b] = vec[b].min(row[w]);
        }
    }
    // only vertices sharing a block can collide
    for u in 0..n {
        for v in u + 1..n {
            if labels[u] == labels[v] && vectors[u * t..(u + 1) * t] == vectors[v * t..(v + 1) * t]
            {
                return false;
            }
        }
    }
    true
}
