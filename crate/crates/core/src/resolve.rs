//! Metric and partition representations and the resolvability checkers.
//!
//! Text formats: a vertex set is `"v1,v2,..."`; a partition is blocks
//! separated by `|` with ids separated by commas, e.g. `"0,2|1|3,4"`.
//! Whitespace is ignored in both.

use std::collections::HashMap;
use std::fmt;

use crate::corona::CoronaGraph;
use crate::error::{Error, Result};
use crate::graph::DistanceMatrix;

/// Vector of distances; `UNREACHABLE` compares equal only to itself.
pub type RepresentationVector = Vec<u32>;

/// Outcome of a resolvability check. A conflict carries the
/// lexicographically least pair `(u, v)`, `u < v`, with equal vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Resolving,
    Conflict(usize, usize),
}

impl Verdict {
    pub fn is_resolving(self) -> bool {
        self == Verdict::Resolving
    }
}

/// Ordered, nonempty set of distinct vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new(members: Vec<usize>, order: usize) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::InvalidVertexSet("empty set".into()));
        }
        let mut seen = vec![false; order];
        for &v in &members {
            if v >= order {
                return Err(Error::VertexOutOfRange { vertex: v, order });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidVertexSet(format!("duplicate vertex {v}")));
            }
        }
        Ok(VertexSet { members })
    }

    pub fn parse(text: &str, order: usize) -> Result<Self> {
        let members = parse_ids(text).map_err(Error::InvalidVertexSet)?;
        VertexSet::new(members, order)
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.contains(&v)
    }

    /// Same members in ascending order.
    pub fn sorted(&self) -> VertexSet {
        let mut members = self.members.clone();
        members.sort_unstable();
        VertexSet { members }
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_ids(f, &self.members)
    }
}

/// Set partition of `0..order` in canonical form: blocks sorted internally
/// and ordered by their smallest member.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
    order: usize,
}

impl Partition {
    pub fn new(blocks: Vec<Vec<usize>>, order: usize) -> Result<Self> {
        let mut seen = vec![false; order];
        let mut blocks = blocks;
        for block in &mut blocks {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &v in block.iter() {
                if v >= order {
                    return Err(Error::VertexOutOfRange { vertex: v, order });
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidPartition(format!("vertex {v} in two blocks")));
                }
            }
            block.sort_unstable();
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidPartition(format!("vertex {v} not covered")));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(Partition { blocks, order })
    }

    /// From a block label per vertex; labels need not be contiguous.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut index: HashMap<usize, usize> = HashMap::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (v, &label) in labels.iter().enumerate() {
            let b = *index.entry(label).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[b].push(v);
        }
        Partition {
            blocks,
            order: labels.len(),
        }
    }

    pub fn singletons(order: usize) -> Self {
        Partition {
            blocks: (0..order).map(|v| vec![v]).collect(),
            order,
        }
    }

    pub fn parse(text: &str, order: usize) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let blocks = compact
            .split('|')
            .map(parse_ids)
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(Error::InvalidPartition)?;
        Partition::new(blocks, order)
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Canonical block index of every vertex.
    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.order];
        for (b, block) in self.blocks.iter().enumerate() {
            for &v in block {
                labels[v] = b;
            }
        }
        labels
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write_ids(f, block)?;
        }
        Ok(())
    }
}

fn parse_ids(text: &str) -> std::result::Result<Vec<usize>, String> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err("empty id list".into());
    }
    compact
        .split(',')
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| format!("bad vertex id `{t}`"))
        })
        .collect()
}

fn write_ids(f: &mut fmt::Formatter<'_>, ids: &[usize]) -> fmt::Result {
    for (i, v) in ids.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

/// `r(v|S)`.
pub fn metric_representation(dm: &DistanceMatrix, s: &VertexSet, v: usize) -> RepresentationVector {
    let row = dm.row(v);
    s.members().iter().map(|&w| row[w]).collect()
}

/// `r(v|Π)` over the blocks in the given order.
pub fn partition_representation<B: AsRef<[usize]>>(
    dm: &DistanceMatrix,
    blocks: &[B],
    v: usize,
) -> RepresentationVector {
    blocks.iter().map(|b| dm.to_set(v, b.as_ref())).collect()
}

fn least_conflict(vectors: Vec<RepresentationVector>) -> Verdict {
    let mut first_seen: HashMap<RepresentationVector, usize> =
        HashMap::with_capacity(vectors.len());
    let mut best: Option<(usize, usize)> = None;
    for (v, vec) in vectors.into_iter().enumerate() {
        match first_seen.get(&vec) {
            Some(&u) => {
                // u is the smallest id with this vector and v the second smallest
                // the first time it collides, so only the first collision per
                // vector can be the least pair.
                if best.is_none_or(|b| (u, v) < b) {
                    best = Some((u, v));
                }
            }
            None => {
                first_seen.insert(vec, v);
            }
        }
    }
    match best {
        None => Verdict::Resolving,
        Some((u, v)) => Verdict::Conflict(u, v),
    }
}

pub fn check_resolving_set(dm: &DistanceMatrix, s: &VertexSet) -> Verdict {
    let vectors = (0..dm.order())
        .map(|v| metric_representation(dm, s, v))
        .collect();
    least_conflict(vectors)
}

pub fn is_resolving_set(dm: &DistanceMatrix, s: &VertexSet) -> bool {
    check_resolving_set(dm, s).is_resolving()
}

/// Checks an arbitrary list of blocks; the caller guarantees they partition
/// the vertex set.
pub fn check_resolving_blocks<B: AsRef<[usize]>>(dm: &DistanceMatrix, blocks: &[B]) -> Verdict {
    let vectors = (0..dm.order())
        .map(|v| partition_representation(dm, blocks, v))
        .collect();
    least_conflict(vectors)
}

pub fn check_resolving_partition(dm: &DistanceMatrix, p: &Partition) -> Verdict {
    check_resolving_blocks(dm, p.blocks())
}

pub fn is_resolving_partition(dm: &DistanceMatrix, p: &Partition) -> bool {
    check_resolving_partition(dm, p).is_resolving()
}

/// `d(u,x) = d(v,x)` for every `x` other than `u` and `v`.
pub fn are_twins(dm: &DistanceMatrix, u: usize, v: usize) -> bool {
    let (ru, rv) = (dm.row(u), dm.row(v));
    (0..dm.order()).all(|x| x == u || x == v || ru[x] == rv[x])
}

/// Maximal twin classes, each ascending, ordered by smallest member.
pub fn twin_classes(dm: &DistanceMatrix) -> Vec<Vec<usize>> {
    let n = dm.order();
    let mut assigned = vec![false; n];
    let mut classes = Vec::new();
    for u in 0..n {
        if assigned[u] {
            continue;
        }
        let mut class = vec![u];
        for (v, done) in assigned.iter_mut().enumerate().skip(u + 1) {
            if !*done && are_twins(dm, u, v) {
                *done = true;
                class.push(v);
            }
        }
        classes.push(class);
    }
    classes
}

/// `{S ∩ V_i : S ∈ p}` relabelled to `H`'s vertex ids.
pub fn induce_copy_partition(cg: &CoronaGraph, p: &Partition, i: usize) -> Result<Partition> {
    if p.order() != cg.graph.order() {
        return Err(Error::InvalidPartition(format!(
            "partition covers {} vertices, corona has {}",
            p.order(),
            cg.graph.order()
        )));
    }
    if i >= cg.n1() {
        return Err(Error::OutOfRange(format!("copy index {i} >= {}", cg.n1())));
    }
    let copy = cg.copy(i);
    let blocks: Vec<Vec<usize>> = p
        .blocks()
        .iter()
        .map(|b| {
            b.iter()
                .filter(|v| copy.contains(v))
                .map(|v| v - copy.start)
                .collect::<Vec<_>>()
        })
        .filter(|b| !b.is_empty())
        .collect();
    Partition::new(blocks, cg.n2())
}
