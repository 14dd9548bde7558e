//! Explicit resolving partitions of corona products.
//!
//! Each construction assembles its blocks in the listing order of the
//! corresponding proof, stores them canonically, and runs the plain
//! partition checker before returning. A non-resolving result is reported
//! as [`Error::VerificationFailed`], never returned.

use std::fmt;

use serde::Serialize;

use crate::corona::{corona, CoronaGraph};
use crate::error::{Error, Result};
use crate::graph::FamilySpec;
use crate::resolve::{
    check_resolving_partition, is_resolving_partition, Partition, Verdict, VertexSet,
};

/// Which construction produced a partition, with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "construction", rename_all = "kebab-case")]
pub enum Provenance {
    /// `{A, B_1..B_t, W_1..W_k}` from a resolving set avoiding centres.
    FromResolvingSet {
        set_size: usize,
        padded_to: usize,
        base_blocks: usize,
    },
    /// `{A_1..A_k, B_1..B_t}` for `D(H) <= 2`.
    Sum {
        base_blocks: usize,
        fiber_blocks: usize,
    },
    /// `{S_1..S_n}` for `G ⊙ K_{1,n}`.
    Star { n1: usize, leaves: usize },
    /// `{A_1..A_{n2+1}}` for `P_{n1} ⊙ N_{n2}`.
    PathEmpty { n1: usize, n2: usize },
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::FromResolvingSet {
                set_size,
                padded_to,
                base_blocks,
            } => write!(
                f,
                "thm2 set_size={set_size} padded_to={padded_to} base_blocks={base_blocks}"
            ),
            Provenance::Sum {
                base_blocks,
                fiber_blocks,
            } => {
                write!(
                    f,
                    "sum base_blocks={base_blocks} fiber_blocks={fiber_blocks}"
                )
            }
            Provenance::Star { n1, leaves } => write!(f, "star n1={n1} n={leaves}"),
            Provenance::PathEmpty { n1, n2 } => write!(f, "path-empty n1={n1} n2={n2}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionOutput {
    pub partition: Partition,
    pub size: usize,
    pub provenance: Provenance,
}

fn verified(
    cg: &CoronaGraph,
    blocks: Vec<Vec<usize>>,
    provenance: Provenance,
) -> Result<ConstructionOutput> {
    let blocks: Vec<Vec<usize>> = blocks.into_iter().filter(|b| !b.is_empty()).collect();
    let partition = Partition::new(blocks, cg.graph.order())
        .map_err(|e| Error::VerificationFailed(format!("{provenance}: {e}")))?;
    if let Verdict::Conflict(u, v) = check_resolving_partition(&cg.graph.distances(), &partition) {
        return Err(Error::VerificationFailed(format!(
            "{provenance}: vertices {u} and {v} share a representation in {partition}"
        )));
    }
    Ok(ConstructionOutput {
        size: partition.len(),
        partition,
        provenance,
    })
}

/// Builds `{A, B_1, ..., B_t, W_1, ..., W_k}` from a resolving set `s` of the
/// corona that avoids the centres and meets every copy, and a resolving
/// partition `pg` of `G`.
///
/// Each `S_i = s ∩ V_i` is padded to `t = max |S_i|` elements with the
/// smallest unused ids of `V_i`; `B_j` takes the `j`-th smallest element of
/// every padded `S_i`, `A` the remaining copy vertices (omitted when empty),
/// and `W_k` lifts the blocks of `pg` onto the centres.
pub fn construct_from_resolving_set(
    cg: &CoronaGraph,
    s: &VertexSet,
    pg: &Partition,
) -> Result<ConstructionOutput> {
    let n = cg.graph.order();
    let dm = cg.graph.distances();
    if s.members().iter().any(|&v| v >= n) {
        return Err(Error::Precondition(
            "set has vertices outside the corona".into(),
        ));
    }
    if s.members().iter().any(|&v| cg.is_center(v)) {
        return Err(Error::Precondition(
            "resolving set contains a centre".into(),
        ));
    }
    if !crate::resolve::is_resolving_set(&dm, s) {
        return Err(Error::Precondition(
            "set does not resolve the corona".into(),
        ));
    }
    if pg.order() != cg.n1() || !is_resolving_partition(&cg.base().distances(), pg) {
        return Err(Error::Precondition(
            "base partition does not resolve G".into(),
        ));
    }

    let mut per_copy: Vec<Vec<usize>> = (0..cg.n1())
        .map(|i| {
            let copy = cg.copy(i);
            let mut part: Vec<usize> = s
                .members()
                .iter()
                .copied()
                .filter(|v| copy.contains(v))
                .collect();
            part.sort_unstable();
            part
        })
        .collect();
    if let Some(i) = per_copy.iter().position(Vec::is_empty) {
        return Err(Error::Precondition(format!(
            "resolving set misses copy {i}"
        )));
    }
    let t = per_copy.iter().map(Vec::len).max().unwrap_or(0);
    for (i, part) in per_copy.iter_mut().enumerate() {
        let missing = t - part.len();
        let spare: Vec<usize> = cg
            .copy(i)
            .filter(|v| !part.contains(v))
            .take(missing)
            .collect();
        part.extend(spare);
        part.sort_unstable();
    }

    let mut blocks = Vec::with_capacity(1 + t + pg.len());
    let a: Vec<usize> = (0..cg.n1())
        .flat_map(|i| {
            cg.copy(i)
                .filter(|v| !per_copy[i].contains(v))
                .collect::<Vec<_>>()
        })
        .collect();
    blocks.push(a);
    for j in 0..t {
        blocks.push(per_copy.iter().map(|part| part[j]).collect());
    }
    blocks.extend(
        pg.blocks()
            .iter()
            .map(|w| w.iter().map(|&i| cg.center(i)).collect()),
    );

    verified(
        cg,
        blocks,
        Provenance::FromResolvingSet {
            set_size: s.len(),
            padded_to: t,
            base_blocks: pg.len(),
        },
    )
}

/// Builds `{A_1, ..., A_k, B_1, ..., B_t}`: `A_i` lifts `pg` onto the
/// centres, `B_j` collects block `j` of `ph` from every copy. Requires `H`
/// connected with diameter at most 2.
pub fn construct_sum_partition(
    cg: &CoronaGraph,
    pg: &Partition,
    ph: &Partition,
) -> Result<ConstructionOutput> {
    let h = cg.fiber();
    let diameter = h
        .diameter()
        .map_err(|_| Error::Precondition("H must be connected".into()))?;
    if diameter > 2 {
        return Err(Error::Precondition(format!("D(H) = {diameter} > 2")));
    }
    if pg.order() != cg.n1() || !is_resolving_partition(&cg.base().distances(), pg) {
        return Err(Error::Precondition(
            "base partition does not resolve G".into(),
        ));
    }
    if ph.order() != cg.n2() || !is_resolving_partition(&h.distances(), ph) {
        return Err(Error::Precondition(
            "fiber partition does not resolve H".into(),
        ));
    }
    let mut blocks: Vec<Vec<usize>> = pg
        .blocks()
        .iter()
        .map(|a| a.iter().map(|&i| cg.center(i)).collect())
        .collect();
    for b in ph.blocks() {
        blocks.push(
            (0..cg.n1())
                .flat_map(|i| b.iter().map(move |&x| (i, x)))
                .map(|(i, x)| cg.copy_vertex(i, x))
                .collect(),
        );
    }
    verified(
        cg,
        blocks,
        Provenance::Sum {
            base_blocks: pg.len(),
            fiber_blocks: ph.len(),
        },
    )
}

/// Builds the `n`-block partition of `G ⊙ K_{1,n}`.
///
/// For `n >= 2 n1 >= 4`: `S_{2i-1} = {a_i} ∪ {leaf 2i-1 of every copy}`,
/// `S_{2i} = {v_i} ∪ {leaf 2i of every copy}` for `i = 1..n1`, and
/// `S_j = {leaf j of every copy}` for `j > 2 n1`. For `n1 = 1`, `n >= 3`:
/// `S_1 = {a, u_1}`, `S_2 = {v, u_2}`, `S_j = {u_j}`.
pub fn construct_star_partition(cg: &CoronaGraph) -> Result<ConstructionOutput> {
    let (hub, leaves) = cg
        .fiber()
        .star_shape()
        .ok_or_else(|| Error::Precondition("H is not a star K_{1,n}".into()))?;
    let n = leaves.len();
    let n1 = cg.n1();
    let guard = (n >= 2 * n1 && 2 * n1 >= 4) || (n1 == 1 && n >= 3);
    if !guard {
        return Err(Error::Precondition(format!(
            "star construction needs n >= 2 n1 >= 4 or n > 2 n1 = 2 (n = {n}, n1 = {n1})"
        )));
    }
    let leaf = |i: usize, j: usize| cg.copy_vertex(i, leaves[j]);
    let hub_of = |i: usize| cg.copy_vertex(i, hub);
    let blocks: Vec<Vec<usize>> = if n1 == 1 {
        let mut blocks = vec![vec![hub_of(0), leaf(0, 0)], vec![cg.center(0), leaf(0, 1)]];
        blocks.extend((2..n).map(|j| vec![leaf(0, j)]));
        blocks
    } else {
        (0..n)
            .map(|j| {
                let mut block: Vec<usize> = (0..n1).map(|i| leaf(i, j)).collect();
                if j < 2 * n1 {
                    let i = j / 2;
                    block.push(if j % 2 == 0 { hub_of(i) } else { cg.center(i) });
                }
                block
            })
            .collect()
    };
    verified(cg, blocks, Provenance::Star { n1, leaves: n })
}

/// Builds `P_{n1} ⊙ N_{n2}` and the partition `A_1 = {v_1, u_11}`,
/// `A_2 = {v_i, u_i1 : i >= 2}`, `A_j = {u_i(j-1) : all i}` for
/// `j = 3..n2+1`.
pub fn construct_path_empty_partition(
    n1: usize,
    n2: usize,
) -> Result<(CoronaGraph, ConstructionOutput)> {
    if !(n1 >= n2 && n2 >= 2) {
        return Err(Error::Precondition(format!(
            "needs n1 >= n2 >= 2 (n1 = {n1}, n2 = {n2})"
        )));
    }
    let cg = FamilySpec::corona_of(FamilySpec::Path(n1), FamilySpec::Empty(n2)).build_corona()?;
    let u = |i: usize, j: usize| cg.copy_vertex(i, j);
    let mut blocks = vec![
        vec![cg.center(0), u(0, 0)],
        (1..n1).flat_map(|i| [cg.center(i), u(i, 0)]).collect(),
    ];
    for j in 1..n2 {
        blocks.push((0..n1).map(|i| u(i, j)).collect());
    }
    let out = verified(&cg, blocks, Provenance::PathEmpty { n1, n2 })?;
    Ok((cg, out))
}

/// Convenience wrapper used by the CLI: `corona(g, h)` from specs.
pub fn corona_from_specs(g: &FamilySpec, h: &FamilySpec) -> Result<CoronaGraph> {
    corona(&g.build()?, &h.build()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{metric_dimension, partition_dimension, SolverConfig};

    fn spec(s: &str) -> FamilySpec {
        s.parse().unwrap()
    }

    fn cg(g: &str, h: &str) -> CoronaGraph {
        corona_from_specs(&spec(g), &spec(h)).unwrap()
    }

    #[test]
    fn from_minimum_resolving_set() {
        let c = cg("path:3", "complete:3");
        let s = metric_dimension(&c.graph, &SolverConfig::default())
            .unwrap()
            .witness;
        assert_eq!(s.len(), 6);
        let pg = Partition::parse("0|1,2", 3).unwrap();
        let out = construct_from_resolving_set(&c, &s, &pg).unwrap();
        assert_eq!(out.size, 5);
    }

    #[test]
    fn from_one_vertex_per_copy() {
        let c = cg("path:2", "complete:2");
        let s = VertexSet::new(vec![2, 4], 6).unwrap();
        let pg = Partition::parse("0|1", 2).unwrap();
        let out = construct_from_resolving_set(&c, &s, &pg).unwrap();
        assert!(out.size <= 4);
    }

    #[test]
    fn from_unequal_split_pads() {
        // P_2 ⊙ P_3: copy 0 = {2,3,4}, copy 1 = {5,6,7}
        let c = cg("path:2", "path:3");
        let s = VertexSet::new(vec![2, 3, 5], 8).unwrap();
        assert!(crate::resolve::is_resolving_set(&c.graph.distances(), &s));
        let pg = Partition::parse("0|1", 2).unwrap();
        let out = construct_from_resolving_set(&c, &s, &pg).unwrap();
        assert_eq!(
            out.provenance,
            Provenance::FromResolvingSet {
                set_size: 3,
                padded_to: 2,
                base_blocks: 2
            }
        );
        assert_eq!(out.size, 1 + 2 + 2);
    }

    #[test]
    fn from_resolving_set_preconditions() {
        let c = cg("path:2", "complete:2");
        let pg = Partition::parse("0|1", 2).unwrap();
        let with_center = VertexSet::new(vec![0, 2, 4], 6).unwrap();
        assert!(matches!(
            construct_from_resolving_set(&c, &with_center, &pg),
            Err(Error::Precondition(_))
        ));
        let not_resolving = VertexSet::new(vec![2], 6).unwrap();
        assert!(matches!(
            construct_from_resolving_set(&c, &not_resolving, &pg),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn sum_partition() {
        let c = cg("path:3", "cycle:5");
        let pg = partition_dimension(c.base(), &SolverConfig::default())
            .unwrap()
            .witness;
        let ph = partition_dimension(c.fiber(), &SolverConfig::default())
            .unwrap()
            .witness;
        assert_eq!((pg.len(), ph.len()), (2, 3));
        assert_eq!(construct_sum_partition(&c, &pg, &ph).unwrap().size, 5);

        let c = cg("path:2", "complete:3");
        let out = construct_sum_partition(
            &c,
            &Partition::parse("0|1", 2).unwrap(),
            &Partition::singletons(3),
        );
        assert_eq!(out.unwrap().size, 5);

        let c = cg("path:2", "path:4");
        let err = construct_sum_partition(
            &c,
            &Partition::parse("0|1", 2).unwrap(),
            &Partition::parse("0|1,2,3", 4).unwrap(),
        );
        assert!(matches!(err, Err(Error::Precondition(_))));
    }

    #[test]
    fn star_partition() {
        assert_eq!(
            construct_star_partition(&cg("path:2", "star:4"))
                .unwrap()
                .size,
            4
        );
        assert_eq!(
            construct_star_partition(&cg("complete:1", "star:3"))
                .unwrap()
                .size,
            3
        );
        assert!(matches!(
            construct_star_partition(&cg("path:2", "star:3")),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            construct_star_partition(&cg("path:2", "cycle:4")),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn path_empty_partition() {
        let (c, out) = construct_path_empty_partition(4, 2).unwrap();
        assert_eq!((c.graph.order(), out.size), (12, 3));
        assert_eq!(construct_path_empty_partition(3, 3).unwrap().1.size, 4);
        assert!(matches!(
            construct_path_empty_partition(2, 3),
            Err(Error::Precondition(_))
        ));
    }
}
