mod common;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use resolving_core::corona::corona;
use resolving_core::resolve::{
    are_twins, check_resolving_blocks, is_resolving_partition, is_resolving_set, twin_classes,
};
use resolving_core::{FamilySpec, Graph, Location, Partition, VertexSet};

fn config() -> Config {
    Config {
        cases: 256,
        rng_seed: RngSeed::Fixed(common::SEED),
        failure_persistence: None,
        ..Config::default()
    }
}

fn arb_graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (2..=max_order, any::<u64>(), 0.05f64..0.7).prop_map(|(n, seed, p)| {
        common::random_connected(&mut ChaCha8Rng::seed_from_u64(seed), n, p)
    })
}

/// A graph with a block label in `0..n` per vertex.
fn arb_graph_and_labels() -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(10).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), proptest::collection::vec(0..n, n))
    })
}

/// A graph with a random subset given as a membership mask.
fn arb_graph_and_mask() -> impl Strategy<Value = (Graph, Vec<bool>)> {
    arb_graph(10).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), proptest::collection::vec(any::<bool>(), n))
    })
}

fn arb_family() -> impl Strategy<Value = FamilySpec> {
    prop_oneof![
        (1usize..=5).prop_map(FamilySpec::Path),
        (3usize..=5).prop_map(FamilySpec::Cycle),
        (1usize..=4).prop_map(FamilySpec::Complete),
        (1usize..=4).prop_map(FamilySpec::Star),
        (1usize..=4).prop_map(FamilySpec::Empty),
    ]
}

fn mask_to_set(mask: &[bool], n: usize) -> Option<VertexSet> {
    let members: Vec<usize> = (0..n).filter(|&v| mask[v]).collect();
    (!members.is_empty()).then(|| VertexSet::new(members, n).unwrap())
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn supersets_of_resolving_sets_resolve((g, mask) in arb_graph_and_mask(), extra in any::<prop::sample::Index>()) {
        let n = g.order();
        let dm = g.distances();
        if let Some(s) = mask_to_set(&mask, n) {
            if is_resolving_set(&dm, &s) {
                let mut bigger = mask.clone();
                bigger[extra.index(n)] = true;
                prop_assert!(is_resolving_set(&dm, &mask_to_set(&bigger, n).unwrap()));
            }
        }
    }

    #[test]
    fn refinements_of_resolving_partitions_resolve((g, labels) in arb_graph_and_labels(), split in any::<prop::sample::Index>()) {
        let dm = g.distances();
        let p = Partition::from_labels(&labels);
        if is_resolving_partition(&dm, &p) {
            // move one vertex into a block of its own
            let v = split.index(g.order());
            let mut refined = labels.clone();
            refined[v] = usize::MAX;
            prop_assert!(is_resolving_partition(&dm, &Partition::from_labels(&refined)));
        }
    }

    #[test]
    fn resolving_structures_separate_twins((g, labels) in arb_graph_and_labels(), mask in proptest::collection::vec(any::<bool>(), 10)) {
        let dm = g.distances();
        let n = g.order();
        let p = Partition::from_labels(&labels);
        let s = mask_to_set(&mask[..n], n);
        for class in twin_classes(&dm) {
            for (i, &u) in class.iter().enumerate() {
                for &v in &class[i + 1..] {
                    prop_assert!(are_twins(&dm, u, v));
                    if is_resolving_partition(&dm, &p) {
                        prop_assert_ne!(labels[u], labels[v]);
                    }
                    if let Some(s) = &s {
                        if is_resolving_set(&dm, s) {
                            prop_assert!(s.contains(u) || s.contains(v));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn block_order_does_not_matter((g, labels) in arb_graph_and_labels(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let dm = g.distances();
        let p = Partition::from_labels(&labels);
        let mut blocks = p.blocks().to_vec();
        blocks.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(
            check_resolving_blocks(&dm, &blocks).is_resolving(),
            is_resolving_partition(&dm, &p)
        );
    }

    #[test]
    fn copy_vertices_look_alike_from_outside(g in arb_graph(5), h in arb_family()) {
        let h = h.build().unwrap();
        let cg = corona(&g, &h).unwrap();
        let dm = cg.graph.distances();
        for i in 0..cg.n1() {
            let copy = cg.copy(i);
            for u in copy.clone() {
                for v in copy.clone() {
                    for x in cg.graph.vertices().filter(|x| !copy.contains(x)) {
                        prop_assert_eq!(dm.get(u, x), dm.get(v, x));
                    }
                }
            }
        }
    }

    #[test]
    fn corona_distances(g in arb_graph(5), h in arb_family()) {
        let h = h.build().unwrap();
        let cg = corona(&g, &h).unwrap();
        let dm = cg.graph.distances();
        let dg = g.distances();
        for x in cg.graph.vertices() {
            for y in cg.graph.vertices() {
                let expected = match (cg.copy_of(x).unwrap(), cg.copy_of(y).unwrap()) {
                    (Location::Center(i), Location::Center(j)) => dg.get(i, j),
                    (Location::Center(i), Location::Copy { copy: j, .. })
                    | (Location::Copy { copy: j, .. }, Location::Center(i)) => dg.get(i, j) + 1,
                    (Location::Copy { copy: i, index: a }, Location::Copy { copy: j, index: b }) => {
                        if i != j {
                            dg.get(i, j) + 2
                        } else if a == b {
                            0
                        } else if h.is_adjacent(a, b) {
                            1
                        } else {
                            2
                        }
                    }
                };
                prop_assert_eq!(dm.get(x, y), expected);
            }
        }
    }

    #[test]
    fn text_formats_round_trip((g, labels) in arb_graph_and_labels(), mask in proptest::collection::vec(any::<bool>(), 10)) {
        let n = g.order();
        let p = Partition::from_labels(&labels);
        prop_assert_eq!(Partition::parse(&p.to_string(), n).unwrap(), p);
        if let Some(s) = mask_to_set(&mask[..n], n) {
            prop_assert_eq!(VertexSet::parse(&s.to_string(), n).unwrap(), s);
        }
        prop_assert_eq!(Graph::from_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn family_specs_round_trip(g in arb_family(), h in arb_family()) {
        let spec = FamilySpec::corona_of(g.clone(), h);
        prop_assert_eq!(spec.to_string().parse::<FamilySpec>().unwrap(), spec);
        prop_assert_eq!(g.to_string().parse::<FamilySpec>().unwrap(), g);
    }
}
