#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use resolving_core::{FamilySpec, Graph};

pub const SEED: u64 = 0x5eed_2024;

/// Random connected graph: a random spanning tree plus each remaining edge
/// with probability `p`.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Family graphs of order 2..=`max_order`, coronas of small families included.
pub fn family_suite(max_order: usize) -> Vec<(String, Graph)> {
    use FamilySpec::*;
    let mut specs: Vec<FamilySpec> = Vec::new();
    for n in 2..=max_order {
        specs.push(Path(n));
        specs.push(Complete(n));
        if n >= 3 {
            specs.push(Cycle(n));
        }
        specs.push(Star(n - 1));
    }
    let small = [
        Path(1),
        Path(2),
        Path(3),
        Complete(3),
        Star(2),
        Empty(2),
        Empty(3),
        Cycle(3),
    ];
    for g in [
        Path(2),
        Path(3),
        Cycle(3),
        Star(2),
        Complete(2),
        Path(4),
        Cycle(4),
    ] {
        for h in &small {
            specs.push(FamilySpec::corona_of(g.clone(), h.clone()));
        }
    }
    let mut out = Vec::new();
    for s in specs {
        let g = s.build().unwrap();
        if g.order() <= max_order
            && !out
                .iter()
                .any(|(name, _): &(String, Graph)| *name == s.to_string())
        {
            out.push((s.to_string(), g));
        }
    }
    out
}

/// Fixed-seed random connected graphs of order 2..=`max_order`.
pub fn random_suite(count: usize, max_order: usize, seed: u64) -> Vec<(String, Graph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(2..=max_order);
            let p = rng.gen_range(0.05..0.6);
            (
                format!("random#{i}(n={n})"),
                random_connected(&mut rng, n, p),
            )
        })
        .collect()
}

/// Families plus random graphs, order at most 10.
pub fn oracle_suite() -> Vec<(String, Graph)> {
    let mut suite = family_suite(10);
    suite.extend(random_suite(160, 10, SEED));
    suite
}
