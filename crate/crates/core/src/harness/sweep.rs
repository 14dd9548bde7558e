use rayon::prelude::*;

use super::{evaluate_claims, ClaimId, ClaimResult, HarnessConfig, Instance};
use crate::error::{Error, Result};
use crate::graph::FamilySpec;
use crate::solver::SolverConfig;

/// Corona order cap of the default grid.
pub const DEFAULT_MAX_CORONA_ORDER: usize = 24;

/// Every `(G, H)` family pair of the default grid whose corona has order at
/// most [`DEFAULT_MAX_CORONA_ORDER`].
pub fn default_grid() -> Vec<(FamilySpec, FamilySpec)> {
    use FamilySpec::*;
    let gs: Vec<FamilySpec> = (2..=6)
        .map(Path)
        .chain((3..=5).map(Cycle))
        .chain((2..=4).map(Complete))
        .chain((2..=3).map(Star))
        .collect();
    let hs: Vec<FamilySpec> = (2..=4)
        .map(Path)
        .chain((1..=3).map(Complete))
        .chain((2..=4).map(Star))
        .chain((1..=3).map(Empty))
        .chain((3..=5).map(Cycle))
        .collect();
    let mut grid = Vec::new();
    for g in &gs {
        for h in &hs {
            let (n1, n2) = (order_of(g), order_of(h));
            if n1 * (1 + n2) <= DEFAULT_MAX_CORONA_ORDER {
                grid.push((g.clone(), h.clone()));
            }
        }
    }
    grid
}

fn order_of(spec: &FamilySpec) -> usize {
    match *spec {
        FamilySpec::Path(n)
        | FamilySpec::Cycle(n)
        | FamilySpec::Complete(n)
        | FamilySpec::Empty(n) => n,
        FamilySpec::Star(n) => n + 1,
        FamilySpec::Corona(ref g, ref h) => order_of(g) * (1 + order_of(h)),
    }
}

/// Reads a grid file: one `G H` spec pair per line; `#` starts a comment.
pub fn parse_grid(text: &str) -> Result<Vec<(FamilySpec, FamilySpec)>> {
    let mut grid = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [g, h] = fields[..] else {
            return Err(Error::MalformedSpec(format!(
                "grid line {}: expected two specs, got {:?}",
                i + 1,
                line
            )));
        };
        grid.push((g.parse()?, h.parse()?));
    }
    Ok(grid)
}

/// Evaluates `claims` on every grid instance. Results are ordered by claim,
/// then by grid position.
pub fn run_sweep(
    grid: &[(FamilySpec, FamilySpec)],
    claims: &[ClaimId],
    config: &HarnessConfig,
) -> Result<Vec<ClaimResult>> {
    let instances = grid
        .iter()
        .map(|(g, h)| Instance::from_specs(g, h))
        .collect::<Result<Vec<_>>>()?;
    let inner = HarnessConfig {
        solver: SolverConfig {
            threads: None,
            ..config.solver
        },
    };
    let per_instance: Vec<Vec<ClaimResult>> = config.solver.run(|| {
        instances
            .par_iter()
            .map(|inst| evaluate_claims(claims, inst, &inner))
            .collect()
    });
    let mut rows: Vec<(ClaimId, usize, ClaimResult)> = per_instance
        .into_iter()
        .enumerate()
        .flat_map(|(i, rs)| rs.into_iter().map(move |r| (r.claim, i, r)))
        .collect();
    rows.sort_by_key(|&(c, i, _)| (c, i));
    Ok(rows.into_iter().map(|(_, _, r)| r).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::Status;

    #[test]
    fn default_grid_respects_order_cap() {
        let grid = default_grid();
        assert!(!grid.is_empty());
        for (g, h) in &grid {
            let cg = crate::construct::corona_from_specs(g, h).unwrap();
            assert!(cg.graph.order() <= DEFAULT_MAX_CORONA_ORDER, "{g} {h}");
        }
        assert!(grid.contains(&(FamilySpec::Path(6), FamilySpec::Complete(2))));
        assert!(!grid.contains(&(FamilySpec::Path(6), FamilySpec::Path(4))));
    }

    #[test]
    fn grid_file_format() {
        let grid =
            parse_grid("# grid\npath:3 complete:2\n\n star:2   empty:3 # trailing\n").unwrap();
        assert_eq!(grid.len(), 2);
        assert_eq!(grid[1], (FamilySpec::Star(2), FamilySpec::Empty(3)));
        assert!(parse_grid("path:3").is_err());
        assert!(parse_grid("path:3 blob:2").is_err());
    }

    #[test]
    fn sweep_orders_by_claim_then_instance() {
        let grid = parse_grid("path:3 complete:2\npath:2 complete:2").unwrap();
        let rs = run_sweep(
            &grid,
            &[ClaimId::C12, ClaimId::C1],
            &HarnessConfig::default(),
        )
        .unwrap();
        let order: Vec<(ClaimId, &str)> = rs.iter().map(|r| (r.claim, r.g_spec.as_str())).collect();
        assert_eq!(
            order,
            vec![
                (ClaimId::C1, "path:3"),
                (ClaimId::C1, "path:2"),
                (ClaimId::C12, "path:3"),
                (ClaimId::C12, "path:2"),
            ]
        );
        assert!(rs.iter().all(|r| r.status == Status::Pass));
    }

    #[test]
    fn c15_single_instance_sweep() {
        let grid = parse_grid("path:6 complete:2").unwrap();
        let rs = run_sweep(&grid, &[ClaimId::C15], &HarnessConfig::default()).unwrap();
        assert_eq!(rs.len(), 1);
        assert_eq!(rs[0].status, Status::Pass);
        assert!(rs[0]
            .to_json_line(false)
            .contains("\"lhs\":4,\"rhs\":4,\"pass\":true"));
    }
}
