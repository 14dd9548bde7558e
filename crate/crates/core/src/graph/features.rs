use serde::Serialize;

use super::Graph;

/// Component-level counts of a (possibly disconnected) graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HFeatures {
    /// Components of order at least two.
    pub alpha_ge2: usize,
    /// Isolated vertices.
    pub beta: usize,
    /// Largest order of a complete component, `K_1` included; 0 if none.
    pub c: usize,
    /// Set only for connected graphs.
    pub diameter: Option<u32>,
    pub component_count: usize,
}

impl HFeatures {
    pub fn of(h: &Graph) -> Self {
        let comps = h.components();
        let mut alpha_ge2 = 0;
        let mut beta = 0;
        let mut c = 0;
        for comp in &comps {
            if comp.len() == 1 {
                beta += 1;
            } else {
                alpha_ge2 += 1;
            }
            let k = comp.len();
            let internal: usize = comp.iter().map(|&v| h.degree(v)).sum::<usize>() / 2;
            if internal == k * (k - 1) / 2 {
                c = c.max(k);
            }
        }
        let diameter = if comps.len() == 1 {
            Some(h.distances().max_finite())
        } else {
            None
        };
        HFeatures {
            alpha_ge2,
            beta,
            c,
            diameter,
            component_count: comps.len(),
        }
    }
}
