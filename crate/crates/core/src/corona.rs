//! Corona product `G ⊙ H` with explicit centre/copy labelling.
//!
//! Vertex numbering is fixed: centre `v_i` has id `i` for `i < n1`, and copy
//! `i` occupies ids `n1 + i*n2 .. n1 + (i+1)*n2` in `h`'s vertex order.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Position of a vertex inside the corona labelling.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    Center(usize),
    Copy { copy: usize, index: usize },
}

#[derive(Clone, Debug)]
pub struct CoronaGraph {
    pub graph: Graph,
    base: Graph,
    fiber: Graph,
}

/// Builds `g ⊙ h`. `g` must be connected; `h` may be anything of order >= 1.
pub fn corona(g: &Graph, h: &Graph) -> Result<CoronaGraph> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if h.order() == 0 {
        return Err(Error::OutOfRange(
            "corona factor H must have order >= 1".into(),
        ));
    }
    let n1 = g.order();
    let n2 = h.order();
    let offset = |i: usize| n1 + i * n2;

    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for i in 0..n1 {
        let base = offset(i);
        edges.extend(h.edges().map(|(a, b)| (base + a, base + b)));
        edges.extend((0..n2).map(|a| (i, base + a)));
    }
    let graph = Graph::from_edges(n1 * (1 + n2), edges)?;
    Ok(CoronaGraph {
        graph,
        base: g.clone(),
        fiber: h.clone(),
    })
}

impl CoronaGraph {
    /// `G`, whose vertex `i` is the centre with id `i`.
    pub fn base(&self) -> &Graph {
        &self.base
    }

    /// `H`, of which every copy is an induced subgraph.
    pub fn fiber(&self) -> &Graph {
        &self.fiber
    }

    pub fn n1(&self) -> usize {
        self.base.order()
    }

    pub fn n2(&self) -> usize {
        self.fiber.order()
    }

    pub fn center(&self, i: usize) -> usize {
        i
    }

    pub fn centers(&self) -> std::ops::Range<usize> {
        0..self.n1()
    }

    /// Ids of `V_i` in `H`'s vertex order.
    pub fn copy(&self, i: usize) -> std::ops::Range<usize> {
        let start = self.n1() + i * self.n2();
        start..start + self.n2()
    }

    /// Id of vertex `index` of `H` inside copy `i`.
    pub fn copy_vertex(&self, i: usize, index: usize) -> usize {
        self.n1() + i * self.n2() + index
    }

    pub fn copy_of(&self, v: usize) -> Result<Location> {
        self.graph.check_vertex(v)?;
        let n1 = self.n1();
        Ok(if v < n1 {
            Location::Center(v)
        } else {
            let k = v - n1;
            Location::Copy {
                copy: k / self.n2(),
                index: k % self.n2(),
            }
        })
    }

    pub fn is_center(&self, v: usize) -> bool {
        v < self.n1()
    }
}
