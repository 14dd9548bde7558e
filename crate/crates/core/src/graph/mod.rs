//! Simple undirected graphs over vertex ids `0..n`.
//!
//! A [`Graph`] is immutable once built. Distances, structural features and
//! the named families used throughout the crate live in the submodules.

mod distance;
mod edgelist;
mod family;
mod features;

pub use distance::{DistanceMatrix, UNREACHABLE};
pub use family::FamilySpec;
pub use features::HFeatures;

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Simple undirected graph with vertices `0..order`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Graph with `order` vertices and no edges.
    pub fn empty(order: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); order],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list. Self-loops, out-of-range endpoints
    /// and repeated edges are rejected.
    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(order);
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.order();
        if u == v || u >= n || v >= n {
            return Err(Error::InvalidEdge(u, v));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(Error::InvalidEdge(u, v)),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.edge_count += 1;
                Ok(())
            }
        }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Sorted neighbours of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The order-0 graph counts as disconnected.
    pub fn is_connected(&self) -> bool {
        self.order() > 0 && self.components().len() == 1
    }

    pub fn distances(&self) -> DistanceMatrix {
        DistanceMatrix::bfs(self)
    }

    /// Largest pairwise distance; fails on disconnected input.
    pub fn diameter(&self) -> Result<u32> {
        if !self.is_connected() {
            return Err(Error::DiameterUndefined);
        }
        Ok(self.distances().max_finite())
    }

    pub fn features(&self) -> HFeatures {
        HFeatures::of(self)
    }

    /// Every pair of distinct vertices adjacent (includes `K_1`).
    pub fn is_complete(&self) -> bool {
        let n = self.order();
        n > 0 && self.edge_count == n * (n - 1) / 2
    }

    /// Isomorphic to `P_n` for `n = order`.
    pub fn is_path(&self) -> bool {
        let n = self.order();
        if n == 0 || !self.is_connected() || self.edge_count != n - 1 {
            return false;
        }
        self.adj.iter().all(|ns| ns.len() <= 2)
    }

    /// For a graph isomorphic to `K_{1,k}` with `k >= 1` returns the hub and
    /// the leaves in ascending order. For `K_{1,1}` the hub is vertex 0.
    pub fn star_shape(&self) -> Option<(usize, Vec<usize>)> {
        let n = self.order();
        if n < 2 || self.edge_count != n - 1 {
            return None;
        }
        let hub = (0..n).find(|&v| self.degree(v) == n - 1)?;
        let leaves: Vec<usize> = (0..n).filter(|&v| v != hub).collect();
        if leaves.iter().all(|&l| self.degree(l) == 1) {
            Some((hub, leaves))
        } else {
            None
        }
    }

    /// Subgraph induced on `vertices`, relabelled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    g.insert_edge(i, j).expect("induced edge is valid");
                }
            }
        }
        g
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
