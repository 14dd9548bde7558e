use std::collections::VecDeque;

use super::Graph;

/// Distance between vertices in different components.
pub const UNREACHABLE: u32 = u32::MAX;

/// All-pairs hop distances, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    order: usize,
    entries: Vec<u32>,
}

impl DistanceMatrix {
    pub(crate) fn bfs(g: &Graph) -> Self {
        let n = g.order();
        let mut entries = vec![UNREACHABLE; n * n];
        let mut queue = VecDeque::with_capacity(n);
        for s in 0..n {
            let row = &mut entries[s * n..(s + 1) * n];
            row[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let du = row[u];
                for &w in g.neighbors(u) {
                    if row[w] == UNREACHABLE {
                        row[w] = du + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        DistanceMatrix { order: n, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.entries[u * self.order + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.entries[u * self.order..(u + 1) * self.order]
    }

    /// Largest finite entry (0 for graphs of order <= 1).
    pub fn max_finite(&self) -> u32 {
        self.entries
            .iter()
            .copied()
            .filter(|&d| d != UNREACHABLE)
            .max()
            .unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        self.order > 0 && !self.entries.contains(&UNREACHABLE)
    }

    /// `d(v, block)`, the minimum over the block's members.
    pub fn to_set(&self, v: usize, block: &[usize]) -> u32 {
        let row = self.row(v);
        block.iter().map(|&u| row[u]).min().unwrap_or(UNREACHABLE)
    }
}
