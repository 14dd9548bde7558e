//! Restricted growth strings with a fixed number of blocks.
//!
//! A string `a[0..n]` with `a[0] = 0` and `a[i] <= 1 + max(a[..i])` encodes
//! one unordered set partition. Strings are produced in lexicographic order.

/// Lexicographic enumeration of all partitions of `0..n` into exactly `k`
/// blocks.
#[derive(Clone, Debug)]
pub struct FixedBlockPartitions {
    n: usize,
    k: usize,
    current: Vec<usize>,
    started: bool,
    done: bool,
}

impl FixedBlockPartitions {
    pub fn new(n: usize, k: usize) -> Self {
        let done = k == 0 || k > n;
        FixedBlockPartitions {
            n,
            k,
            current: Vec::with_capacity(n),
            started: false,
            done,
        }
    }

    /// Smallest completion of `current[..=pos]` that opens every remaining block.
    fn fill_from(&mut self, pos: usize, mut max: usize) {
        self.current.truncate(pos + 1);
        let rest = self.n - pos - 1;
        let missing = self.k - 1 - max;
        for j in 0..rest {
            if rest - j <= missing {
                max += 1;
                self.current.push(max);
            } else {
                self.current.push(0);
            }
        }
    }

    /// Advances to the next string; `false` once exhausted.
    pub fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        if !self.started {
            self.started = true;
            self.current.clear();
            self.current.push(0);
            self.fill_from(0, 0);
            return true;
        }
        let mut prefix_max = vec![0; self.n];
        let mut m = 0;
        for (i, &a) in self.current.iter().enumerate() {
            m = m.max(a);
            prefix_max[i] = m;
        }
        for i in (1..self.n).rev() {
            let limit = (prefix_max[i - 1] + 1).min(self.k - 1);
            let feasible = (self.current[i] + 1..=limit).find(|&next| {
                let new_max = prefix_max[i - 1].max(next);
                self.k - 1 - new_max < self.n - i
            });
            if let Some(next) = feasible {
                self.current[i] = next;
                self.fill_from(i, prefix_max[i - 1].max(next));
                return true;
            }
        }
        self.done = true;
        false
    }

    pub fn labels(&self) -> &[usize] {
        &self.current
    }
}

/// Stirling number of the second kind, `S(n, k)`.
pub fn stirling2(n: usize, k: usize) -> u128 {
    let mut row = vec![0u128; k + 1];
    row[0] = 1;
    for _ in 0..n {
        for j in (1..=k).rev() {
            row[j] = j as u128 * row[j] + row[j - 1];
        }
        row[0] = 0;
    }
    row[k]
}
