//! Plain-text edge lists.
//!
//! The first non-comment line holds the order `n`; each further non-comment
//! line holds one edge `u v` with `0 <= u < v < n`. Lines starting with `#`
//! and blank lines are ignored.

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

impl Graph {
    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut graph: Option<Graph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |reason: &str| Error::EdgeList {
                line: line_no,
                reason: reason.to_string(),
            };
            let fields: Vec<&str> = line.split_whitespace().collect();
            match graph.as_mut() {
                None => {
                    let [n] = fields[..] else {
                        return Err(err("expected the vertex count"));
                    };
                    let n: usize = n.parse().map_err(|_| err("bad vertex count"))?;
                    graph = Some(Graph::empty(n));
                }
                Some(g) => {
                    let [u, v] = fields[..] else {
                        return Err(err("expected `u v`"));
                    };
                    let u: usize = u.parse().map_err(|_| err("bad vertex id"))?;
                    let v: usize = v.parse().map_err(|_| err("bad vertex id"))?;
                    if u >= v || v >= g.order() {
                        return Err(err("edge must satisfy 0 <= u < v < n"));
                    }
                    if g.is_adjacent(u, v) {
                        return Err(err("duplicate edge"));
                    }
                    g.insert_edge(u, v)?;
                }
            }
        }
        graph.ok_or(Error::EdgeList {
            line: 0,
            reason: "missing vertex count".to_string(),
        })
    }

    /// Serialises in the format accepted by [`Graph::from_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.order());
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }
}
