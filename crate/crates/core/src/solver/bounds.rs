use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::resolve::twin_classes;

/// Lower bound on the partition dimension of a connected graph.
///
/// Twins must sit in distinct blocks, and a partition vector has a single
/// zero with every other coordinate in `1..=D`, so `t` blocks admit at most
/// `t * D^(t-1)` distinct vectors.
pub fn pd_lower_bound(g: &Graph) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.order();
    if n == 1 {
        return Ok(1);
    }
    let dm = g.distances();
    let twin = twin_classes(&dm).iter().map(Vec::len).max().unwrap_or(1);
    let diameter = dm.max_finite() as u128;
    let counting = (1..=n)
        .find(|&t| {
            let capacity = (t as u128).saturating_mul(diameter.saturating_pow(t as u32 - 1));
            capacity >= n as u128
        })
        .unwrap_or(n);
    Ok(twin.max(counting).max(2))
}

/// Lower bound on the metric dimension: a resolving set misses at most one
/// vertex of every twin class.
pub fn dim_lower_bound(g: &Graph) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.order() == 1 {
        return Ok(0);
    }
    let forced: usize = twin_classes(&g.distances())
        .iter()
        .map(|c| c.len() - 1)
        .sum();
    Ok(forced.max(1))
}
