//! Brute-force clique number for small graphs, kept independent of the
//! branch-and-bound solver so the two can check each other.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const ORACLE_MAX_N: usize = 24;

/// Exact clique number by include/exclude enumeration over all vertex subsets,
/// skipping a subtree only when even taking every remaining vertex could not
/// beat the best size found.
pub fn oracle_max_clique(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > ORACLE_MAX_N {
        return Err(Error::OracleTooLarge {
            n,
            limit: ORACLE_MAX_N,
        });
    }
    let adj: Vec<u32> = (0..n)
        .map(|u| {
            (0..n)
                .filter(|&v| v != u && g.has_edge(u, v))
                .fold(0u32, |m, v| m | (1 << v))
        })
        .collect();

    fn grow(adj: &[u32], next: usize, chosen: u32, size: usize, best: &mut usize) {
        if size + (adj.len() - next) <= *best {
            return;
        }
        if next == adj.len() {
            *best = size;
            return;
        }
        if adj[next] & chosen == chosen {
            grow(adj, next + 1, chosen | (1 << next), size + 1, best);
        }
        grow(adj, next + 1, chosen, size, best);
    }

    let mut best = 0;
    grow(&adj, 0, 0, 0, &mut best);
    Ok(best)
}
