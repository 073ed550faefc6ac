//! Branch and bound for the maximum clique on bitset adjacency.
//!
//! Vertices are renumbered so bitset order follows the degeneracy ordering
//! (last-removed first). Each node colours its candidate set greedily in that
//! order and branches from the highest colour down, pruning once
//! `|clique| + colour <= best`.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;

use rayon::prelude::*;

use crate::bitset::BitSet;
use crate::graph::Graph;

/// Degeneracy ordering: vertices in the order they are removed by repeatedly
/// deleting a minimum-degree vertex, ties broken by lowest index.
pub(crate) fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (degree[v], v))
            .expect("vertices remain");
        removed[v] = true;
        order.push(v);
        for w in g.neighbors(v).iter() {
            if !removed[w] {
                degree[w] -= 1;
            }
        }
    }
    order
}

/// Adjacency rows in the renumbered space, plus the map back.
struct Renumbered {
    rows: Vec<BitSet>,
    original: Vec<usize>,
}

impl Renumbered {
    fn new(g: &Graph) -> Self {
        let mut original = degeneracy_order(g);
        original.reverse();
        let n = g.n();
        let mut position = vec![0; n];
        for (i, &v) in original.iter().enumerate() {
            position[v] = i;
        }
        let rows = original
            .iter()
            .map(|&v| {
                let mut row = BitSet::new(n);
                for w in g.neighbors(v).iter() {
                    row.insert(position[w]);
                }
                row
            })
            .collect();
        Renumbered { rows, original }
    }
}

/// Greedy sequential colouring of `candidates` in index order. Returns the
/// vertices sorted by non-decreasing colour along with their colours.
fn colour_sort(rows: &[BitSet], candidates: &BitSet) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(candidates.count());
    let mut colours = Vec::with_capacity(order.capacity());
    let mut uncoloured = candidates.clone();
    let mut colour = 0;
    while !uncoloured.is_empty() {
        colour += 1;
        let mut q = uncoloured.clone();
        while let Some(v) = q.first() {
            q.remove(v);
            q.difference_with(rows[v].words());
            uncoloured.remove(v);
            order.push(v);
            colours.push(colour);
        }
    }
    (order, colours)
}

/// Best-so-far shared between search threads.
struct Incumbent {
    size: AtomicUsize,
    witness: Mutex<Vec<usize>>,
    nodes: AtomicU64,
}

impl Incumbent {
    fn offer(&self, clique: &[usize]) {
        let mut w = self.witness.lock().expect("incumbent lock poisoned");
        if clique.len() > self.size.load(Ordering::SeqCst) {
            *w = clique.to_vec();
            self.size.store(clique.len(), Ordering::SeqCst);
        }
    }
}

struct Search<'a> {
    rows: &'a [BitSet],
    incumbent: &'a Incumbent,
    clique: Vec<usize>,
    nodes: u64,
}

impl Search<'_> {
    fn expand(&mut self, mut candidates: BitSet) {
        self.nodes += 1;
        let (order, colours) = colour_sort(self.rows, &candidates);
        for i in (0..order.len()).rev() {
            if self.clique.len() + colours[i] <= self.incumbent.size.load(Ordering::Relaxed) {
                return;
            }
            let v = order[i];
            self.clique.push(v);
            let next = candidates.intersection(self.rows[v].words());
            if next.is_empty() {
                if self.clique.len() > self.incumbent.size.load(Ordering::Relaxed) {
                    self.incumbent.offer(&self.clique);
                }
            } else {
                self.expand(next);
            }
            self.clique.pop();
            candidates.remove(v);
        }
    }
}

pub(crate) struct RawClique {
    pub vertices: Vec<usize>,
    pub nodes: u64,
}

pub(crate) fn solve(g: &Graph, parallel: bool) -> RawClique {
    let n = g.n();
    if n == 0 {
        return RawClique {
            vertices: Vec::new(),
            nodes: 0,
        };
    }
    let ren = Renumbered::new(g);
    let incumbent = Incumbent {
        size: AtomicUsize::new(0),
        witness: Mutex::new(Vec::new()),
        nodes: AtomicU64::new(1),
    };

    let all = BitSet::full(n);
    let (order, colours) = colour_sort(&ren.rows, &all);

    // Root branch i takes order[i] with candidates order[..i] ∩ N(order[i]).
    let root_branch = |i: usize| {
        if colours[i] <= incumbent.size.load(Ordering::Relaxed) {
            return false;
        }
        let v = order[i];
        let mut prefix = BitSet::new(n);
        for &w in &order[..i] {
            prefix.insert(w);
        }
        prefix.intersect_with(ren.rows[v].words());
        let mut search = Search {
            rows: &ren.rows,
            incumbent: &incumbent,
            clique: vec![v],
            nodes: 0,
        };
        if prefix.is_empty() {
            incumbent.offer(&search.clique);
        } else {
            search.expand(prefix);
        }
        incumbent.nodes.fetch_add(search.nodes, Ordering::Relaxed);
        true
    };

    if parallel {
        (0..order.len()).into_par_iter().rev().for_each(|i| {
            root_branch(i);
        });
    } else {
        for i in (0..order.len()).rev() {
            if !root_branch(i) {
                break;
            }
        }
    }

    let mut vertices: Vec<usize> = incumbent
        .witness
        .into_inner()
        .expect("incumbent lock poisoned")
        .into_iter()
        .map(|v| ren.original[v])
        .collect();
    vertices.sort_unstable();
    RawClique {
        vertices,
        nodes: incumbent.nodes.load(Ordering::Relaxed),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degeneracy_of_path_peels_endpoints() {
        // path 0-1-2-3: vertex 0 (degree 1) first, then 1, ...
        assert_eq!(degeneracy_order(&Graph::path(4)), vec![0, 1, 2, 3]);
    }

    #[test]
    fn colouring_is_proper() {
        let g = Graph::cycle(5).unwrap();
        let ren = Renumbered::new(&g);
        let (order, colours) = colour_sort(&ren.rows, &BitSet::full(5));
        assert_eq!(order.len(), 5);
        assert!(colours.windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(*colours.last().unwrap(), 3);
        for a in 0..5 {
            for b in 0..5 {
                if colours[a] == colours[b] && a != b {
                    assert!(!ren.rows[order[a]].contains(order[b]));
                }
            }
        }
    }

    #[test]
    fn parallel_and_sequential_agree_on_size() {
        let g = Graph::combine(
            &Graph::cycle(7).unwrap(),
            &Graph::complete(4),
            crate::graph::CombineOp::Join,
        );
        assert_eq!(solve(&g, false).vertices.len(), 6);
        assert_eq!(solve(&g, true).vertices.len(), 6);
    }
}
