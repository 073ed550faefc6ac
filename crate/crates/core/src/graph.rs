//! Dense undirected simple graphs and the graph algebra used by the construction.
//!
//! A [`Graph`] is an immutable symmetric bit-matrix. Every composite operation
//! places its first operand first and uses copy-major order for products, so
//! vertex numbering is fully determined by the operands.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::{words_for, BitSet};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Primitive {
    Complete,
    Empty,
    Path,
    Cycle,
}

/// Readings of the binary `+` operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CombineOp {
    DisjointUnion,
    Join,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProductKind {
    Lexicographic,
    Cartesian,
    Tensor,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        GraphBuilder::new(n).build()
    }

    pub fn complete(n: usize) -> Self {
        Graph::empty(n).complement()
    }

    pub fn path(n: usize) -> Self {
        let mut b = GraphBuilder::new(n);
        for i in 1..n {
            b.add_edge(i - 1, i);
        }
        b.build()
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::invalid(format!("cycle needs at least 3 vertices, got {n}")));
        }
        let mut b = GraphBuilder::new(n);
        for i in 0..n {
            b.add_edge(i, (i + 1) % n);
        }
        Ok(b.build())
    }

    pub fn primitive(kind: Primitive, n: usize) -> Result<Self> {
        match kind {
            Primitive::Complete => Ok(Graph::complete(n)),
            Primitive::Empty => Ok(Graph::empty(n)),
            Primitive::Path => Ok(Graph::path(n)),
            Primitive::Cycle => Graph::cycle(n),
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut b = GraphBuilder::new(n);
        for (u, v) in edges {
            b.try_add_edge(u, v)?;
        }
        Ok(b.build())
    }

    /// Erdos-Renyi `G(n, p)`: each pair independently with probability `p`,
    /// drawn in lexicographic pair order.
    pub fn random<R: rand::Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Self {
        let mut b = GraphBuilder::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(p) {
                    b.add_edge(u, v);
                }
            }
        }
        b.build()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        (self.rows[u * self.stride + v / 64] >> (v % 64)) & 1 == 1
    }

    /// Neighbourhood of `v` as raw bitset words.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.stride..(v + 1) * self.stride]
    }

    pub fn neighbors(&self, v: usize) -> BitSet {
        BitSet::from_words(self.row(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&v| v > u)
                .collect::<Vec<_>>()
                .into_iter()
                .map(move |v| (u, v))
        })
    }

    pub fn to_builder(&self) -> GraphBuilder {
        GraphBuilder {
            graph: self.clone(),
        }
    }

    pub fn complement(&self) -> Graph {
        let mut b = GraphBuilder::new(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    b.add_edge(u, v);
                }
            }
        }
        b.build()
    }

    /// `a` occupies `[0, a.n)`, `b` occupies `[a.n, a.n + b.n)`.
    pub fn combine(a: &Graph, b: &Graph, op: CombineOp) -> Graph {
        let off = a.n;
        let mut out = GraphBuilder::new(a.n + b.n);
        for (u, v) in a.edges() {
            out.add_edge(u, v);
        }
        for (u, v) in b.edges() {
            out.add_edge(off + u, off + v);
        }
        if op == CombineOp::Join {
            for u in 0..a.n {
                for v in 0..b.n {
                    out.add_edge(u, off + v);
                }
            }
        }
        out.build()
    }

    /// Vertex `(i, j)` with `i` from `a` and `j` from `b` gets index `i * b.n + j`.
    pub fn product(a: &Graph, b: &Graph, kind: ProductKind) -> Graph {
        let m = b.n;
        let mut out = GraphBuilder::new(a.n * m);
        for x in 0..a.n * m {
            let (i, j) = (x / m, x % m);
            for y in (x + 1)..a.n * m {
                let (k, l) = (y / m, y % m);
                let adjacent = match kind {
                    ProductKind::Cartesian => {
                        (i == k && b.has_edge(j, l)) || (j == l && a.has_edge(i, k))
                    }
                    ProductKind::Tensor => i != k && j != l && a.has_edge(i, k) && b.has_edge(j, l),
                    ProductKind::Lexicographic => {
                        (i != k && a.has_edge(i, k)) || (i == k && b.has_edge(j, l))
                    }
                };
                if adjacent {
                    out.add_edge(x, y);
                }
            }
        }
        out.build()
    }

    /// Subgraph induced by `s`, renumbered in increasing original order.
    pub fn induced(&self, s: &VertexSet) -> Result<Graph> {
        s.check_for(self)?;
        let members = s.as_slice();
        let mut out = GraphBuilder::new(members.len());
        for (a, &u) in members.iter().enumerate() {
            for (b, &v) in members.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    out.add_edge(a, b);
                }
            }
        }
        Ok(out.build())
    }

    /// Structural self-check: symmetry, empty diagonal, no bits past `n`.
    /// Returns a description of each defect found.
    pub fn structural_defects(&self) -> Vec<String> {
        let mut out = Vec::new();
        for u in 0..self.n {
            if self.has_edge(u, u) {
                out.push(format!("self-loop at {u}"));
            }
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) != self.has_edge(v, u) {
                    out.push(format!("asymmetric pair {u}-{v}"));
                }
            }
            let row = self.row(u);
            let tail = self.n % 64;
            if tail != 0 && row[self.stride - 1] >> tail != 0 {
                out.push(format!("row {u} has bits beyond n"));
            }
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Mutable edge editor. Every edit is applied symmetrically and self-loops are
/// rejected, so a built [`Graph`] always satisfies the simple-graph invariants.
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    graph: Graph,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        let stride = words_for(n);
        GraphBuilder {
            graph: Graph {
                n,
                stride,
                rows: vec![0; n * stride],
            },
        }
    }

    pub fn n(&self) -> usize {
        self.graph.n
    }

    fn set(&mut self, u: usize, v: usize, on: bool) {
        let s = self.graph.stride;
        let (wu, bu) = (u * s + v / 64, 1u64 << (v % 64));
        let (wv, bv) = (v * s + u / 64, 1u64 << (u % 64));
        if on {
            self.graph.rows[wu] |= bu;
            self.graph.rows[wv] |= bv;
        } else {
            self.graph.rows[wu] &= !bu;
            self.graph.rows[wv] &= !bv;
        }
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        let n = self.graph.n;
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::invalid(format!("self-loop at {u}")));
        }
        Ok(())
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        self.set(u, v, true);
        Ok(())
    }

    pub fn try_remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        self.set(u, v, false);
        Ok(())
    }

    /// Panics on out-of-range vertices or `u == v`.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at {u}");
        assert!(u < self.graph.n && v < self.graph.n);
        self.set(u, v, true);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.graph.n && v < self.graph.n);
        if u != v {
            self.set(u, v, false);
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.graph.has_edge(u, v)
    }

    pub fn build(self) -> Graph {
        self.graph
    }
}

/// Sorted, duplicate-free set of vertex indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0]));
        }
        Ok(VertexSet(members))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn check_for(&self, g: &Graph) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= g.n() => Err(Error::VertexOutOfRange { vertex: v, n: g.n() }),
            _ => Ok(()),
        }
    }
}

impl TryFrom<Vec<usize>> for VertexSet {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        VertexSet::new(v)
    }
}

impl From<VertexSet> for Vec<usize> {
    fn from(s: VertexSet) -> Self {
        s.0
    }
}

impl FromIterator<usize> for VertexSet {
    /// Duplicates are merged.
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}
