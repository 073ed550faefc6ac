//! The labelled block construction: `G_z`, the sides `G` and `H`, the stage
//! graphs `F(r)` and the accumulated graph `SF(t)`.
//!
//! Every ambiguous operator is resolved by an explicit [`Profile`]. All builds
//! are pure functions of `(r, profile)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{CombineOp, Graph, GraphBuilder, ProductKind, VertexSet};

/// Vertex label with codomain `{1, 2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum Label {
    One,
    Two,
}

impl Label {
    pub const ALL: [Label; 2] = [Label::One, Label::Two];

    pub fn value(self) -> u8 {
        match self {
            Label::One => 1,
            Label::Two => 2,
        }
    }

    pub fn parity(self) -> u8 {
        self.value() % 2
    }

    /// The label of opposite parity.
    pub fn flip(self) -> Label {
        match self {
            Label::One => Label::Two,
            Label::Two => Label::One,
        }
    }

    /// The cross-edge condition `g(v) = g(w) + 1 (mod 2)`.
    pub fn differs_in_parity(self, other: Label) -> bool {
        self.parity() != other.parity()
    }
}

impl TryFrom<u8> for Label {
    type Error = Error;

    fn try_from(v: u8) -> Result<Self> {
        match v {
            1 => Ok(Label::One),
            2 => Ok(Label::Two),
            _ => Err(Error::invalid(format!("label must be 1 or 2, got {v}"))),
        }
    }
}

impl From<Label> for u8 {
    fn from(l: Label) -> u8 {
        l.value()
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BaseCase {
    /// `F(3)` is the 6-vertex path `v u w x y t`.
    ExplicitPath,
    /// `F(3)` follows the general formula like every other stage.
    General,
}

/// Resolved readings of the construction's ambiguous operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Profile {
    pub sum: CombineOp,
    pub prod: ProductKind,
    pub base_case: BaseCase,
    pub y_label: Label,
}

impl Profile {
    pub const DEFAULT: Profile = Profile {
        sum: CombineOp::DisjointUnion,
        prod: ProductKind::Lexicographic,
        base_case: BaseCase::ExplicitPath,
        y_label: Label::Two,
    };

    pub fn with_base_case(self, base_case: BaseCase) -> Self {
        Profile { base_case, ..self }
    }
}

impl Default for Profile {
    fn default() -> Self {
        Profile::DEFAULT
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sum = match self.sum {
            CombineOp::DisjointUnion => "union",
            CombineOp::Join => "join",
        };
        let prod = match self.prod {
            ProductKind::Lexicographic => "lex",
            ProductKind::Cartesian => "cart",
            ProductKind::Tensor => "tensor",
        };
        let base = match self.base_case {
            BaseCase::ExplicitPath => "explicit",
            BaseCase::General => "general",
        };
        write!(f, "sum={sum} prod={prod} base={base} y={}", self.y_label)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    G,
    H,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Block {
    /// The clique on `floor(r/2)` vertices labelled 1.
    X,
    /// The clique on `ceil(r/2)` vertices labelled 2.
    Y,
}

/// Names of the explicit base-case path vertices, by index.
pub const PATH_NAMES: [char; 6] = ['v', 'u', 'w', 'x', 'y', 't'];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Origin {
    /// Vertex of the explicit base-case path.
    Path { name: char },
    Block {
        side: Side,
        copy: usize,
        block: Block,
        within: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexProvenance {
    pub stage: usize,
    pub origin: Origin,
}

impl fmt::Display for VertexProvenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.origin {
            Origin::Path { name } => write!(f, "{name}"),
            Origin::Block {
                side,
                copy,
                block,
                within,
            } => {
                let side = match side {
                    Side::G => 'G',
                    Side::H => 'H',
                };
                let block = match block {
                    Block::X => 'x',
                    Block::Y => 'y',
                };
                write!(f, "F{}.{side}{copy}.{block}{within}", self.stage)
            }
        }
    }
}

/// A graph together with its labelling `g`, per-vertex provenance and the
/// correspondence `f` from `G`-side to `H`-side vertices.
///
/// Fields are public so that faults can be seeded; [`validate`] reports any
/// broken invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<Label>,
    pub provenance: Vec<VertexProvenance>,
    /// `(g_side_vertex, h_side_vertex)` pairs, sorted by the first entry.
    pub correspondence: Vec<(usize, usize)>,
}

impl LabeledGraph {
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// `(count labelled 1, count labelled 2)`.
    pub fn label_counts(&self) -> (usize, usize) {
        let ones = self.labels.iter().filter(|&&l| l == Label::One).count();
        (ones, self.labels.len() - ones)
    }

    pub fn vertices_with_label(&self, label: Label) -> VertexSet {
        self.labels
            .iter()
            .enumerate()
            .filter(|(_, &l)| l == label)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn vertex_name(&self, v: usize) -> String {
        self.provenance[v].to_string()
    }

    /// Disjoint placement of `self` then `other`, plus every edge between the
    /// two parts whose endpoint labels differ in parity.
    fn append_with_cross_edges(self, other: LabeledGraph) -> LabeledGraph {
        let off = self.n();
        let merged = Graph::combine(&self.graph, &other.graph, CombineOp::DisjointUnion);
        let mut b = merged.to_builder();
        for (u, lu) in self.labels.iter().enumerate() {
            for (w, lw) in other.labels.iter().enumerate() {
                if lu.differs_in_parity(*lw) {
                    b.add_edge(u, off + w);
                }
            }
        }
        let mut labels = self.labels;
        labels.extend(other.labels);
        let mut provenance = self.provenance;
        provenance.extend(other.provenance);
        let mut correspondence = self.correspondence;
        correspondence.extend(other.correspondence.iter().map(|&(g, h)| (g + off, h + off)));
        LabeledGraph {
            graph: b.build(),
            labels,
            provenance,
            correspondence,
        }
    }
}

fn check_stage(r: usize) -> Result<()> {
    if r < 3 {
        return Err(Error::invalid(format!("stage r must be at least 3, got {r}")));
    }
    Ok(())
}

fn block_sizes(r: usize) -> (usize, usize) {
    (r / 2, r - r / 2)
}

/// `G_z = G_x + G_y`: a clique on `floor(r/2)` vertices labelled 1 followed by a
/// clique on `ceil(r/2)` vertices labelled 2.
pub fn build_block(r: usize, p: &Profile) -> Result<LabeledGraph> {
    check_stage(r)?;
    let (nx, ny) = block_sizes(r);
    let graph = Graph::combine(&Graph::complete(nx), &Graph::complete(ny), p.sum);
    let labels = (0..r)
        .map(|i| if i < nx { Label::One } else { Label::Two })
        .collect();
    let provenance = (0..r)
        .map(|i| VertexProvenance {
            stage: r,
            origin: Origin::Block {
                side: Side::G,
                copy: 0,
                block: if i < nx { Block::X } else { Block::Y },
                within: if i < nx { i } else { i - nx },
            },
        })
        .collect();
    Ok(LabeledGraph {
        graph,
        labels,
        provenance,
        correspondence: Vec::new(),
    })
}

/// `G = (r-1)K_1 x G_z` followed by `H`, its complement on a fresh vertex set.
/// The `i`-th `G` vertex corresponds to the `i`-th `H` vertex and carries the
/// opposite label. No edges join the two sides.
pub fn build_sides(r: usize, p: &Profile) -> Result<LabeledGraph> {
    let block = build_block(r, p)?;
    let copies = r - 1;
    let g_side = Graph::product(&Graph::empty(copies), &block.graph, p.prod);
    let h_side = g_side.complement();
    let half = g_side.n();
    let graph = Graph::combine(&g_side, &h_side, CombineOp::DisjointUnion);

    let mut labels = Vec::with_capacity(2 * half);
    let mut provenance = Vec::with_capacity(2 * half);
    for side in [Side::G, Side::H] {
        for copy in 0..copies {
            for (j, prov) in block.provenance.iter().enumerate() {
                let base = block.labels[j];
                labels.push(if side == Side::G { base } else { base.flip() });
                let Origin::Block { block, within, .. } = prov.origin else {
                    unreachable!("block vertices carry block provenance");
                };
                provenance.push(VertexProvenance {
                    stage: r,
                    origin: Origin::Block {
                        side,
                        copy,
                        block,
                        within,
                    },
                });
            }
        }
    }
    Ok(LabeledGraph {
        graph,
        labels,
        provenance,
        correspondence: (0..half).map(|i| (i, half + i)).collect(),
    })
}

/// The explicit 6-vertex path `v-u-w-x-y-t` with `g(v)=g(w)=g(x)=1`,
/// `g(u)=g(t)=2` and `g(y)` taken from the profile.
pub fn explicit_base_path(y_label: Label) -> LabeledGraph {
    use Label::{One, Two};
    LabeledGraph {
        graph: Graph::path(6),
        labels: vec![One, Two, One, One, y_label, Two],
        provenance: PATH_NAMES
            .iter()
            .map(|&name| VertexProvenance {
                stage: 3,
                origin: Origin::Path { name },
            })
            .collect(),
        correspondence: Vec::new(),
    }
}

/// `F(r)`: both sides plus every `G`-`H` edge whose endpoints differ in parity.
pub fn build_f(r: usize, p: &Profile) -> Result<LabeledGraph> {
    check_stage(r)?;
    if r == 3 && p.base_case == BaseCase::ExplicitPath {
        return Ok(explicit_base_path(p.y_label));
    }
    let sides = build_sides(r, p)?;
    let half = sides.n() / 2;
    let mut b: GraphBuilder = sides.graph.to_builder();
    for v in 0..half {
        for w in half..2 * half {
            if sides.labels[v].differs_in_parity(sides.labels[w]) {
                b.add_edge(v, w);
            }
        }
    }
    Ok(LabeledGraph {
        graph: b.build(),
        ..sides
    })
}

/// `SF(t)`: `SF(3) = F(3)`, and `SF(t)` places `SF(t-1)` then `F(t)` and joins
/// every opposite-parity pair between them.
pub fn build_sf(t: usize, p: &Profile) -> Result<LabeledGraph> {
    check_stage(t)?;
    let mut acc = build_f(3, p)?;
    for r in 4..=t {
        acc = acc.append_with_cross_edges(build_f(r, p)?);
    }
    Ok(acc)
}

/// Vertex count of a general-formula stage `F(r)`.
pub fn stage_vertex_count(r: usize, p: &Profile) -> usize {
    if r == 3 && p.base_case == BaseCase::ExplicitPath {
        6
    } else {
        2 * (r - 1) * r
    }
}

/// A broken invariant found by [`validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Structure(String),
    LengthMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    LabelFlip {
        g_vertex: usize,
        h_vertex: usize,
        label: Label,
    },
    Correspondence(String),
    MissingCrossEdge(usize, usize),
    UnexpectedCrossEdge(usize, usize),
    Provenance {
        vertex: usize,
        detail: String,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Structure(s) => write!(f, "adjacency: {s}"),
            Violation::LengthMismatch {
                what,
                expected,
                found,
            } => write!(f, "{what} has {found} entries, expected {expected}"),
            Violation::LabelFlip {
                g_vertex,
                h_vertex,
                label,
            } => write!(
                f,
                "label flip broken: g({g_vertex}) = g(f({g_vertex})) = g({h_vertex}) = {label}"
            ),
            Violation::Correspondence(s) => write!(f, "correspondence: {s}"),
            Violation::MissingCrossEdge(u, v) => {
                write!(f, "missing cross edge {u}-{v} between opposite parities")
            }
            Violation::UnexpectedCrossEdge(u, v) => {
                write!(f, "cross edge {u}-{v} joins equal parities")
            }
            Violation::Provenance { vertex, detail } => {
                write!(f, "provenance of vertex {vertex}: {detail}")
            }
        }
    }
}

/// Whether the parity cross-edge rule governs the pair `(u, v)`: vertices of
/// different stages, or opposite sides of one stage.
fn cross_rule_applies(a: &VertexProvenance, b: &VertexProvenance) -> bool {
    if a.stage != b.stage {
        return true;
    }
    match (a.origin, b.origin) {
        (Origin::Block { side: sa, .. }, Origin::Block { side: sb, .. }) => sa != sb,
        _ => false,
    }
}

fn block_key(p: &VertexProvenance) -> Option<(Side, usize, Block, usize)> {
    match p.origin {
        Origin::Block {
            side,
            copy,
            block,
            within,
        } => Some((side, copy, block, within)),
        Origin::Path { .. } => None,
    }
}

fn check_provenance(lg: &LabeledGraph, out: &mut Vec<Violation>) {
    let mut bad = |vertex: usize, detail: String| out.push(Violation::Provenance { vertex, detail });
    let mut path_seen = 0usize;
    for (v, p) in lg.provenance.iter().enumerate() {
        if p.stage < 3 {
            bad(v, format!("stage {} below 3", p.stage));
            continue;
        }
        if v > 0 {
            let prev = &lg.provenance[v - 1];
            if prev.stage > p.stage {
                bad(v, format!("stage {} follows stage {}", p.stage, prev.stage));
            } else if prev.stage == p.stage {
                if let (Some(a), Some(b)) = (block_key(prev), block_key(p)) {
                    if a >= b {
                        bad(v, "block positions out of order".into());
                    }
                } else if block_key(prev).is_some() != block_key(p).is_some() {
                    bad(v, "path and block vertices mixed in one stage".into());
                }
            }
        }
        match p.origin {
            Origin::Path { name } => {
                if p.stage != 3 {
                    bad(v, format!("path vertex {name} at stage {}", p.stage));
                }
                if PATH_NAMES.get(path_seen) != Some(&name) {
                    bad(v, format!("path vertex {name} out of position"));
                }
                path_seen += 1;
            }
            Origin::Block {
                side,
                copy,
                block,
                within,
            } => {
                let (nx, ny) = block_sizes(p.stage);
                let size = if block == Block::X { nx } else { ny };
                if copy >= p.stage - 1 {
                    bad(v, format!("copy {copy} out of range"));
                }
                if within >= size {
                    bad(v, format!("index {within} exceeds block size {size}"));
                }
                let base = if block == Block::X { Label::One } else { Label::Two };
                let expected = if side == Side::G { base } else { base.flip() };
                if let Some(&l) = lg.labels.get(v) {
                    if l != expected {
                        bad(v, format!("label {l} does not match block (expected {expected})"));
                    }
                }
            }
        }
    }
}

fn check_correspondence(lg: &LabeledGraph, out: &mut Vec<Violation>) {
    let n = lg.n();
    let mut g_used = vec![false; n];
    let mut h_used = vec![false; n];
    for &(g, h) in &lg.correspondence {
        if g >= n || h >= n {
            out.push(Violation::Correspondence(format!("pair ({g}, {h}) out of range")));
            continue;
        }
        if std::mem::replace(&mut g_used[g], true) {
            out.push(Violation::Correspondence(format!("{g} mapped twice")));
        }
        if std::mem::replace(&mut h_used[h], true) {
            out.push(Violation::Correspondence(format!("{h} is the image of two vertices")));
        }
        let (pg, ph) = (&lg.provenance[g], &lg.provenance[h]);
        match (block_key(pg), block_key(ph)) {
            (Some((Side::G, cg, bg, wg)), Some((Side::H, ch, bh, wh)))
                if pg.stage == ph.stage && (cg, bg, wg) == (ch, bh, wh) => {}
            _ => out.push(Violation::Correspondence(format!(
                "({g}, {h}) does not pair a G vertex with its H twin"
            ))),
        }
        if !lg.labels[g].differs_in_parity(lg.labels[h]) {
            out.push(Violation::LabelFlip {
                g_vertex: g,
                h_vertex: h,
                label: lg.labels[g],
            });
        }
    }
    for (v, p) in lg.provenance.iter().enumerate() {
        match block_key(p) {
            Some((Side::G, ..)) if !g_used[v] && stage_has_h(lg, p.stage) => out.push(
                Violation::Correspondence(format!("G vertex {v} has no image")),
            ),
            Some((Side::H, ..)) if !h_used[v] => {
                out.push(Violation::Correspondence(format!("H vertex {v} has no preimage")))
            }
            _ => {}
        }
    }
}

fn stage_has_h(lg: &LabeledGraph, stage: usize) -> bool {
    lg.provenance
        .iter()
        .any(|p| p.stage == stage && matches!(block_key(p), Some((Side::H, ..))))
}

/// Collects every invariant the construction guarantees and reports each
/// failure. An empty list means the graph is valid.
pub fn validate(lg: &LabeledGraph) -> Vec<Violation> {
    let mut out: Vec<Violation> = lg
        .graph
        .structural_defects()
        .into_iter()
        .map(Violation::Structure)
        .collect();
    let n = lg.n();
    for (what, found) in [
        ("labels", lg.labels.len()),
        ("provenance", lg.provenance.len()),
    ] {
        if found != n {
            out.push(Violation::LengthMismatch {
                what,
                expected: n,
                found,
            });
        }
    }
    if !out.is_empty() {
        return out;
    }

    check_provenance(lg, &mut out);
    check_correspondence(lg, &mut out);

    for u in 0..n {
        for v in (u + 1)..n {
            if !cross_rule_applies(&lg.provenance[u], &lg.provenance[v]) {
                continue;
            }
            let want = lg.labels[u].differs_in_parity(lg.labels[v]);
            match (want, lg.graph.has_edge(u, v)) {
                (true, false) => out.push(Violation::MissingCrossEdge(u, v)),
                (false, true) => out.push(Violation::UnexpectedCrossEdge(u, v)),
                _ => {}
            }
        }
    }
    out
}
