//! Recounts the construction from a closed-form adjacency predicate over
//! vertex coordinates, independent of the graph algebra in the crate.

use ramsey_sf::construct::{build_f, build_sf, validate, BaseCase, Label, Profile};
use ramsey_sf::graph::{CombineOp, ProductKind};

#[derive(Clone, Copy, Debug)]
enum Coord {
    /// position 0..6 on the explicit path
    Path(usize),
    /// side (0 = G, 1 = H), copy, position inside G_z
    Block(usize, usize, usize),
}

#[derive(Clone, Copy, Debug)]
struct V {
    stage: usize,
    coord: Coord,
    label: u8,
}

fn all_profiles() -> Vec<Profile> {
    let mut out = Vec::new();
    for sum in [CombineOp::DisjointUnion, CombineOp::Join] {
        for prod in [ProductKind::Lexicographic, ProductKind::Cartesian, ProductKind::Tensor] {
            for base_case in [BaseCase::ExplicitPath, BaseCase::General] {
                for y_label in [Label::One, Label::Two] {
                    out.push(Profile {
                        sum,
                        prod,
                        base_case,
                        y_label,
                    });
                }
            }
        }
    }
    out
}

fn stage_vertices(r: usize, p: &Profile) -> Vec<V> {
    if r == 3 && p.base_case == BaseCase::ExplicitPath {
        let y = if p.y_label == Label::One { 1 } else { 2 };
        return [1, 2, 1, 1, y, 2]
            .iter()
            .enumerate()
            .map(|(i, &label)| V {
                stage: 3,
                coord: Coord::Path(i),
                label,
            })
            .collect();
    }
    let mut out = Vec::new();
    for side in 0..2 {
        for copy in 0..r - 1 {
            for pos in 0..r {
                let base = if pos < r / 2 { 1 } else { 2 };
                let label = if side == 0 { base } else { 3 - base };
                out.push(V {
                    stage: r,
                    coord: Coord::Block(side, copy, pos),
                    label,
                });
            }
        }
    }
    out
}

fn g_side_adjacent(r: usize, p: &Profile, c1: usize, j1: usize, c2: usize, j2: usize) -> bool {
    if p.prod == ProductKind::Tensor || c1 != c2 || j1 == j2 {
        return false;
    }
    let same_block = (j1 < r / 2) == (j2 < r / 2);
    same_block || p.sum == CombineOp::Join
}

fn adjacent(p: &Profile, a: &V, b: &V) -> bool {
    let opposite = a.label % 2 != b.label % 2;
    if a.stage != b.stage {
        return opposite;
    }
    match (a.coord, b.coord) {
        (Coord::Path(i), Coord::Path(j)) => i.abs_diff(j) == 1,
        (Coord::Block(s1, c1, j1), Coord::Block(s2, c2, j2)) => {
            if s1 != s2 {
                opposite
            } else if s1 == 0 {
                g_side_adjacent(a.stage, p, c1, j1, c2, j2)
            } else {
                !(c1 == c2 && j1 == j2) && !g_side_adjacent(a.stage, p, c1, j1, c2, j2)
            }
        }
        _ => unreachable!("one stage uses one vertex scheme"),
    }
}

fn recount(vs: &[V], p: &Profile) -> (usize, Vec<(usize, usize)>) {
    let mut edges = Vec::new();
    for i in 0..vs.len() {
        for j in (i + 1)..vs.len() {
            if adjacent(p, &vs[i], &vs[j]) {
                edges.push((i, j));
            }
        }
    }
    (vs.len(), edges)
}

fn labels(vs: &[V]) -> Vec<u8> {
    vs.iter().map(|v| v.label).collect()
}

#[test]
fn stage_graphs_match_recount() {
    for p in all_profiles() {
        for r in 3..=6 {
            let vs = stage_vertices(r, &p);
            let (n, edges) = recount(&vs, &p);
            let f = build_f(r, &p).unwrap();
            assert_eq!(f.n(), n, "F({r}) {p}");
            assert_eq!(f.graph.edges().collect::<Vec<_>>(), edges, "F({r}) {p}");
            let got: Vec<u8> = f.labels.iter().map(|l| l.value()).collect();
            assert_eq!(got, labels(&vs), "F({r}) {p}");
        }
    }
}

#[test]
fn accumulated_graphs_match_recount() {
    for p in all_profiles() {
        let mut vs = Vec::new();
        for t in 3..=6 {
            vs.extend(stage_vertices(t, &p));
            let (n, edges) = recount(&vs, &p);
            let sf = build_sf(t, &p).unwrap();
            assert_eq!(sf.n(), n, "SF({t}) {p}");
            assert_eq!(sf.graph.edges().collect::<Vec<_>>(), edges, "SF({t}) {p}");
            assert!(validate(&sf).is_empty(), "SF({t}) {p}");
        }
    }
}

#[test]
fn recount_reproduces_frozen_counts() {
    let general = Profile::DEFAULT.with_base_case(BaseCase::General);
    let count = |vs: &[V], p: &Profile| recount(vs, p).1.len();
    assert_eq!(count(&stage_vertices(3, &general), &general), 35);
    assert_eq!(count(&stage_vertices(4, &general), &general), 138);

    let d = Profile::DEFAULT;
    let mut sf4 = stage_vertices(3, &d);
    sf4.extend(stage_vertices(4, &d));
    assert_eq!((sf4.len(), count(&sf4, &d)), (30, 215));
}

#[test]
fn builds_are_reproducible() {
    for p in all_profiles() {
        assert_eq!(build_sf(5, &p).unwrap(), build_sf(5, &p).unwrap());
    }
}

#[test]
fn earlier_stages_are_induced_prefixes() {
    for p in all_profiles() {
        let big = build_sf(6, &p).unwrap();
        for t in 3..6 {
            let small = build_sf(t, &p).unwrap();
            let prefix = big.graph.induced(&(0..small.n()).collect()).unwrap();
            assert_eq!(prefix, small.graph);
            assert_eq!(&big.labels[..small.n()], &small.labels[..]);
        }
    }
}

#[test]
fn no_same_parity_edge_crosses_sides() {
    for p in all_profiles() {
        for r in 3..=6 {
            let f = build_f(r, &p).unwrap();
            for &(g, _) in &f.correspondence {
                for &(_, h) in &f.correspondence {
                    let same = f.labels[g].parity() == f.labels[h].parity();
                    assert_eq!(f.graph.has_edge(g, h), !same);
                }
            }
        }
    }
}
