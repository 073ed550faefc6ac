//! Exact clique, independent-set and monochromatic-clique solvers.

mod clique;
mod oracle;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::construct::{Label, LabeledGraph};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};

pub use oracle::{oracle_max_clique, ORACLE_MAX_N};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessMode {
    Clique,
    Independent,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolverOptions {
    /// Single-threaded search, so the witness and node count are reproducible.
    /// The optimum size never depends on this flag.
    pub deterministic: bool,
}

impl SolverOptions {
    pub const DETERMINISTIC: SolverOptions = SolverOptions {
        deterministic: true,
    };
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueResult {
    pub size: usize,
    pub witness: VertexSet,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

/// True iff every pair in `s` is adjacent (`Clique`) or non-adjacent
/// (`Independent`) in `g`.
pub fn verify_witness(g: &Graph, s: &VertexSet, mode: WitnessMode) -> Result<bool> {
    s.check_for(g)?;
    let m = s.as_slice();
    let want = mode == WitnessMode::Clique;
    Ok(m
        .iter()
        .enumerate()
        .all(|(i, &u)| m[i + 1..].iter().all(|&v| g.has_edge(u, v) == want)))
}

fn finish(g: &Graph, raw: clique::RawClique, mode: WitnessMode, start: Instant) -> CliqueResult {
    let witness = VertexSet::new(raw.vertices).expect("solver witness has no duplicates");
    assert!(
        verify_witness(g, &witness, mode).expect("solver witness in range"),
        "solver produced an invalid {mode:?} witness"
    );
    CliqueResult {
        size: witness.len(),
        witness,
        nodes_explored: raw.nodes,
        elapsed: start.elapsed(),
    }
}

/// Clique number with a verified witness.
pub fn max_clique(g: &Graph, opts: SolverOptions) -> CliqueResult {
    let start = Instant::now();
    let raw = clique::solve(g, !opts.deterministic);
    finish(g, raw, WitnessMode::Clique, start)
}

/// Independence number, as the clique number of the complement. The witness
/// is checked for independence in `g` itself.
pub fn max_independent_set(g: &Graph, opts: SolverOptions) -> CliqueResult {
    let start = Instant::now();
    let raw = clique::solve(&g.complement(), !opts.deterministic);
    finish(g, raw, WitnessMode::Independent, start)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoClique {
    pub result: CliqueResult,
    /// Label shared by the witness; `None` only for the empty graph.
    pub label: Option<Label>,
}

/// Largest clique whose vertices all carry one label. Label 1 is searched
/// first and keeps ties.
pub fn max_mono_clique(lg: &LabeledGraph, opts: SolverOptions) -> MonoClique {
    let start = Instant::now();
    let mut best: Option<(Label, VertexSet)> = None;
    let mut nodes = 0;
    for label in Label::ALL {
        let class = lg.vertices_with_label(label);
        if class.is_empty() {
            continue;
        }
        let sub = lg.graph.induced(&class).expect("label class in range");
        let res = max_clique(&sub, opts);
        nodes += res.nodes_explored;
        if best.as_ref().is_none_or(|(_, w)| res.size > w.len()) {
            let mapped = res.witness.as_slice().iter().map(|&i| class.as_slice()[i]);
            best = Some((label, mapped.collect()));
        }
    }
    let (label, witness) = match best {
        Some((l, w)) => (Some(l), w),
        None => (None, VertexSet::default()),
    };
    assert!(verify_witness(&lg.graph, &witness, WitnessMode::Clique).expect("in range"));
    MonoClique {
        result: CliqueResult {
            size: witness.len(),
            witness,
            nodes_explored: nodes,
            elapsed: start.elapsed(),
        },
        label,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{build_f, Profile};

    const DET: SolverOptions = SolverOptions::DETERMINISTIC;

    fn set(v: &[usize]) -> VertexSet {
        VertexSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn max_clique_examples() {
        assert_eq!(max_clique(&Graph::cycle(5).unwrap(), DET).size, 2);
        let k7 = max_clique(&Graph::complete(7), DET);
        assert_eq!(k7.size, 7);
        assert_eq!(k7.witness.as_slice(), &[0, 1, 2, 3, 4, 5, 6]);
        let e = max_clique(&Graph::empty(0), DET);
        assert_eq!((e.size, e.witness.len()), (0, 0));
        assert_eq!(max_clique(&Graph::empty(3), DET).size, 1);
    }

    #[test]
    fn independent_set_examples() {
        let p6 = max_independent_set(&Graph::path(6), DET);
        assert_eq!(p6.size, 3);
        assert!(verify_witness(&Graph::path(6), &p6.witness, WitnessMode::Independent).unwrap());
        assert_eq!(max_independent_set(&Graph::complete(5), DET).size, 1);
        assert_eq!(max_independent_set(&Graph::cycle(5).unwrap(), DET).size, 2);
    }

    #[test]
    fn verify_witness_examples() {
        assert!(verify_witness(&Graph::complete(4), &set(&[0, 1, 2]), WitnessMode::Clique).unwrap());
        assert!(verify_witness(&Graph::path(6), &set(&[0, 2, 4]), WitnessMode::Independent).unwrap());
        assert!(!verify_witness(&Graph::path(6), &set(&[0, 1, 3]), WitnessMode::Clique).unwrap());
        assert!(verify_witness(&Graph::path(6), &set(&[0, 9]), WitnessMode::Clique).is_err());
    }

    #[test]
    fn mono_clique_on_base_path() {
        let f3 = build_f(3, &Profile::DEFAULT).unwrap();
        let m = max_mono_clique(&f3, DET);
        assert_eq!(m.result.size, 2);
        assert_eq!(m.result.witness.as_slice(), &[2, 3]);
        assert_eq!(m.label, Some(Label::One));
    }

    #[test]
    fn uniform_labels_reduce_to_clique_number() {
        let mut f4 = build_f(4, &Profile::DEFAULT).unwrap();
        f4.labels.iter_mut().for_each(|l| *l = Label::Two);
        let m = max_mono_clique(&f4, DET);
        assert_eq!(m.result.size, max_clique(&f4.graph, DET).size);
        assert_eq!(m.label, Some(Label::Two));
    }
}
