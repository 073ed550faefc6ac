//! Certificate-backed verdicts on the two construction claims, Ramsey-witness
//! checks, and the lower bound a witness implies.
//!
//! Verdicts are derived only from exact solver output. A refutation always
//! carries a vertex set that re-verifies against the checked graph.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::construct::{build_f, build_sf, Label, LabeledGraph, Profile};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::solvers::{
    max_clique, max_independent_set, max_mono_clique, verify_witness, CliqueResult,
    SolverOptions, WitnessMode,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    /// Largest monochromatic clique of `F(r)` has size `ceil(r/2)`.
    #[serde(rename = "T1_1")]
    MonoCliqueSize,
    /// `SF(r+1)` contains neither `K_{r+1}` nor `(r+1)K_1`.
    #[serde(rename = "T1_2")]
    NoCliqueOrCoclique,
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TheoremId::MonoCliqueSize => "T1_1",
            TheoremId::NoCliqueOrCoclique => "T1_2",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Confirmed,
    Refuted,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Confirmed => "CONFIRMED",
            Status::Refuted => "REFUTED",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Claim {
    /// The maximum monochromatic clique has exactly this size.
    MonoCliqueSize { size: usize },
    /// Both clique and independence numbers are at most `limit`.
    CliqueAndIndependenceAtMost { limit: usize },
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Claim::MonoCliqueSize { size } => write!(f, "max mono clique = {size}"),
            Claim::CliqueAndIndependenceAtMost { limit } => {
                write!(f, "omega <= {limit} and alpha <= {limit}")
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Computed {
    MonoClique { size: usize },
    CliqueAndIndependence { omega: usize, alpha: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    Clique,
    Independent,
    MonoClique,
}

impl WitnessKind {
    pub fn mode(self) -> WitnessMode {
        match self {
            WitnessKind::Independent => WitnessMode::Independent,
            WitnessKind::Clique | WitnessKind::MonoClique => WitnessMode::Clique,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub kind: WitnessKind,
    pub vertices: VertexSet,
    /// Human-readable vertex names from provenance, parallel to `vertices`.
    pub names: Vec<String>,
    /// Shared label, for monochromatic witnesses.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<Label>,
}

impl Witness {
    fn new(kind: WitnessKind, res: &CliqueResult, lg: Option<&LabeledGraph>) -> Self {
        let names = res
            .witness
            .as_slice()
            .iter()
            .map(|&v| lg.map_or_else(|| v.to_string(), |lg| lg.vertex_name(v)))
            .collect();
        Witness {
            kind,
            vertices: res.witness.clone(),
            names,
            label: None,
        }
    }

    /// Re-checks the witness against `g` (and `labels`, for monochromatic
    /// witnesses) with the direct pairwise test.
    pub fn reverify(&self, g: &Graph, labels: Option<&[Label]>) -> Result<bool> {
        if !verify_witness(g, &self.vertices, self.kind.mode())? {
            return Ok(false);
        }
        if self.kind == WitnessKind::MonoClique {
            let Some(labels) = labels else {
                return Err(Error::invalid("monochromatic witness needs labels"));
            };
            let mut it = self.vertices.as_slice().iter().map(|&v| labels[v]);
            if let Some(first) = it.next() {
                if it.any(|l| l != first) || self.label.is_some_and(|l| l != first) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverStats {
    pub nodes_explored: u64,
    pub elapsed_us: u64,
}

impl SolverStats {
    fn of(results: &[&CliqueResult]) -> Self {
        SolverStats {
            nodes_explored: results.iter().map(|r| r.nodes_explored).sum(),
            elapsed_us: results.iter().map(|r| r.elapsed.as_micros() as u64).sum(),
        }
    }

    pub fn add(&mut self, other: &SolverStats) {
        self.nodes_explored += other.nodes_explored;
        self.elapsed_us += other.elapsed_us;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremCheck {
    pub theorem: TheoremId,
    pub r: usize,
    pub profile: Profile,
    pub claimed: Claim,
    pub computed: Computed,
    pub status: Status,
    /// On refutation the first entry is the violating certificate; otherwise
    /// these are the optimal witnesses found.
    pub witnesses: Vec<Witness>,
    pub solver_stats: SolverStats,
}

impl TheoremCheck {
    /// Witness that violates the claim, when the claim is refuted by an
    /// oversize structure.
    pub fn violating_witness(&self) -> Option<&Witness> {
        if self.status != Status::Refuted {
            return None;
        }
        let w = self.witnesses.first()?;
        let violates = match self.claimed {
            Claim::MonoCliqueSize { size } => w.vertices.len() > size,
            Claim::CliqueAndIndependenceAtMost { limit } => w.vertices.len() > limit,
        };
        violates.then_some(w)
    }
}

pub fn ceil_half(r: usize) -> usize {
    r.div_ceil(2)
}

/// Checks that the exact maximum monochromatic clique of `F(r)` equals
/// `ceil(r/2)`.
pub fn check_theorem_1_1(r: usize, p: &Profile, opts: SolverOptions) -> Result<TheoremCheck> {
    let f = build_f(r, p)?;
    Ok(mono_clique_check(&f, r, p, opts))
}

/// Monochromatic-clique check on an arbitrary labelled graph.
pub fn mono_clique_check(lg: &LabeledGraph, r: usize, p: &Profile, opts: SolverOptions) -> TheoremCheck {
    let mono = max_mono_clique(lg, opts);
    let claimed = ceil_half(r);
    let computed = mono.result.size;
    let mut w = Witness::new(WitnessKind::MonoClique, &mono.result, Some(lg));
    w.label = mono.label;
    TheoremCheck {
        theorem: TheoremId::MonoCliqueSize,
        r,
        profile: *p,
        claimed: Claim::MonoCliqueSize { size: claimed },
        computed: Computed::MonoClique { size: computed },
        status: if computed == claimed {
            Status::Confirmed
        } else {
            Status::Refuted
        },
        witnesses: vec![w],
        solver_stats: SolverStats::of(&[&mono.result]),
    }
}

/// Checks that `SF(r+1)` has clique and independence numbers at most `r`.
pub fn check_theorem_1_2(r: usize, p: &Profile, opts: SolverOptions) -> Result<TheoremCheck> {
    if r < 2 {
        return Err(Error::invalid(format!("the clique/coclique check needs r >= 2, got {r}")));
    }
    let sf = build_sf(r + 1, p)?;
    Ok(clique_free_check(&sf.graph, Some(&sf), r, p, opts))
}

/// Clique/coclique check on an arbitrary graph: REFUTED iff it contains
/// `K_{r+1}` or `(r+1)K_1`.
pub fn clique_free_check(
    g: &Graph,
    lg: Option<&LabeledGraph>,
    r: usize,
    p: &Profile,
    opts: SolverOptions,
) -> TheoremCheck {
    let omega = max_clique(g, opts);
    let alpha = max_independent_set(g, opts);
    let cw = Witness::new(WitnessKind::Clique, &omega, lg);
    let iw = Witness::new(WitnessKind::Independent, &alpha, lg);
    let status = if omega.size <= r && alpha.size <= r {
        Status::Confirmed
    } else {
        Status::Refuted
    };
    let witnesses = if omega.size <= r && alpha.size > r {
        vec![iw, cw]
    } else {
        vec![cw, iw]
    };
    TheoremCheck {
        theorem: TheoremId::NoCliqueOrCoclique,
        r,
        profile: *p,
        claimed: Claim::CliqueAndIndependenceAtMost { limit: r },
        computed: Computed::CliqueAndIndependence {
            omega: omega.size,
            alpha: alpha.size,
        },
        status,
        witnesses,
        solver_stats: SolverStats::of(&[&omega, &alpha]),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamseyWitness {
    /// `omega < s` and `alpha < t`.
    pub holds: bool,
    pub omega: CliqueResult,
    pub alpha: CliqueResult,
    /// Verified clique of size `>= s` or independent set of size `>= t`.
    pub violation: Option<(WitnessMode, VertexSet)>,
}

/// Whether `g` witnesses `R(s, t) > g.n()`.
pub fn ramsey_witness(g: &Graph, s: usize, t: usize, opts: SolverOptions) -> RamseyWitness {
    let omega = max_clique(g, opts);
    let alpha = max_independent_set(g, opts);
    let violation = if omega.size >= s {
        Some((WitnessMode::Clique, omega.witness.clone()))
    } else if alpha.size >= t {
        Some((WitnessMode::Independent, alpha.witness.clone()))
    } else {
        None
    };
    RamseyWitness {
        holds: violation.is_none(),
        omega,
        alpha,
        violation,
    }
}

/// Literature values of small diagonal Ramsey numbers. Informational only;
/// never consulted by any verdict.
pub const KNOWN_DIAGONAL_RAMSEY: &[(usize, &str)] = &[(3, "6"), (4, "18"), (5, "43..=46")];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub t: usize,
    pub n: usize,
    pub omega: usize,
    pub alpha: usize,
    pub witness_ok: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub implied: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub contradiction: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reference: Option<String>,
}

impl BoundReport {
    pub fn from_numbers(t: usize, n: usize, omega: usize, alpha: usize) -> Self {
        let witness_ok = omega < t && alpha < t;
        let implied = witness_ok.then(|| format!("R({t}) > {n}"));
        let contradiction = (witness_ok && t == 3 && n >= 6).then(|| {
            if confirm_r3() {
                format!(
                    "claims R(3) > {n}, but exhaustive enumeration shows every 2-colouring of K_6 has a monochromatic triangle (R(3) = 6)"
                )
            } else {
                "claims R(3) > 6 and the K_6 enumeration failed to establish R(3) = 6".into()
            }
        });
        let reference = KNOWN_DIAGONAL_RAMSEY
            .iter()
            .find(|(k, _)| *k == t)
            .map(|(_, v)| format!("literature value R({t}) = {v} (informational)"));
        BoundReport {
            t,
            n,
            omega,
            alpha,
            witness_ok,
            implied,
            contradiction,
            reference,
        }
    }
}

/// Bound implied by `SF(t)` as a Ramsey witness for `R(t, t)`.
pub fn implied_bound(t: usize, p: &Profile, opts: SolverOptions) -> Result<BoundReport> {
    let sf = build_sf(t, p)?;
    Ok(implied_bound_for(&sf.graph, t, opts))
}

/// [`implied_bound`] on an arbitrary candidate graph.
pub fn implied_bound_for(g: &Graph, t: usize, opts: SolverOptions) -> BoundReport {
    let w = ramsey_witness(g, t, t, opts);
    BoundReport::from_numbers(t, g.n(), w.omega.size, w.alpha.size)
}

/// Edge index of `(i, j)`, `i < j`, in the lexicographic edge list of `K_n`.
fn edge_index(n: usize, i: usize, j: usize) -> usize {
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// Whether the 2-colouring of `K_n` given by `red` (bit per edge index) has
/// a triangle whose three edges share a colour.
pub fn has_mono_triangle(n: usize, red: u64) -> bool {
    for a in 0..n {
        for b in (a + 1)..n {
            let ab = (red >> edge_index(n, a, b)) & 1;
            for c in (b + 1)..n {
                let ac = (red >> edge_index(n, a, c)) & 1;
                let bc = (red >> edge_index(n, b, c)) & 1;
                if ab == ac && ac == bc {
                    return true;
                }
            }
        }
    }
    false
}

/// Exhaustive check that every 2-colouring of `K_n` has a monochromatic
/// triangle. Limited to `n <= 8` (28 edges).
pub fn every_colouring_has_mono_triangle(n: usize) -> bool {
    assert!(n <= 8, "exhaustive colouring limited to n <= 8");
    let edges = n * n.saturating_sub(1) / 2;
    (0..(1u64 << edges)).all(|red| has_mono_triangle(n, red))
}

/// Establishes `R(3) = 6` from scratch: all `2^15` colourings of `K_6` force a
/// monochromatic triangle, and colouring `K_5` red along a 5-cycle avoids one.
pub fn confirm_r3() -> bool {
    let c5_red = (0..5).fold(0u64, |m, i| {
        let (a, b) = (i.min((i + 1) % 5), i.max((i + 1) % 5));
        m | (1 << edge_index(5, a, b))
    });
    every_colouring_has_mono_triangle(6) && !has_mono_triangle(5, c5_red)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::BaseCase;
    use crate::graph::ProductKind;

    const DET: SolverOptions = SolverOptions::DETERMINISTIC;

    #[test]
    fn theorem_1_1_base_case_confirmed() {
        let c = check_theorem_1_1(3, &Profile::DEFAULT, DET).unwrap();
        assert_eq!(c.claimed, Claim::MonoCliqueSize { size: 2 });
        assert_eq!(c.computed, Computed::MonoClique { size: 2 });
        assert_eq!(c.status, Status::Confirmed);
        assert_eq!(c.witnesses[0].names, vec!["w", "x"]);
        assert_eq!(c.witnesses[0].label, Some(Label::One));
    }

    #[test]
    fn theorem_1_1_status_tracks_solver() {
        let c = check_theorem_1_1(4, &Profile::DEFAULT, DET).unwrap();
        let Computed::MonoClique { size } = c.computed else {
            panic!()
        };
        let f4 = build_f(4, &Profile::DEFAULT).unwrap();
        assert_eq!(size, max_mono_clique(&f4, DET).result.size);
        assert_eq!(c.status == Status::Confirmed, size == 2);
        assert!(c.witnesses[0].reverify(&f4.graph, Some(&f4.labels)).unwrap());
    }

    #[test]
    fn tensor_profile_still_checks_both_sides() {
        let p = Profile {
            prod: ProductKind::Tensor,
            ..Profile::DEFAULT.with_base_case(BaseCase::General)
        };
        let f = build_f(4, &p).unwrap();
        let half = f.n() / 2;
        let g_side = LabeledGraph {
            graph: f.graph.induced(&(0..half).collect()).unwrap(),
            labels: f.labels[..half].to_vec(),
            provenance: f.provenance[..half].to_vec(),
            correspondence: vec![],
        };
        assert_eq!(max_mono_clique(&g_side, DET).result.size, 1);
        // H side is complete, so each label class of it is a clique of size 6
        let c = check_theorem_1_1(4, &p, DET).unwrap();
        assert_eq!(c.computed, Computed::MonoClique { size: 6 });
        assert_eq!(c.status, Status::Refuted);
    }

    #[test]
    fn theorem_1_2_base_case_refuted() {
        let c = check_theorem_1_2(2, &Profile::DEFAULT, DET).unwrap();
        assert_eq!(c.computed, Computed::CliqueAndIndependence { omega: 2, alpha: 3 });
        assert_eq!(c.status, Status::Refuted);
        let w = c.violating_witness().unwrap();
        assert_eq!(w.kind, WitnessKind::Independent);
        assert_eq!(w.vertices.len(), 3);
        assert!(w.reverify(&Graph::path(6), None).unwrap());
    }

    #[test]
    fn theorem_1_2_rejects_small_r() {
        assert!(check_theorem_1_2(1, &Profile::DEFAULT, DET).is_err());
    }

    #[test]
    fn clique_free_check_catches_planted_clique() {
        for r in 2..6 {
            let k = Graph::complete(r + 1);
            let c = clique_free_check(&k, None, r, &Profile::DEFAULT, DET);
            assert_eq!(c.status, Status::Refuted);
            let w = c.violating_witness().unwrap();
            assert_eq!((w.kind, w.vertices.len()), (WitnessKind::Clique, r + 1));
            assert!(w.reverify(&k, None).unwrap());
        }
    }

    #[test]
    fn ramsey_witness_examples() {
        let c5 = Graph::cycle(5).unwrap();
        let w = ramsey_witness(&c5, 3, 3, DET);
        assert!(w.holds && w.violation.is_none());

        let k6 = ramsey_witness(&Graph::complete(6), 3, 3, DET);
        let (mode, s) = k6.violation.unwrap();
        assert!(!k6.holds && mode == WitnessMode::Clique && s.len() >= 3);

        let e6 = ramsey_witness(&Graph::empty(6), 3, 3, DET);
        let (mode, s) = e6.violation.unwrap();
        assert!(mode == WitnessMode::Independent && s.len() >= 3);
    }

    #[test]
    fn implied_bound_examples() {
        let b = implied_bound(3, &Profile::DEFAULT, DET).unwrap();
        assert!(!b.witness_ok && b.implied.is_none() && b.contradiction.is_none());
        assert_eq!(b.alpha, 3);

        let c5 = implied_bound_for(&Graph::cycle(5).unwrap(), 3, DET);
        assert_eq!(c5.implied.as_deref(), Some("R(3) > 5"));
        assert!(c5.contradiction.is_none());
    }

    #[test]
    fn r3_above_six_is_flagged() {
        let bogus = BoundReport::from_numbers(3, 6, 2, 2);
        assert!(bogus.witness_ok);
        assert!(bogus.contradiction.unwrap().contains("R(3) = 6"));
    }

    #[test]
    fn colouring_enumeration() {
        assert!(confirm_r3());
        assert!(!every_colouring_has_mono_triangle(4));
        assert!(!every_colouring_has_mono_triangle(5));
        assert_eq!(edge_index(6, 4, 5), 14);
    }
}
