//! JSON verification reports.
//!
//! A report embeds the checked graph in graph6 so it can be audited without
//! this crate: loading a report re-decodes the graph and re-verifies every
//! witness it carries.

use std::fmt;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::construct::{build_f, build_sf, LabeledGraph, Profile};
use crate::error::{Error, Result};
use crate::io::graph6::{decode_graph6, encode_graph6};
use crate::verify::{BoundReport, Claim, Computed, SolverStats, Status, TheoremCheck, TheoremId};

pub const SCHEMA_VERSION: &str = "1.0";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TargetKind {
    F,
    SF,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Target {
    pub kind: TargetKind,
    pub param: usize,
}

impl Target {
    pub fn f(r: usize) -> Self {
        Target {
            kind: TargetKind::F,
            param: r,
        }
    }

    pub fn sf(t: usize) -> Self {
        Target {
            kind: TargetKind::SF,
            param: t,
        }
    }

    /// The graph a theorem check is evaluated on.
    pub fn of_check(check: &TheoremCheck) -> Self {
        match check.theorem {
            TheoremId::MonoCliqueSize => Target::f(check.r),
            TheoremId::NoCliqueOrCoclique => Target::sf(check.r + 1),
        }
    }

    pub fn build(&self, p: &Profile) -> Result<LabeledGraph> {
        match self.kind {
            TargetKind::F => build_f(self.param, p),
            TargetKind::SF => build_sf(self.param, p),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            TargetKind::F => "F",
            TargetKind::SF => "SF",
        };
        write!(f, "{k}({})", self.param)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelCounts {
    pub one: usize,
    pub two: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphStats {
    pub n: usize,
    pub m: usize,
    pub label_counts: LabelCounts,
}

impl GraphStats {
    pub fn of(lg: &LabeledGraph) -> Self {
        let (one, two) = lg.label_counts();
        GraphStats {
            n: lg.n(),
            m: lg.graph.edge_count(),
            label_counts: LabelCounts { one, two },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timestamps {
    pub started: String,
    pub finished: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: String,
    pub profile: Profile,
    pub target: Target,
    pub graph_stats: GraphStats,
    pub graph6: String,
    pub checks: Vec<TheoremCheck>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<BoundReport>,
    pub solver_stats: SolverStats,
    pub timestamps: Timestamps,
}

pub fn now_rfc3339() -> String {
    chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Millis, true)
}

impl Report {
    pub fn new(
        target: Target,
        profile: Profile,
        lg: &LabeledGraph,
        checks: Vec<TheoremCheck>,
        bound: Option<BoundReport>,
        started: String,
    ) -> Self {
        let mut solver_stats = SolverStats::default();
        for c in &checks {
            solver_stats.add(&c.solver_stats);
        }
        Report {
            schema_version: SCHEMA_VERSION.into(),
            profile,
            target,
            graph_stats: GraphStats::of(lg),
            graph6: encode_graph6(&lg.graph),
            checks,
            bound,
            solver_stats,
            timestamps: Timestamps {
                started,
                finished: now_rfc3339(),
            },
        }
    }

    pub fn any_refuted(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Refuted)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Serialized form with timing fields blanked, for byte comparison.
    pub fn canonical_json(&self) -> String {
        let mut r = self.clone();
        r.timestamps = Timestamps {
            started: String::new(),
            finished: String::new(),
        };
        r.solver_stats.elapsed_us = 0;
        for c in &mut r.checks {
            c.solver_stats.elapsed_us = 0;
        }
        r.to_json()
    }

    /// Parses a report and rejects it unless it passes [`Report::verify`].
    pub fn from_json(text: &str) -> Result<Report> {
        let r: Report = serde_json::from_str(text)?;
        r.verify()?;
        Ok(r)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Report> {
        Report::from_json(&fs::read_to_string(path)?)
    }

    /// Writes through a sibling temporary file and a rename, so readers never
    /// observe a partial report.
    pub fn write_atomic(&self, path: impl AsRef<Path>) -> Result<()> {
        write_atomic(path.as_ref(), &self.to_json())
    }

    /// Consistency of the report with its own target: the embedded graph is
    /// the one the profile builds, and every verdict and witness re-checks.
    pub fn verify(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Report(msg));
        if self.schema_version != SCHEMA_VERSION {
            return fail(format!("unsupported schema version {}", self.schema_version));
        }
        let graph = decode_graph6(&self.graph6)?;
        let lg = self.target.build(&self.profile)?;
        if lg.graph != graph {
            return fail(format!("embedded graph differs from {}", self.target));
        }
        if GraphStats::of(&lg) != self.graph_stats {
            return fail("graph_stats do not match the graph".into());
        }
        for c in &self.checks {
            if Target::of_check(c) != self.target || c.profile != self.profile {
                return fail(format!("{} r={} does not belong to {}", c.theorem, c.r, self.target));
            }
            let status = match (c.claimed, c.computed) {
                (Claim::MonoCliqueSize { size }, Computed::MonoClique { size: got }) => {
                    size == got
                }
                (
                    Claim::CliqueAndIndependenceAtMost { limit },
                    Computed::CliqueAndIndependence { omega, alpha },
                ) => omega <= limit && alpha <= limit,
                _ => return fail(format!("{} claim and computed values disagree in kind", c.theorem)),
            };
            let status = if status { Status::Confirmed } else { Status::Refuted };
            if status != c.status {
                return fail(format!("{} r={} status does not follow from its values", c.theorem, c.r));
            }
            for w in &c.witnesses {
                if !w.reverify(&graph, Some(&lg.labels))? {
                    return fail(format!("{} r={} carries an invalid {:?} witness", c.theorem, c.r, w.kind));
                }
            }
            let Some(first) = c.witnesses.first() else {
                return fail(format!("{} r={} has no witness", c.theorem, c.r));
            };
            let optimum = match c.computed {
                Computed::MonoClique { size } => size,
                Computed::CliqueAndIndependence { omega, alpha } => {
                    if first.kind == crate::verify::WitnessKind::Independent {
                        alpha
                    } else {
                        omega
                    }
                }
            };
            if first.vertices.len() != optimum {
                return fail(format!("{} r={} witness size differs from its computed value", c.theorem, c.r));
            }
        }
        Ok(())
    }
}

pub(crate) fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    fs::write(&tmp, contents)?;
    fs::rename(&tmp, path)?;
    Ok(())
}
