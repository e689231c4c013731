//! Replayable no-IT certificates.
//!
//! A certificate starts from a small base graph and applies certified
//! steps. Base graphs and every inline join payload are checked to have
//! no IT by exhaustive search; every other step only needs its structural
//! preconditions, which replay checks against the current graph. A
//! successful replay therefore proves that the final graph has no IT.
//!
//! Step soundness: joins and edge deletions follow from the join and
//! edge-delete lemmas. Adding edges or deleting vertices cannot create an
//! IT (an IT of the result is an IT of the input), and an IT of a blow-up
//! maps to an IT of the original by sending every copy to its source.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::{Deserialize, Deserializer, Serialize};

use crate::construct::{self, Distribution, EdgeDeletePlan};
use crate::error::{BudgetExceeded, CertError, ConstructError};
use crate::graph::{GraphJson, PartitionedGraph, Vertex};
use crate::transversal::{find_it, ItOutcome, SearchBudget, Transversal};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub version: u32,
    pub steps: Vec<CertStep>,
}

/// Which side of a join gives up its block. `Added` dissolves block `s`
/// of the payload into the current graph; `Host` dissolves block `s` of
/// the current graph into the payload.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Dissolve {
    #[default]
    Added,
    Host,
}

impl Dissolve {
    fn is_added(&self) -> bool {
        *self == Dissolve::Added
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum CertStep {
    Base {
        #[serde(deserialize_with = "buffered_graph")]
        graph: GraphJson,
    },
    Join {
        #[serde(deserialize_with = "buffered_graph")]
        added: GraphJson,
        s: usize,
        #[serde(deserialize_with = "numeric_keys")]
        dist: Distribution,
        #[serde(default, skip_serializing_if = "Dissolve::is_added")]
        dissolve: Dissolve,
    },
    EdgeDelete {
        u: Vertex,
        v: Vertex,
        k: usize,
        #[serde(rename = "F")]
        f: Vec<[Vertex; 2]>,
    },
    AddEdges {
        extra: Vec<[Vertex; 2]>,
    },
    DeleteVertices {
        doomed: Vec<Vertex>,
    },
    BlowUp {
        m: usize,
    },
}

// Internally tagged enums buffer their content, which turns integer map
// keys into strings; parse them back explicitly.
fn buffered_graph<'de, D: Deserializer<'de>>(de: D) -> Result<GraphJson, D::Error> {
    let raw = serde_json::Value::deserialize(de)?;
    serde_json::from_value(raw).map_err(serde::de::Error::custom)
}

fn numeric_keys<'de, D: Deserializer<'de>>(de: D) -> Result<Distribution, D::Error> {
    let raw = BTreeMap::<String, usize>::deserialize(de)?;
    raw.into_iter()
        .map(|(k, v)| {
            k.parse::<Vertex>().map(|k| (k, v)).map_err(|_| serde::de::Error::custom(format!("bad vertex key {k:?}")))
        })
        .collect()
}

impl CertStep {
    pub fn kind(&self) -> &'static str {
        match self {
            CertStep::Base { .. } => "base",
            CertStep::Join { .. } => "join",
            CertStep::EdgeDelete { .. } => "edge_delete",
            CertStep::AddEdges { .. } => "add_edges",
            CertStep::DeleteVertices { .. } => "delete_vertices",
            CertStep::BlowUp { .. } => "blow_up",
        }
    }
}

impl Certificate {
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json_str(text: &str) -> Result<Self, CertError> {
        serde_json::from_str(text).map_err(|e| CertError::Malformed(e.to_string()))
    }

    pub fn base_count(&self) -> usize {
        self.steps.iter().filter(|s| matches!(s, CertStep::Base { .. } | CertStep::Join { .. })).count()
    }

    pub fn join_count(&self) -> usize {
        self.steps.iter().filter(|s| matches!(s, CertStep::Join { .. })).count()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StepReport {
    pub index: usize,
    pub kind: &'static str,
    pub n: usize,
    pub r: usize,
    /// Search nodes spent on this step's base check; `None` when the step
    /// has no base payload or the result was cached.
    pub base_nodes: Option<u64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub steps: Vec<StepReport>,
    pub base_checks: usize,
    pub cached_checks: usize,
}

fn payload(json: &GraphJson, step: usize) -> Result<PartitionedGraph, CertError> {
    PartitionedGraph::try_from(json.clone()).map_err(|e| CertError::Malformed(format!("step {step}: {e}")))
}

/// Checks that a payload has no IT, caching results by unlabeled shape.
struct BaseChecker<'a> {
    budget: &'a SearchBudget,
    seen: HashSet<String>,
    report: VerifyReport,
}

impl BaseChecker<'_> {
    fn check(&mut self, g: &PartitionedGraph, step: usize) -> Result<Option<u64>, CertError> {
        let key = {
            let mut j = g.to_json();
            j.labels.clear();
            serde_json::to_string(&j).expect("graph serializes")
        };
        if self.seen.contains(&key) {
            self.report.cached_checks += 1;
            return Ok(None);
        }
        match find_it(g, self.budget) {
            ItOutcome::Found(_) => Err(CertError::BaseHasIT { step }),
            ItOutcome::BudgetExceeded { nodes } => Err(CertError::BaseBudgetExceeded { step, nodes }),
            ItOutcome::NoneExists { nodes } => {
                self.seen.insert(key);
                self.report.base_checks += 1;
                Ok(Some(nodes))
            }
        }
    }
}

fn precondition(step: usize) -> impl Fn(ConstructError) -> CertError {
    move |e| CertError::StepPreconditionFailed { step, reason: e.to_string() }
}

/// Replays `cert`, checking every base payload exhaustively under
/// `base_budget` and every step's preconditions. On success the returned
/// graph has no IT.
pub fn verify_certificate(
    cert: &Certificate,
    base_budget: &SearchBudget,
) -> Result<(PartitionedGraph, VerifyReport), CertError> {
    if cert.version != 1 {
        return Err(CertError::Malformed(format!("unsupported version {}", cert.version)));
    }
    let Some(CertStep::Base { graph }) = cert.steps.first() else {
        return Err(CertError::Malformed("first step must be a base".into()));
    };
    let mut checker = BaseChecker { budget: base_budget, seen: HashSet::new(), report: VerifyReport::default() };
    let mut state = payload(graph, 0)?;
    let nodes = checker.check(&state, 0)?;
    checker.report.steps.push(StepReport { index: 0, kind: "base", n: state.n(), r: state.r(), base_nodes: nodes });

    for (index, step) in cert.steps.iter().enumerate().skip(1) {
        let fail = precondition(index);
        let mut base_nodes = None;
        state = match step {
            CertStep::Base { .. } => {
                return Err(CertError::Malformed(format!("step {index}: base after the first step")));
            }
            CertStep::Join { added, s, dist, dissolve } => {
                let added = payload(added, index)?;
                base_nodes = checker.check(&added, index)?;
                match dissolve {
                    Dissolve::Added => construct::join(&state, &added, *s, dist),
                    Dissolve::Host => construct::join_dissolving_host(&state, *s, &added, dist),
                }
                .map_err(fail)?
            }
            CertStep::EdgeDelete { u, v, k, f } => {
                let plan = EdgeDeletePlan { u: *u, v: *v, k: *k, f: f.iter().map(|&[a, b]| (a, b)).collect() };
                construct::edge_delete(&state, &plan).map_err(fail)?
            }
            CertStep::AddEdges { extra } => {
                let extra: Vec<_> = extra.iter().map(|&[a, b]| (a, b)).collect();
                construct::add_edges(&state, &extra).map_err(fail)?
            }
            CertStep::DeleteVertices { doomed } => {
                let doomed: BTreeSet<_> = doomed.iter().copied().collect();
                construct::delete_vertices(&state, &doomed).map_err(fail)?.0
            }
            CertStep::BlowUp { m } => construct::blow_up(&state, *m).map_err(fail)?,
        };
        checker.report.steps.push(StepReport { index, kind: step.kind(), n: state.n(), r: state.r(), base_nodes });
    }
    Ok((state, checker.report))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CrossValidation {
    /// Exhaustive search confirms the replayed graph has no IT.
    Agree { nodes: u64 },
    /// The replay passed but search found an IT: the step checker is wrong.
    Counterexample(Transversal),
}

/// Verifies `cert` and then runs an independent exhaustive search on the
/// replayed graph.
pub fn cross_validate(
    cert: &Certificate,
    budget: &SearchBudget,
) -> Result<(PartitionedGraph, CrossValidation), CertError> {
    let (g, _) = verify_certificate(cert, budget)?;
    let outcome = match find_it(&g, budget) {
        ItOutcome::NoneExists { nodes } => CrossValidation::Agree { nodes },
        ItOutcome::Found(t) => CrossValidation::Counterexample(t),
        ItOutcome::BudgetExceeded { nodes } => return Err(BudgetExceeded { nodes }.into()),
    };
    Ok((g, outcome))
}
