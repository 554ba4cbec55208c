//! The mincut-graph operator `X(G)` and its iteration.
//!
//! `X(G)` has one vertex per minimum edge-cut of `G` (in family order) and
//! joins two vertices when their cuts share an edge. Disconnected graphs
//! and graphs on at most one vertex have no mincuts, so they map to K_0.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::{self, CanonicalCode};
use crate::mincut::{self, MincutFamily};

pub const DEFAULT_MAX_STEPS: usize = 20;

/// The intersection graph of an enumerated mincut family.
pub fn intersection_graph(family: &MincutFamily) -> Graph {
    let k = family.len();
    let mut x = Graph::empty(k);
    for i in 0..k {
        for j in i + 1..k {
            if family.cuts[i].shares_edge_with(&family.cuts[j]) {
                x.add_edge_unchecked(i, j);
            }
        }
    }
    x
}

pub fn mincut_graph(g: &Graph) -> Result<Graph> {
    mincut_graph_with_budget(g, mincut::DEFAULT_ENUM_BUDGET)
}

pub fn mincut_graph_with_budget(g: &Graph, budget: usize) -> Result<Graph> {
    let family = mincut::enumerate_mincuts_with_budget(g, budget)?;
    Ok(intersection_graph(&family))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IterationConfig {
    pub max_steps: usize,
    /// Vertex cap for mincut enumeration at every step.
    pub enum_budget: usize,
    /// Vertex cap for canonical labeling at every step.
    pub iso_budget: usize,
}

impl Default for IterationConfig {
    fn default() -> Self {
        IterationConfig {
            max_steps: DEFAULT_MAX_STEPS,
            enum_budget: mincut::DEFAULT_ENUM_BUDGET,
            iso_budget: iso::DEFAULT_BUDGET,
        }
    }
}

impl IterationConfig {
    pub fn with_max_steps(max_steps: usize) -> Self {
        IterationConfig {
            max_steps,
            ..Default::default()
        }
    }
}

/// How an orbit `G, X(G), X²(G), …` resolved.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum Outcome {
    /// `X^{t+1}(G) ≅ X^t(G)` with `t = preperiod`.
    FixedPoint { preperiod: usize },
    /// Cycle of length `period ≥ 2` entered after `preperiod` steps.
    Periodic { period: usize, preperiod: usize },
    /// `X^steps(G)` is the null graph.
    Null { steps: usize },
    /// Stopped without resolving.
    Unresolved { steps: usize, reason: String },
}

impl Outcome {
    pub fn is_resolved(&self) -> bool {
        !matches!(self, Outcome::Unresolved { .. })
    }

    /// Period of the terminal cycle; `None` for Null and Unresolved.
    pub fn period(&self) -> Option<usize> {
        match *self {
            Outcome::FixedPoint { .. } => Some(1),
            Outcome::Periodic { period, .. } => Some(period),
            _ => None,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Outcome::FixedPoint { .. } => "FixedPoint",
            Outcome::Periodic { .. } => "Periodic",
            Outcome::Null { .. } => "Null",
            Outcome::Unresolved { .. } => "Unresolved",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Step {
    pub n: usize,
    pub m: usize,
    /// `None` when the step was not enumerated (the final repeat, or a
    /// graph over budget).
    pub lambda: Option<usize>,
    pub mincuts: Option<usize>,
    pub code: Option<CanonicalCode>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IterationTrace {
    pub steps: Vec<Step>,
    pub outcome: Outcome,
    #[serde(skip)]
    pub graphs: Vec<Graph>,
}

impl IterationTrace {
    /// Canonical codes of the recorded steps, in order.
    pub fn codes(&self) -> Vec<&CanonicalCode> {
        self.steps.iter().filter_map(|s| s.code.as_ref()).collect()
    }
}

pub fn iterate(g: &Graph, max_steps: usize) -> Result<IterationTrace> {
    iterate_with(g, &IterationConfig::with_max_steps(max_steps))
}

/// Applies `X` until the canonical code of some iterate repeats, the null
/// graph appears, or `max_steps` applications have been made. Budget
/// overruns mid-orbit end the trace as `Unresolved`.
pub fn iterate_with(g: &Graph, config: &IterationConfig) -> Result<IterationTrace> {
    if config.max_steps == 0 {
        return Err(Error::InvalidSpec("max_steps must be at least 1".into()));
    }
    let mut steps: Vec<Step> = Vec::new();
    let mut graphs: Vec<Graph> = Vec::new();
    let mut current = g.clone();
    let outcome = loop {
        let i = steps.len();
        let code = match iso::canonical_form_with_budget(&current, config.iso_budget) {
            Ok(code) => code,
            Err(e) => {
                steps.push(Step {
                    n: current.order(),
                    m: current.size(),
                    lambda: None,
                    mincuts: None,
                    code: None,
                });
                graphs.push(current);
                break Outcome::Unresolved {
                    steps: i,
                    reason: e.to_string(),
                };
            }
        };
        if let Some(j) = steps.iter().position(|s| s.code.as_ref() == Some(&code)) {
            let (lambda, mincuts) = (steps[j].lambda, steps[j].mincuts);
            steps.push(Step {
                n: current.order(),
                m: current.size(),
                lambda,
                mincuts,
                code: Some(code),
            });
            graphs.push(current);
            let period = i - j;
            break if period == 1 {
                Outcome::FixedPoint { preperiod: j }
            } else {
                Outcome::Periodic {
                    period,
                    preperiod: j,
                }
            };
        }
        if current.is_null() {
            steps.push(Step {
                n: 0,
                m: 0,
                lambda: Some(0),
                mincuts: Some(0),
                code: Some(code),
            });
            graphs.push(current);
            break Outcome::Null { steps: i };
        }
        let mut step = Step {
            n: current.order(),
            m: current.size(),
            lambda: None,
            mincuts: None,
            code: Some(code),
        };
        if i == config.max_steps {
            steps.push(step);
            graphs.push(current);
            break Outcome::Unresolved {
                steps: i,
                reason: format!("step budget of {} exhausted", config.max_steps),
            };
        }
        match mincut::enumerate_mincuts_with_budget(&current, config.enum_budget) {
            Ok(family) => {
                step.lambda = Some(family.lambda);
                step.mincuts = Some(family.len());
                let next = intersection_graph(&family);
                steps.push(step);
                graphs.push(std::mem::replace(&mut current, next));
            }
            Err(e) => {
                steps.push(step);
                graphs.push(current);
                break Outcome::Unresolved {
                    steps: i,
                    reason: e.to_string(),
                };
            }
        }
    };
    Ok(IterationTrace {
        steps,
        outcome,
        graphs,
    })
}
