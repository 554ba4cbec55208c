//! Graph ensembles and orbit surveys.
//!
//! Random ensembles draw from `ChaCha8Rng` seeded with `seed_from_u64`;
//! reports record the generator name and the seed so runs can be
//! reproduced. Outcomes are memoized by canonical code of the input,
//! which is sound because the orbit of `G` depends only on its
//! isomorphism class.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::catalog;
use crate::error::{Error, Result};
use crate::formats;
use crate::graph::Graph;
use crate::iso::{self, CanonicalCode};
use crate::mincut;
use crate::operator::{self, IterationConfig, Outcome};
use crate::structure::trivial_vertices;

pub const GENERATOR: &str = "ChaCha8Rng/seed_from_u64";

/// Largest order accepted by the exhaustive `all_connected` model.
pub const ALL_CONNECTED_MAX: usize = 7;

/// Pairing-model attempts per regular sample before giving up.
const PAIRING_ATTEMPTS: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "model", rename_all = "snake_case")]
pub enum Model {
    Gnp { n: usize, p: f64 },
    RandomRegular { n: usize, r: usize },
    AllConnected { n: usize, dedup: bool },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnsembleSpec {
    #[serde(flatten)]
    pub model: Model,
    /// Number of draws; ignored by `all_connected`.
    pub count: usize,
    pub seed: u64,
}

impl EnsembleSpec {
    pub fn validate(&self) -> Result<()> {
        match self.model {
            Model::Gnp { p, .. } if !(0.0..=1.0).contains(&p) => Err(Error::InvalidSpec(format!(
                "edge probability {p} outside [0, 1]"
            ))),
            Model::RandomRegular { n, r } if n * r % 2 == 1 => {
                Err(Error::InvalidSpec(format!("n*r = {} is odd", n * r)))
            }
            Model::RandomRegular { n, r } if r >= n.max(1) => Err(Error::InvalidSpec(format!(
                "degree {r} too large for {n} vertices"
            ))),
            Model::AllConnected { n, .. } if n > ALL_CONNECTED_MAX => Err(Error::InvalidSpec(
                format!("all_connected is capped at n = {ALL_CONNECTED_MAX}, got {n}"),
            )),
            _ => Ok(()),
        }
    }
}

/// Graphs drawn from an ensemble. Random models discard disconnected
/// draws and count them.
#[derive(Debug, Clone)]
pub struct Ensemble {
    pub graphs: Vec<Graph>,
    pub discarded: usize,
}

pub fn generate_ensemble(spec: &EnsembleSpec) -> Result<Ensemble> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut graphs = Vec::new();
    let mut discarded = 0;
    match spec.model {
        Model::AllConnected { n, dedup: false } => {
            graphs.extend(catalog::labeled_connected(n));
        }
        Model::AllConnected { n, dedup: true } => {
            if n >= 1 {
                graphs.extend(catalog::connected_classes(n).into_iter().map(|(_, g)| g));
            }
        }
        Model::Gnp { n, p } => {
            for _ in 0..spec.count {
                let g = gnp(&mut rng, n, p);
                if g.is_connected() {
                    graphs.push(g);
                } else {
                    discarded += 1;
                }
            }
        }
        Model::RandomRegular { n, r } => {
            for _ in 0..spec.count {
                let g = random_regular(&mut rng, n, r)?;
                if g.is_connected() {
                    graphs.push(g);
                } else {
                    discarded += 1;
                }
            }
        }
    }
    Ok(Ensemble { graphs, discarded })
}

/// One G(n, p) draw: independent coin flips over pairs in lexicographic
/// order.
pub fn gnp<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for a in 0..n {
        for b in a + 1..n {
            if rng.random_bool(p) {
                g.add_edge_unchecked(a, b);
            }
        }
    }
    g
}

/// Uniform simple `r`-regular graph by the pairing model: shuffle the
/// `n·r` points, pair them consecutively, and retry on loops or repeated
/// edges.
pub fn random_regular<R: Rng>(rng: &mut R, n: usize, r: usize) -> Result<Graph> {
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, r)).collect();
    'attempt: for _ in 0..PAIRING_ATTEMPTS {
        points.shuffle(rng);
        let mut g = Graph::empty(n);
        for pair in points.chunks(2) {
            let (a, b) = (pair[0], pair[1]);
            if a == b || g.has_edge(a, b) {
                continue 'attempt;
            }
            g.add_edge_unchecked(a, b);
        }
        return Ok(g);
    }
    Err(Error::InvalidSpec(format!(
        "pairing model found no simple {r}-regular graph on {n} vertices in {PAIRING_ATTEMPTS} attempts"
    )))
}

/// One observed terminal cycle: a fixed point or a periodic circuit,
/// keyed by the canonical code of the first graph of the cycle.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Circuit {
    pub code: CanonicalCode,
    pub period: usize,
    pub order: usize,
    pub count: usize,
    /// graph6 of the first input that reached this cycle.
    pub exemplar: String,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct OutcomeTotals {
    pub fixed_point: usize,
    pub periodic: usize,
    pub null: usize,
    pub unresolved: usize,
}

impl OutcomeTotals {
    pub fn total(&self) -> usize {
        self.fixed_point + self.periodic + self.null + self.unresolved
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceReport {
    pub generator: String,
    pub seed: Option<u64>,
    pub ensemble: Option<EnsembleSpec>,
    pub max_steps: usize,
    pub graphs: usize,
    pub discarded: usize,
    pub totals: OutcomeTotals,
    /// Number of `X` applications until the outcome was detected.
    pub steps_histogram: BTreeMap<usize, usize>,
    pub circuits: Vec<Circuit>,
    pub null_fraction: f64,
    /// How many inputs had a connected `X(G)`, and the mean fraction of
    /// trivial vertices among inputs with connected and with disconnected
    /// `X(G)`. Reported without any claim attached.
    pub x_connected: usize,
    pub mean_trivial_ratio_x_connected: Option<f64>,
    pub mean_trivial_ratio_x_disconnected: Option<f64>,
    /// Reasons for every unresolved orbit, with the input's graph6.
    pub unresolved: Vec<(String, String)>,
}

impl ConvergenceReport {
    pub fn histogram_csv(&self) -> String {
        let mut out = String::from("steps,count\n");
        for (steps, count) in &self.steps_histogram {
            let _ = writeln!(out, "{steps},{count}");
        }
        out
    }

    pub fn summary(&self) -> String {
        let t = &self.totals;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "graphs processed: {} (discarded {})",
            self.graphs, self.discarded
        );
        let _ = writeln!(
            out,
            "fixed point: {}  periodic: {}  null: {}  unresolved: {}",
            t.fixed_point, t.periodic, t.null, t.unresolved
        );
        let _ = writeln!(out, "fraction reaching K_0: {:.4}", self.null_fraction);
        for c in &self.circuits {
            let _ = writeln!(
                out,
                "circuit period {} order {} x{} code {} e.g. {}",
                c.period, c.order, c.count, c.code, c.exemplar
            );
        }
        out
    }
}

#[derive(Debug, Clone)]
struct OrbitSummary {
    outcome: Outcome,
    steps: usize,
    cycle_code: Option<CanonicalCode>,
    cycle_order: usize,
    x_connected: bool,
    trivial_ratio: f64,
}

fn summarize_orbit(g: &Graph, config: &IterationConfig) -> Result<OrbitSummary> {
    let trace = operator::iterate_with(g, config)?;
    let steps = trace.steps.len() - 1;
    let (cycle_code, cycle_order) = match trace.outcome {
        Outcome::FixedPoint { preperiod } | Outcome::Periodic { preperiod, .. } => (
            trace.steps[preperiod].code.clone(),
            trace.steps[preperiod].n,
        ),
        _ => (None, 0),
    };
    let x_connected = trace.graphs.get(1).is_some_and(Graph::is_connected);
    let lambda = mincut::edge_connectivity(g);
    let trivial_ratio = if g.order() == 0 || lambda == 0 {
        0.0
    } else {
        trivial_vertices(g, lambda).len() as f64 / g.order() as f64
    };
    Ok(OrbitSummary {
        outcome: trace.outcome,
        steps,
        cycle_code,
        cycle_order,
        x_connected,
        trivial_ratio,
    })
}

/// Orbit summaries memoized by canonical code of the input.
struct OrbitCache {
    config: IterationConfig,
    seen: BTreeMap<CanonicalCode, OrbitSummary>,
}

impl OrbitCache {
    fn new(config: IterationConfig) -> Self {
        OrbitCache {
            config,
            seen: BTreeMap::new(),
        }
    }

    fn get(&mut self, g: &Graph) -> Result<OrbitSummary> {
        let code = match iso::canonical_form_with_budget(g, self.config.iso_budget) {
            Ok(code) => code,
            // not cacheable; the trace reports the budget problem itself
            Err(_) => return summarize_orbit(g, &self.config),
        };
        if let Some(s) = self.seen.get(&code) {
            return Ok(s.clone());
        }
        let s = summarize_orbit(g, &self.config)?;
        self.seen.insert(code, s.clone());
        Ok(s)
    }
}

/// Iterates `X` on every graph and aggregates the outcomes.
pub fn survey_graphs<'a>(
    graphs: impl IntoIterator<Item = &'a Graph>,
    config: &IterationConfig,
) -> Result<ConvergenceReport> {
    let mut cache = OrbitCache::new(*config);
    let mut totals = OutcomeTotals::default();
    let mut histogram = BTreeMap::new();
    let mut circuits: BTreeMap<CanonicalCode, Circuit> = BTreeMap::new();
    let mut unresolved = Vec::new();
    let (mut x_conn, mut ratio_conn, mut ratio_disc, mut n_disc) = (0usize, 0.0, 0.0, 0usize);
    let mut graphs_seen = 0;
    for g in graphs {
        graphs_seen += 1;
        let s = cache.get(g)?;
        match &s.outcome {
            Outcome::FixedPoint { .. } => totals.fixed_point += 1,
            Outcome::Periodic { .. } => totals.periodic += 1,
            Outcome::Null { .. } => totals.null += 1,
            Outcome::Unresolved { reason, .. } => {
                totals.unresolved += 1;
                unresolved.push((formats::to_graph6(g), reason.clone()));
            }
        }
        if s.outcome.is_resolved() {
            *histogram.entry(s.steps).or_insert(0) += 1;
        }
        if let (Some(code), Some(period)) = (&s.cycle_code, s.outcome.period()) {
            circuits
                .entry(code.clone())
                .or_insert_with(|| Circuit {
                    code: code.clone(),
                    period,
                    order: s.cycle_order,
                    count: 0,
                    exemplar: formats::to_graph6(g),
                })
                .count += 1;
        }
        if s.x_connected {
            x_conn += 1;
            ratio_conn += s.trivial_ratio;
        } else {
            n_disc += 1;
            ratio_disc += s.trivial_ratio;
        }
    }
    let mean = |sum: f64, k: usize| (k > 0).then(|| sum / k as f64);
    Ok(ConvergenceReport {
        generator: GENERATOR.to_string(),
        seed: None,
        ensemble: None,
        max_steps: config.max_steps,
        graphs: graphs_seen,
        discarded: 0,
        null_fraction: if graphs_seen == 0 {
            0.0
        } else {
            totals.null as f64 / graphs_seen as f64
        },
        totals,
        steps_histogram: histogram,
        circuits: circuits.into_values().collect(),
        x_connected: x_conn,
        mean_trivial_ratio_x_connected: mean(ratio_conn, x_conn),
        mean_trivial_ratio_x_disconnected: mean(ratio_disc, n_disc),
        unresolved,
    })
}

pub fn survey(spec: &EnsembleSpec, config: &IterationConfig) -> Result<ConvergenceReport> {
    let ensemble = generate_ensemble(spec)?;
    let mut report = survey_graphs(&ensemble.graphs, config)?;
    report.discarded = ensemble.discarded;
    if !matches!(spec.model, Model::AllConnected { .. }) {
        report.seed = Some(spec.seed);
    }
    report.ensemble = Some(spec.clone());
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PeriodBucket {
    pub count: usize,
    /// graph6 of one representative per distinct cycle, by canonical code.
    pub exemplars: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PeriodicityCensus {
    pub periods: BTreeMap<usize, PeriodBucket>,
    pub null: usize,
    pub unresolved: usize,
}

/// Buckets resolved, non-null orbits by period. Exemplars are graph6
/// strings of the canonical first graph of each distinct cycle.
pub fn periodicity_census_of<'a>(
    graphs: impl IntoIterator<Item = &'a Graph>,
    config: &IterationConfig,
) -> Result<PeriodicityCensus> {
    let mut cache = OrbitCache::new(*config);
    let mut periods: BTreeMap<usize, (usize, BTreeMap<CanonicalCode, ()>)> = BTreeMap::new();
    let (mut null, mut unresolved) = (0, 0);
    for g in graphs {
        let s = cache.get(g)?;
        match (s.outcome.period(), &s.outcome) {
            (Some(p), _) => {
                let bucket = periods.entry(p).or_default();
                bucket.0 += 1;
                if let Some(code) = s.cycle_code {
                    bucket.1.insert(code, ());
                }
            }
            (None, Outcome::Null { .. }) => null += 1,
            _ => unresolved += 1,
        }
    }
    Ok(PeriodicityCensus {
        periods: periods
            .into_iter()
            .map(|(p, (count, codes))| {
                let exemplars = codes
                    .keys()
                    .map(|c| formats::to_graph6(&c.to_graph()))
                    .collect();
                (p, PeriodBucket { count, exemplars })
            })
            .collect(),
        null,
        unresolved,
    })
}

pub fn periodicity_census(
    spec: &EnsembleSpec,
    config: &IterationConfig,
) -> Result<PeriodicityCensus> {
    let ensemble = generate_ensemble(spec)?;
    periodicity_census_of(&ensemble.graphs, config)
}
