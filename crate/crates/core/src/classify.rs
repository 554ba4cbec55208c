//! Predicates on connected graphs: maximal edge-connectivity, super-λ, the
//! five classical sufficient conditions for super-λ, and the fixed-point
//! characterization `X(G) ≅ G ⇔ super-λ ∧ regular` (for `n ≥ 3`).

use serde::Serialize;

use crate::catalog;
use crate::error::{Error, Result};
use crate::formats;
use crate::graph::{Family, Graph};
use crate::iso;
use crate::mincut::{self, count_bound_check, MincutFamily};
use crate::operator::intersection_graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub n: usize,
    pub lambda: usize,
    pub delta: usize,
    pub max_degree: usize,
    pub maximally_edge_connected: bool,
    pub super_lambda: bool,
    pub regular: bool,
    pub fixed_point_predicted: bool,
    pub sufficient_conditions: [bool; 5],
    pub trivial_cut_count: usize,
    pub nontrivial_cut_count: usize,
}

/// Classifies `g` given its enumerated mincut family. Super-λ is read off
/// the triviality flags directly, never from the sufficient conditions.
pub fn classify(g: &Graph, family: &MincutFamily) -> Result<ClassificationReport> {
    if g.order() < 2 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let profile = g.degree_profile()?;
    let trivial = family.trivial_count();
    let super_lambda = trivial == family.len();
    Ok(ClassificationReport {
        n: g.order(),
        lambda: family.lambda,
        delta: profile.min,
        max_degree: profile.max,
        maximally_edge_connected: family.lambda == profile.min,
        super_lambda,
        regular: profile.regular,
        fixed_point_predicted: super_lambda && profile.regular && g.order() >= 3,
        sufficient_conditions: sufficient_conditions(g)?,
        trivial_cut_count: trivial,
        nontrivial_cut_count: family.len() - trivial,
    })
}

fn non_adjacent_degree_sums(g: &Graph) -> impl Iterator<Item = usize> + '_ {
    let n = g.order();
    (0..n).flat_map(move |u| {
        (u + 1..n)
            .filter(move |&v| !g.has_edge(u, v))
            .map(move |v| g.degree(u) + g.degree(v))
    })
}

/// Whether some clique on `size` vertices consists only of vertices of
/// degree exactly `degree`. Exhaustive over candidate subsets.
fn has_clique_of_degree(g: &Graph, size: usize, degree: usize) -> bool {
    let candidates: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) == degree).collect();
    fn extend(g: &Graph, cand: &[usize], chosen: &mut Vec<usize>, size: usize) -> bool {
        if chosen.len() == size {
            return true;
        }
        for (i, &v) in cand.iter().enumerate() {
            if chosen.iter().all(|&u| g.has_edge(u, v)) {
                chosen.push(v);
                if extend(g, &cand[i + 1..], chosen, size) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    extend(g, &candidates, &mut Vec::new(), size)
}

/// Evaluates, literally, the five sufficient conditions for super-λ:
///
/// 1. `deg(u) + deg(v) ≥ n` for all non-adjacent `u, v`, and `G` is not
///    `K_{n/2} □ K_2`;
/// 2. `deg(u) + deg(v) ≥ n + 1` for all non-adjacent `u, v`;
/// 3. `δ ≥ ⌊n/2⌋ + 1`;
/// 4. diameter 2 and no clique on `δ` vertices all of degree `δ`;
/// 5. diameter 2 and `n > 2δ + Δ − 1`.
pub fn sufficient_conditions(g: &Graph) -> Result<[bool; 5]> {
    let n = g.order();
    if n < 2 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let profile = g.degree_profile()?;
    let (delta, max_degree) = (profile.min, profile.max);
    let min_sum = non_adjacent_degree_sums(g).min();
    let is_prism_exception = n.is_multiple_of(2) && {
        let half = Graph::generate(&Family::Complete(n / 2))?;
        let k2 = Graph::generate(&Family::Complete(2))?;
        iso::are_isomorphic_with_budget(g, &half.cartesian_product(&k2), usize::MAX)?
    };
    let diameter_two = g.diameter() == Some(2);
    Ok([
        min_sum.is_none_or(|s| s >= n) && !is_prism_exception,
        min_sum.is_none_or(|s| s > n),
        delta > n / 2,
        diameter_two && !has_clique_of_degree(g, delta, delta),
        diameter_two && n + 1 > 2 * delta + max_degree,
    ])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    pub condition: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SoundnessReport {
    pub n_max: usize,
    pub graphs_checked: usize,
    /// How often each condition held.
    pub condition_hits: [usize; 5],
    pub super_lambda_graphs: usize,
    pub counterexamples: Vec<Counterexample>,
}

/// For every connected graph on `2..=n_max` vertices (one per isomorphism
/// class; all quantities involved are isomorphism invariants), checks that
/// each satisfied sufficient condition comes with definition-level super-λ.
pub fn soundness_sweep(n_max: usize) -> Result<SoundnessReport> {
    if n_max > 7 {
        return Err(Error::InvalidSpec(format!(
            "soundness sweep capped at n = 7, got {n_max}"
        )));
    }
    let mut report = SoundnessReport {
        n_max,
        graphs_checked: 0,
        condition_hits: [0; 5],
        super_lambda_graphs: 0,
        counterexamples: Vec::new(),
    };
    for n in 2..=n_max {
        for (_, g) in catalog::connected_classes(n) {
            let family = mincut::enumerate_mincuts(&g)?;
            let r = classify(&g, &family)?;
            report.graphs_checked += 1;
            report.super_lambda_graphs += r.super_lambda as usize;
            for (i, &holds) in r.sufficient_conditions.iter().enumerate() {
                if holds {
                    report.condition_hits[i] += 1;
                    if !r.super_lambda {
                        report.counterexamples.push(Counterexample {
                            graph6: formats::to_graph6(&g),
                            condition: i + 1,
                        });
                    }
                }
            }
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceException {
    pub graph6: String,
    pub fixed: bool,
    pub super_lambda: bool,
    pub regular: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub n_min: usize,
    pub n_max: usize,
    pub graphs_checked: usize,
    pub fixed_points: usize,
    pub predicted: usize,
    pub exceptions: Vec<EquivalenceException>,
    /// Graphs whose mincut count broke one of the count bounds.
    pub bound_violations: Vec<String>,
}

/// Checks `X(G) ≅ G ⇔ (super-λ ∧ regular)` over every connected graph on
/// `n_min..=n_max` vertices, one per isomorphism class. K_2 (super-λ and
/// regular, but `X(K_2) = K_1`) is outside the statement, so `n_min` must
/// be at least 3.
pub fn fixed_point_equivalence_sweep(n_min: usize, n_max: usize) -> Result<EquivalenceReport> {
    if n_min < 3 || n_max > 7 || n_min > n_max {
        return Err(Error::InvalidSpec(format!(
            "equivalence sweep needs 3 <= n_min <= n_max <= 7, got {n_min}..={n_max}"
        )));
    }
    let mut report = EquivalenceReport {
        n_min,
        n_max,
        graphs_checked: 0,
        fixed_points: 0,
        predicted: 0,
        exceptions: Vec::new(),
        bound_violations: Vec::new(),
    };
    for n in n_min..=n_max {
        for (_, g) in catalog::connected_classes(n) {
            let family = mincut::enumerate_mincuts(&g)?;
            let r = classify(&g, &family)?;
            let x = intersection_graph(&family);
            let fixed = iso::are_isomorphic(&g, &x)?;
            report.graphs_checked += 1;
            report.fixed_points += fixed as usize;
            report.predicted += r.fixed_point_predicted as usize;
            if fixed != (r.super_lambda && r.regular) {
                report.exceptions.push(EquivalenceException {
                    graph6: formats::to_graph6(&g),
                    fixed,
                    super_lambda: r.super_lambda,
                    regular: r.regular,
                });
            }
            if !count_bound_check(&family, n).all_satisfied() {
                report.bound_violations.push(formats::to_graph6(&g));
            }
        }
    }
    Ok(report)
}
