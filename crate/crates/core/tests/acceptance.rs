//! The ten acceptance criteria. Runs as a plain binary and prints one
//! PASS/FAIL line per criterion; exits non-zero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::{binomial2, brute_isomorphic, brute_mincut_graph, brute_mincuts, cut_size};
use mincut_core::catalog::{connected_classes, labeled_connected};
use mincut_core::classify::{
    fixed_point_equivalence_sweep, soundness_sweep, sufficient_conditions,
};
use mincut_core::experiments::{survey_graphs, GENERATOR};
use mincut_core::mincut::count_bound_check;
use mincut_core::operator::{intersection_graph, iterate, IterationConfig};
use mincut_core::structure::verify_family;
use mincut_core::{
    are_isomorphic, edge_connectivity, enumerate_mincuts, mincut_graph, Family, Graph, Outcome,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn gen(f: Family) -> Graph {
    Graph::generate(&f).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn prism(n: usize) -> Graph {
    gen(Family::Complete(n)).cartesian_product(&gen(Family::Complete(2)))
}

fn is_super_lambda_brute(g: &Graph) -> bool {
    let n = g.order();
    brute_mincuts(g)
        .1
        .iter()
        .all(|m| m.count_ones() == 1 || m.count_ones() as usize == n - 1)
}

/// Mincut-count bounds evaluated in integers: the universal C(n, 2), the
/// even-λ bound for λ ≥ 4 and the odd-λ bound for λ > 5.
fn bounds_hold(n: usize, lambda: usize, c: usize) -> bool {
    let universal = c <= binomial2(n);
    let even = !(lambda >= 4 && lambda.is_multiple_of(2))
        || c * (lambda + 1) * (lambda + 1) <= 2 * n * n + (lambda - 1) * (lambda + 1) * n;
    let odd = !(lambda > 5 && lambda % 2 == 1) || c * (lambda + 5) <= (lambda + 9) * n;
    universal && even && odd
}

fn c1_corollary_fixed_points() -> Check {
    let mut cases: Vec<(String, Graph)> = (3..=7)
        .map(|n| (format!("K_{n}"), gen(Family::Complete(n))))
        .collect();
    for n in [3, 4] {
        cases.push((format!("K_{n},{n}"), gen(Family::CompleteBipartite(n, n))));
    }
    for n in [4, 5] {
        cases.push((format!("L(K_{n})"), gen(Family::Complete(n)).line_graph()));
    }
    for (name, g) in &cases {
        let x = mincut_graph(g).map_err(|e| format!("{name}: {e}"))?;
        ensure(are_isomorphic(&x, g).unwrap(), || {
            format!("X({name}) not isomorphic to {name}")
        })?;
        ensure(brute_isomorphic(&brute_mincut_graph(g), g), || {
            format!("oracle: X({name}) not isomorphic to {name}")
        })?;
    }
    Ok(format!("{} graphs are fixed points", cases.len()))
}

fn c2_cycle_law() -> Check {
    for n in 4..=8 {
        let c = gen(Family::Cycle(n));
        let family = enumerate_mincuts(&c).map_err(|e| e.to_string())?;
        ensure(family.len() == binomial2(n), || {
            format!(
                "C_{n} has {} mincuts, expected {}",
                family.len(),
                binomial2(n)
            )
        })?;
        // Oracle: the cuts are exactly the 2-subsets of cycle edges, and
        // two cuts meet iff their 2-subsets meet, which is L(K_n).
        let (lambda, brute) = brute_mincuts(&c);
        ensure(lambda == 2 && brute.len() == binomial2(n), || {
            format!("oracle disagrees on C_{n}")
        })?;
        let x = intersection_graph(&family);
        let lkn = gen(Family::Complete(n)).line_graph();
        ensure(are_isomorphic(&x, &lkn).unwrap(), || {
            format!("X(C_{n}) not isomorphic to L(K_{n})")
        })?;
        let pair_of = |cut: &mincut_core::Cut| -> (usize, usize) {
            let idx: Vec<usize> = cut
                .edges()
                .iter()
                .map(|e| if e.v == e.u + 1 { e.u } else { e.v })
                .collect();
            (idx[0].min(idx[1]), idx[0].max(idx[1]))
        };
        for (i, a) in family.cuts.iter().enumerate() {
            for (j, b) in family.cuts.iter().enumerate().skip(i + 1) {
                let (p, q) = (pair_of(a), pair_of(b));
                let meet = p.0 == q.0 || p.0 == q.1 || p.1 == q.0 || p.1 == q.1;
                ensure(x.has_edge(i, j) == meet, || {
                    format!("C_{n}: adjacency mismatch at {i},{j}")
                })?;
            }
        }
    }
    Ok("X(C_n) = L(K_n) and c(C_n) = C(n,2) for n = 4..8".into())
}

fn c3_fixed_point_equivalence() -> Check {
    let report = fixed_point_equivalence_sweep(3, 6).map_err(|e| e.to_string())?;
    ensure(report.exceptions.is_empty(), || {
        format!("exceptions: {:?}", report.exceptions)
    })?;
    let mut fixed = 0;
    for n in 3..=6 {
        for (_, g) in connected_classes(n) {
            let is_fixed = brute_isomorphic(&brute_mincut_graph(&g), &g);
            let regular = g.degrees().iter().all(|&d| d == g.degree(0));
            let predicted = is_super_lambda_brute(&g) && regular;
            ensure(is_fixed == predicted, || {
                format!(
                    "oracle exception at {}",
                    mincut_core::formats::to_graph6(&g)
                )
            })?;
            fixed += is_fixed as usize;
        }
    }
    ensure(fixed == report.fixed_points, || {
        "oracle and library disagree on fixed-point count".into()
    })?;
    // K_2 is super-λ and regular but X(K_2) = K_1.
    let k2x = mincut_graph(&gen(Family::Complete(2))).unwrap();
    ensure(k2x.order() == 1, || "X(K_2) is not K_1".into())?;
    Ok(format!(
        "{} classes on 3..6 vertices, {} fixed points, 0 exceptions (K_2 -> K_1 excluded)",
        report.graphs_checked, report.fixed_points
    ))
}

fn c4_prism_orbit() -> Check {
    let expected = Outcome::Periodic {
        period: 2,
        preperiod: 0,
    };
    for n in 3..=5 {
        let g = prism(n);
        let trace = iterate(&g, 10).map_err(|e| e.to_string())?;
        ensure(trace.outcome == expected, || {
            format!("K_{n}xK_2: {:?}", trace.outcome)
        })?;
        let joined = Graph::empty(1).join(&g);
        ensure(are_isomorphic(&trace.graphs[1], &joined).unwrap(), || {
            format!("X(K_{n}xK_2) is not K_1 + K_{n}xK_2")
        })?;
        let x = brute_mincut_graph(&g);
        ensure(brute_isomorphic(&x, &joined), || {
            format!("oracle: X(K_{n}xK_2) mismatch")
        })?;
        ensure(brute_isomorphic(&brute_mincut_graph(&x), &g), || {
            format!("oracle: X^2(K_{n}xK_2) mismatch")
        })?;
    }
    Ok("K_nxK_2 -> K_1 join K_nxK_2 -> K_nxK_2 for n = 3, 4, 5".into())
}

fn c5_tree_collapse() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut trees = 0;
    for n in 2..=8 {
        for _ in 0..40 {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
            let t = gen(Family::Prufer(seq.clone()));
            let trace = iterate(&t, 20).map_err(|e| e.to_string())?;
            ensure(trace.outcome == Outcome::Null { steps: 2 }, || {
                format!("Prufer {seq:?}: {:?}", trace.outcome)
            })?;
            let mid = &trace.graphs[1];
            let want = if n == 2 { 1 } else { n - 1 };
            ensure(mid.order() == want && mid.size() == 0, || {
                format!(
                    "Prufer {seq:?}: X(T) has {} vertices, {} edges",
                    mid.order(),
                    mid.size()
                )
            })?;
            trees += 1;
        }
    }
    Ok(format!(
        "{trees} trees on 2..8 vertices reach K_0 in 2 steps (seed 5, {GENERATOR})"
    ))
}

fn c6_convergence() -> Check {
    let config = IterationConfig::default();
    let mut total = 0;
    for n in 1..=6 {
        let graphs: Vec<Graph> = labeled_connected(n).collect();
        let r = survey_graphs(&graphs, &config).map_err(|e| e.to_string())?;
        ensure(r.totals.unresolved == 0, || {
            format!("n = {n}: unresolved {:?}", r.unresolved)
        })?;
        ensure(r.steps_histogram.keys().all(|&s| s <= 20), || {
            format!("n = {n}: over 20 steps")
        })?;
        total += r.graphs;
    }
    Ok(format!(
        "{total} labeled connected graphs on 1..6 vertices resolve within 20 steps"
    ))
}

fn structure_graphs() -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut graphs: Vec<Graph> = (0..500)
        .map(|_| common::random_connected(&mut rng, 2, 7))
        .collect();
    graphs.extend(labeled_connected(6));
    graphs
}

fn c7_structure_suite() -> Check {
    let graphs = structure_graphs();
    let (mut crossing, mut nontrivial) = (0, 0);
    for g in &graphs {
        let family = enumerate_mincuts(g).map_err(|e| e.to_string())?;
        let report = verify_family(g, &family);
        let g6 = || mincut_core::formats::to_graph6(g);
        ensure(report.passed(), || {
            format!("{}: {:?}", g6(), report.violations)
        })?;
        nontrivial += report.nontrivial_pairs_checked;
        // Oracle for crossing pairs, straight from the side masks.
        let (lambda, sides) = brute_mincuts(g);
        let n = g.order();
        let full = (1u64 << n) - 1;
        let mut oracle_crossing = 0;
        for (i, &a) in sides.iter().enumerate() {
            for &b in &sides[i + 1..] {
                let q = [a & b, a & !b & full, !a & b & full, !a & !b & full];
                if q.contains(&0) {
                    continue;
                }
                oracle_crossing += 1;
                ensure(lambda % 2 == 0, || {
                    format!("{}: crossing with odd lambda", g6())
                })?;
                let edges_a: Vec<_> = g
                    .edge_pairs()
                    .into_iter()
                    .filter(|&(u, v)| (a >> u & 1) != (a >> v & 1))
                    .collect();
                let shared = g
                    .edge_pairs()
                    .into_iter()
                    .filter(|&(u, v)| (b >> u & 1) != (b >> v & 1) && edges_a.contains(&(u, v)))
                    .count();
                ensure(shared == 0, || {
                    format!("{}: crossing cuts share an edge", g6())
                })?;
                let between = |x: u64, y: u64| {
                    g.edge_pairs()
                        .iter()
                        .filter(|&&(u, v)| {
                            (x >> u & 1 == 1 && y >> v & 1 == 1)
                                || (y >> u & 1 == 1 && x >> v & 1 == 1)
                        })
                        .count()
                };
                // quadrants in cyclic order: A∩B, A∩B̄, Ā∩B̄, Ā∩B
                let ring = [q[0], q[1], q[3], q[2]];
                for k in 0..4 {
                    ensure(between(ring[k], ring[(k + 1) % 4]) == lambda / 2, || {
                        format!("{}: boundary count off", g6())
                    })?;
                }
                ensure(between(q[0], q[3]) == 0 && between(q[1], q[2]) == 0, || {
                    format!("{}: diagonal edges present", g6())
                })?;
                for part in [a | b, a & b, a & !b & full, !a & b & full] {
                    let oriented = if part & 1 == 1 { part } else { full & !part };
                    ensure(
                        sides.binary_search(&oriented).is_ok() && cut_size(g, part) == lambda,
                        || format!("{}: quadrant cut missing", g6()),
                    )?;
                }
            }
        }
        ensure(oracle_crossing == report.crossing_pairs, || {
            format!("{}: crossing count differs", g6())
        })?;
        crossing += oracle_crossing;
    }
    Ok(format!(
        "{} graphs, {crossing} crossing pairs, {nontrivial} non-trivial pairs, 0 violations",
        graphs.len()
    ))
}

fn c8_oracle_equivalence() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut cuts = 0;
    for k in 0..200 {
        let g = common::random_connected(&mut rng, 2, 12);
        let (lambda, brute) = brute_mincuts(&g);
        ensure(edge_connectivity(&g) == lambda, || {
            format!("graph {k}: lambda differs")
        })?;
        let family = enumerate_mincuts(&g).map_err(|e| e.to_string())?;
        let sides: Vec<u64> = family.cuts.iter().map(|c| c.side_a_mask()).collect();
        ensure(sides == brute, || format!("graph {k}: cut sets differ"))?;
        cuts += brute.len();
    }
    Ok(format!(
        "200 graphs on 2..12 vertices, {cuts} mincuts, 0 discrepancies"
    ))
}

fn c9_count_bounds() -> Check {
    let mut graphs: Vec<Graph> = (3..=6)
        .flat_map(|n| connected_classes(n).into_iter().map(|(_, g)| g))
        .collect();
    graphs.extend((2..=6).flat_map(labeled_connected));
    graphs.extend(structure_graphs());
    for g in &graphs {
        let family = enumerate_mincuts(g).map_err(|e| e.to_string())?;
        let report = count_bound_check(&family, g.order());
        let (lambda, brute) = brute_mincuts(g);
        let oracle = bounds_hold(g.order(), lambda, brute.len());
        ensure(report.all_satisfied() && oracle, || {
            format!("{}: bound violated", mincut_core::formats::to_graph6(g))
        })?;
    }
    Ok(format!(
        "{} graphs from criteria 3, 6, 7 satisfy all count bounds",
        graphs.len()
    ))
}

fn c10_soundness() -> Check {
    let report = soundness_sweep(6).map_err(|e| e.to_string())?;
    ensure(report.counterexamples.is_empty(), || {
        format!("{:?}", report.counterexamples)
    })?;
    let mut hits = 0;
    for n in 2..=6 {
        for (_, g) in connected_classes(n) {
            let conds = sufficient_conditions(&g).map_err(|e| e.to_string())?;
            if conds.iter().any(|&c| c) {
                hits += 1;
                ensure(is_super_lambda_brute(&g), || {
                    format!(
                        "oracle counterexample {}",
                        mincut_core::formats::to_graph6(&g)
                    )
                })?;
            }
        }
    }
    Ok(format!(
        "{} graphs, {hits} satisfy some condition, 0 counterexamples",
        report.graphs_checked
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("fixed points K_n, K_n,n, L(K_n)", c1_corollary_fixed_points),
        ("cycle law X(C_n) = L(K_n)", c2_cycle_law),
        (
            "fixed point iff super-lambda and regular",
            c3_fixed_point_equivalence,
        ),
        ("prism orbit Periodic(2, 0)", c4_prism_orbit),
        ("tree collapse", c5_tree_collapse),
        ("convergence for n <= 6", c6_convergence),
        ("cut structure suite", c7_structure_suite),
        ("enumeration oracle equivalence", c8_oracle_equivalence),
        ("mincut count bounds", c9_count_bounds),
        ("sufficient condition soundness", c10_soundness),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{secs:.1}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
