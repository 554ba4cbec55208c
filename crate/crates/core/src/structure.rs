//! Structure of pairs of minimum edge-cuts: trivial cuts and vertices,
//! vertices of attachment, nested versus crossing pairs, and checkers for
//! the crossing-pair and shared-edge properties.
//!
//! For cuts `⟨A, Ā⟩` and `⟨B, B̄⟩` the four quadrants are `A∩B`, `A∩B̄`,
//! `Ā∩B` and `Ā∩B̄`. A pair crosses when all four are non-empty and is
//! nested otherwise; this rule needs no choice of orientation.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::mincut::{mask_vertices, Cut, MincutFamily};

pub fn is_trivial_cut(cut: &Cut) -> bool {
    cut.is_trivial()
}

/// Vertices whose degree equals `lambda`.
pub fn trivial_vertices(g: &Graph, lambda: usize) -> Vec<usize> {
    (0..g.order()).filter(|&v| g.degree(v) == lambda).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

/// Vertices of the chosen side incident to at least one cut edge.
pub fn attachment_vertices(cut: &Cut, side: Side) -> Vec<usize> {
    let mask = match side {
        Side::A => cut.side_a_mask(),
        Side::B => cut.side_b_mask(),
    };
    let touched = cut
        .edges()
        .iter()
        .fold(0u64, |m, e| m | (1 << e.u) | (1 << e.v));
    mask_vertices(touched & mask)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RelationKind {
    Nested,
    Crossing,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutRelation {
    pub kind: RelationKind,
    /// Vertex masks of `A∩B`, `A∩B̄`, `Ā∩B`, `Ā∩B̄`.
    pub quadrants: [u64; 4],
}

impl CutRelation {
    pub fn quadrant_vertices(&self) -> [Vec<usize>; 4] {
        self.quadrants.map(mask_vertices)
    }
}

pub fn classify_pair(c1: &Cut, c2: &Cut) -> Result<CutRelation> {
    if c1.side_a_mask() == c2.side_a_mask() {
        return Err(Error::IdenticalCuts);
    }
    let (a, abar) = (c1.side_a_mask(), c1.side_b_mask());
    let (b, bbar) = (c2.side_a_mask(), c2.side_b_mask());
    let quadrants = [a & b, a & bbar, abar & b, abar & bbar];
    let kind = if quadrants.iter().all(|&q| q != 0) {
        RelationKind::Crossing
    } else {
        RelationKind::Nested
    };
    Ok(CutRelation { kind, quadrants })
}

fn edges_between(g: &Graph, x: u64, y: u64) -> usize {
    g.edges()
        .filter(|e| {
            let (u, v) = (1u64 << e.u, 1u64 << e.v);
            (x & u != 0 && y & v != 0) || (x & v != 0 && y & u != 0)
        })
        .count()
}

/// Everything a crossing pair of mincuts must satisfy.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossingReport {
    pub lambda: usize,
    pub lambda_even: bool,
    /// `|⟨Ā∩B̄, A∩B̄⟩|`, `|⟨Ā∩B̄, Ā∩B⟩|`, `|⟨A∩B, A∩B̄⟩|`, `|⟨A∩B, Ā∩B⟩|`;
    /// each must be `λ/2`.
    pub boundary_counts: [usize; 4],
    /// `|⟨Ā∩B̄, A∩B⟩|` and `|⟨Ā∩B, A∩B̄⟩|`; both must be zero.
    pub diagonal_counts: [usize; 2],
    /// Whether the bipartitions cut off by `A∪B`, `A∩B`, `A∩B̄` and `Ā∩B`
    /// are in the family.
    pub quadrant_cuts_present: [bool; 4],
    pub edges_disjoint: bool,
    pub passed: bool,
}

pub fn validate_crossing(
    g: &Graph,
    family: &MincutFamily,
    c1: &Cut,
    c2: &Cut,
    rel: &CutRelation,
) -> Result<CrossingReport> {
    if rel.kind != RelationKind::Crossing {
        return Err(Error::NotCrossing);
    }
    let [ab, abbar, abarb, abarbbar] = rel.quadrants;
    let lambda = family.lambda;
    let boundary_counts = [
        edges_between(g, abarbbar, abbar),
        edges_between(g, abarbbar, abarb),
        edges_between(g, ab, abbar),
        edges_between(g, ab, abarb),
    ];
    let diagonal_counts = [
        edges_between(g, abarbbar, ab),
        edges_between(g, abarb, abbar),
    ];
    let quadrant_cuts_present =
        [ab | abbar | abarb, ab, abbar, abarb].map(|side| family.position_of_side(side).is_some());
    let edges_disjoint = !c1.shares_edge_with(c2);
    let lambda_even = lambda.is_multiple_of(2);
    let passed = lambda_even
        && boundary_counts.iter().all(|&c| 2 * c == lambda)
        && diagonal_counts == [0, 0]
        && quadrant_cuts_present.iter().all(|&p| p)
        && edges_disjoint;
    Ok(CrossingReport {
        lambda,
        lambda_even,
        boundary_counts,
        diagonal_counts,
        quadrant_cuts_present,
        edges_disjoint,
        passed,
    })
}

/// For two non-trivial mincuts sharing an edge, some quadrant on side A
/// (`A∩B` or `A∩B̄`) is non-empty; the shared edges also make both of
/// their endpoints vertices of attachment of both cuts, which is checked
/// alongside. Vacuously true when the edge sets are disjoint.
pub fn check_intersection_component_lemma(c1: &Cut, c2: &Cut) -> bool {
    let shared = c1.shared_edges(c2);
    if shared.is_empty() {
        return true;
    }
    let a = c1.side_a_mask();
    let quadrant_ok = (a & c2.side_a_mask()) != 0 || (a & c2.side_b_mask()) != 0;
    let attach = |c: &Cut| {
        let mut all = attachment_vertices(c, Side::A);
        all.extend(attachment_vertices(c, Side::B));
        all
    };
    let (att1, att2) = (attach(c1), attach(c2));
    quadrant_ok
        && shared.iter().all(|e| {
            [e.u, e.v]
                .iter()
                .all(|w| att1.contains(w) && att2.contains(w))
        })
}

/// Aggregate of every pairwise check over one mincut family.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub n: usize,
    pub lambda: usize,
    pub cuts: usize,
    pub trivial_cuts: usize,
    pub nested_pairs: usize,
    pub crossing_pairs: usize,
    pub nontrivial_pairs_checked: usize,
    pub violations: Vec<String>,
}

impl StructureReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every cut and every pair of cuts of `family`, a mincut family of
/// `g`: each cut's own invariants; crossing pairs against
/// [`validate_crossing`]; non-trivial pairs against
/// [`check_intersection_component_lemma`].
pub fn verify_family(g: &Graph, family: &MincutFamily) -> StructureReport {
    let mut report = StructureReport {
        n: g.order(),
        lambda: family.lambda,
        cuts: family.len(),
        trivial_cuts: family.trivial_count(),
        ..Default::default()
    };
    for (i, c) in family.cuts.iter().enumerate() {
        if !c.verify(g) || c.edges().len() != family.lambda {
            report
                .violations
                .push(format!("cut {i} fails its own invariants"));
        }
    }
    for i in 0..family.len() {
        for j in i + 1..family.len() {
            let (c1, c2) = (&family.cuts[i], &family.cuts[j]);
            let rel = match classify_pair(c1, c2) {
                Ok(rel) => rel,
                Err(e) => {
                    report.violations.push(format!("cuts {i},{j}: {e}"));
                    continue;
                }
            };
            match rel.kind {
                RelationKind::Nested => report.nested_pairs += 1,
                RelationKind::Crossing => {
                    report.crossing_pairs += 1;
                    let r =
                        validate_crossing(g, family, c1, c2, &rel).expect("relation is crossing");
                    if !r.lambda_even {
                        report
                            .violations
                            .push(format!("cuts {i},{j} cross with odd lambda"));
                    }
                    if !r.edges_disjoint {
                        report
                            .violations
                            .push(format!("crossing cuts {i},{j} share an edge"));
                    }
                    if r.boundary_counts.iter().any(|&c| 2 * c != family.lambda) {
                        report.violations.push(format!(
                            "cuts {i},{j}: boundary counts {:?} differ from lambda/2",
                            r.boundary_counts
                        ));
                    }
                    if r.diagonal_counts != [0, 0] {
                        report.violations.push(format!(
                            "cuts {i},{j}: diagonal counts {:?} are not zero",
                            r.diagonal_counts
                        ));
                    }
                    if !r.quadrant_cuts_present.iter().all(|&p| p) {
                        report.violations.push(format!(
                            "cuts {i},{j}: quadrant bipartitions missing from the family {:?}",
                            r.quadrant_cuts_present
                        ));
                    }
                }
            }
            if !family.trivial[i] && !family.trivial[j] {
                report.nontrivial_pairs_checked += 1;
                if !check_intersection_component_lemma(c1, c2) {
                    report.violations.push(format!(
                        "cuts {i},{j}: shared-edge component property fails"
                    ));
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;
    use crate::mincut::enumerate_mincuts;
    use crate::operator::intersection_graph;

    fn gen(f: Family) -> Graph {
        Graph::generate(&f).unwrap()
    }

    /// Four copies of K_5 in a ring, consecutive copies joined by two
    /// disjoint edges. λ = 4 with crossing "half ring" cuts.
    fn k5_ring() -> Graph {
        let k5 = gen(Family::Complete(5));
        let mut g = k5.clone();
        for _ in 0..3 {
            g = g.disjoint_union(&k5);
        }
        for blk in 0..4 {
            let next = (blk + 1) % 4;
            g.try_add_edge(5 * blk, 5 * next + 1).unwrap();
            g.try_add_edge(5 * blk + 2, 5 * next + 3).unwrap();
        }
        g
    }

    /// Two K_5 blocks joined by four edges from four distinct vertices.
    fn matched_k5_pair() -> Graph {
        let k5 = gen(Family::Complete(5));
        let mut g = k5.disjoint_union(&k5);
        for i in 0..4 {
            g.try_add_edge(i, 5 + i).unwrap();
        }
        g
    }

    /// Six K_4 blocks in a chain. Consecutive blocks are joined by one
    /// edge (two at both ends) and every block is joined to the block two
    /// further on by one edge, so each chain cut has three edges and
    /// consecutive chain cuts share a skipping edge.
    fn k4_chain() -> Graph {
        let k4 = gen(Family::Complete(4));
        let mut g = k4.clone();
        for _ in 0..5 {
            g = g.disjoint_union(&k4);
        }
        let links = [
            (0, 4),
            (1, 5),
            (6, 8),
            (9, 12),
            (13, 16),
            (17, 20),
            (18, 21),
            (2, 10),
            (7, 14),
            (11, 19),
            (15, 22),
        ];
        for (a, b) in links {
            g.try_add_edge(a, b).unwrap();
        }
        g
    }

    #[test]
    fn trivial_cuts() {
        let f = enumerate_mincuts(&gen(Family::Complete(4))).unwrap();
        assert!(f.cuts.iter().all(is_trivial_cut));
        let c4 = gen(Family::Cycle(4));
        assert!(!is_trivial_cut(&Cut::from_side(&c4, &[0, 1])));
        let k2 = gen(Family::Complete(2));
        assert!(is_trivial_cut(&Cut::from_side(&k2, &[0])));
    }

    #[test]
    fn trivial_vertex_sets() {
        assert_eq!(
            trivial_vertices(&gen(Family::Complete(4)), 3),
            vec![0, 1, 2, 3]
        );
        assert_eq!(
            trivial_vertices(&gen(Family::Wheel(5)), 3),
            vec![0, 1, 2, 3, 4]
        );
        assert_eq!(trivial_vertices(&gen(Family::Path(3)), 1), vec![0, 2]);
    }

    #[test]
    fn attachment() {
        let g = matched_k5_pair();
        let f = enumerate_mincuts(&g).unwrap();
        assert_eq!(f.lambda, 4);
        let i = f.position_of_side(0b11111).unwrap();
        assert!(!f.trivial[i]);
        assert_eq!(attachment_vertices(&f.cuts[i], Side::A), vec![0, 1, 2, 3]);
        assert_eq!(attachment_vertices(&f.cuts[i], Side::B), vec![5, 6, 7, 8]);

        let k4 = gen(Family::Complete(4));
        let star = Cut::from_side(&k4, &[2]);
        assert_eq!(attachment_vertices(&star, Side::B), vec![2]);
        assert_eq!(attachment_vertices(&star, Side::A), vec![0, 1, 3]);

        let p = gen(Family::Path(4));
        let bridge = Cut::from_side(&p, &[0, 1]);
        assert_eq!(attachment_vertices(&bridge, Side::A), vec![1]);
        assert_eq!(attachment_vertices(&bridge, Side::B), vec![2]);
    }

    #[test]
    fn pair_classification() {
        let c4 = gen(Family::Cycle(4));
        // {0,1}|{2,3} and {1,2}|{3,0}
        let x = Cut::from_side(&c4, &[0, 1]);
        let y = Cut::from_side(&c4, &[1, 2]);
        let rel = classify_pair(&x, &y).unwrap();
        assert_eq!(rel.kind, RelationKind::Crossing);
        assert!(rel.quadrant_vertices().iter().all(|q| q.len() == 1));

        let p3 = gen(Family::Path(3));
        let rel = classify_pair(&Cut::from_side(&p3, &[0]), &Cut::from_side(&p3, &[0, 1])).unwrap();
        assert_eq!(rel.kind, RelationKind::Nested);

        let k4 = gen(Family::Complete(4));
        let rel = classify_pair(&Cut::from_side(&k4, &[1]), &Cut::from_side(&k4, &[2])).unwrap();
        assert_eq!(rel.kind, RelationKind::Nested);

        assert_eq!(classify_pair(&x, &x.clone()), Err(Error::IdenticalCuts));
    }

    #[test]
    fn c4_crossing_pair() {
        let c4 = gen(Family::Cycle(4));
        let f = enumerate_mincuts(&c4).unwrap();
        let x = Cut::from_side(&c4, &[0, 1]);
        let y = Cut::from_side(&c4, &[1, 2]);
        let rel = classify_pair(&x, &y).unwrap();
        let r = validate_crossing(&c4, &f, &x, &y, &rel).unwrap();
        assert!(r.passed);
        assert_eq!(r.boundary_counts, [1; 4]);
        assert_eq!(r.diagonal_counts, [0, 0]);
        assert!(r.edges_disjoint);

        let p3 = gen(Family::Path(3));
        let fp = enumerate_mincuts(&p3).unwrap();
        let rel = classify_pair(&fp.cuts[0], &fp.cuts[1]).unwrap();
        assert_eq!(
            validate_crossing(&p3, &fp, &fp.cuts[0], &fp.cuts[1], &rel),
            Err(Error::NotCrossing)
        );
    }

    #[test]
    fn c6_crossing_pairs() {
        let c6 = gen(Family::Cycle(6));
        let f = enumerate_mincuts(&c6).unwrap();
        let report = verify_family(&c6, &f);
        assert!(report.passed(), "{:?}", report.violations);
        assert!(report.crossing_pairs > 0);
        // opposite edges {0-1, 3-4} against {1-2, 4-5}
        let x = Cut::from_side(&c6, &[1, 2, 3]);
        let y = Cut::from_side(&c6, &[2, 3, 4]);
        let rel = classify_pair(&x, &y).unwrap();
        assert_eq!(rel.kind, RelationKind::Crossing);
        assert!(validate_crossing(&c6, &f, &x, &y, &rel).unwrap().passed);
    }

    #[test]
    fn k5_ring_crossing_structure() {
        let g = k5_ring();
        let f = enumerate_mincuts(&g).unwrap();
        assert_eq!(f.lambda, 4);
        let report = verify_family(&g, &f);
        assert!(report.passed(), "{:?}", report.violations);
        // four block cuts and two half-ring cuts are non-trivial
        assert_eq!(f.len() - f.trivial_count(), 6);
        // only the two half-ring cuts cross
        assert_eq!(report.crossing_pairs, 1);
        let halves = (0..5).chain(5..10).collect::<Vec<_>>();
        let x = Cut::from_side(&g, &halves);
        let y = Cut::from_side(&g, &(5..15).collect::<Vec<_>>());
        let rel = classify_pair(&x, &y).unwrap();
        let r = validate_crossing(&g, &f, &x, &y, &rel).unwrap();
        assert!(r.passed);
        assert_eq!(r.boundary_counts, [2; 4]);
    }

    #[test]
    fn nested_chain_induces_a_path() {
        let g = k4_chain();
        let f = enumerate_mincuts(&g).unwrap();
        assert_eq!(f.lambda, 3);
        let nontrivial: Vec<usize> = (0..f.len()).filter(|&i| !f.trivial[i]).collect();
        assert_eq!(nontrivial.len(), 5);
        let report = verify_family(&g, &f);
        assert!(report.passed(), "{:?}", report.violations);
        assert_eq!(report.crossing_pairs, 0);

        // sort the chain cuts by side size: A_1 ⊂ A_2 ⊂ ...
        let mut chain = nontrivial.clone();
        chain.sort_by_key(|&i| f.cuts[i].side_a().len());
        for w in chain.windows(2) {
            let (a, b) = (f.cuts[w[0]].side_a_mask(), f.cuts[w[1]].side_a_mask());
            assert_eq!(a & b, a);
        }
        let x = intersection_graph(&f).induced(&chain);
        assert_eq!(x, gen(Family::Path(5)));
    }

    #[test]
    fn intersection_component_property() {
        let g = k4_chain();
        let f = enumerate_mincuts(&g).unwrap();
        let nontrivial: Vec<&Cut> = f.cuts.iter().filter(|c| !c.is_trivial()).collect();
        let mut sharing = 0;
        for i in 0..nontrivial.len() {
            for j in i + 1..nontrivial.len() {
                sharing += nontrivial[i].shares_edge_with(nontrivial[j]) as usize;
                assert!(check_intersection_component_lemma(
                    nontrivial[i],
                    nontrivial[j]
                ));
            }
        }
        assert_eq!(sharing, 4);
        let c4 = gen(Family::Cycle(4));
        let x = Cut::from_side(&c4, &[0, 1]);
        let y = Cut::from_side(&c4, &[1, 2]);
        assert!(check_intersection_component_lemma(&x, &y));
    }
}
