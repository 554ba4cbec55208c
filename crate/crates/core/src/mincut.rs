//! Edge connectivity and exhaustive enumeration of minimum edge-cuts.
//!
//! `λ` comes from unit-capacity augmenting-path max-flow between vertex 0
//! and every other vertex. The enumerator is an independent depth-first
//! assignment of vertices to the two sides, pruned by a lower bound on the
//! final cut size and by connectivity feasibility of both sides. It only
//! consults the flow value to know which cut size to keep.

use std::collections::VecDeque;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Default vertex cap for [`enumerate_mincuts`].
pub const DEFAULT_ENUM_BUDGET: usize = 24;

/// Hard cap: sides are stored as 64-bit masks.
pub const MAX_ENUM_ORDER: usize = 64;

/// One minimum edge-cut `⟨A, Ā⟩` with `0 ∈ A`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cut {
    edges: Vec<Edge>,
    side_a: u64,
    n: usize,
}

impl Cut {
    /// The cut induced by a bipartition, oriented so that vertex 0 lies in
    /// side A. `side` must be a non-empty proper subset of the vertices.
    pub fn from_side(g: &Graph, side: &[usize]) -> Cut {
        let n = g.order();
        assert!(n <= MAX_ENUM_ORDER);
        let mask = side.iter().fold(0u64, |m, &v| m | (1 << v));
        Self::from_mask(g, mask)
    }

    pub(crate) fn from_mask(g: &Graph, mask: u64) -> Cut {
        let n = g.order();
        let full = full_mask(n);
        let mask = if mask & 1 == 1 { mask } else { full & !mask };
        assert!(mask != 0 && mask != full, "both sides must be non-empty");
        let edges = g
            .edges()
            .filter(|e| (mask >> e.u & 1) != (mask >> e.v & 1))
            .collect();
        Cut {
            edges,
            side_a: mask,
            n,
        }
    }

    /// Cut edges in normalized order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn side_a_mask(&self) -> u64 {
        self.side_a
    }

    pub fn side_b_mask(&self) -> u64 {
        full_mask(self.n) & !self.side_a
    }

    pub fn side_a(&self) -> Vec<usize> {
        mask_vertices(self.side_a)
    }

    pub fn side_b(&self) -> Vec<usize> {
        mask_vertices(self.side_b_mask())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// A cut is trivial when it isolates a single vertex.
    pub fn is_trivial(&self) -> bool {
        self.side_a.count_ones() == 1 || self.side_b_mask().count_ones() == 1
    }

    pub fn shares_edge_with(&self, other: &Cut) -> bool {
        // both lists are sorted
        let (mut i, mut j) = (0, 0);
        while i < self.edges.len() && j < other.edges.len() {
            match self.edges[i].cmp(&other.edges[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }

    pub fn shared_edges(&self, other: &Cut) -> Vec<Edge> {
        self.edges
            .iter()
            .filter(|e| other.edges.binary_search(e).is_ok())
            .copied()
            .collect()
    }

    /// Checks the cut against `g`: its edges are exactly the crossing
    /// edges and removing them leaves exactly the two sides as components.
    pub fn verify(&self, g: &Graph) -> bool {
        if g.order() != self.n || self.side_a & 1 == 0 || self.side_b_mask() == 0 {
            return false;
        }
        let Some(adj) = g.adjacency_masks() else {
            return false;
        };
        let crossing: Vec<Edge> = g
            .edges()
            .filter(|e| (self.side_a >> e.u & 1) != (self.side_a >> e.v & 1))
            .collect();
        crossing == self.edges
            && is_connected_within(&adj, self.side_a)
            && is_connected_within(&adj, self.side_b_mask())
    }
}

/// All minimum edge-cuts of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MincutFamily {
    pub lambda: usize,
    /// Sorted by side-A mask.
    pub cuts: Vec<Cut>,
    pub trivial: Vec<bool>,
}

impl MincutFamily {
    pub fn empty() -> Self {
        MincutFamily {
            lambda: 0,
            cuts: Vec::new(),
            trivial: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.cuts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cuts.is_empty()
    }

    /// Index of the cut whose side A (after orientation) equals `mask`.
    pub fn position_of_side(&self, mask: u64) -> Option<usize> {
        let n = self.cuts.first()?.n;
        let mask = if mask & 1 == 1 {
            mask
        } else {
            full_mask(n) & !mask
        };
        self.cuts.binary_search_by_key(&mask, |c| c.side_a).ok()
    }

    pub fn trivial_count(&self) -> usize {
        self.trivial.iter().filter(|&&t| t).count()
    }

    /// Number of unordered pairs of cuts sharing at least one edge.
    pub fn intersecting_pairs(&self) -> usize {
        let k = self.cuts.len();
        (0..k)
            .map(|i| {
                (i + 1..k)
                    .filter(|&j| self.cuts[i].shares_edge_with(&self.cuts[j]))
                    .count()
            })
            .sum()
    }
}

impl Serialize for Cut {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Cut", 2)?;
        let edges: Vec<[usize; 2]> = self.edges.iter().map(|e| [e.u, e.v]).collect();
        st.serialize_field("edges", &edges)?;
        st.serialize_field("side_a", &self.side_a())?;
        st.end()
    }
}

impl Serialize for MincutFamily {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("MincutFamily", 3)?;
        st.serialize_field("lambda", &self.lambda)?;
        st.serialize_field("cuts", &self.cuts)?;
        st.serialize_field("trivial", &self.trivial)?;
        st.end()
    }
}

fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn mask_vertices(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

/// Whether the vertices of `set` induce a connected subgraph (false for
/// the empty set).
pub(crate) fn is_connected_within(adj: &[u64], set: u64) -> bool {
    if set == 0 {
        return false;
    }
    reach_within(adj, set, set & set.wrapping_neg()) == set
}

/// Vertices of `allowed` reachable from `seed` inside `allowed`.
fn reach_within(adj: &[u64], allowed: u64, seed: u64) -> u64 {
    let mut reached = seed;
    let mut frontier = seed;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[v] & allowed & !reached;
        reached |= fresh;
        frontier |= fresh;
    }
    reached
}

/// Edge connectivity `λ(G)`; zero for disconnected graphs and for `n ≤ 1`.
pub fn edge_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n <= 1 || !g.is_connected() {
        return 0;
    }
    let mut net = UnitFlow::new(g);
    let mut best = g.degrees().into_iter().min().unwrap();
    for t in 1..n {
        best = best.min(net.max_flow(0, t, best));
        if best == 1 {
            break;
        }
    }
    best
}

/// Residual network for an undirected graph where each edge carries one
/// unit in either direction.
struct UnitFlow {
    // arcs are stored in pairs: arc 2k is u->v, arc 2k+1 is v->u
    head: Vec<usize>,
    flow: Vec<i8>,
    out: Vec<Vec<usize>>,
}

impl UnitFlow {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut net = UnitFlow {
            head: Vec::new(),
            flow: Vec::new(),
            out: vec![Vec::new(); n],
        };
        for e in g.edges() {
            let k = net.head.len();
            net.head.push(e.v);
            net.head.push(e.u);
            net.out[e.u].push(k);
            net.out[e.v].push(k + 1);
        }
        net.flow = vec![0; net.head.len()];
        net
    }

    fn residual(&self, arc: usize) -> i8 {
        1 - self.flow[arc]
    }

    /// Max flow from `s` to `t`, stopping once `cap` units are found.
    fn max_flow(&mut self, s: usize, t: usize, cap: usize) -> usize {
        self.flow.iter_mut().for_each(|f| *f = 0);
        let n = self.out.len();
        let mut total = 0;
        while total < cap {
            let mut via = vec![usize::MAX; n];
            let mut seen = vec![false; n];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                if v == t {
                    break;
                }
                for &arc in &self.out[v] {
                    let w = self.head[arc];
                    if !seen[w] && self.residual(arc) > 0 {
                        seen[w] = true;
                        via[w] = arc;
                        queue.push_back(w);
                    }
                }
            }
            if !seen[t] {
                break;
            }
            let mut w = t;
            while w != s {
                let arc = via[w];
                self.flow[arc] += 1;
                self.flow[arc ^ 1] -= 1;
                w = self.head[arc ^ 1];
            }
            total += 1;
        }
        total
    }
}

pub fn enumerate_mincuts(g: &Graph) -> Result<MincutFamily> {
    enumerate_mincuts_with_budget(g, DEFAULT_ENUM_BUDGET)
}

/// Every minimum edge-cut of `g`. Disconnected graphs and graphs with at
/// most one vertex yield the empty family with `λ = 0`.
pub fn enumerate_mincuts_with_budget(g: &Graph, budget: usize) -> Result<MincutFamily> {
    let n = g.order();
    if n <= 1 || !g.is_connected() {
        return Ok(MincutFamily::empty());
    }
    if n > budget.min(MAX_ENUM_ORDER) {
        return Err(Error::BudgetExceeded {
            n,
            budget: budget.min(MAX_ENUM_ORDER),
        });
    }
    let lambda = edge_connectivity(g);
    let masks = Enumerator::new(g, lambda).run();
    let cuts: Vec<Cut> = masks.into_iter().map(|m| Cut::from_mask(g, m)).collect();
    debug_assert!(cuts.iter().all(|c| c.edges.len() == lambda));
    let trivial = cuts.iter().map(Cut::is_trivial).collect();
    Ok(MincutFamily {
        lambda,
        cuts,
        trivial,
    })
}

struct Enumerator {
    adj: Vec<u64>,
    order: Vec<usize>,
    full: u64,
    lambda: usize,
    found: Vec<u64>,
}

impl Enumerator {
    fn new(g: &Graph, lambda: usize) -> Self {
        let adj = g
            .adjacency_masks()
            .expect("order checked against the hard cap");
        let full = full_mask(g.order());
        // BFS order from vertex 0 keeps assigned vertices clustered, which
        // tightens the partial-cut bound early
        let mut order = Vec::with_capacity(g.order());
        let mut seen = 1u64;
        let mut queue = VecDeque::from([0usize]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            let mut fresh = adj[v] & !seen;
            seen |= fresh;
            while fresh != 0 {
                let w = fresh.trailing_zeros() as usize;
                fresh &= fresh - 1;
                queue.push_back(w);
            }
        }
        Enumerator {
            adj,
            order,
            full,
            lambda,
            found: Vec::new(),
        }
    }

    fn run(mut self) -> Vec<u64> {
        self.assign(1, 1, 0);
        self.found.sort_unstable();
        self.found
    }

    fn crossing(&self, a: u64, b: u64) -> usize {
        mask_vertices(a)
            .into_iter()
            .map(|v| (self.adj[v] & b).count_ones() as usize)
            .sum()
    }

    fn assign(&mut self, depth: usize, a: u64, b: u64) {
        if depth == self.order.len() {
            if b != 0 && self.crossing(a, b) == self.lambda {
                self.found.push(a);
            }
            return;
        }
        let v = self.order[depth];
        let bit = 1u64 << v;
        for (na, nb) in [(a | bit, b), (a, b | bit)] {
            if self.feasible(na, nb) {
                self.assign(depth + 1, na, nb);
            }
        }
    }

    fn feasible(&self, a: u64, b: u64) -> bool {
        let free = self.full & !(a | b);
        let mut bound = self.crossing(a, b);
        if bound > self.lambda {
            return false;
        }
        let mut rest = free;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let to_a = (self.adj[v] & a).count_ones() as usize;
            let to_b = (self.adj[v] & b).count_ones() as usize;
            bound += to_a.min(to_b);
        }
        if bound > self.lambda {
            return false;
        }
        // both sides must be able to end up connected
        let side_ok = |side: u64| {
            side == 0 || {
                let low = side & side.wrapping_neg();
                reach_within(&self.adj, side | free, low) & side == side
            }
        };
        side_ok(a) && side_ok(b)
    }
}

/// One inequality from the mincut-count bounds.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct BoundCheck {
    pub name: &'static str,
    pub limit: f64,
    pub satisfied: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct BoundReport {
    pub n: usize,
    pub lambda: usize,
    pub count: usize,
    pub checks: Vec<BoundCheck>,
}

impl BoundReport {
    pub fn all_satisfied(&self) -> bool {
        self.checks.iter().all(|c| c.satisfied)
    }
}

/// Evaluates the upper bounds on the number of mincuts that apply to
/// `family`: always `C(n, 2)`, plus `2n²/(λ+1)² + (λ−1)n/(λ+1)` for even
/// `λ ≥ 4` and `(1 + 4/(λ+5))·n` for odd `λ > 5`. Comparisons are done in
/// exact integer arithmetic.
pub fn count_bound_check(family: &MincutFamily, n: usize) -> BoundReport {
    let count = family.len();
    let lambda = family.lambda;
    let (c, nn, l) = (count as u128, n as u128, lambda as u128);
    let mut checks = vec![BoundCheck {
        name: "universal",
        limit: (n * n.saturating_sub(1) / 2) as f64,
        satisfied: c * 2 <= nn * nn.saturating_sub(1),
    }];
    if lambda >= 4 && lambda.is_multiple_of(2) {
        // c ≤ 2n²/(λ+1)² + (λ−1)n/(λ+1)  ⇔  c(λ+1)² ≤ 2n² + (λ−1)(λ+1)n
        let lhs = c * (l + 1) * (l + 1);
        let rhs = 2 * nn * nn + (l - 1) * (l + 1) * nn;
        let lf = lambda as f64;
        let nf = n as f64;
        checks.push(BoundCheck {
            name: "even_lambda",
            limit: 2.0 * nf * nf / ((lf + 1.0) * (lf + 1.0)) + (lf - 1.0) * nf / (lf + 1.0),
            satisfied: lhs <= rhs,
        });
    }
    if lambda > 5 && lambda % 2 == 1 {
        // c ≤ (1 + 4/(λ+5))n  ⇔  c(λ+5) ≤ (λ+9)n
        checks.push(BoundCheck {
            name: "odd_lambda",
            limit: (1.0 + 4.0 / (lambda as f64 + 5.0)) * n as f64,
            satisfied: c * (l + 5) <= (l + 9) * nn,
        });
    }
    BoundReport {
        n,
        lambda,
        count,
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn gen(f: Family) -> Graph {
        Graph::generate(&f).unwrap()
    }

    #[test]
    fn connectivity_examples() {
        assert_eq!(edge_connectivity(&gen(Family::Complete(4))), 3);
        assert_eq!(edge_connectivity(&gen(Family::Cycle(5))), 2);
        let two = gen(Family::Complete(3)).disjoint_union(&gen(Family::Complete(3)));
        assert_eq!(edge_connectivity(&two), 0);
        assert_eq!(edge_connectivity(&Graph::null()), 0);
        assert_eq!(edge_connectivity(&Graph::empty(1)), 0);
        assert_eq!(edge_connectivity(&gen(Family::Complete(2))), 1);
        assert_eq!(edge_connectivity(&gen(Family::Wheel(5))), 3);
        assert_eq!(
            edge_connectivity(&gen(Family::Complete(7)).line_graph()),
            10
        );
    }

    #[test]
    fn k4_has_four_trivial_cuts() {
        let f = enumerate_mincuts(&gen(Family::Complete(4))).unwrap();
        assert_eq!(f.lambda, 3);
        assert_eq!(f.len(), 4);
        assert!(f.trivial.iter().all(|&t| t));
        // side A always contains vertex 0; the star of vertex 0 has A = {0}
        assert_eq!(f.cuts[0].side_a(), vec![0]);
    }

    #[test]
    fn c5_cuts_are_all_edge_pairs() {
        let g = gen(Family::Cycle(5));
        let f = enumerate_mincuts(&g).unwrap();
        assert_eq!(f.lambda, 2);
        assert_eq!(f.len(), 10);
        let mut edge_sets: Vec<_> = f.cuts.iter().map(|c| c.edges().to_vec()).collect();
        edge_sets.sort();
        edge_sets.dedup();
        assert_eq!(edge_sets.len(), 10);
        assert!(f.cuts.iter().all(|c| c.verify(&g)));
    }

    #[test]
    fn path_cuts_are_bridges() {
        let f = enumerate_mincuts(&gen(Family::Path(4))).unwrap();
        assert_eq!(f.lambda, 1);
        assert_eq!(f.len(), 3);
        assert_eq!(f.trivial, vec![true, false, true]);
        let bridges: Vec<Edge> = f.cuts.iter().map(|c| c.edges()[0]).collect();
        assert_eq!(
            bridges,
            vec![Edge::new(0, 1), Edge::new(1, 2), Edge::new(2, 3)]
        );
    }

    #[test]
    fn degenerate_inputs() {
        assert!(enumerate_mincuts(&Graph::null()).unwrap().is_empty());
        assert!(enumerate_mincuts(&Graph::empty(1)).unwrap().is_empty());
        let two = gen(Family::Complete(3)).disjoint_union(&gen(Family::Complete(3)));
        let f = enumerate_mincuts(&two).unwrap();
        assert_eq!((f.lambda, f.len()), (0, 0));
        let k2 = enumerate_mincuts(&gen(Family::Complete(2))).unwrap();
        assert_eq!(
            (k2.lambda, k2.len(), k2.trivial.clone()),
            (1, 1, vec![true])
        );
    }

    #[test]
    fn budget() {
        let g = gen(Family::Cycle(25));
        assert_eq!(
            enumerate_mincuts(&g),
            Err(Error::BudgetExceeded { n: 25, budget: 24 })
        );
        let f = enumerate_mincuts_with_budget(&g, 30).unwrap();
        assert_eq!(f.len(), 300);
        assert!(matches!(
            enumerate_mincuts_with_budget(&gen(Family::Cycle(65)), 100),
            Err(Error::BudgetExceeded { budget: 64, .. })
        ));
    }

    #[test]
    fn cut_lookup_and_orientation() {
        let g = gen(Family::Cycle(4));
        let f = enumerate_mincuts(&g).unwrap();
        assert_eq!(f.len(), 6);
        let c = Cut::from_side(&g, &[2, 3]);
        assert_eq!(c.side_a(), vec![0, 1]);
        assert_eq!(c.side_b(), vec![2, 3]);
        assert!(f.position_of_side(0b1100).is_some());
        assert_eq!(f.position_of_side(0b1100), f.position_of_side(0b0011));
        assert_eq!(f.intersecting_pairs(), 12);
    }

    #[test]
    fn count_bounds() {
        let c7 = enumerate_mincuts(&gen(Family::Cycle(7))).unwrap();
        let r = count_bound_check(&c7, 7);
        assert_eq!(r.count, 21);
        assert_eq!(r.checks.len(), 1);
        assert!(r.all_satisfied());
        assert_eq!(r.checks[0].limit, 21.0);

        let k7 = enumerate_mincuts(&gen(Family::Complete(7))).unwrap();
        let r = count_bound_check(&k7, 7);
        assert_eq!((r.lambda, r.count), (6, 7));
        let even = r.checks.iter().find(|c| c.name == "even_lambda").unwrap();
        assert_eq!(even.limit, 7.0);
        assert!(even.satisfied);

        let p3 = enumerate_mincuts(&gen(Family::Path(3))).unwrap();
        let r = count_bound_check(&p3, 3);
        assert_eq!((r.count, r.checks.len()), (2, 1));
        assert!(r.all_satisfied());

        // K_8: λ = 7 odd; 8 ≤ (1 + 4/12)·8
        let k8 = enumerate_mincuts(&gen(Family::Complete(8))).unwrap();
        let r = count_bound_check(&k8, 8);
        assert!(r
            .checks
            .iter()
            .any(|c| c.name == "odd_lambda" && c.satisfied));

        // a violated bound is reported as such
        let fake = MincutFamily {
            lambda: 4,
            cuts: k8.cuts.iter().cycle().take(20).cloned().collect(),
            trivial: vec![true; 20],
        };
        assert!(!count_bound_check(&fake, 8).all_satisfied());
    }

    #[test]
    fn serializes_to_json() {
        let f = enumerate_mincuts(&gen(Family::Path(3))).unwrap();
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(
            json,
            r#"{"lambda":1,"cuts":[{"edges":[[0,1]],"side_a":[0]},{"edges":[[1,2]],"side_a":[0,1]}],"trivial":[true,true]}"#
        );
    }
}
