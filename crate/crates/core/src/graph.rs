//! Simple undirected graphs on dense vertex indices `0..n`, the standard
//! families, and the constructions used by the operator experiments
//! (line graph, Cartesian product, join).

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An undirected edge with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalizes the endpoint order. Panics on a loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "an edge needs two distinct endpoints");
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn touches(&self, w: usize) -> bool {
        self.u == w || self.v == w
    }

    pub fn shares_endpoint(&self, other: &Edge) -> bool {
        self.touches(other.u) || self.touches(other.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Simple undirected graph. `n == 0` is the null graph K_0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![BTreeSet::new(); n],
        }
    }

    /// The null graph K_0.
    pub fn null() -> Self {
        Self::empty(0)
    }

    /// Builds a graph from an edge list, rejecting loops, repeated edges
    /// and out-of-range endpoints.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(a, b) in edges {
            g.try_add_edge(a, b)?;
        }
        Ok(g)
    }

    pub(crate) fn try_add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        let n = self.order();
        for x in [a, b] {
            if x >= n {
                return Err(Error::IndexOutOfRange { vertex: x, n });
            }
        }
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        if !self.adj[a].insert(b) {
            let e = Edge::new(a, b);
            return Err(Error::DuplicateEdge(e.u, e.v));
        }
        self.adj[b].insert(a);
        Ok(())
    }

    /// Inserts an edge known to be new and valid.
    pub(crate) fn add_edge_unchecked(&mut self, a: usize, b: usize) {
        debug_assert!(a != b && a < self.order() && b < self.order());
        self.adj[a].insert(b);
        self.adj[b].insert(a);
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn is_null(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.order() && self.adj[a].contains(&b)
    }

    /// Edges in lexicographic `(u, v)` order with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.range(u + 1..).map(move |&v| Edge { u, v }))
    }

    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        self.edges().map(|e| (e.u, e.v)).collect()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(BTreeSet::len).collect()
    }

    /// Neighborhoods as 64-bit masks; `None` when `n > 64`.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.order() > 64 {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|nbrs| nbrs.iter().fold(0u64, |m, &w| m | (1 << w)))
                .collect(),
        )
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True for a single component. K_0 is not connected.
    pub fn is_connected(&self) -> bool {
        self.order() > 0 && self.components().len() == 1
    }

    /// Minimum degree, maximum degree, and whether they agree.
    pub fn degree_profile(&self) -> Result<DegreeProfile> {
        let degs = self.degrees();
        let min = *degs.iter().min().ok_or(Error::EmptyGraph)?;
        let max = *degs.iter().max().ok_or(Error::EmptyGraph)?;
        Ok(DegreeProfile {
            min,
            max,
            regular: min == max,
        })
    }

    /// BFS distances from `s`; `None` for unreachable vertices.
    pub fn distances_from(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for w in self.neighbors(v) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Largest finite distance; `None` when disconnected or null.
    pub fn diameter(&self) -> Option<usize> {
        if !self.is_connected() {
            return None;
        }
        (0..self.order())
            .map(|s| {
                self.distances_from(s)
                    .into_iter()
                    .map(|d| d.unwrap())
                    .max()
                    .unwrap()
            })
            .max()
    }

    /// Applies `perm` (old vertex -> new vertex).
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order());
        let mut g = Graph::empty(self.order());
        for e in self.edges() {
            g.add_edge_unchecked(perm[e.u], perm[e.v]);
        }
        g
    }

    /// Subgraph induced on `vertices`, re-indexed in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for w in self.neighbors(v) {
                let j = index[w];
                if j != usize::MAX && i < j {
                    g.add_edge_unchecked(i, j);
                }
            }
        }
        g
    }

    /// Checks symmetry, absence of loops and index ranges.
    pub fn check_invariants(&self) -> bool {
        let n = self.order();
        self.adj.iter().enumerate().all(|(v, nbrs)| {
            !nbrs.contains(&v) && nbrs.iter().all(|&w| w < n && self.adj[w].contains(&v))
        })
    }

    /// The line graph: one vertex per edge, in `edges()` order.
    pub fn line_graph(&self) -> Graph {
        let edges: Vec<Edge> = self.edges().collect();
        let index = |e: Edge| edges.binary_search(&e).unwrap();
        let mut l = Graph::empty(edges.len());
        for (i, e) in edges.iter().enumerate() {
            for end in [e.u, e.v] {
                for w in self.neighbors(end) {
                    let j = index(Edge::new(end, w));
                    if j > i {
                        l.add_edge_unchecked(i, j);
                    }
                }
            }
        }
        l
    }

    /// Cartesian product; vertex `(a, b)` becomes `a * h.order() + b`.
    pub fn cartesian_product(&self, h: &Graph) -> Graph {
        let (n, k) = (self.order(), h.order());
        let mut p = Graph::empty(n * k);
        for a in 0..n {
            for e in h.edges() {
                p.add_edge_unchecked(a * k + e.u, a * k + e.v);
            }
        }
        for e in self.edges() {
            for b in 0..k {
                p.add_edge_unchecked(e.u * k + b, e.v * k + b);
            }
        }
        p
    }

    /// Disjoint union with `h`, whose vertices are shifted past ours.
    pub fn disjoint_union(&self, h: &Graph) -> Graph {
        let n = self.order();
        let mut g = Graph::empty(n + h.order());
        for e in self.edges() {
            g.add_edge_unchecked(e.u, e.v);
        }
        for e in h.edges() {
            g.add_edge_unchecked(n + e.u, n + e.v);
        }
        g
    }

    /// Disjoint union plus every edge between the two parts.
    pub fn join(&self, h: &Graph) -> Graph {
        let n = self.order();
        let mut g = self.disjoint_union(h);
        for a in 0..n {
            for b in 0..h.order() {
                g.add_edge_unchecked(a, n + b);
            }
        }
        g
    }

    pub fn generate(family: &Family) -> Result<Graph> {
        family.build()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub min: usize,
    pub max: usize,
    pub regular: bool,
}

/// Standard graph families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    CompleteBipartite(usize, usize),
    /// Wheel with a rim of the given size; the hub is the last vertex.
    Wheel(usize),
    /// Star on `n` vertices with center 0.
    Star(usize),
    /// Labeled tree decoded from a Prüfer sequence on `len + 2` vertices.
    Prufer(Vec<usize>),
}

impl Family {
    fn build(&self) -> Result<Graph> {
        match *self {
            Family::Complete(n) => {
                let mut g = Graph::empty(n);
                for a in 0..n {
                    for b in a + 1..n {
                        g.add_edge_unchecked(a, b);
                    }
                }
                Ok(g)
            }
            Family::Cycle(n) => {
                if n < 3 {
                    return Err(Error::SizeTooSmall {
                        family: "cycle",
                        min: 3,
                        got: n,
                    });
                }
                let mut g = Family::Path(n).build()?;
                g.add_edge_unchecked(0, n - 1);
                Ok(g)
            }
            Family::Path(n) => {
                let mut g = Graph::empty(n);
                for a in 1..n {
                    g.add_edge_unchecked(a - 1, a);
                }
                Ok(g)
            }
            Family::CompleteBipartite(a, b) => {
                let mut g = Graph::empty(a + b);
                for x in 0..a {
                    for y in a..a + b {
                        g.add_edge_unchecked(x, y);
                    }
                }
                Ok(g)
            }
            Family::Wheel(rim) => {
                if rim < 3 {
                    return Err(Error::SizeTooSmall {
                        family: "wheel rim",
                        min: 3,
                        got: rim,
                    });
                }
                let c = Family::Cycle(rim).build()?;
                Ok(c.join(&Graph::empty(1)))
            }
            Family::Star(n) => {
                if n < 1 {
                    return Err(Error::SizeTooSmall {
                        family: "star",
                        min: 1,
                        got: n,
                    });
                }
                let mut g = Graph::empty(n);
                for leaf in 1..n {
                    g.add_edge_unchecked(0, leaf);
                }
                Ok(g)
            }
            Family::Prufer(ref seq) => prufer_tree(seq),
        }
    }
}

fn prufer_tree(seq: &[usize]) -> Result<Graph> {
    let n = seq.len() + 2;
    if let Some(&bad) = seq.iter().find(|&&x| x >= n) {
        return Err(Error::IndexOutOfRange { vertex: bad, n });
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut g = Graph::empty(n);
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    for &x in seq {
        let leaf = leaves.pop_first().unwrap();
        g.add_edge_unchecked(leaf, x);
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.insert(x);
        }
    }
    let a = leaves.pop_first().unwrap();
    let b = leaves.pop_first().unwrap();
    g.add_edge_unchecked(a, b);
    Ok(g)
}
