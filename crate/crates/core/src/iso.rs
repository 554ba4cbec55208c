//! Canonical labeling and isomorphism testing for small graphs.
//!
//! The search is the classic individualization-refinement scheme: refine
//! the ordered partition to an equitable one, pick the first largest
//! non-singleton cell, individualize each of its vertices in turn and
//! recurse. Every discrete leaf gives a relabeling of the graph; the
//! canonical code is the least upper-triangle bit string over all leaves.
//!
//! Subtrees that are images of an explored sibling under a known
//! automorphism fixing the current path are skipped. Known automorphisms
//! come from twin transpositions (vertices with equal open neighborhoods
//! modulo each other) and from pairs of leaves with identical codes.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default vertex budget for canonical labeling.
pub const DEFAULT_BUDGET: usize = 64;

/// Isomorphism-class key: `n` as a big-endian `u16`, then the canonically
/// relabeled upper triangle, row-major, packed MSB-first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        let bytes = hex::decode(s).map_err(|e| Error::Parse {
            line: 1,
            msg: e.to_string(),
        })?;
        let code = CanonicalCode(bytes);
        // validate by decoding
        code.try_graph()?;
        Ok(code)
    }

    pub fn order(&self) -> usize {
        u16::from_be_bytes([self.0[0], self.0[1]]) as usize
    }

    fn try_graph(&self) -> Result<Graph> {
        let bad = |msg: &str| Error::Parse {
            line: 1,
            msg: msg.to_string(),
        };
        if self.0.len() < 2 {
            return Err(bad("canonical code too short"));
        }
        let n = self.order();
        let bits = n * n.saturating_sub(1) / 2;
        if self.0.len() != 2 + bits.div_ceil(8) {
            return Err(bad("canonical code length does not match its order"));
        }
        let mut g = Graph::empty(n);
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.0[2 + k / 8] >> (7 - k % 8) & 1 == 1 {
                    g.add_edge_unchecked(i, j);
                }
                k += 1;
            }
        }
        Ok(g)
    }

    /// The canonical representative of the isomorphism class.
    pub fn to_graph(&self) -> Graph {
        self.try_graph()
            .expect("codes are validated on construction")
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

impl<'de> Deserialize<'de> for CanonicalCode {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        CanonicalCode::from_hex(&s).map_err(serde::de::Error::custom)
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalCode> {
    canonical_form_with_budget(g, DEFAULT_BUDGET)
}

pub fn canonical_form_with_budget(g: &Graph, budget: usize) -> Result<CanonicalCode> {
    canonical_labeling(g, budget).map(|(code, _)| code)
}

/// Canonical code plus the labeling that produces it (`perm[old] = new`),
/// so that `g.relabel(&perm) == code.to_graph()`.
pub fn canonical_labeling(g: &Graph, budget: usize) -> Result<(CanonicalCode, Vec<usize>)> {
    let n = g.order();
    if n > budget || n > u16::MAX as usize {
        return Err(Error::TooLarge { n, budget });
    }
    let mut search = Search::new(g);
    let cells = vec![(0..n).collect::<Vec<_>>()];
    let mut path = Vec::new();
    search.descend(cells, &mut path);
    let (code, order) = search.best.expect("the search tree has at least one leaf");
    let mut perm = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    Ok((CanonicalCode(code), perm))
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    are_isomorphic_with_budget(g, h, DEFAULT_BUDGET)
}

pub fn are_isomorphic_with_budget(g: &Graph, h: &Graph, budget: usize) -> Result<bool> {
    for x in [g, h] {
        if x.order() > budget {
            return Err(Error::TooLarge {
                n: x.order(),
                budget,
            });
        }
    }
    if g.order() != h.order() || g.size() != h.size() {
        return Ok(false);
    }
    let (mut dg, mut dh) = (g.degrees(), h.degrees());
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(false);
    }
    Ok(canonical_form_with_budget(g, budget)? == canonical_form_with_budget(h, budget)?)
}

type Leaf = (Vec<u8>, Vec<usize>);

struct Search {
    n: usize,
    nbrs: Vec<Vec<usize>>,
    matrix: Vec<bool>,
    automorphisms: Vec<Vec<usize>>,
    first: Option<Leaf>,
    best: Option<Leaf>,
}

impl Search {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        let nbrs: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
        let mut matrix = vec![false; n * n];
        for e in g.edges() {
            matrix[e.u * n + e.v] = true;
            matrix[e.v * n + e.u] = true;
        }
        let mut s = Search {
            n,
            nbrs,
            matrix,
            automorphisms: Vec::new(),
            first: None,
            best: None,
        };
        s.add_twin_transpositions();
        s
    }

    fn adjacent(&self, a: usize, b: usize) -> bool {
        self.matrix[a * self.n + b]
    }

    fn add_twin_transpositions(&mut self) {
        let n = self.n;
        for u in 0..n {
            for w in u + 1..n {
                let twins = (0..n)
                    .filter(|&x| x != u && x != w)
                    .all(|x| self.adjacent(u, x) == self.adjacent(w, x));
                if twins {
                    let mut perm: Vec<usize> = (0..n).collect();
                    perm.swap(u, w);
                    self.automorphisms.push(perm);
                }
            }
        }
    }

    /// Splits cells by neighbor counts into every cell until stable. Each
    /// old cell is replaced by its fragments in increasing signature order,
    /// which keeps the procedure label-invariant.
    fn refine(&self, cells: &mut Vec<Vec<usize>>) {
        let mut cell_of = vec![0usize; self.n];
        loop {
            let k = cells.len();
            for (i, cell) in cells.iter().enumerate() {
                for &v in cell {
                    cell_of[v] = i;
                }
            }
            let mut next = Vec::with_capacity(k);
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<u32>, usize)> = cell
                    .iter()
                    .map(|&v| {
                        let mut sig = vec![0u32; k];
                        for &w in &self.nbrs[v] {
                            sig[cell_of[w]] += 1;
                        }
                        (sig, v)
                    })
                    .collect();
                keyed.sort();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                        start = i;
                    }
                }
            }
            let stable = next.len() == k;
            *cells = next;
            if stable {
                return;
            }
        }
    }

    fn descend(&mut self, mut cells: Vec<Vec<usize>>, path: &mut Vec<usize>) {
        self.refine(&mut cells);
        let target = {
            let max = cells.iter().map(Vec::len).max().unwrap_or(0);
            if max <= 1 {
                self.leaf(&cells);
                return;
            }
            cells.iter().position(|c| c.len() == max).unwrap()
        };
        let mut members = cells[target].clone();
        members.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        let mut orbits = UnionFind::new(self.n);
        let mut applied = 0;
        for &w in &members {
            if !explored.is_empty() {
                applied = self.merge_orbits(&mut orbits, path, applied);
                if explored.iter().any(|&u| orbits.same(u, w)) {
                    continue;
                }
            }
            explored.push(w);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![w]);
            child.push(cells[target].iter().copied().filter(|&x| x != w).collect());
            child.extend_from_slice(&cells[target + 1..]);
            path.push(w);
            self.descend(child, path);
            path.pop();
        }
    }

    /// Folds the automorphisms stored since index `from` that fix `path`
    /// pointwise into `orbits`; returns the new high-water mark.
    fn merge_orbits(&self, orbits: &mut UnionFind, path: &[usize], from: usize) -> usize {
        for gamma in &self.automorphisms[from..] {
            if path.iter().all(|&p| gamma[p] == p) {
                for (v, &img) in gamma.iter().enumerate() {
                    orbits.union(v, img);
                }
            }
        }
        self.automorphisms.len()
    }

    fn leaf(&mut self, cells: &[Vec<usize>]) {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let code = self.encode(&order);
        let Some(first_order) = self.first.as_ref().map(|f| f.1.clone()) else {
            self.first = Some((code.clone(), order.clone()));
            self.best = Some((code, order));
            return;
        };
        if code == self.first.as_ref().unwrap().0 {
            self.record_automorphism(&first_order, &order);
        }
        let best = self.best.as_ref().unwrap();
        match code.cmp(&best.0) {
            std::cmp::Ordering::Less => self.best = Some((code, order)),
            std::cmp::Ordering::Equal => {
                let best_order = best.1.clone();
                self.record_automorphism(&best_order, &order);
            }
            std::cmp::Ordering::Greater => {}
        }
    }

    fn record_automorphism(&mut self, from: &[usize], to: &[usize]) {
        let mut gamma = vec![0; self.n];
        for (&a, &b) in from.iter().zip(to) {
            gamma[a] = b;
        }
        if gamma.iter().enumerate().any(|(v, &img)| v != img)
            && !self.automorphisms.contains(&gamma)
        {
            self.automorphisms.push(gamma);
        }
    }

    fn encode(&self, order: &[usize]) -> Vec<u8> {
        let n = self.n;
        let bits = n * n.saturating_sub(1) / 2;
        let mut out = Vec::with_capacity(2 + bits.div_ceil(8));
        out.extend_from_slice(&(n as u16).to_be_bytes());
        let mut acc = 0u8;
        let mut filled = 0;
        for i in 0..n {
            for j in i + 1..n {
                acc = (acc << 1) | self.adjacent(order[i], order[j]) as u8;
                filled += 1;
                if filled == 8 {
                    out.push(acc);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push(acc << (8 - filled));
        }
        out
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }
}
