//! Independent reference implementations used by the integration tests.
//! Everything here works from the plain adjacency relation and shares no
//! code with the library's flow, enumeration or canonical-labeling paths.

#![allow(dead_code)]

use mincut_core::experiments::gnp;
use mincut_core::Graph;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Number of edges between `mask` and its complement.
pub fn cut_size(g: &Graph, mask: u64) -> usize {
    g.edge_pairs()
        .iter()
        .filter(|&&(u, v)| (mask >> u & 1) != (mask >> v & 1))
        .count()
}

/// λ and every minimum cut, by checking all `2^(n-1) - 1` bipartitions
/// with vertex 0 on side A. Sides are returned as side-A masks, sorted.
/// A connected graph is assumed; `n ≤ 20`.
pub fn brute_mincuts(g: &Graph) -> (usize, Vec<u64>) {
    let n = g.order();
    assert!((2..=20).contains(&n));
    let full = (1u64 << n) - 1;
    let mut best = usize::MAX;
    let mut cuts = Vec::new();
    // bit 0 always set: masks are 1 | (rest << 1)
    for rest in 0..(1u64 << (n - 1)) {
        let mask = 1 | rest << 1;
        if mask == full {
            continue;
        }
        let c = cut_size(g, mask);
        if c < best {
            best = c;
            cuts.clear();
        }
        if c == best {
            cuts.push(mask);
        }
    }
    cuts.sort_unstable();
    (best, cuts)
}

/// Intersection graph of the brute-force cut family: cuts are adjacent
/// when they share an edge.
pub fn brute_mincut_graph(g: &Graph) -> Graph {
    let (_, cuts) = brute_mincuts(g);
    let edge_sets: Vec<Vec<(usize, usize)>> = cuts
        .iter()
        .map(|&m| {
            g.edge_pairs()
                .into_iter()
                .filter(|&(u, v)| (m >> u & 1) != (m >> v & 1))
                .collect()
        })
        .collect();
    let mut pairs = Vec::new();
    for i in 0..cuts.len() {
        for j in i + 1..cuts.len() {
            if edge_sets[i].iter().any(|e| edge_sets[j].contains(e)) {
                pairs.push((i, j));
            }
        }
    }
    Graph::from_edge_list(cuts.len(), &pairs).unwrap()
}

/// Backtracking isomorphism test: extend a partial vertex map one vertex
/// at a time, keeping adjacency with all mapped vertices consistent.
pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    if n != h.order() || g.size() != h.size() {
        return false;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(g, h, 0, &mut map, &mut used)
}

fn extend(g: &Graph, h: &Graph, v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    if v == g.order() {
        return true;
    }
    for w in 0..h.order() {
        if used[w] || g.degree(v) != h.degree(w) {
            continue;
        }
        if (0..v).any(|u| g.has_edge(u, v) != h.has_edge(map[u], w)) {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(g, h, v + 1, map, used) {
            return true;
        }
        used[w] = false;
    }
    map[v] = usize::MAX;
    false
}

/// A connected G(n, p) sample with `n` uniform in `n_lo..=n_hi` and `p`
/// uniform in `[0.15, 0.9)`, redrawn until connected.
pub fn random_connected(rng: &mut ChaCha8Rng, n_lo: usize, n_hi: usize) -> Graph {
    let n = rng.random_range(n_lo..=n_hi);
    let p = rng.random_range(0.15..0.9);
    loop {
        let g = gnp(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
}

pub fn binomial2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}
