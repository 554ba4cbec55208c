//! Exhaustive catalogs of small connected graphs.

use std::collections::BTreeMap;

use crate::graph::Graph;
use crate::iso::{self, CanonicalCode};

/// Vertex pairs `(a, b)`, `a < b`, in lexicographic order.
fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect()
}

/// Every labeled connected graph on `n` vertices, in order of the edge
/// subset bitmask over [`vertex_pairs`]. Intended for `n ≤ 7`.
pub fn labeled_connected(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 8, "labeled enumeration is only practical for n <= 8");
    let pairs = vertex_pairs(n);
    let subsets = 1u64 << pairs.len();
    (0..subsets).filter_map(move |subset| {
        let mut adj = vec![0u64; n];
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if subset >> i & 1 == 1 {
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
            }
        }
        let full = (1u64 << n) - 1;
        if n == 0 || !crate::mincut::is_connected_within(&adj, full) {
            return None;
        }
        let mut g = Graph::empty(n);
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if subset >> i & 1 == 1 {
                g.add_edge_unchecked(a, b);
            }
        }
        Some(g)
    })
}

/// One canonical representative per isomorphism class of connected graphs
/// on `n ≥ 1` vertices, sorted by canonical code.
///
/// Built by augmentation: every connected graph has a vertex whose removal
/// leaves it connected, so each class arises from a class on `n − 1`
/// vertices plus a new vertex joined to a non-empty subset.
pub fn connected_classes(n: usize) -> Vec<(CanonicalCode, Graph)> {
    assert!(n >= 1);
    let mut level: BTreeMap<CanonicalCode, Graph> = BTreeMap::new();
    let k1 = Graph::empty(1);
    level.insert(iso::canonical_form(&k1).unwrap(), k1);
    for k in 2..=n {
        let mut next = BTreeMap::new();
        for g in level.values() {
            for subset in 1u64..(1 << (k - 1)) {
                let mut h = g.disjoint_union(&Graph::empty(1));
                for v in 0..k - 1 {
                    if subset >> v & 1 == 1 {
                        h.add_edge_unchecked(v, k - 1);
                    }
                }
                let code = iso::canonical_form(&h).expect("small graphs fit the budget");
                next.entry(code).or_insert_with_key(|c| c.to_graph());
            }
        }
        level = next;
    }
    level.into_iter().collect()
}

/// Labeled connected graphs deduplicated by canonical code; the
/// independent route to [`connected_classes`].
pub fn labeled_classes(n: usize) -> Vec<(CanonicalCode, Graph)> {
    let mut classes = BTreeMap::new();
    for g in labeled_connected(n) {
        let code = iso::canonical_form(&g).expect("small graphs fit the budget");
        classes.entry(code).or_insert_with_key(|c| c.to_graph());
    }
    classes.into_iter().collect()
}
