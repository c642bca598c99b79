//! Exhaustive small-graph corpora and brute-force isomorphism.
//!
//! Test utility: graphs are enumerated one vertex at a time and de-duplicated by
//! a canonical adjacency bitstring (the minimum over degree-respecting
//! relabelings). Intended for `n <= 8`.

use std::collections::BTreeMap;

use crate::graph::{Graph, VertexSet};

/// Largest order for which [`graphs_on`] is supported.
pub const MAX_CORPUS_ORDER: usize = 8;

/// Whether some bijection maps the edges of `g` exactly onto those of `h`.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    let mut image = vec![usize::MAX; g.n()];
    extend_bijection(g, h, 0, VertexSet::empty(), &mut image)
}

fn extend_bijection(g: &Graph, h: &Graph, v: usize, taken: VertexSet, image: &mut [usize]) -> bool {
    if v == g.n() {
        return true;
    }
    for w in h.vertices().difference(taken) {
        if h.degree(w) != g.degree(v) {
            continue;
        }
        if (0..v).any(|u| g.has_edge(u, v) != h.has_edge(image[u], w)) {
            continue;
        }
        image[v] = w;
        if extend_bijection(g, h, v + 1, taken.with(w), image) {
            return true;
        }
    }
    false
}

/// Canonical relabeling of `g`: the relabeling (among those that list vertices by
/// nondecreasing degree) whose upper-triangle bitstring is smallest.
pub fn canonical_form(g: &Graph) -> Graph {
    let n = g.n();
    assert!(n <= 11, "canonical_form is brute force; n = {n} is too large");
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| g.degree(v));
    let slot_degree: Vec<usize> = by_degree.iter().map(|&v| g.degree(v)).collect();
    let mut best: Option<(u64, Vec<usize>)> = None;
    let mut order = Vec::with_capacity(n);
    search_labelings(g, &slot_degree, VertexSet::empty(), &mut order, &mut best);
    let (_, order) = best.expect("at least one labeling");
    // order[p] is the vertex that receives label p
    let mut perm = vec![0; n];
    for (p, &v) in order.iter().enumerate() {
        perm[v] = p;
    }
    g.permuted(&perm).expect("order is a permutation")
}

fn search_labelings(
    g: &Graph,
    slot_degree: &[usize],
    used: VertexSet,
    order: &mut Vec<usize>,
    best: &mut Option<(u64, Vec<usize>)>,
) {
    let p = order.len();
    if p == g.n() {
        let key = key_of(g, order);
        if best.as_ref().is_none_or(|(k, _)| key < *k) {
            *best = Some((key, order.clone()));
        }
        return;
    }
    for v in g.vertices().difference(used) {
        if g.degree(v) == slot_degree[p] {
            order.push(v);
            search_labelings(g, slot_degree, used.with(v), order, best);
            order.pop();
        }
    }
}

// Upper triangle in graph6 order, most significant bit first.
fn key_of(g: &Graph, order: &[usize]) -> u64 {
    let mut key = 0u64;
    for j in 1..order.len() {
        for i in 0..j {
            key = key << 1 | g.has_edge(order[i], order[j]) as u64;
        }
    }
    key
}

/// One canonical representative of every isomorphism class of graphs on `n`
/// vertices, sorted by canonical bitstring.
pub fn graphs_on(n: usize) -> Vec<Graph> {
    assert!((1..=MAX_CORPUS_ORDER).contains(&n), "corpus order must be in 1..={MAX_CORPUS_ORDER}");
    let mut level = vec![Graph::empty(1).expect("K_1")];
    for k in 2..=n {
        let mut next: BTreeMap<u64, Graph> = BTreeMap::new();
        for g in &level {
            for mask in 0u64..1 << (k - 1) {
                let edges = g
                    .edges()
                    .chain(VertexSet::from_bits(mask).iter().map(|u| (u, k - 1)))
                    .collect::<Vec<_>>();
                let h = canonical_form(&Graph::from_edges(k, edges).expect("valid edges"));
                let ident: Vec<usize> = (0..k).collect();
                next.entry(key_of(&h, &ident)).or_insert(h);
            }
        }
        level = next.into_values().collect();
    }
    level
}

/// Every isomorphism class on `1..=max_n` vertices, ordered by `n`.
pub fn graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(graphs_on).collect()
}

pub fn connected_graphs_up_to(max_n: usize) -> Vec<Graph> {
    graphs_up_to(max_n).into_iter().filter(Graph::is_connected).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::Family;

    #[test]
    fn class_counts_match_known_sequence() {
        let counts: Vec<usize> = (1..=6).map(|n| graphs_on(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
        let connected = (1..=6)
            .map(|n| graphs_on(n).into_iter().filter(Graph::is_connected).count())
            .collect::<Vec<_>>();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn isomorphism_brute_force() {
        let p4 = Family::Path(4).build().unwrap();
        assert!(is_isomorphic(&p4.complement(), &p4));
        let c4 = Family::Cycle(4).build().unwrap();
        assert!(!is_isomorphic(&c4, &Family::Star(3).build().unwrap()));
        let relabeled = c4.permuted(&[2, 0, 3, 1]).unwrap();
        assert!(is_isomorphic(&c4, &relabeled));
        assert_eq!(canonical_form(&c4), canonical_form(&relabeled));
    }

    #[test]
    fn canonical_forms_are_isomorphic_to_input() {
        for g in graphs_on(5) {
            let shuffled = g.permuted(&[3, 1, 4, 0, 2]).unwrap();
            assert!(is_isomorphic(&g, &shuffled));
            assert_eq!(canonical_form(&shuffled), g);
        }
    }
}
