//! Maximal clique enumeration (Bron–Kerbosch with Tomita pivoting over bitmasks).

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Default bound on the number of maximal cliques a single enumeration may produce.
pub const DEFAULT_CLIQUE_CAP: usize = 4096;

/// All maximal cliques, sorted lexicographically by their ascending member lists.
pub fn maximal_cliques(g: &Graph) -> Result<Vec<VertexSet>> {
    maximal_cliques_capped(g, DEFAULT_CLIQUE_CAP)
}

pub fn maximal_cliques_capped(g: &Graph, cap: usize) -> Result<Vec<VertexSet>> {
    let mut out = Vec::new();
    let mut overflow = false;
    expand(g, VertexSet::empty(), g.vertices(), VertexSet::empty(), cap, &mut out, &mut overflow);
    if overflow {
        return Err(Error::Capacity {
            what: "maximal clique count",
            actual: out.len() + 1,
            limit: cap,
            flag: "clique cap",
        });
    }
    out.sort_unstable_by(|a, b| a.iter().cmp(b.iter()));
    Ok(out)
}

fn expand(
    g: &Graph,
    clique: VertexSet,
    mut candidates: VertexSet,
    mut excluded: VertexSet,
    cap: usize,
    out: &mut Vec<VertexSet>,
    overflow: &mut bool,
) {
    if *overflow {
        return;
    }
    if candidates.is_empty() {
        if excluded.is_empty() {
            if out.len() == cap {
                *overflow = true;
            } else {
                out.push(clique);
            }
        }
        return;
    }
    let pivot = candidates
        .union(excluded)
        .iter()
        .max_by_key(|&u| g.neighbors(u).intersection(candidates).len())
        .expect("nonempty");
    for v in candidates.difference(g.neighbors(pivot)) {
        let nv = g.neighbors(v);
        expand(
            g,
            clique.with(v),
            candidates.intersection(nv),
            excluded.intersection(nv),
            cap,
            out,
            overflow,
        );
        candidates = candidates.without(v);
        excluded = excluded.with(v);
    }
}
