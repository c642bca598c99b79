//! Lower bounds on boxicity that avoid the full cover search.

use crate::error::{invalid, Error, Result};
use crate::graph::{Distance, Graph, VertexSet};

use super::{exact_boxicity, EngineConfig};

/// Graphs up to this order get an exact matching search; larger ones a greedy one.
pub const MATCHING_EXACT_MAX_N: usize = 14;

/// `ceil(pairs / 2)` for the largest family of pairs `a_i b_i` found in the
/// complement whose sides `S_1 = {a_i}` and `S_2 = {b_i}` are disjoint and joined
/// in the complement by exactly the edges `a_i b_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingBound {
    pub value: usize,
    pub pairs: Vec<(usize, usize)>,
    /// False when the greedy search was used (the value is still a valid bound).
    pub exact: bool,
}

pub fn matching_lower_bound(g: &Graph) -> MatchingBound {
    let co = g.complement();
    let arcs: Vec<(usize, usize)> = co.edges().flat_map(|(u, v)| [(u, v), (v, u)]).collect();
    let fits = |p: (usize, usize), q: (usize, usize)| {
        let distinct = [p.0, p.1, q.0, q.1].into_iter().collect::<VertexSet>().len() == 4;
        distinct && !co.has_edge(p.0, q.1) && !co.has_edge(q.0, p.1)
    };
    let exact = g.n() <= MATCHING_EXACT_MAX_N;
    let chosen = if exact {
        let mut best = Vec::new();
        let mut current = Vec::new();
        let all: Vec<usize> = (0..arcs.len()).collect();
        grow(&arcs, &fits, &mut current, &all, g.n() / 2, &mut best);
        best
    } else {
        let mut picked: Vec<usize> = Vec::new();
        for i in 0..arcs.len() {
            if picked.iter().all(|&j| fits(arcs[i], arcs[j])) {
                picked.push(i);
            }
        }
        picked
    };
    let pairs: Vec<_> = chosen.iter().map(|&i| arcs[i]).collect();
    MatchingBound {
        value: pairs.len().div_ceil(2),
        pairs,
        exact,
    }
}

fn grow(
    arcs: &[(usize, usize)],
    fits: &impl Fn((usize, usize), (usize, usize)) -> bool,
    current: &mut Vec<usize>,
    candidates: &[usize],
    ceiling: usize,
    best: &mut Vec<usize>,
) {
    if current.len() > best.len() {
        *best = current.clone();
    }
    if best.len() == ceiling {
        return;
    }
    let free: VertexSet = candidates.iter().flat_map(|&i| [arcs[i].0, arcs[i].1]).collect();
    if current.len() + candidates.len().min(free.len() / 2) <= best.len() {
        return;
    }
    for (k, &i) in candidates.iter().enumerate() {
        let rest: Vec<usize> = candidates[k + 1..]
            .iter()
            .copied()
            .filter(|&j| fits(arcs[i], arcs[j]))
            .collect();
        current.push(i);
        grow(arcs, fits, current, &rest, ceiling, best);
        current.pop();
        if best.len() == ceiling || current.len() + candidates.len() - k - 1 <= best.len() {
            return;
        }
    }
}

/// `box(g[h1]) + box(g[h2])` for vertex sets whose induced subgraphs of the
/// complement are at distance at least 2 there.
pub fn pair_lower_bound(g: &Graph, h1: VertexSet, h2: VertexSet, cfg: &EngineConfig) -> Result<usize> {
    if h1.is_empty() || h2.is_empty() {
        return Err(invalid("both vertex sets must be nonempty"));
    }
    if !h1.intersection(h2).is_empty() {
        return Err(invalid("vertex sets must be disjoint"));
    }
    let d = g.complement().subgraph_distance(h1, h2)?;
    if d < Distance::Finite(2) {
        return Err(Error::Precondition(format!(
            "the sets are at distance {d} in the complement; the bound needs at least 2"
        )));
    }
    let part = |h| -> Result<usize> { Ok(exact_boxicity(&g.induced_subgraph(h)?, cfg)?.value) };
    Ok(part(h1)? + part(h2)?)
}
