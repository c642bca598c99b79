use crate::cliques::maximal_cliques;
use crate::engine::setcover::min_set_cover;
use crate::engine::Verdict;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Default bound on the edge count accepted by [`edge_clique_cover`].
pub const DEFAULT_CLIQUE_COVER_CAP: usize = 40;

/// Cliques of `host` meant to cover every edge of `host`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueCover {
    host: Graph,
    cliques: Vec<VertexSet>,
}

impl CliqueCover {
    pub fn new(host: Graph, cliques: Vec<VertexSet>) -> Self {
        CliqueCover { host, cliques }
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn cliques(&self) -> &[VertexSet] {
        &self.cliques
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn verify(&self) -> Verdict {
        if let Some((i, c)) = self
            .cliques
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_subset(self.host.vertices()) || !self.host.is_clique(**c))
        {
            return Verdict::Reject(format!("set {i} = {c:?} is not a clique of the host"));
        }
        match self
            .host
            .edges()
            .find(|&(u, v)| !self.cliques.iter().any(|c| c.contains(u) && c.contains(v)))
        {
            Some((u, v)) => Verdict::Reject(format!("edge {u}-{v} is not covered")),
            None => Verdict::Accept,
        }
    }
}

/// Minimum number of cliques covering every edge of `g`, with one optimal cover.
pub fn edge_clique_cover(g: &Graph) -> Result<(usize, CliqueCover)> {
    edge_clique_cover_capped(g, DEFAULT_CLIQUE_COVER_CAP)
}

pub fn edge_clique_cover_capped(g: &Graph, cap: usize) -> Result<(usize, CliqueCover)> {
    let edges: Vec<_> = g.edges().collect();
    if edges.len() > cap.min(64) {
        return Err(Error::Capacity {
            what: "edge count for clique cover",
            actual: edges.len(),
            limit: cap.min(64),
            flag: "clique cover cap",
        });
    }
    let cliques: Vec<VertexSet> = maximal_cliques(g)?
        .into_iter()
        .filter(|c| c.len() >= 2)
        .collect();
    let masks: Vec<u64> = cliques
        .iter()
        .map(|c| {
            edges
                .iter()
                .enumerate()
                .filter(|(_, &(u, v))| c.contains(u) && c.contains(v))
                .fold(0u64, |m, (i, _)| m | 1 << i)
        })
        .collect();
    let universe = if edges.len() == 64 { u64::MAX } else { (1u64 << edges.len()) - 1 };
    let chosen = min_set_cover(universe, &masks)
        .expect("maximal cliques cover every edge")
        .chosen;
    let mut picked: Vec<VertexSet> = chosen.into_iter().map(|i| cliques[i]).collect();
    picked.sort_unstable_by(|a, b| a.iter().cmp(b.iter()));
    Ok((picked.len(), CliqueCover::new(g.clone(), picked)))
}
