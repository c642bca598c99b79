//! Exact boxicity through minimum cointerval edge coverings of the complement.
//!
//! `box(G) <= k` exactly when the edges of the complement of `G` can be covered
//! by `k` spanning subgraphs that are each cointerval. The engine computes the
//! minimum such `k`:
//!
//! 1. `box = 0` when the complement is edgeless, `box = 1` when `G` is interval.
//! 2. Otherwise the complement is split into its connected components. A part
//!    holding edges from two components would contain an induced `2K_2`, which
//!    no cointerval graph has, so each component is covered on its own.
//! 3. Per component: scan every edge subset for cointervality, keep the
//!    inclusion-maximal ones (any part of a cover can be swapped for a maximal
//!    superset), and solve minimum set cover over the component's edges.
//!
//! Every result carries its cover and the derived box representation, both
//! re-verified before returning.

mod boxrep;
mod cover;
mod family;
mod lower;
mod scan;
pub mod setcover;

pub use boxrep::{cover_to_box_representation, verify_box_representation, BoxRep};
pub use cover::{verify_cointerval_cover, CointervalCover, Verdict};
pub use family::{maximal_cointerval_family, DEFAULT_EDGE_CAP};
pub use lower::{matching_lower_bound, pair_lower_bound, MatchingBound, MATCHING_EXACT_MAX_N};
pub use scan::HARD_EDGE_LIMIT;

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph};
use crate::interval::is_interval;

use family::{check_cap, scan};
use scan::{bit_positions, HostEdges};
use setcover::min_set_cover;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EngineConfig {
    /// Largest complement component (in edges) the exhaustive subset scan accepts.
    pub max_complement_edges: usize,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            max_complement_edges: DEFAULT_EDGE_CAP,
        }
    }
}

impl EngineConfig {
    pub fn with_cap(max_complement_edges: usize) -> Self {
        EngineConfig { max_complement_edges }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Set-cover search nodes, summed over components.
    pub nodes: u64,
    /// Maximal cointerval parts, summed over components.
    pub family_size: usize,
    /// Edge subsets tested for cointervality.
    pub subsets_scanned: u64,
    pub cointerval_subsets: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxicityResult {
    pub value: usize,
    pub certificate: CointervalCover,
    pub box_rep: BoxRep,
    pub stats: SearchStats,
}

pub fn exact_boxicity(g: &Graph, cfg: &EngineConfig) -> Result<BoxicityResult> {
    let host = g.complement();
    let mut stats = SearchStats::default();
    let parts: Vec<EdgeSet> = if host.edge_count() == 0 {
        Vec::new()
    } else if is_interval(g)?.is_interval() {
        vec![host.edge_set()]
    } else {
        let mut parts = Vec::new();
        for comp in host.components() {
            let edges: Vec<_> = EdgeSet::induced(&host, comp).edges().to_vec();
            if edges.is_empty() {
                continue;
            }
            parts.extend(cover_component(&host, edges, cfg, &mut stats)?);
        }
        parts
    };
    let certificate = CointervalCover::new(host, parts)?;
    if let Verdict::Reject(why) = verify_cointerval_cover(g, &certificate)? {
        return Err(Error::HardFault(format!("engine cover failed verification: {why}")));
    }
    let box_rep = cover_to_box_representation(g, &certificate)?;
    if let Verdict::Reject(why) = verify_box_representation(g, &box_rep) {
        return Err(Error::HardFault(format!("derived boxes failed verification: {why}")));
    }
    Ok(BoxicityResult {
        value: certificate.len(),
        certificate,
        box_rep,
        stats,
    })
}

/// Minimum cointerval cover of one connected component of the complement.
fn cover_component(
    host: &Graph,
    edges: Vec<(usize, usize)>,
    cfg: &EngineConfig,
    stats: &mut SearchStats,
) -> Result<Vec<EdgeSet>> {
    let whole = EdgeSet::new(host.n(), edges.iter().copied())?;
    if crate::interval::is_cointerval(&Graph::spanning(&whole))? {
        return Ok(vec![whole]);
    }
    check_cap(edges.len(), cfg.max_complement_edges)?;
    let m = edges.len();
    let family = scan(HostEdges::new(host.n(), edges));
    stats.subsets_scanned += 1 << m;
    stats.cointerval_subsets += family.cointerval_subsets;
    stats.family_size += family.maximal.len();
    let universe = (1u64 << m) - 1;
    let sets: Vec<u64> = family.maximal.iter().map(|&s| s as u64).collect();
    let cover = min_set_cover(universe, &sets)
        .ok_or_else(|| Error::HardFault("single edges are cointerval, so a cover must exist".into()))?;
    stats.nodes += cover.nodes;
    cover
        .chosen
        .iter()
        .map(|&i| {
            EdgeSet::new(
                host.n(),
                bit_positions(family.maximal[i]).map(|e| family.host.edges()[e]),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{independent_clique_matching, mycielski, Family};

    fn boxicity(g: &Graph) -> usize {
        exact_boxicity(g, &EngineConfig::default()).unwrap().value
    }

    fn fam(s: &str) -> Graph {
        s.parse::<Family>().unwrap().build().unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(boxicity(&fam("complete:7")), 0);
        assert_eq!(boxicity(&fam("path:5")), 1);
        assert_eq!(boxicity(&fam("cycle:4")), 2);
        assert_eq!(boxicity(&fam("cycle:5")), 2);
        assert_eq!(boxicity(&fam("multipartite:2,2,2")), 3);
        assert_eq!(boxicity(&Graph::empty(1).unwrap()), 0);
        assert_eq!(boxicity(&Graph::empty(3).unwrap()), 1);
    }

    #[test]
    fn complement_of_matching_graph() {
        let g = independent_clique_matching(3).unwrap().complement();
        assert_eq!(boxicity(&g), 2);
    }

    #[test]
    fn results_carry_verified_certificates() {
        let g = fam("cycle:4");
        let r = exact_boxicity(&g, &EngineConfig::default()).unwrap();
        assert_eq!(r.certificate.len(), 2);
        assert_eq!(r.box_rep.dim(), 2);
        assert!(verify_cointerval_cover(&g, &r.certificate).unwrap().is_accept());
        assert!(verify_box_representation(&g, &r.box_rep).is_accept());
        let k = exact_boxicity(&fam("complete:3"), &EngineConfig::default()).unwrap();
        assert_eq!((k.value, k.box_rep.dim()), (0, 1));
    }

    #[test]
    fn cap_applies_to_scanned_components() {
        let (m, _) = mycielski(&fam("cycle:4"), 2).unwrap();
        let err = exact_boxicity(&m, &EngineConfig::with_cap(19)).unwrap_err();
        assert!(matches!(err, Error::Capacity { actual: 20, .. }), "{err}");
    }
}
