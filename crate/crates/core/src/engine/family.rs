//! Inclusion-maximal cointerval edge subsets of a host graph.
//!
//! Cointervality is not monotone under adding or removing edges, so partial
//! subsets cannot be pruned: every subset is tested and recorded in a bitmap,
//! and a subset is kept when no single-edge extension is also cointerval.

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph};

use super::scan::{bit_positions, lex_cmp, HostEdges, HARD_EDGE_LIMIT};

/// Default bound on host edges for the exhaustive subset scan.
pub const DEFAULT_EDGE_CAP: usize = 24;

/// Result of a scan, as masks over `host.edges()`.
pub(crate) struct MaskFamily {
    pub(crate) host: HostEdges,
    pub(crate) maximal: Vec<u32>,
    pub(crate) cointerval_subsets: usize,
}

pub(crate) fn check_cap(m: usize, cap: usize) -> Result<()> {
    if m > cap || m > HARD_EDGE_LIMIT {
        return Err(Error::Capacity {
            what: "complement edge count",
            actual: m,
            limit: cap.min(HARD_EDGE_LIMIT),
            flag: "--max-complement-edges",
        });
    }
    Ok(())
}

pub(crate) fn scan(host: HostEdges) -> MaskFamily {
    let m = host.len();
    let total = 1u64 << m;
    let mut ok = vec![0u64; (total as usize).div_ceil(64)];
    let mut count = 0;
    for mask in 0..total {
        if host.is_cointerval(mask as u32) {
            ok[(mask >> 6) as usize] |= 1 << (mask & 63);
            count += 1;
        }
    }
    let is_ok = |mask: u32| ok[(mask >> 6) as usize] >> (mask & 63) & 1 == 1;
    let full = (total - 1) as u32;
    let mut maximal: Vec<u32> = (0..total as u32)
        .filter(|&mask| is_ok(mask))
        .filter(|&mask| bit_positions(full & !mask).all(|e| !is_ok(mask | 1 << e)))
        .collect();
    maximal.sort_by(|&a, &b| lex_cmp(a, b));
    MaskFamily {
        host,
        maximal,
        cointerval_subsets: count,
    }
}

/// All inclusion-maximal edge subsets `S` of `host` for which the spanning
/// subgraph `(V(host), S)` is cointerval, in lexicographic order.
pub fn maximal_cointerval_family(host: &Graph, cap: usize) -> Result<Vec<EdgeSet>> {
    let edges: Vec<_> = host.edges().collect();
    check_cap(edges.len(), cap)?;
    let family = scan(HostEdges::new(host.n(), edges));
    family
        .maximal
        .iter()
        .map(|&mask| {
            EdgeSet::new(
                host.n(),
                bit_positions(mask).map(|i| family.host.edges()[i]),
            )
        })
        .collect()
}
