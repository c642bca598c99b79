//! Explicit cointerval edge coverings of `complement(M_2(g))` built from an
//! edge clique cover of the complement of `g` and the focal vertices of `g`.

use crate::bounds::CliqueCover;
use crate::engine::{CointervalCover, Verdict};
use crate::error::{invalid, Error, Result};
use crate::generators::{mycielski, Family, MycielskiLayout};
use crate::graph::{EdgeSet, Graph, VertexSet};

/// Ingredients of the covering: the cliques `A_1..A_theta` of the complement
/// and the focal vertices `J = {v_1..v_l}` in increasing id order.
#[derive(Clone, Debug)]
pub struct ConstructionPlan {
    base: Graph,
    m2: Graph,
    layout: MycielskiLayout,
    cliques: CliqueCover,
    focal: Vec<usize>,
}

impl ConstructionPlan {
    pub fn new(g: &Graph, cliques: CliqueCover) -> Result<Self> {
        if cliques.host() != &g.complement() {
            return Err(invalid("clique cover is not over the complement of the graph"));
        }
        if let Verdict::Reject(why) = cliques.verify() {
            return Err(invalid(format!("clique cover does not verify: {why}")));
        }
        let focal = g.focal_vertices();
        let covered = cliques.cliques().iter().fold(focal, |acc, &a| acc.union(a));
        if covered != g.vertices() {
            return Err(Error::HardFault("vertices outside every clique and not focal".into()));
        }
        let (m2, layout) = mycielski(g, 2)?;
        Ok(ConstructionPlan {
            base: g.clone(),
            m2,
            layout,
            cliques,
            focal: focal.to_vec(),
        })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn layout(&self) -> MycielskiLayout {
        self.layout
    }

    pub fn clique_cover(&self) -> &CliqueCover {
        &self.cliques
    }

    pub fn focal(&self) -> &[usize] {
        &self.focal
    }

    /// Number of parts the covering will have.
    pub fn part_count(&self) -> usize {
        let l = self.focal.len();
        self.cliques.len() + l.div_ceil(2) + crate::bounds::needs_extra_part(l) as usize
    }

    pub fn build(&self) -> Result<CointervalCover> {
        let host = self.m2.complement();
        let mut parts: Vec<EdgeSet> = self.cliques.cliques().iter().map(|&a| self.clique_part(&host, a)).collect();
        parts.extend(focal_parts(&host, self.layout, &self.focal));
        let cover = CointervalCover::new(host, parts)?;
        if let Verdict::Reject(why) = cover.check() {
            return Err(Error::HardFault(format!("constructed cover failed: {why}")));
        }
        Ok(cover)
    }

    // H_i minus E_i and F_i: the complement of M_2(g) on (A_i)_1, V(G)_2 and z,
    // dropping edges inside V(G)_2 - (A_i)_2 and edges from (A_i)_1 into it.
    fn clique_part(&self, host: &Graph, a: VertexSet) -> EdgeSet {
        let l = self.layout;
        let a1 = l.copies_of(1, a);
        let outside = l.copy_set(2).difference(l.copies_of(2, a));
        let s = a1.union(l.copy_set(2)).with(l.apex());
        let induced = EdgeSet::induced(host, s);
        let kept = induced.edges().iter().copied().filter(|&(u, v)| {
            let e = outside.contains(u) && outside.contains(v);
            let f = (a1.contains(u) && outside.contains(v)) || (a1.contains(v) && outside.contains(u));
            !e && !f
        });
        EdgeSet::new(host.n(), kept).expect("edges come from the host")
    }
}

// G_0 on {z, (v_l)_2} and J_1; G_i on {(v_{2i-1})_1, (v_{2i})_1} and J_2 for
// i < ceil(l/2); the last pair part only when l is even.
fn focal_parts(host: &Graph, layout: MycielskiLayout, focal: &[usize]) -> Vec<EdgeSet> {
    let l = focal.len();
    if l == 0 {
        return Vec::new();
    }
    let v = |i: usize| focal[i - 1];
    let set: VertexSet = focal.iter().copied().collect();
    let (j1, j2) = (layout.copies_of(1, set), layout.copies_of(2, set));
    let mut supports = vec![j1.with(layout.apex()).with(layout.copy(2, v(l)))];
    let pairs = if l.is_multiple_of(2) { l / 2 } else { l.div_ceil(2) - 1 };
    for i in 1..=pairs {
        supports.push(j2.with(layout.copy(1, v(2 * i - 1))).with(layout.copy(1, v(2 * i))));
    }
    supports.into_iter().map(|s| EdgeSet::induced(host, s)).collect()
}

/// The covering of `complement(M_2(g))` with `theta + ceil(l/2)` parts, plus
/// one when `l` is even and positive.
pub fn thm42_cover(g: &Graph, cliques: &CliqueCover) -> Result<CointervalCover> {
    ConstructionPlan::new(g, cliques.clone())?.build()
}

/// The covering of `complement(M_2(K_n))`: `ceil(n/2)` parts for odd `n`,
/// `ceil(n/2) + 1` for even `n`.
pub fn lemma41_cover(n: usize) -> Result<CointervalCover> {
    if n < 2 {
        return Err(invalid(format!("the complete-graph covering needs n >= 2, got {n}")));
    }
    let kn = Family::Complete(n).build()?;
    thm42_cover(&kn, &CliqueCover::new(kn.complement(), Vec::new()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::edge_clique_cover;
    use crate::engine::verify_cointerval_cover;

    fn fam(s: &str) -> Graph {
        s.parse::<Family>().unwrap().build().unwrap()
    }

    fn check(g: &Graph) -> usize {
        let (_, cc) = edge_clique_cover(&g.complement()).unwrap();
        let plan = ConstructionPlan::new(g, cc.clone()).unwrap();
        let cover = thm42_cover(g, &cc).unwrap();
        let (m2, _) = mycielski(g, 2).unwrap();
        assert!(verify_cointerval_cover(&m2, &cover).unwrap().is_accept());
        assert_eq!(cover.len(), plan.part_count());
        cover.len()
    }

    #[test]
    fn lemma41_counts() {
        for (n, k) in [(2, 2), (3, 2), (4, 3), (5, 3), (6, 4)] {
            let cover = lemma41_cover(n).unwrap();
            assert_eq!(cover.len(), k, "n = {n}");
            assert!(cover.check().is_accept());
        }
        assert!(lemma41_cover(1).is_err());
    }

    #[test]
    fn lemma41_n2_by_hand() {
        // M_2(K_2) is C_5: 0-1, 0-3, 1-2, 2-4, 3-4. Its complement has 5 edges.
        let cover = lemma41_cover(2).unwrap();
        assert_eq!(cover.host().edge_count(), 5);
        // G_0 on {z=4, (v_2)_2=3, 0, 1}; G_1 on {0, 1, 2, 3}
        let lines: Vec<String> = cover.parts().iter().map(|p| p.to_line()).collect();
        assert_eq!(lines, ["0-2 1-3 2-3", "0-4 1-3 1-4"]);
    }

    #[test]
    fn clique_cover_examples() {
        assert_eq!(check(&fam("cycle:4")), 2);
        assert_eq!(check(&fam("star:3")), 2);
        assert_eq!(check(&fam("complete:4")), 3);
        let k4 = fam("complete:4");
        let direct = thm42_cover(&k4, &CliqueCover::new(k4.complement(), vec![])).unwrap();
        assert_eq!(direct, lemma41_cover(4).unwrap());
    }

    #[test]
    fn connected_corpus() {
        for g in crate::corpus::connected_graphs_up_to(5) {
            check(&g);
        }
    }

    #[test]
    fn rejects_foreign_clique_cover() {
        let c4 = fam("cycle:4");
        let wrong = CliqueCover::new(c4.clone(), vec![]);
        assert!(thm42_cover(&c4, &wrong).is_err());
    }
}
