//! Named graph families, the generalized Mycielski construction and focalization.

use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, VertexSet};

/// A graph family descriptor.
///
/// Text form (also accepted by the CLI):
/// `complete:N | empty:N | path:N | cycle:N | star:N | multipartite:N1,N2,...
///  | mycielski:<spec>:R | focalize:<spec>:T`
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    Empty(usize),
    Path(usize),
    Cycle(usize),
    /// `K_{1,n}`: center 0, leaves `1..=n`.
    Star(usize),
    /// Parts occupy consecutive id blocks in the given order.
    Multipartite(Vec<usize>),
    Mycielski(Box<Family>, usize),
    Focalize(Box<Family>, usize),
}

impl Family {
    pub fn build(&self) -> Result<Graph> {
        match self {
            Family::Complete(n) => Ok(Graph::empty(*n)?.complement()),
            Family::Empty(n) => Graph::empty(*n),
            Family::Path(n) => Graph::from_edges(*n, (1..*n).map(|v| (v - 1, v))),
            Family::Cycle(n) => {
                if *n < 3 {
                    return Err(invalid(format!("cycle needs at least 3 vertices, got {n}")));
                }
                Graph::from_edges(*n, (0..*n).map(|v| (v, (v + 1) % n)))
            }
            Family::Star(n) => {
                if *n == 0 {
                    return Err(invalid("star needs at least one leaf"));
                }
                Graph::from_edges(n + 1, (1..=*n).map(|v| (0, v)))
            }
            Family::Multipartite(parts) => complete_multipartite(parts),
            Family::Mycielski(inner, r) => Ok(mycielski(&inner.build()?, *r)?.0),
            Family::Focalize(inner, t) => focalize(&inner.build()?, *t),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Empty(n) => write!(f, "empty:{n}"),
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Star(n) => write!(f, "star:{n}"),
            Family::Multipartite(parts) => {
                let parts: Vec<String> = parts.iter().map(usize::to_string).collect();
                write!(f, "multipartite:{}", parts.join(","))
            }
            Family::Mycielski(inner, r) => write!(f, "mycielski:{inner}:{r}"),
            Family::Focalize(inner, t) => write!(f, "focalize:{inner}:{t}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("family spec `{s}` has no `:`")))?;
        let number = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("`{t}` is not a nonnegative integer in `{s}`")))
        };
        match kind {
            "complete" => Ok(Family::Complete(number(rest)?)),
            "empty" => Ok(Family::Empty(number(rest)?)),
            "path" => Ok(Family::Path(number(rest)?)),
            "cycle" => Ok(Family::Cycle(number(rest)?)),
            "star" => Ok(Family::Star(number(rest)?)),
            "multipartite" => Ok(Family::Multipartite(
                rest.split(',').map(number).collect::<Result<_>>()?,
            )),
            "mycielski" | "focalize" => {
                let (inner, count) = rest
                    .rsplit_once(':')
                    .ok_or_else(|| Error::Parse(format!("`{s}` needs `{kind}:<spec>:<count>`")))?;
                let inner = Box::new(inner.parse()?);
                let count = number(count)?;
                Ok(if kind == "mycielski" {
                    Family::Mycielski(inner, count)
                } else {
                    Family::Focalize(inner, count)
                })
            }
            other => Err(Error::Parse(format!("unknown family `{other}`"))),
        }
    }
}

pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() {
        return Err(invalid("complete multipartite graph needs at least one part"));
    }
    if let Some(p) = parts.iter().find(|&&p| p == 0) {
        return Err(invalid(format!("part sizes must be positive, got {p}")));
    }
    let n: usize = parts.iter().sum();
    let mut block = vec![0; n];
    let mut v = 0;
    for (i, &p) in parts.iter().enumerate() {
        block[v..v + p].fill(i);
        v += p;
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |w| (u, w)));
    Graph::from_edges(n, edges.filter(|&(u, w)| block[u] != block[w]).collect::<Vec<_>>())
}

/// Independent set `X_1 = 0..n`, clique `X_2 = n..2n`, and the perfect matching
/// `i -- n+i` between them. This is the graph spanned by the doubled focal
/// vertices inside the complement of a Mycielski graph.
pub fn independent_clique_matching(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("need n >= 1"));
    }
    let clique = (n..2 * n).flat_map(|u| (u + 1..2 * n).map(move |w| (u, w)));
    let matching = (0..n).map(|i| (i, n + i));
    Graph::from_edges(2 * n, clique.chain(matching).collect::<Vec<_>>())
}

/// Vertex bookkeeping for `M_r(G)`: copy `i` (1-based) of base vertex `v` is
/// `(i-1)*n + v` and the apex `z` is `r*n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MycielskiLayout {
    base_n: usize,
    r: usize,
}

impl MycielskiLayout {
    pub fn new(base_n: usize, r: usize) -> Self {
        MycielskiLayout { base_n, r }
    }

    pub fn base_n(&self) -> usize {
        self.base_n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Id of `v_i`, with `i` in `1..=r`.
    pub fn copy(&self, i: usize, v: usize) -> usize {
        debug_assert!((1..=self.r).contains(&i) && v < self.base_n);
        (i - 1) * self.base_n + v
    }

    pub fn apex(&self) -> usize {
        self.r * self.base_n
    }

    pub fn total(&self) -> usize {
        self.r * self.base_n + 1
    }

    /// `V(G)_i`.
    pub fn copy_set(&self, i: usize) -> VertexSet {
        self.copies_of(i, VertexSet::full(self.base_n))
    }

    /// `S_i` for a set `S` of base vertices.
    pub fn copies_of(&self, i: usize, s: VertexSet) -> VertexSet {
        s.iter().map(|v| self.copy(i, v)).collect()
    }
}

/// The generalized Mycielski graph `M_r(g)`.
pub fn mycielski(g: &Graph, r: usize) -> Result<(Graph, MycielskiLayout)> {
    if r < 2 {
        return Err(invalid(format!("Mycielski construction needs r >= 2, got {r}")));
    }
    let layout = MycielskiLayout::new(g.n(), r);
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        edges.push((layout.copy(1, u), layout.copy(1, v)));
        for i in 2..=r {
            edges.push((layout.copy(i - 1, u), layout.copy(i, v)));
            edges.push((layout.copy(i - 1, v), layout.copy(i, u)));
        }
    }
    for u in 0..g.n() {
        edges.push((layout.apex(), layout.copy(r, u)));
    }
    Ok((Graph::from_edges(layout.total(), edges)?, layout))
}

/// `g` with `times` new focal vertices appended, in order of addition.
pub fn focalize(g: &Graph, times: usize) -> Result<Graph> {
    if times == 0 {
        return Err(invalid("focalize needs times >= 1"));
    }
    let k1 = Graph::empty(1)?;
    (0..times).try_fold(g.clone(), |acc, _| acc.join(&k1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::is_isomorphic;

    #[test]
    fn small_families() {
        let c4 = Family::Cycle(4).build().unwrap();
        assert!(is_isomorphic(&Family::Multipartite(vec![2, 2]).build().unwrap(), &c4));
        let k13 = Family::Star(3).build().unwrap();
        assert_eq!(k13.n(), 4);
        assert_eq!(k13.neighbors(0), [1, 2, 3].into_iter().collect());
        assert_eq!(
            Family::Multipartite(vec![1; 5]).build().unwrap(),
            Family::Complete(5).build().unwrap()
        );
        assert!(Family::Cycle(2).build().is_err());
        assert!(Family::Multipartite(vec![2, 0]).build().is_err());
        assert!(Family::Complete(0).build().is_err());
    }

    #[test]
    fn parse_and_display() {
        for s in [
            "complete:4",
            "empty:3",
            "path:4",
            "cycle:5",
            "star:3",
            "multipartite:1,1,2",
            "mycielski:cycle:4:2",
            "focalize:mycielski:path:4:3:2",
        ] {
            let f: Family = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
        }
        assert_eq!(
            "mycielski:cycle:4:2".parse::<Family>().unwrap(),
            Family::Mycielski(Box::new(Family::Cycle(4)), 2)
        );
        assert!("cycle".parse::<Family>().is_err());
        assert!("wheel:5".parse::<Family>().is_err());
        assert!("path:x".parse::<Family>().is_err());
        assert!("mycielski:4".parse::<Family>().is_err());
    }

    #[test]
    fn mycielski_of_k2_is_c5() {
        let (g, layout) = mycielski(&Family::Complete(2).build().unwrap(), 2).unwrap();
        assert_eq!(layout.apex(), 4);
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(0, 1), (0, 3), (1, 2), (2, 4), (3, 4)]
        );
        assert!(is_isomorphic(&g, &Family::Cycle(5).build().unwrap()));
    }

    #[test]
    fn mycielski_of_edgeless_is_star_plus_isolated() {
        for n in 1..5 {
            for r in 2..5 {
                let (g, layout) = mycielski(&Graph::empty(n).unwrap(), r).unwrap();
                assert_eq!(g.edge_count(), n);
                assert_eq!(g.neighbors(layout.apex()), layout.copy_set(r));
                assert_eq!(g.isolated_vertices().len(), (r - 1) * n);
            }
        }
    }

    #[test]
    fn mycielski_counts_on_c4() {
        let (g, _) = mycielski(&Family::Cycle(4).build().unwrap(), 2).unwrap();
        assert_eq!((g.n(), g.edge_count()), (9, 16));
        assert!(mycielski(&g, 1).is_err());
    }

    #[test]
    fn copy_one_induces_base() {
        let c4 = Family::Cycle(4).build().unwrap();
        let (g, layout) = mycielski(&c4, 2).unwrap();
        assert_eq!(g.induced_subgraph(layout.copy_set(1)).unwrap(), c4);
    }

    #[test]
    fn focalize_examples() {
        assert_eq!(
            focalize(&Graph::empty(3).unwrap(), 1).unwrap(),
            Graph::from_edges(4, [(0, 3), (1, 3), (2, 3)]).unwrap()
        );
        assert_eq!(
            focalize(&Family::Complete(3).build().unwrap(), 1).unwrap(),
            Family::Complete(4).build().unwrap()
        );
        let c4 = Family::Cycle(4).build().unwrap();
        let f = focalize(&c4, 3).unwrap();
        assert_eq!(f.focal_vertices(), [4, 5, 6].into_iter().collect());
        assert!(focalize(&c4, 0).is_err());
        assert_eq!(focalize(&c4, 1).unwrap(), Graph::empty(1).unwrap().join(&c4).unwrap().permuted(&[4, 0, 1, 2, 3]).unwrap());
    }

    #[test]
    fn matching_graph_shape() {
        let d3 = independent_clique_matching(3).unwrap();
        assert!(d3.is_independent([0, 1, 2].into_iter().collect()));
        assert!(d3.is_clique([3, 4, 5].into_iter().collect()));
        assert_eq!(d3.edge_count(), 3 + 3);
    }
}
