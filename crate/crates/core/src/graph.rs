//! Immutable simple graphs over dense vertex ids `0..n`, stored as one `u64`
//! neighbourhood mask per vertex.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{invalid, Error, Result};

/// Largest vertex count a [`Graph`] can hold (one machine word per neighbourhood).
pub const MAX_VERTICES: usize = 64;

/// An unordered vertex pair, always stored with `u < v`.
pub type Edge = (usize, usize);

/// A set of vertex ids in `0..64`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const fn empty() -> Self {
        VertexSet(0)
    }

    /// `{0, .., n-1}`.
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest id, if any.
    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(VertexSet::empty(), VertexSet::with)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Shortest-path length; `Infinite` when no path exists. Orders after every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

/// A finite simple undirected graph on vertices `0..n` with `1 <= n <= 64`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph `V_n`.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph { adj: vec![0; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        check_order(n)?;
        let mut adj = vec![0u64; n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(invalid(format!("edge {u}-{v} out of range for n = {n}")));
            }
            if u == v {
                return Err(invalid(format!("loop at vertex {u}")));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { adj })
    }

    /// Builds a graph from neighbourhood masks; the masks must already be symmetric and loop-free.
    pub(crate) fn from_masks(adj: Vec<u64>) -> Self {
        debug_assert!(!adj.is_empty() && adj.len() <= MAX_VERTICES);
        debug_assert!((0..adj.len()).all(|u| adj[u] >> u & 1 == 0));
        debug_assert!((0..adj.len())
            .all(|u| (0..adj.len()).all(|v| (adj[u] >> v & 1) == (adj[v] >> u & 1))));
        Graph { adj }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n()).flat_map(move |u| {
            VertexSet(self.adj[u] & !(2u64 << u).wrapping_sub(1)).iter().map(move |v| (u, v))
        })
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n()).bits();
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, m)| !m & full & !(1 << v))
            .collect();
        Graph { adj }
    }

    /// Subgraph induced by `s`, relabelled order-preservingly onto `0..|s|`.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph> {
        if s.is_empty() {
            return Err(invalid("induced subgraph of an empty vertex set"));
        }
        self.check_set(s)?;
        let ids = s.to_vec();
        let adj = ids
            .iter()
            .map(|&u| {
                ids.iter()
                    .enumerate()
                    .filter(|&(_, &v)| self.has_edge(u, v))
                    .fold(0u64, |m, (j, _)| m | 1 << j)
            })
            .collect();
        Ok(Graph { adj })
    }

    /// Breadth-first distance from `u` to `v`.
    pub fn distance(&self, u: usize, v: usize) -> Result<Distance> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.set_distance(VertexSet::singleton(u), VertexSet::singleton(v)))
    }

    /// `min { d(a, b) : a in a_set, b in b_set }`.
    pub fn subgraph_distance(&self, a: VertexSet, b: VertexSet) -> Result<Distance> {
        if a.is_empty() || b.is_empty() {
            return Err(invalid("subgraph distance needs nonempty vertex sets"));
        }
        self.check_set(a)?;
        self.check_set(b)?;
        Ok(self.set_distance(a, b))
    }

    // Multi-source BFS, level by level over bitmasks.
    fn set_distance(&self, from: VertexSet, to: VertexSet) -> Distance {
        let mut seen = from;
        let mut frontier = from;
        let mut depth = 0;
        loop {
            if !frontier.intersection(to).is_empty() {
                return Distance::Finite(depth);
            }
            let next = frontier
                .iter()
                .fold(VertexSet::empty(), |acc, v| acc.union(self.neighbors(v)))
                .difference(seen);
            if next.is_empty() {
                return Distance::Infinite;
            }
            seen = seen.union(next);
            frontier = next;
            depth += 1;
        }
    }

    /// BFS distances from `source` to every vertex.
    pub fn distances_from(&self, source: usize) -> Vec<Distance> {
        let mut dist = vec![Distance::Infinite; self.n()];
        let mut queue = VecDeque::from([source]);
        dist[source] = Distance::Finite(0);
        while let Some(u) = queue.pop_front() {
            let Distance::Finite(d) = dist[u] else { unreachable!() };
            for w in self.neighbors(u) {
                if dist[w] == Distance::Infinite {
                    dist[w] = Distance::Finite(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Vertices adjacent to every other vertex. For `n = 1` the single vertex is focal.
    pub fn focal_vertices(&self) -> VertexSet {
        let n = self.n();
        (0..n).filter(|&v| self.degree(v) == n - 1).collect()
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n()).filter(|&v| self.adj[v] == 0).collect()
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.neighbors(v)))
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.neighbors(v).intersection(s).is_empty())
    }

    pub fn is_complete(&self) -> bool {
        self.is_clique(self.vertices())
    }

    /// `self` on ids `0..n`, then `other` shifted by `n`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        self.glue(other, false)
    }

    /// Disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        self.glue(other, true)
    }

    fn glue(&self, other: &Graph, cross: bool) -> Result<Graph> {
        let (n, k) = (self.n(), other.n());
        check_order(n + k)?;
        let left = if cross { VertexSet::full(n).bits() } else { 0 };
        let right = if cross { VertexSet::full(k).bits() << n } else { 0 };
        let adj = self
            .adj
            .iter()
            .map(|m| m | right)
            .chain(other.adj.iter().map(|m| m << n | left))
            .collect();
        Ok(Graph { adj })
    }

    /// The spanning subgraph `(V, edges)`.
    pub fn spanning(edges: &EdgeSet) -> Graph {
        let mut adj = vec![0u64; edges.host_n()];
        for &(u, v) in edges.edges() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Graph { adj }
    }

    pub fn edge_set(&self) -> EdgeSet {
        EdgeSet {
            host_n: self.n(),
            edges: self.edges().collect(),
        }
    }

    /// Connected components, each as a vertex set, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let next = frontier
                    .iter()
                    .fold(VertexSet::empty(), |acc, v| acc.union(self.neighbors(v)))
                    .difference(comp);
                comp = comp.union(next);
                frontier = next;
            }
            left = left.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.n();
        if perm.len() != n || perm.iter().copied().collect::<VertexSet>().len() != n
            || perm.iter().any(|&p| p >= n)
        {
            return Err(invalid("permutation must be a bijection on 0..n"));
        }
        let mut adj = vec![0u64; n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Ok(Graph { adj })
    }

    /// Graphviz rendering with vertex ids as labels.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n() {
            out.push_str(&format!("  {v};\n"));
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            return Err(invalid(format!("vertex {v} out of range for n = {}", self.n())));
        }
        Ok(())
    }

    pub(crate) fn check_set(&self, s: VertexSet) -> Result<()> {
        if !s.is_subset(self.vertices()) {
            return Err(invalid(format!("{s:?} is not a subset of 0..{}", self.n())));
        }
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(invalid("graphs need at least one vertex"));
    }
    if n > MAX_VERTICES {
        return Err(Error::Capacity {
            what: "vertex count",
            actual: n,
            limit: MAX_VERTICES,
            flag: "fixed word size",
        });
    }
    Ok(())
}

/// A set of edges of some host graph on `host_n` vertices, read as the spanning
/// subgraph `(V(host), edges)`. Edges are kept sorted, so the derived ordering is
/// lexicographic on the edge lists.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct EdgeSet {
    edges: Vec<Edge>,
    host_n: usize,
}

impl EdgeSet {
    pub fn new<I>(host_n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut out = Vec::new();
        for (u, v) in edges {
            if u == v || u >= host_n || v >= host_n {
                return Err(invalid(format!("bad edge {u}-{v} for host on {host_n} vertices")));
            }
            out.push((u.min(v), u.max(v)));
        }
        out.sort_unstable();
        out.dedup();
        Ok(EdgeSet { edges: out, host_n })
    }

    pub fn host_n(&self) -> usize {
        self.host_n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: Edge) -> bool {
        let e = (e.0.min(e.1), e.0.max(e.1));
        self.edges.binary_search(&e).is_ok()
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.edges.iter().all(|&e| other.contains(e))
    }

    /// Edges of `host` with both endpoints in `s`.
    pub fn induced(host: &Graph, s: VertexSet) -> EdgeSet {
        EdgeSet {
            edges: host.edges().filter(|&(u, v)| s.contains(u) && s.contains(v)).collect(),
            host_n: host.n(),
        }
    }

    /// Space-separated `u-v` list, as used in certificate files.
    pub fn to_line(&self) -> String {
        self.edges
            .iter()
            .map(|(u, v)| format!("{u}-{v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}
