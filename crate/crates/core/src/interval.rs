//! Interval and cointerval recognition.
//!
//! The decision procedure searches for a linear order of the maximal cliques in
//! which the cliques containing any fixed vertex are consecutive (Fulkerson and
//! Gross). Orders are explored depth first, trying cliques in lexicographic order,
//! so the witness is the lexicographically first valid order. Components are
//! handled one after the other and laid out left to right.
//!
//! [`chordal_at_free_oracle`] is an independent second decision procedure
//! (chordal and asteroidal-triple-free) used to cross-check the first.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::cliques::maximal_cliques;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recognition {
    /// Maximal cliques in a consecutive order, components left to right.
    Interval { order: Vec<VertexSet> },
    NotInterval { note: String },
}

impl Recognition {
    pub fn is_interval(&self) -> bool {
        matches!(self, Recognition::Interval { .. })
    }
}

pub fn is_interval(g: &Graph) -> Result<Recognition> {
    let cliques = maximal_cliques(g)?;
    if cliques.len() > g.n() {
        // every clique of a consecutive order starts a vertex that is new at that position
        return Ok(Recognition::NotInterval {
            note: format!("{} maximal cliques on {} vertices", cliques.len(), g.n()),
        });
    }
    let mut order = Vec::with_capacity(cliques.len());
    for comp in g.components() {
        let local: Vec<VertexSet> = cliques
            .iter()
            .copied()
            .filter(|c| c.is_subset(comp))
            .collect();
        match consecutive_order(&local) {
            Some(idx) => order.extend(idx.into_iter().map(|i| local[i])),
            None => {
                return Ok(Recognition::NotInterval {
                    note: format!(
                        "no consecutive ordering of the {} maximal cliques in the component of vertex {}",
                        local.len(),
                        comp.first().expect("components are nonempty")
                    ),
                })
            }
        }
    }
    Ok(Recognition::Interval { order })
}

/// Lexicographically first consecutive order of `cliques`, as indices.
fn consecutive_order(cliques: &[VertexSet]) -> Option<Vec<usize>> {
    let mut search = OrderSearch {
        cliques,
        used: vec![false; cliques.len()],
        order: Vec::with_capacity(cliques.len()),
        dead: HashSet::new(),
    };
    search.run().then_some(search.order)
}

struct OrderSearch<'a> {
    cliques: &'a [VertexSet],
    used: Vec<bool>,
    order: Vec<usize>,
    // Completability depends only on which cliques are already placed.
    dead: HashSet<Vec<bool>>,
}

impl OrderSearch<'_> {
    fn run(&mut self) -> bool {
        if self.order.len() == self.cliques.len() {
            return true;
        }
        if self.dead.contains(&self.used) {
            return false;
        }
        let placed = self.union_where(true);
        let pending = self.union_where(false);
        // vertices already started that still occur later must occur in the next clique
        let active = placed.intersection(pending);
        for i in 0..self.cliques.len() {
            if self.used[i] || !active.is_subset(self.cliques[i]) {
                continue;
            }
            self.used[i] = true;
            self.order.push(i);
            if self.run() {
                return true;
            }
            self.order.pop();
            self.used[i] = false;
        }
        self.dead.insert(self.used.clone());
        false
    }

    fn union_where(&self, used: bool) -> VertexSet {
        self.cliques
            .iter()
            .zip(&self.used)
            .filter(|&(_, &u)| u == used)
            .fold(VertexSet::empty(), |acc, (c, _)| acc.union(*c))
    }
}

/// A closed integer interval `[lo, hi]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    pub lo: usize,
    pub hi: usize,
}

impl Interval {
    pub fn new(lo: usize, hi: usize) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn intersects(self, other: Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }
}

/// One closed interval per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalRep {
    intervals: Vec<Interval>,
}

impl IntervalRep {
    pub fn new(intervals: Vec<Interval>) -> Result<Self> {
        if intervals.is_empty() {
            return Err(Error::InvalidArgument("interval representation with no vertices".into()));
        }
        if let Some(v) = intervals.iter().position(|i| i.lo > i.hi) {
            return Err(Error::InvalidArgument(format!("vertex {v} has lo > hi")));
        }
        Ok(IntervalRep { intervals })
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn get(&self, v: usize) -> Interval {
        self.intervals[v]
    }

    pub fn intersection_graph(&self) -> Result<Graph> {
        let n = self.intervals.len();
        let iv = &self.intervals;
        Graph::from_edges(
            n,
            (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| iv[u].intersects(iv[v]))
                .collect::<Vec<_>>(),
        )
    }
}

impl fmt::Display for IntervalRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, i) in self.intervals.iter().enumerate() {
            writeln!(f, "{v} {} {}", i.lo, i.hi)?;
        }
        Ok(())
    }
}

impl FromStr for IntervalRep {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut intervals = Vec::new();
        for line in s.lines().filter(|l| !l.trim().is_empty()) {
            let nums: Vec<usize> = line
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad number `{t}`"))))
                .collect::<Result<_>>()?;
            match nums[..] {
                [v, lo, hi] if v == intervals.len() && lo <= hi => {
                    intervals.push(Interval::new(lo, hi))
                }
                _ => return Err(Error::Parse(format!("bad interval line `{line}`"))),
            }
        }
        IntervalRep::new(intervals)
    }
}

/// Vertex `v` maps to the first and last positions of the cliques containing it
/// in the witness order; each component boundary skips one position.
pub fn interval_representation(g: &Graph) -> Result<IntervalRep> {
    let Recognition::Interval { order } = is_interval(g)? else {
        return Err(Error::NotRepresentable);
    };
    let mut comp_of = vec![0; g.n()];
    for (k, comp) in g.components().into_iter().enumerate() {
        for v in comp {
            comp_of[v] = k;
        }
    }
    let mut span: Vec<Option<Interval>> = vec![None; g.n()];
    for (j, clique) in order.iter().enumerate() {
        let pos = j + comp_of[clique.first().expect("cliques are nonempty")];
        for v in *clique {
            span[v] = Some(match span[v] {
                None => Interval::new(pos, pos),
                Some(i) => Interval::new(i.lo, pos),
            });
        }
    }
    let rep = IntervalRep::new(span.into_iter().map(|s| s.expect("every vertex is in a clique")).collect())?;
    debug_assert_eq!(rep.intersection_graph().as_ref(), Ok(g));
    Ok(rep)
}

pub fn is_cointerval(g: &Graph) -> Result<bool> {
    Ok(is_interval(&g.complement())?.is_interval())
}

/// Independent characterization: chordal (checked on a maximum cardinality search
/// order) and free of asteroidal triples (checked over all triples).
pub fn chordal_at_free_oracle(g: &Graph) -> bool {
    is_chordal(g) && !has_asteroidal_triple(g)
}

pub fn is_chordal(g: &Graph) -> bool {
    let n = g.n();
    // maximum cardinality search; the reverse visiting order is a perfect
    // elimination order exactly when g is chordal
    let mut weight = vec![0usize; n];
    let mut visited = VertexSet::empty();
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = g
            .vertices()
            .difference(visited)
            .iter()
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("unvisited vertex remains");
        visit.push(v);
        visited = visited.with(v);
        for w in g.neighbors(v).difference(visited) {
            weight[w] += 1;
        }
    }
    let mut pos = vec![0; n];
    for (i, &v) in visit.iter().enumerate() {
        pos[v] = i;
    }
    // eliminating in reverse visit order: earlier-visited neighbours are the later ones to eliminate
    visit.iter().all(|&v| {
        let earlier: VertexSet = g.neighbors(v).iter().filter(|&w| pos[w] < pos[v]).collect();
        match earlier.iter().max_by_key(|&w| pos[w]) {
            None => true,
            Some(parent) => earlier.without(parent).is_subset(g.neighbors(parent)),
        }
    })
}

pub fn has_asteroidal_triple(g: &Graph) -> bool {
    let n = g.n();
    // comp[c][v]: component id of v in g - N[c], or None when v is in N[c]
    let comp: Vec<Vec<Option<usize>>> = (0..n)
        .map(|c| {
            let closed = g.neighbors(c).with(c);
            let mut label = vec![None; n];
            let mut next = 0;
            for s in g.vertices().difference(closed) {
                if label[s].is_some() {
                    continue;
                }
                let mut stack = vec![s];
                label[s] = Some(next);
                while let Some(u) = stack.pop() {
                    for w in g.neighbors(u).difference(closed) {
                        if label[w].is_none() {
                            label[w] = Some(next);
                            stack.push(w);
                        }
                    }
                }
                next += 1;
            }
            label
        })
        .collect();
    let linked = |a: usize, b: usize, avoid: usize| {
        matches!((comp[avoid][a], comp[avoid][b]), (Some(x), Some(y)) if x == y)
    };
    for a in 0..n {
        for b in (a + 1..n).filter(|&b| !g.has_edge(a, b)) {
            for c in (b + 1..n).filter(|&c| !g.has_edge(a, c) && !g.has_edge(b, c)) {
                if linked(a, b, c) && linked(a, c, b) && linked(b, c, a) {
                    return true;
                }
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{mycielski, Family};

    fn fam(s: &str) -> Graph {
        s.parse::<Family>().unwrap().build().unwrap()
    }

    #[test]
    fn recognition_examples() {
        assert!(is_interval(&fam("path:4")).unwrap().is_interval());
        assert!(!is_interval(&fam("cycle:4")).unwrap().is_interval());
        assert!(!is_interval(&fam("mycielski:path:4:2")).unwrap().is_interval());
        assert!(is_interval(&fam("complete:6")).unwrap().is_interval());
        assert!(is_interval(&fam("star:5")).unwrap().is_interval());
    }

    #[test]
    fn p4_witness_and_representation() {
        let p4 = fam("path:4");
        let Recognition::Interval { order } = is_interval(&p4).unwrap() else { panic!() };
        assert_eq!(order.iter().map(|c| c.to_vec()).collect::<Vec<_>>(), vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        let rep = interval_representation(&p4).unwrap();
        assert_eq!(rep.to_string(), "0 0 0\n1 0 1\n2 1 2\n3 2 2\n");
        assert_eq!(rep.intersection_graph().unwrap(), p4);
    }

    #[test]
    fn representation_conventions() {
        let k4 = fam("complete:4");
        let rep = interval_representation(&k4).unwrap();
        assert!(rep.intervals().iter().all(|&i| i == Interval::new(0, 0)));
        let v4 = Graph::empty(4).unwrap();
        let rep = interval_representation(&v4).unwrap();
        for v in 0..4 {
            assert_eq!(rep.get(v), Interval::new(2 * v, 2 * v));
        }
        assert_eq!(interval_representation(&fam("cycle:4")), Err(Error::NotRepresentable));
    }

    #[test]
    fn interval_rep_text_round_trip() {
        let rep = interval_representation(&fam("star:3")).unwrap();
        assert_eq!(rep.to_string().parse::<IntervalRep>().unwrap(), rep);
        assert!("0 2 1\n".parse::<IntervalRep>().is_err());
        assert!("1 0 0\n".parse::<IntervalRep>().is_err());
    }

    #[test]
    fn cointerval_examples() {
        assert!(is_cointerval(&Graph::empty(5).unwrap()).unwrap());
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!is_cointerval(&two_k2).unwrap());
        let p4 = fam("path:4");
        let padded = p4.disjoint_union(&Graph::empty(3).unwrap()).unwrap();
        assert_eq!(is_cointerval(&padded).unwrap(), is_cointerval(&p4).unwrap());
    }

    #[test]
    fn oracle_examples() {
        for n in 1..8 {
            assert!(chordal_at_free_oracle(&Family::Path(n).build().unwrap()));
        }
        assert!(!chordal_at_free_oracle(&fam("cycle:4")));
        assert!(!is_chordal(&fam("cycle:5")));
        // the net (triangle with a pendant on each corner) is chordal with an asteroidal triple
        let net = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert!(is_chordal(&net));
        assert!(has_asteroidal_triple(&net));
        assert!(!is_interval(&net).unwrap().is_interval());
    }

    #[test]
    fn disconnected_layout() {
        let g = fam("path:3").disjoint_union(&fam("complete:2")).unwrap();
        let rep = interval_representation(&g).unwrap();
        assert_eq!(rep.intersection_graph().unwrap(), g);
        assert_eq!(rep.get(3), Interval::new(3, 3));
        let (m, _) = mycielski(&Graph::empty(3).unwrap(), 2).unwrap();
        assert_eq!(interval_representation(&m).unwrap().intersection_graph().unwrap(), m);
    }
}
