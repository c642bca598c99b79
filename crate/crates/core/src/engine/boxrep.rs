//! Box representations: `k` closed intervals per vertex.

use std::fmt;

use crate::error::{invalid, Result};
use crate::graph::Graph;
use crate::interval::{interval_representation, Interval};

use super::cover::{CointervalCover, Verdict};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxRep {
    dim: usize,
    // boxes[v][j]: interval of vertex v in coordinate j
    boxes: Vec<Vec<Interval>>,
}

impl BoxRep {
    pub fn new(dim: usize, boxes: Vec<Vec<Interval>>) -> Result<Self> {
        if let Some(v) = boxes.iter().position(|b| b.len() != dim) {
            return Err(invalid(format!("vertex {v} does not have {dim} intervals")));
        }
        Ok(BoxRep { dim, boxes })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertex_count(&self) -> usize {
        self.boxes.len()
    }

    pub fn boxes(&self) -> &[Vec<Interval>] {
        &self.boxes
    }

    pub fn intersect(&self, u: usize, v: usize) -> bool {
        self.boxes[u]
            .iter()
            .zip(&self.boxes[v])
            .all(|(a, b)| a.intersects(*b))
    }
}

/// One line per vertex: `v lo_1 hi_1 lo_2 hi_2 ...`.
impl fmt::Display for BoxRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, b) in self.boxes.iter().enumerate() {
            write!(f, "{v}")?;
            for i in b {
                write!(f, " {} {}", i.lo, i.hi)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Coordinate `j` of vertex `v` is its interval in a representation of the
/// complement of part `j`. An empty cover (complete graph) gives one coordinate
/// in which every vertex gets `[0, 0]`.
pub fn cover_to_box_representation(g: &Graph, cover: &CointervalCover) -> Result<BoxRep> {
    let verdict = super::cover::verify_cointerval_cover(g, cover)?;
    if let Verdict::Reject(why) = verdict {
        return Err(invalid(format!("cover does not verify: {why}")));
    }
    if cover.is_empty() {
        return BoxRep::new(1, vec![vec![Interval::new(0, 0)]; g.n()]);
    }
    let reps = cover
        .parts()
        .iter()
        .map(|p| interval_representation(&Graph::spanning(p).complement()))
        .collect::<Result<Vec<_>>>()?;
    let boxes = (0..g.n())
        .map(|v| reps.iter().map(|r| r.get(v)).collect())
        .collect();
    BoxRep::new(cover.len(), boxes)
}

pub fn verify_box_representation(g: &Graph, rep: &BoxRep) -> Verdict {
    if rep.vertex_count() != g.n() {
        return Verdict::Reject(format!(
            "representation has {} boxes for {} vertices",
            rep.vertex_count(),
            g.n()
        ));
    }
    if rep.dim() == 0 && !g.is_complete() {
        return Verdict::Reject("0-dimensional boxes can only represent a complete graph".into());
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if rep.intersect(u, v) != g.has_edge(u, v) {
                let what = if g.has_edge(u, v) { "adjacent but boxes miss" } else { "nonadjacent but boxes meet" };
                return Verdict::Reject(format!("vertices {u},{v}: {what}"));
            }
        }
    }
    Verdict::Accept
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::Family;

    #[test]
    fn trivial_representations() {
        let k4 = Family::Complete(4).build().unwrap();
        let same = BoxRep::new(2, vec![vec![Interval::new(0, 1); 2]; 4]).unwrap();
        assert!(verify_box_representation(&k4, &same).is_accept());
        let zero = BoxRep::new(0, vec![vec![]; 4]).unwrap();
        assert!(verify_box_representation(&k4, &zero).is_accept());
        let v3 = Graph::empty(3).unwrap();
        assert!(!verify_box_representation(&v3, &BoxRep::new(0, vec![vec![]; 3]).unwrap()).is_accept());
        let points = BoxRep::new(1, (0..3).map(|i| vec![Interval::new(2 * i, 2 * i)]).collect()).unwrap();
        assert!(verify_box_representation(&v3, &points).is_accept());
        assert!(!verify_box_representation(&k4, &points).is_accept());
    }

    #[test]
    fn empty_cover_gives_one_shared_interval() {
        let k3 = Family::Complete(3).build().unwrap();
        let cover = CointervalCover::new(k3.complement(), vec![]).unwrap();
        let rep = cover_to_box_representation(&k3, &cover).unwrap();
        assert_eq!(rep.dim(), 1);
        assert_eq!(rep.to_string(), "0 0 0\n1 0 0\n2 0 0\n");
    }

    #[test]
    fn unverified_cover_is_refused() {
        let c4 = Family::Cycle(4).build().unwrap();
        let cover = CointervalCover::new(c4.complement(), vec![]).unwrap();
        assert!(cover_to_box_representation(&c4, &cover).is_err());
    }
}
