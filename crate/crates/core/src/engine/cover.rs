//! Cointerval edge coverings: the certificate object and its text format.
//!
//! ```text
//! host <graph6 of the covered graph>
//! parts <k>
//! <part 1: sorted `u-v` edges, space separated>
//! ...
//! ```
//! Parts are listed in lexicographic order of their edge lists.

use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::graph::{EdgeSet, Graph};
use crate::graph6;
use crate::interval::is_cointerval;

/// A family of edge sets of `host`, meant to be cointerval spanning subgraphs
/// covering every host edge. The host is the complement of the graph whose
/// boxicity the cover bounds. Parts are kept in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CointervalCover {
    host: Graph,
    parts: Vec<EdgeSet>,
}

impl CointervalCover {
    pub fn new(host: Graph, mut parts: Vec<EdgeSet>) -> Result<Self> {
        if let Some(p) = parts.iter().find(|p| p.host_n() != host.n()) {
            return Err(invalid(format!(
                "part declared over {} vertices, host has {}",
                p.host_n(),
                host.n()
            )));
        }
        parts.sort();
        Ok(CointervalCover { host, parts })
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn parts(&self) -> &[EdgeSet] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Checks the three cover conditions, reporting the first failure.
    pub fn check(&self) -> Verdict {
        for (i, part) in self.parts.iter().enumerate() {
            if let Some(&(u, v)) = part.edges().iter().find(|&&(u, v)| !self.host.has_edge(u, v)) {
                return Verdict::Reject(format!("part {i}: edge {u}-{v} is not a host edge"));
            }
        }
        for (i, part) in self.parts.iter().enumerate() {
            match is_cointerval(&Graph::spanning(part)) {
                Ok(true) => {}
                Ok(false) => return Verdict::Reject(format!("part {i} is not cointerval")),
                Err(e) => return Verdict::Reject(format!("part {i}: {e}")),
            }
        }
        if let Some((u, v)) = self
            .host
            .edges()
            .find(|&e| !self.parts.iter().any(|p| p.contains(e)))
        {
            return Verdict::Reject(format!("host edge {u}-{v} is not covered"));
        }
        Verdict::Accept
    }
}

impl fmt::Display for CointervalCover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "host {}", graph6::encode(&self.host))?;
        writeln!(f, "parts {}", self.parts.len())?;
        for p in &self.parts {
            writeln!(f, "{}", p.to_line())?;
        }
        Ok(())
    }
}

impl FromStr for CointervalCover {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines();
        let host = lines
            .next()
            .and_then(|l| l.strip_prefix("host "))
            .ok_or_else(|| Error::Parse("certificate must start with `host <graph6>`".into()))?;
        let host = graph6::decode(host.trim())?;
        let k: usize = lines
            .next()
            .and_then(|l| l.strip_prefix("parts "))
            .and_then(|k| k.trim().parse().ok())
            .ok_or_else(|| Error::Parse("second line must be `parts <k>`".into()))?;
        let mut parts = Vec::with_capacity(k);
        for _ in 0..k {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("expected {k} part lines")))?;
            let edges = line
                .split_whitespace()
                .map(|tok| {
                    let (u, v) = tok
                        .split_once('-')
                        .ok_or_else(|| Error::Parse(format!("bad edge token `{tok}`")))?;
                    let num = |t: &str| {
                        t.parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad edge token `{tok}`")))
                    };
                    Ok((num(u)?, num(v)?))
                })
                .collect::<Result<Vec<_>>>()?;
            parts.push(EdgeSet::new(host.n(), edges).map_err(|e| Error::Parse(e.to_string()))?);
        }
        if lines.any(|l| !l.trim().is_empty()) {
            return Err(Error::Parse("trailing content after the last part".into()));
        }
        CointervalCover::new(host, parts)
    }
}

/// Outcome of a certificate check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    Reject(String),
}

impl Verdict {
    pub fn is_accept(&self) -> bool {
        matches!(self, Verdict::Accept)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Accept => f.write_str("accept"),
            Verdict::Reject(why) => write!(f, "reject: {why}"),
        }
    }
}

/// Checks that `cover` is a cointerval edge covering of the complement of `g`.
pub fn verify_cointerval_cover(g: &Graph, cover: &CointervalCover) -> Result<Verdict> {
    if *cover.host() != g.complement() {
        return Err(invalid("certificate host is not the complement of the graph"));
    }
    Ok(cover.check())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::Family;

    fn c4_cover() -> (Graph, CointervalCover) {
        let c4 = Family::Cycle(4).build().unwrap();
        // complement of C_4 (0-1-2-3-0) is the matching 0-2, 1-3
        let parts = vec![
            EdgeSet::new(4, [(1, 3)]).unwrap(),
            EdgeSet::new(4, [(0, 2)]).unwrap(),
        ];
        let cover = CointervalCover::new(c4.complement(), parts).unwrap();
        (c4, cover)
    }

    #[test]
    fn text_format() {
        let (_, cover) = c4_cover();
        let text = cover.to_string();
        assert_eq!(text, "host CQ\nparts 2\n0-2\n1-3\n");
        assert_eq!(text.parse::<CointervalCover>().unwrap(), cover);
        assert!("host CQ\nparts 3\n0-2\n1-3\n".parse::<CointervalCover>().is_err());
        assert!("parts 0\n".parse::<CointervalCover>().is_err());
        assert!("host CQ\nparts 1\n0+2\n".parse::<CointervalCover>().is_err());
    }

    #[test]
    fn verification_failures_name_the_problem() {
        let (c4, cover) = c4_cover();
        assert_eq!(verify_cointerval_cover(&c4, &cover).unwrap(), Verdict::Accept);

        let missing = CointervalCover::new(c4.complement(), vec![cover.parts()[0].clone()]).unwrap();
        assert_eq!(
            verify_cointerval_cover(&c4, &missing).unwrap(),
            Verdict::Reject("host edge 1-3 is not covered".into())
        );

        let merged = CointervalCover::new(c4.complement(), vec![EdgeSet::new(4, [(0, 2), (1, 3)]).unwrap()]).unwrap();
        assert_eq!(
            verify_cointerval_cover(&c4, &merged).unwrap(),
            Verdict::Reject("part 0 is not cointerval".into())
        );

        let stray = CointervalCover::new(c4.complement(), vec![EdgeSet::new(4, [(0, 1)]).unwrap()]).unwrap();
        assert!(!verify_cointerval_cover(&c4, &stray).unwrap().is_accept());

        assert!(verify_cointerval_cover(&Family::Path(4).build().unwrap(), &cover).is_err());
    }
}
