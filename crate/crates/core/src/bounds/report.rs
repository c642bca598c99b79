//! Collected bounds on `box(M_2(g))` for one base graph `g`.

use std::fmt;

use crate::engine::{exact_boxicity, matching_lower_bound, EngineConfig};
use crate::error::{Error, Result};
use crate::generators::mycielski;
use crate::graph::Graph;
use crate::graph6;

use super::chromatic::{chromatic_number, CHROMATIC_MAX_N};
use super::formulas::{chromatic_upper_bound, mycielski_lower_bound, mycielski_upper_bound};

pub const TAG_FOCAL_LOWER: &str = "cor3.6";
pub const TAG_CLIQUE_UPPER: &str = "thm4.2";
pub const TAG_MATCHING_LOWER: &str = "lemma3.3";
pub const TAG_HALF_ORDER: &str = "roberts-floor-n/2";
pub const TAG_CHROMATIC: &str = "thm1.1";

pub const REPORT_HEADER: &str = "graph6,target,lower,upper,exact,lower_sources,upper_sources";

/// A bound value with the result it comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tagged {
    pub value: usize,
    pub source: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    /// graph6 of the base graph `g`; the bounds concern `M_2(g)`.
    pub graph: String,
    pub lower: Vec<Tagged>,
    pub upper: Vec<Tagged>,
    pub exact: Option<usize>,
}

impl BoundsReport {
    pub fn best_lower(&self) -> Option<usize> {
        self.lower.iter().map(|t| t.value).max()
    }

    pub fn best_upper(&self) -> Option<usize> {
        self.upper.iter().map(|t| t.value).min()
    }

    fn check(&self) -> Result<()> {
        if let (Some(lo), Some(hi)) = (self.best_lower(), self.best_upper()) {
            if lo > hi {
                return Err(Error::HardFault(format!("{}: lower bound {lo} exceeds upper bound {hi}", self.graph)));
            }
        }
        if let Some(x) = self.exact {
            if self.best_lower().is_some_and(|lo| x < lo) || self.best_upper().is_some_and(|hi| x > hi) {
                return Err(Error::HardFault(format!("{}: exact value {x} lies outside the bounds", self.graph)));
            }
        }
        Ok(())
    }
}

fn join(tags: &[Tagged]) -> String {
    tags.iter().map(|t| format!("{}:{}", t.source, t.value)).collect::<Vec<_>>().join(";")
}

fn opt(x: Option<usize>) -> String {
    x.map_or_else(String::new, |v| v.to_string())
}

/// One CSV row matching [`REPORT_HEADER`].
impl fmt::Display for BoundsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},M2,{},{},{},{},{}",
            self.graph,
            opt(self.best_lower()),
            opt(self.best_upper()),
            opt(self.exact),
            join(&self.lower),
            join(&self.upper)
        )
    }
}

// Capacity limits make a bound unavailable; anything else is a real error.
fn available(r: Result<usize>) -> Result<Option<usize>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::Capacity { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Every available bound on `box(M_2(g))`, plus the exact value when the engine
/// can compute it under `cfg`. Fails with a hard fault if the bounds disagree.
pub fn bounds_report(g: &Graph, cfg: &EngineConfig) -> Result<BoundsReport> {
    let (m2, _) = mycielski(g, 2)?;
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    if let Some(v) = available(mycielski_lower_bound(g, 2, cfg))? {
        lower.push(Tagged { value: v, source: TAG_FOCAL_LOWER });
    }
    lower.push(Tagged { value: matching_lower_bound(&m2).value, source: TAG_MATCHING_LOWER });
    if let Some(v) = available(mycielski_upper_bound(g))? {
        upper.push(Tagged { value: v, source: TAG_CLIQUE_UPPER });
    }
    upper.push(Tagged { value: m2.n() / 2, source: TAG_HALF_ORDER });
    if m2.n() <= CHROMATIC_MAX_N {
        let chi = chromatic_number(&m2)?;
        upper.push(Tagged { value: chromatic_upper_bound(m2.n(), chi), source: TAG_CHROMATIC });
    }
    let exact = available(exact_boxicity(&m2, cfg).map(|r| r.value))?;
    let report = BoundsReport { graph: graph6::encode(g), lower, upper, exact };
    report.check()?;
    Ok(report)
}
