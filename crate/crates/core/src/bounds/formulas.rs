//! Closed-form bounds for Mycielski graphs and the boxicity/chromatic-number check.

use num_rational::Rational64;

use crate::engine::{exact_boxicity, EngineConfig};
use crate::error::{invalid, Error, Result};
use crate::generators::{mycielski, Family};
use crate::graph::Graph;

use super::chromatic::chromatic_number;
use super::clique_cover::edge_clique_cover;

/// The even-`l` upper bounds carry an extra `+1`; `l` odd or zero do not.
pub fn needs_extra_part(l: usize) -> bool {
    l > 0 && l.is_multiple_of(2)
}

/// Number of focal vertices, cross-checked against the isolated vertices of the complement.
pub fn focal_count(g: &Graph) -> usize {
    let l = g.focal_vertices();
    assert_eq!(l, g.complement().isolated_vertices(), "focal vertices must be complement-isolated");
    l.len()
}

/// Closed form for `box(M_2(K_n))`: `ceil(n/2)` for odd `n`, `ceil(n/2) + 1` for even `n`.
/// `n = 1` is computed directly (`M_2(K_1)` is an edge plus an isolated vertex).
pub fn mycielski_kn_boxicity(n: usize) -> Result<usize> {
    match n {
        0 => Err(invalid("K_n needs n >= 1")),
        1 => {
            let (m, _) = mycielski(&Family::Complete(1).build()?, 2)?;
            Ok(exact_boxicity(&m, &EngineConfig::default())?.value)
        }
        n if n % 2 == 1 => Ok(n.div_ceil(2)),
        n => Ok(n.div_ceil(2) + 1),
    }
}

/// `box(g) + ceil(l/2)`, a lower bound on `box(M_r(g))` for every `r >= 2`.
pub fn mycielski_lower_bound(g: &Graph, r: usize, cfg: &EngineConfig) -> Result<usize> {
    if r < 2 {
        return Err(invalid(format!("Mycielski construction needs r >= 2, got {r}")));
    }
    Ok(exact_boxicity(g, cfg)?.value + focal_count(g).div_ceil(2))
}

/// `theta(complement g) + ceil(l/2) (+1 when l is even and positive)`, an upper bound on `box(M_2(g))`.
pub fn mycielski_upper_bound(g: &Graph) -> Result<usize> {
    let (theta, _) = edge_clique_cover(&g.complement())?;
    let l = focal_count(g);
    Ok(theta + l.div_ceil(2) + needs_extra_part(l) as usize)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MultipartiteBounds {
    pub lower: usize,
    pub upper: usize,
    pub exact: Option<usize>,
}

/// Bounds on `box(M_2(K_{n_1,...,n_k}))` with `l` parts of size one.
pub fn multipartite_mycielski_bounds(parts: &[usize]) -> Result<MultipartiteBounds> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(invalid("part sizes must be a nonempty list of positive integers"));
    }
    let k = parts.len();
    let l = parts.iter().filter(|&&p| p == 1).count();
    let lower = (2 * k - l).div_ceil(2);
    Ok(MultipartiteBounds {
        lower,
        upper: k.min(lower + 1),
        exact: (!needs_extra_part(l)).then_some(lower),
    })
}

/// Instantiated boxicity/chromatic-number inequality for one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChromaticCheck {
    pub n: usize,
    pub boxicity: usize,
    pub chi: usize,
    /// `n/2 - box`.
    pub s: Rational64,
    /// `n / (2s + 2)`, the least chromatic number the inequality allows.
    pub required: Rational64,
    pub holds: bool,
}

/// If `box(g) = n/2 - s` with `s >= 0` then `chi(g) >= n / (2s + 2)`.
pub fn chromatic_boxicity_check(g: &Graph, cfg: &EngineConfig) -> Result<ChromaticCheck> {
    let n = g.n();
    let boxicity = exact_boxicity(g, cfg)?.value;
    let chi = chromatic_number(g)?;
    let s = Rational64::new(n as i64, 2) - Rational64::from_integer(boxicity as i64);
    if s < Rational64::from_integer(0) {
        return Err(Error::HardFault(format!(
            "box = {boxicity} exceeds n/2 = {n}/2, contradicting the floor(n/2) maximum"
        )));
    }
    let required = Rational64::from_integer(n as i64) / (s * 2 + 2);
    Ok(ChromaticCheck {
        n,
        boxicity,
        chi,
        s,
        required,
        holds: Rational64::from_integer(chi as i64) >= required,
    })
}

/// Upper bound on `box(g)` obtained by solving the chromatic inequality for `box`:
/// `box <= n/2 - n/(2 chi) + 1`, floored.
pub fn chromatic_upper_bound(n: usize, chi: usize) -> usize {
    let bound = Rational64::new(n as i64, 2) - Rational64::new(n as i64, 2 * chi as i64) + 1;
    bound.floor().to_integer() as usize
}
