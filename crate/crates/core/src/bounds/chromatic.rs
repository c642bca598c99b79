use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`chromatic_number`].
pub const CHROMATIC_MAX_N: usize = 16;

/// Exact chromatic number by iterative deepening on the number of colours.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    if g.n() > CHROMATIC_MAX_N {
        return Err(Error::Capacity {
            what: "vertex count for chromatic number",
            actual: g.n(),
            limit: CHROMATIC_MAX_N,
            flag: "chromatic cap",
        });
    }
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let start = if g.edge_count() == 0 { 1 } else { 2 };
    let mut colour = vec![usize::MAX; g.n()];
    Ok((start..=g.n())
        .find(|&k| colourable(g, &order, 0, k, 0, &mut colour))
        .expect("n colours always suffice"))
}

// Colours are introduced in order, so a vertex may only open colour `used`.
fn colourable(g: &Graph, order: &[usize], at: usize, k: usize, used: usize, colour: &mut [usize]) -> bool {
    if at == order.len() {
        return true;
    }
    let v = order[at];
    for c in 0..k.min(used + 1) {
        if g.neighbors(v).iter().any(|w| colour[w] == c) {
            continue;
        }
        colour[v] = c;
        if colourable(g, order, at + 1, k, used.max(c + 1), colour) {
            return true;
        }
    }
    colour[v] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::Family;

    fn chi(s: &str) -> usize {
        chromatic_number(&s.parse::<Family>().unwrap().build().unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(chi("complete:6"), 6);
        assert_eq!(chi("cycle:5"), 3);
        assert_eq!(chi("cycle:6"), 2);
        assert_eq!(chi("empty:4"), 1);
        assert_eq!(chi("mycielski:mycielski:complete:2:2:2"), 4); // Grötzsch graph
    }

    #[test]
    fn agrees_with_exhaustive_colouring() {
        for g in crate::corpus::graphs_up_to(6) {
            let n = g.n();
            let brute = (1..=n)
                .find(|&k| {
                    (0..k.pow(n as u32)).any(|mut code| {
                        let col: Vec<usize> = (0..n)
                            .map(|_| {
                                let c = code % k;
                                code /= k;
                                c
                            })
                            .collect();
                        g.edges().all(|(u, v)| col[u] != col[v])
                    })
                })
                .unwrap();
            assert_eq!(chromatic_number(&g).unwrap(), brute, "{g:?}");
        }
    }

    #[test]
    fn cap() {
        assert!(chromatic_number(&Graph::empty(17).unwrap()).is_err());
    }
}
