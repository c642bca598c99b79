//! Minimum set cover over a universe of at most 64 elements, by iterative
//! deepening branch and bound.
//!
//! At each node the search branches on the uncovered element with the fewest
//! covering sets, trying those sets in family order, so the first cover found at
//! the optimal depth is deterministic. A node is cut when even the best
//! remaining set repeated for every remaining slot cannot finish the cover.

/// Outcome of [`min_set_cover`]: indices into the family, in the order chosen.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetCover {
    pub chosen: Vec<usize>,
    pub nodes: u64,
}

/// Smallest subfamily of `family` whose union is `universe`, or `None` when the
/// whole family does not cover it.
pub fn min_set_cover(universe: u64, family: &[u64]) -> Option<SetCover> {
    if family.iter().fold(0, |acc, s| acc | s) & universe != universe {
        return None;
    }
    let covering: Vec<Vec<usize>> = (0..64)
        .map(|e| {
            (0..family.len())
                .filter(|&i| family[i] >> e & 1 == 1)
                .collect()
        })
        .collect();
    let upper = greedy(universe, family).len();
    let mut search = Search {
        family,
        covering: &covering,
        chosen: Vec::new(),
        nodes: 0,
    };
    for depth in lower_bound(universe, family)..=upper {
        if search.dfs(universe, depth) {
            return Some(SetCover {
                chosen: search.chosen,
                nodes: search.nodes,
            });
        }
    }
    unreachable!("the greedy cover has {upper} sets")
}

/// Greedy cover: repeatedly take the first set covering the most uncovered elements.
pub fn greedy(universe: u64, family: &[u64]) -> Vec<usize> {
    let mut left = universe;
    let mut out = Vec::new();
    while left != 0 {
        let (best, gain) = family
            .iter()
            .enumerate()
            .map(|(i, s)| (i, (s & left).count_ones()))
            .fold((0, 0), |acc, x| if x.1 > acc.1 { x } else { acc });
        assert!(gain > 0, "family does not cover the universe");
        out.push(best);
        left &= !family[best];
    }
    out
}

fn lower_bound(uncovered: u64, family: &[u64]) -> usize {
    if uncovered == 0 {
        return 0;
    }
    let best = family.iter().map(|s| (s & uncovered).count_ones()).max().unwrap_or(0);
    if best == 0 {
        return usize::MAX;
    }
    uncovered.count_ones().div_ceil(best) as usize
}

struct Search<'a> {
    family: &'a [u64],
    covering: &'a [Vec<usize>],
    chosen: Vec<usize>,
    nodes: u64,
}

impl Search<'_> {
    fn dfs(&mut self, uncovered: u64, slots: usize) -> bool {
        self.nodes += 1;
        if uncovered == 0 {
            return true;
        }
        if slots == 0 || lower_bound(uncovered, self.family) > slots {
            return false;
        }
        let pivot = (0..64)
            .filter(|&e| uncovered >> e & 1 == 1)
            .min_by_key(|&e| self.covering[e].len())
            .expect("uncovered is nonempty");
        for &i in &self.covering[pivot] {
            self.chosen.push(i);
            if self.dfs(uncovered & !self.family[i], slots - 1) {
                return true;
            }
            self.chosen.pop();
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute_min(universe: u64, family: &[u64]) -> Option<usize> {
        (0u32..1 << family.len())
            .filter(|pick| {
                (0..family.len())
                    .filter(|&i| pick >> i & 1 == 1)
                    .fold(0, |acc, i| acc | family[i])
                    & universe
                    == universe
            })
            .map(|pick| pick.count_ones() as usize)
            .min()
    }

    #[test]
    fn small_instance() {
        // universe {0..5}; optimum {0,1,2} + {3,4,5}
        let family = [0b000111, 0b111000, 0b001100, 0b010010, 0b100001];
        let cover = min_set_cover(0b111111, &family).unwrap();
        assert_eq!(cover.chosen, vec![0, 1]);
        assert_eq!(min_set_cover(0b1000000, &family), None);
        assert_eq!(min_set_cover(0, &family).unwrap().chosen, Vec::<usize>::new());
    }

    proptest! {
        #[test]
        fn optimal_against_enumeration(family in prop::collection::vec(1u64..1 << 8, 1..9)) {
            let universe = family.iter().fold(0, |a, s| a | s);
            let cover = min_set_cover(universe, &family).unwrap();
            prop_assert_eq!(Some(cover.chosen.len()), brute_min(universe, &family));
            let union = cover.chosen.iter().fold(0, |a, &i| a | family[i]);
            prop_assert_eq!(union, universe);
        }
    }
}
