//! Exact cover by backtracking (Knuth's Algorithm X on plain arrays).
//!
//! Items are `0..universe`, options are item lists. At each step the
//! uncovered item with the fewest live options is chosen and each of its
//! options is tried in input order, so results are deterministic.

use std::ops::ControlFlow;

struct Cover<'a> {
    options: &'a [Vec<u32>],
    by_item: Vec<Vec<u32>>,
    covered: Vec<bool>,
    blocked: Vec<u32>,
    chosen: Vec<usize>,
}

impl<'a> Cover<'a> {
    fn new(universe: usize, options: &'a [Vec<u32>]) -> Self {
        let mut by_item = vec![Vec::new(); universe];
        let mut blocked = vec![0u32; options.len()];
        for (o, items) in options.iter().enumerate() {
            let mut sorted = items.clone();
            sorted.sort_unstable();
            let repeated = sorted.windows(2).any(|w| w[0] == w[1]);
            if items.is_empty() || repeated || items.iter().any(|&i| i as usize >= universe) {
                // Never usable in an exact cover.
                blocked[o] = 1;
                continue;
            }
            for &i in items {
                by_item[i as usize].push(o as u32);
            }
        }
        Cover { options, by_item, covered: vec![false; universe], blocked, chosen: Vec::new() }
    }

    fn live(&self, item: usize) -> usize {
        self.by_item[item].iter().filter(|&&o| self.blocked[o as usize] == 0).count()
    }

    fn select(&mut self, o: usize, delta: i32) {
        for &i in &self.options[o] {
            let i = i as usize;
            self.covered[i] = delta > 0;
            for &other in &self.by_item[i] {
                let b = &mut self.blocked[other as usize];
                *b = (*b as i32 + delta) as u32;
            }
        }
    }

    fn search(&mut self, found: &mut dyn FnMut(&[usize]) -> ControlFlow<()>) -> ControlFlow<()> {
        let next = (0..self.covered.len())
            .filter(|&i| !self.covered[i])
            .min_by_key(|&i| (self.live(i), i));
        let Some(item) = next else {
            return found(&self.chosen);
        };
        let candidates: Vec<u32> = self.by_item[item]
            .iter()
            .copied()
            .filter(|&o| self.blocked[o as usize] == 0)
            .collect();
        for o in candidates {
            let o = o as usize;
            self.select(o, 1);
            self.chosen.push(o);
            let flow = self.search(found);
            self.chosen.pop();
            self.select(o, -1);
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Indices of options that partition `0..universe`, or `None`.
pub fn exact_cover(universe: usize, options: &[Vec<u32>]) -> Option<Vec<usize>> {
    let mut cover = Cover::new(universe, options);
    let mut out = None;
    let _ = cover.search(&mut |chosen| {
        let mut c = chosen.to_vec();
        c.sort_unstable();
        out = Some(c);
        ControlFlow::Break(())
    });
    out
}

/// All exact covers (up to `limit`), each as sorted option indices.
pub fn exact_cover_all(universe: usize, options: &[Vec<u32>], limit: Option<usize>) -> Vec<Vec<usize>> {
    let mut cover = Cover::new(universe, options);
    let mut out = Vec::new();
    let _ = cover.search(&mut |chosen| {
        let mut c = chosen.to_vec();
        c.sort_unstable();
        out.push(c);
        if limit.is_some_and(|l| out.len() >= l) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        let opts = vec![vec![0, 1], vec![2], vec![0]];
        assert_eq!(exact_cover(3, &opts), Some(vec![0, 1]));
        assert_eq!(exact_cover(2, &[vec![0], vec![0]]), None);
        assert_eq!(exact_cover(0, &[]), Some(vec![]));
    }

    #[test]
    fn malformed_options_are_ignored() {
        let opts = vec![vec![0, 0, 1], vec![0, 1], vec![5], vec![]];
        assert_eq!(exact_cover(2, &opts), Some(vec![1]));
    }

    #[test]
    fn counts_all_covers() {
        // Perfect matchings of K4: 3.
        let edges: Vec<Vec<u32>> = vec![
            vec![0, 1],
            vec![0, 2],
            vec![0, 3],
            vec![1, 2],
            vec![1, 3],
            vec![2, 3],
        ];
        let all = exact_cover_all(4, &edges, None);
        assert_eq!(all.len(), 3);
        for c in &all {
            let mut items: Vec<u32> = c.iter().flat_map(|&o| edges[o].clone()).collect();
            items.sort();
            assert_eq!(items, vec![0, 1, 2, 3]);
        }
        assert_eq!(exact_cover_all(4, &edges, Some(2)).len(), 2);
    }
}
