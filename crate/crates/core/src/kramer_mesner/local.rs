//! Seeded local search for `A x = lambda 1`.
//!
//! Minimises `sum_r |(A x)_r - lambda|` by single-column flips. Each step
//! picks a violated row at random and flips one of its columns in the
//! direction that row needs: the best non-tabu move, or with small
//! probability a random one. Untouched by the exclusion mask.

use rand::seq::IndexedRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{KmSystem, SolutionVector};

const NOISE: f64 = 0.1;
const TABU: u64 = 10;

pub(super) struct LocalSearch<'a> {
    system: &'a KmSystem,
    col_entries: Vec<Vec<(u32, i64)>>,
    row_entries: Vec<Vec<(u32, i64)>>,
    x: Vec<bool>,
    /// `(A x)_r - lambda`
    diff: Vec<i64>,
    violated: Vec<u32>,
    /// Position in `violated`, or `u32::MAX`.
    slot: Vec<u32>,
    last_flip: Vec<u64>,
    /// Flips made so far, across calls to `run`.
    clock: u64,
}

impl<'a> LocalSearch<'a> {
    pub(super) fn new(system: &'a KmSystem, rng: &mut ChaCha8Rng) -> Self {
        let (rows, cols) = (system.row_count(), system.col_count());
        let mut col_entries = vec![Vec::new(); cols];
        let mut row_entries = vec![Vec::new(); rows];
        for (r, entries) in row_entries.iter_mut().enumerate() {
            for (c, &e) in system.row(r).iter().enumerate() {
                if e > 0 && !system.excluded()[c] {
                    col_entries[c].push((r as u32, e as i64));
                    entries.push((c as u32, e as i64));
                }
            }
        }
        let density = system.lambda() as f64 / system.lambda_max().max(1) as f64;
        let x: Vec<bool> = (0..cols)
            .map(|c| !col_entries[c].is_empty() && rng.random_bool(density.clamp(0.0, 1.0)))
            .collect();
        let lambda = system.lambda() as i64;
        let mut diff = vec![-lambda; rows];
        for c in (0..cols).filter(|&c| x[c]) {
            for &(r, e) in &col_entries[c] {
                diff[r as usize] += e;
            }
        }
        let mut s = LocalSearch {
            system,
            col_entries,
            row_entries,
            x,
            diff,
            violated: Vec::new(),
            slot: vec![u32::MAX; rows],
            last_flip: vec![0; cols],
            clock: 0,
        };
        for r in 0..rows {
            s.refresh(r);
        }
        s
    }

    fn refresh(&mut self, r: usize) {
        let bad = self.diff[r] != 0;
        let at = self.slot[r];
        if bad && at == u32::MAX {
            self.slot[r] = self.violated.len() as u32;
            self.violated.push(r as u32);
        } else if !bad && at != u32::MAX {
            let last = *self.violated.last().expect("nonempty");
            self.violated.swap_remove(at as usize);
            if last as usize != r {
                self.slot[last as usize] = at;
            }
            self.slot[r] = u32::MAX;
        }
    }

    /// Change in the objective if `c` is flipped.
    fn delta(&self, c: usize) -> i64 {
        let sign = if self.x[c] { -1 } else { 1 };
        self.col_entries[c]
            .iter()
            .map(|&(r, e)| {
                let d = self.diff[r as usize];
                (d + sign * e).abs() - d.abs()
            })
            .sum()
    }

    fn flip(&mut self, c: usize, step: u64) {
        let sign = if self.x[c] { -1 } else { 1 };
        self.x[c] = !self.x[c];
        self.last_flip[c] = step;
        for i in 0..self.col_entries[c].len() {
            let (r, e) = self.col_entries[c][i];
            self.diff[r as usize] += sign * e;
            self.refresh(r as usize);
        }
    }

    /// Runs up to `steps` flips; returns a solution and the steps used.
    pub(super) fn run(&mut self, rng: &mut ChaCha8Rng, steps: u64) -> (Option<SolutionVector>, u64) {
        let mut candidates: Vec<usize> = Vec::new();
        for used in 0..steps {
            let Some(&r) = self.violated.choose(rng) else {
                let x = SolutionVector::new(self.x.clone());
                debug_assert!(self.system.is_solution(&x));
                return (Some(x), used);
            };
            self.clock += 1;
            let step = self.clock;
            let r = r as usize;
            // A deficient row wants a column switched on, an excess row one off.
            let want_on = self.diff[r] < 0;
            candidates.clear();
            candidates.extend(
                self.row_entries[r]
                    .iter()
                    .map(|&(c, _)| c as usize)
                    .filter(|&c| self.x[c] != want_on),
            );
            let Some(&random) = candidates.choose(rng) else {
                continue;
            };
            let c = if rng.random_bool(NOISE) {
                random
            } else {
                let mut best = (i64::MAX, u32::MAX, random);
                for &c in &candidates {
                    let tabu = self.last_flip[c] != 0 && step - self.last_flip[c] <= TABU;
                    if tabu {
                        continue;
                    }
                    let key = (self.delta(c), rng.random::<u32>(), c);
                    if key < best {
                        best = key;
                    }
                }
                best.2
            };
            self.flip(c, step);
        }
        if self.violated.is_empty() {
            let x = SolutionVector::new(self.x.clone());
            return (Some(x), steps);
        }
        (None, steps)
    }
}
