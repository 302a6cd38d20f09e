//! Exact depth-first search for 0/1 solutions of a Kramer-Mesner system.
//!
//! Each row keeps its residual (how much of `lambda` is still missing) and
//! the total of its undecided entries. A row is dead when the residual is
//! negative or exceeds what its undecided columns can still add. After every
//! decision the touched rows propagate: a satisfied row forbids its remaining
//! columns, a row that needs all of its remaining weight forces every
//! remaining column in, and a column whose entry exceeds the residual is
//! forbidden. Branching takes the tightest row and splits on one of its
//! columns (in, then out), so every 0/1 vector is reached at most once.

use std::ops::ControlFlow;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::local::LocalSearch;
use super::{KmSystem, SolutionVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum State {
    Open,
    In,
    Out,
}

/// Result of a single-solution search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    Found(SolutionVector),
    /// The whole search space was explored without a solution.
    Infeasible,
    /// The node budget ran out first; nothing is known about existence.
    BudgetExhausted { nodes: u64 },
}

impl SolveOutcome {
    pub fn solution(self) -> Option<SolutionVector> {
        match self {
            SolveOutcome::Found(x) => Some(x),
            _ => None,
        }
    }

    pub fn is_infeasible(&self) -> bool {
        matches!(self, SolveOutcome::Infeasible)
    }
}

/// Result of an exhaustive enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AllSolutions {
    pub solutions: Vec<SolutionVector>,
    /// More solutions exist beyond the requested cap.
    pub cap_exceeded: bool,
    pub nodes: u64,
}

enum Stop {
    Done,
    Budget,
}

struct Search {
    col_entries: Vec<Vec<(u32, i64)>>,
    row_entries: Vec<Vec<(u32, i64)>>,
    state: Vec<State>,
    residual: Vec<i64>,
    avail: Vec<i64>,
    open: Vec<u32>,
    /// Branching priority of each column; smaller goes first.
    rank: Vec<u32>,
    trail: Vec<u32>,
    queue: Vec<u32>,
    nodes: u64,
    budget: Option<u64>,
}

impl Search {
    fn new(system: &KmSystem, rank: Vec<u32>, budget: Option<u64>) -> Option<Self> {
        let (rows, cols) = (system.row_count(), system.col_count());
        let mut col_entries = vec![Vec::new(); cols];
        let mut row_entries = vec![Vec::new(); rows];
        for (r, entries) in row_entries.iter_mut().enumerate() {
            for (c, &e) in system.row(r).iter().enumerate() {
                if e > 0 {
                    col_entries[c].push((r as u32, e as i64));
                    entries.push((c as u32, e as i64));
                }
            }
        }
        let lambda = i64::try_from(system.lambda()).ok()?;
        let mut s = Search {
            state: vec![State::Open; cols],
            residual: vec![lambda; rows],
            avail: vec![0; rows],
            open: vec![0; rows],
            col_entries,
            row_entries,
            rank,
            trail: Vec::new(),
            queue: Vec::new(),
            nodes: 0,
            budget,
        };
        for r in 0..rows {
            s.avail[r] = s.row_entries[r].iter().map(|&(_, e)| e).sum();
            s.open[r] = s.row_entries[r].len() as u32;
        }
        // Excluded columns, and columns meeting no row, never enter.
        let mut ok = true;
        for c in 0..cols {
            if system.excluded()[c] || s.col_entries[c].is_empty() {
                ok &= s.assign(c as u32, State::Out);
            }
        }
        s.trail.clear();
        s.queue.extend(0..rows as u32);
        (ok && s.propagate()).then_some(s)
    }

    /// Records a decision; returns false if a touched row is now dead.
    fn assign(&mut self, c: u32, v: State) -> bool {
        debug_assert_eq!(self.state[c as usize], State::Open);
        self.state[c as usize] = v;
        self.trail.push(c);
        let mut ok = true;
        for &(r, e) in &self.col_entries[c as usize] {
            let r = r as usize;
            self.avail[r] -= e;
            self.open[r] -= 1;
            if v == State::In {
                self.residual[r] -= e;
            }
            ok &= self.residual[r] >= 0 && self.residual[r] <= self.avail[r];
            self.queue.push(r as u32);
        }
        ok
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let c = self.trail.pop().unwrap();
            let v = self.state[c as usize];
            for &(r, e) in &self.col_entries[c as usize] {
                let r = r as usize;
                self.avail[r] += e;
                self.open[r] += 1;
                if v == State::In {
                    self.residual[r] += e;
                }
            }
            self.state[c as usize] = State::Open;
        }
        self.queue.clear();
    }

    fn propagate(&mut self) -> bool {
        while let Some(r) = self.queue.pop() {
            let r = r as usize;
            let (res, avail) = (self.residual[r], self.avail[r]);
            if res < 0 || res > avail {
                return false;
            }
            if self.open[r] == 0 {
                continue;
            }
            for i in 0..self.row_entries[r].len() {
                let (c, e) = self.row_entries[r][i];
                if self.state[c as usize] != State::Open {
                    continue;
                }
                let forced = if res == avail {
                    Some(State::In)
                } else if e > self.residual[r] {
                    Some(State::Out)
                } else {
                    None
                };
                if let Some(v) = forced {
                    if !self.assign(c, v) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Tightest live row: least slack, then fewest open columns.
    fn pick_row(&self) -> Option<usize> {
        (0..self.residual.len())
            .filter(|&r| self.residual[r] > 0)
            .min_by_key(|&r| (self.avail[r] - self.residual[r], self.open[r], r))
    }

    fn pick_col(&self, r: usize) -> u32 {
        self.row_entries[r]
            .iter()
            .map(|&(c, _)| c)
            .filter(|&c| self.state[c as usize] == State::Open)
            .min_by_key(|&c| self.rank[c as usize])
            .expect("a live unsatisfied row has an open column")
    }

    fn solution(&self) -> SolutionVector {
        SolutionVector::new(self.state.iter().map(|&s| s == State::In).collect())
    }

    fn dfs(&mut self, found: &mut dyn FnMut(SolutionVector) -> ControlFlow<()>) -> ControlFlow<Stop> {
        self.nodes += 1;
        if self.budget.is_some_and(|b| self.nodes > b) {
            return ControlFlow::Break(Stop::Budget);
        }
        let Some(r) = self.pick_row() else {
            // Every row is satisfied, so propagation closed all open columns.
            debug_assert!(self.state.iter().all(|&s| s != State::Open));
            return match found(self.solution()) {
                ControlFlow::Continue(()) => ControlFlow::Continue(()),
                ControlFlow::Break(()) => ControlFlow::Break(Stop::Done),
            };
        };
        let c = self.pick_col(r);
        for v in [State::In, State::Out] {
            let mark = self.trail.len();
            if self.assign(c, v) && self.propagate() {
                if let ControlFlow::Break(stop) = self.dfs(found) {
                    self.undo(mark);
                    return ControlFlow::Break(stop);
                }
            }
            self.undo(mark);
        }
        ControlFlow::Continue(())
    }
}

/// Local search only: up to `steps` flips from a start drawn with `seed`.
/// Never proves infeasibility.
pub fn solve_local(system: &KmSystem, seed: u64, steps: u64) -> SolveOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ls = LocalSearch::new(system, &mut rng);
    match ls.run(&mut rng, steps) {
        (Some(x), _) => SolveOutcome::Found(x),
        (None, used) => SolveOutcome::BudgetExhausted { nodes: used },
    }
}

/// Steps of the first search round; each later round doubles.
const FIRST_ROUND: u64 = 1 << 10;
/// A search node costs roughly this many local steps, so exact rounds get
/// this fraction of each round's steps.
const DFS_SHARE: u64 = 16;

/// One exact DFS run under a fixed column order.
fn dfs_once(system: &KmSystem, rank: Vec<u32>, budget: u64) -> (SolveOutcome, u64) {
    let Some(mut search) = Search::new(system, rank, Some(budget)) else {
        return (SolveOutcome::Infeasible, 0);
    };
    let mut hit = None;
    let flow = search.dfs(&mut |x| {
        hit = Some(x);
        ControlFlow::Break(())
    });
    let used = search.nodes.min(budget);
    match (hit, flow) {
        (Some(x), _) => (SolveOutcome::Found(x), used),
        (None, ControlFlow::Break(Stop::Budget)) => (SolveOutcome::BudgetExhausted { nodes: used }, used),
        (None, _) => (SolveOutcome::Infeasible, used),
    }
}

/// Finds one solution, seeded by `seed`.
///
/// Rounds alternate between a local search that resumes where it stopped
/// and a fresh exact depth-first search over a seeded column order, each
/// round with twice the steps of the previous one (the exact search gets a
/// fixed fraction). The exact search
/// eventually runs to completion, so `Infeasible` is a proof. The "random
/// design" is whichever solution this schedule meets first. `budget` caps
/// the total of local steps and search nodes.
pub fn solve_one(system: &KmSystem, seed: u64, budget: Option<u64>) -> SolveOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rank: Vec<u32> = (0..system.col_count() as u32).collect();
    rank.shuffle(&mut rng);
    let mut local = LocalSearch::new(system, &mut rng);
    let mut spent = 0u64;
    let mut round = FIRST_ROUND;
    loop {
        let left = budget.map_or(u64::MAX, |b| b - spent);
        let (outcome, used) = dfs_once(system, rank.clone(), (round / DFS_SHARE).max(FIRST_ROUND).min(left));
        spent += used;
        match outcome {
            SolveOutcome::Found(x) => {
                debug_assert!(system.is_solution(&x));
                return SolveOutcome::Found(x);
            }
            SolveOutcome::Infeasible => return SolveOutcome::Infeasible,
            SolveOutcome::BudgetExhausted { .. } => {}
        }
        let left = budget.map_or(u64::MAX, |b| b - spent);
        if left == 0 {
            return SolveOutcome::BudgetExhausted { nodes: spent };
        }
        let (hit, used) = local.run(&mut rng, round.min(left));
        spent += used;
        if let Some(x) = hit {
            debug_assert!(system.is_solution(&x));
            return SolveOutcome::Found(x);
        }
        if budget.is_some_and(|b| spent >= b) {
            return SolveOutcome::BudgetExhausted { nodes: spent };
        }
        round = round.saturating_mul(2);
    }
}

/// Every solution, in the deterministic order of a lexicographic column
/// search, up to `limit` of them.
pub fn solve_all(system: &KmSystem, limit: Option<usize>) -> AllSolutions {
    let rank: Vec<u32> = (0..system.col_count() as u32).collect();
    let Some(mut search) = Search::new(system, rank, None) else {
        return AllSolutions { solutions: Vec::new(), cap_exceeded: false, nodes: 0 };
    };
    let mut solutions = Vec::new();
    let mut cap_exceeded = false;
    let _ = search.dfs(&mut |x| {
        if limit.is_some_and(|l| solutions.len() >= l) {
            cap_exceeded = true;
            return ControlFlow::Break(());
        }
        debug_assert!(system.is_solution(&x));
        solutions.push(x);
        ControlFlow::Continue(())
    });
    AllSolutions { solutions, cap_exceeded, nodes: search.nodes }
}
