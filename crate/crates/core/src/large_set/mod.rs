//! Designs and large sets built from orbits, their verification from first
//! principles, and the two search procedures:
//!
//! * Algorithm A repeatedly solves the Kramer-Mesner system for one design,
//!   then excludes the orbits it used. It never backtracks across designs,
//!   so a failure says nothing about existence.
//! * Algorithm B enumerates every design in the system and looks for an
//!   exact cover of the orbits by those designs.

mod exact_cover;

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{param, Error, Result};
use crate::gf_space::{FieldParams, Subspace, SubspaceIndex, SubspacePatterns};
use crate::group_action::OrbitPartition;
use crate::kramer_mesner::{
    exclude_columns, solve_all, solve_one, KmSystem, SolutionVector, SolveOutcome,
};
use crate::qarith::{check_large_set_admissible, q_binomial, DesignParams, LargeSetParams};

pub use exact_cover::{exact_cover, exact_cover_all};

/// A design given as a union of `G`-orbits of `k`-subspaces.
#[derive(Clone, Debug)]
pub struct Design {
    params: DesignParams,
    partition: Arc<OrbitPartition>,
    orbit_ids: Vec<u32>,
}

impl PartialEq for Design {
    fn eq(&self, other: &Self) -> bool {
        self.params == other.params
            && self.orbit_ids == other.orbit_ids
            && *self.partition == *other.partition
    }
}

impl Design {
    /// Orbit ids are sorted; repeated ids are kept so that verification can
    /// flag the design as not simple.
    pub fn new(params: DesignParams, partition: Arc<OrbitPartition>, mut orbit_ids: Vec<u32>) -> Result<Self> {
        let fp = partition.params();
        if (params.n, params.q, params.k) != (fp.n(), fp.q(), partition.k()) {
            return param(format!(
                "design parameters {}-({},{},{};{}) do not match a partition of {}-subspaces of F_{}^{}",
                params.t, params.n, params.k, params.lambda, params.q,
                partition.k(), fp.q(), fp.n()
            ));
        }
        if let Some(&bad) = orbit_ids.iter().find(|&&o| o as usize >= partition.orbit_count()) {
            return param(format!(
                "orbit id {bad} out of range (partition has {} orbits)",
                partition.orbit_count()
            ));
        }
        orbit_ids.sort_unstable();
        Ok(Design { params, partition, orbit_ids })
    }

    pub fn from_solution(params: DesignParams, partition: Arc<OrbitPartition>, x: &SolutionVector) -> Result<Self> {
        if x.len() != partition.orbit_count() {
            return param("solution length differs from the number of orbits");
        }
        Self::new(params, partition, x.support())
    }

    pub fn params(&self) -> &DesignParams {
        &self.params
    }

    pub fn partition(&self) -> &Arc<OrbitPartition> {
        &self.partition
    }

    pub fn orbit_ids(&self) -> &[u32] {
        &self.orbit_ids
    }

    pub fn block_count(&self) -> usize {
        self.orbit_ids.iter().map(|&o| self.partition.orbit_size(o)).sum()
    }

    /// All blocks, orbit by orbit.
    pub fn blocks(&self) -> Vec<Subspace> {
        let idx = self.partition.index();
        self.orbit_ids
            .iter()
            .flat_map(|&o| self.partition.members(o).iter().map(|&id| idx.get(id).clone()))
            .collect()
    }

    pub fn representatives(&self) -> Vec<&Subspace> {
        self.orbit_ids.iter().map(|&o| self.partition.representative(o)).collect()
    }
}

/// `N` designs over one orbit partition.
#[derive(Clone, Debug, PartialEq)]
pub struct LargeSet {
    params: LargeSetParams,
    partition: Arc<OrbitPartition>,
    designs: Vec<Design>,
}

impl LargeSet {
    /// Groups designs; does not verify them.
    pub fn new(designs: Vec<Design>) -> Result<Self> {
        let Some(first) = designs.first() else {
            return param("a large set needs at least one design");
        };
        let partition = first.partition.clone();
        let p = first.params;
        for d in &designs[1..] {
            if *d.partition != *partition {
                return param("designs of a large set must share one orbit partition");
            }
            if d.params != p {
                return param("designs of a large set must share their parameters");
            }
        }
        let params = LargeSetParams::new(designs.len() as u64, p.t, p.n, p.k, p.q)?;
        Ok(LargeSet { params, partition, designs })
    }

    pub fn params(&self) -> &LargeSetParams {
        &self.params
    }

    pub fn partition(&self) -> &Arc<OrbitPartition> {
        &self.partition
    }

    pub fn designs(&self) -> &[Design] {
        &self.designs
    }

    pub fn design_params(&self) -> &DesignParams {
        &self.designs[0].params
    }
}

/// Coverage statistics of a block list against every `t`-subspace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DesignReport {
    pub params: DesignParams,
    pub block_count: usize,
    pub distinct_blocks: usize,
    pub simple: bool,
    pub t_subspace_count: usize,
    pub coverage_min: u64,
    pub coverage_max: u64,
    /// coverage value -> number of `t`-subspaces with that coverage
    pub coverage_histogram: BTreeMap<u64, u64>,
    /// `t`-subspaces whose coverage differs from `lambda`.
    pub deficient: u64,
    pub verdict: bool,
}

/// Verifies designs by crediting each block's `t`-subspaces into an index of
/// all `t`-subspaces of `V`.
pub struct DesignVerifier {
    index: SubspaceIndex,
}

impl DesignVerifier {
    pub fn new(field: FieldParams, t: u32) -> Result<Self> {
        Ok(DesignVerifier { index: SubspaceIndex::new(field, t)? })
    }

    pub fn t(&self) -> u32 {
        self.index.k()
    }

    /// Coverage of every `t`-subspace, in enumeration order.
    pub fn coverage(&self, blocks: &[Subspace], k: u32) -> Result<Vec<u64>> {
        let field = self.index.params();
        if let Some(b) = blocks.iter().find(|b| b.dim() != k || b.params() != field) {
            return param(format!(
                "block {b} is not a {k}-subspace of F_{}^{}",
                field.q(),
                field.n()
            ));
        }
        let t = self.t();
        if t > k {
            return param(format!("t = {t} exceeds block dimension {k}"));
        }
        let patterns = SubspacePatterns::new(field.q(), k, t)?;
        let len = self.index.len();
        let counts = blocks
            .par_chunks(1024)
            .map(|chunk| {
                let mut local = vec![0u64; len];
                for b in chunk {
                    patterns.for_each_in(b, |s| {
                        let i = self.index.position(&s).expect("t-subspace enumerated");
                        local[i as usize] += 1;
                    });
                }
                local
            })
            .reduce(
                || vec![0u64; len],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            );
        Ok(counts)
    }

    pub fn verify(&self, blocks: &[Subspace], params: &DesignParams) -> Result<DesignReport> {
        if params.t != self.t() {
            return param(format!("verifier built for t = {}, design has t = {}", self.t(), params.t));
        }
        let coverage = self.coverage(blocks, params.k)?;
        let mut histogram = BTreeMap::new();
        for &c in &coverage {
            *histogram.entry(c).or_insert(0u64) += 1;
        }
        let mut sorted: Vec<&Subspace> = blocks.iter().collect();
        sorted.par_sort_unstable();
        sorted.dedup();
        let distinct = sorted.len();
        let deficient = coverage.iter().filter(|&&c| c != params.lambda).count() as u64;
        let simple = distinct == blocks.len();
        Ok(DesignReport {
            params: *params,
            block_count: blocks.len(),
            distinct_blocks: distinct,
            simple,
            t_subspace_count: coverage.len(),
            coverage_min: coverage.iter().copied().min().unwrap_or(0),
            coverage_max: coverage.iter().copied().max().unwrap_or(0),
            coverage_histogram: histogram,
            deficient,
            verdict: simple && deficient == 0,
        })
    }
}

/// Is every `t`-subspace in exactly `lambda` of the blocks?
pub fn verify_design(blocks: &[Subspace], params: &DesignParams) -> Result<DesignReport> {
    let field = FieldParams::new(params.q, params.n)?;
    DesignVerifier::new(field, params.t)?.verify(blocks, params)
}

/// Per-design verdicts plus partition checks on the orbit ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LargeSetReport {
    pub params: LargeSetParams,
    pub group: String,
    pub designs: Vec<DesignReport>,
    /// Pairs `(i, j)` of designs sharing an orbit.
    pub overlapping_pairs: Vec<(usize, usize)>,
    pub pairwise_disjoint: bool,
    pub orbit_count: usize,
    pub orbits_covered: usize,
    pub total_blocks: u64,
    pub expected_blocks: u64,
    pub complete: bool,
    pub notes: Vec<String>,
    pub verdict: bool,
}

pub fn verify_large_set(ls: &LargeSet) -> Result<LargeSetReport> {
    let dp = *ls.design_params();
    let verifier = DesignVerifier::new(ls.partition.params(), dp.t)?;
    let designs = ls
        .designs
        .iter()
        .map(|d| verifier.verify(&d.blocks(), &d.params))
        .collect::<Result<Vec<_>>>()?;

    let orbit_count = ls.partition.orbit_count();
    let mut owner: Vec<Option<usize>> = vec![None; orbit_count];
    let mut overlapping = Vec::new();
    for (i, d) in ls.designs.iter().enumerate() {
        for &o in &d.orbit_ids {
            match owner[o as usize] {
                Some(j) if !overlapping.contains(&(j, i)) => overlapping.push((j, i)),
                Some(_) => {}
                None => owner[o as usize] = Some(i),
            }
        }
    }
    let orbits_covered = owner.iter().filter(|o| o.is_some()).count();
    let total_blocks: u64 = ls.designs.iter().map(|d| d.block_count() as u64).sum();
    let expected_blocks = q_binomial(dp.n, dp.k, dp.q)?;
    let complete = orbits_covered == orbit_count && total_blocks == expected_blocks;
    let pairwise_disjoint = overlapping.is_empty();

    let mut notes = Vec::new();
    if ls.params.lambda() != Some(dp.lambda) {
        notes.push(format!(
            "lambda * N = {} * {} differs from lambda_max = {}",
            dp.lambda,
            ls.params.designs,
            dp.lambda_max()
        ));
    }
    notes.extend(crate::duality::printed_index_note(&dp));
    let verdict = designs.iter().all(|r| r.verdict) && pairwise_disjoint && complete;
    Ok(LargeSetReport {
        params: ls.params,
        group: ls.partition.group().label(),
        designs,
        overlapping_pairs: overlapping,
        pairwise_disjoint,
        orbit_count,
        orbits_covered,
        total_blocks,
        expected_blocks,
        complete,
        notes,
        verdict,
    })
}

/// Builds the large set and refuses to hand it out unless it verifies.
fn certified(designs: Vec<Design>) -> Result<LargeSet> {
    let ls = LargeSet::new(designs)?;
    let report = verify_large_set(&ls)?;
    if !report.verdict {
        return Err(Error::Consistency(
            "search produced a large set that fails verification".into(),
        ));
    }
    Ok(ls)
}

/// Knobs shared by both algorithms. The default is a single checked run
/// with seed 0 and no limits.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchOptions {
    pub seed: u64,
    /// Algorithm A: cap on the steps of each solve.
    pub budget: Option<u64>,
    /// Algorithm A: further attempts after a failure, attempt `r` using
    /// seed `seed + r`. Zero runs the algorithm exactly once.
    pub restarts: u32,
    /// Algorithm B: cap on the design pool.
    pub pool_cap: Option<usize>,
    /// Skip the divisibility conditions (`lambda * N = lambda_max` is still
    /// required).
    pub force: bool,
}

fn check_target(system: &KmSystem, designs: u64, force: bool) -> Result<DesignParams> {
    let p = system.params();
    let lsp = LargeSetParams::new(designs, system.t(), p.n(), system.k(), p.q())?;
    let report = check_large_set_admissible(&lsp)?;
    if !report.admissible && !force {
        return param(format!(
            "LS_{}[{}]({},{},{}) is not admissible: {}",
            p.q(),
            designs,
            system.t(),
            system.k(),
            p.n(),
            report.failures().join("; ")
        ));
    }
    let dp = lsp.design_params()?;
    if dp.lambda != system.lambda() {
        return param(format!(
            "system has lambda = {}, but N = {designs} needs lambda = {}",
            system.lambda(),
            dp.lambda
        ));
    }
    Ok(dp)
}

/// Why an Algorithm A run stopped without a large set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AlgorithmAStop {
    /// The remaining orbits contain no design.
    NoDesign,
    /// The per-iteration step budget ran out.
    BudgetExhausted { nodes: u64 },
}

/// Failure state of Algorithm A.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgorithmAFailure {
    /// 1-based iteration whose solve step failed.
    pub iteration: usize,
    pub reason: AlgorithmAStop,
    /// Orbit ids of the designs found before the failure.
    pub designs_found: Vec<Vec<u32>>,
    /// Orbits excluded when the failing solve started.
    pub excluded_orbits: usize,
    pub seed: u64,
    pub attempts: u32,
}

#[derive(Clone, Debug, PartialEq)]
pub enum AlgorithmAOutcome {
    Found(LargeSet),
    Failed(AlgorithmAFailure),
}

/// Algorithm A: solve, remove the chosen orbits, repeat.
///
/// Iteration `i` searches with a seed drawn from a generator seeded by
/// `seed`, so runs are reproducible. `budget` caps the steps of each solve.
pub fn algorithm_a(system: &KmSystem, designs: u64, seed: u64, budget: Option<u64>) -> Result<AlgorithmAOutcome> {
    algorithm_a_with(system, designs, &SearchOptions { seed, budget, ..SearchOptions::default() })
}

fn algorithm_a_once(system: &KmSystem, designs: u64, seed: u64, budget: Option<u64>, force: bool) -> Result<AlgorithmAOutcome> {
    let dp = check_target(system, designs, force)?;
    let partition = system.col_partition().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current = system.clone();
    let mut found: Vec<Design> = Vec::new();
    while found.len() < designs as usize && current.excluded_count() < current.col_count() {
        let iteration_seed: u64 = rng.random();
        let reason = match solve_one(&current, iteration_seed, budget) {
            SolveOutcome::Found(x) => {
                current = exclude_columns(&current, &x)?;
                found.push(Design::from_solution(dp, partition.clone(), &x)?);
                continue;
            }
            SolveOutcome::Infeasible => AlgorithmAStop::NoDesign,
            SolveOutcome::BudgetExhausted { nodes } => AlgorithmAStop::BudgetExhausted { nodes },
        };
        return Ok(AlgorithmAOutcome::Failed(AlgorithmAFailure {
            iteration: found.len() + 1,
            reason,
            designs_found: found.iter().map(|d| d.orbit_ids.clone()).collect(),
            excluded_orbits: current.excluded_count(),
            seed,
            attempts: 1,
        }));
    }
    Ok(AlgorithmAOutcome::Found(certified(found)?))
}

/// [`algorithm_a`] with options, including the restart loop.
/// Returns the first success, or the last failure.
pub fn algorithm_a_with(system: &KmSystem, designs: u64, opts: &SearchOptions) -> Result<AlgorithmAOutcome> {
    let mut last = None;
    for attempt in 0..=opts.restarts {
        let seed = opts.seed.wrapping_add(attempt as u64);
        match algorithm_a_once(system, designs, seed, opts.budget, opts.force)? {
            AlgorithmAOutcome::Found(ls) => return Ok(AlgorithmAOutcome::Found(ls)),
            AlgorithmAOutcome::Failed(mut f) => {
                f.attempts = attempt + 1;
                last = Some(f);
            }
        }
    }
    Ok(AlgorithmAOutcome::Failed(last.expect("at least one attempt")))
}

#[derive(Clone, Debug, PartialEq)]
pub enum AlgorithmBOutcome {
    Found(LargeSet),
    /// No large set can be assembled from the designs in the pool. This is
    /// relative to the group: designs it does not admit were never considered.
    NotInPool { pool_size: usize },
    /// The pool was truncated at `cap`, so the search is incomplete.
    Inconclusive { cap: usize },
}

/// Algorithm B: all designs, then an exact cover of the orbits by designs.
pub fn algorithm_b(system: &KmSystem, designs: u64, pool_cap: Option<usize>) -> Result<AlgorithmBOutcome> {
    algorithm_b_with(system, designs, &SearchOptions { pool_cap, ..SearchOptions::default() })
}

pub fn algorithm_b_with(system: &KmSystem, designs: u64, opts: &SearchOptions) -> Result<AlgorithmBOutcome> {
    check_target(system, designs, opts.force)?;
    let pool = solve_all(system, opts.pool_cap);
    if pool.cap_exceeded {
        return Ok(AlgorithmBOutcome::Inconclusive { cap: opts.pool_cap.unwrap_or(0) });
    }
    pool_cover(system, designs, &pool.solutions, opts.force)
}

/// The exact-cover step of Algorithm B over a given pool of solutions.
pub fn algorithm_b_from_pool(
    system: &KmSystem,
    designs: u64,
    pool: &[SolutionVector],
) -> Result<AlgorithmBOutcome> {
    pool_cover(system, designs, pool, false)
}

fn pool_cover(system: &KmSystem, designs: u64, pool: &[SolutionVector], force: bool) -> Result<AlgorithmBOutcome> {
    let dp = check_target(system, designs, force)?;
    // Universe: the columns still available.
    let live: Vec<usize> = (0..system.col_count()).filter(|&c| !system.excluded()[c]).collect();
    let mut slot = vec![u32::MAX; system.col_count()];
    for (i, &c) in live.iter().enumerate() {
        slot[c] = i as u32;
    }
    let options: Vec<Vec<u32>> = pool
        .iter()
        .map(|x| x.support().iter().map(|&c| slot[c as usize]).collect())
        .collect();
    let Some(cover) = exact_cover(live.len(), &options) else {
        return Ok(AlgorithmBOutcome::NotInPool { pool_size: pool.len() });
    };
    if cover.len() as u64 != designs {
        return Err(Error::Consistency(format!(
            "exact cover uses {} designs, expected {designs}",
            cover.len()
        )));
    }
    let partition = system.col_partition().clone();
    let found = cover
        .iter()
        .map(|&i| Design::from_solution(dp, partition.clone(), &pool[i]))
        .collect::<Result<Vec<_>>>()?;
    Ok(AlgorithmBOutcome::Found(certified(found)?))
}
