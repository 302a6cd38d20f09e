//! The `G`-incidence matrix `A^G_{t,k}` and exact 0/1 solutions of
//! `A x = lambda 1`.
//!
//! Rows are the `G`-orbits on `t`-subspaces, columns the `G`-orbits on
//! `k`-subspaces, and entry `(G(T), G(K))` counts the members of `G(K)` that
//! contain the representative `T`. A 0/1 solution selects a union of
//! `k`-orbits in which every `t`-subspace lies in exactly `lambda` blocks.
//!
//! Columns already used by earlier designs are carried as an exclusion mask;
//! requiring `x` to vanish on the mask is the same as appending the 0/1 row
//! `y` with right-hand side 0.

mod local;
mod search;

use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{param, Error, Result};
use crate::gf_space::{FieldParams, Subspace, SubspacePatterns};
use crate::group_action::{CyclicGroup, OrbitPartition};
use crate::qarith::lambda_max;

pub use search::{solve_all, solve_local, solve_one, AllSolutions, SolveOutcome};

/// A Kramer-Mesner system `A^G_{t,k} x = lambda 1` with an exclusion mask.
#[derive(Clone, Debug)]
pub struct KmSystem {
    rows: Arc<OrbitPartition>,
    cols: Arc<OrbitPartition>,
    lambda: u64,
    lambda_max: u64,
    /// Row-major, `row_count * col_count` entries.
    matrix: Vec<u16>,
    excluded: Vec<bool>,
}

impl KmSystem {
    pub fn params(&self) -> FieldParams {
        self.cols.params()
    }

    pub fn t(&self) -> u32 {
        self.rows.k()
    }

    pub fn k(&self) -> u32 {
        self.cols.k()
    }

    pub fn lambda(&self) -> u64 {
        self.lambda
    }

    pub fn lambda_max(&self) -> u64 {
        self.lambda_max
    }

    pub fn group(&self) -> &CyclicGroup {
        self.cols.group()
    }

    pub fn row_partition(&self) -> &Arc<OrbitPartition> {
        &self.rows
    }

    pub fn col_partition(&self) -> &Arc<OrbitPartition> {
        &self.cols
    }

    pub fn row_count(&self) -> usize {
        self.rows.orbit_count()
    }

    pub fn col_count(&self) -> usize {
        self.cols.orbit_count()
    }

    pub fn entry(&self, row: usize, col: usize) -> u16 {
        self.matrix[row * self.col_count() + col]
    }

    pub fn row(&self, row: usize) -> &[u16] {
        let c = self.col_count();
        &self.matrix[row * c..(row + 1) * c]
    }

    pub fn row_sums(&self) -> Vec<u64> {
        (0..self.row_count())
            .map(|r| self.row(r).iter().map(|&e| e as u64).sum())
            .collect()
    }

    /// Columns already covered by earlier designs.
    pub fn excluded(&self) -> &[bool] {
        &self.excluded
    }

    pub fn excluded_count(&self) -> usize {
        self.excluded.iter().filter(|&&e| e).count()
    }

    /// The same matrix with a different right-hand side.
    pub fn with_lambda(&self, lambda: u64) -> KmSystem {
        KmSystem { lambda, ..self.clone() }
    }

    /// `A x = lambda 1` and `x` vanishes on the exclusion mask.
    pub fn is_solution(&self, x: &SolutionVector) -> bool {
        if x.len() != self.col_count() {
            return false;
        }
        if x.selected.iter().zip(&self.excluded).any(|(&s, &e)| s && e) {
            return false;
        }
        (0..self.row_count()).all(|r| {
            let sum: u64 = self
                .row(r)
                .iter()
                .zip(&x.selected)
                .filter(|(_, &s)| s)
                .map(|(&e, _)| e as u64)
                .sum();
            sum == self.lambda
        })
    }
}

/// A 0/1 vector over the column orbits.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SolutionVector {
    selected: Vec<bool>,
}

impl SolutionVector {
    pub fn new(selected: Vec<bool>) -> Self {
        SolutionVector { selected }
    }

    pub fn from_support(len: usize, support: &[u32]) -> Result<Self> {
        let mut selected = vec![false; len];
        for &c in support {
            let slot = selected
                .get_mut(c as usize)
                .ok_or_else(|| Error::Param(format!("column {c} out of range 0..{len}")))?;
            *slot = true;
        }
        Ok(SolutionVector { selected })
    }

    pub fn len(&self) -> usize {
        self.selected.len()
    }

    pub fn is_empty(&self) -> bool {
        self.selected.is_empty()
    }

    pub fn selected(&self) -> &[bool] {
        &self.selected
    }

    /// Indices of the selected columns, ascending.
    pub fn support(&self) -> Vec<u32> {
        self.selected
            .iter()
            .enumerate()
            .filter(|(_, &s)| s)
            .map(|(i, _)| i as u32)
            .collect()
    }

    pub fn weight(&self) -> usize {
        self.selected.iter().filter(|&&s| s).count()
    }
}

/// Builds `A^G_{t,k}` by expanding each column orbit and crediting every
/// `t`-subspace of every member to its row orbit. The credit of row `G(T)`
/// counts each incident pair once per member of `G(T)`, so it is divided by
/// `|G(T)|`; a nonzero remainder is reported as a consistency error.
pub fn build_km_system(
    rows: Arc<OrbitPartition>,
    cols: Arc<OrbitPartition>,
    lambda: u64,
) -> Result<KmSystem> {
    if rows.params() != cols.params() {
        return param("row and column partitions live in different spaces");
    }
    if rows.group() != cols.group() {
        return param("row and column partitions use different groups");
    }
    let (t, k, p) = (rows.k(), cols.k(), cols.params());
    if t >= k {
        return param(format!("Kramer-Mesner systems need t < k, got t = {t}, k = {k}"));
    }
    let lmax = lambda_max(t, p.n(), k, p.q())?;
    if lmax > u16::MAX as u64 {
        return Err(Error::Resource(format!(
            "lambda_max = {lmax} exceeds the 16-bit entry bound"
        )));
    }
    let patterns = SubspacePatterns::new(p.q(), k, t)?;
    let row_count = rows.orbit_count();

    let columns: Vec<Vec<u16>> = (0..cols.orbit_count() as u32)
        .into_par_iter()
        .map(|c| {
            let mut credit = vec![0u64; row_count];
            for &id in cols.members(c) {
                patterns.for_each_in(cols.index().get(id), |sub| {
                    let r = rows.orbit_of(&sub).expect("sub-subspace is enumerated");
                    credit[r as usize] += 1;
                });
            }
            credit
                .iter()
                .enumerate()
                .map(|(r, &cr)| {
                    let size = rows.orbit_size(r as u32) as u64;
                    if cr % size != 0 {
                        return Err(Error::Consistency(format!(
                            "credit {cr} of row {r}, column {c} is not a multiple of orbit size {size}"
                        )));
                    }
                    Ok((cr / size) as u16)
                })
                .collect::<Result<Vec<u16>>>()
        })
        .collect::<Result<_>>()?;

    let col_count = columns.len();
    let mut matrix = vec![0u16; row_count * col_count];
    for (c, column) in columns.iter().enumerate() {
        for (r, &e) in column.iter().enumerate() {
            matrix[r * col_count + c] = e;
        }
    }
    let system = KmSystem {
        rows,
        cols,
        lambda,
        lambda_max: lmax,
        matrix,
        excluded: vec![false; col_count],
    };
    if let Some((r, s)) = system.row_sums().into_iter().enumerate().find(|&(_, s)| s != lmax) {
        return Err(Error::Consistency(format!(
            "row {r} sums to {s}, expected lambda_max = {lmax}"
        )));
    }
    Ok(system)
}

/// Brute-force `|{K' in G(K) : T <= K'}|`; see [`crate::oracle`].
pub fn km_entry_oracle(t: &Subspace, k: &Subspace, group: &CyclicGroup) -> u64 {
    crate::oracle::km_entry(t, k, group)
}

/// Adds the support of `solution` to the exclusion mask.
pub fn exclude_columns(system: &KmSystem, solution: &SolutionVector) -> Result<KmSystem> {
    if solution.len() != system.col_count() {
        return param(format!(
            "solution has {} entries, system has {} columns",
            solution.len(),
            system.col_count()
        ));
    }
    let mut excluded = system.excluded.clone();
    for (c, (&s, e)) in solution.selected.iter().zip(excluded.iter_mut()).enumerate() {
        if s {
            if *e {
                return Err(Error::Consistency(format!(
                    "column {c} selected but already covered by an earlier design"
                )));
            }
            *e = true;
        }
    }
    Ok(KmSystem { excluded, ..system.clone() })
}
