//! Human-readable `key: value` renderings of the library's reports, and
//! their JSON form.
//!
//! JSON output is the serde serialization of the report struct itself, so
//! the field names documented on each type are the schema.

use std::fmt::Write as _;

use serde::Serialize;

use crate::duality::DualSummary;
use crate::kramer_mesner::KmSystem;
use crate::large_set::{AlgorithmAFailure, AlgorithmAStop, DesignReport, LargeSetReport};
use crate::qarith::{AdmissibilityReport, DesignParams};

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize")
}

pub trait Report {
    fn render_text(&self) -> String;
}

fn design_name(p: &DesignParams) -> String {
    format!("{}-({},{},{};{})", p.t, p.n, p.k, p.lambda, p.q)
}

fn histogram(h: &std::collections::BTreeMap<u64, u64>) -> String {
    h.iter().map(|(c, n)| format!("{c}x{n}")).collect::<Vec<_>>().join(" ")
}

impl Report for DesignReport {
    fn render_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "design: {}", design_name(&self.params));
        let _ = writeln!(s, "blocks: {} ({} distinct)", self.block_count, self.distinct_blocks);
        let _ = writeln!(s, "simple: {}", self.simple);
        let _ = writeln!(s, "t_subspaces: {}", self.t_subspace_count);
        let _ = writeln!(s, "coverage: min {} max {}", self.coverage_min, self.coverage_max);
        let _ = writeln!(s, "coverage_histogram: {}", histogram(&self.coverage_histogram));
        let _ = writeln!(s, "deficient: {}", self.deficient);
        let _ = writeln!(s, "verdict: {}", if self.verdict { "design" } else { "not a design" });
        s
    }
}

impl Report for LargeSetReport {
    fn render_text(&self) -> String {
        let p = &self.params;
        let mut s = String::new();
        let _ = writeln!(s, "large_set: LS_{}[{}]({},{},{})", p.q, p.designs, p.t, p.k, p.n);
        let _ = writeln!(s, "group: {}", self.group);
        for (i, d) in self.designs.iter().enumerate() {
            let _ = writeln!(
                s,
                "design[{i}]: {} blocks={} coverage={}..{} deficient={} simple={} verdict={}",
                design_name(&d.params),
                d.block_count,
                d.coverage_min,
                d.coverage_max,
                d.deficient,
                d.simple,
                d.verdict
            );
        }
        let _ = writeln!(s, "pairwise_disjoint: {}", self.pairwise_disjoint);
        if !self.overlapping_pairs.is_empty() {
            let pairs: Vec<String> =
                self.overlapping_pairs.iter().map(|(a, b)| format!("{a}-{b}")).collect();
            let _ = writeln!(s, "overlapping_pairs: {}", pairs.join(" "));
        }
        let _ = writeln!(s, "orbits: {} of {} covered", self.orbits_covered, self.orbit_count);
        let _ = writeln!(s, "blocks: {} of {}", self.total_blocks, self.expected_blocks);
        let _ = writeln!(s, "complete: {}", self.complete);
        for n in &self.notes {
            let _ = writeln!(s, "note: {n}");
        }
        let _ = writeln!(s, "verdict: {}", if self.verdict { "large set" } else { "not a large set" });
        s
    }
}

impl Report for AdmissibilityReport {
    fn render_text(&self) -> String {
        let p = &self.params;
        let mut s = String::new();
        let _ = writeln!(s, "large_set: LS_{}[{}]({},{},{})", p.q, p.designs, p.t, p.k, p.n);
        let _ = writeln!(s, "lambda_max: {}", self.lambda_max);
        match self.lambda {
            Some(l) => {
                let _ = writeln!(s, "lambda: {l}");
            }
            None => {
                let _ = writeln!(s, "lambda: not an integer");
            }
        }
        for c in &self.conditions {
            let _ = writeln!(
                s,
                "condition i={}: [{} {}]_{} = {} divisible_by_N={}",
                c.i,
                p.n - c.i,
                p.k - c.i,
                p.q,
                c.value,
                c.divisible
            );
        }
        for f in self.failures() {
            let _ = writeln!(s, "failure: {f}");
        }
        let _ = writeln!(s, "admissible: {}", self.admissible);
        s
    }
}

impl Report for DualSummary {
    fn render_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "source: {}", design_name(&self.source));
        let _ = writeln!(s, "target: {}", design_name(&self.target));
        let _ = writeln!(s, "lambda_perp: {}", self.lambda_perp);
        let _ = writeln!(s, "dual_group: {}", self.dual_group);
        for n in &self.notes {
            let _ = writeln!(s, "note: {n}");
        }
        s
    }
}

impl Report for AlgorithmAFailure {
    fn render_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "result: no large set");
        let _ = writeln!(s, "failed_iteration: {}", self.iteration);
        match self.reason {
            AlgorithmAStop::NoDesign => {
                let _ = writeln!(s, "reason: no design in the remaining orbits");
            }
            AlgorithmAStop::BudgetExhausted { nodes } => {
                let _ = writeln!(s, "reason: search budget exhausted after {nodes} steps");
            }
        }
        let _ = writeln!(s, "designs_found: {}", self.designs_found.len());
        let _ = writeln!(s, "excluded_orbits: {}", self.excluded_orbits);
        let _ = writeln!(s, "seed: {}", self.seed);
        let _ = writeln!(s, "attempts: {}", self.attempts);
        s
    }
}

/// Dimensions and row-sum check of a Kramer-Mesner system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KmSummary {
    pub t: u32,
    pub k: u32,
    pub n: u32,
    pub q: u32,
    pub lambda: u64,
    pub group: String,
    pub rows: usize,
    pub cols: usize,
    pub lambda_max: u64,
    pub row_sums_equal_lambda_max: bool,
    pub excluded: usize,
}

impl From<&KmSystem> for KmSummary {
    fn from(s: &KmSystem) -> Self {
        KmSummary {
            t: s.t(),
            k: s.k(),
            n: s.params().n(),
            q: s.params().q(),
            lambda: s.lambda(),
            group: s.group().label(),
            rows: s.row_count(),
            cols: s.col_count(),
            lambda_max: s.lambda_max(),
            row_sums_equal_lambda_max: s.row_sums().iter().all(|&r| r == s.lambda_max()),
            excluded: s.excluded_count(),
        }
    }
}

impl Report for KmSummary {
    fn render_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "system: A^G_{{{},{}}} over F_{}^{}", self.t, self.k, self.q, self.n);
        let _ = writeln!(s, "group: {}", self.group);
        let _ = writeln!(s, "rows: {}", self.rows);
        let _ = writeln!(s, "cols: {}", self.cols);
        let _ = writeln!(s, "lambda: {}", self.lambda);
        let _ = writeln!(s, "lambda_max: {}", self.lambda_max);
        let _ = writeln!(s, "row_sums_equal_lambda_max: {}", self.row_sums_equal_lambda_max);
        let _ = writeln!(s, "excluded: {}", self.excluded);
        s
    }
}
