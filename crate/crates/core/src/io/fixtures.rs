//! The published `LS_2[3](2,3,8)` as built-in data.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf_space::{decode_triple, FieldParams, Subspace};
use crate::group_action::{orbit_partition, singer_paper_generator, CyclicGroup, GroupElement};
use crate::large_set::{Design, LargeSet};
use crate::qarith::DesignParams;

use super::tables::{TABLE_B1, TABLE_B2, TABLE_B3};

/// Name accepted by `--builtin`.
pub const BUILTIN_LARGE_SET: &str = "ls2-3-238";

/// The Singer matrix and the three tables of orbit representatives.
#[derive(Clone, Debug)]
pub struct FixtureSet {
    pub singer_generator: GroupElement,
    pub tables: [&'static [[u64; 3]]; 3],
}

pub fn fixture_set() -> FixtureSet {
    FixtureSet {
        singer_generator: singer_paper_generator(),
        tables: [&TABLE_B1, &TABLE_B2, &TABLE_B3],
    }
}

impl FixtureSet {
    /// Table `i` decoded into 3-subspaces of `F_2^8`, in table order.
    pub fn decode(&self, i: usize) -> Result<Vec<Subspace>> {
        let p = FieldParams::binary(8)?;
        self.tables[i]
            .iter()
            .map(|&[x, y, z]| decode_triple(x, y, z, p))
            .collect()
    }

    /// Canonical byte form of the transcription: one `x y z` line per entry,
    /// tables separated by a blank line.
    pub fn transcription(&self) -> String {
        self.tables
            .iter()
            .map(|t| {
                t.iter()
                    .map(|[x, y, z]| format!("{x} {y} {z}\n"))
                    .collect::<String>()
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// The three designs, each of 127 Singer orbits, as one large set.
/// Not verified here.
pub fn paper_large_set() -> Result<LargeSet> {
    let fixtures = fixture_set();
    let group = CyclicGroup::singer_paper();
    let partition = Arc::new(orbit_partition(&group, 3)?);
    let params = DesignParams::new(2, 8, 3, 21, 2)?;
    let designs = (0..3)
        .map(|i| {
            let ids = fixtures
                .decode(i)?
                .iter()
                .map(|s| {
                    partition
                        .orbit_of(s)
                        .ok_or_else(|| Error::Consistency(format!("{s} missing from the Grassmannian")))
                })
                .collect::<Result<Vec<_>>>()?;
            Design::new(params, partition.clone(), ids)
        })
        .collect::<Result<Vec<_>>>()?;
    LargeSet::new(designs)
}

/// Looks up a `--builtin` name.
pub fn builtin(name: &str) -> Result<LargeSet> {
    match name {
        BUILTIN_LARGE_SET => paper_large_set(),
        _ => Err(Error::Param(format!(
            "unknown builtin '{name}' (available: {BUILTIN_LARGE_SET})"
        ))),
    }
}
