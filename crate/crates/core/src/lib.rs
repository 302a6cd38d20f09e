//! Subspace designs over finite fields and large sets of them.
//!
//! A `t-(n,k,lambda;q)` design is a set of `k`-subspaces of `F_q^n` such that
//! every `t`-subspace lies in exactly `lambda` of them. Designs are searched
//! for as unions of orbits of a cyclic matrix group (the Kramer-Mesner
//! method), assembled into large sets, verified from first principles and
//! dualized through orthogonal complements.

pub mod duality;
pub mod error;
pub mod gf_space;
pub mod group_action;
pub mod io;
pub mod kramer_mesner;
pub mod large_set;
pub mod oracle;
pub mod qarith;

pub use duality::{dual_design, dual_large_set, transpose_group, DualityMap};
pub use error::{Error, Result};
pub use gf_space::{FieldParams, FqVector, Subspace};
pub use group_action::{CyclicGroup, GroupElement, OrbitPartition};
pub use kramer_mesner::{build_km_system, KmSystem, SolutionVector};
pub use large_set::{
    verify_design, verify_large_set, Design, DesignReport, LargeSet, LargeSetReport,
};
pub use qarith::{DesignParams, LargeSetParams};
