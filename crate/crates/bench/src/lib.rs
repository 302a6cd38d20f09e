//! Shared inputs for the benchmarks in `benches/`.

use std::sync::Arc;

use qdesign_core::group_action::{orbit_partition, CyclicGroup};
use qdesign_core::kramer_mesner::{build_km_system, KmSystem};

/// `A^G_{t,k}` with right-hand side `lambda`.
pub fn km_system(group: &CyclicGroup, t: u32, k: u32, lambda: u64) -> KmSystem {
    let rows = Arc::new(orbit_partition(group, t).expect("valid t"));
    let cols = Arc::new(orbit_partition(group, k).expect("valid k"));
    build_km_system(rows, cols, lambda).expect("valid system")
}

/// The `(2,8,3,21;2)` system under the built-in Singer group.
pub fn singer_system() -> KmSystem {
    km_system(&CyclicGroup::singer_paper(), 2, 3, 21)
}
