//! Long-running discovery of `LS_2[3](2,3,8)` with Algorithm A.
//! Run with `cargo test -p qdesign-core --test stress -- --ignored --nocapture`.

use std::sync::Arc;
use std::time::Instant;

use qdesign_core::group_action::{orbit_partition, CyclicGroup};
use qdesign_core::kramer_mesner::build_km_system;
use qdesign_core::large_set::{algorithm_a, verify_large_set, AlgorithmAOutcome};

#[test]
#[ignore = "minutes of search; not part of the gating suite"]
fn algorithm_a_discovers_the_large_set() {
    let g = CyclicGroup::singer_paper();
    let rows = Arc::new(orbit_partition(&g, 2).unwrap());
    let cols = Arc::new(orbit_partition(&g, 3).unwrap());
    let s = build_km_system(rows, cols, 21).unwrap();
    let seeds: u64 = std::env::var("QDESIGN_STRESS_SEEDS").ok().and_then(|v| v.parse().ok()).unwrap_or(8);
    let mut found = 0;
    for seed in 0..seeds {
        let start = Instant::now();
        match algorithm_a(&s, 3, seed, Some(2_000_000_000)).unwrap() {
            AlgorithmAOutcome::Found(ls) => {
                assert!(verify_large_set(&ls).unwrap().verdict, "seed {seed}");
                found += 1;
                println!("seed {seed}: found in {:.1}s", start.elapsed().as_secs_f64());
            }
            AlgorithmAOutcome::Failed(f) => {
                println!("seed {seed}: stopped at iteration {} ({:?})", f.iteration, f.reason);
            }
        }
    }
    println!("{found} of {seeds} seeds found a large set");
    assert!(found > 0);
}
