//! Complements commute with the group action up to inverse transpose.

use std::collections::HashSet;

use qdesign_core::duality::{
    complement_equivariance_check, dual_large_set, orbit_correspondence, transpose_group,
};
use qdesign_core::gf_space::{enumerate_subspaces, FieldParams};
use qdesign_core::group_action::{orbit_partition, CyclicGroup, GroupElement};
use qdesign_core::io::paper_large_set;
use qdesign_core::large_set::verify_large_set;
use qdesign_core::qarith::{check_large_set_admissible, dual_lambda, dual_params, lambda_max, DesignParams, LargeSetParams};
use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn all_subspaces(p: FieldParams) -> Vec<qdesign_core::Subspace> {
    (0..=p.n()).flat_map(|k| enumerate_subspaces(p, k).unwrap()).collect()
}

#[test]
fn every_singer_element_on_random_planes() {
    let g = CyclicGroup::singer_paper();
    let planes: Vec<_> = enumerate_subspaces(FieldParams::binary(8).unwrap(), 3).unwrap().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let sample: Vec<_> = planes.choose_multiple(&mut rng, 100).collect();
    let mut checks = 0;
    for a in g.elements() {
        for s in &sample {
            assert!(complement_equivariance_check(&a, s));
            checks += 1;
        }
    }
    assert_eq!(checks, 255 * 100);
}

#[test]
fn whole_gl_for_tiny_binary_spaces() {
    for n in 1..=3 {
        let p = FieldParams::binary(n).unwrap();
        let subs = all_subspaces(p);
        let mut seen = 0;
        for packed in 0..(1u64 << (n * n)) {
            let cols: Vec<u64> = (0..n).map(|j| (packed >> (j * n)) & ((1 << n) - 1)).collect();
            let Ok(a) = GroupElement::from_columns(p, cols) else { continue };
            seen += 1;
            for s in &subs {
                assert!(complement_equivariance_check(&a, s));
            }
        }
        assert_eq!(seen, [1, 6, 168][n as usize - 1]);
    }
}

#[test]
fn random_matrices_all_subspaces() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for (q, n) in [(2, 4), (3, 1), (3, 2), (3, 3)] {
        let p = FieldParams::new(q, n).unwrap();
        let subs = all_subspaces(p);
        for _ in 0..50 {
            let a = GroupElement::random(p, &mut rng);
            for s in &subs {
                assert!(complement_equivariance_check(&a, s), "q={q} n={n} {a:?} {s}");
            }
        }
    }
}

#[test]
fn singer_orbits_correspond_to_transposed_orbits() {
    let g = CyclicGroup::singer_paper();
    let h = transpose_group(&g);
    assert_eq!(h.order(), g.order());
    for k in [2, 3] {
        let src = orbit_partition(&g, k).unwrap();
        let dst = orbit_partition(&h, 8 - k).unwrap();
        assert_eq!(src.orbit_count(), dst.orbit_count());
        let all: Vec<u32> = (0..src.orbit_count() as u32).collect();
        let image = orbit_correspondence(&src, &dst, &all).unwrap();
        let distinct: HashSet<u32> = image.iter().copied().collect();
        assert_eq!(distinct.len(), image.len());
    }
}

#[test]
fn parameter_arithmetic_is_dual() {
    let mut checked = 0;
    for q in [2u32, 3] {
        for n in 2..=8u32 {
            for k in 1..n {
                for t in 1..=k.min(n - k) {
                    let Ok(max) = lambda_max(t, n, k, q) else { continue };
                    let Ok(dual_max) = lambda_max(t, n, n - k, q) else { continue };
                    for designs in (1..=max).filter(|d| max % d == 0).take(6) {
                        let lsp = LargeSetParams::new(designs, t, n, k, q).unwrap();
                        if !check_large_set_admissible(&lsp).unwrap().admissible {
                            continue;
                        }
                        let p = lsp.design_params().unwrap();
                        checked += 1;
                        let d = dual_params(&p).unwrap();
                        assert_eq!(d.lambda * designs, dual_max, "{p:?}");
                        assert_eq!(dual_params(&d).unwrap(), p);
                    }
                }
            }
        }
    }
    assert!(checked > 20, "{checked}");
    let p = DesignParams::new(2, 8, 3, 21, 2).unwrap();
    assert_eq!(dual_lambda(&p).unwrap(), 465);
}

#[test]
fn published_dual_large_set() {
    let ls = paper_large_set().unwrap();
    let dual = dual_large_set(&ls).unwrap();
    let r = verify_large_set(&dual).unwrap();
    assert!(r.verdict);
    assert_eq!((r.params.k, r.params.designs), (5, 3));
    for d in &r.designs {
        assert_eq!(d.params.lambda, 465);
        assert_eq!(d.coverage_histogram[&465], 10795);
    }
    assert!(r.notes.iter().any(|n| n.contains("465") && n.contains("21")));
    let back = dual_large_set(&dual).unwrap();
    assert_eq!(back, ls);
    assert_eq!(back.partition().group().label(), "singer-paper");
}
