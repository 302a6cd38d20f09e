use std::sync::Arc;

use proptest::prelude::*;
use proptest::sample::subsequence;

use qdesign_core::gf_space::{decode_triple, encode_subspace, FieldParams, Subspace};
use qdesign_core::group_action::{act, orbit_partition, CyclicGroup, GroupElement};
use qdesign_core::io::{
    format_design, format_generator, format_km, format_subspace, load_designs, parse_generator,
    parse_km, parse_subspace, KmMatrixFile,
};
use qdesign_core::kramer_mesner::{build_km_system, solve_all, solve_one, KmSystem, SolveOutcome};
use qdesign_core::large_set::Design;
use qdesign_core::qarith::DesignParams;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn field() -> impl Strategy<Value = FieldParams> {
    prop_oneof![(1u32..=7).prop_map(|n| (2, n)), (1u32..=4).prop_map(|n| (3, n)), (1u32..=3).prop_map(|n| (5, n))]
        .prop_map(|(q, n)| FieldParams::new(q, n).unwrap())
}

fn vectors(p: FieldParams, max: usize) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(0..p.vector_count(), 0..=max)
}

fn subspace() -> impl Strategy<Value = Subspace> {
    field().prop_flat_map(|p| vectors(p, p.n() as usize + 1).prop_map(move |v| Subspace::span(p, v).unwrap()))
}

fn element(p: FieldParams) -> impl Strategy<Value = GroupElement> {
    any::<u64>().prop_map(move |s| GroupElement::random(p, &mut ChaCha8Rng::seed_from_u64(s)))
}

fn subspace_and_elements() -> impl Strategy<Value = (Subspace, GroupElement, GroupElement)> {
    subspace().prop_flat_map(|s| {
        let p = s.params();
        (Just(s), element(p), element(p))
    })
}

fn lin_comb(p: FieldParams, vs: &[u64], coeffs: &[u32]) -> u64 {
    let q = p.q() as u64;
    let mut out = 0u64;
    let mut place = 1u64;
    for _ in 0..p.n() {
        let digit: u64 = vs
            .iter()
            .zip(coeffs)
            .map(|(&v, &c)| (v / place % q) * c as u64)
            .sum::<u64>()
            % q;
        out += digit * place;
        place *= q;
    }
    out
}

/// Small systems where both the exhaustive and the hybrid solver finish fast.
fn small_system() -> impl Strategy<Value = KmSystem> {
    (prop_oneof![Just((1u32, 2u32, 4u32)), Just((1, 2, 3)), Just((1, 3, 4)), Just((2, 3, 4)), Just((1, 2, 5))], any::<bool>(), 1u64..=3)
        .prop_map(|((t, k, n), singer, lambda)| {
            let p = FieldParams::binary(n).unwrap();
            let g = if singer || n > 4 { CyclicGroup::singer(p).unwrap() } else { CyclicGroup::trivial(p) };
            let rows = Arc::new(orbit_partition(&g, t).unwrap());
            let cols = Arc::new(orbit_partition(&g, k).unwrap());
            build_km_system(rows, cols, lambda).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn echelon_form_is_canonical(
        (p, vs, coeffs, shuffled) in field().prop_flat_map(|p| {
            vectors(p, 5).prop_flat_map(move |vs| {
                let len = vs.len();
                let combos = prop::collection::vec(prop::collection::vec(0..p.q(), len), 0..4);
                (Just(p), Just(vs.clone()), combos, Just(vs).prop_shuffle())
            })
        })
    ) {
        let a = Subspace::span(p, vs.iter().copied()).unwrap();
        let mut more: Vec<u64> = coeffs.iter().map(|c| lin_comb(p, &vs, c)).collect();
        more.extend(shuffled);
        let b = Subspace::span(p, more).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(Subspace::span(p, a.rows().iter().copied()).unwrap(), a.clone());
        for v in &vs {
            prop_assert!(a.contains_vector(*v));
        }
        prop_assert_eq!(a.rows().len() as u32, a.dim());
    }

    #[test]
    fn subsets_of_a_basis_span_subspaces(s in subspace(), mask in any::<u8>()) {
        let part: Vec<u64> = s.rows().iter().enumerate().filter(|(i, _)| mask >> (i % 8) & 1 == 1).map(|(_, &r)| r).collect();
        let inner = Subspace::span(s.params(), part).unwrap();
        prop_assert!(s.contains(&inner));
        prop_assert!(inner.contains(&Subspace::zero(s.params())));
        prop_assert!(Subspace::full(s.params()).contains(&s));
    }

    #[test]
    fn complement_is_an_involution(s in subspace()) {
        let c = s.orthogonal_complement();
        prop_assert_eq!(c.dim(), s.params().n() - s.dim());
        prop_assert_eq!(c.orthogonal_complement(), s.clone());
        for &u in s.rows() {
            for &w in c.rows() {
                prop_assert_eq!(s.params().dot(u, w), 0);
            }
        }
    }

    #[test]
    fn action_is_a_homomorphism((s, g, h) in subspace_and_elements()) {
        let gh = g.compose(&h);
        prop_assert_eq!(act(&gh, &s), act(&g, &act(&h, &s)));
        prop_assert_eq!(act(&g.inverse(), &act(&g, &s)), s.clone());
        prop_assert_eq!(act(&g, &s).dim(), s.dim());
        prop_assert!(gh.compose(&gh.inverse()).is_identity());
    }

    #[test]
    fn complement_equivariance((s, g, _h) in subspace_and_elements()) {
        let lhs = act(&g, &s).orthogonal_complement();
        let rhs = act(&g.transpose().inverse(), &s.orthogonal_complement());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn triples_round_trip(vs in prop::collection::vec(0u64..256, 3)) {
        let p = FieldParams::binary(8).unwrap();
        let s = Subspace::span(p, vs).unwrap();
        prop_assume!(s.dim() == 3);
        let [x, y, z] = encode_subspace(&s).unwrap();
        prop_assert_eq!(decode_triple(x, y, z, p).unwrap(), s);
    }

    #[test]
    fn subspace_text_round_trip(s in subspace()) {
        let text = format_subspace(&s);
        prop_assert_eq!(parse_subspace(&text, s.params(), s.dim()).unwrap(), s.clone());
        let spaced = text.trim_matches(|c| c == '[' || c == ']').replace(',', " ");
        prop_assert_eq!(parse_subspace(&spaced, s.params(), s.dim()).unwrap(), s);
    }

    #[test]
    fn generator_round_trip(g in field().prop_flat_map(element)) {
        prop_assert_eq!(parse_generator(&format_generator(&g)).unwrap(), g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn km_file_round_trip(s in small_system()) {
        let m = KmMatrixFile::from_system(&s);
        prop_assert_eq!(parse_km(&format_km(&m)).unwrap(), m);
    }

    #[test]
    fn design_file_round_trip(s in small_system(), pick in any::<u64>()) {
        let part = s.col_partition().clone();
        let ids: Vec<u32> = (0..part.orbit_count() as u32).filter(|i| pick >> (i % 64) & 1 == 1).collect();
        let p = DesignParams::new(s.t(), s.params().n(), s.k(), s.lambda(), 2).unwrap();
        let d = Design::new(p, part, ids).unwrap();
        let back = load_designs(&format_design(&d)).unwrap();
        prop_assert_eq!(back.len(), 1);
        prop_assert_eq!(back[0].orbit_ids(), d.orbit_ids());
        prop_assert_eq!(back[0].params(), d.params());
    }

    #[test]
    fn solver_is_sound_and_deterministic(s in small_system(), seed in any::<u64>()) {
        let a = solve_one(&s, seed, None);
        prop_assert_eq!(&a, &solve_one(&s, seed, None));
        let all = solve_all(&s, Some(1));
        match a {
            SolveOutcome::Found(x) => prop_assert!(s.is_solution(&x)),
            SolveOutcome::Infeasible => prop_assert!(all.solutions.is_empty()),
            SolveOutcome::BudgetExhausted { .. } => prop_assert!(false, "no budget was set"),
        }
    }

    #[test]
    fn dropping_orbits_breaks_a_solution(s in small_system(), cut in subsequence((0..64usize).collect::<Vec<_>>(), 0..4)) {
        if let Some(x) = solve_all(&s, Some(1)).solutions.into_iter().next() {
            let support: Vec<u32> = x.support();
            let keep: Vec<u32> = support.iter().enumerate().filter(|(i, _)| !cut.contains(i)).map(|(_, &c)| c).collect();
            let y = qdesign_core::SolutionVector::from_support(x.len(), &keep).unwrap();
            prop_assert_eq!(s.is_solution(&y), keep.len() == support.len());
        }
    }
}
