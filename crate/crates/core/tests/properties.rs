//! Property tests for the structural invariants: generation is monotone
//! and idempotent, closures yield subgroups, quotient maps are
//! degree-preserving surjections, and the lattice enumerator agrees with
//! number theory on cyclic rings.

use std::sync::Arc;

use proptest::prelude::*;

use gspec_core::codeset::CodeSet;
use gspec_core::finite_algebra::{FiniteAbelianGroup, FiniteCommRing};
use gspec_core::graded::{GradedModule, GradedRing};

fn trivial_ring(n: u32) -> Arc<GradedRing> {
    Arc::new(
        GradedRing::trivial(
            FiniteCommRing::integers_mod(n).unwrap(),
            FiniteAbelianGroup::cyclic(2).unwrap(),
        )
        .unwrap(),
    )
}

proptest! {
    #[test]
    fn lattice_of_zn_counts_divisors(n in 2u32..=24) {
        let m = GradedModule::self_module(&trivial_ring(n)).unwrap();
        let divisors = (1..=n).filter(|d| n % d == 0).count();
        prop_assert_eq!(m.enumerate_graded_submodules().len(), divisors);
    }

    #[test]
    fn submodule_generation_is_monotone_and_idempotent(
        n in 2u32..=12,
        mask in 0u32..(1 << 12),
        extra in 0u32..12,
    ) {
        let m = GradedModule::self_module(&trivial_ring(n)).unwrap();
        let gens: Vec<u32> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let small = m.submodule_generated(&gens).unwrap();

        let mut bigger_gens = gens.clone();
        bigger_gens.push(extra % n);
        let big = m.submodule_generated(&bigger_gens).unwrap();
        prop_assert!(small.elems.is_subset(&big.elems), "monotone in generators");

        let regenerated = m
            .submodule_generated(&small.elems.iter().collect::<Vec<_>>())
            .unwrap();
        prop_assert_eq!(regenerated.elems, small.elems, "idempotent");

        prop_assert!(m.is_graded_submodule(&big.elems));
    }

    #[test]
    fn additive_closure_is_a_subgroup(
        orders in prop::collection::vec(1u32..=5, 1..=3),
        seeds in prop::collection::vec(0u32..125, 0..=4),
    ) {
        let g = FiniteAbelianGroup::mixed_radix(orders).unwrap();
        let gens: Vec<u32> = seeds.into_iter().map(|s| s % g.size()).collect();
        let closure = g.additive_closure(gens);
        prop_assert!(g.is_subgroup(&closure));
        prop_assert_eq!(g.additive_closure(closure.iter()), closure.clone());
    }

    #[test]
    fn quotient_projection_is_degree_preserving_surjection(n in 2u32..=16, d in 1u32..=16) {
        prop_assume!(d > 1 && d < n && n % d == 0);
        let ring = trivial_ring(n);
        let ideal = ring
            .graded_ideal(CodeSet::from_iter((0..n).filter(|x| x % d == 0)))
            .unwrap();
        let (q, proj) = ring.quotient(&ideal).unwrap();
        // surjective onto the quotient carrier
        let image = CodeSet::from_iter(proj.iter().copied());
        prop_assert_eq!(image.len(), q.size() as usize);
        // additive homomorphism, degree preserving
        for a in 0..n {
            for b in 0..n {
                let lhs = proj[ring.ring().add(a, b) as usize];
                let rhs = q.ring().add(proj[a as usize], proj[b as usize]);
                prop_assert_eq!(lhs, rhs);
            }
            for g in ring.grading_group().elements() {
                let comp = ring.component_of(a, g);
                prop_assert_eq!(
                    proj[comp as usize],
                    q.component_of(proj[a as usize], g)
                );
            }
        }
    }

    #[test]
    fn colon_ideals_are_graded_ideals(n in 2u32..=12) {
        let m = GradedModule::self_module(&trivial_ring(n)).unwrap();
        for sub in m.enumerate_graded_submodules() {
            let colon = gspec_core::predicates::colon_ideal(&m, &sub).unwrap();
            prop_assert!(m.ring().is_graded_ideal(&colon.elems));
        }
    }
}
