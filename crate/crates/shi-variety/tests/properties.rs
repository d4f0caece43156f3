//! Randomized structural invariants, exercised over random words and vectors.
//!
//! Everything here is an exact law: group axioms of the affine maps, the
//! homomorphism property of the integer representation, lattice algebra on
//! the component posets, and scale invariance of the alcove verdict.

use proptest::prelude::*;

use shi_variety::components::{build_poset, enumerate_admitted_bfs};
use shi_variety::phirep::{diamond_reflection, phi_rep};
use shi_variety::shi::{is_alcove_vector, lambda_extract, rescaled_system};
use shi_variety::weyl::element_of_word;
use shi_variety::{CartanType, RootSystem};

fn rs(letter: char, rank: usize) -> RootSystem {
    RootSystem::new(CartanType::new(letter, rank).unwrap()).unwrap()
}

/// Word over the affine alphabet 0..=rank, short enough to stay cheap.
fn word(rank: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..=rank, 0..8)
}

proptest! {
    /// Composition of elements matches concatenation of words, and the
    /// inverse really inverts.
    #[test]
    fn group_laws(w1 in word(2), w2 in word(2)) {
        for system in [rs('A', 2), rs('B', 2), rs('G', 2)] {
            let a = element_of_word(&system, &w1).unwrap();
            let b = element_of_word(&system, &w2).unwrap();
            let joined: Vec<usize> = w1.iter().chain(&w2).copied().collect();
            prop_assert_eq!(a.compose(&b), element_of_word(&system, &joined).unwrap());
            prop_assert!(a.compose(&a.inverse()).is_identity());
        }
    }

    /// Round trip through the semidirect decomposition: the translation part
    /// composed with a word for the finite part reproduces the element.
    #[test]
    fn decompose_round_trip(w in word(2)) {
        for system in [rs('A', 2), rs('B', 2), rs('G', 2)] {
            let a = element_of_word(&system, &w).unwrap();
            let (z, lin) = a.decompose(&system).unwrap();
            let tau = shi_variety::weyl::translation_element(&system, &z);
            let finite_letters: Vec<usize> = shi_variety::weyl::finite_word(&system, &lin)
                .unwrap()
                .iter()
                .map(|i| i + 1)
                .collect();
            let finite = element_of_word(&system, &finite_letters).unwrap();
            prop_assert_eq!(tau.compose(&finite), a);
        }
    }

    /// The integer representation is a homomorphism on the affine group.
    #[test]
    fn representation_homomorphism(w1 in word(2), w2 in word(2)) {
        for system in [rs('A', 2), rs('B', 2)] {
            let a = element_of_word(&system, &w1).unwrap();
            let b = element_of_word(&system, &w2).unwrap();
            let split = phi_rep(&system, &a).unwrap().compose(&phi_rep(&system, &b).unwrap());
            prop_assert_eq!(phi_rep(&system, &a.compose(&b)).unwrap(), split);
        }
    }

    /// Coefficient vectors separate elements: equal vectors force equal maps.
    #[test]
    fn coefficient_vector_is_injective(w1 in word(2), w2 in word(2)) {
        let system = rs('B', 2);
        let a = element_of_word(&system, &w1).unwrap();
        let b = element_of_word(&system, &w2).unwrap();
        if a.shi_vector(&system).unwrap() == b.shi_vector(&system).unwrap() {
            prop_assert_eq!(a, b);
        }
    }

    /// The alcove verdict never depends on the overall normalization of the
    /// squared norms.
    #[test]
    fn alcove_verdict_scale_invariant(k in prop::collection::vec(-4i64..=4, 6), factor in 2i64..=5) {
        let system = rs('G', 2);
        let scaled = rescaled_system(&system, factor).unwrap();
        prop_assert_eq!(
            is_alcove_vector(&system, &k).unwrap(),
            is_alcove_vector(&scaled, &k).unwrap()
        );
    }

    /// Extraction is idempotent and translation invariant on realized
    /// coefficient vectors.
    #[test]
    fn extraction_is_idempotent(w in word(2), z in prop::collection::vec(-3i64..=3, 2)) {
        for system in [rs('A', 2), rs('B', 2)] {
            let a = element_of_word(&system, &w).unwrap();
            let lambda = lambda_extract(&system, &a.shi_vector(&system).unwrap()).unwrap();
            let again = lambda_extract(&system, &lambda.coords().to_vec()).unwrap();
            prop_assert_eq!(&again, &lambda);
            let tau = shi_variety::weyl::translation_element(&system, &z);
            let moved = tau.compose(&a);
            prop_assert_eq!(
                lambda_extract(&system, &moved.shi_vector(&system).unwrap()).unwrap(),
                lambda
            );
        }
    }

    /// Lattice algebra on the component poset: idempotent, commutative,
    /// absorptive, and consistent with the order.
    #[test]
    fn lattice_algebra(seed_a in 0usize..24, seed_b in 0usize..24, seed_c in 0usize..24) {
        let system = rs('B', 3);
        let p = build_poset(&system, enumerate_admitted_bfs(&system).unwrap()).unwrap();
        let (a, b, c) = (seed_a % p.len(), seed_b % p.len(), seed_c % p.len());
        prop_assert_eq!(p.meet(a, a).unwrap(), a);
        prop_assert_eq!(p.join(a, a).unwrap(), a);
        prop_assert_eq!(p.meet(a, b).unwrap(), p.meet(b, a).unwrap());
        prop_assert_eq!(p.join(a, b).unwrap(), p.join(b, a).unwrap());
        let ab = p.meet(a, b).unwrap();
        prop_assert_eq!(p.join(a, ab).unwrap(), a);
        let m3 = p.meet(p.meet(a, b).unwrap(), c).unwrap();
        prop_assert_eq!(m3, p.meet(a, p.meet(b, c).unwrap()).unwrap());
        prop_assert_eq!(p.leq(a, b), p.meet(a, b).unwrap() == a);
        prop_assert_eq!(p.leq(a, b), p.join(a, b).unwrap() == b);
    }

    /// Reflections act as involutions through the diamond action.
    #[test]
    fn diamond_reflection_involutive(which in 0usize..6, pick in 0usize..12) {
        let system = rs('G', 2);
        let admitted = enumerate_admitted_bfs(&system).unwrap();
        let lambda = &admitted[pick % admitted.len()];
        let alpha = which % system.num_positive_roots();
        let once = diamond_reflection(&system, alpha, lambda).unwrap();
        prop_assert_eq!(&diamond_reflection(&system, alpha, &once).unwrap(), lambda);
    }
}
