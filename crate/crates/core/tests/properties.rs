//! Randomized invariants across module boundaries.

use dkring::dold_kan_core::{cohomotopy, normalize, FinObject, KObject, QObject};
use dkring::exact_linear::random::{random_complex, random_unimodular};
use dkring::exact_linear::{cone, is_quasi_isomorphism, BoundedComplex, ChainMap, HomologySummary};
use dkring::{CoeffRing, FinMap};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn ring_strategy() -> impl Strategy<Value = CoeffRing> {
    prop_oneof![
        Just(CoeffRing::Integers),
        Just(CoeffRing::Modular(2)),
        Just(CoeffRing::Modular(3)),
        Just(CoeffRing::Modular(5)),
    ]
}

fn fin_map(source: usize, target: usize) -> impl Strategy<Value = FinMap> {
    proptest::collection::vec(0..=target, source + 1).prop_map(move |v| FinMap::new(source, target, v).unwrap())
}

fn same(a: &HomologySummary, b: &HomologySummary) -> bool {
    a.degrees.len() == b.degrees.len() && a.degrees.iter().zip(&b.degrees).all(|(x, y)| x.same_group(y))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normalizing_k_gives_back_the_complex(ring in ring_strategy(), top in 0usize..=3, seed: u64) {
        let a = random_complex(ring, top, 3, &mut ChaCha8Rng::seed_from_u64(seed));
        let n = normalize(&KObject::new(&a, top), top).unwrap();
        prop_assert_eq!(n.complex.ranks(), a.ranks());
        for (x, y) in n.complex.differentials().iter().zip(a.differentials()) {
            prop_assert!(x.eq_in(y, ring));
        }
        prop_assert!(same(&cohomotopy(&KObject::new(&a, top), top).unwrap(), &a.cohomology().unwrap()));
    }

    #[test]
    fn cohomology_ignores_a_change_of_basis(top in 0usize..=4, seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_complex(CoeffRing::Integers, top, 3, &mut rng);
        let changes: Vec<_> = (0..=top).map(|k| random_unimodular(a.rank(k), &mut rng)).collect();
        let d = (0..top)
            .map(|k| changes[k + 1].0.mul(&a.differential(k)).unwrap().mul(&changes[k].1).unwrap())
            .collect();
        let b = BoundedComplex::from_ranks(CoeffRing::Integers, &a.ranks(), d).unwrap();
        prop_assert!(same(&a.cohomology().unwrap(), &b.cohomology().unwrap()));
    }

    #[test]
    fn identity_is_a_quasi_isomorphism(top in 0usize..=3, seed: u64) {
        let a = random_complex(CoeffRing::Integers, top, 3, &mut ChaCha8Rng::seed_from_u64(seed));
        let id = ChainMap::identity(&a);
        prop_assert!(is_quasi_isomorphism(&a, &a, &id).unwrap());
        prop_assert!(cone(&a, &a, &id).unwrap().is_acyclic().unwrap());
    }

    #[test]
    fn q_is_a_functor_on_fin(
        (alpha, beta) in (0usize..=3, 0usize..=3, 0usize..=3)
            .prop_flat_map(|(n, m, l)| (fin_map(n, m), fin_map(m, l))),
        seed: u64,
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_complex(CoeffRing::Integers, 2, 2, &mut rng);
        let q = QObject::new(&a, 4);
        let x = q.random_element(alpha.source(), 4, &mut rng);
        let composite = alpha.then(&beta).unwrap();
        prop_assert_eq!(q.act(&beta, &q.act(&alpha, &x)), q.act(&composite, &x));
    }
}
