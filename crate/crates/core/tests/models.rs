use lascoux_core::lattice::{Flavor, Model};
use lascoux_core::operators::{lascoux, lascoux_atom};
use lascoux_core::skyline::{enumerate_skyline, skyline_sum};
use lascoux_core::{Partition, Permutation, Poly};
use proptest::prelude::*;

const N: usize = 3;

fn partition() -> impl Strategy<Value = Partition> {
    let bound = Partition::new(vec![3, 2, 1], N).unwrap();
    prop::sample::select(Partition::all_within(&bound))
}

fn perm() -> impl Strategy<Value = Permutation> {
    prop::sample::select(Permutation::all(N).collect::<Vec<_>>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn colored_models_match_operators(lambda in partition(), w in perm(), extra in 0usize..2) {
        let m = lambda.first() + N + extra;
        let atom: Poly = Model::new(Flavor::Atom(w.clone()), &lambda, Some(m)).unwrap().partition_function();
        prop_assert_eq!(atom, lascoux_atom(&w, &lambda));
        let full: Poly = lascoux(&w, &lambda);
        for f in [Flavor::Lascoux(w.clone()), Flavor::LascouxPrime(w.clone())] {
            let z: Poly = Model::new(f, &lambda, Some(m)).unwrap().partition_function();
            prop_assert_eq!(&z, &full);
        }
    }

    #[test]
    fn colored_states_refine_uncolored(lambda in partition()) {
        let uncolored = Model::new(Flavor::Uncolored, &lambda, None).unwrap();
        let total = Permutation::all(N)
            .map(|w| Model::new(Flavor::Atom(w), &lambda, None).unwrap().states().len())
            .sum::<usize>();
        prop_assert_eq!(total, uncolored.states().len());
    }

    #[test]
    fn skyline_enumeration_is_valid(lambda in partition(), w in perm()) {
        let shape = w.act_on(lambda.parts());
        for t in enumerate_skyline(&shape, N) {
            prop_assert!(t.is_valid());
            prop_assert_eq!(t.shape(), shape.clone());
        }
        let sum: Poly = skyline_sum(&w, &lambda);
        prop_assert_eq!(sum, lascoux_atom(&w.min_coset_rep(&lambda), &lambda));
    }
}

#[test]
fn lascoux_is_sum_of_lower_atoms() {
    let lambda = Partition::new(vec![2, 1, 0], N).unwrap();
    for w in Permutation::all(N) {
        let sum = Permutation::all(N)
            .filter(|u| u.bruhat_leq(&w))
            .fold(Poly::zero(N), |acc, u| &acc + &lascoux_atom(&u, &lambda));
        assert_eq!(sum, lascoux(&w, &lambda), "{}", w.word_string());
    }
}
