use lascoux_core::{MPoly, Monomial, Permutation, Poly};
use num_bigint::BigInt;
use proptest::prelude::*;

const N: usize = 3;

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::collection::vec(0u32..3, N + 1), -6i64..=6), 0..5).prop_map(|terms| {
        MPoly::from_terms(N, terms.into_iter().map(|(e, c)| (Monomial::new(e), BigInt::from(c))))
    })
}

fn nonzero_poly() -> impl Strategy<Value = Poly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn perm() -> impl Strategy<Value = Permutation> {
    Just((1..=N).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Permutation::new(v).unwrap())
}

proptest! {
    #[test]
    fn addition_is_a_group(f in poly(), g in poly(), h in poly()) {
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert!((&f - &f).is_zero());
        prop_assert_eq!(&f + &MPoly::zero(N), f.clone());
        prop_assert_eq!(&f + &(-&g), &f - &g);
    }

    #[test]
    fn multiplication_is_commutative_and_distributive(f in poly(), g in poly(), h in poly()) {
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&f * &MPoly::one(N), f.clone());
    }

    #[test]
    fn products_divide_exactly(f in poly(), g in nonzero_poly()) {
        let fg = &f * &g;
        prop_assert_eq!(fg.exact_divide(&g).unwrap(), f);
    }

    #[test]
    fn adding_one_breaks_divisibility_by_a_variable(f in poly(), i in 1..=N) {
        let z = MPoly::z(N, i);
        let shifted = &(&f * &z) + &MPoly::one(N);
        prop_assert!(shifted.exact_divide(&z).is_err());
    }

    #[test]
    fn permuting_variables_composes(f in poly(), u in perm(), v in perm()) {
        let twice = f.permute_z(&u).unwrap().permute_z(&v).unwrap();
        prop_assert_eq!(twice, f.permute_z(&v.compose(&u)).unwrap());
        prop_assert_eq!(f.permute_z(&u).unwrap().permute_z(&u.inverse()).unwrap(), f.clone());
    }

    #[test]
    fn permuting_is_a_ring_map(f in poly(), g in poly(), w in perm()) {
        let fg = (&f * &g).permute_z(&w).unwrap();
        prop_assert_eq!(fg, &f.permute_z(&w).unwrap() * &g.permute_z(&w).unwrap());
    }

    #[test]
    fn text_round_trips(f in poly()) {
        let text = f.to_string();
        let back: Poly = MPoly::parse(&text, N).unwrap();
        prop_assert_eq!(&back, &f);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn inverse_undoes_compose(u in perm(), v in perm()) {
        prop_assert!(u.compose(&u.inverse()).is_identity());
        prop_assert_eq!(u.compose(&v).inverse(), v.inverse().compose(&u.inverse()));
        prop_assert_eq!(u.compose(&v).length() % 2, (u.length() + v.length()) % 2);
    }

    #[test]
    fn reduced_words_rebuild_the_permutation(w in perm()) {
        for word in w.all_reduced_words() {
            prop_assert_eq!(word.len(), w.length());
            prop_assert_eq!(Permutation::from_word(N, &word).unwrap(), w.clone());
        }
    }
}

#[test]
fn parse_rejects_garbage() {
    for bad in ["z4", "z1^", "2**z1", "q", "z1 +"] {
        assert!(MPoly::<BigInt>::parse(bad, N).is_err(), "{bad}");
    }
}
