use dualbraid::garside::{normalize, NormalForm};
use dualbraid::ncp::enumerate_simples;
use dualbraid::{parse_word, BandGenerator, BraidWord, NoncrossingPartition, Sign};
use proptest::prelude::*;

fn letter(n: usize) -> impl Strategy<Value = BandGenerator> {
    (2..=n)
        .prop_flat_map(|i| (Just(i), 1..i, any::<bool>()))
        .prop_map(|(i, j, pos)| {
            BandGenerator::new(i, j, if pos { Sign::Positive } else { Sign::Negative }).unwrap()
        })
}

fn word_on(n: usize, max: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec(letter(n), 0..=max).prop_map(move |l| BraidWord::new(n, l).unwrap())
}

fn word(max: usize) -> impl Strategy<Value = BraidWord> {
    (2usize..=9).prop_flat_map(move |n| word_on(n, max))
}

fn two_words(max: usize) -> impl Strategy<Value = (BraidWord, BraidWord)> {
    (2usize..=9).prop_flat_map(move |n| (word_on(n, max), word_on(n, max)))
}

fn simples_pair() -> impl Strategy<Value = (NoncrossingPartition, NoncrossingPartition)> {
    (1usize..=7).prop_flat_map(|n| {
        let all = enumerate_simples(n).unwrap();
        let len = all.len();
        (Just(all), 0..len, 0..len).prop_map(|(all, i, j)| (all[i].clone(), all[j].clone()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn print_parse_round_trip(w in word(20)) {
        let back = parse_word(&w.to_string(), w.n()).unwrap();
        prop_assert_eq!(back, w);
    }

    #[test]
    fn permutation_is_a_homomorphism((u, v) in two_words(15)) {
        let uv = u.concat(&v).unwrap();
        prop_assert_eq!(uv.permutation(), u.permutation().compose(&v.permutation()));
        prop_assert_eq!(uv.exponent_sum(), u.exponent_sum() + v.exponent_sum());
    }

    #[test]
    fn normal_form_invariants(w in word(25)) {
        let x = normalize(&w);
        prop_assert!(x.is_left_weighted());
        prop_assert!(x.validate().is_ok());
        prop_assert_eq!(x.permutation(), w.permutation());
        prop_assert_eq!(x.exponent_sum(), w.exponent_sum());
        prop_assert_eq!(normalize(&x.to_word()), x.clone());
        prop_assert!(x.multiply(&x.inverse()).is_identity());
        let text = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<NormalForm>(&text).unwrap(), x);
    }

    #[test]
    fn multiplication_is_associative((u, v) in two_words(12), k in -2i64..=2) {
        let (x, y) = (normalize(&u), normalize(&v));
        let z = NormalForm::delta_power(u.n(), k).multiply(&y);
        prop_assert_eq!(x.multiply(&y).multiply(&z), x.multiply(&y.multiply(&z)));
        prop_assert_eq!(x.multiply(&y), normalize(&u.concat(&v).unwrap()));
        prop_assert_eq!(x.multiply(&y).inverse(), y.inverse().multiply(&x.inverse()));
    }

    /// Inserting either side of a defining relation anywhere leaves the
    /// normal form unchanged.
    #[test]
    fn relations_preserve_normal_form(
        (u, v) in two_words(10),
        picks in prop::array::uniform4(0usize..100),
    ) {
        let n = u.n();
        prop_assume!(n >= 3);
        let mut idx = [picks[0] % n + 1, picks[1] % n + 1, picks[2] % n + 1];
        idx.sort_unstable();
        prop_assume!(idx[0] < idx[1] && idx[1] < idx[2]);
        let (r, s, t) = (idx[0], idx[1], idx[2]);
        let g = |i, j| BandGenerator::positive(i, j).unwrap();
        let sides = [
            vec![g(t, s), g(s, r)],
            vec![g(t, r), g(t, s)],
            vec![g(s, r), g(t, r)],
        ];
        let wrap = |mid: &[BandGenerator]| {
            let m = BraidWord::new(n, mid.to_vec()).unwrap();
            normalize(&u.concat(&m).unwrap().concat(&v).unwrap())
        };
        let base = wrap(&sides[0]);
        for side in &sides[1..] {
            prop_assert_eq!(wrap(side), base.clone());
        }
        // disjoint or nested generators commute
        let q = picks[3] % n + 1;
        if q < r {
            prop_assert_eq!(wrap(&[g(t, s), g(r, q)]), wrap(&[g(r, q), g(t, s)]));
            prop_assert_eq!(wrap(&[g(t, q), g(s, r)]), wrap(&[g(s, r), g(t, q)]));
        }
    }

    #[test]
    fn lattice_laws((a, b) in simples_pair()) {
        let m = a.meet(&b);
        let j = a.join(&b);
        prop_assert_eq!(m.clone(), b.meet(&a));
        prop_assert_eq!(j.clone(), b.join(&a));
        prop_assert!(m.refines(&a) && m.refines(&b));
        prop_assert!(a.refines(&j) && b.refines(&j));
        prop_assert_eq!(a.meet(&a.join(&b)), a.clone());
        prop_assert_eq!(a.join(&a.meet(&b)), a.clone());
        // join is the least common upper bound, meet the greatest lower bound
        for c in enumerate_simples(a.n()).unwrap() {
            if a.refines(&c) && b.refines(&c) {
                prop_assert!(j.refines(&c));
            }
            if c.refines(&a) && c.refines(&b) {
                prop_assert!(c.refines(&m));
            }
        }
    }

    #[test]
    fn complements_and_products((a, b) in simples_pair()) {
        let n = a.n() as i64;
        prop_assert_eq!(a.right_complement().right_complement(), a.tau(1));
        prop_assert_eq!(a.tau(n), a.clone());
        prop_assert_eq!(a.product(&a.right_complement()), Some(NoncrossingPartition::delta(a.n())));
        prop_assert_eq!(a.left_complement().product(&a), Some(NoncrossingPartition::delta(a.n())));
        match a.product(&b) {
            Some(ab) => {
                prop_assert!(b.refines(&a.right_complement()));
                prop_assert!(a.refines(&ab));
                prop_assert_eq!(a.left_quotient(&ab), Some(b.clone()));
                prop_assert_eq!(NormalForm::from_simple(&ab),
                    NormalForm::from_simple(&a).multiply(&NormalForm::from_simple(&b)));
            }
            None => prop_assert!(!b.refines(&a.right_complement())),
        }
        let text = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<NoncrossingPartition>(&text).unwrap(), a);
    }

    #[test]
    fn tau_is_conjugation_by_delta(w in word(15), k in -4i64..=4) {
        let x = normalize(&w);
        let d = NormalForm::delta_power(w.n(), k);
        prop_assert_eq!(x.tau(k), x.conjugate_by(&d));
    }
}
