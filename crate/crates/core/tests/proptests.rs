//! Property tests: exact field laws for rationals, pruning invariants for
//! linear combinations, Lyndon structure on random words, graph
//! canonicalization under relabeling, and η positivity.

use hopfchain::keys::{GraphKey, Partition};
use hopfchain::lincomb::LinComb;
use hopfchain::rational::Rational;
use hopfchain::words::{
    descent_composition, is_lyndon, lyndon_factorization, shuffle_right_eigenfunction, Word,
};
use proptest::prelude::*;

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-2000i64..2000, 1i64..300).prop_map(|(n, d)| Rational::new(n, d))
}

fn arb_word(max_len: usize, alphabet: u32) -> impl Strategy<Value = Word> {
    prop::collection::vec(1u32..=alphabet, 1..=max_len).prop_map(Word::new)
}

proptest! {
    #[test]
    fn rational_field_laws(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.recip(), Rational::one());
        }
    }

    #[test]
    fn rational_serialization_round_trips(a in arb_rational()) {
        let s = a.to_string();
        prop_assert_eq!(s.parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn lincomb_never_stores_zero(
        pairs in prop::collection::vec((0u32..6, arb_rational()), 0..24)
    ) {
        let mut comb: LinComb<u32> = LinComb::zero();
        for (k, c) in &pairs {
            comb.add_term(*k, c.clone());
        }
        for (_, c) in comb.iter() {
            prop_assert!(!c.is_zero());
        }
        // Subtracting the whole combination from itself leaves nothing.
        let diff = comb.sub(&comb);
        prop_assert!(diff.is_zero());
    }

    #[test]
    fn lyndon_factorization_reassembles(w in arb_word(9, 4)) {
        let factors = lyndon_factorization(&w);
        let mut rebuilt = Word::empty();
        for f in &factors {
            prop_assert!(is_lyndon(f));
            rebuilt = rebuilt.concat(f);
        }
        prop_assert_eq!(rebuilt, w.clone());
        for pair in factors.windows(2) {
            prop_assert!(pair[0] >= pair[1]);
        }
    }

    #[test]
    fn descent_composition_sizes(w in arb_word(9, 5)) {
        let d = descent_composition(&w);
        prop_assert_eq!(d.size(), w.len());
        // Number of parts is one more than the number of descents.
        let descents = w.letters().windows(2).filter(|p| p[0] > p[1]).count();
        prop_assert_eq!(d.num_parts(), descents + 1);
    }

    #[test]
    fn hedgerow_eigenfunction_respects_degree(w1 in arb_word(5, 3), w2 in arb_word(5, 3)) {
        let value = shuffle_right_eigenfunction(&w1, &w2);
        if w1.sorted_letters() != w2.sorted_letters() {
            prop_assert!(value.is_zero());
        }
        // The eigenfunction of a word at itself: for Lyndon words it is 1.
        if is_lyndon(&w1) {
            prop_assert_eq!(shuffle_right_eigenfunction(&w1, &w1), Rational::one());
        }
    }

    #[test]
    fn graph_canonical_form_is_relabeling_invariant(
        n in 2usize..6,
        edge_bits in prop::collection::vec(any::<bool>(), 15),
        seed in any::<u64>(),
    ) {
        let mut pairs = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                pairs.push((a as u8, b as u8));
            }
        }
        let edges: Vec<(u8, u8)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| edge_bits[*i])
            .map(|(_, &e)| e)
            .collect();
        let canon = GraphKey::canonicalize(n, &edges).unwrap();
        // Relabel with a seeded permutation.
        let mut perm: Vec<u8> = (0..n as u8).collect();
        let mut state = seed;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        let relabeled: Vec<(u8, u8)> =
            edges.iter().map(|&(a, b)| (perm[a as usize], perm[b as usize])).collect();
        prop_assert_eq!(GraphKey::canonicalize(n, &relabeled).unwrap(), canon);
    }

    #[test]
    fn eta_positive_on_partitions(parts in prop::collection::vec(1u32..5, 1..4)) {
        let alg = hopfchain::instances::get_instance("sym_h").unwrap();
        let key = hopfchain::BasisKey::Partition(Partition::new(parts));
        let eta = hopfchain::chain::eta(alg.as_ref(), &key);
        prop_assert!(!eta.is_zero());
        prop_assert!(!eta.is_negative());
        prop_assert!(eta.is_integer());
    }
}
