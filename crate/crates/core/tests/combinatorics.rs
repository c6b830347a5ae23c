use klr_core::cartan::{apply_word, orbit_search, pair_h, CartanMatrix, Weight};
use klr_core::reproduce::fock_commutator_holds;
use klr_core::tableaux::*;
use proptest::prelude::*;
use std::collections::BTreeSet;

fn hook_length_count(shape: &[usize]) -> u128 {
    let n = size(shape) as u128;
    let mut num: u128 = (1..=n).product();
    let mut hooks = Vec::new();
    for (i, &len) in shape.iter().enumerate() {
        for j in 0..len {
            let below = shape.iter().skip(i + 1).filter(|&&l| l > j).count();
            hooks.push((len - j - 1 + below + 1) as u128);
        }
    }
    for h in hooks {
        num /= h;
    }
    num
}

fn partition() -> impl Strategy<Value = Vec<usize>> {
    (0usize..=10, any::<prop::sample::Index>()).prop_map(|(n, i)| {
        let ps = partitions(n);
        ps[i.index(ps.len())].clone()
    })
}

proptest! {
    #[test]
    fn hook_length_agrees(shape in partition()) {
        prop_assert_eq!(count_standard(&shape), hook_length_count(&shape));
    }

    #[test]
    fn enumeration_agrees_with_count(shape in partition().prop_filter("small", |s| size(s) <= 7)) {
        let ts = standard_tableaux(&shape);
        prop_assert_eq!(ts.len() as u128, count_standard(&shape));
        prop_assert!(ts.iter().all(is_standard));
    }

    #[test]
    fn residue_counts_partition_tableaux(shape in partition().prop_filter("small", |s| size(s) <= 7), ell in 1usize..4) {
        let words: BTreeSet<Vec<usize>> = standard_tableaux(&shape).iter().map(|t| residue_word(ell, t)).collect();
        let total: u128 = words.iter().map(|w| kostka_residue(ell, &shape, w)).sum();
        prop_assert_eq!(total, count_standard(&shape));
    }

    #[test]
    fn fock_commutators(shape in partition(), ell in 1usize..4, i in 0usize..4, j in 0usize..4) {
        prop_assume!(i <= ell && j <= ell);
        prop_assert!(fock_commutator_holds(ell, &shape, i, j));
    }

    #[test]
    fn cartan_invariants(ell in 1usize..9) {
        let c = CartanMatrix::affine_a(ell).unwrap();
        for i in 0..=ell {
            prop_assert_eq!(c.entry(i, i), 2);
            prop_assert_eq!(c.rows()[i].iter().sum::<i64>(), 0);
            for j in 0..=ell {
                prop_assert_eq!(c.entry(i, j), c.entry(j, i));
                if i != j {
                    let want = if ell == 1 { -2 } else if c.adjacent(i, j) { -1 } else { 0 };
                    prop_assert_eq!(c.entry(i, j), want);
                }
            }
        }
    }

    #[test]
    fn orbit_search_recovers_reflections(ell in 1usize..4, word in prop::collection::vec(0usize..4, 0..5), k in 0i64..3) {
        let word: Vec<usize> = word.into_iter().filter(|&i| i <= ell).collect();
        let c = CartanMatrix::affine_a(ell).unwrap();
        let target = apply_word(&c, &word, &Weight::lambda0(ell)).sub(&Weight::delta(ell).scale(k));
        let (found, k2) = orbit_search(ell, &target, 12).unwrap().expect("in the orbit");
        prop_assert_eq!(k2, k);
        prop_assert!(found.len() <= word.len());
        prop_assert_eq!(apply_word(&c, &found, &Weight::lambda0(ell)).sub(&Weight::delta(ell).scale(k)), target);
    }
}

#[test]
fn block_sums_match_factorial() {
    for ell in 1..=4 {
        for n in 0..=9 {
            assert_eq!(dim_full(ell, n).unwrap(), (1..=n as u128).product::<u128>());
        }
    }
}

#[test]
fn block_dimension_is_sum_over_words() {
    for (ell, beta) in [(1, vec![2, 2]), (1, vec![1, 2]), (2, vec![1, 1, 1]), (2, vec![2, 1, 1])] {
        let n: i64 = beta.iter().sum();
        let mut words: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut base: Vec<usize> = beta.iter().enumerate().flat_map(|(i, &b)| std::iter::repeat_n(i, b as usize)).collect();
        base.sort();
        fn perms(cur: &mut Vec<usize>, rest: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
            if rest.is_empty() {
                out.insert(cur.clone());
            }
            for k in 0..rest.len() {
                let x = rest.remove(k);
                cur.push(x);
                perms(cur, rest, out);
                cur.pop();
                rest.insert(k, x);
            }
        }
        perms(&mut Vec::new(), &mut base, &mut words);
        assert!(words.iter().all(|w| w.len() == n as usize));
        let words: Vec<Vec<usize>> = words.into_iter().collect();
        assert_eq!(dim_corner(ell, &words).unwrap(), dim_block(ell, &beta).unwrap());
    }
}

#[test]
fn two_delta_for_ell_one() {
    assert_eq!(dim_block(1, &[2, 2]).unwrap(), 24);
    assert_eq!(block_partitions(1, &[2, 2]).unwrap().len(), 5);
    assert!(dim_block(1, &[-1, 2]).is_err());
}

#[test]
fn delta_pairs_to_zero() {
    let c = CartanMatrix::affine_a(3).unwrap();
    let w = weight_of(3, &[2, 1, 1]);
    assert_eq!((0..=3).map(|i| pair_h(&c, i, &w)).sum::<i64>(), 1);
}
